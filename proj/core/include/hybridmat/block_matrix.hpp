#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hybridmat/dense_matrix.hpp"
#include "hybridmat/hybrid_fn.hpp"
#include "hybridmat/interval.hpp"
#include "hybridmat/size_expr.hpp"

namespace hybridmat {

// A block matrix with symbolic block sizes: partition fences along each axis
// (first fence 0, last fence the total) plus a partial payload per block.
// Intermediate fences need not be ordered relative to the other operand's;
// choosing one ordering anyway and letting multiplicities cancel is the whole
// construction.
class BlockSpec {
public:
    BlockSpec(std::string name, std::vector<SizeExpr> row_cuts, std::vector<SizeExpr> col_cuts);

    const std::string& name() const { return name_; }
    int row_blocks() const { return static_cast<int>(row_cuts_.size()) - 1; }
    int col_blocks() const { return static_cast<int>(col_cuts_.size()) - 1; }
    const std::vector<SizeExpr>& row_cuts() const { return row_cuts_; }
    const std::vector<SizeExpr>& col_cuts() const { return col_cuts_; }
    const SizeExpr& total_rows() const { return row_cuts_.back(); }
    const SizeExpr& total_cols() const { return col_cuts_.back(); }

    // Block indices are 1-based throughout.
    SizeExpr block_rows(int bi) const { return row_cuts_.at(bi) - row_cuts_.at(bi - 1); }
    SizeExpr block_cols(int bj) const { return col_cuts_.at(bj) - col_cuts_.at(bj - 1); }

    // Half-open rectangle of consecutive fences that the block occupies.
    Rect region(int bi, int bj) const;
    std::map<std::pair<int, int>, Rect> regions() const;

    void set_payload(int bi, int bj, PayloadFn payload);
    // Table payload: defined exactly on the table's extent.
    void set_entries(int bi, int bj, std::vector<std::vector<Rational>> entries);
    const PayloadFn& payload(int bi, int bj) const;

    ScalarSlot slot(int bi, int bj) const;

private:
    std::size_t flat(int bi, int bj) const;

    std::string name_;
    std::vector<SizeExpr> row_cuts_;
    std::vector<SizeExpr> col_cuts_;
    std::vector<PayloadFn> payloads_;
};

// Case-free sum of two conformable block matrices, as a hybrid function
// expression over the shared index rectangle.
class BlockSum {
public:
    BlockSum(HybridFunctionExpr expr, SizeExpr rows, SizeExpr cols)
        : expr_(std::move(expr)), rows_(std::move(rows)), cols_(std::move(cols)) {}

    const HybridFunctionExpr& expr() const { return expr_; }
    const SizeExpr& total_rows() const { return rows_; }
    const SizeExpr& total_cols() const { return cols_; }

    Rational entry(const ParamEnv& env, long long x, long long y) const {
        return reduce_plus(expr_, env, {x, y});
    }
    DenseMatrix evaluate(const ParamEnv& env) const;

private:
    HybridFunctionExpr expr_;
    SizeExpr rows_;
    SizeExpr cols_;
};

// Every block of each operand paired against the other operand's last block
// over its own region, plus the residual piece that tops the refinement up to
// the full index rectangle. (k*l - 1) + (i*j - 1) + 1 layers in total.
BlockSum build_sum(const BlockSpec& a, const BlockSpec& b);

// Case-free product of conformable block matrices. The shared axis is
// refined by one deterministic guess: the left operand's inner column cuts
// followed by the right operand's inner row cuts, each consecutive pair
// forming one hybrid interval. A wrong guess yields negative-multiplicity
// pieces whose factors cancel inside the x-reduction.
class BlockProduct {
public:
    int row_blocks() const { return static_cast<int>(row_cuts_.size()) - 1; }
    int col_blocks() const { return static_cast<int>(col_cuts_.size()) - 1; }
    const std::vector<SizeExpr>& row_cuts() const { return row_cuts_; }
    const std::vector<SizeExpr>& col_cuts() const { return col_cuts_; }
    const std::vector<SizeExpr>& shared_cuts() const { return shared_cuts_; }
    const SizeExpr& shared_total() const { return shared_cuts_.back(); }

    // Row-slice layers of the left operand for output block row bi, and
    // column-slice layers of the right operand for output block column bj.
    const HybridFunctionExpr& row_layers(int bi) const { return row_layers_.at(bi - 1); }
    const HybridFunctionExpr& col_layers(int bj) const { return col_layers_.at(bj - 1); }

    // Entry of output block (bi,bj) at global indices (x,y): restrict both
    // sides to the point, then sum the x-reductions over the bound shared
    // axis.
    Rational block_entry(int bi, int bj, const ParamEnv& env, long long x, long long y) const;

    DenseMatrix evaluate(const ParamEnv& env) const;

private:
    friend BlockProduct build_product(const BlockSpec& a, const BlockSpec& b);

    std::vector<SizeExpr> row_cuts_;
    std::vector<SizeExpr> col_cuts_;
    std::vector<SizeExpr> shared_cuts_;
    std::vector<HybridFunctionExpr> row_layers_;
    std::vector<HybridFunctionExpr> col_layers_;
};

BlockProduct build_product(const BlockSpec& a, const BlockSpec& b);

// Bound, validated fence values: starts at 0, non-decreasing, ends at the
// bound total. Used wherever a concrete tiling of the index range is needed.
std::vector<long long> bound_fences(const std::vector<SizeExpr>& cuts, const ParamEnv& env,
                                    const std::string& what);

} // namespace hybridmat
