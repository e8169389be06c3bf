#include "hybridmat/block_matrix.hpp"

namespace hybridmat {

BlockSpec::BlockSpec(std::string name, std::vector<SizeExpr> row_cuts,
                     std::vector<SizeExpr> col_cuts)
    : name_(std::move(name)), row_cuts_(std::move(row_cuts)), col_cuts_(std::move(col_cuts)) {
    if (row_cuts_.size() < 2 || col_cuts_.size() < 2)
        throw ValidationError("block spec " + name_ + " needs at least two fences per axis");
    if (!row_cuts_.front().is_zero() || !col_cuts_.front().is_zero())
        throw ValidationError("block spec " + name_ + " fences must start at 0");
    payloads_.resize(static_cast<std::size_t>(row_blocks()) *
                     static_cast<std::size_t>(col_blocks()));
}

std::size_t BlockSpec::flat(int bi, int bj) const {
    if (bi < 1 || bi > row_blocks() || bj < 1 || bj > col_blocks())
        throw std::out_of_range("block index (" + std::to_string(bi) + "," + std::to_string(bj) +
                                ") outside " + name_);
    return static_cast<std::size_t>(bi - 1) * static_cast<std::size_t>(col_blocks()) +
           static_cast<std::size_t>(bj - 1);
}

Rect BlockSpec::region(int bi, int bj) const {
    flat(bi, bj);
    return {HybridInterval::closed_open(row_cuts_[bi - 1], row_cuts_[bi]),
            HybridInterval::closed_open(col_cuts_[bj - 1], col_cuts_[bj])};
}

std::map<std::pair<int, int>, Rect> BlockSpec::regions() const {
    std::map<std::pair<int, int>, Rect> out;
    for (int bi = 1; bi <= row_blocks(); ++bi)
        for (int bj = 1; bj <= col_blocks(); ++bj) out.emplace(std::make_pair(bi, bj), region(bi, bj));
    return out;
}

void BlockSpec::set_payload(int bi, int bj, PayloadFn payload) {
    payloads_[flat(bi, bj)] = std::move(payload);
}

void BlockSpec::set_entries(int bi, int bj, std::vector<std::vector<Rational>> entries) {
    set_payload(bi, bj,
                [table = std::move(entries)](const ParamEnv&, long long i,
                                             long long j) -> std::optional<Rational> {
                    if (i < 0 || static_cast<std::size_t>(i) >= table.size()) return std::nullopt;
                    const auto& row = table[static_cast<std::size_t>(i)];
                    if (j < 0 || static_cast<std::size_t>(j) >= row.size()) return std::nullopt;
                    return row[static_cast<std::size_t>(j)];
                });
}

const PayloadFn& BlockSpec::payload(int bi, int bj) const { return payloads_[flat(bi, bj)]; }

ScalarSlot BlockSpec::slot(int bi, int bj) const {
    return {name_ + "[" + std::to_string(bi) + "," + std::to_string(bj) + "]",
            row_cuts_[bi - 1], col_cuts_[bj - 1], payloads_[flat(bi, bj)]};
}

DenseMatrix BlockSum::evaluate(const ParamEnv& env) const {
    long long rows = rows_.eval(env);
    long long cols = cols_.eval(env);
    if (rows < 0 || cols < 0)
        throw ValidationError("matrix totals evaluate to negative dimensions");
    DenseMatrix out(rows, cols);
    for (long long x = 0; x < rows; ++x)
        for (long long y = 0; y < cols; ++y) out.at(x, y) = reduce_plus(expr_, env, {x, y});
    return out;
}

BlockSum build_sum(const BlockSpec& a, const BlockSpec& b) {
    if (!(a.total_rows() == b.total_rows()) || !(a.total_cols() == b.total_cols()))
        throw ShapeMismatch("sum of " + a.name() + " (" + a.total_rows().str() + " x " +
                            a.total_cols().str() + ") and " + b.name() + " (" +
                            b.total_rows().str() + " x " + b.total_cols().str() + ")");

    const int ak = a.row_blocks(), al = a.col_blocks();
    const int bk = b.row_blocks(), bl = b.col_blocks();
    ScalarSlot a_last = a.slot(ak, al);
    ScalarSlot b_last = b.slot(bk, bl);

    HybridFunctionExpr expr;
    RegionSet universe(Rect(HybridInterval::closed_open(SizeExpr(0), a.total_rows()),
                            HybridInterval::closed_open(SizeExpr(0), a.total_cols())));
    RegionSet residual = universe;

    for (int bi = 1; bi <= ak; ++bi) {
        for (int bj = 1; bj <= al; ++bj) {
            if (bi == ak && bj == al) continue;
            RegionSet region(a.region(bi, bj));
            expr.add_layer(BlockTerm({a.slot(bi, bj), b_last}), region);
            residual = ominus(residual, region);
        }
    }
    for (int bi = 1; bi <= bk; ++bi) {
        for (int bj = 1; bj <= bl; ++bj) {
            if (bi == bk && bj == bl) continue;
            RegionSet region(b.region(bi, bj));
            expr.add_layer(BlockTerm({a_last, b.slot(bi, bj)}), region);
            residual = ominus(residual, region);
        }
    }
    expr.add_layer(BlockTerm({a_last, b_last}), residual);

    return {std::move(expr), a.total_rows(), a.total_cols()};
}

BlockProduct build_product(const BlockSpec& a, const BlockSpec& b) {
    if (!(a.total_cols() == b.total_rows()))
        throw ShapeMismatch("product of " + a.name() + " (cols " + a.total_cols().str() +
                            ") and " + b.name() + " (rows " + b.total_rows().str() + ")");

    BlockProduct out;
    out.row_cuts_ = a.row_cuts();
    out.col_cuts_ = b.col_cuts();

    // Guessed refinement of the shared axis: a's inner cuts, then b's, in
    // declared order.
    const int ka = a.col_blocks();
    const int kb = b.row_blocks();
    out.shared_cuts_.push_back(SizeExpr(0));
    for (int t = 1; t < ka; ++t) out.shared_cuts_.push_back(a.col_cuts()[t]);
    for (int t = 1; t < kb; ++t) out.shared_cuts_.push_back(b.row_cuts()[t]);
    out.shared_cuts_.push_back(a.total_cols());

    const int pieces = ka + kb - 1;
    auto piece = [&](int t) {
        return HybridInterval::closed_open(out.shared_cuts_[t - 1], out.shared_cuts_[t]);
    };
    // Piece t sits inside a's column block min(t,ka) and b's row block
    // max(1, t-ka+1) under the guessed order.
    auto a_block = [&](int t) { return t < ka ? t : ka; };
    auto b_block = [&](int t) { return t <= ka ? 1 : t - ka + 1; };

    for (int bi = 1; bi <= a.row_blocks(); ++bi) {
        HybridInterval rows = HybridInterval::closed_open(a.row_cuts()[bi - 1], a.row_cuts()[bi]);
        HybridFunctionExpr layers;
        for (int t = 1; t <= pieces; ++t)
            layers.add_layer(BlockTerm(a.slot(bi, a_block(t))), RegionSet(Rect(rows, piece(t))));
        out.row_layers_.push_back(std::move(layers));
    }
    for (int bj = 1; bj <= b.col_blocks(); ++bj) {
        HybridInterval cols = HybridInterval::closed_open(b.col_cuts()[bj - 1], b.col_cuts()[bj]);
        HybridFunctionExpr layers;
        for (int t = 1; t <= pieces; ++t)
            layers.add_layer(BlockTerm(b.slot(b_block(t), bj)), RegionSet(Rect(piece(t), cols)));
        out.col_layers_.push_back(std::move(layers));
    }
    return out;
}

Rational BlockProduct::block_entry(int bi, int bj, const ParamEnv& env, long long x,
                                   long long y) const {
    CurriedFunctionExpr lhs = restrict_row(row_layers(bi), env, x);
    CurriedFunctionExpr rhs = restrict_col(col_layers(bj), env, y);
    long long shared = shared_total().eval(env);
    Rational sum;
    for (long long m = 0; m < shared; ++m) {
        std::vector<TimesFactor> factors = lhs.factors_at(m);
        std::vector<TimesFactor> more = rhs.factors_at(m);
        factors.insert(factors.end(), std::make_move_iterator(more.begin()),
                       std::make_move_iterator(more.end()));
        sum += reduce_times(factors);
    }
    return sum;
}

DenseMatrix BlockProduct::evaluate(const ParamEnv& env) const {
    std::vector<long long> rows = bound_fences(row_cuts_, env, "output rows");
    std::vector<long long> cols = bound_fences(col_cuts_, env, "output columns");
    long long shared = shared_total().eval(env);

    DenseMatrix out(rows.back(), cols.back());
    for (int bj = 1; bj <= col_blocks(); ++bj) {
        // Column slices are reused across every row of the block column.
        std::vector<CurriedFunctionExpr> col_slices;
        col_slices.reserve(static_cast<std::size_t>(cols[bj] - cols[bj - 1]));
        for (long long y = cols[bj - 1]; y < cols[bj]; ++y)
            col_slices.push_back(restrict_col(col_layers(bj), env, y));

        for (int bi = 1; bi <= row_blocks(); ++bi) {
            for (long long x = rows[bi - 1]; x < rows[bi]; ++x) {
                CurriedFunctionExpr row_slice = restrict_row(row_layers(bi), env, x);
                for (long long y = cols[bj - 1]; y < cols[bj]; ++y) {
                    const CurriedFunctionExpr& col_slice =
                        col_slices[static_cast<std::size_t>(y - cols[bj - 1])];
                    Rational sum;
                    for (long long m = 0; m < shared; ++m) {
                        std::vector<TimesFactor> factors = row_slice.factors_at(m);
                        std::vector<TimesFactor> more = col_slice.factors_at(m);
                        factors.insert(factors.end(), std::make_move_iterator(more.begin()),
                                       std::make_move_iterator(more.end()));
                        sum += reduce_times(factors);
                    }
                    out.at(x, y) = sum;
                }
            }
        }
    }
    return out;
}

std::vector<long long> bound_fences(const std::vector<SizeExpr>& cuts, const ParamEnv& env,
                                    const std::string& what) {
    std::vector<long long> vals;
    vals.reserve(cuts.size());
    for (const auto& cut : cuts) vals.push_back(cut.eval(env));
    for (std::size_t i = 1; i < vals.size(); ++i) {
        if (vals[i] < vals[i - 1])
            throw ValidationError(what + ": fences are not monotone under this binding (" +
                                  std::to_string(vals[i - 1]) + " then " +
                                  std::to_string(vals[i]) + ")");
    }
    if (vals.front() != 0) throw ValidationError(what + ": fences must start at 0");
    return vals;
}

} // namespace hybridmat
