#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hybridmat/hybrid_set.hpp"
#include "hybridmat/interval.hpp"
#include "hybridmat/rational.hpp"
#include "hybridmat/size_expr.hpp"

namespace hybridmat {

// Partial scalar function on local block indices. Returning nullopt reports
// "undefined here" without side effects; the reductions below only ever call
// a payload once cancellation has left it with a nonzero net multiplicity.
using PayloadFn = std::function<std::optional<Rational>(const ParamEnv&, long long, long long)>;

// One named block function with its global offset. Evaluation at a global
// point (i,j) means payload(i - row_offset, j - col_offset).
struct ScalarSlot {
    std::string symbol;
    SizeExpr row_offset;
    SizeExpr col_offset;
    PayloadFn payload;

    // Structural identity used for cancellation: symbol plus offsets.
    // Payloads are not part of the identity; they may be partial and
    // unevaluable exactly at the points being cancelled.
    std::string identity() const { return symbol + "@(" + row_offset.str() + ";" + col_offset.str() + ")"; }

    std::optional<Rational> value_at(const ParamEnv& env, Point2 p) const {
        if (!payload) return std::nullopt;
        return payload(env, p.row - row_offset.eval(env), p.col - col_offset.eval(env));
    }
};

// An unevaluated term: a single slot, or a composite standing for the scalar
// sum of several slots (the shape block addition produces). Two terms cancel
// against each other exactly when their identities are structurally equal.
class BlockTerm {
public:
    explicit BlockTerm(ScalarSlot slot) : slots_{std::move(slot)} { rebuild_identity(); }
    explicit BlockTerm(std::vector<ScalarSlot> slots) : slots_(std::move(slots)) { rebuild_identity(); }

    const std::string& identity() const { return identity_; }
    const std::vector<ScalarSlot>& slots() const { return slots_; }

    std::optional<Rational> value_at(const ParamEnv& env, Point2 p) const {
        Rational sum;
        for (const auto& slot : slots_) {
            auto v = slot.value_at(env, p);
            if (!v) return std::nullopt;
            sum += *v;
        }
        return sum;
    }

private:
    void rebuild_identity() {
        identity_.clear();
        for (const auto& slot : slots_) {
            if (!identity_.empty()) identity_ += " + ";
            identity_ += slot.identity();
        }
    }

    std::vector<ScalarSlot> slots_;
    std::string identity_;
};

using RegionSet = HybridSet<Rect>;

// f^H: an unevaluated term attached to every point of a region hybrid set.
struct TermLayer {
    BlockTerm term;
    RegionSet region;
};

// A formal sum of term layers. Construction never evaluates payloads, so
// terms may be attached to regions where they are undefined, as long as the
// multiplicities cancel wherever they are.
class HybridFunctionExpr {
public:
    HybridFunctionExpr() = default;

    void add_layer(BlockTerm term, RegionSet region) {
        layers_.push_back({std::move(term), std::move(region)});
    }

    const std::vector<TermLayer>& layers() const { return layers_; }
    bool empty() const { return layers_.empty(); }

private:
    std::vector<TermLayer> layers_;
};

// Pointwise sum; layers with structurally identical terms are merged by
// combining their regions.
HybridFunctionExpr fn_oplus(const HybridFunctionExpr& f, const HybridFunctionExpr& g);

// Net region multiplicity per distinct term at one point. Terms whose net is
// zero are removed here, without ever being evaluated.
std::vector<std::pair<BlockTerm, long long>> net_terms_at(const HybridFunctionExpr& f,
                                                          const ParamEnv& env, Point2 x);

// Additive reduction at a point: distributes composite terms into their
// slots, cancels slot multiplicities, then sums net * value over the
// survivors. Throws UndefinedTermForced if a surviving slot has no value.
Rational reduce_plus(const HybridFunctionExpr& f, const ParamEnv& env, Point2 x);

// One multiplicand of a x-reduction: an unevaluated scalar bound to a point,
// with the integer exponent its region multiplicity contributed.
struct TimesFactor {
    std::string identity;
    std::function<std::optional<Rational>()> value;
    long long exponent;
};

// Multiplicative reduction over one group of factors (one shared-axis value):
// identical factors first cancel by summing exponents, then the survivors are
// evaluated and multiplied as value^exponent. The empty product is 1.
// Negative exponents invert in the field; a surviving zero under a negative
// exponent is DivisionByZero (paired occurrences must have cancelled first).
Rational reduce_times(std::span<const TimesFactor> factors);

// A matrix expression restricted along one axis: each layer keeps an
// unevaluated one-argument term over the free axis together with the sliced
// region. The environment is fixed at restriction time.
class CurriedFunctionExpr {
public:
    struct Layer {
        std::string identity;
        std::function<std::optional<Rational>(long long)> value;
        HybridSet<HybridInterval> region;
    };

    CurriedFunctionExpr(ParamEnv env, std::vector<Layer> layers)
        : env_(std::move(env)), layers_(std::move(layers)) {}

    const std::vector<Layer>& layers() const { return layers_; }
    const ParamEnv& env() const { return env_; }

    // Factors this expression contributes at one free-axis point; layers
    // whose sliced region has multiplicity zero there contribute nothing.
    std::vector<TimesFactor> factors_at(long long m) const;

private:
    ParamEnv env_;
    std::vector<Layer> layers_;
};

// Currying: fix the row (column) index and slice every layer's region at it,
// leaving hybrid sets over the column (row) axis. No term is evaluated.
CurriedFunctionExpr restrict_row(const HybridFunctionExpr& f, const ParamEnv& env, long long row);
CurriedFunctionExpr restrict_col(const HybridFunctionExpr& f, const ParamEnv& env, long long col);

} // namespace hybridmat
