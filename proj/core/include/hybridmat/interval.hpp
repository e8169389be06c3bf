#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hybridmat/hybrid_set.hpp"
#include "hybridmat/size_expr.hpp"

namespace hybridmat {

enum class IntervalKind { ClosedClosed, ClosedOpen, OpenClosed, OpenOpen };

// An interval between two (possibly symbolic) endpoints, defined as the
// pointwise difference of a forward and a reversed traditional interval:
//
//   [[a,b))  =  [a,b)  minus  [b,a)        ((a,b]]  =  (a,b]  minus  (b,a]
//   [[a,b]]  =  [a,b]  minus  (b,a)        ((a,b))  =  (a,b)  minus  [b,a]
//
// so a backwards interval has points of multiplicity -1 instead of being
// empty. For distinct bound endpoints exactly one of the two traditional
// intervals is empty, so all nonzero multiplicities share one sign.
//
// The point domain is fixed to the integers here (matrix indices); the
// definitions only need a total order.
class HybridInterval {
public:
    using point_type = long long;

    HybridInterval(SizeExpr lower, SizeExpr upper, IntervalKind kind = IntervalKind::ClosedOpen)
        : lower_(std::move(lower)), upper_(std::move(upper)), kind_(kind) {}

    static HybridInterval closed(SizeExpr a, SizeExpr b) {
        return {std::move(a), std::move(b), IntervalKind::ClosedClosed};
    }
    static HybridInterval closed_open(SizeExpr a, SizeExpr b) {
        return {std::move(a), std::move(b), IntervalKind::ClosedOpen};
    }
    static HybridInterval open_closed(SizeExpr a, SizeExpr b) {
        return {std::move(a), std::move(b), IntervalKind::OpenClosed};
    }
    static HybridInterval open(SizeExpr a, SizeExpr b) {
        return {std::move(a), std::move(b), IntervalKind::OpenOpen};
    }

    const SizeExpr& lower() const { return lower_; }
    const SizeExpr& upper() const { return upper_; }
    IntervalKind kind() const { return kind_; }

    long long multiplicity(const ParamEnv& env, long long x) const;
    long long multiplicity(long long x) const { return multiplicity(ParamEnv{}, x); }

    // Endpoint-swapped, flavor-flipped interval whose multiplicity is the
    // pointwise negation of this one.
    HybridInterval negated() const;

    bool operator==(const HybridInterval&) const = default;

    std::string str() const;

private:
    SizeExpr lower_;
    SizeExpr upper_;
    IntervalKind kind_;
};

// Concatenation at a shared junction endpoint, valid for any relative order
// of the three endpoints:
//
//   [[a,b)) (+) [[b,c))  =  [[a,c))        ((a,b]] (+) ((b,c]]  =  ((a,c]]
//   [[a,b]] (+) ((b,c))  =  [[a,c))        ((a,b)) (+) [[b,c))  =  ((a,c))
//
// The junction is matched structurally (canonical affine form), not after
// binding. Throws EndpointMismatch when lhs.upper() != rhs.lower().
HybridInterval concat(const HybridInterval& lhs, const HybridInterval& rhs);

struct Point2 {
    long long row = 0;
    long long col = 0;
    bool operator==(const Point2&) const = default;
};

// Cartesian product of a row and a column interval; multiplicity at (i,j) is
// the product of the axis multiplicities, so two reversed axes give +1.
class Rect {
public:
    using point_type = Point2;

    Rect(HybridInterval rows, HybridInterval cols)
        : rows_(std::move(rows)), cols_(std::move(cols)) {}

    const HybridInterval& rows() const { return rows_; }
    const HybridInterval& cols() const { return cols_; }

    long long multiplicity(const ParamEnv& env, const Point2& p) const {
        long long r = rows_.multiplicity(env, p.row);
        return r == 0 ? 0 : r * cols_.multiplicity(env, p.col);
    }
    long long multiplicity(const Point2& p) const { return multiplicity(ParamEnv{}, p); }

    bool operator==(const Rect&) const = default;

    std::string str() const { return rows_.str() + " x " + cols_.str(); }

private:
    HybridInterval rows_;
    HybridInterval cols_;
};

// Iterated product of per-axis intervals between two endpoint tuples. The
// overall sign at a point is negative exactly when an odd number of axes are
// reversed; an axis with equal endpoints (closed) is a single signed point.
class TupleInterval {
public:
    using point_type = std::vector<long long>;

    TupleInterval(std::vector<SizeExpr> lowers, std::vector<SizeExpr> uppers,
                  IntervalKind kind = IntervalKind::ClosedClosed);
    TupleInterval(std::vector<SizeExpr> lowers, std::vector<SizeExpr> uppers,
                  std::vector<IntervalKind> kinds);

    std::size_t arity() const { return axes_.size(); }
    const HybridInterval& axis(std::size_t i) const { return axes_.at(i); }

    long long multiplicity(const ParamEnv& env, const point_type& p) const;

    bool operator==(const TupleInterval&) const = default;

private:
    std::vector<HybridInterval> axes_;
};

// Text forms used by CLI inputs: "[[0,q))", "((k,n]]", and for rectangles
// "[[q,n)) x [[0,r))".
HybridInterval parse_interval(std::string_view text);
Rect parse_rect(std::string_view text);

// Domain enumerations for the predicates in hybrid_set.hpp.
std::vector<long long> integer_points(long long lo, long long hi_inclusive);
std::vector<Point2> grid_points(long long rows, long long cols);

} // namespace hybridmat
