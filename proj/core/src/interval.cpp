#include "hybridmat/interval.hpp"

#include <cctype>

namespace hybridmat {

long long HybridInterval::multiplicity(const ParamEnv& env, long long x) const {
    long long a = lower_.eval(env);
    long long b = upper_.eval(env);
    bool fwd = false, rev = false;
    switch (kind_) {
    case IntervalKind::ClosedOpen:
        fwd = a <= x && x < b;
        rev = b <= x && x < a;
        break;
    case IntervalKind::OpenClosed:
        fwd = a < x && x <= b;
        rev = b < x && x <= a;
        break;
    case IntervalKind::ClosedClosed:
        fwd = a <= x && x <= b;
        rev = b < x && x < a;
        break;
    case IntervalKind::OpenOpen:
        fwd = a < x && x < b;
        rev = b <= x && x <= a;
        break;
    }
    return (fwd ? 1 : 0) - (rev ? 1 : 0);
}

HybridInterval HybridInterval::negated() const {
    IntervalKind flipped = kind_;
    switch (kind_) {
    case IntervalKind::ClosedClosed: flipped = IntervalKind::OpenOpen; break;
    case IntervalKind::OpenOpen: flipped = IntervalKind::ClosedClosed; break;
    case IntervalKind::ClosedOpen:
    case IntervalKind::OpenClosed: break;
    }
    return {upper_, lower_, flipped};
}

std::string HybridInterval::str() const {
    const char* open_br = "";
    const char* close_br = "";
    switch (kind_) {
    case IntervalKind::ClosedClosed: open_br = "[["; close_br = "]]"; break;
    case IntervalKind::ClosedOpen: open_br = "[["; close_br = "))"; break;
    case IntervalKind::OpenClosed: open_br = "(("; close_br = "]]"; break;
    case IntervalKind::OpenOpen: open_br = "(("; close_br = "))"; break;
    }
    return std::string(open_br) + lower_.str() + "," + upper_.str() + close_br;
}

HybridInterval concat(const HybridInterval& lhs, const HybridInterval& rhs) {
    if (!(lhs.upper() == rhs.lower()))
        throw EndpointMismatch("cannot concatenate " + lhs.str() + " and " + rhs.str() +
                               ": junction endpoints differ");
    using K = IntervalKind;
    K left = lhs.kind(), right = rhs.kind();
    K result;
    if (left == K::ClosedOpen && right == K::ClosedOpen) result = K::ClosedOpen;
    else if (left == K::OpenClosed && right == K::OpenClosed) result = K::OpenClosed;
    else if (left == K::ClosedClosed && right == K::OpenOpen) result = K::ClosedOpen;
    else if (left == K::OpenOpen && right == K::ClosedOpen) result = K::OpenOpen;
    else
        throw std::invalid_argument("no concatenation rule for " + lhs.str() + " and " + rhs.str());
    return {lhs.lower(), rhs.upper(), result};
}

TupleInterval::TupleInterval(std::vector<SizeExpr> lowers, std::vector<SizeExpr> uppers,
                             IntervalKind kind)
    : TupleInterval(std::move(lowers), std::move(uppers), std::vector<IntervalKind>{}) {
    for (auto& axis : axes_) axis = HybridInterval(axis.lower(), axis.upper(), kind);
}

TupleInterval::TupleInterval(std::vector<SizeExpr> lowers, std::vector<SizeExpr> uppers,
                             std::vector<IntervalKind> kinds) {
    if (lowers.size() != uppers.size())
        throw ArityMismatch("tuple interval endpoints have different arities");
    if (!kinds.empty() && kinds.size() != lowers.size())
        throw ArityMismatch("tuple interval kinds do not match arity");
    axes_.reserve(lowers.size());
    for (std::size_t i = 0; i < lowers.size(); ++i) {
        IntervalKind k = kinds.empty() ? IntervalKind::ClosedClosed : kinds[i];
        axes_.emplace_back(std::move(lowers[i]), std::move(uppers[i]), k);
    }
}

long long TupleInterval::multiplicity(const ParamEnv& env, const point_type& p) const {
    if (p.size() != axes_.size())
        throw ArityMismatch("point arity does not match tuple interval arity");
    long long m = 1;
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        m *= axes_[i].multiplicity(env, p[i]);
        if (m == 0) return 0;
    }
    return m;
}

namespace {

struct IntervalToken {
    SizeExpr lower, upper;
    IntervalKind kind;
    std::size_t consumed;
};

IntervalToken scan_interval(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.size() - pos < 2) throw ParseError("interval too short: " + std::string(text));
    bool open_lo;
    if (text.compare(pos, 2, "[[") == 0) open_lo = false;
    else if (text.compare(pos, 2, "((") == 0) open_lo = true;
    else throw ParseError("interval must start with [[ or ((: " + std::string(text));
    pos += 2;

    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) throw ParseError("interval missing comma: " + std::string(text));
    SizeExpr lower = SizeExpr::parse(text.substr(pos, comma - pos));
    pos = comma + 1;

    std::size_t close = text.find_first_of(")]", pos);
    if (close == std::string_view::npos || close + 1 >= text.size())
        throw ParseError("interval missing closing bracket: " + std::string(text));
    bool open_hi;
    if (text.compare(close, 2, "))") == 0) open_hi = true;
    else if (text.compare(close, 2, "]]") == 0) open_hi = false;
    else throw ParseError("interval must end with )) or ]]: " + std::string(text));
    SizeExpr upper = SizeExpr::parse(text.substr(pos, close - pos));

    IntervalKind kind = open_lo ? (open_hi ? IntervalKind::OpenOpen : IntervalKind::OpenClosed)
                                : (open_hi ? IntervalKind::ClosedOpen : IntervalKind::ClosedClosed);
    return {std::move(lower), std::move(upper), kind, close + 2};
}

} // namespace

HybridInterval parse_interval(std::string_view text) {
    IntervalToken tok = scan_interval(text);
    std::size_t rest = tok.consumed;
    while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) ++rest;
    if (rest != text.size())
        throw ParseError("trailing characters after interval: " + std::string(text));
    return {std::move(tok.lower), std::move(tok.upper), tok.kind};
}

Rect parse_rect(std::string_view text) {
    IntervalToken row_tok = scan_interval(text);
    std::size_t pos = row_tok.consumed;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size() || text[pos] != 'x')
        throw ParseError("rectangle must separate intervals with x: " + std::string(text));
    HybridInterval rows(std::move(row_tok.lower), std::move(row_tok.upper), row_tok.kind);
    return {std::move(rows), parse_interval(text.substr(pos + 1))};
}

std::vector<long long> integer_points(long long lo, long long hi_inclusive) {
    std::vector<long long> pts;
    for (long long x = lo; x <= hi_inclusive; ++x) pts.push_back(x);
    return pts;
}

std::vector<Point2> grid_points(long long rows, long long cols) {
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(rows > 0 ? rows : 0) *
                static_cast<std::size_t>(cols > 0 ? cols : 0));
    for (long long i = 0; i < rows; ++i)
        for (long long j = 0; j < cols; ++j) pts.push_back({i, j});
    return pts;
}

} // namespace hybridmat
