#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hybridmat/hybrid_set.hpp"
#include "hybridmat/interval.hpp"
#include "test_support.hpp"

using namespace hybridmat;
using testsup::symbols;

namespace {

HybridSet<HybridInterval> co(long long a, long long b) {
    return HybridSet<HybridInterval>(HybridInterval::closed_open(a, b));
}

// Brute-force multiplicity over integer points: count membership in each
// half-open interval directly.
long long enumerated(const std::vector<std::pair<std::pair<long long, long long>, long long>>& ivs,
                     long long x) {
    long long m = 0;
    for (const auto& [bounds, coeff] : ivs) m += coeff * (bounds.first <= x && x < bounds.second);
    return m;
}

} // namespace

TEST_CASE("multiplicity of discrete hybrid sets") {
    auto h = symbols({{'a', 2}, {'b', -1}});
    CHECK(h.multiplicity('a') == 2);
    CHECK(h.multiplicity('b') == -1);
    CHECK(h.multiplicity('c') == 0);
    CHECK(HybridSet<testsup::SymbolAtom>{}.multiplicity('a') == 0);
}

TEST_CASE("multiplicity of interval combinations matches point enumeration") {
    // [1,4) minus [3,6): enumerate over 0..7, expected from the raw counts.
    auto h = ominus(co(1, 4), co(3, 6));
    for (long long x = 0; x <= 7; ++x)
        CHECK(h.multiplicity(x) == enumerated({{{1, 4}, 1}, {{3, 6}, -1}}, x));
    CHECK(h.multiplicity(3) == 0);
    CHECK(h.multiplicity(4) == -1);
    CHECK(h.multiplicity(2) == 1);
}

TEST_CASE("oplus") {
    CHECK(oplus(symbols({{'a', 1}}), symbols({{'a', -1}})).multiplicity('a') == 0);
    CHECK_FALSE(oplus(symbols({{'a', 1}}), symbols({{'a', -1}})).has_terms());

    auto ab = oplus(symbols({{'a', 1}}), symbols({{'b', 1}}));
    CHECK(ab.multiplicity('a') == 1);
    CHECK(ab.multiplicity('b') == 1);

    auto h = oplus(co(1, 3), co(2, 5));
    for (long long x = 0; x <= 6; ++x)
        CHECK(h.multiplicity(x) == enumerated({{{1, 3}, 1}, {{2, 5}, 1}}, x));
    CHECK(h.multiplicity(2) == 2);
}

TEST_CASE("ominus and its unary form") {
    CHECK_FALSE(ominus(symbols({{'a', 1}}), symbols({{'a', 1}})).has_terms());
    CHECK(ominus(symbols({{'a', 2}})).multiplicity('a') == -2);

    auto h = ominus(co(0, 4), co(2, 6));
    for (long long x = -1; x <= 7; ++x)
        CHECK(h.multiplicity(x) == enumerated({{{0, 4}, 1}, {{2, 6}, -1}}, x));
    CHECK(h.multiplicity(5) == -1);
}

TEST_CASE("otimes multiplies pointwise") {
    auto a = symbols({{'a', 2}});
    CHECK_FALSE(otimes(a, HybridSet<testsup::SymbolAtom>{}).has_terms());
    CHECK(otimes(symbols({{'a', 2}}), symbols({{'a', 3}})).multiplicity('a') == 6);

    auto lhs = ominus(co(0, 3), co(1, 2));
    auto rhs = co(1, 4);
    auto prod = otimes(lhs, rhs);
    for (long long x = -1; x <= 5; ++x)
        CHECK(prod.multiplicity(x) == lhs.multiplicity(x) * rhs.multiplicity(x));
    CHECK(prod.multiplicity(1) == 0);
}

TEST_CASE("scale") {
    auto a = symbols({{'a', 3}, {'b', -2}});
    CHECK_FALSE(scale(0, a).has_terms());
    for (char c : {'a', 'b'}) {
        CHECK(scale(-1, a).multiplicity(c) == ominus(a).multiplicity(c));
        CHECK(scale(3, symbols({{'b', -1}})).multiplicity(c) ==
              (c == 'b' ? -3 : 0));
    }
}

TEST_CASE("disjointness over an explicit domain") {
    auto domain = integer_points(-1, 7);
    CHECK(is_disjoint(co(0, 2), co(2, 4), std::span<const long long>(domain)));
    CHECK_FALSE(is_disjoint(co(0, 3), co(2, 4), std::span<const long long>(domain)));
    // second operand cancels to the empty hybrid set
    CHECK(is_disjoint(co(0, 3), ominus(co(2, 4), co(2, 4)), std::span<const long long>(domain)));
}

TEST_CASE("reducibility over an explicit domain") {
    auto domain = integer_points(-1, 8);
    CHECK(is_reducible(oplus(co(0, 2), co(3, 5)), std::span<const long long>(domain)));
    CHECK_FALSE(is_reducible(scale(2, co(0, 2)), std::span<const long long>(domain)));
    CHECK(is_reducible(HybridSet<testsup::SymbolAtom>{},
                       std::span<const char>(std::vector<char>{'a'})));

    // [0,5) minus [2,3): every enumerated multiplicity lands in {0,1}.
    auto h = ominus(co(0, 5), co(2, 3));
    bool expected = true;
    for (long long x : domain) {
        long long m = enumerated({{{0, 5}, 1}, {{2, 3}, -1}}, x);
        if (m != 0 && m != 1) expected = false;
    }
    CHECK(expected);
    CHECK(is_reducible(h, std::span<const long long>(domain)) == expected);
    CHECK(h.multiplicity(2) == 0);
}

TEST_CASE("generalized and strict partitions") {
    auto domain = integer_points(-1, 8);
    auto whole = co(0, 5);

    std::vector<HybridSet<HybridInterval>> clean = {co(0, 2), co(2, 5)};
    CHECK(is_generalized_partition(std::span<const HybridSet<HybridInterval>>(clean), whole,
                                   std::span<const long long>(domain)));
    CHECK(is_strict_partition(std::span<const HybridSet<HybridInterval>>(clean), whole,
                              std::span<const long long>(domain)));

    std::vector<HybridSet<HybridInterval>> overlapping = {co(0, 3), co(2, 5)};
    CHECK_FALSE(is_generalized_partition(std::span<const HybridSet<HybridInterval>>(overlapping),
                                         whole, std::span<const long long>(domain)));

    std::vector<HybridSet<HybridInterval>> cancelling = {co(0, 3), ominus(co(2, 3)), co(2, 5)};
    CHECK(is_generalized_partition(std::span<const HybridSet<HybridInterval>>(cancelling), whole,
                                   std::span<const long long>(domain)));
    CHECK_FALSE(is_strict_partition(std::span<const HybridSet<HybridInterval>>(cancelling), whole,
                                    std::span<const long long>(domain)));
}

TEST_CASE("group laws and distributivity at the multiplicity level") {
    testsup::TestRng rng(2024);
    auto random_set = [&] {
        HybridSet<HybridInterval> h;
        int terms = static_cast<int>(rng.between(0, 3));
        for (int t = 0; t < terms; ++t) {
            auto iv = HybridInterval::closed_open(rng.between(-2, 8), rng.between(-2, 8));
            h.add_term(iv, rng.between(-2, 2));
        }
        return h;
    };

    for (int iter = 0; iter < 300; ++iter) {
        auto a = random_set();
        auto b = random_set();
        auto c = random_set();
        long long x = rng.between(-3, 9);

        CHECK(oplus(a, b).multiplicity(x) == oplus(b, a).multiplicity(x));
        CHECK(oplus(oplus(a, b), c).multiplicity(x) == oplus(a, oplus(b, c)).multiplicity(x));
        CHECK(oplus(a, HybridSet<HybridInterval>{}).multiplicity(x) == a.multiplicity(x));
        CHECK(oplus(a, ominus(a)).multiplicity(x) == 0);

        long long k = rng.between(-3, 3);
        HybridSet<HybridInterval> repeated;
        for (long long i = 0; i < (k < 0 ? -k : k); ++i) repeated = oplus(repeated, a);
        if (k < 0) repeated = ominus(repeated);
        CHECK(scale(k, a).multiplicity(x) == repeated.multiplicity(x));

        CHECK(otimes(a, oplus(b, c)).multiplicity(x) ==
              oplus(otimes(a, b), otimes(a, c)).multiplicity(x));
    }
}

TEST_CASE("symbolic atoms bind through the environment") {
    auto q = SizeExpr::param("q");
    auto n = SizeExpr::param("n");
    HybridSet<HybridInterval> h(HybridInterval::closed_open(q, n));
    ParamEnv env{{"q", 2}, {"n", 5}};
    CHECK(h.multiplicity(env, 3) == 1);
    CHECK(h.multiplicity(env, 1) == 0);
    CHECK_THROWS_AS(h.multiplicity(ParamEnv{}, 3), UnboundParameter);
}
