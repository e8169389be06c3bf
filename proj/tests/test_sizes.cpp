#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hybridmat/size_expr.hpp"
#include "test_support.hpp"

using namespace hybridmat;

TEST_CASE("addition cancels and keeps canonical form") {
    SizeExpr q = SizeExpr::param("q");
    SizeExpr n = SizeExpr::param("n");

    CHECK(q + (n - q) == n);
    CHECK(SizeExpr(0) + SizeExpr::param("m") == SizeExpr::param("m"));
    CHECK((q + (n - q)).coefficients().size() == 1);

    // (q + 1) + (q - 1) agrees with 2q under every binding of q.
    SizeExpr sum = (q + SizeExpr(1)) + (q - SizeExpr(1));
    CHECK(sum == q * 2);
    for (long long v = 0; v <= 5; ++v) {
        ParamEnv env{{"q", v}};
        CHECK(sum.eval(env) == 2 * v);
    }
}

TEST_CASE("evaluation") {
    SizeExpr e = SizeExpr::param("n") - SizeExpr::param("q");
    CHECK(e.eval(ParamEnv{{"n", 5}, {"q", 4}}) == 1);
    CHECK(SizeExpr(0).eval(ParamEnv{{"x", 99}}) == 0);
    CHECK((SizeExpr::param("q", 2) + SizeExpr(3)).eval(ParamEnv{{"q", 4}}) == 11);
}

TEST_CASE("unbound parameter lookup is an error naming the parameter") {
    SizeExpr e = SizeExpr::param("n") + SizeExpr::param("zz");
    try {
        e.eval(ParamEnv{{"n", 1}});
        FAIL("expected UnboundParameter");
    } catch (const UnboundParameter& err) {
        CHECK(err.name() == "zz");
    }
}

TEST_CASE("structural equality is semantic equality for affine forms") {
    SizeExpr a = SizeExpr::param("a");
    SizeExpr b = SizeExpr::param("b");
    CHECK(a + b == b + a);
    CHECK(a - a == SizeExpr(0));
    CHECK((a + b) - b == a);
    CHECK_FALSE(a == b);
    CHECK((-(a - b)) == b - a);
}

TEST_CASE("random add/eval homomorphism") {
    testsup::TestRng rng(101);
    const std::vector<std::string> params = {"n", "m", "q", "r"};
    for (int iter = 0; iter < 200; ++iter) {
        auto random_expr = [&] {
            SizeExpr e(rng.between(-5, 5));
            for (const auto& p : params)
                if (rng.below(2)) e = e + SizeExpr::param(p, rng.between(-3, 3));
            return e;
        };
        SizeExpr a = random_expr();
        SizeExpr b = random_expr();
        ParamEnv env;
        for (const auto& p : params) env.bind(p, rng.between(-10, 10));
        CHECK((a + b).eval(env) == a.eval(env) + b.eval(env));
        CHECK((a + (-a)).is_zero());
    }
}

TEST_CASE("text syntax") {
    CHECK(SizeExpr::parse("2*q + n - 1") ==
          SizeExpr::param("q", 2) + SizeExpr::param("n") - SizeExpr(1));
    CHECK(SizeExpr::parse("0") == SizeExpr(0));
    CHECK(SizeExpr::parse("n") == SizeExpr::param("n"));
    CHECK(SizeExpr::parse(" -q + q ") == SizeExpr(0));
    CHECK(SizeExpr::parse("q*3") == SizeExpr::param("q", 3));
    CHECK(SizeExpr::parse("-2*k") == SizeExpr::param("k", -2));

    CHECK_THROWS_AS(SizeExpr::parse("q*r"), ParseError);
    CHECK_THROWS_AS(SizeExpr::parse("2*3"), ParseError);
    CHECK_THROWS_AS(SizeExpr::parse("q +"), ParseError);
    CHECK_THROWS_AS(SizeExpr::parse("q q"), ParseError);
    CHECK_THROWS_AS(SizeExpr::parse(""), ParseError);

    // round trip through str()
    testsup::TestRng rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        SizeExpr e(rng.between(-9, 9));
        for (const auto* p : {"n", "q", "r2"})
            if (rng.below(2)) e = e + SizeExpr::param(p, rng.between(-4, 4));
        CHECK(SizeExpr::parse(e.str()) == e);
    }
}
