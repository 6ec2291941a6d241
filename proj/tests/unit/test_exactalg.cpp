#include <doctest.h>

#include <random>

#include "degenlift/errors.hpp"
#include "degenlift/linalg.hpp"
#include "degenlift/poly.hpp"
#include "degenlift/ratfunc.hpp"
#include "degenlift/series.hpp"
#include "random_gen.hpp"

using namespace degenlift;

namespace {

Poly P(const char* s) { return Poly::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }

}  // namespace

TEST_CASE("rat normal form and parsing")
{
    CHECK(Rat(4, -6).str() == "-2/3");
    CHECK(Rat::parse(" 10/4 ") == Rat(5, 2));
    CHECK(Rat::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rat::parse("x"), ParseError);
    CHECK(pow(Rat(2, 3), -2) == Rat(9, 4));
}

TEST_CASE("poly arithmetic examples")
{
    const Poly x = Poly::var("x");
    CHECK((x + (-x)).is_zero());
    CHECK((x + 1) * (x - 1) == x.pow(2) - 1);
    CHECK((x - 1) * P("x^3 + x^2 + (1+a)*x + 1") == P("x^4 + a*x^2 - a*x - 1"));
    CHECK_THROWS_AS(x.pow(-1), NegativeExponent);
    CHECK(P("a^2 + a*b + 4*a + 6*b - 4").str() == "a^2 + a*b + 4*a + 6*b - 4");
    CHECK(P("x/2").str() == "1/2*x");
    CHECK(P("-x^2*y + 3").str() == "-x^2*y + 3");
}

TEST_CASE("poly parse errors carry a column")
{
    CHECK_THROWS_AS(P("x +* y"), ParseError);
    CHECK_THROWS_AS(P("x / y"), ParseError);
    CHECK_THROWS_AS(P("x^-1"), ParseError);
    try {
        P("x + )");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 5);
    }
}

TEST_CASE("partial derivatives")
{
    CHECK(P("x^2*y").partial("x") == P("2*x*y"));
    CHECK(Poly::constant(Rat(7), {"x"}).partial("x").is_zero());
    CHECK_THROWS_AS(P("y").partial("x"), UnknownVariable);
    const Poly f = P("x^4 - z^4 - 2*z - 1 + a*x^2 + b*x*z - a*x + y + y^4");
    CHECK(f.partial("y").eval({{"x", Rat(1)}, {"y", Rat(0)}, {"z", Rat(0)}}) == Poly(1));
}

TEST_CASE("substitution")
{
    CHECK(P("x^2").subs("x", P("s+1")) == P("s^2 + 2*s + 1"));
    CHECK(P("x*y + y").subs({{"x", P("y")}, {"y", P("2")}}) == P("2*y + 2"));
}

TEST_CASE("gcd and exact division")
{
    CHECK(gcd(P("x^2 - 1"), P("x^2 + 2*x + 1")) == P("x + 1"));
    CHECK(gcd(P("2*x*y"), P("4*x^2")) == P("x"));
    CHECK(gcd(P("0"), P("-3*x - 6")) == P("x + 2"));
    CHECK(gcd(P("a*x + a*b"), P("a^2*y + a*x*y*0 + a*b*y")) == P("a"));
    CHECK(divide_exact(P("x^2 - y^2"), P("x - y")) == P("x + y"));
    CHECK_THROWS_AS(divide_exact(P("x^2 + 1"), P("x - 1")), InexactDivision);
    CHECK(P("6*x + 4").primitive() == P("3*x + 2"));
    CHECK(P("-x/2 - 1/3").primitive() == P("3*x + 2"));
}

TEST_CASE("gcd oracle: common factor is recovered")
{
    std::mt19937_64 rng(11);
    const std::vector<std::string> vars{"a", "b", "x"};
    for (int i = 0; i < 60; ++i) {
        const Poly c = testgen::random_poly(rng, vars, 2, 3);
        const Poly p = testgen::random_poly(rng, vars, 2, 3);
        const Poly q = testgen::random_poly(rng, vars, 2, 3);
        if (c.is_zero() || p.is_zero() || q.is_zero()) {
            continue;
        }
        const Poly g = gcd(c * p, c * q);
        CHECK(divides(c, g));
        CHECK(divides(g, c * p));
        CHECK(divides(g, c * q));
    }
}

TEST_CASE("ratfunc normalization examples")
{
    CHECK(RatFunc(P("2*x"), P("4")).str() == "x/2");
    CHECK(RatFunc(P("x^2 - 1"), P("x - 1")) == RatFunc(P("x + 1")));
    CHECK_THROWS_AS(RatFunc(P("x"), P("0")), ZeroDenominator);
    const RatFunc r(P("(a+b+2)*2 + (a+b-2)*(4+a)"), P("2*(4+a)"));
    CHECK(r.num() == P("a^2 + a*b + 4*a + 6*b - 4"));
    CHECK(r.den() == P("2*a + 8"));
    CHECK(R("(a+b+2)/(4+a) + (a+b-2)/2") == r);
    CHECK(RatFunc(P("-x"), P("-2*y")).str() == "x/(2*y)");
    CHECK(RatFunc(P("x"), P("-y - 1")).str() == "-x/(y + 1)");
}

TEST_CASE("ratfunc normal form is idempotent and equality-sound")
{
    std::mt19937_64 rng(7);
    const std::vector<std::string> vars{"a", "b"};
    for (int i = 0; i < 80; ++i) {
        const Poly n = testgen::random_poly(rng, vars, 2, 3);
        const Poly d = testgen::random_poly(rng, vars, 2, 3);
        const Poly k = testgen::random_poly(rng, vars, 1, 2);
        if (d.is_zero() || k.is_zero()) {
            continue;
        }
        const RatFunc r(n, d);
        CHECK(RatFunc(r.num(), r.den()) == r);
        const RatFunc scaled(n * k, d * k);
        CHECK(scaled == r);
        // Cross-multiplication oracle against an independent pair.
        const Poly n2 = testgen::random_poly(rng, vars, 2, 3);
        const RatFunc other(n2, d);
        CHECK((other == r) == (n2 * d == n * d));
    }
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(2024);
    const std::vector<std::string> vars{"a", "s", "t", "x"};
    int cases = 0;
    for (int i = 0; i < 300; ++i) {
        const Poly p = testgen::random_poly(rng, vars, 3, 4);
        const Poly q = testgen::random_poly(rng, vars, 3, 4);
        const Poly r = testgen::random_poly(rng, vars, 3, 4);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Poly());
        ++cases;
    }
    CHECK(cases == 300);
}

TEST_CASE("series examples")
{
    const auto tr = Truncation::in_s(3);
    const Series one(tr, RatFunc(1));
    const Series inv = (one - Series::s(tr)).inverse();
    CHECK(inv == to_series(P("1 + s + s^2 + s^3"), tr));
    CHECK(Series(tr, RatFunc(2)).inverse() == Series(tr, RatFunc(Rat(1, 2))));
    CHECK_THROWS_AS(Series::s(tr).inverse(), NotAUnit);

    const auto tr2 = Truncation::in_st(2, 2);
    const Series u = to_series(P("1 + s + t"), tr2);
    CHECK(u * u.inverse() == Series(tr2, RatFunc(1)));

    CHECK_THROWS_AS(Series::s(tr) + Series::s(Truncation::in_s(2)), TruncationMismatch);
    const Series x2 = poly_substitute(P("x^2"), {{"x", to_series(P("s + 1"), tr)}}, tr);
    CHECK(x2 == to_series(P("s^2 + 2*s + 1"), tr));
    CHECK_THROWS_AS(poly_substitute(P("x"), {{"x", Series::s(tr)}}, tr2), TruncationMismatch);
    const Series st = to_series(P("1 + 2*t + s*t"), tr2);
    CHECK(st.t_slice(0) == Series(Truncation{2, -1}, RatFunc(1)));
}

TEST_CASE("series inversion and substitution are exact on random input")
{
    std::mt19937_64 rng(99);
    const auto tr = Truncation::in_st(4, 4);
    int cases = 0;
    for (int i = 0; i < 220; ++i) {
        Poly p = testgen::random_poly(rng, {"a", "s", "t"}, 3, 4);
        p += Poly(testgen::nonzero_rat(rng)) + P("a") * Poly(i % 2);
        const Series u = to_series(p, tr);
        if (u.coefficient(0, 0).is_zero()) {
            continue;
        }
        CHECK(u * u.inverse() == Series(tr, RatFunc(1)));
        ++cases;

        const Poly f = testgen::random_poly(rng, {"x", "y"}, 3, 3);
        const Poly g = testgen::random_poly(rng, {"x", "y"}, 3, 3);
        const std::map<std::string, Series> bind{
            {"x", to_series(testgen::random_poly(rng, {"s", "t"}, 2, 3), tr)},
            {"y", to_series(testgen::random_poly(rng, {"a", "s", "t"}, 2, 3), tr)}};
        CHECK(poly_substitute(f * g, bind, tr) ==
              poly_substitute(f, bind, tr) * poly_substitute(g, bind, tr));
    }
    CHECK(cases >= 200);
}

TEST_CASE("rational functions with constant denominators become series")
{
    const auto tr = Truncation::in_st(3, 2);
    CHECK(to_series(R("(s + a*t)/6"), tr) == to_series(P("s/6 + a*t/6"), tr));
    CHECK(to_series(R("(1 + s)/(1 - s)"), tr) ==
          to_series(P("1 + 2*s + 2*s^2 + 2*s^3"), tr));
}

TEST_CASE("series composition")
{
    const auto tr = Truncation::in_st(3, 3);
    const Series sigma = to_series(P("2*t + t^2"), Truncation{-1, 3});
    const Series z = to_series(P("1 + s + s^2*t"), tr);
    CHECK(z.compose_s(sigma) == to_series(P("1 + 2*t + t^2 + 4*t^3"), Truncation{-1, 3}));
}

TEST_CASE("rational linear algebra")
{
    Matrix<Rat> m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}};
    CHECK(rank(m) == 1);
    const auto ns = nullspace(m, 3);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        CHECK(v[0] * Rat(1) + v[1] * Rat(2) + v[2] * Rat(3) == Rat(0));
    }
    const auto x = solve(Matrix<Rat>{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, {Rat(3), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(2));
    CHECK(!solve(Matrix<Rat>{{Rat(1)}, {Rat(1)}}, {Rat(1), Rat(2)}).has_value());
}

TEST_CASE("fraction-free elimination reports parameter conditions")
{
    // 2u + 2 - a - b = 0, (a+6)u + 4 = 0 in the unknown u.
    Matrix<Poly> a{{P("2")}, {P("a + 6")}};
    std::vector<Poly> b{P("a + b - 2"), P("-4")};
    const auto res = eliminate_fraction_free(a, b);
    REQUIRE(res.conditions.size() == 1);
    CHECK(res.conditions[0] == P("a^2 + a*b + 4*a + 6*b - 4"));
    CHECK(res.solution[0] == R("(a + b - 2)/2"));

    Matrix<Poly> c{{P("1"), P("1")}, {P("1"), P("-1")}};
    const auto ok = eliminate_fraction_free(c, {P("a"), P("b")});
    CHECK(ok.conditions.empty());
    CHECK(ok.unique);
    CHECK(ok.solution[0] == R("(a + b)/2"));
    CHECK(ok.solution[1] == R("(a - b)/2"));
}
