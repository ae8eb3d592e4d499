#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linham/parse.hpp"
#include "linham/parampoly.hpp"

using namespace linham;

namespace {

std::mt19937_64 rng(20240701);

GaussianRational rand_gauss(int span = 6) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 4);
    return GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

Poly rand_poly(int maxdeg = 3) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    int deg = d(rng);
    std::vector<GaussianRational> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = rand_gauss(4);
    return Poly(std::move(c));
}

RatFunc rand_ratfunc(int maxdeg = 3) {
    Poly den = rand_poly(maxdeg);
    while (den.is_zero()) den = rand_poly(maxdeg);
    return RatFunc(rand_poly(maxdeg), den);
}

GaussianRational rand_nonpole_point(const RatFunc& a, const RatFunc& b) {
    for (;;) {
        GaussianRational p = rand_gauss(20);
        if (!a.den().eval_exact(p).is_zero() && !b.den().eval_exact(p).is_zero()) return p;
    }
}

} // namespace

TEST_CASE("gaussian rational field basics") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(Rational(3, 2), Rational(-1, 2));
    CHECK(z * z.inverse() == GaussianRational::one());
    CHECK((z / z) == GaussianRational::one());
    CHECK(z.conj().norm() == z.norm());
    CHECK(z.str() == "3/2-1/2*i");
}

TEST_CASE("exact square roots in Q(i)") {
    CHECK(*exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(!exact_sqrt(Rational(2)).has_value());
    // -1 = i^2 is a square in Q(i)
    auto r = exact_sqrt(GaussianRational(-1));
    REQUIRE(r.has_value());
    CHECK(*r * *r == GaussianRational(-1));
    // 2i = (1+i)^2
    auto s = exact_sqrt(GaussianRational(Rational(0), Rational(2)));
    REQUIRE(s.has_value());
    CHECK(*s * *s == GaussianRational(Rational(0), Rational(2)));
    // i is not a square in Q(i), neither is 2
    CHECK(!exact_sqrt(GaussianRational::i()).has_value());
    CHECK(!exact_sqrt(GaussianRational(2)).has_value());
}

TEST_CASE("polynomial arithmetic and gcd") {
    Poly t = Poly::t();
    Poly p = t * t - Poly(1);
    Poly q = t - Poly(1);
    CHECK(p / q == t + Poly(1));
    CHECK(gcd(p, q) == q.monic());
    CHECK(p.derivative() == t * GaussianRational(2));
    Poly z;
    CHECK(z.degree() == -1);
    CHECK(gcd(z, z).is_zero());
}

TEST_CASE("ratfunc arithmetic examples") {
    RatFunc t = RatFunc::t();
    // (t) + (1/t) = (t^2+1)/t
    RatFunc sum = t + RatFunc::one() / t;
    CHECK(sum == RatFunc(Poly::t() * Poly::t() + Poly(1), Poly::t()));
    // (t-1)(t+1) = t^2 - 1
    CHECK((t - RatFunc(1)) * (t + RatFunc(1)) == t * t - RatFunc(1));
    // f / f = 1
    RatFunc f = parse_ratfunc("(3*t^2-1)/(t+7)");
    CHECK(f / f == RatFunc::one());
    CHECK_THROWS_AS(f / RatFunc::zero(), Error);
}

TEST_CASE("ratfunc derivative examples") {
    RatFunc t = RatFunc::t();
    CHECK((t * t).derivative() == t * RatFunc(2));
    CHECK((RatFunc::one() / t).derivative() == -RatFunc(1) / (t * t));
    // d/dt (t+i)/(t-i) = -2i/(t-i)^2
    RatFunc g = parse_ratfunc("(t+i)/(t-i)");
    RatFunc expect = parse_ratfunc("(0-2*i)/((t-i)^2)");
    CHECK(g.derivative() == expect);
}

TEST_CASE("derivation is linear and Leibniz on random pairs") {
    for (int k = 0; k < 200; ++k) {
        RatFunc a = rand_ratfunc(), b = rand_ratfunc();
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        CHECK((a + b).derivative() == a.derivative() + b.derivative());
        GaussianRational c = rand_gauss();
        CHECK((a * RatFunc(c)).derivative() == a.derivative() * RatFunc(c));
    }
}

TEST_CASE("canonical form agrees with pointwise equality") {
    for (int k = 0; k < 60; ++k) {
        RatFunc a = rand_ratfunc(), b = rand_ratfunc();
        // structurally different => differ at some of 20 random non-pole points
        if (a == b) continue;
        bool differs = false;
        for (int s = 0; s < 20 && !differs; ++s) {
            GaussianRational p = rand_nonpole_point(a, b);
            differs = a.eval_exact(p) != b.eval_exact(p);
        }
        CHECK(differs);
        // and equal things stay equal however they are assembled
        RatFunc c = (a + b) - b;
        CHECK(c == a);
    }
}

TEST_CASE("ratfunc evaluation and poles") {
    RatFunc f = parse_ratfunc("(t^2+1)/(t-3)");
    auto v = f.eval({0.0, 0.0});
    CHECK(v.real() == doctest::Approx(-1.0 / 3.0));
    CHECK(v.imag() == doctest::Approx(0.0));
    CHECK_THROWS_AS(parse_ratfunc("1/t").eval({0.0, 0.0}), Error);
    auto id = RatFunc::t().eval({2.0, 1.0});
    CHECK(id.real() == doctest::Approx(2.0));
    CHECK(id.imag() == doctest::Approx(1.0));
}

TEST_CASE("parser grammar") {
    RatFunc f = parse_ratfunc("(3/2+1/2*i)*t^2/(t-3)");
    Poly num = Poly::monomial(2, GaussianRational(Rational(3, 2), Rational(1, 2)));
    CHECK(f == RatFunc(num, Poly::t() - Poly(3)));
    CHECK(parse_ratfunc("t^(-2)") == RatFunc::one() / (RatFunc::t() * RatFunc::t()));
    CHECK(parse_gaussian("-2+3*i") == GaussianRational(Rational(-2), Rational(3)));
    CHECK_THROWS_AS(parse_ratfunc("t^"), Error);
    CHECK_THROWS_AS(parse_ratfunc("(t"), Error);
    try {
        parse_ratfunc("sqrt(t)");
        FAIL("expected UnsupportedFunction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedFunction);
    }
    try {
        parse_ratfunc("t^(1/2)");
        FAIL("expected UnsupportedFunction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedFunction);
    }
}

TEST_CASE("printer output reparses to the same function") {
    for (int k = 0; k < 100; ++k) {
        RatFunc a = rand_ratfunc();
        CHECK(parse_ratfunc(a.str()) == a);
    }
}

TEST_CASE("parampoly ring axioms on random triples") {
    auto ctx = make_param_context({"f", "g", "lam"});
    auto rand_pp = [&]() {
        ParamPoly p(ctx);
        std::uniform_int_distribution<int> e(0, 2);
        for (int terms = 0; terms < 3; ++terms) {
            ParamPoly mono = ParamPoly::constant(ctx, rand_gauss(3));
            for (int s = 0; s < 3; ++s)
                for (int rep = e(rng); rep > 0; --rep) mono = mono * ParamPoly::symbol(ctx, (*ctx)[s]);
            p = p + mono;
        }
        return p;
    };
    for (int k = 0; k < 100; ++k) {
        ParamPoly a = rand_pp(), b = rand_pp(), c = rand_pp();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == ParamPoly(ctx));
    }
}
