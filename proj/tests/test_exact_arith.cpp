#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dtk/modpoly.hpp"
#include "dtk/mpoly.hpp"
#include "dtk/poly_algebra.hpp"
#include "dtk/ratfunc.hpp"

using namespace dtk;

namespace {

MPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_terms = 5,
                  int max_exp = 3, int max_coef = 9) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coef(-max_coef, max_coef);
    MPoly p = MPoly::zero(vars);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        MPoly t = MPoly::constant(Rational(coef(rng)), vars);
        for (const auto& v : vars) t = t * MPoly::variable(v).pow(static_cast<uint32_t>(exp(rng)));
        p = p + t;
    }
    return p;
}

upoly::Poly random_upoly(std::mt19937& rng, int deg, int max_coef = 9) {
    std::uniform_int_distribution<int> coef(-max_coef, max_coef);
    upoly::Poly p;
    for (int i = 0; i < deg; ++i) p.emplace_back(coef(rng));
    p.emplace_back(coef(rng) | 1);  // nonzero leading coefficient
    return p;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational::parse("-22/33") == Rational(-2, 3));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-3, 7).inverse() == Rational(-7, 3));
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(is_perfect_nth_power(Rational(32, 243), 5));
    CHECK(is_perfect_nth_power(Rational(-32), 5));
    CHECK_FALSE(is_perfect_nth_power(Rational(33), 5));
}

TEST_CASE("mpoly arithmetic examples") {
    MPoly x = MPoly::variable("x");
    MPoly c = MPoly::variable("c");
    CHECK((x + MPoly::constant(Rational(1))) * (x - MPoly::constant(Rational(1))) ==
          MPoly::parse("x^2 - 1"));
    MPoly f = MPoly::parse("x^2 - x + c");
    CHECK(f + MPoly::zero() == f);
    MPoly twox = MPoly::constant(Rational(2)) * x;
    CHECK(twox * twox + c * twox == MPoly::parse("4*x^2 + 2*c*x"));
}

TEST_CASE("mpoly parser round-trips its own printing") {
    CHECK(MPoly::parse("x^2 - x - 7/4").str() == "x^2 - x - 7/4");
    CHECK(MPoly::parse("(19*a+17)*c^2") == MPoly::parse("19*a*c^2 + 17*c^2"));
    CHECK(MPoly::parse("2x (x+1)") == MPoly::parse("2*x^2 + 2*x"));
    CHECK(MPoly::parse("-x^2/4 + 1/2") * Rational(-4) == MPoly::parse("x^2 - 2"));
    CHECK_THROWS_AS(MPoly::parse("x +"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::parse("(x"), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::parse("x / y"), std::invalid_argument);

    std::mt19937 rng(12345);
    for (int i = 0; i < 60; ++i) {
        MPoly p = random_poly(rng, {"x", "y", "c"});
        CAPTURE(p.str());
        CHECK(MPoly::parse(p.str()) == p);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        MPoly a = random_poly(rng, {"x", "y"});
        MPoly b = random_poly(rng, {"y", "c"});
        MPoly c = random_poly(rng, {"x", "c"});
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == MPoly::zero());
    }
}

TEST_CASE("divrem basics") {
    MPoly x = MPoly::variable("x");
    auto [q, r] = divrem(x * x, x, "x");
    CHECK(q == x);
    CHECK(r.is_zero());

    // (f^2(x) - x) / (f(x) - x) for f = x^2 + c, by hand:
    // f^2 - x = (x^2-x+c)(x^2+x+c+1)
    MPoly f = MPoly::parse("x^2 + c");
    MPoly f2 = f.substitute("x", f);
    auto [q2, r2] = divrem(f2 - x, f - x, "x");
    CHECK(r2.is_zero());
    CHECK(q2 == MPoly::parse("x^2 + x + c + 1"));

    CHECK_THROWS_WITH_AS(divrem(x * x, MPoly::parse("c*x + 1"), "x").first,
                         "divrem: non-unit leading coefficient", std::invalid_argument);
}

TEST_CASE("divrem round-trip on random monic divisors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dd(1, 4);
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_poly(rng, {"x", "c"}, 6, 5);
        int d = dd(rng);
        MPoly b = MPoly::variable("x").pow(static_cast<uint32_t>(d)) + random_poly(rng, {"x", "c"}, 3, d - 1);
        auto [q, r] = divrem(a, b, "x");
        CHECK(a == q * b + r);
        CHECK(r.degree("x") < b.degree("x"));
    }
}

TEST_CASE("exact_div") {
    MPoly a = MPoly::parse("x^2 - 1");
    MPoly b = MPoly::parse("x + 1");
    CHECK(exact_div(a * b, b) == a);
    CHECK_THROWS_AS(exact_div(MPoly::parse("x^2 + 1"), MPoly::parse("x + 1")),
                    std::domain_error);
}

TEST_CASE("resultant conventions and fixtures") {
    MPoly x = MPoly::variable("x");
    // res(f,g) = lc(f)^deg(g) * prod g(roots of f): res(x, x-1) = g(0) = -1
    CHECK(resultant(x, x - MPoly::constant(Rational(1)), "x") == MPoly::constant(Rational(-1)));
    CHECK(resultant(MPoly::parse("2*x + 1"), MPoly::parse("3*x + 1"), "x") ==
          MPoly::constant(Rational(-1)));
    CHECK(resultant(MPoly::parse("x^2 - 1"), MPoly::parse("x - 2"), "x") ==
          MPoly::constant(Rational(3)));
    CHECK_THROWS_AS(resultant(MPoly::zero(), x, "x"), std::invalid_argument);

    // bivariate with a parameter
    MPoly res = resultant(MPoly::parse("x^2 - c"), MPoly::parse("x - 1"), "x");
    CHECK(res == MPoly::parse("1 - c"));
}

TEST_CASE("resultant bilinearity on random univariate inputs") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 40; ++i) {
        upoly::Poly f = random_upoly(rng, 1 + static_cast<int>(rng() % 4));
        upoly::Poly g = random_upoly(rng, 1 + static_cast<int>(rng() % 4));
        upoly::Poly h = random_upoly(rng, 1 + static_cast<int>(rng() % 4));
        Rational lhs = upoly::resultant_subresultant(f, upoly::mul(g, h));
        Rational rhs = upoly::resultant_subresultant(f, g) * upoly::resultant_subresultant(f, h);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("euclid and subresultant resultants agree") {
    std::mt19937 rng(555);
    for (int i = 0; i < 50; ++i) {
        upoly::Poly f = random_upoly(rng, 1 + static_cast<int>(rng() % 6));
        upoly::Poly g = random_upoly(rng, 1 + static_cast<int>(rng() % 6));
        CHECK(upoly::resultant_euclid(f, g) == upoly::resultant_subresultant(f, g));
    }
}

TEST_CASE("subresultant and interpolation paths agree on bivariate inputs") {
    std::mt19937 rng(31337);
    int done = 0;
    while (done < 50) {
        MPoly a = random_poly(rng, {"x", "y"}, 5, 3);
        MPoly b = random_poly(rng, {"x", "y"}, 5, 3);
        if (a.degree("x") < 1 || b.degree("x") < 1) continue;
        ++done;
        MPoly r1 = resultant(a, b, "x");
        MPoly r2 = resultant_interpolation(a, b, "x");
        CAPTURE(a.str());
        CAPTURE(b.str());
        CHECK(r1 == r2);
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(MPoly::parse("x^2 + b*x + c"), "x") == MPoly::parse("b^2 - 4*c"));
    CHECK(discriminant(MPoly::parse("x^3 + p*x + q"), "x") ==
          MPoly::parse("-4*p^3 - 27*q^2"));
    CHECK_THROWS_AS(discriminant(MPoly::parse("c"), "x"), std::invalid_argument);
}

TEST_CASE("quadratic extension arithmetic") {
    MPoly g = MPoly::parse("-u*(u^2 + 1)*(u^2 - 2*u - 1)");
    QuadExtElem v = QuadExtElem::v_generator(g);
    QuadExtElem vv = v * v;
    CHECK(vv.a1().is_zero());
    CHECK(vv.a0() == RationalFunction::from_poly(g));

    QuadExtElem zero{RationalFunction::constant(Rational(0)), RationalFunction::constant(Rational(0)), g};
    QuadExtElem e{RationalFunction::parse("u - 1", "2*(u + 1)"),
                  RationalFunction::parse("1", "2*u*(u - 1)"), g};
    CHECK(e + zero == e);
    CHECK_THROWS_AS(e / zero, std::domain_error);

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-4, 4);
    auto random_rf = [&] {
        upoly::Poly n{Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))};
        upoly::Poly d{Rational(coef(rng)), Rational(coef(rng))};
        upoly::trim(n);
        upoly::trim(d);
        if (d.empty()) d = {Rational(1)};
        return RationalFunction(MPoly::from_univariate("u", n), MPoly::from_univariate("u", d));
    };
    int done = 0;
    while (done < 25) {
        QuadExtElem a{random_rf(), random_rf(), g};
        QuadExtElem b{random_rf(), random_rf(), g};
        if (a.is_zero()) continue;
        ++done;
        CHECK((a * b) / a == b);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    }
}

TEST_CASE("modpoly root existence") {
    CHECK(modpoly_root_exists({Integer(1), Integer(0), Integer(1)}, 5));        // x^2+1 mod 5
    CHECK_FALSE(modpoly_root_exists({Integer(1), Integer(0), Integer(1)}, 7));  // x^2+1 mod 7
    // degree-8 polynomial with a root at 1 mod 2 (coefficients sum is even)
    MPoly P = MPoly::parse(
        "x^8 - 4*x^7 - 16*x^6 + 84*x^5 - 6*x^4 - 364*x^3 + 584*x^2 - 836*x + 1021");
    CHECK(modpoly_root_exists(P, "x", 2));
    CHECK_THROWS_WITH_AS(modpoly_root_exists({Integer(1), Integer(14)}, 7),
                         "modpoly_root_exists: bad prime", std::invalid_argument);
    CHECK_THROWS_AS(modpoly_root_exists({Integer(1), Integer(1)}, 15), std::invalid_argument);
}

TEST_CASE("modpoly agrees with exhaustive evaluation for p < 100") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coef(-60, 60);
    std::vector<uint64_t> primes;
    for (uint64_t p = 2; p < 100; ++p)
        if (is_prime_u64(p)) primes.push_back(p);
    CHECK(primes.size() == 25);

    for (int trial = 0; trial < 20; ++trial) {
        int deg = 1 + static_cast<int>(rng() % 8);
        std::vector<Integer> cs;
        for (int i = 0; i < deg; ++i) cs.emplace_back(coef(rng));
        cs.emplace_back(2 * coef(rng) + 1);  // odd, nonzero leading coefficient
        for (uint64_t p : primes) {
            if (cs.back() % Integer(static_cast<unsigned long>(p)) == 0) continue;
            bool brute = false;
            for (uint64_t a = 0; a < p && !brute; ++a) {
                Integer acc = 0;
                for (size_t i = cs.size(); i-- > 0;) acc = acc * Integer(static_cast<long>(a)) + cs[i];
                if (acc % Integer(static_cast<unsigned long>(p)) == 0) brute = true;
            }
            CAPTURE(trial);
            CAPTURE(p);
            CHECK(modpoly_root_exists(cs, p) == brute);
        }
    }
}

TEST_CASE("miller-rabin on small inputs") {
    int count = 0;
    for (uint64_t n = 2; n <= 1000; ++n)
        if (is_prime_u64(n)) ++count;
    CHECK(count == 168);
    CHECK(is_prime_u64(999999937ull));
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}
