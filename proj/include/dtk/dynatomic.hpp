#ifndef DTK_DYNATOMIC_HPP
#define DTK_DYNATOMIC_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dtk/algorithm1.hpp"  // mobius, divisors
#include "dtk/mpoly.hpp"
#include "dtk/poly_algebra.hpp"

namespace dtk {

/// Polynomial map x -> f(x), univariate in `var` over the rationals or over
/// a polynomial coefficient ring (the generic family x^2 + c lives in Q[c]).
struct PolyMap {
    MPoly f;
    std::string var = "x";

    int64_t poly_degree() const { return f.degree(var); }
};

inline PolyMap quadratic_family_generic() {
    MPoly x = MPoly::variable("x"), c = MPoly::variable("c");
    return {x * x + c, "x"};
}

inline PolyMap quadratic_family_at(const Rational& c0) {
    MPoly x = MPoly::variable("x");
    return {x * x + MPoly::constant(c0), "x"};
}

/// k-fold composition f^k, with f^0 = x. The degree grows like deg(f)^k, so
/// the overflow guard fires on the predicted degree before any expansion.
inline MPoly iterate_map(const PolyMap& f, unsigned k) {
    int64_t fdeg = f.poly_degree();
    if (fdeg < 1) throw std::invalid_argument("iterate_map: constant map");
    int64_t predicted = 1;
    for (unsigned i = 0; i < k; ++i) {
        predicted *= fdeg;
        if (predicted > 1024) throw std::domain_error("iterate_map: degree overflow");
    }
    MPoly acc = MPoly::variable(f.var);
    for (unsigned i = 0; i < k; ++i) acc = f.f.substitute(f.var, acc);
    return acc;
}

struct DynatomicPoly {
    unsigned n = 0;
    MPoly phi;
    int64_t degree = 0;
};

inline int64_t dynatomic_degree(unsigned n, int64_t s) {
    int64_t N = 0;
    for (uint64_t d : divisors(n)) {
        int64_t p = 1;
        for (uint64_t k = 0; k < d; ++k) p *= s;
        N += mobius(n / d) * p;
    }
    return N;
}

/// n-th dynatomic polynomial: the Mobius-alternating product over d | n of
/// (f^d(x) - x)^mu(n/d), computed as one exact division with the remainder
/// asserted zero. Zero remainder is a theorem; a violation is a bug.
inline DynatomicPoly dynatomic(const PolyMap& f, unsigned n) {
    if (n == 0) throw std::invalid_argument("dynatomic: n must be positive");
    MPoly x = MPoly::variable(f.var);
    MPoly num = MPoly::constant(Rational(1));
    MPoly den = MPoly::constant(Rational(1));
    for (uint64_t d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        MPoly t = iterate_map(f, static_cast<unsigned>(d)) - x;
        if (mu == 1)
            num = num * t;
        else
            den = den * t;
    }
    auto [q, r] = divrem(num, den, f.var);
    if (!r.is_zero()) throw std::logic_error("dynatomic: non-exact division");
    DynatomicPoly out{n, q, q.degree(f.var)};
    int64_t expect = dynatomic_degree(n, f.poly_degree());
    if (out.degree != expect) throw std::logic_error("dynatomic: degree formula violated");
    return out;
}

/// Generic-family dynatomic polynomial in Z[c,x], cached.
inline const MPoly& phi_generic(unsigned n) {
    static std::map<unsigned, MPoly> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, dynatomic(quadratic_family_generic(), n).phi).first;
    return it->second;
}

/// f^n(x) - x = prod_{d|n} Phi_d.
inline bool product_identity_check(const PolyMap& f, unsigned n) {
    MPoly lhs = iterate_map(f, n) - MPoly::variable(f.var);
    MPoly rhs = MPoly::constant(Rational(1));
    for (uint64_t d : divisors(n)) rhs = rhs * dynatomic(f, static_cast<unsigned>(d)).phi;
    return lhs == rhs;
}

/// Phi_{n,f}(l(x)) = a^{delta_{1n}} * Phi_{n,g}(x) for l(x) = a*x + b and
/// g = l^{-1} o f o l.
inline bool conjugation_identity_check(const PolyMap& f, const Rational& a, const Rational& b,
                                       unsigned n) {
    if (a.is_zero()) throw std::invalid_argument("conjugation_identity_check: a must be nonzero");
    MPoly x = MPoly::variable(f.var);
    MPoly ell = MPoly::constant(a) * x + MPoly::constant(b);
    MPoly g = (f.f.substitute(f.var, ell) - MPoly::constant(b)) * a.inverse();
    MPoly lhs = dynatomic(f, n).phi.substitute(f.var, ell);
    MPoly rhs = dynatomic(PolyMap{g, f.var}, n).phi;
    if (n == 1) rhs = rhs * a;
    return lhs == rhs;
}

struct OrbitResult {
    bool escaped = false;
    unsigned preperiod = 0;
    unsigned period = 0;
    bool cyclic = false;  // true when a cycle was found within max_steps
};

/// Exact forward orbit of x0 under x -> x^2 + c with cycle detection. The
/// height guard (total bit size of the iterate) reports runaway orbits as
/// escaping rather than grinding on gigantic integers.
inline OrbitResult orbit_of_point(const Rational& c, const Rational& x0, unsigned max_steps = 10000,
                                  size_t height_bits = 1000000) {
    if (max_steps > 10000) throw std::invalid_argument("orbit_of_point: max_steps above bound");
    std::unordered_map<Rational, unsigned> seen;
    Rational x = x0;
    for (unsigned i = 0; i <= max_steps; ++i) {
        auto it = seen.find(x);
        if (it != seen.end()) {
            OrbitResult r;
            r.cyclic = true;
            r.preperiod = it->second;
            r.period = i - it->second;
            return r;
        }
        seen.emplace(x, i);
        x = x * x + c;
        if (x.bit_size() > height_bits) {
            OrbitResult r;
            r.escaped = true;
            return r;
        }
    }
    return {};
}

struct NamedCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Degree-8 and quadratic factors of 2^12 * Phi_4 at c = -5/4:
/// 2^12 * Phi_{4,c}(x) = P(2x) * Q(2x)^2.
inline MPoly period4_degree8_factor() {
    return MPoly::parse(
        "x^8 - 4*x^7 - 16*x^6 + 84*x^5 - 6*x^4 - 364*x^3 + 584*x^2 - 836*x + 1021");
}

inline MPoly period4_quadratic_factor() { return MPoly::parse("x^2 + 2*x - 1"); }

/// The three exceptional-parameter factorizations, verified by multiplying
/// out (never by factoring):
///  (a) 2^6  * Phi_3 at c = -7/4      equals F(2x)^2,  F = x^3 + x^2 - 9x - 1
///  (b) 27*64* Phi_3 (generic c)      equals P(2x)^3 Q(2x) mod (16c^2+4c+7)
///  (c) 2^12 * Phi_4 at c = -5/4      equals P(2x) Q(2x)^2 with the factors above.
inline std::vector<NamedCheck> special_c_factorization_checks() {
    std::vector<NamedCheck> out;
    MPoly x = MPoly::variable("x");
    MPoly two_x = MPoly::constant(Rational(2)) * x;

    {
        MPoly lhs = phi_generic(3).eval_at("c", Rational(-7, 4)) * Rational(64);
        MPoly F = MPoly::parse("x^3 + x^2 - 9*x - 1").substitute("x", two_x);
        bool ok = lhs == F * F;
        out.push_back({"factorization-phi3-c-neg7-4", ok, ok ? "" : "product mismatch"});
    }
    {
        MPoly lhs = phi_generic(3) * Rational(27 * 64);
        MPoly P = MPoly::parse("3*x - 4*c + 1").substitute("x", two_x);
        MPoly Q = MPoly::parse("x^3 + (4*c+1)*x^2 + (12*c-2)*x - 8*c - 15").substitute("x", two_x);
        MPoly diff = lhs - P.pow(3) * Q;
        MPoly ideal = MPoly::parse("16*c^2 + 4*c + 7");
        bool ok = true;
        int64_t dx = diff.degree("x");
        for (int64_t k = 0; k <= dx && ok; ++k) {
            MPoly coeff = diff.coeff_of("x", static_cast<uint32_t>(k));
            auto [q, r] = divrem(coeff, ideal, "c");
            if (!r.is_zero()) ok = false;
        }
        out.push_back({"factorization-phi3-mod-ideal", ok, ok ? "" : "nonzero residue mod 16c^2+4c+7"});
    }
    {
        MPoly lhs = phi_generic(4).eval_at("c", Rational(-5, 4)) * Rational(4096);
        MPoly P = period4_degree8_factor().substitute("x", two_x);
        MPoly Q = period4_quadratic_factor().substitute("x", two_x);
        bool ok = lhs == P * Q * Q;
        out.push_back({"factorization-phi4-c-neg5-4", ok, ok ? "" : "product mismatch"});
    }
    return out;
}

/// Quartic whose fourth power divides -disc Phi_5 at every parameter value.
inline MPoly phi5_disc_quartic() { return MPoly::parse("31 - 36*c + 16*c^2 + 64*c^3 + 256*c^4"); }

/// Structure of disc Phi_5 at integer parameters: -disc is A(c)^4 times a
/// perfect rational 5th power, and never zero. The degree-30 discriminant is
/// computed per specialized c0 (integer subresultant), not symbolically.
inline std::vector<NamedCheck> disc_phi5_structure_check(const std::vector<long>& cs) {
    std::vector<NamedCheck> out;
    const MPoly& phi5 = phi_generic(5);
    MPoly A = phi5_disc_quartic();
    for (long c0 : cs) {
        std::string name = "disc-phi5-structure-c" + std::to_string(c0);
        Rational a = A.eval({{"c", Rational(c0)}});
        if (a.is_zero()) {
            out.push_back({name, false, "A(c0) = 0: rejected input"});
            continue;
        }
        auto uni = phi5.eval_at("c", Rational(c0)).as_univariate("x");
        // monic of degree 30: disc = (-1)^(30*29/2) res(f, f') = -res
        Rational res = upoly::resultant_subresultant(uni, upoly::derivative(uni));
        Rational disc = -res;
        if (disc.is_zero()) {
            out.push_back({name, false, "discriminant vanishes"});
            continue;
        }
        Rational cofactor = -disc / a.pow(4);
        if (!cofactor.is_integer()) {
            out.push_back({name, false, "A(c0)^4 does not divide -disc"});
            continue;
        }
        bool fifth = is_perfect_nth_power(cofactor, 5);
        out.push_back({name, fifth, fifth ? "" : "cofactor is not a 5th power"});
    }
    return out;
}

}  // namespace dtk

#endif
