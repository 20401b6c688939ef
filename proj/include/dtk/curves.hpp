#ifndef DTK_CURVES_HPP
#define DTK_CURVES_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtk/dynatomic.hpp"
#include "dtk/mpoly.hpp"
#include "dtk/poly_algebra.hpp"
#include "dtk/ratfunc.hpp"

namespace dtk {

/// Plane model of the period-5 quotient curve: tau5(c,t), sextic in t.
inline MPoly tau5() {
    return MPoly::parse(
        "t^6 + t^5 + (11*c + 3)*t^4 + (18*c + 11)*t^3 + (19*c^2 + 19*c + 44)*t^2"
        " + (17*c^2 - 24*c + 36)*t + 9*c^3 + 40*c^2 + 28*c + 32");
}

/// The two defining equations of the space curve in (a, b, c): the remainder
/// of tau5 under division by t^2 - a*t - b is r1*t + r0.
inline MPoly printed_r1() {
    return MPoly::parse(
        "(19*a + 17)*c^2 + (11*a^3 + 18*a^2 + 22*a*b + 19*a + 18*b - 24)*c"
        " + a^5 + a^4 + 4*a^3*b + 3*a^3 + 3*a^2*b + 11*a^2 + 3*a*b^2 + 6*a*b + 44*a"
        " + b^2 + 11*b + 36");
}

inline MPoly printed_r0() {
    return MPoly::parse(
        "9*c^3 + (19*b + 40)*c^2 + (11*a^2*b + 18*a*b + 11*b^2 + 19*b + 28)*c"
        " + a^4*b + a^3*b + 3*a^2*b^2 + 3*a^2*b + 2*a*b^2 + 11*a*b + b^3 + 3*b^2"
        " + 44*b + 32");
}

/// Recomputes (r1, r0) by dividing tau5 by t^2 - a*t - b in t.
inline std::pair<MPoly, MPoly> derive_X_equations() {
    MPoly m = MPoly::parse("t^2 - a*t - b");
    auto [q, rem] = divrem(tau5(), m, "t");
    MPoly r1 = rem.coeff_of("t", 1);
    MPoly r0 = rem.coeff_of("t", 0);
    if (rem.degree("t") > 1) throw std::logic_error("derive_X_equations: remainder degree");
    return {r1, r0};
}

inline bool on_X(const Rational& a, const Rational& b, const Rational& c) {
    std::map<std::string, Rational> env{{"a", a}, {"b", b}, {"c", c}};
    return printed_r1().eval(env).is_zero() && printed_r0().eval(env).is_zero();
}

inline bool on_C05(const Rational& c, const Rational& t) {
    return tau5().eval({{"c", c}, {"t", t}}).is_zero();
}

inline std::vector<std::array<Rational, 3>> known_X_points() {
    return {{Rational(1), Rational(8), Rational(-2)},
            {Rational(-2), Rational(-1), Rational(-4, 3)}};
}

inline std::vector<std::array<Rational, 2>> known_C05_points() {
    return {{Rational(-2), Rational(-1)},
            {Rational(-4, 3), Rational(-1)},
            {Rational(-16, 9), Rational(-7, 3)},
            {Rational(-64, 9), Rational(10, 3)}};
}

/// tau5(c, -1), which factors as (2 + c)(4 + 3c)^2.
inline MPoly tau5_at_t_minus1() { return tau5().eval_at("t", Rational(-1)); }

/// Right-hand side of the hyperelliptic model: x^6+8x^5+22x^4+22x^3+5x^2+6x+1.
inline Rational hyperelliptic_rhs(const Rational& x) {
    return MPoly::parse("x^6 + 8*x^5 + 22*x^4 + 22*x^3 + 5*x^2 + 6*x + 1").eval({{"x", x}});
}

/// Birational map from the plane quintic-quotient model to the hyperelliptic
/// model. Undefined on the line t = -1 (denominators 4(t+1) and 32(t+1)^3).
inline std::pair<Rational, Rational> psi_map(const Rational& c, const Rational& t) {
    if (t == Rational(-1)) throw std::domain_error("psi_map: indeterminate point (t = -1)");
    Rational num1 = MPoly::parse("3*t^2 + 9*t + 3*c + 10").eval({{"c", c}, {"t", t}});
    Rational x = -num1 / (Rational(4) * (t + Rational(1)));
    Rational R = MPoly::parse(
                     "12*t^6 + 48*t^5 + (24*c + 65)*t^4 + (72*c - 6)*t^3"
                     " + (12*c^2 + 122*c - 23)*t^2 + (24*c^2 + 130*c + 72)*t"
                     " + 21*c^2 + 80*c + 76")
                     .eval({{"c", c}, {"t", t}});
    Rational y = -R / (Rational(32) * (t + Rational(1)).pow(3));
    return {x, y};
}

/// Trace polynomial theta_n(c,x) = x + f_c(x) + ... + f_c^{n-1}(x).
inline MPoly theta_n(unsigned n) {
    if (n == 0 || n > 6) throw std::invalid_argument("theta_n: n out of range");
    PolyMap f = quadratic_family_generic();
    MPoly acc = MPoly::zero();
    for (unsigned k = 0; k < n; ++k) acc = acc + iterate_map(f, k);
    return acc;
}

/// tau5(c, theta_5(c,x)) vanishes modulo Phi_5(c,x): the trace map carries
/// period-5 points onto the quotient curve. Evaluated by Horner in t with
/// reduction mod Phi_5 after every step to keep degrees at 30.
inline bool theta5_tau5_compatible() {
    const MPoly& phi5 = phi_generic(5);
    MPoly th = theta_n(5);
    MPoly t5 = tau5();
    MPoly acc = MPoly::zero();
    for (int64_t k = t5.degree("t"); k >= 0; --k) {
        acc = acc * th + t5.coeff_of("t", static_cast<uint32_t>(k));
        acc = divrem(acc, phi5, "x").second;
    }
    return acc.is_zero();
}

struct Period4Report {
    bool conjugate_identity = false;  // f_c^2(alpha) equals the printed conjugate
    bool period_divides_4 = false;    // f_c^4(alpha) = alpha
    bool not_period_2 = false;        // f_c^2(alpha) != alpha
    bool trace_matches = false;       // alpha + f_c^2(alpha) = (u-1)/(u+1)
    bool norm_matches = false;        // alpha * f_c^2(alpha) equals the printed norm
    bool c_difference_factors = false;
    Rational lambda;                  // scalar in the c(u)-c(t) factorization
    bool pass() const {
        return conjugate_identity && period_divides_4 && not_period_2 && trace_matches &&
               norm_matches && c_difference_factors;
    }
};

/// The period-4 parametrization identities over Q(u)[v]/(v^2 - g(u)) with
/// g = -u(u^2+1)(u^2-2u-1):
///   alpha = (u-1)/(2(u+1)) + v/(2u(u-1)),  c = c(u) as below.
/// (a) f_c^2(alpha) is the conjugate of alpha, (b) alpha has period dividing
/// 4 but not 2, (c) the quadratic (x-alpha)(x-f_c^2(alpha)) has the printed
/// trace and norm, (d) the numerator of c(u)-c(t) factors as
/// lambda*(t-u)(ut+1)*F(u,t) with F the printed quartic-in-each-variable.
inline Period4Report period4_identity_suite() {
    Period4Report rep;
    const std::string uv = "u";
    MPoly g = MPoly::parse("-u*(u^2 + 1)*(u^2 - 2*u - 1)");

    auto rf = [&](const char* num, const char* den) {
        return RationalFunction(MPoly::parse(num), MPoly::parse(den), uv);
    };
    RationalFunction c_of_u = rf("(u^2 - 4*u - 1)*(u^4 + u^3 + 2*u^2 - u + 1)", "4*u*(u^2 - 1)^2");
    QuadExtElem alpha{rf("u - 1", "2*(u + 1)"), rf("1", "2*u*(u - 1)"), g};
    QuadExtElem c_elem = QuadExtElem::from_base(c_of_u, g);

    auto f_c = [&](const QuadExtElem& e) { return e * e + c_elem; };

    QuadExtElem f2 = f_c(f_c(alpha));
    rep.conjugate_identity = (f2 == alpha.conjugate());
    QuadExtElem f4 = f_c(f_c(f2));
    rep.period_divides_4 = (f4 == alpha);
    rep.not_period_2 = !(f2 == alpha);

    RationalFunction trace = alpha.a0() + f2.a0();  // v-parts cancel for conjugates
    rep.trace_matches = (trace == rf("u - 1", "u + 1"));
    QuadExtElem prod = alpha * f2;
    rep.norm_matches = prod.a1().is_zero() &&
                       (prod.a0() == rf("u^6 + u^5 - 7*u^4 + 2*u^3 - 9*u^2 - 3*u - 1",
                                        "4*u*(u^2 - 1)^2"));

    // (d): numerator of c(u) - c(t) over 4*u*t*(u^2-1)^2*(t^2-1)^2
    MPoly num_u = MPoly::parse("(u^2 - 4*u - 1)*(u^4 + u^3 + 2*u^2 - u + 1)");
    MPoly num_t = MPoly::parse("(t^2 - 4*t - 1)*(t^4 + t^3 + 2*t^2 - t + 1)");
    MPoly wu = MPoly::parse("u*(u^2 - 1)^2");
    MPoly wt = MPoly::parse("t*(t^2 - 1)^2");
    MPoly N = num_u * wt - num_t * wu;
    MPoly F = MPoly::parse(
        "(u^2 - 1)^2*t^4 + (4*u)^2*t^3 - 2*(u^2 - 1)*(u^2 - 8*u - 1)*t^2 - (4*u)^2*t"
        " + (u^2 - 1)^2");
    MPoly prod_d = MPoly::parse("(t - u)*(u*t + 1)") * F;
    // lambda from any shared leading term, then an exact identity check
    if (!N.is_zero() && !prod_d.is_zero()) {
        const auto& [e, coef] = *prod_d.terms().begin();
        MPoly nn = N + MPoly::zero(prod_d.vars());
        auto it = nn.terms().find(e);
        if (it != nn.terms().end()) {
            rep.lambda = it->second / coef;
            rep.c_difference_factors = (nn == prod_d * rep.lambda) && !rep.lambda.is_zero();
        }
    }
    return rep;
}

}  // namespace dtk

#endif
