#ifndef DTK_POLY_ALGEBRA_HPP
#define DTK_POLY_ALGEBRA_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtk/mpoly.hpp"
#include "dtk/rational.hpp"

namespace dtk {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Rational: ascending coefficients, trimmed.
// ---------------------------------------------------------------------------
namespace upoly {

using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int64_t deg(const Poly& p) { return static_cast<int64_t>(p.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Poly scale(Poly a, const Rational& s) {
    for (auto& c : a) c = c * s;
    trim(a);
    return a;
}

inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("upoly: division by zero polynomial");
    Poly r = a, q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    trim(r);
    while (deg(r) >= deg(b)) {
        size_t k = r.size() - b.size();
        Rational f = r.back() / b.back();
        q[k] = f;
        for (size_t i = 0; i < b.size(); ++i) r[k + i] -= f * b[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}

inline Poly derivative(const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long>(i)));
    trim(r);
    return r;
}

inline Rational eval(const Poly& p, const Rational& x) {
    Rational r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

/// Monic gcd via the Euclidean algorithm.
inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != Rational(1)) a = scale(a, a.back().inverse());
    return a;
}

/// f / gcd(f, f'), normalized monic.
inline Poly squarefree_part(const Poly& f) {
    Poly g = gcd(f, derivative(f));
    auto [q, r] = divrem(f, g);
    if (!r.empty()) throw std::logic_error("upoly: squarefree division not exact");
    if (!q.empty() && q.back() != Rational(1)) q = scale(q, q.back().inverse());
    return q;
}

/// Resultant via the Euclidean remainder sequence, with the convention
/// res(f,g) = lc(f)^deg(g) * prod g(root_i(f)).
inline Rational resultant_euclid(Poly f, Poly g) {
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) throw std::invalid_argument("resultant: zero polynomial");
    int64_t df = deg(f), dg = deg(g);
    if (df == 0) return f[0].pow(static_cast<unsigned long>(dg));
    if (dg == 0) return g[0].pow(static_cast<unsigned long>(df));
    auto [q, r] = divrem(f, g);
    if (r.empty()) return Rational(0);
    int64_t dr = deg(r);
    Rational s = ((df * dg) % 2 == 1) ? Rational(-1) : Rational(1);
    return s * g.back().pow(static_cast<unsigned long>(df - dr)) * resultant_euclid(g, r);
}

/// Resultant via the subresultant pseudo-remainder sequence. Exact and
/// fraction-free on integer input; the workhorse for large degrees.
inline Rational resultant_subresultant(Poly A, Poly B) {
    trim(A);
    trim(B);
    if (A.empty() || B.empty()) throw std::invalid_argument("resultant: zero polynomial");
    Rational s(1);
    if (deg(A) < deg(B)) {
        if ((deg(A) * deg(B)) % 2 == 1) s = -s;
        std::swap(A, B);
    }
    if (deg(B) == 0) return s * B[0].pow(static_cast<unsigned long>(deg(A)));
    Rational g(1), h(1);
    while (true) {
        int64_t dA = deg(A), dB = deg(B);
        int64_t d = dA - dB;
        if (dA % 2 == 1 && dB % 2 == 1) s = -s;
        // pseudo-remainder: lc(B)^(d+1) * A mod B
        Poly R = A;
        Rational lb = B.back();
        int64_t e = d + 1;
        while (!R.empty() && deg(R) >= dB) {
            Rational t = R.back();
            size_t k = R.size() - B.size();
            for (auto& c : R) c = c * lb;
            for (size_t i = 0; i < B.size(); ++i) R[k + i] -= t * B[i];
            trim(R);
            --e;
        }
        if (e > 0) {
            Rational le = lb.pow(static_cast<unsigned long>(e));
            for (auto& c : R) c = c * le;
        }
        A = std::move(B);
        Rational denom = g * h.pow(static_cast<unsigned long>(d));
        B = std::move(R);
        for (auto& c : B) c = c / denom;
        if (B.empty()) return Rational(0);
        g = A.back();
        if (d > 0) h = g.pow(static_cast<unsigned long>(d)) / h.pow(static_cast<unsigned long>(d - 1));
        if (deg(B) == 0) {
            int64_t n = deg(A);
            return s * B[0].pow(static_cast<unsigned long>(n)) / h.pow(static_cast<unsigned long>(n - 1));
        }
    }
}

}  // namespace upoly

// ---------------------------------------------------------------------------
// Multivariate operations.
// ---------------------------------------------------------------------------

/// Division with remainder in one variable. The divisor's leading coefficient
/// in var must be a nonzero constant; otherwise this throws.
inline std::pair<MPoly, MPoly> divrem(const MPoly& dividend, const MPoly& divisor,
                                      const std::string& var) {
    int64_t db = divisor.degree(var);
    if (db < 0) throw std::invalid_argument("divrem: zero divisor");
    MPoly lc = divisor.coeff_of(var, static_cast<uint32_t>(db));
    if (!lc.is_constant())
        throw std::invalid_argument("divrem: non-unit leading coefficient");
    Rational lcv = lc.constant_value();
    auto rc = dividend.coefficients_in(var);
    auto bc = divisor.coefficients_in(var);
    int64_t dr = dividend.degree(var);
    std::vector<MPoly> qc(static_cast<size_t>(std::max<int64_t>(dr - db + 1, 0)));
    while (dr >= db) {
        MPoly top = rc[static_cast<size_t>(dr)];
        if (!top.is_zero()) {
            MPoly t = top * lcv.inverse();
            qc[static_cast<size_t>(dr - db)] = t;
            for (int64_t i = 0; i <= db; ++i)
                rc[static_cast<size_t>(dr - db + i)] = rc[static_cast<size_t>(dr - db + i)] - t * bc[static_cast<size_t>(i)];
        }
        --dr;
    }
    MPoly q = MPoly::from_coefficients(var, qc);
    MPoly r = MPoly::from_coefficients(var, rc);
    return {q, r};
}

/// Exact division A / B (throws if B does not divide A). Leading-term
/// elimination in graded-lex order.
inline MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (a.is_zero()) return MPoly::zero(a.vars());
    if (b.is_constant()) return a * b.constant_value().inverse();
    MPoly r = a, q = MPoly::zero(a.vars());
    // align variable lists once via arithmetic identities
    r = r + MPoly::zero(b.vars());
    MPoly bb = b + MPoly::zero(a.vars());
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms().begin();
        const auto& [eb, cb] = *bb.terms().begin();
        ExpVec e(er.size());
        for (size_t i = 0; i < er.size(); ++i) {
            if (er[i] < eb[i]) throw std::domain_error("exact_div: not divisible");
            e[i] = er[i] - eb[i];
        }
        MPoly t = MPoly::single_term(r.vars(), std::move(e), cr / cb);
        q = q + t;
        r = r - t * bb;
    }
    return q;
}

/// Resultant of a and b with respect to var, by the subresultant PRS over the
/// polynomial ring in the remaining variables. Sign convention:
/// res(f,g) = lc(f)^deg(g) * prod g(root_i(f)).
inline MPoly resultant(const MPoly& a, const MPoly& b, const std::string& var) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant: zero polynomial");

    // univariate fast path
    {
        auto ua = a.used_vars();
        auto ub = b.used_vars();
        bool uni = true;
        for (const auto& v : ua)
            if (v != var) uni = false;
        for (const auto& v : ub)
            if (v != var) uni = false;
        if (uni) {
            Rational r = upoly::resultant_subresultant(a.as_univariate(var), b.as_univariate(var));
            return MPoly::constant(r);
        }
    }

    auto coeffs = [&](const MPoly& p) { return p.coefficients_in(var); };
    auto degv = [](const std::vector<MPoly>& p) { return static_cast<int64_t>(p.size()) - 1; };
    auto trimv = [](std::vector<MPoly>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };

    std::vector<MPoly> A = coeffs(a), B = coeffs(b);
    trimv(A);
    trimv(B);
    int sgn = 1;
    if (degv(A) < degv(B)) {
        if ((degv(A) * degv(B)) % 2 == 1) sgn = -sgn;
        std::swap(A, B);
    }
    if (degv(B) == 0) {
        MPoly r = B[0].pow(static_cast<uint32_t>(degv(A)));
        return sgn < 0 ? -r : r;
    }
    MPoly g = MPoly::constant(Rational(1)), h = g;
    while (true) {
        int64_t dA = degv(A), dB = degv(B);
        int64_t d = dA - dB;
        if (dA % 2 == 1 && dB % 2 == 1) sgn = -sgn;
        // pseudo-remainder lc(B)^(d+1) * A mod B
        std::vector<MPoly> R = A;
        MPoly lb = B.back();
        int64_t e = d + 1;
        while (!R.empty() && degv(R) >= dB) {
            MPoly t = R.back();
            size_t k = R.size() - B.size();
            for (auto& c : R) c = c * lb;
            for (size_t i = 0; i < B.size(); ++i) R[k + i] = R[k + i] - t * B[i];
            trimv(R);
            --e;
        }
        if (e > 0) {
            MPoly le = lb.pow(static_cast<uint32_t>(e));
            for (auto& c : R) c = c * le;
        }
        A = std::move(B);
        MPoly denom = g * h.pow(static_cast<uint32_t>(d));
        B = std::move(R);
        for (auto& c : B) c = exact_div(c, denom);
        if (B.empty()) return MPoly::zero(a.vars());
        g = A.back();
        if (d > 0) h = exact_div(g.pow(static_cast<uint32_t>(d)), h.pow(static_cast<uint32_t>(d - 1)));
        if (degv(B) == 0) {
            int64_t n = degv(A);
            MPoly r = exact_div(B[0].pow(static_cast<uint32_t>(n)), h.pow(static_cast<uint32_t>(n - 1)));
            return sgn < 0 ? -r : r;
        }
    }
}

/// Resultant by evaluation-interpolation: eliminate var, interpolate in the
/// single remaining variable. Evaluation points 0, 1, -1, 2, -2, ... skipping
/// points where either leading coefficient vanishes; the number of points
/// comes from the Sylvester-matrix degree bound.
inline MPoly resultant_interpolation(const MPoly& a, const MPoly& b, const std::string& var) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    std::vector<std::string> rest;
    for (const auto& v : a.used_vars())
        if (v != var) rest.push_back(v);
    for (const auto& v : b.used_vars())
        if (v != var && std::find(rest.begin(), rest.end(), v) == rest.end()) rest.push_back(v);
    if (rest.size() != 1)
        throw std::invalid_argument("resultant_interpolation: needs exactly one remaining variable");
    const std::string y = rest[0];

    int64_t dxa = a.degree(var), dxb = b.degree(var);
    int64_t dya = a.degree(y), dyb = b.degree(y);
    int64_t bound = dxb * dya + dxa * dyb;  // Sylvester rows: deg_x(b) of a, deg_x(a) of b

    MPoly lca = a.coeff_of(var, static_cast<uint32_t>(dxa));
    MPoly lcb = b.coeff_of(var, static_cast<uint32_t>(dxb));

    std::vector<Rational> nodes, values;
    long k = 0;
    while (static_cast<int64_t>(nodes.size()) < bound + 1) {
        Rational pt(k);
        k = (k > 0) ? -k : -k + 1;  // 0, 1, -1, 2, -2, ...
        std::map<std::string, Rational> env{{y, pt}};
        if (lca.eval(env).is_zero() || lcb.eval(env).is_zero()) continue;
        auto fa = a.eval_at(y, pt).as_univariate(var);
        auto fb = b.eval_at(y, pt).as_univariate(var);
        nodes.push_back(pt);
        values.push_back(upoly::resultant_euclid(fa, fb));
    }

    // Newton interpolation
    size_t n = nodes.size();
    std::vector<Rational> dd = values;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);
    upoly::Poly acc{dd[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        acc = upoly::add(upoly::mul(acc, {-nodes[i], Rational(1)}), {dd[i]});
    }
    return MPoly::from_univariate(y, acc);
}

/// Discriminant with respect to var:
/// disc(a) = (-1)^(d(d-1)/2) * res(a, da/dvar) / lc(a).
inline MPoly discriminant(const MPoly& a, const std::string& var) {
    int64_t d = a.degree(var);
    if (d < 1) throw std::invalid_argument("discriminant: constant in " + var);
    MPoly res = resultant(a, a.derivative(var), var);
    MPoly lc = a.coeff_of(var, static_cast<uint32_t>(d));
    MPoly r = exact_div(res, lc);
    return ((d * (d - 1) / 2) % 2 == 1) ? -r : r;
}

}  // namespace dtk

#endif
