#ifndef DTK_MODPOLY_HPP
#define DTK_MODPOLY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dtk/mpoly.hpp"
#include "dtk/rational.hpp"

namespace dtk {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// Univariate polynomial over F_p, p an odd-or-2 prime below 2^62 so products
/// fit in double-word arithmetic. Coefficients ascending, leading one nonzero.
class ModPoly {
public:
    ModPoly(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        if (p_ < 2 || p_ >= (1ull << 62)) throw std::invalid_argument("ModPoly: modulus out of range");
        for (auto& x : c_) x %= p_;
        trim();
    }

    static ModPoly from_integers(uint64_t p, const std::vector<Integer>& coeffs) {
        std::vector<uint64_t> c;
        c.reserve(coeffs.size());
        Integer pz(static_cast<unsigned long>(p));
        for (const auto& z : coeffs) {
            Integer r = z % pz;
            if (r < 0) r += pz;
            c.push_back(r.get_ui());
        }
        return {p, std::move(c)};
    }

    uint64_t p() const { return p_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }

    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return {a.p_, {}};
        std::vector<uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = (r[i + j] + mulmod_u64(a.c_[i], b.c_[j], a.p_)) % a.p_;
        return {a.p_, std::move(r)};
    }

    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        a.check(b);
        std::vector<uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = (r[i] + a.p_ - b.c_[i]) % a.p_;
        return {a.p_, std::move(r)};
    }

    ModPoly rem(const ModPoly& m) const {
        check(m);
        if (m.is_zero()) throw std::domain_error("ModPoly: modulo zero");
        std::vector<uint64_t> r = c_;
        uint64_t lead_inv = powmod_u64(m.c_.back(), p_ - 2, p_);
        while (r.size() >= m.c_.size()) {
            uint64_t f = mulmod_u64(r.back(), lead_inv, p_);
            size_t k = r.size() - m.c_.size();
            if (f != 0)
                for (size_t i = 0; i < m.c_.size(); ++i)
                    r[k + i] = (r[k + i] + p_ - mulmod_u64(f, m.c_[i], p_)) % p_;
            r.pop_back();
        }
        return {p_, std::move(r)};
    }

    friend ModPoly gcd(ModPoly a, ModPoly b) {
        while (!b.is_zero()) {
            ModPoly r = a.rem(b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    /// x^e modulo this polynomial, by repeated squaring.
    ModPoly pow_x_mod(uint64_t e) const {
        ModPoly base = ModPoly(p_, {0, 1}).rem(*this);
        ModPoly acc = ModPoly(p_, {1}).rem(*this);
        while (e) {
            if (e & 1) acc = (acc * base).rem(*this);
            base = (base * base).rem(*this);
            e >>= 1;
        }
        return acc;
    }

private:
    uint64_t p_;
    std::vector<uint64_t> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const ModPoly& o) const {
        if (p_ != o.p_) throw std::invalid_argument("ModPoly: modulus mismatch");
    }
};

/// True iff F mod p has a root in F_p, decided by deg gcd(x^p - x mod F, F) >= 1.
/// Requires p prime and p not dividing the leading coefficient of F.
inline bool modpoly_root_exists(const std::vector<Integer>& coeffs, uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("modpoly_root_exists: p not prime");
    if (coeffs.empty()) throw std::invalid_argument("modpoly_root_exists: empty polynomial");
    if (coeffs.back() % Integer(static_cast<unsigned long>(p)) == 0)
        throw std::invalid_argument("modpoly_root_exists: bad prime");
    ModPoly F = ModPoly::from_integers(p, coeffs);
    if (F.degree() < 1) return false;
    ModPoly xp = F.pow_x_mod(p);
    ModPoly diff = xp - ModPoly(p, {0, 1}).rem(F);
    return gcd(F, diff).degree() >= 1;
}

/// Overload for a univariate MPoly with integer coefficients.
inline bool modpoly_root_exists(const MPoly& f, const std::string& var, uint64_t p) {
    auto cs = f.as_univariate(var);
    std::vector<Integer> zs;
    zs.reserve(cs.size());
    for (const auto& c : cs) {
        if (!c.is_integer()) throw std::invalid_argument("modpoly_root_exists: non-integer coefficient");
        zs.push_back(c.numerator());
    }
    return modpoly_root_exists(zs, p);
}

}  // namespace dtk

#endif
