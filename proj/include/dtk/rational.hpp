#ifndef DTK_RATIONAL_HPP
#define DTK_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmp.h>
#include <gmpxx.h>

namespace dtk {

using Integer = mpz_class;

/// Exact rational number. Always stored reduced with positive denominator,
/// so equality is structural and values hash consistently.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<long>(n)) {}
    Rational(int n) : q_(static_cast<long>(n)) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "a" or "a/b" with optional sign.
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(Integer(std::string(s)));
            Integer n{std::string(s.substr(0, slash))};
            Integer d{std::string(s.substr(slash + 1))};
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        }
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { Rational r; r.q_ = -q_; return r; }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational pow(unsigned long e) const {
        Rational r;
        mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), e);
        mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), e);
        return r;
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r; r.q_ = 1 / q_; return r;
    }

    double to_double() const { return q_.get_d(); }

    /// Bit size of numerator plus denominator; the orbit-iteration height guard.
    size_t bit_size() const {
        return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
    }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        auto mix = [&h](const mpz_class& z) {
            size_t n = mpz_size(z.get_mpz_t());
            for (size_t i = 0; i < n; ++i) {
                h ^= static_cast<size_t>(mpz_getlimbn(z.get_mpz_t(), i));
                h *= 1099511628211ull;
            }
            h ^= static_cast<size_t>(sgn(z) + 2);
            h *= 1099511628211ull;
        };
        mix(q_.get_num());
        mix(q_.get_den());
        return h;
    }

private:
    mpq_class q_;
};

inline Integer int_pow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/// Exact n-th root test: returns true and sets root if v is a perfect n-th power.
inline bool perfect_nth_root(const Integer& v, unsigned long n, Integer& root) {
    if (v < 0 && n % 2 == 0) return false;
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), n);
    if (exact) root = r;
    return exact != 0;
}

/// True iff q = (a/b)^n for some rational a/b; reduced form makes this
/// equivalent to both numerator and denominator being perfect n-th powers.
inline bool is_perfect_nth_power(const Rational& q, unsigned long n) {
    Integer r;
    return perfect_nth_root(q.numerator(), n, r) && perfect_nth_root(q.denominator(), n, r);
}

}  // namespace dtk

template <>
struct std::hash<dtk::Rational> {
    size_t operator()(const dtk::Rational& r) const { return r.hash(); }
};

#endif
