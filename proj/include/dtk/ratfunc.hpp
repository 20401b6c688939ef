#ifndef DTK_RATFUNC_HPP
#define DTK_RATFUNC_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "dtk/mpoly.hpp"
#include "dtk/poly_algebra.hpp"

namespace dtk {

/// Univariate rational function num/den, normalized so that
/// gcd(num, den) = 1 and den is monic.
class RationalFunction {
public:
    RationalFunction() : RationalFunction(MPoly::zero(), MPoly::constant(Rational(1)), "u") {}

    RationalFunction(MPoly num, MPoly den, std::string var = "u") : var_(std::move(var)) {
        auto n = num.as_univariate(var_);
        auto d = den.as_univariate(var_);
        upoly::trim(n);
        upoly::trim(d);
        if (d.empty()) throw std::domain_error("RationalFunction: zero denominator");
        upoly::Poly g = upoly::gcd(n, d);
        if (upoly::deg(g) > 0) {
            n = upoly::divrem(n, g).first;
            d = upoly::divrem(d, g).first;
        }
        if (d.back() != Rational(1)) {
            Rational inv = d.back().inverse();
            n = upoly::scale(n, inv);
            d = upoly::scale(d, inv);
        }
        num_ = MPoly::from_univariate(var_, n);
        den_ = MPoly::from_univariate(var_, d);
    }

    static RationalFunction from_poly(const MPoly& p, const std::string& var = "u") {
        return {p, MPoly::constant(Rational(1)), var};
    }

    static RationalFunction constant(const Rational& c, const std::string& var = "u") {
        return from_poly(MPoly::constant(c), var);
    }

    static RationalFunction parse(std::string_view num, std::string_view den,
                                  const std::string& var = "u") {
        return {MPoly::parse(num), MPoly::parse(den), var};
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const std::string& var() const { return var_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.var_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, a.var_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_, a.var_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_, a.var_};
    }
    RationalFunction operator-() const { return {-num_, den_, var_}; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

private:
    std::string var_;
    MPoly num_, den_;
};

/// Element a0 + a1*v of the quadratic extension Q(u)[v]/(v^2 - g(u)).
/// Multiplication rewrites every v^2 as g(u); division goes through the
/// conjugate, whose norm a0^2 - a1^2*g is nonzero whenever g is not a square.
class QuadExtElem {
public:
    QuadExtElem(RationalFunction a0, RationalFunction a1, MPoly modulus)
        : a0_(std::move(a0)), a1_(std::move(a1)), g_(std::move(modulus)) {}

    static QuadExtElem from_base(const RationalFunction& a0, const MPoly& modulus) {
        return {a0, RationalFunction::constant(Rational(0), a0.var()), modulus};
    }

    static QuadExtElem v_generator(const MPoly& modulus, const std::string& var = "u") {
        return {RationalFunction::constant(Rational(0), var),
                RationalFunction::constant(Rational(1), var), modulus};
    }

    const RationalFunction& a0() const { return a0_; }
    const RationalFunction& a1() const { return a1_; }
    const MPoly& modulus() const { return g_; }
    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }

    QuadExtElem conjugate() const { return {a0_, -a1_, g_}; }

    /// a0^2 - a1^2 * g, an element of the base field.
    RationalFunction norm() const {
        RationalFunction g = RationalFunction::from_poly(g_, a0_.var());
        return a0_ * a0_ - a1_ * a1_ * g;
    }

    friend QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y) {
        x.check_same(y);
        return {x.a0_ + y.a0_, x.a1_ + y.a1_, x.g_};
    }
    friend QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y) {
        x.check_same(y);
        return {x.a0_ - y.a0_, x.a1_ - y.a1_, x.g_};
    }
    friend QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y) {
        x.check_same(y);
        RationalFunction g = RationalFunction::from_poly(x.g_, x.a0_.var());
        return {x.a0_ * y.a0_ + x.a1_ * y.a1_ * g, x.a0_ * y.a1_ + x.a1_ * y.a0_, x.g_};
    }
    friend QuadExtElem operator/(const QuadExtElem& x, const QuadExtElem& y) {
        x.check_same(y);
        if (y.is_zero()) throw std::domain_error("QuadExtElem: division by zero");
        RationalFunction n = y.norm();
        if (n.is_zero()) throw std::logic_error("QuadExtElem: zero norm for nonzero element");
        QuadExtElem t = x * y.conjugate();
        return {t.a0_ / n, t.a1_ / n, x.g_};
    }

    friend bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
        return x.a0_ == y.a0_ && x.a1_ == y.a1_ && x.g_ == y.g_;
    }
    friend bool operator!=(const QuadExtElem& x, const QuadExtElem& y) { return !(x == y); }

private:
    RationalFunction a0_, a1_;
    MPoly g_;

    void check_same(const QuadExtElem& o) const {
        if (!(g_ == o.g_)) throw std::invalid_argument("QuadExtElem: modulus mismatch");
    }
};

}  // namespace dtk

#endif
