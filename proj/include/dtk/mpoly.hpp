#ifndef DTK_MPOLY_HPP
#define DTK_MPOLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtk/rational.hpp"

namespace dtk {

using ExpVec = std::vector<uint32_t>;

/// Graded-lex, larger first: higher total degree wins, ties broken
/// lexicographically on the exponent vector (variables in sorted name order).
struct GrlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        uint64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Sparse multivariate polynomial over Rational with named variables.
/// Terms are kept in canonical graded-lex order with no zero coefficients,
/// so equality, printing and hashing are all structural.
class MPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrlexDesc>;

    MPoly() = default;

    static MPoly zero(std::vector<std::string> vars = {}) {
        MPoly p;
        p.vars_ = normalize_vars(std::move(vars));
        return p;
    }

    static MPoly constant(const Rational& c, std::vector<std::string> vars = {}) {
        MPoly p = zero(std::move(vars));
        if (!c.is_zero()) p.terms_[ExpVec(p.vars_.size(), 0)] = c;
        return p;
    }

    static MPoly variable(const std::string& name, std::vector<std::string> vars = {}) {
        vars.push_back(name);
        MPoly p = zero(std::move(vars));
        ExpVec e(p.vars_.size(), 0);
        e[p.var_index(name)] = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    /// Single-term polynomial over an already-normalized variable list.
    static MPoly single_term(const std::vector<std::string>& vars, ExpVec e, const Rational& c) {
        MPoly p;
        p.vars_ = vars;
        if (e.size() != vars.size()) throw std::invalid_argument("single_term: arity mismatch");
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (auto e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }

    /// Value of a constant polynomial.
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("MPoly: not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    int var_index(const std::string& name) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) return -1;
        return static_cast<int>(it - vars_.begin());
    }

    int64_t degree(const std::string& var) const {
        int idx = var_index(var);
        if (idx < 0) return terms_.empty() ? -1 : 0;
        int64_t d = terms_.empty() ? -1 : 0;
        for (const auto& [e, c] : terms_) d = std::max<int64_t>(d, e[idx]);
        return d;
    }

    int64_t total_degree() const {
        int64_t d = -1;
        for (const auto& [e, c] : terms_) {
            int64_t t = 0;
            for (auto x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    bool has_integer_coefficients() const {
        for (const auto& [e, c] : terms_)
            if (!c.is_integer()) return false;
        return true;
    }

    /// Variables actually occurring with a positive exponent.
    std::vector<std::string> used_vars() const {
        std::vector<std::string> out;
        for (size_t i = 0; i < vars_.size(); ++i) {
            for (const auto& [e, c] : terms_)
                if (e[i] > 0) { out.push_back(vars_[i]); break; }
        }
        return out;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        auto [x, y] = aligned(a, b);
        for (const auto& [e, c] : y.terms_) x.add_term(e, c);
        return x;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        auto [x, y] = aligned(a, b);
        for (const auto& [e, c] : y.terms_) x.add_term(e, -c);
        return x;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        auto [x, y] = aligned(a, b);
        MPoly r = zero_like(x);
        ExpVec e(r.vars_.size());
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend MPoly operator*(const MPoly& a, const Rational& s) {
        MPoly r = a;
        if (s.is_zero()) { r.terms_.clear(); return r; }
        for (auto& [e, c] : r.terms_) c = c * s;
        return r;
    }
    friend MPoly operator*(const Rational& s, const MPoly& a) { return a * s; }

    MPoly pow(uint32_t k) const {
        MPoly r = constant(Rational(1), vars_);
        MPoly b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = (k >>= 1) ? b * b : b;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Coefficient of var^k, as a polynomial over the same variable list.
    MPoly coeff_of(const std::string& var, uint32_t k) const {
        int idx = var_index(var);
        MPoly r = zero_like(*this);
        if (idx < 0) {
            if (k == 0) return *this;
            return r;
        }
        for (const auto& [e, c] : terms_) {
            if (e[idx] == k) {
                ExpVec e2 = e;
                e2[idx] = 0;
                r.terms_[e2] = c;
            }
        }
        return r;
    }

    /// Coefficients in var, ascending from degree 0. Result polynomials keep
    /// the full variable list.
    std::vector<MPoly> coefficients_in(const std::string& var) const {
        int64_t d = degree(var);
        std::vector<MPoly> out;
        for (int64_t k = 0; k <= std::max<int64_t>(d, 0); ++k) out.push_back(coeff_of(var, static_cast<uint32_t>(k)));
        if (d < 0) out.assign(1, zero_like(*this));
        return out;
    }

    /// Rebuild from coefficients-in-var (ascending).
    static MPoly from_coefficients(const std::string& var, const std::vector<MPoly>& coeffs) {
        MPoly x = variable(var);
        MPoly r, xp = constant(Rational(1));
        for (const auto& c : coeffs) {
            r = r + c * xp;
            xp = xp * x;
        }
        return r;
    }

    MPoly derivative(const std::string& var) const {
        int idx = var_index(var);
        MPoly r = zero_like(*this);
        if (idx < 0) return r;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            ExpVec e2 = e;
            e2[idx] -= 1;
            r.add_term(e2, c * Rational(static_cast<long>(e[idx])));
        }
        return r;
    }

    /// Substitute var := value, keeping the variable list.
    MPoly eval_at(const std::string& var, const Rational& value) const {
        int idx = var_index(var);
        if (idx < 0) return *this;
        MPoly r = zero_like(*this);
        for (const auto& [e, c] : terms_) {
            ExpVec e2 = e;
            uint32_t k = e2[idx];
            e2[idx] = 0;
            r.add_term(e2, c * value.pow(k));
        }
        return r;
    }

    /// Substitute var := p (polynomial composition), via Horner in var.
    MPoly substitute(const std::string& var, const MPoly& p) const {
        int idx = var_index(var);
        if (idx < 0) return *this;
        auto cs = coefficients_in(var);
        MPoly r = zero_like(*this);
        for (size_t k = cs.size(); k-- > 0;) r = r * p + cs[k];
        return r;
    }

    /// Full evaluation; every used variable must be assigned.
    Rational eval(const std::map<std::string, Rational>& values) const {
        Rational s(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = values.find(vars_[i]);
                if (it == values.end())
                    throw std::invalid_argument("MPoly::eval: missing value for " + vars_[i]);
                t = t * it->second.pow(e[i]);
            }
            s += t;
        }
        return s;
    }

    /// Dense coefficient list in var, ascending; fails if any other variable occurs.
    std::vector<Rational> as_univariate(const std::string& var) const {
        int idx = var_index(var);
        std::vector<Rational> out(static_cast<size_t>(std::max<int64_t>(degree(var), 0)) + 1, Rational(0));
        for (const auto& [e, c] : terms_) {
            for (size_t i = 0; i < e.size(); ++i)
                if (static_cast<int>(i) != idx && e[i] != 0)
                    throw std::domain_error("MPoly: not univariate in " + var);
            out[idx < 0 ? 0 : e[idx]] = c;
        }
        while (out.size() > 1 && out.back().is_zero()) out.pop_back();
        return out;
    }

    static MPoly from_univariate(const std::string& var, const std::vector<Rational>& coeffs) {
        MPoly x = variable(var);
        MPoly r, xp = constant(Rational(1));
        for (const auto& c : coeffs) {
            r = r + constant(c) * xp;
            xp = xp * x;
        }
        return r;
    }

    /// Canonical text form; parseable back by parse().
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            std::string mon = monomial_str(e);
            if (mon.empty()) {
                os << a.str();
            } else {
                if (a != Rational(1)) os << a.str() << "*";
                os << mon;
            }
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

    static MPoly parse(std::string_view text);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    static std::vector<std::string> normalize_vars(std::vector<std::string> vars) {
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    }

    static MPoly zero_like(const MPoly& p) {
        MPoly r;
        r.vars_ = p.vars_;
        return r;
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Remap both operands onto the union of their variable lists.
    static std::pair<MPoly, MPoly> aligned(const MPoly& a, const MPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> u = a.vars_;
        u.insert(u.end(), b.vars_.begin(), b.vars_.end());
        u = normalize_vars(std::move(u));
        return {a.remapped(u), b.remapped(u)};
    }

    MPoly remapped(const std::vector<std::string>& u) const {
        MPoly r;
        r.vars_ = u;
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(u.begin(), u.end(), vars_[i]);
            pos[i] = static_cast<size_t>(it - u.begin());
        }
        for (const auto& [e, c] : terms_) {
            ExpVec e2(u.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) e2[pos[i]] = e[i];
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }

    std::string monomial_str(const ExpVec& e) const {
        std::string s;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars_[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

    friend class PolyParser;
};

/// Recursive-descent parser for the polynomial text syntax: integer or a/b
/// coefficients, ^ powers, * optional (juxtaposition multiplies), variables
/// are identifiers, parentheses group.
class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    MPoly run() {
        MPoly p = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("poly parse: trailing input at offset " + std::to_string(pos_));
        return p;
    }

private:
    std::string_view s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    MPoly expr() {
        MPoly acc = MPoly::zero();
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++pos_;
        }
        acc = acc + term() * Rational(sign);
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                MPoly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                MPoly d = factor();
                if (!d.is_constant() || d.is_zero())
                    throw std::invalid_argument("poly parse: '/' needs a nonzero constant divisor");
                acc = acc * d.constant_value().inverse();
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly factor() {
        MPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) throw std::invalid_argument("poly parse: missing exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > 100000) throw std::invalid_argument("poly parse: exponent too large");
            base = base.pow(static_cast<uint32_t>(e));
        }
        return base;
    }

    MPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (peek() != ')') throw std::invalid_argument("poly parse: expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MPoly::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return MPoly::variable(std::string(s_.substr(start, pos_ - start)));
        }
        throw std::invalid_argument("poly parse: unexpected character at offset " + std::to_string(pos_));
    }
};

inline MPoly MPoly::parse(std::string_view text) { return PolyParser(text).run(); }

}  // namespace dtk

#endif
