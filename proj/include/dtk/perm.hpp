#ifndef DTK_PERM_HPP
#define DTK_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtk {

/// Permutation of {1,...,N}, stored as the image vector (1-based values).
/// compose(a,b) applies b first, then a; this convention is fixed everywhere.
class Perm {
public:
    Perm() = default;

    explicit Perm(int degree) : img_(static_cast<size_t>(degree)) {
        std::iota(img_.begin(), img_.end(), 1);
    }

    explicit Perm(std::vector<int32_t> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int32_t v : img_) {
            if (v < 1 || v > static_cast<int32_t>(img_.size()) || seen[static_cast<size_t>(v - 1)])
                throw std::invalid_argument("Perm: image vector is not a permutation");
            seen[static_cast<size_t>(v - 1)] = true;
        }
    }

    static Perm identity(int degree) { return Perm(degree); }

    int degree() const { return static_cast<int>(img_.size()); }
    int32_t operator()(int32_t point) const { return img_[static_cast<size_t>(point - 1)]; }
    const std::vector<int32_t>& images() const { return img_; }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int32_t>(i + 1)) return false;
        return true;
    }

    /// Smallest moved point, or 0 for the identity.
    int32_t min_moved_point() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int32_t>(i + 1)) return static_cast<int32_t>(i + 1);
        return 0;
    }

    friend Perm compose(const Perm& a, const Perm& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
        std::vector<int32_t> r(a.img_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.img_[static_cast<size_t>(b.img_[i] - 1)];
        Perm p;
        p.img_ = std::move(r);
        return p;
    }

    Perm inverse() const {
        std::vector<int32_t> r(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) r[static_cast<size_t>(img_[i] - 1)] = static_cast<int32_t>(i + 1);
        Perm p;
        p.img_ = std::move(r);
        return p;
    }

    Perm power(int64_t e) const {
        Perm base = e < 0 ? inverse() : *this;
        if (e < 0) e = -e;
        Perm acc = identity(degree());
        while (e) {
            if (e & 1) acc = compose(acc, base);
            base = compose(base, base);
            e >>= 1;
        }
        return acc;
    }

    /// Order = lcm of cycle lengths.
    uint64_t order() const {
        std::vector<bool> seen(img_.size(), false);
        uint64_t ord = 1;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            uint64_t len = 0;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = static_cast<size_t>(img_[j] - 1);
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    std::vector<std::vector<int32_t>> cycles() const {
        std::vector<std::vector<int32_t>> out;
        std::vector<bool> seen(img_.size(), false);
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int32_t>(i + 1)) continue;
            std::vector<int32_t> cyc;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                cyc.push_back(static_cast<int32_t>(j + 1));
                j = static_cast<size_t>(img_[j] - 1);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    /// Cycle notation with fixed points omitted, e.g. "(1,4,2,5,3)(6,9,7,10,8)".
    /// The identity prints as "()".
    std::string str() const {
        auto cyc = cycles();
        if (cyc.empty()) return "()";
        std::ostringstream os;
        for (const auto& c : cyc) {
            os << "(";
            for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
            os << ")";
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.str(); }

    /// Parses cycle notation; degree must be given since fixed points are omitted.
    static Perm parse(std::string_view text, int degree) {
        std::vector<int32_t> img(static_cast<size_t>(degree));
        std::iota(img.begin(), img.end(), 1);
        size_t pos = 0;
        auto skip = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        skip();
        while (pos < text.size()) {
            if (text[pos] != '(') throw std::invalid_argument("Perm: expected '('");
            ++pos;
            std::vector<int32_t> cyc;
            skip();
            while (pos < text.size() && text[pos] != ')') {
                size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (start == pos) throw std::invalid_argument("Perm: expected point number");
                int32_t v = std::stoi(std::string(text.substr(start, pos - start)));
                if (v < 1 || v > degree) throw std::invalid_argument("Perm: point out of range");
                cyc.push_back(v);
                skip();
                if (pos < text.size() && text[pos] == ',') { ++pos; skip(); }
            }
            if (pos == text.size()) throw std::invalid_argument("Perm: expected ')'");
            ++pos;
            for (size_t i = 0; i < cyc.size(); ++i) {
                int32_t from = cyc[i], to = cyc[(i + 1) % cyc.size()];
                if (!cyc.empty() && img[static_cast<size_t>(from - 1)] != from && cyc.size() > 1)
                    throw std::invalid_argument("Perm: point repeated across cycles");
                img[static_cast<size_t>(from - 1)] = to;
            }
            skip();
        }
        return Perm(std::move(img));
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (int32_t v : img_) {
            h ^= static_cast<size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::vector<int32_t> img_;
};

struct PermHash {
    size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace dtk

#endif
