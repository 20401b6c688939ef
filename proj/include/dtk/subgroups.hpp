#ifndef DTK_SUBGROUPS_HPP
#define DTK_SUBGROUPS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dtk/perm.hpp"
#include "dtk/permgroup.hpp"

namespace dtk {

/// Fully enumerated ambient group with multiplication and inverse tables,
/// elements sorted by image vector so indices are deterministic. All subgroup
/// search below runs in this index space.
class GroupTable {
public:
    static GroupTable build(const PermGroup& g, size_t max_order = 1000) {
        GroupTable t;
        t.degree_ = g.degree();
        t.elems_ = g.elements(max_order);
        std::sort(t.elems_.begin(), t.elems_.end());
        size_t m = t.elems_.size();
        if (m > 65535) throw std::domain_error("GroupTable: too many elements");
        std::unordered_map<Perm, uint16_t, PermHash> index;
        index.reserve(m * 2);
        for (size_t i = 0; i < m; ++i) index.emplace(t.elems_[i], static_cast<uint16_t>(i));
        t.mult_.assign(m, std::vector<uint16_t>(m));
        t.inv_.resize(m);
        for (size_t i = 0; i < m; ++i) {
            t.inv_[i] = index.at(t.elems_[i].inverse());
            for (size_t j = 0; j < m; ++j)
                t.mult_[i][j] = index.at(compose(t.elems_[i], t.elems_[j]));
        }
        return t;
    }

    size_t size() const { return elems_.size(); }
    int degree() const { return degree_; }
    const Perm& elem(uint16_t i) const { return elems_[i]; }
    uint16_t mult(uint16_t a, uint16_t b) const { return mult_[a][b]; }
    uint16_t inv(uint16_t a) const { return inv_[a]; }
    uint16_t conj(uint16_t s, uint16_t h) const { return mult_[mult_[s][h]][inv_[s]]; }

    /// Subgroup generated by seed element ids; sorted id list.
    std::vector<uint16_t> close(const std::vector<uint16_t>& seed) const {
        std::vector<bool> in(size(), false);
        std::vector<uint16_t> list{0};
        in[0] = true;
        for (size_t i = 0; i < list.size(); ++i) {
            for (uint16_t s : seed) {
                uint16_t v = mult_[list[i]][s];
                if (!in[v]) {
                    in[v] = true;
                    list.push_back(v);
                }
            }
        }
        std::sort(list.begin(), list.end());
        return list;
    }

    /// Lexicographically least sorted element-id tuple over all conjugations
    /// by the ambient group; also reports one conjugator attaining it.
    std::pair<std::vector<uint16_t>, uint16_t> canonical_key(const std::vector<uint16_t>& sub) const {
        std::vector<uint16_t> best, cur;
        uint16_t best_s = 0;
        for (size_t s = 0; s < size(); ++s) {
            cur.clear();
            for (uint16_t h : sub) cur.push_back(conj(static_cast<uint16_t>(s), h));
            std::sort(cur.begin(), cur.end());
            if (best.empty() || cur < best) {
                best = cur;
                best_s = static_cast<uint16_t>(s);
            }
        }
        return {best, best_s};
    }

    /// Order of the normalizer of sub in the ambient group.
    size_t normalizer_order(const std::vector<uint16_t>& sub) const {
        std::vector<bool> in(size(), false);
        for (uint16_t h : sub) in[h] = true;
        size_t count = 0;
        for (size_t s = 0; s < size(); ++s) {
            bool ok = true;
            for (uint16_t h : sub) {
                if (!in[conj(static_cast<uint16_t>(s), h)]) { ok = false; break; }
            }
            if (ok) ++count;
        }
        return count;
    }

private:
    int degree_ = 0;
    std::vector<Perm> elems_;
    std::vector<uint16_t> inv_;
    std::vector<std::vector<uint16_t>> mult_;
};

/// One conjugacy class of subgroups: the canonical representative (element
/// ids in the ambient table) and a generating set for it.
struct SubgroupClass {
    std::vector<uint16_t> elements;   // sorted; the canonical key
    std::vector<uint16_t> gens;
    size_t order() const { return elements.size(); }
};

namespace detail {
struct IdVecHash {
    size_t operator()(const std::vector<uint16_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint16_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};
}  // namespace detail

/// All conjugacy classes of subgroups of the ambient group, by closure of the
/// extension process: seed with cyclic subgroups, extend each class
/// representative by every outside element, deduplicate by canonical key.
/// Output sorted by (order, canonical key); deterministic.
inline std::vector<SubgroupClass> subgroup_conjugacy_classes(const GroupTable& T) {
    std::unordered_set<std::vector<uint16_t>, detail::IdVecHash> seen;
    std::vector<SubgroupClass> classes;
    std::unordered_set<std::vector<uint16_t>, detail::IdVecHash> class_keys;

    auto register_subgroup = [&](const std::vector<uint16_t>& sub, std::vector<uint16_t> gens) {
        if (!seen.insert(sub).second) return;
        auto [key, s] = T.canonical_key(sub);
        seen.insert(key);
        if (class_keys.insert(key).second) {
            // conjugate the generating set along with the representative
            std::vector<uint16_t> cgens;
            cgens.reserve(gens.size());
            for (uint16_t g : gens) cgens.push_back(T.conj(s, g));
            std::sort(cgens.begin(), cgens.end());
            cgens.erase(std::unique(cgens.begin(), cgens.end()), cgens.end());
            classes.push_back(SubgroupClass{key, std::move(cgens)});
        }
    };

    for (size_t g = 0; g < T.size(); ++g)
        register_subgroup(T.close({static_cast<uint16_t>(g)}), {static_cast<uint16_t>(g)});

    for (size_t qi = 0; qi < classes.size(); ++qi) {
        // copy: classes may reallocate while we extend
        SubgroupClass rep = classes[qi];
        std::vector<bool> in(T.size(), false);
        for (uint16_t h : rep.elements) in[h] = true;
        for (size_t g = 0; g < T.size(); ++g) {
            if (in[g]) continue;
            std::vector<uint16_t> seed = rep.gens;
            seed.push_back(static_cast<uint16_t>(g));
            auto sub = T.close(seed);
            register_subgroup(sub, std::move(seed));
        }
    }

    std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return classes;
}

/// Convenience entry point with the desk-scale bound: groups of order above
/// 1000 need the extended (research-scale) enumeration, which this toolkit
/// does not attempt.
inline std::vector<SubgroupClass> subgroup_conjugacy_classes(const PermGroup& g,
                                                             GroupTable* table_out = nullptr) {
    if (g.order() > 1000) throw std::domain_error("subgroup_conjugacy_classes: extended mode required");
    GroupTable T = GroupTable::build(g);
    auto classes = subgroup_conjugacy_classes(T);
    if (table_out) *table_out = std::move(T);
    return classes;
}

/// Coarse isomorphism invariants: order, abelianness, exponent, element-order
/// multiset, center order. tag() names the group when these are decisive.
struct IsoFingerprint {
    size_t order = 0;
    bool abelian = false;
    uint64_t exponent = 1;
    std::map<uint64_t, size_t> order_multiset;
    size_t center_order = 0;

    std::string tag() const {
        if (order == 4 && abelian && exponent == 2) return "Z/2 x Z/2";
        if (order == 25 && abelian && exponent == 5) return "Z/5 x Z/5";
        if (order == 30 && !abelian && center_order == 5) return "S3 x Z/5";
        return "undecided";
    }
};

inline IsoFingerprint iso_fingerprint(const std::vector<Perm>& elements,
                                      const std::vector<Perm>& gens) {
    IsoFingerprint fp;
    fp.order = elements.size();
    fp.abelian = true;
    for (size_t i = 0; i < gens.size() && fp.abelian; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) {
                fp.abelian = false;
                break;
            }
    for (const auto& e : elements) {
        uint64_t o = e.order();
        fp.order_multiset[o]++;
        fp.exponent = std::lcm(fp.exponent, o);
    }
    for (const auto& e : elements) {
        bool central = true;
        for (const auto& g : gens)
            if (compose(e, g) != compose(g, e)) { central = false; break; }
        if (central) ++fp.center_order;
    }
    return fp;
}

inline IsoFingerprint iso_fingerprint(const PermGroup& h, size_t max_order = 10000) {
    return iso_fingerprint(h.elements(max_order), h.generators());
}

}  // namespace dtk

#endif
