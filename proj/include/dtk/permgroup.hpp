#ifndef DTK_PERMGROUP_HPP
#define DTK_PERMGROUP_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "dtk/perm.hpp"
#include "dtk/rational.hpp"

namespace dtk {

/// Permutation group given by generators, with a deterministic Schreier-Sims
/// stabilizer chain. Generators found at level j stabilize the base points of
/// all shallower levels, so the group at level i is generated by everything
/// stored at levels >= i; construction verifies, bottom-up, that every
/// Schreier generator of every level sifts to the identity, which certifies
/// the chain. Orbits grow breadth-first with generators in a fixed order, so
/// identical input builds the identical chain.
class PermGroup {
public:
    PermGroup() : degree_(0), order_(1) {}

    explicit PermGroup(int degree, std::vector<Perm> generators = {})
        : degree_(degree), generators_(std::move(generators)) {
        for (const auto& g : generators_)
            if (g.degree() != degree_) throw std::invalid_argument("PermGroup: degree mismatch");
        build_chain();
    }

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const Integer& order() const { return order_; }

    bool contains(const Perm& x) const {
        if (x.degree() != degree_) throw std::invalid_argument("PermGroup: degree mismatch");
        return sift(x).is_identity();
    }

    /// Residue of x after sifting through the chain; identity iff member.
    Perm sift(const Perm& x) const {
        Perm g = x;
        for (const auto& lvl : levels_) {
            int32_t p = g(lvl.base);
            const auto& t = lvl.transversal[static_cast<size_t>(p - 1)];
            if (!t.has_value()) return g;
            g = compose(t->inverse(), g);
        }
        return g;
    }

    /// Orbit of a point under the group generators (breadth-first), plus the
    /// stabilizer index |G : Stab(point)| = |orbit|.
    std::pair<std::vector<int32_t>, Integer> orbit_and_stabilizer_index(int32_t point) const {
        if (point < 1 || point > degree_) throw std::out_of_range("PermGroup: point out of range");
        std::vector<int32_t> orbit{point};
        std::vector<bool> in_orbit(static_cast<size_t>(degree_), false);
        in_orbit[static_cast<size_t>(point - 1)] = true;
        for (size_t i = 0; i < orbit.size(); ++i) {
            for (const auto& g : generators_) {
                int32_t q = g(orbit[i]);
                if (!in_orbit[static_cast<size_t>(q - 1)]) {
                    in_orbit[static_cast<size_t>(q - 1)] = true;
                    orbit.push_back(q);
                }
            }
        }
        return {orbit, Integer(static_cast<unsigned long>(orbit.size()))};
    }

    /// All elements, in a deterministic order (products of transversal
    /// representatives, outermost level varying slowest). Guarded by max_count.
    std::vector<Perm> elements(size_t max_count = 100000) const {
        if (order_ > Integer(static_cast<unsigned long>(max_count)))
            throw std::domain_error("PermGroup: order exceeds enumeration bound");
        std::vector<Perm> out{Perm::identity(degree_)};
        for (size_t li = levels_.size(); li-- > 0;) {
            const auto& lvl = levels_[li];
            std::vector<Perm> next;
            next.reserve(out.size() * lvl.orbit.size());
            for (int32_t p : lvl.orbit) {
                const Perm& rep = *lvl.transversal[static_cast<size_t>(p - 1)];
                for (const auto& e : out) next.push_back(compose(rep, e));
            }
            out = std::move(next);
        }
        return out;
    }

private:
    struct Level {
        int32_t base = 0;
        std::vector<Perm> added;                        // generators first placed here
        std::vector<int32_t> orbit;                     // BFS order
        std::vector<std::optional<Perm>> transversal;   // rep u with u(base) = point
    };

    int degree_;
    std::vector<Perm> generators_;
    std::vector<Level> levels_;
    Integer order_;

    std::vector<Perm> effective_gens(size_t level) const {
        std::vector<Perm> out;
        for (size_t j = level; j < levels_.size(); ++j)
            out.insert(out.end(), levels_[j].added.begin(), levels_[j].added.end());
        return out;
    }

    void recompute_orbit(size_t li, const std::vector<Perm>& gens) {
        Level& lvl = levels_[li];
        lvl.orbit.assign(1, lvl.base);
        lvl.transversal.assign(static_cast<size_t>(degree_), std::nullopt);
        lvl.transversal[static_cast<size_t>(lvl.base - 1)] = Perm::identity(degree_);
        for (size_t i = 0; i < lvl.orbit.size(); ++i) {
            for (const auto& g : gens) {
                int32_t q = g(lvl.orbit[i]);
                if (!lvl.transversal[static_cast<size_t>(q - 1)].has_value()) {
                    lvl.transversal[static_cast<size_t>(q - 1)] =
                        compose(g, *lvl.transversal[static_cast<size_t>(lvl.orbit[i] - 1)]);
                    lvl.orbit.push_back(q);
                }
            }
        }
    }

    /// Sift from level `from` using only levels with verified transversals.
    std::pair<Perm, size_t> strip(const Perm& x, size_t from) const {
        Perm g = x;
        for (size_t i = from; i < levels_.size(); ++i) {
            int32_t p = g(levels_[i].base);
            const auto& t = levels_[i].transversal[static_cast<size_t>(p - 1)];
            if (!t.has_value()) return {g, i};
            g = compose(t->inverse(), g);
            if (g.is_identity()) return {g, levels_.size()};
        }
        return {g, levels_.size()};
    }

    void build_chain() {
        levels_.clear();
        order_ = 1;
        int32_t first_base = 0;
        for (const auto& g : generators_) {
            int32_t m = g.min_moved_point();
            if (m != 0 && (first_base == 0 || m < first_base)) first_base = m;
        }
        if (first_base == 0) return;  // identity group

        levels_.push_back(Level{first_base, {}, {}, {}});
        for (const auto& g : generators_)
            if (!g.is_identity()) levels_[0].added.push_back(g);

        // bottom-up verification with restarts: levels deeper than i stay
        // verified while level i is processed
        size_t i = 0;
        while (true) {
            std::vector<Perm> gens = effective_gens(i);
            recompute_orbit(i, gens);
            std::optional<size_t> restart;
            const size_t li = i;
            for (size_t oi = 0; !restart && oi < levels_[li].orbit.size(); ++oi) {
                int32_t p = levels_[li].orbit[oi];
                Perm up = *levels_[li].transversal[static_cast<size_t>(p - 1)];
                for (const auto& s : gens) {
                    Perm uq = *levels_[li].transversal[static_cast<size_t>(s(p) - 1)];
                    Perm schreier = compose(uq.inverse(), compose(s, up));
                    if (schreier.is_identity()) continue;
                    auto [residue, at] = strip(schreier, li + 1);
                    if (residue.is_identity()) continue;
                    if (at == levels_.size())
                        levels_.push_back(Level{residue.min_moved_point(), {}, {}, {}});
                    levels_[at].added.push_back(residue);
                    restart = at;
                    break;
                }
            }
            if (restart) {
                i = *restart;
                continue;
            }
            if (i == 0) break;
            --i;
        }

        order_ = 1;
        for (const auto& lvl : levels_) order_ *= Integer(static_cast<unsigned long>(lvl.orbit.size()));
    }
};

}  // namespace dtk

#endif
