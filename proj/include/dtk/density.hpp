#ifndef DTK_DENSITY_HPP
#define DTK_DENSITY_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "dtk/dynatomic.hpp"
#include "dtk/modpoly.hpp"
#include "dtk/mpoly.hpp"
#include "dtk/permgroup.hpp"
#include "dtk/poly_algebra.hpp"

namespace dtk {

/// All primes up to bound, ascending.
inline std::vector<uint32_t> prime_sieve(uint32_t bound) {
    if (bound > 100000000u) throw std::invalid_argument("prime_sieve: bound above 10^8");
    std::vector<uint32_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> comp(static_cast<size_t>(bound) + 1, false);
    for (uint32_t p = 2; p <= bound; ++p) {
        if (comp[p]) continue;
        primes.push_back(p);
        for (uint64_t q = static_cast<uint64_t>(p) * p; q <= bound; q += p) comp[static_cast<size_t>(q)] = true;
    }
    return primes;
}

struct DensityEstimate {
    enum class Mode { exact, sampled };
    Mode mode = Mode::sampled;
    Rational exact_value;
    uint64_t hits = 0;
    uint64_t total = 0;
    uint64_t bound = 0;
    std::vector<uint64_t> excluded_primes;

    static DensityEstimate from_exact(const Rational& v) {
        DensityEstimate e;
        e.mode = Mode::exact;
        e.exact_value = v;
        return e;
    }

    double value() const {
        if (mode == Mode::exact) return exact_value.to_double();
        return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
    }
};

/// Galois group acting on root indices, with one stabilized point per
/// irreducible factor of the polynomial in question.
struct GaloisData {
    PermGroup group;
    std::vector<int32_t> stabilizer_points;
};

/// Exact density of the root-prime set from group data: with
/// U the union of the point stabilizers, the density is
/// |union of conjugates of U| / |G|, computed by closing U under
/// conjugation by the group generators.
inline Rational exact_density(const GaloisData& data) {
    const PermGroup& G = data.group;
    if (G.order() > 100000) throw std::domain_error("exact_density: group order above 10^5");
    std::vector<Perm> elems = G.elements(100000);
    std::unordered_map<Perm, size_t, PermHash> index;
    index.reserve(elems.size() * 2);
    for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

    std::vector<char> in_u(elems.size(), 0);
    std::vector<size_t> work;
    for (int32_t pt : data.stabilizer_points) {
        if (pt < 1 || pt > G.degree()) throw std::out_of_range("exact_density: stabilizer point");
        for (size_t i = 0; i < elems.size(); ++i) {
            if (elems[i](pt) == pt && !in_u[i]) {
                in_u[i] = 1;
                work.push_back(i);
            }
        }
    }
    for (size_t qi = 0; qi < work.size(); ++qi) {
        const Perm& u = elems[work[qi]];
        for (const auto& g : G.generators()) {
            Perm v = compose(g, compose(u, g.inverse()));
            size_t vi = index.at(v);
            if (!in_u[vi]) {
                in_u[vi] = 1;
                work.push_back(vi);
            }
        }
    }
    uint64_t count = 0;
    for (char b : in_u) count += static_cast<uint64_t>(b);
    return {Integer(static_cast<unsigned long>(count)), G.order()};
}

/// Content-free integer coefficient vector with positive leading coefficient.
inline std::vector<Integer> primitive_integer_coeffs(const std::vector<Rational>& p) {
    Integer den_lcm = 1;
    for (const auto& c : p) den_lcm = lcm(den_lcm, c.denominator());
    std::vector<Integer> z;
    z.reserve(p.size());
    Integer content = 0;
    for (const auto& c : p) {
        Integer v = c.numerator() * (den_lcm / c.denominator());
        content = gcd(content, v);
        z.push_back(v);
    }
    if (content == 0) return z;
    for (auto& v : z) v /= content;
    if (z.back() < 0)
        for (auto& v : z) v = -v;
    return z;
}

namespace detail {

struct SampledPoly {
    std::vector<Integer> coeffs;       // squarefree part, primitive integer
    std::vector<Integer> lc_sources;   // integers whose prime divisors are excluded
};

inline SampledPoly prepare_for_sampling(const MPoly& F, const std::string& var) {
    auto uni = F.as_univariate(var);
    upoly::trim(uni);
    if (upoly::deg(uni) < 1) throw std::invalid_argument("sampled_density: constant polynomial");
    auto f_int = primitive_integer_coeffs(uni);
    auto sf = upoly::squarefree_part(uni);
    auto sf_int = primitive_integer_coeffs(sf);
    // disc of the squarefree part is a nonzero integer; its primes are the
    // ones where "root mod p" and "root in Q_p" may disagree.
    std::vector<Rational> sfr;
    sfr.reserve(sf_int.size());
    for (const auto& z : sf_int) sfr.emplace_back(z);
    Rational disc;
    if (upoly::deg(sfr) == 1) {
        disc = Rational(1);
    } else {
        Rational res = upoly::resultant_subresultant(sfr, upoly::derivative(sfr));
        disc = res / sfr.back();
    }
    if (disc.is_zero()) throw std::logic_error("sampled_density: squarefree part has zero disc");
    SampledPoly out;
    out.coeffs = std::move(sf_int);
    out.lc_sources = {f_int.back(), out.coeffs.back(), disc.numerator()};
    return out;
}

inline bool divides_any(uint64_t p, const std::vector<Integer>& zs) {
    Integer pz(static_cast<unsigned long>(p));
    for (const auto& z : zs)
        if (z != 0 && z % pz == 0) return true;
    return false;
}

}  // namespace detail

/// Sampled density of the set of primes p where F has a root in Q_p, over
/// primes up to bound. The tally estimates the natural density; for the
/// Chebotarev-governed sets handled here natural and Dirichlet density agree,
/// so the estimate targets the Dirichlet value quoted everywhere else. The
/// squarefree part is used for testing; primes dividing the leading
/// coefficient or the discriminant of the squarefree part are excluded
/// (finitely many, and finite sets have density zero, so the target is
/// unaffected). For the remaining primes a root mod p is simple and lifts by
/// Hensel's lemma, so the mod-p test decides the Q_p question exactly.
/// Partitioning across jobs does not change the tally.
inline DensityEstimate sampled_density(const MPoly& F, const std::string& var, uint64_t bound,
                                       unsigned jobs = 1) {
    if (bound < 3) throw std::invalid_argument("sampled_density: bound below 3");
    if (bound > 100000000ull) throw std::invalid_argument("sampled_density: bound above 10^8");
    auto prep = detail::prepare_for_sampling(F, var);

    auto primes = prime_sieve(static_cast<uint32_t>(bound));
    std::vector<uint64_t> good;
    good.reserve(primes.size());
    DensityEstimate est;
    est.mode = DensityEstimate::Mode::sampled;
    est.bound = bound;
    for (uint32_t p : primes) {
        if (detail::divides_any(p, prep.lc_sources))
            est.excluded_primes.push_back(p);
        else
            good.push_back(p);
    }

    jobs = std::max(1u, jobs);
    std::vector<uint64_t> chunk_hits(jobs, 0);
    auto worker = [&](unsigned j) {
        size_t lo = good.size() * j / jobs, hi = good.size() * (j + 1) / jobs;
        uint64_t h = 0;
        for (size_t i = lo; i < hi; ++i)
            if (modpoly_root_exists(prep.coeffs, good[i])) ++h;
        chunk_hits[j] = h;
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> ts;
        for (unsigned j = 0; j < jobs; ++j) ts.emplace_back(worker, j);
        for (auto& t : ts) t.join();
    }
    for (uint64_t h : chunk_hits) est.hits += h;
    est.total = good.size();
    return est;
}

struct CombinedBoundReport {
    Rational exact_sum;          // 7/32 + 1/2
    bool exact_below_one = false;
    DensityEstimate p_estimate;
    DensityEstimate q_estimate;
    DensityEstimate pq_estimate;
    uint64_t overlap = 0;        // primes hitting both factors
    bool per_prime_subadditive = false;  // every PQ hit is a P hit or a Q hit
    bool pass(double tol) const;
};

/// The degree-8/quadratic pair from the exceptional period-4 parameter:
/// exact bound 7/32 + 1/2 = 23/32 < 1, plus a per-prime tally of both factors
/// over the common good primes, where a root of PQ mod p is exactly a root of
/// P or of Q.
inline CombinedBoundReport combined_bound_check(uint64_t bound, unsigned jobs = 1) {
    CombinedBoundReport rep;
    rep.exact_sum = Rational(7, 32) + Rational(1, 2);
    rep.exact_below_one = (rep.exact_sum == Rational(23, 32)) && (rep.exact_sum < Rational(1));

    MPoly P = period4_degree8_factor();
    MPoly Q = period4_quadratic_factor();
    MPoly PQ = P * Q;

    auto prep_p = detail::prepare_for_sampling(P, "x");
    auto prep_q = detail::prepare_for_sampling(Q, "x");
    auto prep_pq = detail::prepare_for_sampling(PQ, "x");

    std::vector<Integer> all_sources;
    for (const auto* s : {&prep_p.lc_sources, &prep_q.lc_sources, &prep_pq.lc_sources})
        all_sources.insert(all_sources.end(), s->begin(), s->end());

    auto primes = prime_sieve(static_cast<uint32_t>(bound));
    std::vector<uint64_t> good;
    std::vector<uint64_t> excluded;
    for (uint32_t p : primes) {
        if (detail::divides_any(p, all_sources))
            excluded.push_back(p);
        else
            good.push_back(p);
    }

    jobs = std::max(1u, jobs);
    struct Tally {
        uint64_t hp = 0, hq = 0, hpq = 0, both = 0;
        bool subadd = true;
    };
    std::vector<Tally> tallies(jobs);
    auto worker = [&](unsigned j) {
        size_t lo = good.size() * j / jobs, hi = good.size() * (j + 1) / jobs;
        Tally t;
        for (size_t i = lo; i < hi; ++i) {
            bool bp = modpoly_root_exists(prep_p.coeffs, good[i]);
            bool bq = modpoly_root_exists(prep_q.coeffs, good[i]);
            bool bpq = modpoly_root_exists(prep_pq.coeffs, good[i]);
            t.hp += bp;
            t.hq += bq;
            t.hpq += bpq;
            t.both += (bp && bq);
            if (bpq != (bp || bq)) t.subadd = false;
        }
        tallies[j] = t;
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> ts;
        for (unsigned j = 0; j < jobs; ++j) ts.emplace_back(worker, j);
        for (auto& t : ts) t.join();
    }
    Tally t;
    for (const auto& tj : tallies) {
        t.hp += tj.hp;
        t.hq += tj.hq;
        t.hpq += tj.hpq;
        t.both += tj.both;
        t.subadd = t.subadd && tj.subadd;
    }

    auto fill = [&](DensityEstimate& e, uint64_t hits) {
        e.mode = DensityEstimate::Mode::sampled;
        e.bound = bound;
        e.hits = hits;
        e.total = good.size();
        e.excluded_primes = excluded;
    };
    fill(rep.p_estimate, t.hp);
    fill(rep.q_estimate, t.hq);
    fill(rep.pq_estimate, t.hpq);
    rep.overlap = t.both;
    rep.per_prime_subadditive = t.subadd && (t.hpq <= t.hp + t.hq) && (t.hpq == t.hp + t.hq - t.both);
    return rep;
}

inline bool CombinedBoundReport::pass(double tol) const {
    return exact_below_one && per_prime_subadditive &&
           std::abs(p_estimate.value() - 7.0 / 32.0) <= tol &&
           std::abs(q_estimate.value() - 0.5) <= tol;
}

}  // namespace dtk

#endif
