#ifndef DTK_ALGORITHM1_HPP
#define DTK_ALGORITHM1_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dtk/perm.hpp"
#include "dtk/permgroup.hpp"
#include "dtk/subgroups.hpp"

namespace dtk {

inline int mobius(uint64_t m) {
    if (m == 0) throw std::invalid_argument("mobius: m must be positive");
    int r = 1;
    for (uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            r = -r;
        }
    }
    if (m > 1) r = -r;
    return r;
}

inline std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

/// Product of r disjoint n-cycles on consecutive blocks:
/// (1,...,n)(n+1,...,2n)...(N-n+1,...,N).
inline Perm make_pi(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("make_pi: n, r must be positive");
    int N = n * r;
    std::vector<int32_t> img(static_cast<size_t>(N));
    for (int b = 0; b < r; ++b)
        for (int j = 0; j < n; ++j) img[static_cast<size_t>(b * n + j)] = static_cast<int32_t>(b * n + (j + 1) % n + 1);
    return Perm(std::move(img));
}

/// Centralizer of make_pi(n, r) in S_{nr}, built from the wreath structure:
/// one n-cycle per block plus the adjacent block swaps. Its order is n^r * r!.
inline PermGroup centralizer_of_pi(int n, int r) {
    int N = n * r;
    if (N > 64) throw std::invalid_argument("centralizer_of_pi: degree above desk scale");
    std::vector<Perm> gens;
    for (int b = 0; b < r; ++b) {
        std::vector<int32_t> img(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) img[static_cast<size_t>(i)] = static_cast<int32_t>(i + 1);
        for (int j = 0; j < n; ++j) img[static_cast<size_t>(b * n + j)] = static_cast<int32_t>(b * n + (j + 1) % n + 1);
        Perm g{std::move(img)};
        if (!g.is_identity()) gens.push_back(std::move(g));
    }
    for (int b = 0; b + 1 < r; ++b) {
        std::vector<int32_t> img(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) img[static_cast<size_t>(i)] = static_cast<int32_t>(i + 1);
        for (int j = 0; j < n; ++j) {
            img[static_cast<size_t>(b * n + j)] = static_cast<int32_t>((b + 1) * n + j + 1);
            img[static_cast<size_t>((b + 1) * n + j)] = static_cast<int32_t>(b * n + j + 1);
        }
        gens.emplace_back(std::move(img));
    }
    return PermGroup(N, std::move(gens));
}

struct AlgorithmOneInput {
    int n;
    int s;

    int64_t big_n() const {
        if (n < 1 || s < 2) throw std::invalid_argument("AlgorithmOneInput: need n >= 1, s >= 2");
        int64_t N = 0;
        for (uint64_t d : divisors(static_cast<uint64_t>(n))) {
            int64_t p = 1;
            for (uint64_t k = 0; k < d; ++k) {
                if (p > (int64_t{1} << 40))
                    throw std::invalid_argument("AlgorithmOneInput: s^n out of range");
                p *= s;
            }
            N += mobius(static_cast<uint64_t>(n) / d) * p;
        }
        if (N <= 0 || N % n != 0)
            throw std::logic_error("AlgorithmOneInput: N not a positive multiple of n");
        return N;
    }
    int64_t r() const { return big_n() / n; }
};

struct AlgorithmOnePair {
    std::vector<Perm> generators;
    size_t order = 0;
    std::vector<int64_t> index_set;  // sorted, duplicate-free
    IsoFingerprint structure;
};

struct AlgorithmOneResult {
    int64_t degree = 0;
    int64_t r = 0;
    Integer centralizer_order;
    size_t class_count = 0;
    std::vector<AlgorithmOnePair> pairs;
};

/// Enumeration mode: list every conjugacy class of subgroups of the
/// centralizer W and keep those H with (1) every element of H fixing some
/// point n*i and (2) no point n*i fixed by all of H. For each surviving H the
/// index set { |H : Stab_H(n*i)| } is the orbit-size set of the points n*i.
inline AlgorithmOneResult run_algorithm1(const AlgorithmOneInput& input) {
    AlgorithmOneResult res;
    res.degree = input.big_n();
    res.r = res.degree / input.n;
    PermGroup W = centralizer_of_pi(input.n, static_cast<int>(res.r));
    res.centralizer_order = W.order();
    if (W.order() > 1000)
        throw std::domain_error("run_algorithm1: centralizer order above 1000; use verify mode");

    GroupTable T = GroupTable::build(W);
    auto classes = subgroup_conjugacy_classes(T);
    res.class_count = classes.size();

    std::vector<int32_t> marks;
    for (int64_t i = 1; i <= res.r; ++i) marks.push_back(static_cast<int32_t>(i * input.n));

    for (const auto& cls : classes) {
        bool union_cond = true;
        for (uint16_t h : cls.elements) {
            const Perm& e = T.elem(h);
            bool fixes_some = false;
            for (int32_t m : marks)
                if (e(m) == m) { fixes_some = true; break; }
            if (!fixes_some) { union_cond = false; break; }
        }
        if (!union_cond) continue;

        bool proper_cond = true;
        for (int32_t m : marks) {
            bool moved = false;
            for (uint16_t g : cls.gens)
                if (T.elem(g)(m) != m) { moved = true; break; }
            if (!moved) { proper_cond = false; break; }
        }
        if (!proper_cond) continue;

        AlgorithmOnePair pair;
        for (uint16_t g : cls.gens) pair.generators.push_back(T.elem(g));
        pair.order = cls.order();
        PermGroup H(W.degree(), pair.generators);
        for (int32_t m : marks) {
            auto [orbit, idx] = H.orbit_and_stabilizer_index(m);
            pair.index_set.push_back(static_cast<int64_t>(orbit.size()));
        }
        std::sort(pair.index_set.begin(), pair.index_set.end());
        pair.index_set.erase(std::unique(pair.index_set.begin(), pair.index_set.end()),
                             pair.index_set.end());
        std::vector<Perm> elems;
        for (uint16_t h : cls.elements) elems.push_back(T.elem(h));
        pair.structure = iso_fingerprint(elems, pair.generators);
        res.pairs.push_back(std::move(pair));
    }
    return res;
}

struct Candidate {
    std::string name;
    std::vector<Perm> gens;
    std::optional<std::vector<int64_t>> expected_index_set;
    std::optional<std::string> expected_structure;
};

struct CandidateReport {
    std::string name;
    size_t order = 0;
    bool commutes_with_pi = false;
    bool union_condition = false;   // every element fixes some n*i
    bool proper_condition = false;  // for each i, some generator moves n*i
    std::vector<int64_t> index_set;
    std::string structure_tag;
    bool expectations_met = true;

    bool pass() const {
        return commutes_with_pi && union_condition && proper_condition && expectations_met;
    }
};

/// Verification mode: membership in W is checked by commutation with pi
/// (which is the definition of the centralizer), so no chain on W is needed;
/// candidates are enumerated directly.
inline std::vector<CandidateReport> verify_candidates(int n, int s,
                                                      const std::vector<Candidate>& candidates,
                                                      size_t order_cap = 100000) {
    AlgorithmOneInput input{n, s};
    int64_t N = input.big_n();
    int64_t r = input.r();
    Perm pi = make_pi(n, static_cast<int>(r));

    std::vector<int32_t> marks;
    for (int64_t i = 1; i <= r; ++i) marks.push_back(static_cast<int32_t>(i * n));

    std::vector<CandidateReport> out;
    for (const auto& cand : candidates) {
        CandidateReport rep;
        rep.name = cand.name;
        for (const auto& g : cand.gens)
            if (g.degree() != N)
                throw std::invalid_argument("verify_candidates: generator degree != " + std::to_string(N));

        rep.commutes_with_pi = true;
        for (const auto& g : cand.gens)
            if (compose(g, pi) != compose(pi, g)) { rep.commutes_with_pi = false; break; }

        rep.proper_condition = true;
        for (int32_t m : marks) {
            bool moved = false;
            for (const auto& g : cand.gens)
                if (g(m) != m) { moved = true; break; }
            if (!moved) { rep.proper_condition = false; break; }
        }

        PermGroup H(static_cast<int>(N), cand.gens);
        if (H.order().fits_ulong_p()) rep.order = H.order().get_ui();
        for (int32_t m : marks) {
            auto [orbit, idx] = H.orbit_and_stabilizer_index(m);
            rep.index_set.push_back(static_cast<int64_t>(orbit.size()));
        }
        std::sort(rep.index_set.begin(), rep.index_set.end());
        rep.index_set.erase(std::unique(rep.index_set.begin(), rep.index_set.end()),
                            rep.index_set.end());

        // any single generator fixing no marked point already sinks the
        // union condition; only without such a witness is the group
        // enumerated element by element
        bool gen_counterexample = false;
        for (const auto& g : cand.gens) {
            bool fixes_some = false;
            for (int32_t m : marks)
                if (g(m) == m) { fixes_some = true; break; }
            if (!fixes_some) { gen_counterexample = true; break; }
        }
        if (gen_counterexample) {
            rep.union_condition = false;
            rep.structure_tag = "undecided";
        } else {
            if (H.order() > Integer(static_cast<unsigned long>(order_cap)))
                throw std::domain_error("verify_candidates: candidate order above cap");
            auto elems = H.elements(order_cap);
            rep.union_condition = true;
            for (const auto& e : elems) {
                bool fixes_some = false;
                for (int32_t m : marks)
                    if (e(m) == m) { fixes_some = true; break; }
                if (!fixes_some) { rep.union_condition = false; break; }
            }
            rep.structure_tag = iso_fingerprint(elems, cand.gens).tag();
        }

        if (cand.expected_index_set && *cand.expected_index_set != rep.index_set)
            rep.expectations_met = false;
        if (cand.expected_structure && *cand.expected_structure != rep.structure_tag)
            rep.expectations_met = false;

        out.push_back(std::move(rep));
    }
    return out;
}

/// Candidate fixture format: "candidate NAME" opens a block; following lines
/// starting with '(' are generators in cycle notation; optional
/// "index-set {a,b,c}" and "structure TAG" lines carry expectations.
inline std::vector<Candidate> load_candidates(std::istream& in, int degree) {
    std::vector<Candidate> out;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("candidate", 0) == 0) {
            Candidate c;
            c.name = line.substr(9);
            auto ns = c.name.find_first_not_of(" \t");
            c.name = ns == std::string::npos ? "" : c.name.substr(ns);
            out.push_back(std::move(c));
        } else if (line[0] == '(') {
            if (out.empty()) throw std::invalid_argument("candidate file: generator before any block");
            out.back().gens.push_back(Perm::parse(line, degree));
        } else if (line.rfind("index-set", 0) == 0) {
            if (out.empty()) throw std::invalid_argument("candidate file: index-set before any block");
            std::vector<int64_t> is;
            std::string body = line.substr(9);
            for (char& ch : body)
                if (ch == '{' || ch == '}' || ch == ',') ch = ' ';
            std::istringstream ss(body);
            int64_t v;
            while (ss >> v) is.push_back(v);
            std::sort(is.begin(), is.end());
            out.back().expected_index_set = std::move(is);
        } else if (line.rfind("structure", 0) == 0) {
            if (out.empty()) throw std::invalid_argument("candidate file: structure before any block");
            std::string body = line.substr(9);
            auto ns = body.find_first_not_of(" \t");
            out.back().expected_structure = ns == std::string::npos ? "" : body.substr(ns);
        } else {
            throw std::invalid_argument("candidate file: unrecognized line: " + line);
        }
    }
    return out;
}

inline std::vector<Candidate> load_candidates_file(const std::string& path, int degree) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open candidate file: " + path);
    return load_candidates(in, degree);
}

}  // namespace dtk

#endif
