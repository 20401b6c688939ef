// Acceptance suite: one line per criterion, exact tolerances pinned in code.
// Exit code 0 iff every criterion passes.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dtk/algorithm1.hpp"
#include "dtk/curves.hpp"
#include "dtk/density.hpp"
#include "dtk/dynatomic.hpp"
#include "dtk/subgroups.hpp"

using namespace dtk;

namespace {

int failures = 0;

void criterion(const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit_s > 0 && secs > time_limit_s) {
        ok = false;
        detail += " [over time limit]";
    }
    std::ostringstream line;
    line << (ok ? "PASS " : "FAIL ") << name << "  (" << secs << "s";
    if (time_limit_s > 0) line << " / limit " << time_limit_s << "s";
    line << ")";
    if (!detail.empty()) line << "  -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

MPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars) {
    std::uniform_int_distribution<int> nterms(0, 5), exp(0, 3), coef(-9, 9);
    MPoly p = MPoly::zero(vars);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        MPoly t = MPoly::constant(Rational(coef(rng)), vars);
        for (const auto& v : vars) t = t * MPoly::variable(v).pow(static_cast<uint32_t>(exp(rng)));
        p = p + t;
    }
    return p;
}

std::vector<Perm> symmetric_group(int n) {
    std::vector<int32_t> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

int main() {
    // 1. enumeration mode: empty outputs, the single (4,2) pair, class counts
    criterion("criterion-1-enumeration-small-inputs", 60.0, [](std::string& d) {
        auto t0 = std::chrono::steady_clock::now();
        auto r32 = run_algorithm1({3, 2});
        double t32 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (t32 > 1.0) { d = "(3,2) slower than 1 s"; return false; }
        if (!run_algorithm1({1, 2}).pairs.empty()) { d = "(1,2) not empty"; return false; }
        if (!run_algorithm1({2, 2}).pairs.empty()) { d = "(2,2) not empty"; return false; }
        if (!r32.pairs.empty()) { d = "(3,2) not empty"; return false; }
        if (r32.class_count != 9) { d = "(3,2) classes != 9"; return false; }
        return true;
    });
    criterion("criterion-1-enumeration-4-2", 600.0, [](std::string& d) {
        auto res = run_algorithm1({4, 2});
        if (res.centralizer_order != 384) { d = "|W| != 384"; return false; }
        if (res.class_count != 164) {
            d = "classes = " + std::to_string(res.class_count);
            return false;
        }
        if (res.pairs.size() != 1) {
            d = "pairs = " + std::to_string(res.pairs.size());
            return false;
        }
        const auto& p = res.pairs[0];
        if (p.order != 4 || !p.structure.abelian || p.structure.exponent != 2) {
            d = "pair is not elementary abelian of order 4";
            return false;
        }
        if (p.index_set != std::vector<int64_t>{2}) { d = "index set != {2}"; return false; }
        return true;
    });

    // 2. (5,2) verification
    criterion("criterion-2-verification-5-2", 60.0, [](std::string& d) {
        PermGroup W = centralizer_of_pi(5, 6);
        if (W.order() != Integer(11250000)) { d = "constructed |W| wrong"; return false; }
        Perm g1 = Perm::parse(
            "(1,18,8,12,3,20,10,14,5,17,7,11,2,19,9,13,4,16,6,15)"
            "(21,26,23,28,25,30,22,27,24,29)", 30);
        Perm g2 = Perm::parse(
            "(1,25,14,29,9,19)(2,21,15,30,10,20)(3,22,11,26,6,16)(4,23,12,27,7,17)"
            "(5,24,13,28,8,18)", 30);
        if (!W.contains(g1) || !W.contains(g2)) { d = "printed generators not in W"; return false; }
        if (PermGroup(30, {g1, g2}).order() != Integer(11250000)) {
            d = "printed generators give wrong order";
            return false;
        }
        auto cands = load_candidates_file(std::string(DTK_FIXTURE_DIR) + "/appendix_5_2.txt", 30);
        if (cands.size() != 12) { d = "fixture has != 12 candidates"; return false; }
        auto reports = verify_candidates(5, 2, cands);
        size_t z55 = 0, s3z5 = 0, klein = 0;
        for (const auto& r : reports) {
            if (!r.pass()) { d = r.name + " failed"; return false; }
            if (r.structure_tag == "Z/5 x Z/5" && r.index_set == std::vector<int64_t>{5}) ++z55;
            if (r.structure_tag == "S3 x Z/5" && r.index_set == std::vector<int64_t>{2, 3, 5})
                ++s3z5;
            if (r.structure_tag == "Z/2 x Z/2" && r.index_set == std::vector<int64_t>{2}) ++klein;
        }
        if (z55 != 10 || s3z5 != 1 || klein != 1) { d = "index/structure census wrong"; return false; }
        return true;
    });

    // 3. symbolic identity suite, all exact
    criterion("criterion-3-symbolic-identities", 120.0, [](std::string& d) {
        for (unsigned n = 1; n <= 6; ++n)
            if (!product_identity_check(quadratic_family_generic(), n)) {
                d = "product identity n=" + std::to_string(n);
                return false;
            }
        PolyMap f1{MPoly::parse("x^2 + 1"), "x"};
        if (!conjugation_identity_check(f1, Rational(2), Rational(3), 1) ||
            !conjugation_identity_check(f1, Rational(2), Rational(3), 3)) {
            d = "conjugation identity";
            return false;
        }
        if (discriminant(phi_generic(3), "x") !=
            -MPoly::parse("(7 + 4*c)^3*(7 + 4*c + 16*c^2)^2")) {
            d = "disc Phi_3";
            return false;
        }
        if (discriminant(phi_generic(4), "x") !=
            MPoly::parse("(5 + 4*c)^2*(5 - 8*c + 16*c^2)^3*(135 + 108*c + 144*c^2 + 64*c^3)^4")) {
            d = "disc Phi_4";
            return false;
        }
        MPoly p3 = phi_generic(3).eval_at("c", Rational(-7, 4));
        if (resultant(p3, MPoly::parse("x^2 - x - 7/4"), "x") != MPoly::constant(Rational(49))) {
            d = "fixed-point resultant 49";
            return false;
        }
        MPoly q2x = MPoly::parse("x^3 + (4*c+1)*x^2 + (12*c-2)*x - 8*c - 15")
                        .substitute("x", MPoly::parse("2*x"));
        MPoly res = resultant(q2x, MPoly::parse("x^2 - x + c"), "x");
        if (divrem(res, MPoly::parse("16*c^2 + 4*c + 7"), "c").second != MPoly::parse("-512*c")) {
            d = "fixed-point resultant -512c";
            return false;
        }
        for (const auto& chk : special_c_factorization_checks())
            if (!chk.pass) { d = chk.name; return false; }
        auto [r1, r0] = derive_X_equations();
        if (r1 != printed_r1() || r0 != printed_r0()) { d = "r1/r0 verbatim"; return false; }
        if (tau5_at_t_minus1() != MPoly::parse("(2 + c)*(4 + 3*c)^2")) {
            d = "tau5(c,-1)";
            return false;
        }
        for (const auto& p : known_X_points())
            if (!on_X(p[0], p[1], p[2])) { d = "X point off curve"; return false; }
        for (const auto& p : known_C05_points())
            if (!on_C05(p[0], p[1])) { d = "C05 point off curve"; return false; }
        for (const auto& p : known_C05_points()) {
            if (p[1] == Rational(-1)) continue;
            auto [x, y] = psi_map(p[0], p[1]);
            if (y * y != hyperelliptic_rhs(x)) { d = "psi image off model"; return false; }
        }
        auto rep = period4_identity_suite();
        if (!rep.conjugate_identity || !rep.period_divides_4 || !rep.not_period_2 ||
            !(rep.trace_matches && rep.norm_matches) || !rep.c_difference_factors) {
            d = "period-4 identities";
            return false;
        }
        return true;
    });

    // 4. disc Phi_5 structure at 20 integer parameters
    criterion("criterion-4-disc-phi5-structure", 300.0, [](std::string& d) {
        std::vector<long> cs;
        long v = 0;
        while (cs.size() < 20) {
            cs.push_back(v);
            v = (v > 0) ? -v : -v + 1;
        }
        auto checks = disc_phi5_structure_check(cs);
        if (checks.size() != 20) { d = "expected 20 checks"; return false; }
        for (const auto& c : checks)
            if (!c.pass) { d = c.name + ": " + c.detail; return false; }
        return true;
    });

    // 5. density targets at prime bound 10^6
    criterion("criterion-5-density", 180.0, [](std::string& d) {
        auto q = sampled_density(period4_quadratic_factor(), "x", 1000000);
        if (std::abs(q.value() - 0.5) > 0.01) {
            d = "quadratic estimate " + std::to_string(q.value());
            return false;
        }
        auto p = sampled_density(period4_degree8_factor(), "x", 1000000);
        if (std::abs(p.value() - 7.0 / 32.0) > 0.01) {
            d = "degree-8 estimate " + std::to_string(p.value());
            return false;
        }
        GaloisData c7{PermGroup(7, {Perm::parse("(1,2,3,4,5,6,7)", 7)}), {1}};
        if (exact_density(c7) != Rational(1, 7)) { d = "regular density"; return false; }
        Rational sum = Rational(7, 32) + Rational(1, 2);
        if (sum != Rational(23, 32) || !(sum < Rational(1))) { d = "exact bound"; return false; }
        return true;
    });

    // 6. property suites
    criterion("criterion-6-ring-axioms", 60.0, [](std::string& d) {
        std::mt19937 rng(11);
        for (int i = 0; i < 200; ++i) {
            MPoly a = random_poly(rng, {"x", "y"});
            MPoly b = random_poly(rng, {"y", "c"});
            MPoly c = random_poly(rng, {"x", "c"});
            if (!((a + b) + c == a + (b + c)) || !(a * (b + c) == a * b + a * c) ||
                !((a * b) * c == a * (b * c))) {
                d = "axiom violated at case " + std::to_string(i);
                return false;
            }
        }
        return true;
    });
    criterion("criterion-6-divrem-round-trip", 60.0, [](std::string& d) {
        std::mt19937 rng(13);
        std::uniform_int_distribution<int> dd(1, 4), coef(-9, 9), cexp(0, 3);
        for (int i = 0; i < 100; ++i) {
            MPoly a = random_poly(rng, {"x", "c"});
            int deg = dd(rng);
            MPoly b = MPoly::variable("x").pow(static_cast<uint32_t>(deg));
            for (int k = 0; k < deg; ++k)
                b = b + MPoly::constant(Rational(coef(rng))) *
                            MPoly::variable("c").pow(static_cast<uint32_t>(cexp(rng))) *
                            MPoly::variable("x").pow(static_cast<uint32_t>(k));
            auto [q, r] = divrem(a, b, "x");
            if (!(a == q * b + r) || r.degree("x") >= b.degree("x")) {
                d = "round-trip failed at case " + std::to_string(i);
                return false;
            }
        }
        return true;
    });
    criterion("criterion-6-orbit-stabilizer", 60.0, [](std::string& d) {
        for (auto [n, r] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 2}}) {
            PermGroup g = centralizer_of_pi(n, r);
            auto elems = g.elements(10000);
            for (int32_t pt = 1; pt <= g.degree(); ++pt) {
                auto [orbit, idx] = g.orbit_and_stabilizer_index(pt);
                size_t stab = 0;
                for (const auto& e : elems)
                    if (e(pt) == pt) ++stab;
                if (Integer(static_cast<unsigned long>(orbit.size() * stab)) != g.order()) {
                    d = "orbit-stabilizer mismatch";
                    return false;
                }
            }
        }
        return true;
    });
    criterion("criterion-6-brute-force-centralizer-s6", 60.0, [](std::string& d) {
        Perm pi = make_pi(3, 2);
        std::set<Perm> brute;
        for (const auto& g : symmetric_group(6))
            if (compose(g, pi) == compose(pi, g)) brute.insert(g);
        auto elems = centralizer_of_pi(3, 2).elements(100);
        if (brute != std::set<Perm>(elems.begin(), elems.end())) {
            d = "centralizer differs from brute force";
            return false;
        }
        return true;
    });
    criterion("criterion-6-subgroup-count-oracle", 120.0, [](std::string& d) {
        for (auto [n, r] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
            GroupTable T = GroupTable::build(centralizer_of_pi(n, r));
            auto classes = subgroup_conjugacy_classes(T);
            size_t via_classes = 0;
            for (const auto& cls : classes) via_classes += T.size() / T.normalizer_order(cls.elements);
            // undeduplicated enumeration
            std::set<std::vector<uint16_t>> subs;
            std::vector<std::vector<uint16_t>> work{{0}};
            subs.insert({0});
            for (size_t qi = 0; qi < work.size(); ++qi) {
                auto cur = work[qi];
                std::vector<bool> in(T.size(), false);
                for (uint16_t h : cur) in[h] = true;
                for (uint16_t g = 0; g < T.size(); ++g) {
                    if (in[g]) continue;
                    auto seed = cur;
                    seed.push_back(g);
                    auto sub = T.close(seed);
                    if (subs.insert(sub).second) work.push_back(sub);
                }
            }
            if (via_classes != subs.size()) {
                d = "subgroup count mismatch at (" + std::to_string(n) + "," + std::to_string(r) + ")";
                return false;
            }
        }
        return true;
    });
    criterion("criterion-6-sampler-determinism", 60.0, [](std::string& d) {
        MPoly P = period4_degree8_factor();
        auto a = sampled_density(P, "x", 50000, 1);
        auto b = sampled_density(P, "x", 50000, 4);
        if (a.hits != b.hits || a.total != b.total || a.excluded_primes != b.excluded_primes) {
            d = "tallies differ across partitionings";
            return false;
        }
        return true;
    });
    criterion("criterion-6-modpoly-vs-exhaustive", 60.0, [](std::string& d) {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> coef(-60, 60);
        std::vector<uint64_t> primes;
        for (uint64_t p = 2; p < 100; ++p)
            if (is_prime_u64(p)) primes.push_back(p);
        for (int trial = 0; trial < 20; ++trial) {
            int deg = 1 + static_cast<int>(rng() % 8);
            std::vector<Integer> cs;
            for (int i = 0; i < deg; ++i) cs.emplace_back(coef(rng));
            cs.emplace_back(2 * coef(rng) + 1);
            for (uint64_t p : primes) {
                if (cs.back() % Integer(static_cast<unsigned long>(p)) == 0) continue;
                bool brute = false;
                for (uint64_t a = 0; a < p && !brute; ++a) {
                    Integer acc = 0;
                    for (size_t i = cs.size(); i-- > 0;)
                        acc = acc * Integer(static_cast<long>(a)) + cs[i];
                    if (acc % Integer(static_cast<unsigned long>(p)) == 0) brute = true;
                }
                if (modpoly_root_exists(cs, p) != brute) {
                    d = "disagreement at p=" + std::to_string(p);
                    return false;
                }
            }
        }
        return true;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
