#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "dtk/algorithm1.hpp"
#include "dtk/dynatomic.hpp"

using namespace dtk;

TEST_CASE("mobius function") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);

    int64_t N = 0;
    for (uint64_t d : divisors(5)) {
        int64_t p = 1;
        for (uint64_t k = 0; k < d; ++k) p *= 2;
        N += mobius(5 / d) * p;
    }
    CHECK(N == 30);
    CHECK(AlgorithmOneInput{5, 2}.big_n() == 30);
    CHECK(AlgorithmOneInput{5, 2}.r() == 6);
    CHECK(AlgorithmOneInput{4, 2}.big_n() == 12);
    CHECK(AlgorithmOneInput{1, 2}.big_n() == 2);
    CHECK(AlgorithmOneInput{6, 3}.big_n() == 696);
    CHECK_THROWS_AS((AlgorithmOneInput{80, 9}.big_n()), std::invalid_argument);
    CHECK_THROWS_AS((AlgorithmOneInput{1, 1}.big_n()), std::invalid_argument);
}

TEST_CASE("enumeration mode on the small inputs") {
    auto r12 = run_algorithm1({1, 2});
    CHECK(r12.centralizer_order == 2);
    CHECK(r12.class_count == 2);
    CHECK(r12.pairs.empty());

    auto r22 = run_algorithm1({2, 2});
    CHECK(r22.centralizer_order == 2);
    CHECK(r22.pairs.empty());

    auto r32 = run_algorithm1({3, 2});
    CHECK(r32.centralizer_order == 18);
    CHECK(r32.class_count == 9);
    CHECK(r32.pairs.empty());
}

TEST_CASE("enumeration mode on (4,2) finds the single Klein pair") {
    auto res = run_algorithm1({4, 2});
    CHECK(res.degree == 12);
    CHECK(res.r == 3);
    CHECK(res.centralizer_order == 384);
    CHECK(res.class_count == 164);
    REQUIRE(res.pairs.size() == 1);
    const auto& p = res.pairs[0];
    CHECK(p.order == 4);
    CHECK(p.index_set == std::vector<int64_t>{2});
    CHECK(p.structure.tag() == "Z/2 x Z/2");

    // the returned pair satisfies the step conditions exactly
    PermGroup H(12, p.generators);
    auto elems = H.elements(100);
    CHECK(elems.size() == 4);
    for (const auto& e : elems) {
        bool fixes = false;
        for (int32_t m : {4, 8, 12})
            if (e(m) == m) fixes = true;
        CHECK(fixes);
    }
    for (int32_t m : {4, 8, 12}) {
        bool moved = false;
        for (const auto& g : p.generators)
            if (g(m) != m) moved = true;
        CHECK(moved);
    }

    // enumeration and verify mode agree: feed the pair back as a candidate
    Candidate cand{"enumerated", p.generators, std::vector<int64_t>{2}, std::string("Z/2 x Z/2")};
    auto reports = verify_candidates(4, 2, {cand});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].pass());
    CHECK(reports[0].index_set == p.index_set);

    // the surviving subgroup is exactly the known Klein group on 12 points
    std::set<Perm> expected{Perm::identity(12), Perm::parse("(1,3)(2,4)(5,7)(6,8)", 12),
                            Perm::parse("(5,7)(6,8)(9,11)(10,12)", 12),
                            Perm::parse("(1,3)(2,4)(9,11)(10,12)", 12)};
    CHECK(std::set<Perm>(elems.begin(), elems.end()) == expected);

    // every element moves each point by an even power of the block rotation
    Perm pi2 = make_pi(4, 3).power(2);
    for (const auto& e : elems)
        for (int32_t k = 1; k <= 12; ++k) CHECK((e(k) == k || e(k) == pi2(k)));
}

TEST_CASE("enumeration mode rejects research-scale inputs") {
    CHECK_THROWS_WITH_AS(run_algorithm1({5, 2}),
                         "run_algorithm1: centralizer order above 1000; use verify mode",
                         std::domain_error);
}

TEST_CASE("candidate fixture verification for (5,2)") {
    auto cands = load_candidates_file(std::string(DTK_FIXTURE_DIR) + "/appendix_5_2.txt", 30);
    REQUIRE(cands.size() == 12);
    CHECK(cands[0].name == "H1");
    CHECK(cands[10].expected_index_set == std::vector<int64_t>{2, 3, 5});
    CHECK(cands[11].expected_structure == "Z/2 x Z/2");

    auto reports = verify_candidates(5, 2, cands);
    REQUIRE(reports.size() == 12);
    for (size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(reports[i].name);
        CHECK(reports[i].pass());
    }
    for (size_t i = 0; i < 10; ++i) {
        CHECK(reports[i].order == 25);
        CHECK(reports[i].index_set == std::vector<int64_t>{5});
        CHECK(reports[i].structure_tag == "Z/5 x Z/5");
    }
    CHECK(reports[10].order == 30);
    CHECK(reports[10].index_set == std::vector<int64_t>{2, 3, 5});
    CHECK(reports[10].structure_tag == "S3 x Z/5");
    CHECK(reports[11].order == 4);
    CHECK(reports[11].index_set == std::vector<int64_t>{2});
    CHECK(reports[11].structure_tag == "Z/2 x Z/2");

    // the first ten candidates move every point within its own block:
    // h(k) is always a power of the block rotation applied to k
    Perm pi = make_pi(5, 6);
    std::vector<Perm> powers;
    for (int64_t e = 0; e < 5; ++e) powers.push_back(pi.power(e));
    for (size_t m = 0; m < 10; ++m) {
        PermGroup H(30, cands[m].gens);
        for (const auto& h : H.elements(100)) {
            for (int32_t k = 1; k <= 30; ++k) {
                bool in_block = false;
                for (const auto& pw : powers)
                    if (h(k) == pw(k)) { in_block = true; break; }
                CHECK(in_block);
            }
        }
    }
    // the eleventh candidate keeps the first block pointwise within itself
    PermGroup h11(30, cands[10].gens);
    for (const auto& h : h11.elements(100)) {
        for (int32_t k = 1; k <= 5; ++k) {
            bool in_block = false;
            for (const auto& pw : powers)
                if (h(k) == pw(k)) { in_block = true; break; }
            CHECK(in_block);
        }
    }
}

TEST_CASE("the full centralizer fails as a candidate") {
    // its first printed generator fixes none of 5,10,...,30, so the
    // every-element-fixes-a-marked-point condition cannot hold
    Perm g1 = Perm::parse(
        "(1,18,8,12,3,20,10,14,5,17,7,11,2,19,9,13,4,16,6,15)(21,26,23,28,25,30,22,27,24,29)", 30);
    Perm g2 = Perm::parse(
        "(1,25,14,29,9,19)(2,21,15,30,10,20)(3,22,11,26,6,16)(4,23,12,27,7,17)(5,24,13,28,8,18)",
        30);
    for (int32_t m : {5, 10, 15, 20, 25, 30}) CHECK(g1(m) != m);

    auto reports = verify_candidates(5, 2, {Candidate{"W", {g1, g2}, {}, {}}});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].commutes_with_pi);
    CHECK(reports[0].order == 11250000);
    CHECK_FALSE(reports[0].union_condition);
    CHECK_FALSE(reports[0].pass());
}

TEST_CASE("verify mode input validation") {
    CHECK_THROWS_AS(verify_candidates(5, 2, {Candidate{"bad", {Perm::identity(7)}, {}, {}}}),
                    std::invalid_argument);

    std::istringstream bad("(1,2)\n");
    CHECK_THROWS_AS(load_candidates(bad, 30), std::invalid_argument);

    std::istringstream ok("# comment\ncandidate A\n(1,2)\nindex-set {1, 2}\nstructure foo\n");
    auto cands = load_candidates(ok, 30);
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].gens.size() == 1);
    CHECK(cands[0].expected_index_set == std::vector<int64_t>{1, 2});
    CHECK(cands[0].expected_structure == "foo");
}

TEST_CASE("degree formula matches the dynatomic module") {
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(AlgorithmOneInput{static_cast<int>(n), 2}.big_n() == dynatomic_degree(n, 2));
        CHECK(dynatomic(quadratic_family_generic(), n).degree == dynatomic_degree(n, 2));
    }
}
