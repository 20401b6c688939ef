#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dtk/algorithm1.hpp"
#include "dtk/subgroups.hpp"

using namespace dtk;

namespace {

// Test-side oracle: every subgroup, not up to conjugacy, by breadth-first
// closure of generator sets. Independent of the canonical-key machinery.
std::set<std::vector<uint16_t>> all_subgroups_brute(const GroupTable& T) {
    std::set<std::vector<uint16_t>> subs;
    std::vector<std::vector<uint16_t>> work;
    std::vector<uint16_t> trivial{0};
    subs.insert(trivial);
    work.push_back(trivial);
    for (size_t qi = 0; qi < work.size(); ++qi) {
        std::vector<uint16_t> cur = work[qi];
        std::vector<bool> in(T.size(), false);
        for (uint16_t h : cur) in[h] = true;
        for (uint16_t g = 0; g < T.size(); ++g) {
            if (in[g]) continue;
            std::vector<uint16_t> seed = cur;
            seed.push_back(g);
            auto sub = T.close(seed);
            if (subs.insert(sub).second) work.push_back(sub);
        }
    }
    return subs;
}

}  // namespace

TEST_CASE("conjugacy classes of S2 and the order-18 centralizer") {
    GroupTable s2 = GroupTable::build(PermGroup(2, {Perm::parse("(1,2)", 2)}));
    CHECK(subgroup_conjugacy_classes(s2).size() == 2);

    GroupTable w32 = GroupTable::build(centralizer_of_pi(3, 2));
    auto classes = subgroup_conjugacy_classes(w32);
    CHECK(classes.size() == 9);
    // first class is trivial, last is the whole group
    CHECK(classes.front().order() == 1);
    CHECK(classes.back().order() == 18);
}

TEST_CASE("class list is deterministic") {
    GroupTable t1 = GroupTable::build(centralizer_of_pi(2, 3));
    GroupTable t2 = GroupTable::build(centralizer_of_pi(2, 3));
    auto c1 = subgroup_conjugacy_classes(t1);
    auto c2 = subgroup_conjugacy_classes(t2);
    REQUIRE(c1.size() == c2.size());
    for (size_t i = 0; i < c1.size(); ++i) {
        CHECK(c1[i].elements == c2[i].elements);
        CHECK(c1[i].gens == c2[i].gens);
    }
}

TEST_CASE("class representatives generate what they claim") {
    GroupTable T = GroupTable::build(centralizer_of_pi(3, 2));
    for (const auto& cls : subgroup_conjugacy_classes(T)) {
        auto regen = T.close(cls.gens);
        CHECK(regen == cls.elements);
        auto [key, s] = T.canonical_key(cls.elements);
        CHECK(key == cls.elements);  // representatives are stored canonically
    }
}

TEST_CASE("normalizer-sum count matches brute-force enumeration") {
    for (auto [n, r] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
        GroupTable T = GroupTable::build(centralizer_of_pi(n, r));
        auto classes = subgroup_conjugacy_classes(T);
        size_t via_classes = 0;
        for (const auto& cls : classes)
            via_classes += T.size() / T.normalizer_order(cls.elements);
        auto brute = all_subgroups_brute(T);
        CAPTURE(n);
        CAPTURE(r);
        CHECK(via_classes == brute.size());

        // and the class count matches deduplicating the brute-force list
        std::set<std::vector<uint16_t>> keys;
        for (const auto& sub : brute) keys.insert(T.canonical_key(sub).first);
        CHECK(keys.size() == classes.size());
    }
}

TEST_CASE("subgroup enumeration rejects oversized ambient groups") {
    CHECK_THROWS_AS(GroupTable::build(centralizer_of_pi(5, 6)), std::domain_error);
    CHECK_THROWS_WITH_AS(subgroup_conjugacy_classes(centralizer_of_pi(5, 6)),
                         "subgroup_conjugacy_classes: extended mode required", std::domain_error);
    // the PermGroup entry point agrees with the table-level one
    CHECK(subgroup_conjugacy_classes(centralizer_of_pi(3, 2)).size() == 9);
}

TEST_CASE("iso fingerprints of the named structures") {
    PermGroup klein(4, {Perm::parse("(1,2)(3,4)", 4), Perm::parse("(1,3)(2,4)", 4)});
    CHECK(iso_fingerprint(klein).tag() == "Z/2 x Z/2");

    PermGroup z4(4, {Perm::parse("(1,2,3,4)", 4)});
    CHECK(iso_fingerprint(z4).tag() == "undecided");  // cyclic of order 4, exponent 4

    PermGroup z5z5(10, {Perm::parse("(1,2,3,4,5)", 10), Perm::parse("(6,7,8,9,10)", 10)});
    auto fp = iso_fingerprint(z5z5);
    CHECK(fp.tag() == "Z/5 x Z/5");
    CHECK(fp.order_multiset.at(5) == 24);

    PermGroup s3z5(8, {Perm::parse("(1,2)", 8), Perm::parse("(1,2,3)", 8),
                       Perm::parse("(4,5,6,7,8)", 8)});
    auto fp2 = iso_fingerprint(s3z5);
    CHECK(fp2.order == 30);
    CHECK_FALSE(fp2.abelian);
    CHECK(fp2.center_order == 5);
    CHECK(fp2.tag() == "S3 x Z/5");
    CHECK(fp2.exponent == 30);
}
