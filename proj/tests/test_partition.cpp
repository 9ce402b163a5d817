#include <set>

#include "doctest.h"
#include "spf/partition.hpp"
#include "spf/perm.hpp"

using namespace spf;

TEST_CASE("enumerate_lambda all compositions") {
    auto l22 = enumerate_lambda(2, 2, LambdaKind::All);
    REQUIRE(l22.size() == 3);
    CHECK(l22[0] == Composition{2, 0});
    CHECK(l22[1] == Composition{1, 1});
    CHECK(l22[2] == Composition{0, 2});

    // |Λ(n,d)| = C(n+d−1, n−1), duplicate-free, for n,d ≤ 6
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 6; ++d) {
            auto all = enumerate_lambda(n, d, LambdaKind::All);
            CHECK(all.size() == binomial(n + d - 1, n - 1));
            std::set<Composition> s(all.begin(), all.end());
            CHECK(s.size() == all.size());
            for (auto& c : all) CHECK(degree_of(c) == d);
        }
}

TEST_CASE("enumerate_lambda dominant and restricted") {
    auto dom = enumerate_lambda(3, 3, LambdaKind::Dominant);
    REQUIRE(dom.size() == 3);
    CHECK(dom[0] == Composition{3});
    CHECK(dom[1] == Composition{2, 1});
    CHECK(dom[2] == Composition{1, 1, 1});

    auto res = enumerate_lambda(3, 3, LambdaKind::PRestricted, 3);
    REQUIRE(res.size() == 2);
    CHECK(res[0] == Composition{2, 1});
    CHECK(res[1] == Composition{1, 1, 1});
}

TEST_CASE("conjugate") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({1, 1, 1}) == Partition{3});
    for (int d = 1; d <= 8; ++d)
        for (const auto& lam : partitions_of(d)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("classify flags") {
    auto f1 = classify({3}, 3);
    CHECK(!f1.p_restricted);
    CHECK(f1.p_regular);

    auto f2 = classify({1, 1, 1}, 3);
    CHECK(f2.p_restricted);
    CHECK(!f2.p_regular);

    auto f3 = classify({3, 1}, 3);
    CHECK(f3.p_core);  // hooks {4,2,1,1}

    // brute-force re-derivation of the flags for all partitions of d ≤ 8
    for (int d = 1; d <= 8; ++d)
        for (const auto& lam : partitions_of(d))
            for (uint32_t p : {2u, 3u, 5u}) {
                auto fl = classify(lam, p);
                bool restricted = true;
                for (size_t i = 0; i < lam.size(); ++i) {
                    int next = i + 1 < lam.size() ? lam[i + 1] : 0;
                    if (lam[i] - next >= int(p)) restricted = false;
                }
                bool regular = true;
                for (int v = 1; v <= d; ++v) {
                    int count = 0;
                    for (int part : lam)
                        if (part == v) count++;
                    if (count >= int(p)) regular = false;
                }
                bool core = true;
                for (int h : hook_lengths(lam))
                    if (h % int(p) == 0) core = false;
                CHECK(fl.p_restricted == restricted);
                CHECK(fl.p_regular == regular);
                CHECK(fl.p_core == core);
            }
}

TEST_CASE("hook lengths of (3,1)") {
    auto h = hook_lengths({3, 1});
    std::multiset<int> hs(h.begin(), h.end());
    CHECK(hs == std::multiset<int>{4, 2, 1, 1});
}

TEST_CASE("p_core_of") {
    CHECK(p_core_of({3}, 3) == Partition{});
    CHECK(p_core_of({3, 1}, 3) == Partition{3, 1});
    for (int d = 1; d <= 8; ++d)
        for (const auto& lam : partitions_of(d)) {
            Partition core = p_core_of(lam, 3);
            CHECK(classify(core, 3).p_core);
            if (classify(lam, 3).p_core) CHECK(core == lam);
            CHECK((degree_of(lam) - degree_of(core)) % 3 == 0);
        }
}

TEST_CASE("compare dominance and lex") {
    CHECK(compare({2, 1}, {3}, Order::Dominance) == Cmp::Less);
    CHECK(compare({3, 3}, {4, 1, 1}, Order::Dominance) == Cmp::Incomparable);
    CHECK(compare({3}, {2, 1}, Order::Lex) == Cmp::Greater);
    CHECK(compare({2, 1}, {1, 1, 1}, Order::Lex) == Cmp::Greater);
    CHECK_THROWS(compare({2}, {3}, Order::Lex));

    // dominance against brute-force partial sums on all pairs at d = 6
    for (const auto& a : partitions_of(6))
        for (const auto& b : partitions_of(6)) {
            bool le = true, ge = true;
            int sa = 0, sb = 0;
            for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
                sa += i < a.size() ? a[i] : 0;
                sb += i < b.size() ? b[i] : 0;
                le = le && sa <= sb;
                ge = ge && sa >= sb;
            }
            Cmp want = le && ge   ? Cmp::Equal
                       : le       ? Cmp::Less
                       : ge       ? Cmp::Greater
                                  : Cmp::Incomparable;
            CHECK(compare(a, b, Order::Dominance) == want);
        }
}

TEST_CASE("mullineux paper values and involution") {
    CHECK(mullineux({2, 1}, 3) == Partition{3});
    CHECK(mullineux({3}, 3) == Partition{2, 1});
    CHECK(mullineux({4, 1}, 5) == Partition{3, 1, 1});

    for (uint32_t p : {3u, 5u})
        for (int d = 1; d <= 8; ++d)
            for (const auto& lam : partitions_of(d)) {
                if (!classify(lam, p).p_regular) continue;
                Partition img = mullineux(lam, p);
                CHECK(degree_of(img) == d);
                CHECK(classify(img, p).p_regular);
                CHECK(mullineux(img, p) == lam);
            }
    CHECK_THROWS(mullineux({1, 1, 1}, 3));
}

TEST_CASE("mullineux_restricted wrapper") {
    CHECK(mullineux_restricted({1, 1, 1}, 3) == Partition{2, 1});
    CHECK(mullineux_restricted({2, 1}, 3) == Partition{1, 1, 1});
    for (uint32_t p : {3u, 5u})
        for (int d = 1; d <= 8; ++d)
            for (const auto& lam : partitions_of(d)) {
                if (!classify(lam, p).p_restricted) continue;
                Partition img = mullineux_restricted(lam, p);
                CHECK(classify(img, p).p_restricted);
                CHECK(mullineux_restricted(img, p) == lam);
            }
}

TEST_CASE("tableau counters") {
    CHECK(count_standard_tableaux({2, 1}) == 2);
    CHECK(count_standard_tableaux({3, 1}) == 3);
    CHECK(count_standard_tableaux({2, 2}) == 2);
    CHECK(count_semistandard_tableaux({2, 1}, 3) == 8);
    CHECK(count_semistandard_tableaux({1, 1, 1}, 3) == 1);
    CHECK(count_semistandard_tableaux({3}, 3) == 10);
}

TEST_CASE("partition text format") {
    CHECK(format_partition({2, 1}) == "(2,1)");
    CHECK(parse_parts("2,1", true) == std::vector<int>{2, 1});
    CHECK_THROWS(parse_parts("1,2", true));
    CHECK_THROWS(parse_parts("a,b", false));
    CHECK_THROWS(parse_parts("", false));
}

TEST_CASE("perm helpers") {
    auto perms = all_perms(4);
    CHECK(perms.size() == 24);
    for (const Perm& s : perms) {
        Perm inv = perm_inverse(s);
        CHECK(is_identity(perm_compose(s, inv)));
        auto word = adjacent_word(s);
        Perm rebuilt = perm_identity(4);
        for (int i : word) rebuilt = perm_compose(rebuilt, adjacent_transposition(4, i));
        CHECK(rebuilt == s);
        CHECK(perm_sign(s) == (word.size() % 2 ? -1 : 1));
    }
    CHECK(conjugacy_representatives(4).size() == 5);
    CHECK(young_subgroup_gens({2, 2}) == std::vector<int>{0, 2});
}
