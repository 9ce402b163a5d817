#include "doctest.h"
#include "spf/meataxe.hpp"
#include "spf/divided.hpp"
#include "spf/symgroup.hpp"

using namespace spf;

TEST_CASE("standard module dimensions") {
    CHECK(perm_module({3}, 3).dim() == 1);
    CHECK(perm_module({2, 1}, 3).dim() == 3);
    CHECK(regular_module(3, 3).dim() == 6);
    CHECK(tensor_power_module(2, 2, 3).left.dim() == 4);

    // perm((d)) is trivial
    SymMod md = perm_module({3}, 3);
    IsoResult r = is_isomorphic(md.action, trivial_module(3, 3).action, 0);
    CHECK(r.isomorphic);
}

TEST_CASE("tensor power decomposes into transitive permutation modules") {
    for (auto [n, d] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 2},
                        std::pair{3, 3}, std::pair{2, 4}, std::pair{4, 4}}) {
        int total = 0, power = 1;
        for (auto& lam : enumerate_lambda(n, d, LambdaKind::All)) total += perm_module(lam, 3).dim();
        for (int i = 0; i < d; ++i) power *= n;
        CHECK(total == power);
    }
    // dims of the λ-blocks at n=d=2: 1,2,1
    CHECK(perm_module({2, 0}, 3).dim() == 1);
    CHECK(perm_module({1, 1}, 3).dim() == 2);
}

TEST_CASE("tensor power right action composes contravariantly and commutes with S(n,d)") {
    TensorPowerMod tp = tensor_power_module(3, 3, 3);
    // right action extends anti-multiplicatively: R(στ) = R(τ)·R(σ)
    auto perms = all_perms(3);
    for (const Perm& s : perms)
        for (const Perm& t : perms) {
            Mat lhs = tp.right_perm_matrix(perm_compose(s, t));
            Mat rhs = tp.right_perm_matrix(t).mul(tp.right_perm_matrix(s));
            CHECK(lhs == rhs);
        }
    // the divided-power operators are exactly the commutant side: they
    // commute with every right place permutation
    for (const auto& gen : dg_generators(3, 3, 3)) {
        Mat op = tensor_action(gen.elt, 3, 3).to_mat();
        for (const Perm& s : perms) {
            Mat r = tp.right_perm_matrix(s);
            CHECK(op.mul(r) == r.mul(op));
        }
    }
}

TEST_CASE("kronecker unit and sign laws") {
    SymMod triv = trivial_module(3, 3), sgn = sign_module(3, 3);
    SymMod m21 = perm_module({2, 1}, 3);
    CHECK(is_isomorphic(kronecker(triv, m21).action, m21.action, 0).isomorphic);
    CHECK(is_isomorphic(kronecker(sgn, sgn).action, triv.action, 0).isomorphic);

    // regular ⊗ b ≅ regular^{⊕ dim b} for b = sign, d = 3, p = 3
    SymMod reg = regular_module(3, 3);
    IsoResult r = is_isomorphic(kronecker(reg, sgn).action, reg.action, 0);
    CHECK(r.isomorphic);
    CHECK(validate_witness(kronecker(reg, sgn).action, reg.action, *r.witness));
}

TEST_CASE("internal dual") {
    SymMod triv = trivial_module(3, 3);
    CHECK(is_isomorphic(internal_dual(triv).action, triv.action, 0).isomorphic);
    SymMod m21 = perm_module({2, 1}, 3);
    CHECK(is_isomorphic(internal_dual(internal_dual(m21)).action, m21.action, 0).isomorphic);
    // permutation modules are self-dual: all λ at d=3, p=3
    for (auto& lam : enumerate_lambda(3, 3, LambdaKind::All)) {
        if (degree_of(lam) != 3) continue;
        SymMod m = perm_module(lam, 3);
        IsoResult r = is_isomorphic(internal_dual(m).action, m.action, 0);
        CHECK(r.isomorphic);
    }
    // internal hom = dual ⊗
    SymMod sgn = sign_module(3, 3);
    CHECK(is_isomorphic(internal_hom_sym(sgn, m21).action,
                        kronecker(internal_dual(sgn), m21).action, 0)
              .isomorphic);
}

TEST_CASE("specht modules") {
    CHECK(is_isomorphic(specht({3}, 3).mod.action, trivial_module(3, 3).action, 0).isomorphic);
    CHECK(is_isomorphic(specht({1, 1, 1}, 3).mod.action, sign_module(3, 3).action, 0).isomorphic);
    CHECK(specht({2, 1}, 3).mod.dim() == 2);
    for (auto& lam : partitions_of(4))
        CHECK(specht(lam, 3).mod.dim() == int(count_standard_tableaux(lam)));
}

TEST_CASE("simple D modules") {
    // D^(d) is trivial
    CHECK(is_isomorphic(simple_d({3}, 3).action, trivial_module(3, 3).action, 0).isomorphic);
    // p=3, d=3: D^(2,1) is 1-dimensional and isomorphic to sign
    SymMod d21 = simple_d({2, 1}, 3);
    CHECK(d21.dim() == 1);
    CHECK(is_isomorphic(d21.action, sign_module(3, 3).action, 0).isomorphic);
    // p=5, d=3: the form is nondegenerate, D = Specht
    SymMod d21_5 = simple_d({2, 1}, 5);
    CHECK(d21_5.dim() == 2);
    CHECK(is_isomorphic(d21_5.action, specht({2, 1}, 5).mod.action, 0).isomorphic);
    // every D is certified simple and distinct λ give distinct D
    for (uint32_t p : {3u, 5u}) {
        std::vector<std::pair<Partition, SymMod>> ds;
        for (auto& lam : partitions_of(4))
            if (classify(lam, p).p_regular) ds.push_back({lam, simple_d(lam, p)});
        for (auto& [lam, dmod] : ds) CHECK(certify_simple(dmod.action, 1).simple);
        for (size_t i = 0; i < ds.size(); ++i)
            for (size_t j = i + 1; j < ds.size(); ++j)
                CHECK(!is_isomorphic(ds[i].second.action, ds[j].second.action, 2).isomorphic);
    }
    CHECK_THROWS(simple_d({1, 1, 1}, 3));
}

TEST_CASE("sign twist oracle matches the combinatorial Mullineux map") {
    CHECK(sign_twist_identify({3}, 3, 3, 0) == Partition{2, 1});
    CHECK(sign_twist_identify({2, 1}, 3, 3, 0) == Partition{3});
    for (uint32_t p : {3u, 5u})
        for (int d = 2; d <= 5; ++d)
            for (auto& lam : partitions_of(d)) {
                if (!classify(lam, p).p_regular) continue;
                CHECK(sign_twist_identify(lam, d, p, 0) == mullineux(lam, p));
            }
    // involution through the oracle at d ≤ 4
    for (int d = 2; d <= 4; ++d)
        for (auto& lam : partitions_of(d)) {
            if (!classify(lam, 3).p_regular) continue;
            CHECK(sign_twist_identify(sign_twist_identify(lam, d, 3, 0), d, 3, 0) == lam);
        }
}
