#include <set>

#include "doctest.h"
#include "spf/meataxe.hpp"
#include "spf/symgroup.hpp"

using namespace spf;

namespace {
Poly make_poly(uint32_t p, std::vector<uint32_t> c) {
    Poly f;
    f.p = p;
    f.c = std::move(c);
    f.normalize();
    return f;
}
}  // namespace

TEST_CASE("poly factorization over F_3") {
    // x^2 + 1 irreducible over F_3
    auto f1 = poly_factor(make_poly(3, {1, 0, 1}));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].first.deg() == 2);
    CHECK(f1[0].second == 1);

    // x^2 − 1 = (x−1)(x+1)
    auto f2 = poly_factor(make_poly(3, {2, 0, 1}));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].first.deg() == 1);
    CHECK(f2[1].first.deg() == 1);

    // (x−1)^3 = x^3 − 1 over F_3
    auto f3 = poly_factor(make_poly(3, {2, 0, 0, 1}));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].first.deg() == 1);
    CHECK(f3[0].second == 3);

    // product check on a random-ish quintic over F_5
    Poly f = make_poly(5, {2, 3, 0, 1, 4, 1});
    auto fac = poly_factor(f);
    Poly prod = make_poly(5, {1});
    int degsum = 0;
    for (auto& [g, mult] : fac) {
        for (int i = 0; i < mult; ++i) prod = poly_mul(prod, g);
        degsum += g.deg() * mult;
    }
    CHECK(degsum == f.deg());
    CHECK(poly_monic(prod).c == poly_monic(f).c);
}

TEST_CASE("krylov_min_poly annihilates") {
    SymMod reg = regular_module(3, 3);
    Mat w = reg.action.gen(0).add(reg.action.gen(1).scale(2));
    Poly mu = krylov_min_poly(w, 5);
    CHECK(poly_eval(mu, w).is_zero());
}

TEST_CASE("certify_simple") {
    CHECK(certify_simple(trivial_module(3, 3).action, 0).simple);

    // direct sum m ⊕ m has the diagonal as a proper submodule
    SymMod m = perm_module({2, 1}, 5);
    ModAction mm = direct_sum(m.action, m.action);
    SimpleCert c = certify_simple(mm, 0);
    CHECK(!c.simple);
    CHECK(c.submodule.cols > 0);
    CHECK(c.submodule.cols < mm.dim);

    // S^(2,1) at p=5 is simple of dim 2 (form nondegenerate)
    SpechtModule sp = specht({2, 1}, 5);
    CHECK(sp.mod.dim() == 2);
    CHECK(certify_simple(sp.mod.action, 0).simple);
}

TEST_CASE("composition factors of the tensor square over kS_2 at p=3") {
    TensorPowerMod tp = tensor_power_module(2, 2, 3);
    auto factors = composition_factors(tp.left.action, 0);
    int total = 0;
    std::multiset<int> dims;
    for (auto& f : factors) {
        total += f.dim;
        dims.insert(f.dim);
    }
    CHECK(total == 4);
    // brute-force check: count composition factors via the submodule lattice.
    // p=3 does not divide |S_2|, so the module is semisimple: sym (3 trivials
    // as fixed lines? no: sym part is spanned by e11, e12+e21, e22 — all fixed)
    // and the sign line. Expect multiset {1,1,1,1}.
    SymMod triv = trivial_module(2, 3), sgn = sign_module(2, 3);
    int triv_count = 0, sgn_count = 0;
    for (auto& f : factors) {
        REQUIRE(f.dim == 1);
        if (is_isomorphic(f, triv.action, 0).isomorphic) triv_count++;
        if (is_isomorphic(f, sgn.action, 0).isomorphic) sgn_count++;
    }
    CHECK(triv_count == 3);
    CHECK(sgn_count == 1);
}

TEST_CASE("radical_top on semisimple input") {
    SymMod m21 = perm_module({2, 1}, 5);  // p=5 > d=3: semisimple
    std::vector<ModAction> simples;
    for (auto& lam : partitions_of(3))
        if (classify(lam, 5).p_regular) simples.push_back(simple_d(lam, 5).action);
    RadicalTop rt = radical_top(m21.action, simples);
    CHECK(rt.radical.cols == 0);
    CHECK(rt.top.dim == 3);
}

TEST_CASE("radical_top detects incomplete simple lists") {
    SymMod m21 = perm_module({2, 1}, 5);
    std::vector<ModAction> only_triv{trivial_module(3, 5).action};
    CHECK_THROWS(radical_top(m21.action, only_triv));
}

TEST_CASE("fitting_decompose") {
    // indecomposable module stays whole
    SymMod triv = trivial_module(3, 3);
    FittingResult r1 = fitting_decompose(triv.action, 0);
    CHECK(r1.summands.size() == 1);
    CHECK(r1.summands[0].certified_indecomposable);

    // m ⊕ n with m ≄ n simple splits into {m, n}
    SymMod sgn = sign_module(3, 3);
    ModAction sum = direct_sum(triv.action, sgn.action);
    FittingResult r2 = fitting_decompose(sum, 0);
    CHECK(r2.summands.size() == 2);
    CHECK(!r2.maybe_decomposable);
    // projections reassemble: dims add up and bases are complementary
    Mat joined = hcat(r2.summands[0].basis, r2.summands[1].basis);
    CHECK(rank_of(joined) == 2);

    // (F_3^2)^{⊗2} over kS_2 at p=3: semisimple, splits to {1,1,1,1}
    TensorPowerMod tp = tensor_power_module(2, 2, 3);
    FittingResult r3 = fitting_decompose(tp.left.action, 0);
    std::multiset<int> dims;
    for (auto& s : r3.summands) dims.insert(s.action.dim);
    CHECK(dims == std::multiset<int>{1, 1, 1, 1});
}

TEST_CASE("is_isomorphic_deep separates by factors") {
    // triv⊕sgn vs triv⊕triv over kS_3, p=3: hom space nonzero both ways but
    // factor multisets differ.
    SymMod triv = trivial_module(3, 3), sgn = sign_module(3, 3);
    ModAction a = direct_sum(triv.action, sgn.action);
    ModAction b = direct_sum(triv.action, triv.action);
    IsoResult r = is_isomorphic_deep(a, b, 0);
    CHECK(!r.isomorphic);
    CHECK(r.conclusive);
}
