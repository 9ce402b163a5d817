#include "doctest.h"
#include "spf/modact.hpp"
#include "spf/symgroup.hpp"

using namespace spf;

TEST_CASE("spin basics over kS_2") {
    // (F_5^2)^{⊗2}: swap generator
    TensorPowerMod tp = tensor_power_module(2, 2, 5);
    const ModAction& m = tp.left.action;

    CHECK(spin(m, {std::vector<uint32_t>(4, 0)}).cols == 0);

    // seed e1⊗e2 − e2⊗e1 spans the sign line
    std::vector<uint32_t> v(4, 0);
    v[1] = 1;
    v[2] = 4;
    Mat sub = spin(m, {v});
    CHECK(sub.cols == 1);
    ModAction a = submodule_action(m, sub);
    CHECK(a.gen(0).at(0, 0) == 4);  // transposition acts by −1

    // generator stability of any spin output
    for (int j = 0; j < sub.cols; ++j) {
        Echelon ech(m.p, m.dim);
        for (int c = 0; c < sub.cols; ++c) ech.add(sub.col_vec(c));
        CHECK(ech.contains(m.gen(0).apply_vec(sub.col_vec(j))));
    }
}

TEST_CASE("hom_space basics") {
    SymMod triv = trivial_module(2, 3), sgn = sign_module(2, 3);
    CHECK(hom_space(triv.action, sgn.action).empty());
    CHECK(hom_space(triv.action, triv.action).size() == 1);

    SymMod reg = regular_module(3, 3);
    // dim Hom(free of rank 1, N) = dim N
    SymMod m21 = perm_module({2, 1}, 3);
    CHECK(hom_space(reg.action, m21.action).size() == 3);

    // hom(m, m) contains the identity
    auto endo = hom_space(m21.action, m21.action);
    bool has_id = false;
    Mat id = Mat::identity(3, m21.dim());
    Mat stacked(3, m21.dim() * m21.dim(), int(endo.size()));
    for (size_t k = 0; k < endo.size(); ++k)
        for (int i = 0; i < m21.dim(); ++i)
            for (int j = 0; j < m21.dim(); ++j)
                stacked.at(i * m21.dim() + j, int(k)) = endo[k].at(i, j);
    Mat rhs(3, m21.dim() * m21.dim(), 1);
    for (int i = 0; i < m21.dim(); ++i) rhs.at(i * m21.dim() + i, 0) = 1;
    has_id = solve_linear(stacked, rhs).has_value();
    CHECK(has_id);

    // every hom element intertwines exactly
    for (const Mat& h : endo) CHECK(ModMorphism{h}.intertwines(m21.action, m21.action));
}

TEST_CASE("is_isomorphic basics") {
    SymMod triv = trivial_module(3, 5), sgn = sign_module(3, 5);
    IsoResult same = is_isomorphic(triv.action, triv.action, 0);
    CHECK(same.isomorphic);
    CHECK(validate_witness(triv.action, triv.action, *same.witness));

    IsoResult diff = is_isomorphic(triv.action, sgn.action, 0);
    CHECK(!diff.isomorphic);
    CHECK(diff.conclusive);

    // basis-permuted copy
    SymMod m21 = perm_module({2, 1}, 5);
    Mat u(5, 3, 3);
    u.at(0, 2) = 1;
    u.at(1, 0) = 1;
    u.at(2, 1) = 1;
    ModAction permuted = m21.action;
    Mat uinv = *inverse(u);
    for (Mat& g : permuted.gens) g = u.mul(g.mul(uinv));
    IsoResult r = is_isomorphic(m21.action, permuted, 1);
    REQUIRE(r.isomorphic);
    CHECK(validate_witness(m21.action, permuted, *r.witness));
}

TEST_CASE("quotient_action rejects unstable subspaces") {
    SymMod m21 = perm_module({2, 1}, 3);
    Mat line(3, 3, 1);
    line.at(0, 0) = 1;  // a single monomial line is not stable
    CHECK_THROWS(quotient_action(m21.action, line));
}

TEST_CASE("direct sum and dims") {
    SymMod a = trivial_module(3, 3), b = sign_module(3, 3);
    ModAction s = direct_sum(a.action, b.action);
    CHECK(s.dim == 2);
    ModAction t = direct_sum(s, s);
    CHECK(t.dim == 4);
}
