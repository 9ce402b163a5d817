#include "doctest.h"
#include <set>

#include "spf/divided.hpp"
#include "spf/perm.hpp"
#include "spf/rng.hpp"

using namespace spf;

namespace {
DividedElt single(uint32_t p, const PairSeq& m) {
    DividedElt e;
    e.p = p;
    e.add_term(m, 1);
    return e;
}
}  // namespace

TEST_CASE("pairseq utilities") {
    PairSeq m = make_pairseq({{1, 0}, {0, 1}, {1, 0}});
    CHECK(m.size() == 3);
    CHECK(arrangement_count(m) == 3);  // 3!/2!
    CHECK(transpose_pairseq(transpose_pairseq(m)) == m);
    CHECK(row_content(m, 2) == Composition{1, 2});
    CHECK(col_content(m, 2) == Composition{2, 1});
}

TEST_CASE("d=1 composition is matrix multiplication") {
    // single pairs compose like elementary matrices
    uint32_t p = 5;
    DividedElt e01 = single(p, make_pairseq({{0, 1}}));
    DividedElt e12 = single(p, make_pairseq({{1, 2}}));
    DividedElt prod = compose_divided(e01, e12);
    REQUIRE(prod.terms.size() == 1);
    CHECK(prod.terms.begin()->first == make_pairseq({{0, 2}}));

    DividedElt zero = compose_divided(e12, e01);
    CHECK(zero.is_zero());
}

TEST_CASE("tensor action is multiplicative (pure-power law)") {
    // ρ_T(ξ∘ξ') = ρ_T(ξ)·ρ_T(ξ') for random basis elements at n=2, d=2
    uint32_t p = 3;
    Rng rng(17);
    std::vector<PairSeq> basis;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    PairSeq m = make_pairseq({{a, b}, {c, d}});
                    if (std::find(basis.begin(), basis.end(), m) == basis.end())
                        basis.push_back(m);
                }
    CHECK(basis.size() == 10);  // dim S(2,2)
    for (int trial = 0; trial < 40; ++trial) {
        const PairSeq& f = basis[rng.below(basis.size())];
        const PairSeq& g = basis[rng.below(basis.size())];
        DividedElt prod = compose_pairseq(f, g, p);
        Mat lhs = tensor_action(prod, 2, 2).to_mat();
        Mat rhs = tensor_action(f, 2, 2, p).to_mat().mul(tensor_action(g, 2, 2, p).to_mat());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("weight idempotents are orthogonal and sum to the identity on T") {
    uint32_t p = 3;
    int n = 3, d = 3;
    auto lambdas = enumerate_lambda(n, d, LambdaKind::All);
    Mat sum(p, 27, 27);
    for (auto& lam : lambdas) {
        PairSeq e = weight_idempotent_seq(lam);
        Mat m = tensor_action(e, n, d, p).to_mat();
        CHECK(m.mul(m) == m);
        sum = sum.add(m);
    }
    CHECK(sum == Mat::identity(p, 27));
    // pairwise orthogonal
    for (size_t i = 0; i < lambdas.size(); ++i)
        for (size_t j = i + 1; j < lambdas.size(); ++j) {
            DividedElt prod = compose_pairseq(weight_idempotent_seq(lambdas[i]),
                                              weight_idempotent_seq(lambdas[j]), p);
            CHECK(prod.is_zero());
        }
}

TEST_CASE("corner elements compose like permutations") {
    uint32_t p = 5;
    for (int d = 2; d <= 3; ++d) {
        auto perms = all_perms(d);
        for (const Perm& s : perms)
            for (const Perm& t : perms) {
                DividedElt prod = compose_pairseq(corner_seq(s), corner_seq(t), p);
                REQUIRE(prod.terms.size() == 1);
                CHECK(prod.terms.begin()->first == corner_seq(perm_compose(s, t)));
                CHECK(prod.terms.begin()->second == 1);
            }
    }
}

TEST_CASE("gamma_embed is an algebra map into S(n^2, d)") {
    uint32_t p = 3;
    int n = 2, d = 2;
    EndoMap phi = endo_right_factor(n);
    Rng rng(23);
    std::vector<PairSeq> basis;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e) {
                    PairSeq m = make_pairseq({{a, b}, {c, e}});
                    if (std::find(basis.begin(), basis.end(), m) == basis.end())
                        basis.push_back(m);
                }
    for (int trial = 0; trial < 25; ++trial) {
        const PairSeq& f = basis[rng.below(basis.size())];
        const PairSeq& g = basis[rng.below(basis.size())];
        DividedElt lhs = gamma_embed(compose_pairseq(f, g, p), phi, d);
        DividedElt rhs = compose_divided(gamma_embed(single(p, f), phi, d),
                                         gamma_embed(single(p, g), phi, d));
        CHECK(lhs.terms == rhs.terms);
    }
    // identity maps to identity: Σ_λ e_λ over n ↦ Σ_μ e_μ over n²
    DividedElt unit_n;
    unit_n.p = p;
    for (auto& lam : enumerate_lambda(n, d, LambdaKind::All))
        unit_n.add_term(weight_idempotent_seq(lam), 1);
    DividedElt img = gamma_embed(unit_n, phi, d);
    DividedElt unit_n2;
    unit_n2.p = p;
    for (auto& lam : enumerate_lambda(n * n, d, LambdaKind::All))
        unit_n2.add_term(weight_idempotent_seq(lam), 1);
    CHECK(img.terms == unit_n2.terms);
}

TEST_CASE("dg_generators generate S(n,d): spin of the regular module") {
    // left multiplication by the family reaches every basis element
    for (auto [n, d] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
        uint32_t p = 3;
        // collect full basis of S(n,d): multisets of size d over pairs
        std::set<PairSeq> bset;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) pairs.push_back({i, j});
        std::vector<int> idx(d, 0);
        while (true) {
            std::vector<std::pair<int, int>> chosen;
            for (int t = 0; t < d; ++t) chosen.push_back(pairs[idx[t]]);
            bset.insert(make_pairseq(chosen));
            int t = 0;
            while (t < d && idx[t] == int(pairs.size()) - 1) idx[t++] = 0;
            if (t == d) break;
            idx[t]++;
        }
        std::vector<PairSeq> basis(bset.begin(), bset.end());
        size_t dim = binomial(n * n + d - 1, d);
        REQUIRE(basis.size() == dim);
        std::map<PairSeq, int> index;
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);

        // spin span{1} under left multiplication by the generators
        auto to_vec = [&](const DividedElt& e) {
            std::vector<uint32_t> v(dim, 0);
            for (auto& [m, c] : e.terms) v[index.at(m)] = c;
            return v;
        };
        DividedElt unit;
        unit.p = p;
        for (auto& lam : enumerate_lambda(n, d, LambdaKind::All))
            unit.add_term(weight_idempotent_seq(lam), 1);
        auto gens = dg_generators(n, d, p);
        Echelon ech(p, int(dim));
        std::vector<DividedElt> pending{unit};
        ech.add(to_vec(unit));
        while (!pending.empty()) {
            DividedElt cur = std::move(pending.back());
            pending.pop_back();
            for (auto& g : gens) {
                DividedElt prod = compose_divided(g.elt, cur);
                if (ech.add(to_vec(prod))) pending.push_back(prod);
            }
        }
        CHECK(ech.rank() == int(dim));
    }
}
