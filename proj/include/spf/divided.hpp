#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spf/mat.hpp"
#include "spf/partition.hpp"

namespace spf {

// Basis elements of Γ^d Hom(k^a, k^b) are multisets of d pairs (row, col),
// row < b, col < a, stored sorted. The element is the orbit sum over all
// distinct arrangements of the multiset inside Hom^{⊗d}.
using PairSeq = std::vector<std::pair<uint8_t, uint8_t>>;

PairSeq make_pairseq(std::vector<std::pair<int, int>> pairs);
PairSeq transpose_pairseq(const PairSeq& m);
std::string pairseq_label(const PairSeq& m);

Composition row_content(const PairSeq& m, int b);
Composition col_content(const PairSeq& m, int a);

/// Number of distinct arrangements d!/∏(multiplicities!).
uint64_t arrangement_count(const PairSeq& m);

/// Element of a divided-power hom space: sparse combination of multisets.
struct DividedElt {
    uint32_t p = 0;
    std::map<PairSeq, uint32_t> terms;

    void add_term(const PairSeq& m, uint32_t c);
    DividedElt& operator+=(const DividedElt& o);
    DividedElt scaled(uint32_t c) const;
    bool is_zero() const { return terms.empty(); }
};

/// Composition Γ^dHom(V_b,V_c) × Γ^dHom(V_a,V_b) → Γ^dHom(V_a,V_c):
/// placewise products over arrangement pairs, counted exactly over Z and
/// divided by the arrangement count of the result.
DividedElt compose_pairseq(const PairSeq& f, const PairSeq& g, uint32_t p);
DividedElt compose_divided(const DividedElt& f, const DividedElt& g);

DividedElt transpose_elt(const DividedElt& e);

// ---- action on the tensor power (k^m)^{⊗d} ----

struct SparseOp {
    int dim = 0;
    uint32_t p = 0;
    std::vector<std::tuple<uint32_t, uint32_t, uint32_t>> entries;  // (row, col, val)

    void apply_cols(const Mat& in, Mat& out) const;  // out += op * in
    Mat to_mat() const;
};

/// Monomial indexing in (k^m)^{⊗d}: index = Σ word[t]·m^t.
uint64_t monomial_index(const std::vector<uint8_t>& word, int m);
std::vector<uint8_t> monomial_of_index(uint64_t idx, int m, int d);

/// ρ_T(ξ_M) on (k^m)^{⊗d}: a 0/1 matrix with one entry per arrangement.
SparseOp tensor_action(const PairSeq& m_elt, int m, int d, uint32_t p);
SparseOp tensor_action(const DividedElt& e, int m, int d);

// ---- standard elements ----

/// Weight idempotent e_λ for λ ∈ Λ(n,d): multiset {(l,l) with mult λ_l}.
PairSeq weight_idempotent_seq(const Composition& lam);

/// Corner element for a permutation: multiset {(σ(j), j) : j < d}.
PairSeq corner_seq(const std::vector<int>& sigma);

/// Γ^d of a linear map End(k^n) → End(k^m) given by its action on
/// elementary matrices: E_{(i,j)} ↦ Σ_t coeff · E_{images[i][j][t]}.
using EndoMap = std::vector<std::vector<std::vector<std::pair<int, int>>>>;

DividedElt gamma_embed(const DividedElt& e, const EndoMap& phi, int d);

/// φ(E_{ij}) = Σ_k E_{(k·n+i),(k·n+j)} : the map f ↦ id_{k^n} ⊗ f into End(k^{n²}).
EndoMap endo_right_factor(int n);
/// φ(E_{ij}) = Σ_k E_{(i·n+k),(j·n+k)} : the map f ↦ f ⊗ id_{k^n}.
EndoMap endo_left_factor(int n);

/// Doty-Giaquinto style generating family of S(n,d): all weight idempotents
/// plus divided powers of the elementary raising/lowering maps.
struct LabeledElt {
    std::string label;
    DividedElt elt;
};
std::vector<LabeledElt> dg_generators(int n, int d, uint32_t p);

}  // namespace spf
