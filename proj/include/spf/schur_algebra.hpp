#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "spf/divided.hpp"
#include "spf/modact.hpp"
#include "spf/partition.hpp"
#include "spf/perm.hpp"

namespace spf {

std::string schur_algebra_tag(int n, int d, uint32_t p);

/// Element of S(n,d) as a sparse vector over the multiset basis.
using AlgElt = std::vector<std::pair<int, uint32_t>>;  // sorted by basis index

/// The Schur algebra S(n,d) over F_p: labeled multiset basis, lazy product
/// table, weight idempotents, corner data.
class SchurAlg {
public:
    SchurAlg(int n, int d, uint32_t p);

    int n() const { return n_; }
    int d() const { return d_; }
    uint32_t p() const { return p_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<PairSeq>& basis() const { return basis_; }
    int index_of(const PairSeq& m) const;
    const PairSeq& basis_elt(int i) const { return basis_[i]; }

    AlgElt to_elt(const DividedElt& e) const;
    DividedElt to_divided(const AlgElt& e) const;

    /// Structure constants row: basis_i ∘ basis_j (memoized, thread-safe).
    const AlgElt& product(int i, int j) const;
    AlgElt multiply(const AlgElt& a, const AlgElt& b) const;

    AlgElt unit() const;
    /// Weight idempotent basis indices, aligned with Λ(n,d) enumeration.
    const std::vector<Composition>& weights() const { return weights_; }
    int weight_index(const Composition& lam) const;
    PairSeq weight_seq(const Composition& lam) const { return weight_idempotent_seq(lam); }

    const std::vector<LabeledElt>& generators() const { return dg_; }

    /// Left regular module with the standard generator family.
    ModAction regular_module() const;
    /// Left-multiplication matrix of an element on the regular module.
    Mat left_regular(const DividedElt& e) const;

    /// Deterministic associativity spot-check on `count` seeded basis triples.
    bool associativity_check(int count, uint64_t seed) const;

    struct StructureConstants {
        std::vector<std::tuple<uint32_t, uint32_t, uint32_t, uint32_t>> triples;  // (i,j,k,val)
    };
    StructureConstants export_structure() const;  // forces the full table
    void import_structure(const StructureConstants& sc);

private:
    int n_, d_;
    uint32_t p_;
    std::vector<PairSeq> basis_;
    std::map<PairSeq, int> index_;
    std::vector<Composition> weights_;
    std::vector<LabeledElt> dg_;
    mutable std::map<std::pair<int, int>, AlgElt> products_;
    mutable std::shared_mutex mx_;
};

using SchurAlgPtr = std::shared_ptr<const SchurAlg>;
SchurAlgPtr get_schur_algebra(int n, int d, uint32_t p);

/// ω = (1,…,1,0,…) ∈ Λ(n,d); requires n ≥ d.
Composition omega_weight(int n, int d);

struct CornerIso {
    SchurAlgPtr alg;
    std::vector<Perm> perms;       // all of S_d, lex order
    std::vector<PairSeq> elements;  // corner basis element per permutation
    /// σ ↦ ξ_{graph(σ)} is multiplicative for operator composition; the
    /// paper's op appears when composing endomorphisms in the other order.
    std::string convention;
};

/// Builds and validates the corner isomorphism kS_d ≅ e_ω S(n,d) e_ω.
CornerIso symgroup_corner(SchurAlgPtr alg);

/// Γ^d Hom(k^m, k^n) as a left S(n,d)-module with the standard generator
/// family (basis: multisets of size d over [n]×[m]).
ModAction representable_module(SchurAlgPtr alg, int m);

}  // namespace spf
