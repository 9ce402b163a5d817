#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spf/mat.hpp"
#include "spf/rng.hpp"

namespace spf {

/// Finite-dimensional module over a finitely generated algebra, given by
/// the action matrices of a fixed labeled generating family.
struct ModAction {
    uint32_t p = 0;
    int dim = 0;
    std::string algebra;  // e.g. "kS3|p=3", "S(3,3)|p=3"
    std::vector<std::string> labels;
    std::vector<Mat> gens;

    const Mat& gen(size_t i) const { return gens[i]; }
    size_t ngens() const { return gens.size(); }
    void check_shapes() const;
};

struct ModMorphism {
    Mat mat;  // target.dim × source.dim
    bool intertwines(const ModAction& source, const ModAction& target) const;
};

ModAction direct_sum(const ModAction& a, const ModAction& b);

/// Character data used as a cheap isomorphism discriminator: traces of a
/// deterministic family of generator words.
std::vector<uint32_t> trace_signature(const ModAction& m);

/// Smallest generator-stable subspace containing the seed vectors.
/// Returns basis columns (ambient dim × k).
Mat spin(const ModAction& m, const std::vector<std::vector<uint32_t>>& seeds);

/// Restriction of the action to a stable subspace (basis columns).
ModAction submodule_action(const ModAction& m, const Mat& basis);
/// Action on ambient/quotient by a stable subspace; also returns the
/// projection matrix (q × dim).
struct QuotientData {
    ModAction action;
    Mat projection;
};
QuotientData quotient_action(const ModAction& m, const Mat& stable_subspace);

/// Basis of the space of intertwiners source → target, computed by
/// generator-by-generator refinement.
std::vector<Mat> hom_space(const ModAction& source, const ModAction& target);

struct IsoResult {
    bool isomorphic = false;
    bool conclusive = true;
    std::optional<Mat> witness;  // invertible intertwiner target←source... (target.dim × source.dim)
    std::string reason;          // discriminating invariant or search summary
};

/// Decides isomorphism. Tries cheap invariants (dimension, trace
/// signature), then searches hom_space for an invertible element:
/// exhaustively when p^dim(Hom) is small, otherwise by seeded sampling
/// plus composition-factor comparison (see meataxe.hpp) as the refutation
/// certificate of last resort.
IsoResult is_isomorphic(const ModAction& a, const ModAction& b, uint64_t seed);

/// Verifies that w is an invertible intertwiner a → b.
bool validate_witness(const ModAction& a, const ModAction& b, const Mat& w);

}  // namespace spf
