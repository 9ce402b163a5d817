#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spf/modact.hpp"
#include "spf/partition.hpp"
#include "spf/perm.hpp"

namespace spf {

/// Module over kS_d presented by the adjacent transpositions s_1..s_{d-1}.
/// Generator relations are verified at construction.
struct SymMod {
    int d = 0;
    ModAction action;

    const Mat& s(int i) const { return action.gens[i]; }  // 0-based adjacent swap
    Mat perm_matrix(const Perm& sigma) const;
    int dim() const { return action.dim; }
};

SymMod make_symmod(int d, uint32_t p, std::vector<Mat> gens);
std::string symgroup_algebra_tag(int d, uint32_t p);

SymMod trivial_module(int d, uint32_t p);
SymMod sign_module(int d, uint32_t p);
SymMod regular_module(int d, uint32_t p);

/// Permutation module M^λ: monomials of content λ with place permutation.
SymMod perm_module(const Composition& lam, uint32_t p);

/// (k^n)^{⊗d} with the left action σ·(v_1⊗…⊗v_d) = v_{σ^{-1}(1)}⊗…; the
/// commuting right place-permutation action is exposed separately.
struct TensorPowerMod {
    SymMod left;
    std::vector<Mat> right_gens;  // right action of s_i
    int n = 0;
    Mat right_perm_matrix(const Perm& sigma) const;
};
TensorPowerMod tensor_power_module(int n, int d, uint32_t p);

SymMod kronecker(const SymMod& a, const SymMod& b);
SymMod internal_dual(const SymMod& n);
SymMod internal_hom_sym(const SymMod& a, const SymMod& b);

struct SpechtModule {
    SymMod mod;
    Mat gram;           // bilinear form on the standard polytabloid basis
    Mat basis_in_perm;  // polytabloid coordinates inside M^λ
};
SpechtModule specht(const Partition& lam, uint32_t p);

/// D^λ = Specht(λ) / rad of its bilinear form, for p-regular λ.
SymMod simple_d(const Partition& lam, uint32_t p);

/// The unique μ with D^λ ⊗ sgn ≅ D^μ, found by witnessed search.
Partition sign_twist_identify(const Partition& lam, int d, uint32_t p, uint64_t seed);

/// Trace vector on conjugacy class representatives.
std::vector<uint32_t> sym_character(const SymMod& m);

}  // namespace spf
