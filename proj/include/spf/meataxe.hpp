#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spf/modact.hpp"

namespace spf {

// ---- univariate polynomials over F_p (for word minimal polynomials) ----
struct Poly {
    uint32_t p = 0;
    std::vector<uint32_t> c;  // coefficients, c[i]·x^i, normalized (no trailing zeros)

    int deg() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
};

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& m);
Poly poly_gcd(Poly a, Poly b);
Poly poly_derivative(const Poly& a);
Poly poly_monic(Poly a);

/// Irreducible factors with multiplicities (Berlekamp over F_p).
std::vector<std::pair<Poly, int>> poly_factor(const Poly& f);

/// Minimal polynomial of the matrix on the cyclic subspace of a few seeded
/// vectors (a divisor of the true minimal polynomial, usually equal).
Poly krylov_min_poly(const Mat& m, uint64_t seed);

/// Evaluate f at the matrix.
Mat poly_eval(const Poly& f, const Mat& m);

// ---- MeatAxe ----

struct SimpleCert {
    bool simple = false;
    Mat submodule;       // proper invariant subspace when not simple
    std::string detail;  // certification trail
};

/// Norton-criterion irreducibility test. Returns either a simplicity
/// certificate or an explicit proper submodule. Throws if the search
/// budget is exhausted without either outcome.
SimpleCert certify_simple(const ModAction& m, uint64_t seed);

/// Recursive composition series splitting; factors are certified simple.
std::vector<ModAction> composition_factors(const ModAction& m, uint64_t seed);

/// is_isomorphic plus composition-factor comparison as the refutation
/// certificate when hom-space search alone is inconclusive.
IsoResult is_isomorphic_deep(const ModAction& a, const ModAction& b, uint64_t seed);

struct RadicalTop {
    Mat radical;  // basis columns
    ModAction top;
    Mat top_projection;
};

/// rad = intersection of kernels of all morphisms onto the listed simples;
/// verifies semisimplicity of the quotient against the list and throws on
/// an incomplete simple list.
RadicalTop radical_top(const ModAction& m, const std::vector<ModAction>& simples);

struct Summand {
    Mat basis;
    ModAction action;
    bool certified_indecomposable = false;
};

struct FittingResult {
    std::vector<Summand> summands;
    bool maybe_decomposable = false;  // budget exhausted before certification
};

/// Splits via Fitting decompositions of endomorphisms; indecomposability is
/// certified by exhaustive nilpotent-or-invertible scan of End(m) when the
/// endomorphism algebra is small enough to enumerate.
FittingResult fitting_decompose(const ModAction& m, uint64_t seed);

}  // namespace spf
