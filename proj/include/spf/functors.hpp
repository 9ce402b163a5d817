#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "spf/expr.hpp"
#include "spf/meataxe.hpp"
#include "spf/modact.hpp"
#include "spf/schur_algebra.hpp"
#include "spf/symgroup.hpp"

namespace spf {

/// A strict polynomial functor value at k^m: a module over S(m,d) with the
/// action of arbitrary algebra elements available on demand. Realizations
/// are immutable after construction; action matrices are memoized behind a
/// read-mostly lock.
class Realization {
public:
    virtual ~Realization() = default;

    int m() const { return m_; }
    int d() const { return d_; }
    uint32_t p() const { return p_; }
    int dim() const { return dim_; }

    /// Action matrix of an arbitrary algebra element of S(m,d).
    Mat act(const DividedElt& e) const;
    Mat act_weight(const Composition& lam) const;
    /// Cached by a caller-supplied key (generator labels, embedding tags).
    const Mat& act_cached(const std::string& key, const DividedElt& e) const;

    /// Weight character: dim e_λ X for λ ∈ Λ⁺(m,d) (partitions, lex desc).
    std::vector<int> character() const;

protected:
    Realization(uint32_t p, int m, int d) : p_(p), m_(m), d_(d) {}
    virtual Mat act_impl(const DividedElt& e) const = 0;
    /// Cheap realizations skip the memo table.
    virtual bool cache_acts() const { return true; }

    uint32_t p_;
    int m_, d_;
    int dim_ = 0;

private:
    mutable std::map<std::string, Mat> cache_;
    mutable std::shared_mutex cache_mx_;
};

using RealizationPtr = std::shared_ptr<const Realization>;

/// Materializes the standard generator family into a plain ModAction.
ModAction materialize(const Realization& r);

/// Predicted dimension of a block atom where a closed formula exists.
uint64_t predicted_dim(const FunctorExpr& e, int m, uint32_t p);

/// Realization memo and derived structures for a fixed prime and degree.
class FunctorSpace {
public:
    FunctorSpace(uint32_t p, int d) : p_(p), d_(d) {}

    uint32_t p() const { return p_; }
    int d() const { return d_; }

    /// Evaluate a construction expression at k^m (memoized, single-flight).
    RealizationPtr realize(const FunctorExprPtr& e, int m);

    /// Kuhn dual of an arbitrary realization.
    RealizationPtr kuhn_dual(RealizationPtr r) const;

    /// Submodule of Λ^{λ'} spun from the highest weight vector.
    RealizationPtr weyl_module(const Partition& lam, int m);
    /// Weyl module modulo the radical of the contravariant form.
    RealizationPtr simple_module(const Partition& lam, int m);

    struct SimpleTable {
        std::vector<Partition> labels;  // Λ⁺(m,d), lex descending
        std::vector<RealizationPtr> simples;
        std::vector<ModAction> actions;
        std::vector<std::vector<int>> chars;
        std::vector<int> dims;
    };
    const SimpleTable& simple_table(int m);

    struct CharacterDecomposition {
        std::vector<int> character;                       // weight dims
        std::vector<std::pair<Partition, int>> simples;   // multiplicities
    };
    /// Unitriangular decomposition of the weight character of a module over
    /// S(m,d) into simple characters. Throws on negative multiplicities.
    CharacterDecomposition character_multiplicities(const ModAction& x, int m);
    CharacterDecomposition character_multiplicities(const Realization& x);

    /// Day tensor product evaluated at k^m through a free presentation of x
    /// and evaluation of y at k^{m²}.
    RealizationPtr internal_tensor(const FunctorExprPtr& x, const FunctorExprPtr& y, int m);
    RealizationPtr internal_hom(const FunctorExprPtr& x, const FunctorExprPtr& y, int m);
    RealizationPtr mon_dual(const FunctorExprPtr& x, int m);

    /// P_μ: the summand of Γ^μ with top L_μ.
    RealizationPtr projective_cover(const Partition& mu, int m, uint64_t seed);
    /// dim Hom(rad P_μ, L_ν) via the top of rad P_μ.
    int ext1(const Partition& mu, const Partition& nu, int m, uint64_t seed);

    /// Hom_{S(n,d)}(Γ^d Hom(k^m, k^n), y) as a module over S(m,d).
    ModAction yoneda_evaluate(const Realization& y, int m);

    /// Free presentation data of a realization over S(m,d) (full basis).
    struct Presentation {
        int r = 0;                                   // free rank
        std::vector<std::vector<uint32_t>> gens;     // module generators
        std::vector<std::vector<AlgElt>> kernel;     // t rows of length r
    };
    Presentation presentation(const Realization& x);

    /// Wires evaluation of symmetric-group expressions (needed by the
    /// GTensor/GHom nodes; supplied by the adjoint layer).
    void set_sym_evaluator(std::function<SymMod(const SymExprPtr&)> f) {
        sym_eval_ = std::move(f);
    }

private:
    RealizationPtr realize_uncached(const FunctorExprPtr& e, int m);

    uint32_t p_;
    int d_;
    std::function<SymMod(const SymExprPtr&)> sym_eval_;
    std::map<std::string, RealizationPtr> memo_;
    std::map<int, SimpleTable> tables_;
    std::mutex mx_;
};

/// Block data shared by the G_⊗ / G_Hom realizations.
struct SymModData {
    ModAction action;                 // over kS_d
    std::vector<Mat> perm_mats;       // all of S_d, all_perms order
    int d = 0;
};
SymModData make_symmod_data(const SymMod& n);

RealizationPtr gtensor_realize(const SymModData& n, int m, uint32_t p);
RealizationPtr ghom_realize(const SymModData& n, int m, uint32_t p);

}  // namespace spf
