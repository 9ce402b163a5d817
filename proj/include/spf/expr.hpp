#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "spf/partition.hpp"

namespace spf {

// Construction expressions for strict polynomial functors and for
// symmetric-group modules. Degrees are resolved at construction; every
// node carries its degree d.

enum class FKind {
    Gamma,
    Sym,
    Ext,
    TensorPower,
    Weyl,
    Simple,
    ProjCover,
    TruncSym,
    KuhnDual,
    ITensor,
    IHom,
    MonDual,
    GTensor,
    GHom,
};

enum class SKind { Triv, Sgn, Reg, Perm, DMod, SDual, Kron, FOf };

struct SymExpr;
using SymExprPtr = std::shared_ptr<const SymExpr>;

struct FunctorExpr;
using FunctorExprPtr = std::shared_ptr<const FunctorExpr>;

struct FunctorExpr {
    FKind kind;
    int d = 0;
    Composition parts;                   // leaf data
    std::vector<FunctorExprPtr> kids;    // 1 or 2 children
    SymExprPtr sym;                      // GTensor / GHom payload
};

struct SymExpr {
    SKind kind;
    int d = 0;
    Composition parts;
    std::vector<SymExprPtr> kids;
    FunctorExprPtr fun;  // FOf payload
};

// leaf constructors (degree from parts)
FunctorExprPtr fe_gamma(const Composition& lam);
FunctorExprPtr fe_sym(const Composition& lam);
FunctorExprPtr fe_ext(const Composition& lam);
FunctorExprPtr fe_tensor_power(int d);
FunctorExprPtr fe_weyl(const Partition& lam);
FunctorExprPtr fe_simple(const Partition& lam);
FunctorExprPtr fe_proj_cover(const Partition& lam);
FunctorExprPtr fe_trunc_sym(int d);
FunctorExprPtr fe_dual(FunctorExprPtr e);
FunctorExprPtr fe_itensor(FunctorExprPtr a, FunctorExprPtr b);
FunctorExprPtr fe_ihom(FunctorExprPtr a, FunctorExprPtr b);
FunctorExprPtr fe_mon_dual(FunctorExprPtr e);
FunctorExprPtr fe_gtensor(SymExprPtr n);
FunctorExprPtr fe_ghom(SymExprPtr n);

SymExprPtr se_triv(int d);
SymExprPtr se_sgn(int d);
SymExprPtr se_reg(int d);
SymExprPtr se_perm(const Composition& lam);
SymExprPtr se_dmod(const Partition& lam);
SymExprPtr se_sdual(SymExprPtr e);
SymExprPtr se_kron(SymExprPtr a, SymExprPtr b);
SymExprPtr se_fof(FunctorExprPtr e);

std::string print_expr(const FunctorExpr& e);
std::string print_expr(const SymExpr& e);

struct ParseError {
    size_t position;
    std::string message;
};

using ParsedExpr = std::variant<FunctorExprPtr, SymExprPtr>;

/// Parses the CLI expression grammar. `ambient_d` resolves the degree of
/// the bare atoms Q and T. Throws std::invalid_argument carrying the
/// position-annotated message.
ParsedExpr parse_expr(const std::string& text, int ambient_d);

}  // namespace spf
