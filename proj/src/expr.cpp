#include "spf/expr.hpp"

#include <sstream>
#include <stdexcept>

namespace spf {

namespace {
int check_degree(const Composition& parts, const char* what) {
    int d = degree_of(parts);
    if (d < 1) throw std::invalid_argument(std::string(what) + ": degree must be >= 1");
    for (int part : parts)
        if (part < 0) throw std::invalid_argument(std::string(what) + ": negative part");
    return d;
}

FunctorExprPtr make_f(FKind kind, int d, Composition parts = {},
                      std::vector<FunctorExprPtr> kids = {}, SymExprPtr sym = nullptr) {
    auto e = std::make_shared<FunctorExpr>();
    e->kind = kind;
    e->d = d;
    e->parts = std::move(parts);
    e->kids = std::move(kids);
    e->sym = std::move(sym);
    return e;
}

SymExprPtr make_s(SKind kind, int d, Composition parts = {}, std::vector<SymExprPtr> kids = {},
                  FunctorExprPtr fun = nullptr) {
    auto e = std::make_shared<SymExpr>();
    e->kind = kind;
    e->d = d;
    e->parts = std::move(parts);
    e->kids = std::move(kids);
    e->fun = std::move(fun);
    return e;
}
}  // namespace

FunctorExprPtr fe_gamma(const Composition& lam) {
    return make_f(FKind::Gamma, check_degree(lam, "Gamma"), lam);
}
FunctorExprPtr fe_sym(const Composition& lam) {
    return make_f(FKind::Sym, check_degree(lam, "S"), lam);
}
FunctorExprPtr fe_ext(const Composition& lam) {
    return make_f(FKind::Ext, check_degree(lam, "Lambda"), lam);
}
FunctorExprPtr fe_tensor_power(int d) {
    if (d < 1) throw std::invalid_argument("T: degree must be >= 1");
    return make_f(FKind::TensorPower, d);
}
FunctorExprPtr fe_weyl(const Partition& lam) {
    Partition c = canonical(lam);
    return make_f(FKind::Weyl, check_degree(c, "Weyl"), c);
}
FunctorExprPtr fe_simple(const Partition& lam) {
    Partition c = canonical(lam);
    return make_f(FKind::Simple, check_degree(c, "L"), c);
}
FunctorExprPtr fe_proj_cover(const Partition& lam) {
    Partition c = canonical(lam);
    return make_f(FKind::ProjCover, check_degree(c, "P"), c);
}
FunctorExprPtr fe_trunc_sym(int d) {
    if (d < 1) throw std::invalid_argument("Q: degree must be >= 1");
    return make_f(FKind::TruncSym, d);
}
FunctorExprPtr fe_dual(FunctorExprPtr e) {
    int d = e->d;
    return make_f(FKind::KuhnDual, d, {}, {std::move(e)});
}
FunctorExprPtr fe_itensor(FunctorExprPtr a, FunctorExprPtr b) {
    if (a->d != b->d) throw std::invalid_argument("tensor: degree mismatch between subtrees");
    int d = a->d;
    return make_f(FKind::ITensor, d, {}, {std::move(a), std::move(b)});
}
FunctorExprPtr fe_ihom(FunctorExprPtr a, FunctorExprPtr b) {
    if (a->d != b->d) throw std::invalid_argument("ihom: degree mismatch between subtrees");
    int d = a->d;
    return make_f(FKind::IHom, d, {}, {std::move(a), std::move(b)});
}
FunctorExprPtr fe_mon_dual(FunctorExprPtr e) {
    int d = e->d;
    return make_f(FKind::MonDual, d, {}, {std::move(e)});
}
FunctorExprPtr fe_gtensor(SymExprPtr n) {
    int d = n->d;
    return make_f(FKind::GTensor, d, {}, {}, std::move(n));
}
FunctorExprPtr fe_ghom(SymExprPtr n) {
    int d = n->d;
    return make_f(FKind::GHom, d, {}, {}, std::move(n));
}

SymExprPtr se_triv(int d) { return make_s(SKind::Triv, d); }
SymExprPtr se_sgn(int d) { return make_s(SKind::Sgn, d); }
SymExprPtr se_reg(int d) { return make_s(SKind::Reg, d); }
SymExprPtr se_perm(const Composition& lam) {
    return make_s(SKind::Perm, check_degree(lam, "M"), lam);
}
SymExprPtr se_dmod(const Partition& lam) {
    Partition c = canonical(lam);
    return make_s(SKind::DMod, check_degree(c, "D"), c);
}
SymExprPtr se_sdual(SymExprPtr e) {
    int d = e->d;
    return make_s(SKind::SDual, d, {}, {std::move(e)});
}
SymExprPtr se_kron(SymExprPtr a, SymExprPtr b) {
    if (a->d != b->d) throw std::invalid_argument("kron: degree mismatch between subtrees");
    int d = a->d;
    return make_s(SKind::Kron, d, {}, {std::move(a), std::move(b)});
}
SymExprPtr se_fof(FunctorExprPtr e) {
    int d = e->d;
    return make_s(SKind::FOf, d, {}, {}, std::move(e));
}

namespace {
std::string parts_text(const Composition& parts) {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}
}  // namespace

std::string print_expr(const FunctorExpr& e) {
    switch (e.kind) {
        case FKind::Gamma: return "Gamma(" + parts_text(e.parts) + ")";
        case FKind::Sym: return "S(" + parts_text(e.parts) + ")";
        case FKind::Ext: return "Lambda(" + parts_text(e.parts) + ")";
        case FKind::TensorPower: return "T";
        case FKind::Weyl: return "Weyl(" + parts_text(e.parts) + ")";
        case FKind::Simple: return "L(" + parts_text(e.parts) + ")";
        case FKind::ProjCover: return "P(" + parts_text(e.parts) + ")";
        case FKind::TruncSym: return "Q";
        case FKind::KuhnDual: return "dual(" + print_expr(*e.kids[0]) + ")";
        case FKind::ITensor:
            return "tensor(" + print_expr(*e.kids[0]) + "," + print_expr(*e.kids[1]) + ")";
        case FKind::IHom:
            return "ihom(" + print_expr(*e.kids[0]) + "," + print_expr(*e.kids[1]) + ")";
        case FKind::MonDual: return "mdual(" + print_expr(*e.kids[0]) + ")";
        case FKind::GTensor: return "Gt(" + print_expr(*e.sym) + ")";
        case FKind::GHom: return "Gh(" + print_expr(*e.sym) + ")";
    }
    throw std::logic_error("print_expr: unknown kind");
}

std::string print_expr(const SymExpr& e) {
    switch (e.kind) {
        case SKind::Triv: return "triv";
        case SKind::Sgn: return "sgn";
        case SKind::Reg: return "reg";
        case SKind::Perm: return "M(" + parts_text(e.parts) + ")";
        case SKind::DMod: return "D(" + parts_text(e.parts) + ")";
        case SKind::SDual: return "sdual(" + print_expr(*e.kids[0]) + ")";
        case SKind::Kron:
            return "kron(" + print_expr(*e.kids[0]) + "," + print_expr(*e.kids[1]) + ")";
        case SKind::FOf: return "F(" + print_expr(*e.fun) + ")";
    }
    throw std::logic_error("print_expr: unknown kind");
}

// ---------------------------------------------------------------------------
// recursive-descent parser for the CLI grammar
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& text, int ambient_d) : text_(text), d_(ambient_d) {}

    ParsedExpr run() {
        ParsedExpr out = parse_any();
        skip_ws();
        if (pos_ != text_.size()) fail(pos_, "trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(size_t at, const std::string& msg) const {
        std::ostringstream os;
        os << "parse error at position " << at << ": " << msg;
        throw std::invalid_argument(os.str());
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool peek_word(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        // must not be a prefix of a longer identifier
        size_t end = pos_ + w.size();
        if (end < text_.size() && (std::isalnum(text_[end]) || text_[end] == '_')) return false;
        return true;
    }

    bool eat_word(const std::string& w) {
        if (!peek_word(w)) return false;
        pos_ += w.size();
        return true;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            if (c == ')') fail(pos_, "unbalanced parenthesis");
            fail(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    Composition parse_parts() {
        Composition parts;
        while (true) {
            skip_ws();
            size_t start = pos_;
            bool any = false;
            int v = 0;
            while (pos_ < text_.size() && std::isdigit(text_[pos_])) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
                any = true;
            }
            if (!any) fail(start, "expected integer part");
            parts.push_back(v);
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        return parts;
    }

    Composition parse_paren_parts() {
        expect('(');
        Composition parts = parse_parts();
        expect(')');
        return parts;
    }

    template <typename F>
    auto guarded(size_t at, F&& f) -> decltype(f()) {
        try {
            return f();
        } catch (const std::invalid_argument& err) {
            std::string msg = err.what();
            if (msg.rfind("parse error", 0) == 0) throw;
            fail(at, msg);
        }
    }

    ParsedExpr parse_any() {
        skip_ws();
        size_t at = pos_;
        // symmetric-group expressions
        if (eat_word("triv")) return check_d(se_triv(d_), at);
        if (eat_word("sgn")) return check_d(se_sgn(d_), at);
        if (eat_word("reg")) return check_d(se_reg(d_), at);
        if (eat_word("M")) return guarded(at, [&] { return SymExprPtr(se_perm(parse_paren_parts())); });
        if (eat_word("D")) return guarded(at, [&] { return SymExprPtr(se_dmod(parse_paren_parts())); });
        if (eat_word("sdual")) {
            expect('(');
            SymExprPtr inner = parse_sym();
            expect(')');
            return se_sdual(inner);
        }
        if (eat_word("kron")) {
            expect('(');
            SymExprPtr a = parse_sym();
            expect(',');
            SymExprPtr b = parse_sym();
            expect(')');
            return guarded(at, [&] { return se_kron(a, b); });
        }
        if (eat_word("F")) {
            expect('(');
            FunctorExprPtr inner = parse_fun();
            expect(')');
            return se_fof(inner);
        }
        // functor expressions
        if (eat_word("Gamma"))
            return guarded(at, [&] { return FunctorExprPtr(fe_gamma(parse_paren_parts())); });
        if (eat_word("S"))
            return guarded(at, [&] { return FunctorExprPtr(fe_sym(parse_paren_parts())); });
        if (eat_word("Lambda"))
            return guarded(at, [&] { return FunctorExprPtr(fe_ext(parse_paren_parts())); });
        if (eat_word("Weyl"))
            return guarded(at, [&] { return FunctorExprPtr(fe_weyl(parse_paren_parts())); });
        if (eat_word("L"))
            return guarded(at, [&] { return FunctorExprPtr(fe_simple(parse_paren_parts())); });
        if (eat_word("P"))
            return guarded(at, [&] { return FunctorExprPtr(fe_proj_cover(parse_paren_parts())); });
        if (eat_word("Q")) return fe_trunc_sym(d_);
        if (eat_word("T")) return fe_tensor_power(d_);
        if (eat_word("dual")) {
            expect('(');
            FunctorExprPtr inner = parse_fun();
            expect(')');
            return fe_dual(inner);
        }
        if (eat_word("mdual")) {
            expect('(');
            FunctorExprPtr inner = parse_fun();
            expect(')');
            return fe_mon_dual(inner);
        }
        if (eat_word("tensor")) {
            expect('(');
            FunctorExprPtr a = parse_fun();
            expect(',');
            FunctorExprPtr b = parse_fun();
            expect(')');
            return guarded(at, [&] { return fe_itensor(a, b); });
        }
        if (eat_word("ihom")) {
            expect('(');
            FunctorExprPtr a = parse_fun();
            expect(',');
            FunctorExprPtr b = parse_fun();
            expect(')');
            return guarded(at, [&] { return fe_ihom(a, b); });
        }
        if (eat_word("Gt")) {
            expect('(');
            SymExprPtr inner = parse_sym();
            expect(')');
            return fe_gtensor(inner);
        }
        if (eat_word("Gh")) {
            expect('(');
            SymExprPtr inner = parse_sym();
            expect(')');
            return fe_ghom(inner);
        }
        fail(at, "unknown token");
    }

    ParsedExpr check_d(SymExprPtr e, size_t) { return e; }

    FunctorExprPtr parse_fun() {
        skip_ws();
        size_t at = pos_;
        ParsedExpr e = parse_any();
        if (auto* f = std::get_if<FunctorExprPtr>(&e)) return *f;
        fail(at, "expected a functor expression");
    }

    SymExprPtr parse_sym() {
        skip_ws();
        size_t at = pos_;
        ParsedExpr e = parse_any();
        if (auto* s = std::get_if<SymExprPtr>(&e)) return *s;
        fail(at, "expected a symmetric-group expression");
    }

    const std::string& text_;
    int d_;
    size_t pos_ = 0;
};

}  // namespace

ParsedExpr parse_expr(const std::string& text, int ambient_d) {
    Parser parser(text, ambient_d);
    ParsedExpr out = parser.run();
    int d = std::holds_alternative<FunctorExprPtr>(out) ? std::get<FunctorExprPtr>(out)->d
                                                        : std::get<SymExprPtr>(out)->d;
    if (d != ambient_d)
        throw std::invalid_argument("parse error at position 0: expression degree " +
                                    std::to_string(d) + " does not match configured d=" +
                                    std::to_string(ambient_d));
    return out;
}

}  // namespace spf
