#include "spf/meataxe.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spf {

void Poly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    r.p = a.p;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = fp::add(r.c[i + j], fp::mul(a.c[i], b.c[j], a.p), a.p);
    }
    r.normalize();
    return r;
}

namespace {
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& m) {
    const uint32_t p = a.p;
    Poly q;
    q.p = p;
    if (m.is_zero()) throw std::domain_error("poly_divmod: division by zero");
    if (a.deg() >= m.deg()) q.c.assign(a.deg() - m.deg() + 1, 0);
    uint32_t lead_inv = fp::inv(m.c.back(), p);
    while (!a.is_zero() && a.deg() >= m.deg()) {
        int shift = a.deg() - m.deg();
        uint32_t f = fp::mul(a.c.back(), lead_inv, p);
        q.c[shift] = f;
        for (size_t i = 0; i < m.c.size(); ++i)
            a.c[shift + i] = fp::sub(a.c[shift + i], fp::mul(f, m.c[i], p), p);
        a.normalize();
    }
    q.normalize();
    return {q, a};
}
}  // namespace

Poly poly_mod(const Poly& a, const Poly& m) { return poly_divmod(a, m).second; }

Poly poly_monic(Poly a) {
    if (a.is_zero()) return a;
    uint32_t s = fp::inv(a.c.back(), a.p);
    for (auto& x : a.c) x = fp::mul(x, s, a.p);
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

Poly poly_derivative(const Poly& a) {
    Poly d;
    d.p = a.p;
    for (size_t i = 1; i < a.c.size(); ++i)
        d.c.push_back(fp::mul(a.c[i], uint32_t(i % a.p), a.p));
    d.normalize();
    return d;
}

namespace {

Poly poly_one(uint32_t p) {
    Poly one;
    one.p = p;
    one.c = {1};
    return one;
}

Poly poly_pth_root(const Poly& f) {
    // over F_p the coefficients are fixed by Frobenius
    Poly r;
    r.p = f.p;
    for (size_t i = 0; i < f.c.size(); i += f.p) r.c.push_back(f.c[i]);
    r.normalize();
    return r;
}

std::vector<Poly> berlekamp_squarefree(const Poly& f) {
    const uint32_t p = f.p;
    int n = f.deg();
    if (n <= 1) return {f};
    // Q[i] = x^{ip} mod f as columns
    Mat q(p, n, n);
    Poly xp;  // x^p mod f
    {
        Poly x;
        x.p = p;
        x.c.assign(size_t(p) + 1, 0);
        x.c[p] = 1;
        xp = poly_mod(x, f);
    }
    Poly cur = poly_one(p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= cur.deg(); ++j) q.at(j, i) = cur.c[j];
        cur = poly_mod(poly_mul(cur, xp), f);
    }
    Mat b = q.sub(Mat::identity(p, n));
    Mat ker = kernel_basis(b);
    if (ker.cols <= 1) return {poly_monic(f)};
    std::vector<Poly> factors{poly_monic(f)};
    for (int kc = 0; kc < ker.cols && int(factors.size()) < ker.cols; ++kc) {
        Poly v;
        v.p = p;
        v.c = ker.col_vec(kc);
        v.normalize();
        if (v.deg() <= 0) continue;  // constant kernel vector separates nothing
        std::vector<Poly> next;
        for (const Poly& g : factors) {
            if (g.deg() <= 1) {
                next.push_back(g);
                continue;
            }
            std::vector<Poly> pieces;
            Poly rem = g;
            for (uint32_t c = 0; c < p && rem.deg() > 0; ++c) {
                Poly shifted = v;
                shifted.c[0] = fp::sub(shifted.c.empty() ? 0 : shifted.c[0], c, p);
                shifted.normalize();
                Poly h = poly_gcd(rem, shifted);
                if (h.deg() > 0 && h.deg() < rem.deg()) {
                    pieces.push_back(h);
                    rem = poly_divmod(rem, h).first;
                }
            }
            if (rem.deg() > 0) pieces.push_back(poly_monic(rem));
            if (pieces.empty()) pieces.push_back(g);
            for (auto& piece : pieces) next.push_back(piece);
        }
        factors = std::move(next);
    }
    return factors;
}

void squarefree_decompose(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    const uint32_t p = f.p;
    if (f.deg() <= 0) return;
    Poly fd = poly_derivative(f);
    if (fd.is_zero()) {
        squarefree_decompose(poly_pth_root(f), mult * int(p), out);
        return;
    }
    Poly g = poly_gcd(f, fd);
    Poly w = poly_divmod(f, g).first;
    int i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(w, g);
        Poly z = poly_divmod(w, y).first;
        if (z.deg() > 0) out.push_back({poly_monic(z), mult * i});
        ++i;
        w = y;
        g = poly_divmod(g, y).first;
    }
    if (g.deg() > 0) squarefree_decompose(poly_pth_root(g), mult * int(p), out);
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_factor(const Poly& f) {
    std::vector<std::pair<Poly, int>> squarefree;
    squarefree_decompose(poly_monic(f), 1, squarefree);
    std::vector<std::pair<Poly, int>> out;
    for (auto& [g, mult] : squarefree)
        for (Poly& irr : berlekamp_squarefree(g)) out.push_back({poly_monic(irr), mult});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.c < b.first.c;
    });
    return out;
}

Poly krylov_min_poly(const Mat& m, uint64_t seed) {
    const uint32_t p = m.p;
    const int n = m.rows;
    Rng rng(seed);
    Poly result;
    result.p = p;
    result.c = {1};
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<uint32_t> v(n);
        for (auto& x : v) x = uint32_t(rng.below(p));
        if (std::all_of(v.begin(), v.end(), [](uint32_t x) { return !x; })) v[attempt % n] = 1;
        // echelon with expression tracking
        std::vector<std::vector<uint32_t>> rows, exprs;
        std::vector<int> pivots;
        std::vector<uint32_t> cur = v;
        int step = 0;
        while (true) {
            std::vector<uint32_t> red = cur, expr(step + 1, 0);
            expr[step] = 1;
            for (size_t i = 0; i < rows.size(); ++i) {
                uint32_t c = red[pivots[i]];
                if (!c) continue;
                for (int j = 0; j < n; ++j)
                    red[j] = fp::sub(red[j], fp::mul(c, rows[i][j], p), p);
                for (size_t j = 0; j < exprs[i].size(); ++j)
                    expr[j] = fp::sub(expr[j], fp::mul(c, exprs[i][j], p), p);
            }
            int piv = -1;
            for (int j = 0; j < n; ++j)
                if (red[j]) { piv = j; break; }
            if (piv < 0) {
                Poly mu;
                mu.p = p;
                mu.c = expr;
                mu.normalize();
                result = poly_divmod(poly_mul(result, mu), poly_gcd(result, mu)).first;  // lcm
                break;
            }
            uint32_t s = fp::inv(red[piv], p);
            for (auto& x : red) x = fp::mul(x, s, p);
            for (auto& x : expr) x = fp::mul(x, s, p);
            rows.push_back(red);
            exprs.push_back(expr);
            pivots.push_back(piv);
            cur = m.apply_vec(cur);
            ++step;
            if (step > n) throw std::logic_error("krylov_min_poly: runaway");
        }
        if (result.deg() == n) break;  // cannot grow further
    }
    return poly_monic(result);
}

Mat poly_eval(const Poly& f, const Mat& m) {
    Mat acc(m.p, m.rows, m.rows);
    if (f.is_zero()) return acc;
    for (int j = 0; j < m.rows; ++j) acc.at(j, j) = f.c[f.deg()];
    for (int i = f.deg() - 1; i >= 0; --i) {
        acc = acc.mul(m);
        if (f.c[i])
            for (int j = 0; j < m.rows; ++j) acc.at(j, j) = fp::add(acc.at(j, j), f.c[i], m.p);
    }
    return acc;
}

namespace {

Mat random_algebra_word(const ModAction& m, Rng& rng) {
    // sum of up to three random products of generators, length <= 8
    const uint32_t p = m.p;
    Mat acc(p, m.dim, m.dim);
    int nsum = 1 + int(rng.below(3));
    for (int s = 0; s < nsum; ++s) {
        int len = 1 + int(rng.below(8));
        Mat prod = m.gen(size_t(rng.below(m.ngens())));
        for (int l = 1; l < len; ++l) prod = prod.mul(m.gen(size_t(rng.below(m.ngens()))));
        uint32_t c = 1 + uint32_t(rng.below(p - 1));
        acc = acc.add(prod.scale(c));
    }
    return acc;
}

Mat perp_subspace(const Mat& basis, uint32_t p, int ambient) {
    if (basis.cols == 0) return Mat::identity(p, ambient);
    return kernel_basis(basis.transpose());
}

ModAction transpose_module(const ModAction& m) {
    ModAction t = m;
    for (Mat& g : t.gens) g = g.transpose();
    return t;
}

// Norton test for one candidate element x = f(w) with nullity == deg f.
// Returns: 0 = inconclusive, 1 = simple, 2 = found submodule (in out).
int norton_probe(const ModAction& m, const ModAction& mt, const Mat& x, Mat& out) {
    Mat ker = kernel_basis(x);
    for (int j = 0; j < ker.cols; ++j) {
        Mat sub = spin(m, {ker.col_vec(j)});
        if (sub.cols < m.dim) {
            out = sub;
            return 2;
        }
    }
    Mat kert = kernel_basis(x.transpose());
    if (kert.cols == 0) return 0;
    Mat subt = spin(mt, {kert.col_vec(0)});
    if (subt.cols < m.dim) {
        out = perp_subspace(subt, m.p, m.dim);
        return 2;
    }
    return 1;
}

}  // namespace

SimpleCert certify_simple(const ModAction& m, uint64_t seed) {
    if (m.dim == 0) throw std::invalid_argument("certify_simple: zero module");
    SimpleCert cert;
    if (m.dim == 1) {
        cert.simple = true;
        cert.detail = "1-dimensional";
        return cert;
    }
    if (m.ngens() == 0) {  // trivial algebra: any coordinate line is a submodule
        Mat sub(m.p, m.dim, 1);
        sub.at(0, 0) = 1;
        cert.submodule = sub;
        cert.detail = "no generators";
        return cert;
    }
    ModAction mt = transpose_module(m);
    Rng rng(derive_seed(seed, "certify"));
    const int budget = 64;
    for (int attempt = 0; attempt < budget + int(m.ngens()); ++attempt) {
        Mat w = attempt < int(m.ngens()) ? m.gen(attempt)  // structured sweep first
                                         : random_algebra_word(m, rng);
        Poly mu = krylov_min_poly(w, rng.next());
        for (auto& [f, mult] : poly_factor(mu)) {
            if (f.deg() > 12 || f.deg() == 0) continue;
            Mat x = poly_eval(f, w);
            Mat ker = kernel_basis(x);
            if (ker.cols == 0) continue;
            if (ker.cols == f.deg()) {
                Mat out;
                int verdict = norton_probe(m, mt, x, out);
                if (verdict == 1) {
                    cert.simple = true;
                    cert.detail = "norton: factor degree " + std::to_string(f.deg()) +
                                  ", attempt " + std::to_string(attempt);
                    return cert;
                }
                if (verdict == 2) {
                    cert.submodule = out;
                    cert.detail = "invariant subspace of dim " + std::to_string(out.cols);
                    return cert;
                }
            } else {
                // oversized kernel: cheap submodule hunt only
                for (int j = 0; j < std::min(ker.cols, 4); ++j) {
                    Mat sub = spin(m, {ker.col_vec(j)});
                    if (sub.cols < m.dim) {
                        cert.submodule = sub;
                        cert.detail = "invariant subspace of dim " + std::to_string(sub.cols);
                        return cert;
                    }
                }
            }
        }
    }
    throw std::runtime_error("certify_simple: budget exhausted without certificate (dim " +
                             std::to_string(m.dim) + ")");
}

std::vector<ModAction> composition_factors(const ModAction& m, uint64_t seed) {
    if (m.dim == 0) return {};
    SimpleCert cert = certify_simple(m, seed);
    if (cert.simple) return {m};
    ModAction sub = submodule_action(m, cert.submodule);
    QuotientData quot = quotient_action(m, cert.submodule);
    std::vector<ModAction> out = composition_factors(sub, derive_seed(seed, "sub"));
    for (ModAction& f : composition_factors(quot.action, derive_seed(seed, "quot")))
        out.push_back(std::move(f));
    int total = 0;
    for (const ModAction& f : out) total += f.dim;
    if (total != m.dim) throw std::logic_error("composition_factors: dimension leak");
    return out;
}

IsoResult is_isomorphic_deep(const ModAction& a, const ModAction& b, uint64_t seed) {
    IsoResult res = is_isomorphic(a, b, seed);
    if (res.conclusive) return res;
    auto fa = composition_factors(a, derive_seed(seed, "deep-a"));
    auto fb = composition_factors(b, derive_seed(seed, "deep-b"));
    std::vector<bool> used(fb.size(), false);
    bool matched = true;
    for (const ModAction& x : fa) {
        bool found = false;
        for (size_t j = 0; j < fb.size() && !found; ++j) {
            if (used[j] || fb[j].dim != x.dim) continue;
            IsoResult r = is_isomorphic(x, fb[j], derive_seed(seed, "pair"));
            if (r.isomorphic) {
                used[j] = true;
                found = true;
            }
        }
        if (!found) {
            matched = false;
            break;
        }
    }
    if (!matched) {
        res.conclusive = true;
        res.isomorphic = false;
        res.reason = "composition factor multisets differ";
    } else {
        res.reason += "; composition factor multisets agree (no refutation)";
    }
    return res;
}

namespace {
Mat radical_subspace(const ModAction& m, const std::vector<ModAction>& simples) {
    std::vector<Mat> all;
    for (const ModAction& simple : simples)
        for (Mat& f : hom_space(m, simple)) all.push_back(std::move(f));
    if (all.empty()) return Mat::identity(m.p, m.dim);
    Mat stacked = all[0];
    for (size_t i = 1; i < all.size(); ++i) stacked = vcat(stacked, all[i]);
    return kernel_basis(stacked);
}
}  // namespace

RadicalTop radical_top(const ModAction& m, const std::vector<ModAction>& simples) {
    RadicalTop out;
    out.radical = radical_subspace(m, simples);
    QuotientData q = quotient_action(m, out.radical);
    out.top = q.action;
    out.top_projection = q.projection;
    // semisimplicity re-check: split simples => dim top = Σ dim Hom(top, L)·dim L
    int expect = 0;
    for (const ModAction& simple : simples)
        expect += int(hom_space(out.top, simple).size()) * simple.dim;
    if (expect != out.top.dim)
        throw std::runtime_error(
            "radical_top: top fails semisimplicity re-check (simple list incomplete?)");
    // the radical series must strictly descend to zero; a stall means some
    // composition factor is missing from the supplied list
    ModAction layer = m;
    int prev = m.dim;
    Mat rad = out.radical;
    while (rad.cols > 0) {
        if (rad.cols == prev)
            throw std::runtime_error("radical_top: radical series stalls (simple list incomplete)");
        layer = submodule_action(layer, rad);
        prev = layer.dim;
        rad = radical_subspace(layer, simples);
    }
    return out;
}

namespace {

struct FitSplit {
    bool found = false;
    Mat image, kernel;
};

FitSplit fitting_split(const Mat& x) {
    const int n = x.rows;
    FitSplit out;
    Mat power = x;
    int r = rank_of(power);
    if (r == 0 || r == n) return out;
    for (int step = 0; step < 2 * n; ++step) {
        Mat next = power.mul(power);
        int r2 = rank_of(next);
        if (r2 == r) break;
        power = std::move(next);
        r = r2;
        if (r == 0 || r == n) return out;
    }
    out.found = true;
    out.image = column_space_basis(power);
    out.kernel = kernel_basis(power);
    return out;
}

bool nilpotent_or_invertible(const Mat& x) {
    int r = rank_of(x);
    if (r == x.rows || r == 0) return true;
    return !fitting_split(x).found;
}

void decompose_rec(const ModAction& m, const Mat& ambient_basis, uint64_t seed,
                   FittingResult& out) {
    if (m.dim == 0) return;
    std::vector<Mat> endo = hom_space(m, m);
    const uint32_t p = m.p;
    // try to split with endomorphism basis elements and random combinations
    auto try_split = [&](const Mat& x) -> bool {
        FitSplit s = fitting_split(x);
        if (!s.found) return false;
        ModAction a = submodule_action(m, s.image);
        ModAction b = submodule_action(m, s.kernel);
        decompose_rec(a, ambient_basis.mul(s.image), derive_seed(seed, "im"), out);
        decompose_rec(b, ambient_basis.mul(s.kernel), derive_seed(seed, "ker"), out);
        return true;
    };
    for (const Mat& x : endo)
        if (try_split(x)) return;
    uint64_t card = 1;
    bool enumerable = true;
    for (size_t i = 0; i < endo.size() && enumerable; ++i) {
        card *= p;
        if (card > 4096) enumerable = false;
    }
    if (enumerable) {
        std::vector<uint32_t> coef(endo.size(), 0);
        while (true) {
            size_t i = 0;
            while (i < endo.size() && coef[i] == p - 1) coef[i++] = 0;
            if (i == endo.size()) break;
            coef[i]++;
            Mat x(p, m.dim, m.dim);
            for (size_t k = 0; k < endo.size(); ++k)
                if (coef[k]) x = x.add(endo[k].scale(coef[k]));
            if (!nilpotent_or_invertible(x)) {
                if (!try_split(x)) throw std::logic_error("fitting: split vanished");
                return;
            }
        }
        Summand s;
        s.basis = ambient_basis;
        s.action = m;
        s.certified_indecomposable = true;
        out.summands.push_back(std::move(s));
        return;
    }
    Rng rng(derive_seed(seed, "fitting"));
    for (int trial = 0; trial < 96; ++trial) {
        Mat x(p, m.dim, m.dim);
        for (const Mat& e : endo) {
            uint32_t c = uint32_t(rng.below(p));
            if (c) x = x.add(e.scale(c));
        }
        if (try_split(x)) return;
        for (uint32_t c = 1; c < p; ++c) {
            Mat shifted = x.sub(Mat::identity(p, m.dim).scale(c));
            if (try_split(shifted)) return;
        }
    }
    Summand s;
    s.basis = ambient_basis;
    s.action = m;
    s.certified_indecomposable = false;
    out.maybe_decomposable = true;
    out.summands.push_back(std::move(s));
}

}  // namespace

FittingResult fitting_decompose(const ModAction& m, uint64_t seed) {
    FittingResult out;
    decompose_rec(m, Mat::identity(m.p, m.dim), seed, out);
    int total = 0;
    for (const Summand& s : out.summands) total += s.action.dim;
    if (total != m.dim) throw std::logic_error("fitting_decompose: dimension leak");
    return out;
}

}  // namespace spf
