#include "spf/modact.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace spf {

void ModAction::check_shapes() const {
    if (labels.size() != gens.size()) throw std::logic_error("ModAction: label/gen mismatch");
    for (const Mat& g : gens)
        if (g.rows != dim || g.cols != dim || g.p != p)
            throw std::logic_error("ModAction: generator shape mismatch");
}

bool ModMorphism::intertwines(const ModAction& source, const ModAction& target) const {
    if (mat.rows != target.dim || mat.cols != source.dim) return false;
    for (size_t i = 0; i < source.ngens(); ++i)
        if (!(mat.mul(source.gen(i)) == target.gen(i).mul(mat))) return false;
    return true;
}

ModAction direct_sum(const ModAction& a, const ModAction& b) {
    if (a.algebra != b.algebra || a.labels != b.labels)
        throw std::invalid_argument("direct_sum: algebra mismatch");
    ModAction s;
    s.p = a.p;
    s.dim = a.dim + b.dim;
    s.algebra = a.algebra;
    s.labels = a.labels;
    for (size_t i = 0; i < a.ngens(); ++i) {
        Mat g(a.p, s.dim, s.dim);
        for (int r = 0; r < a.dim; ++r)
            for (int c = 0; c < a.dim; ++c) g.at(r, c) = a.gen(i).at(r, c);
        for (int r = 0; r < b.dim; ++r)
            for (int c = 0; c < b.dim; ++c) g.at(a.dim + r, a.dim + c) = b.gen(i).at(r, c);
        s.gens.push_back(std::move(g));
    }
    return s;
}

std::vector<uint32_t> trace_signature(const ModAction& m) {
    std::vector<uint32_t> sig;
    auto trace = [&](const Mat& g) {
        uint64_t t = 0;
        for (int i = 0; i < g.rows; ++i) t += g.at(i, i);
        return uint32_t(t % m.p);
    };
    for (const Mat& g : m.gens) {
        sig.push_back(trace(g));
        sig.push_back(uint32_t(rank_of(g)));
    }
    if (m.dim <= 400) {
        for (const Mat& g : m.gens) sig.push_back(trace(g.mul(g)));
        for (size_t i = 0; i + 1 < m.ngens(); ++i) sig.push_back(trace(m.gen(i).mul(m.gen(i + 1))));
    }
    return sig;
}

Mat spin(const ModAction& m, const std::vector<std::vector<uint32_t>>& seeds) {
    Echelon ech(m.p, m.dim);
    std::vector<std::vector<uint32_t>> pending;
    for (const auto& s : seeds)
        if (ech.add(s)) pending.push_back(s);
    while (!pending.empty()) {
        std::vector<uint32_t> v = std::move(pending.back());
        pending.pop_back();
        for (const Mat& g : m.gens) {
            std::vector<uint32_t> w = g.apply_vec(v);
            if (ech.add(w)) pending.push_back(std::move(w));
        }
    }
    return ech.basis_cols();
}

ModAction submodule_action(const ModAction& m, const Mat& basis) {
    ModAction sub;
    sub.p = m.p;
    sub.dim = basis.cols;
    sub.algebra = m.algebra;
    sub.labels = m.labels;
    if (basis.cols == 0) {
        sub.gens.assign(m.ngens(), Mat(m.p, 0, 0));
        return sub;
    }
    SpanSolver solver(basis);
    for (const Mat& g : m.gens) sub.gens.push_back(solver.coords_mat(g.mul(basis)));
    return sub;
}

QuotientData quotient_action(const ModAction& m, const Mat& w) {
    const uint32_t p = m.p;
    RrefResult rr = rref_rank(w.transpose());  // row echelon of the subspace
    std::vector<bool> is_pivot(m.dim, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> free_coords;
    for (int j = 0; j < m.dim; ++j)
        if (!is_pivot[j]) free_coords.push_back(j);
    int q = int(free_coords.size());

    auto reduce = [&](std::vector<uint32_t> v) {
        for (int i = 0; i < rr.rank; ++i) {
            uint32_t c = v[rr.pivots[i]];
            if (!c) continue;
            for (int j = 0; j < m.dim; ++j)
                if (rr.r.at(i, j)) v[j] = fp::sub(v[j], fp::mul(c, rr.r.at(i, j), p), p);
        }
        return v;
    };

    // stability check: the subspace must be generator-stable
    for (const Mat& g : m.gens)
        for (int j = 0; j < w.cols; ++j) {
            auto img = reduce(g.apply_vec(w.col_vec(j)));
            for (uint32_t x : img)
                if (x) throw std::logic_error("quotient_action: subspace not generator-stable");
        }

    Mat proj(p, q, m.dim);
    for (int j = 0; j < m.dim; ++j) {
        std::vector<uint32_t> e(m.dim, 0);
        e[j] = 1;
        auto red = reduce(std::move(e));
        for (int i = 0; i < q; ++i) proj.at(i, j) = red[free_coords[i]];
    }
    Mat lift(p, m.dim, q);
    for (int i = 0; i < q; ++i) lift.at(free_coords[i], i) = 1;

    QuotientData out;
    out.projection = proj;
    out.action.p = p;
    out.action.dim = q;
    out.action.algebra = m.algebra;
    out.action.labels = m.labels;
    for (const Mat& g : m.gens) out.action.gens.push_back(proj.mul(g.mul(lift)));
    return out;
}

namespace {

// Block-diagonal speedup when the generator family contains a complete
// orthogonal idempotent family (weight idempotents): intertwiners preserve
// the weight decomposition.
struct WeightBlocks {
    bool usable = false;
    Mat u, u_inv;                          // basis change
    std::vector<std::pair<int, int>> spans;  // (offset, size) per idempotent
};

WeightBlocks weight_blocks(const ModAction& m) {
    WeightBlocks wb;
    std::vector<size_t> idem;
    for (size_t i = 0; i < m.labels.size(); ++i)
        if (m.labels[i].rfind("e(", 0) == 0) idem.push_back(i);
    if (idem.empty()) return wb;
    std::vector<Mat> bases;
    int total = 0;
    for (size_t i : idem) {
        Mat b = column_space_basis(m.gen(i));
        wb.spans.push_back({total, b.cols});
        total += b.cols;
        bases.push_back(std::move(b));
    }
    if (total != m.dim) return wb;
    Mat u(m.p, m.dim, 0);
    u = bases[0];
    for (size_t i = 1; i < bases.size(); ++i)
        if (bases[i].cols) u = hcat(u, bases[i]);
    auto inv = inverse(u);
    if (!inv) return wb;
    wb.u = std::move(u);
    wb.u_inv = std::move(*inv);
    wb.usable = true;
    return wb;
}

std::vector<Mat> refine_by_generators(const ModAction& a, const ModAction& b,
                                      std::vector<Mat> basis, size_t first_gen) {
    const uint32_t p = a.p;
    for (size_t gi = first_gen; gi < a.ngens(); ++gi) {
        if (basis.empty()) break;
        const Mat& gs = a.gen(gi);
        const Mat& gt = b.gen(gi);
        Mat stacked(p, b.dim * a.dim, int(basis.size()));
        for (size_t k = 0; k < basis.size(); ++k) {
            Mat r = gt.mul(basis[k]).sub(basis[k].mul(gs));
            for (int i = 0; i < r.rows; ++i)
                for (int j = 0; j < r.cols; ++j)
                    stacked.at(i * a.dim + j, int(k)) = r.at(i, j);
        }
        Mat ker = kernel_basis(stacked);
        std::vector<Mat> next;
        for (int c = 0; c < ker.cols; ++c) {
            Mat comb(p, b.dim, a.dim);
            for (size_t k = 0; k < basis.size(); ++k) {
                uint32_t coef = ker.at(int(k), c);
                if (!coef) continue;
                comb = comb.add(basis[k].scale(coef));
            }
            next.push_back(std::move(comb));
        }
        basis = std::move(next);
    }
    return basis;
}

}  // namespace

std::vector<Mat> hom_space(const ModAction& a, const ModAction& b) {
    if (a.algebra != b.algebra || a.labels != b.labels)
        throw std::invalid_argument("hom_space: algebra mismatch");
    const uint32_t p = a.p;
    if (a.dim == 0 || b.dim == 0) return {};
    if (a.ngens() == 0) {
        std::vector<Mat> all;
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                Mat e(p, b.dim, a.dim);
                e.at(i, j) = 1;
                all.push_back(std::move(e));
            }
        return all;
    }

    WeightBlocks wa = weight_blocks(a), wb = weight_blocks(b);
    std::vector<Mat> basis;
    if (wa.usable && wb.usable) {
        // parameters: one block per idempotent with nonzero span on both sides
        std::vector<std::tuple<int, int, int, int>> blocks;  // (aoff, asz, boff, bsz)
        int nparams = 0;
        for (size_t i = 0; i < wa.spans.size(); ++i) {
            auto [ao, as] = wa.spans[i];
            auto [bo, bs] = wb.spans[i];
            if (as && bs) {
                blocks.push_back({ao, as, bo, bs});
                nparams += as * bs;
            }
        }
        if (nparams == 0) return {};
        // first generator constraint in transformed coordinates
        std::vector<Mat> ga, gb;
        for (size_t i = 0; i < a.ngens(); ++i) {
            ga.push_back(wa.u_inv.mul(a.gen(i).mul(wa.u)));
            gb.push_back(wb.u_inv.mul(b.gen(i).mul(wb.u)));
        }
        Mat c0(p, b.dim * a.dim, nparams);
        int param = 0;
        for (auto [ao, as, bo, bs] : blocks)
            for (int r = 0; r < bs; ++r)
                for (int c = 0; c < as; ++c) {
                    // Z has a single 1 at (bo+r, ao+c); constraint gb[0]·Z − Z·ga[0]
                    for (int i = 0; i < b.dim; ++i) {
                        uint32_t v = gb[0].at(i, bo + r);
                        if (v) {
                            int row = i * a.dim + (ao + c);
                            c0.at(row, param) = fp::add(c0.at(row, param), v, p);
                        }
                    }
                    for (int j = 0; j < a.dim; ++j) {
                        uint32_t v = ga[0].at(ao + c, j);
                        if (v) {
                            int row = (bo + r) * a.dim + j;
                            c0.at(row, param) = fp::sub(c0.at(row, param), v, p);
                        }
                    }
                    ++param;
                }
        Mat ker = kernel_basis(c0);
        for (int kc = 0; kc < ker.cols; ++kc) {
            Mat z(p, b.dim, a.dim);
            int pi = 0;
            for (auto [ao, as, bo, bs] : blocks)
                for (int r = 0; r < bs; ++r)
                    for (int c = 0; c < as; ++c) z.at(bo + r, ao + c) = ker.at(pi++, kc);
            basis.push_back(std::move(z));
        }
        // refine in transformed coordinates, then map back
        ModAction ta{a.p, a.dim, a.algebra, a.labels, ga};
        ModAction tb{b.p, b.dim, b.algebra, b.labels, gb};
        basis = refine_by_generators(ta, tb, std::move(basis), 1);
        for (Mat& z : basis) z = wb.u.mul(z.mul(wa.u_inv));
        return basis;
    }

    // generic: dense kernel of the first generator's intertwining system
    Mat c0(p, b.dim * a.dim, b.dim * a.dim);
    const Mat& gs = a.gen(0);
    const Mat& gt = b.gen(0);
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            int param = i * a.dim + j;  // X = E_{ij}
            for (int r = 0; r < b.dim; ++r) {
                uint32_t v = gt.at(r, i);
                if (v) c0.at(r * a.dim + j, param) = fp::add(c0.at(r * a.dim + j, param), v, p);
            }
            for (int c = 0; c < a.dim; ++c) {
                uint32_t v = gs.at(j, c);
                if (v) c0.at(i * a.dim + c, param) = fp::sub(c0.at(i * a.dim + c, param), v, p);
            }
        }
    Mat ker = kernel_basis(c0);
    for (int kc = 0; kc < ker.cols; ++kc) {
        Mat x(p, b.dim, a.dim);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < a.dim; ++j) x.at(i, j) = ker.at(i * a.dim + j, kc);
        basis.push_back(std::move(x));
    }
    return refine_by_generators(a, b, std::move(basis), 1);
}

bool validate_witness(const ModAction& a, const ModAction& b, const Mat& w) {
    ModMorphism f{w};
    return f.intertwines(a, b) && rank_of(w) == a.dim && a.dim == b.dim;
}

IsoResult is_isomorphic(const ModAction& a, const ModAction& b, uint64_t seed) {
    if (a.algebra != b.algebra || a.labels != b.labels)
        throw std::invalid_argument("is_isomorphic: algebra mismatch");
    IsoResult res;
    if (a.dim != b.dim) {
        res.reason = "dimension: " + std::to_string(a.dim) + " vs " + std::to_string(b.dim);
        return res;
    }
    if (a.dim == 0) {
        res.isomorphic = true;
        res.witness = Mat(a.p, 0, 0);
        res.reason = "zero module";
        return res;
    }
    if (trace_signature(a) != trace_signature(b)) {
        res.reason = "character: generator-word trace/rank signature differs";
        return res;
    }
    std::vector<Mat> hom = hom_space(a, b);
    if (hom.empty()) {
        res.reason = "hom space is zero";
        return res;
    }
    const uint32_t p = a.p;
    uint64_t total = 1;
    bool small = true;
    for (size_t i = 0; i < hom.size() && small; ++i) {
        total *= p;
        if (total > 4096) small = false;
    }
    if (small) {
        // enumerate hom space projectively
        std::vector<uint32_t> coef(hom.size(), 0);
        std::function<bool(size_t, bool)> walk = [&](size_t i, bool leading) -> bool {
            if (i == hom.size()) {
                if (leading) return false;  // all zero
                Mat x(p, b.dim, a.dim);
                for (size_t k = 0; k < hom.size(); ++k)
                    if (coef[k]) x = x.add(hom[k].scale(coef[k]));
                if (rank_of(x) == a.dim) {
                    res.isomorphic = true;
                    res.witness = std::move(x);
                    res.reason = "witness found by hom-space enumeration";
                    return true;
                }
                return false;
            }
            uint32_t hi = leading ? 1 : p - 1;  // first nonzero coefficient normalized to 1
            for (uint32_t v = leading ? 1 : 0; v <= hi; ++v) {
                coef[i] = v;
                if (walk(i + 1, leading && v == 0)) return true;
            }
            coef[i] = 0;
            return false;
        };
        if (walk(0, true)) return res;
        res.reason = "no invertible intertwiner: hom space enumerated exhaustively (dim " +
                     std::to_string(hom.size()) + ")";
        return res;
    }
    Rng rng(seed);
    for (int trial = 0; trial < 256; ++trial) {
        Mat x(p, b.dim, a.dim);
        for (const Mat& h : hom) {
            uint32_t c = uint32_t(rng.below(p));
            if (c) x = x.add(h.scale(c));
        }
        if (rank_of(x) == a.dim) {
            res.isomorphic = true;
            res.witness = std::move(x);
            res.reason = "witness found by randomized hom-space search";
            return res;
        }
    }
    res.conclusive = false;
    res.reason = "randomized hom-space search exhausted without witness";
    return res;
}

}  // namespace spf
