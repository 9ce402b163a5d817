#include "spf/symgroup.hpp"

#include "spf/divided.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spf {

std::string symgroup_algebra_tag(int d, uint32_t p) {
    std::ostringstream os;
    os << "kS" << d << "|p=" << p;
    return os.str();
}

Mat SymMod::perm_matrix(const Perm& sigma) const {
    Mat m = Mat::identity(action.p, action.dim);
    for (int i : adjacent_word(sigma)) m = m.mul(s(i));
    return m;
}

SymMod make_symmod(int d, uint32_t p, std::vector<Mat> gens) {
    if (int(gens.size()) != std::max(0, d - 1))
        throw std::invalid_argument("make_symmod: expected d-1 generators");
    SymMod sm;
    sm.d = d;
    sm.action.p = p;
    sm.action.dim = gens.empty() ? (d >= 1 ? -1 : 0) : gens[0].rows;
    if (sm.action.dim < 0) throw std::invalid_argument("make_symmod: d=1 needs explicit dim");
    sm.action.algebra = symgroup_algebra_tag(d, p);
    for (int i = 0; i + 1 < d; ++i) sm.action.labels.push_back("s" + std::to_string(i + 1));
    sm.action.gens = std::move(gens);
    sm.action.check_shapes();
    // generator relations
    const auto& g = sm.action.gens;
    Mat id = Mat::identity(p, sm.action.dim);
    for (size_t i = 0; i < g.size(); ++i)
        if (!(g[i].mul(g[i]) == id)) throw std::logic_error("symmod: s_i^2 != 1");
    for (size_t i = 0; i + 1 < g.size(); ++i) {
        Mat lhs = g[i].mul(g[i + 1]).mul(g[i]);
        Mat rhs = g[i + 1].mul(g[i]).mul(g[i + 1]);
        if (!(lhs == rhs)) throw std::logic_error("symmod: braid relation fails");
    }
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 2; j < g.size(); ++j)
            if (!(g[i].mul(g[j]) == g[j].mul(g[i])))
                throw std::logic_error("symmod: commuting relation fails");
    return sm;
}

namespace {
SymMod one_dim_module(int d, uint32_t p, uint32_t value) {
    std::vector<Mat> gens;
    for (int i = 0; i + 1 < d; ++i) {
        Mat m(p, 1, 1);
        m.at(0, 0) = value;
        gens.push_back(std::move(m));
    }
    SymMod sm;
    if (d == 1) {
        sm.d = 1;
        sm.action.p = p;
        sm.action.dim = 1;
        sm.action.algebra = symgroup_algebra_tag(1, p);
        return sm;
    }
    return make_symmod(d, p, std::move(gens));
}
}  // namespace

SymMod trivial_module(int d, uint32_t p) { return one_dim_module(d, p, 1 % p); }
SymMod sign_module(int d, uint32_t p) { return one_dim_module(d, p, (p - 1) % p); }

SymMod regular_module(int d, uint32_t p) {
    std::vector<Perm> elems = all_perms(d);
    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
    std::vector<Mat> gens;
    for (int i = 0; i + 1 < d; ++i) {
        Perm s = adjacent_transposition(d, i);
        Mat m(p, int(elems.size()), int(elems.size()));
        for (size_t j = 0; j < elems.size(); ++j)
            m.at(index[perm_compose(s, elems[j])], int(j)) = 1;
        gens.push_back(std::move(m));
    }
    if (d == 1) {
        SymMod sm;
        sm.d = 1;
        sm.action.p = p;
        sm.action.dim = 1;
        sm.action.algebra = symgroup_algebra_tag(1, p);
        return sm;
    }
    return make_symmod(d, p, std::move(gens));
}

namespace {
// sequences with content lam, ascending lexicographic
std::vector<std::vector<uint8_t>> content_sequences(const Composition& lam) {
    std::vector<uint8_t> base;
    for (size_t r = 0; r < lam.size(); ++r)
        for (int k = 0; k < lam[r]; ++k) base.push_back(uint8_t(r));
    std::sort(base.begin(), base.end());
    std::vector<std::vector<uint8_t>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}
}  // namespace

SymMod perm_module(const Composition& lam, uint32_t p) {
    int d = degree_of(lam);
    if (d < 1) throw std::invalid_argument("perm_module: degree must be >= 1");
    for (int part : lam)
        if (part < 0) throw std::invalid_argument("perm_module: negative part");
    auto seqs = content_sequences(lam);
    std::map<std::vector<uint8_t>, int> index;
    for (size_t i = 0; i < seqs.size(); ++i) index[seqs[i]] = int(i);
    std::vector<Mat> gens;
    for (int i = 0; i + 1 < d; ++i) {
        Mat m(p, int(seqs.size()), int(seqs.size()));
        for (size_t j = 0; j < seqs.size(); ++j) {
            auto img = seqs[j];
            std::swap(img[i], img[i + 1]);
            m.at(index[img], int(j)) = 1;
        }
        gens.push_back(std::move(m));
    }
    if (d == 1) {
        SymMod sm;
        sm.d = 1;
        sm.action.p = p;
        sm.action.dim = int(seqs.size());
        sm.action.algebra = symgroup_algebra_tag(1, p);
        return sm;
    }
    return make_symmod(d, p, std::move(gens));
}

TensorPowerMod tensor_power_module(int n, int d, uint32_t p) {
    if (n < 1 || d < 1) throw std::invalid_argument("tensor_power_module: n,d >= 1");
    int dim = 1;
    for (int i = 0; i < d; ++i) dim *= n;
    TensorPowerMod tp;
    tp.n = n;
    std::vector<Mat> left, right;
    for (int i = 0; i + 1 < d; ++i) {
        Mat m(p, dim, dim);
        for (int idx = 0; idx < dim; ++idx) {
            auto word = monomial_of_index(uint64_t(idx), n, d);
            std::swap(word[i], word[i + 1]);
            m.at(int(monomial_index(word, n)), idx) = 1;
        }
        left.push_back(m);
        right.push_back(std::move(m));  // adjacent transpositions are involutions
    }
    if (d == 1) {
        tp.left.d = 1;
        tp.left.action.p = p;
        tp.left.action.dim = dim;
        tp.left.action.algebra = symgroup_algebra_tag(1, p);
    } else {
        tp.left = make_symmod(d, p, std::move(left));
    }
    tp.right_gens = std::move(right);
    return tp;
}

Mat TensorPowerMod::right_perm_matrix(const Perm& sigma) const {
    Mat m = Mat::identity(left.action.p, left.action.dim);
    auto word = adjacent_word(sigma);
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = m.mul(right_gens[*it]);
    return m;
}

SymMod kronecker(const SymMod& a, const SymMod& b) {
    if (a.d != b.d || a.action.p != b.action.p)
        throw std::invalid_argument("kronecker: degree mismatch");
    std::vector<Mat> gens;
    for (size_t i = 0; i < a.action.ngens(); ++i)
        gens.push_back(kron_product(a.action.gen(i), b.action.gen(i)));
    if (a.d == 1) {
        SymMod sm;
        sm.d = 1;
        sm.action.p = a.action.p;
        sm.action.dim = a.dim() * b.dim();
        sm.action.algebra = a.action.algebra;
        return sm;
    }
    return make_symmod(a.d, a.action.p, std::move(gens));
}

SymMod internal_dual(const SymMod& n) {
    std::vector<Mat> gens;
    for (const Mat& g : n.action.gens) gens.push_back(g.transpose());
    if (n.d == 1) return n;
    return make_symmod(n.d, n.action.p, std::move(gens));
}

SymMod internal_hom_sym(const SymMod& a, const SymMod& b) {
    return kronecker(internal_dual(a), b);
}

namespace {

using Tableau = std::vector<std::vector<int>>;

void enum_standard_tableaux(const Partition& lam, Tableau& t, std::vector<int>& filled, int v,
                            int d, std::vector<Tableau>& out) {
    if (v == d) {
        out.push_back(t);
        return;
    }
    for (size_t r = 0; r < lam.size(); ++r) {
        int c = filled[r];
        if (c >= lam[r]) continue;
        if (r > 0 && filled[r - 1] <= c) continue;
        t[r][c] = v;
        filled[r]++;
        enum_standard_tableaux(lam, t, filled, v + 1, d, out);
        filled[r]--;
    }
}

std::vector<Tableau> standard_tableaux(const Partition& lam) {
    int d = degree_of(lam);
    Tableau t;
    for (int part : lam) t.push_back(std::vector<int>(part, -1));
    std::vector<int> filled(lam.size(), 0);
    std::vector<Tableau> out;
    enum_standard_tableaux(lam, t, filled, 0, d, out);
    return out;
}

// All column-stabilizer value permutations with signs.
void column_group(const Tableau& t, const Partition& conj, int d,
                  std::vector<std::pair<Perm, int>>& out) {
    std::vector<std::vector<int>> cols(conj.size());
    for (size_t r = 0; r < t.size(); ++r)
        for (size_t c = 0; c < t[r].size(); ++c) cols[c].push_back(t[r][c]);
    out.clear();
    out.push_back({perm_identity(d), 1});
    for (const auto& col : cols) {
        if (col.size() <= 1) continue;
        std::vector<std::pair<Perm, int>> next;
        std::vector<int> target = col;
        std::sort(target.begin(), target.end());
        std::vector<int> sorted = target;
        do {
            Perm pi = perm_identity(d);
            for (size_t i = 0; i < col.size(); ++i) pi[sorted[i]] = target[i];
            int sgn = perm_sign(pi);
            for (const auto& [prev, psgn] : out)
                next.push_back({perm_compose(pi, prev), sgn * psgn});
        } while (std::next_permutation(target.begin(), target.end()));
        out = std::move(next);
    }
}

}  // namespace

SpechtModule specht(const Partition& lam, uint32_t p) {
    Partition canon = canonical(lam);
    int d = degree_of(canon);
    if (d < 1) throw std::invalid_argument("specht: degree must be >= 1");
    SymMod m_lam = perm_module(canon, p);
    auto seqs = content_sequences(canon);
    std::map<std::vector<uint8_t>, int> index;
    for (size_t i = 0; i < seqs.size(); ++i) index[seqs[i]] = int(i);
    Partition conj = conjugate(canon);
    std::vector<Tableau> syt = standard_tableaux(canon);
    std::vector<std::vector<uint32_t>> cols;
    std::vector<std::pair<Perm, int>> group;
    for (const Tableau& t : syt) {
        std::vector<int> row_of(d);
        for (size_t r = 0; r < t.size(); ++r)
            for (int v : t[r]) row_of[v] = int(r);
        column_group(t, conj, d, group);
        std::vector<uint32_t> vec(seqs.size(), 0);
        for (const auto& [pi, sgn] : group) {
            Perm inv = perm_inverse(pi);
            std::vector<uint8_t> word(d);
            for (int v = 0; v < d; ++v) word[v] = uint8_t(row_of[inv[v]]);
            int idx = index.at(word);
            uint32_t val = sgn > 0 ? 1 : p - 1;
            vec[idx] = fp::add(vec[idx], val, p);
        }
        cols.push_back(std::move(vec));
    }
    Mat basis = from_cols(p, int(seqs.size()), cols);
    if (rank_of(basis) != basis.cols)
        throw std::logic_error("specht: standard polytabloids dependent");
    SpechtModule out;
    out.basis_in_perm = basis;
    ModAction sub = submodule_action(m_lam.action, basis);
    out.mod.d = d;
    out.mod.action = std::move(sub);
    out.gram = basis.transpose().mul(basis);
    return out;
}

SymMod simple_d(const Partition& lam, uint32_t p) {
    if (!classify(lam, p).p_regular)
        throw std::invalid_argument("simple_d: partition not p-regular");
    SpechtModule sp = specht(lam, p);
    Mat rad = kernel_basis(sp.gram);
    QuotientData q = quotient_action(sp.mod.action, rad);
    if (q.action.dim == 0) throw std::logic_error("simple_d: form radical is everything");
    SymMod out;
    out.d = sp.mod.d;
    out.action = q.action;
    return out;
}

Partition sign_twist_identify(const Partition& lam, int d, uint32_t p, uint64_t seed) {
    SymMod twisted = kronecker(simple_d(lam, p), sign_module(d, p));
    for (const Composition& mu : enumerate_lambda(d, d, LambdaKind::Dominant)) {
        if (!classify(mu, p).p_regular) continue;
        SymMod cand = simple_d(mu, p);
        if (cand.dim() != twisted.dim()) continue;
        IsoResult r = is_isomorphic(twisted.action, cand.action, seed);
        if (r.isomorphic) return mu;
    }
    throw std::runtime_error("sign_twist_identify: no isomorphic simple found for " +
                             format_partition(lam));
}

std::vector<uint32_t> sym_character(const SymMod& m) {
    std::vector<uint32_t> out;
    for (const Perm& rep : conjugacy_representatives(m.d)) {
        Mat g = m.perm_matrix(rep);
        uint64_t t = 0;
        for (int i = 0; i < g.rows; ++i) t += g.at(i, i);
        out.push_back(uint32_t(t % m.action.p));
    }
    return out;
}

}  // namespace spf
