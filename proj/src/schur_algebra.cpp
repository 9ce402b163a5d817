#include "spf/schur_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "spf/rng.hpp"

namespace spf {

std::string schur_algebra_tag(int n, int d, uint32_t p) {
    std::ostringstream os;
    os << "S(" << n << "," << d << ")|p=" << p;
    return os.str();
}

namespace {
void enum_multisets(const std::vector<std::pair<int, int>>& pool, int d, size_t from,
                    std::vector<std::pair<int, int>>& cur, std::vector<PairSeq>& out) {
    if (int(cur.size()) == d) {
        out.push_back(make_pairseq(cur));
        return;
    }
    for (size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        enum_multisets(pool, d, i, cur, out);
        cur.pop_back();
    }
}
}  // namespace

SchurAlg::SchurAlg(int n, int d, uint32_t p) : n_(n), d_(d), p_(p) {
    if (n < 1 || d < 1) throw std::invalid_argument("SchurAlg: n,d >= 1");
    double size = 1;
    for (int i = 0; i < d; ++i) size *= n;
    if (size > 1e6) throw std::invalid_argument("SchurAlg: size guard n^d <= 10^6 exceeded");
    std::vector<std::pair<int, int>> pool;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pool.push_back({i, j});
    std::vector<std::pair<int, int>> cur;
    enum_multisets(pool, d, 0, cur, basis_);
    std::sort(basis_.begin(), basis_.end());
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = int(i);
    if (basis_.size() != binomial(n * n + d - 1, d))
        throw std::logic_error("SchurAlg: basis count mismatch");
    weights_ = enumerate_lambda(n, d, LambdaKind::All);
    dg_ = dg_generators(n, d, p);
}

int SchurAlg::index_of(const PairSeq& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("SchurAlg: unknown basis element");
    return it->second;
}

AlgElt SchurAlg::to_elt(const DividedElt& e) const {
    AlgElt out;
    for (const auto& [m, c] : e.terms) out.push_back({index_of(m), c});
    std::sort(out.begin(), out.end());
    return out;
}

DividedElt SchurAlg::to_divided(const AlgElt& e) const {
    DividedElt out;
    out.p = p_;
    for (auto [i, c] : e) out.add_term(basis_[i], c);
    return out;
}

const AlgElt& SchurAlg::product(int i, int j) const {
    {
        std::shared_lock lock(mx_);
        auto it = products_.find({i, j});
        if (it != products_.end()) return it->second;
    }
    DividedElt prod = compose_pairseq(basis_[i], basis_[j], p_);
    AlgElt elt = to_elt(prod);
    std::unique_lock lock(mx_);
    return products_.emplace(std::pair{i, j}, std::move(elt)).first->second;
}

AlgElt SchurAlg::multiply(const AlgElt& a, const AlgElt& b) const {
    std::map<int, uint32_t> acc;
    for (auto [i, ci] : a)
        for (auto [j, cj] : b) {
            uint32_t c = fp::mul(ci, cj, p_);
            if (!c) continue;
            for (auto [k, ck] : product(i, j)) {
                uint32_t& slot = acc[k];
                slot = fp::add(slot, fp::mul(c, ck, p_), p_);
            }
        }
    AlgElt out;
    for (auto [k, v] : acc)
        if (v) out.push_back({k, v});
    return out;
}

AlgElt SchurAlg::unit() const {
    AlgElt out;
    for (const Composition& lam : weights_) out.push_back({index_of(weight_seq(lam)), 1 % p_});
    std::sort(out.begin(), out.end());
    return out;
}

int SchurAlg::weight_index(const Composition& lam) const {
    for (size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] == lam) return int(i);
    throw std::invalid_argument("SchurAlg: unknown weight");
}

Mat SchurAlg::left_regular(const DividedElt& e) const {
    Mat m(p_, dim(), dim());
    AlgElt a = to_elt(e);
    for (int j = 0; j < dim(); ++j) {
        std::map<int, uint32_t> acc;
        for (auto [i, ci] : a)
            for (auto [k, ck] : product(i, j)) {
                uint32_t& slot = acc[k];
                slot = fp::add(slot, fp::mul(ci, ck, p_), p_);
            }
        for (auto [k, v] : acc) m.at(k, j) = v;
    }
    return m;
}

ModAction SchurAlg::regular_module() const {
    ModAction mod;
    mod.p = p_;
    mod.dim = dim();
    mod.algebra = schur_algebra_tag(n_, d_, p_);
    for (const LabeledElt& g : dg_) {
        mod.labels.push_back(g.label);
        mod.gens.push_back(left_regular(g.elt));
    }
    return mod;
}

bool SchurAlg::associativity_check(int count, uint64_t seed) const {
    Rng rng(seed);
    for (int t = 0; t < count; ++t) {
        int i = int(rng.below(dim())), j = int(rng.below(dim())), k = int(rng.below(dim()));
        AlgElt ab = multiply({{i, 1}}, {{j, 1}});
        AlgElt bc = multiply({{j, 1}}, {{k, 1}});
        if (multiply(ab, {{k, 1}}) != multiply({{i, 1}}, bc)) return false;
    }
    // unital
    AlgElt e = unit();
    for (int t = 0; t < std::min(count, dim()); ++t) {
        int i = int(rng.below(dim()));
        if (multiply(e, {{i, 1}}) != AlgElt{{i, 1}}) return false;
        if (multiply({{i, 1}}, e) != AlgElt{{i, 1}}) return false;
    }
    return true;
}

SchurAlg::StructureConstants SchurAlg::export_structure() const {
    StructureConstants sc;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (auto [k, v] : product(i, j))
                sc.triples.push_back({uint32_t(i), uint32_t(j), uint32_t(k), v});
    return sc;
}

void SchurAlg::import_structure(const StructureConstants& sc) {
    std::unique_lock lock(mx_);
    products_.clear();
    std::map<std::pair<int, int>, AlgElt> table;
    for (auto [i, j, k, v] : sc.triples) table[{int(i), int(j)}].push_back({int(k), v});
    // ensure every pair has an entry (possibly empty product)
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            AlgElt& e = table[{i, j}];
            std::sort(e.begin(), e.end());
        }
    products_ = std::move(table);
}

namespace {
std::map<std::tuple<int, int, uint32_t>, std::weak_ptr<const SchurAlg>> g_alg_cache;
std::mutex g_alg_mx;
}  // namespace

SchurAlgPtr get_schur_algebra(int n, int d, uint32_t p) {
    std::lock_guard lock(g_alg_mx);
    auto key = std::tuple{n, d, p};
    if (auto it = g_alg_cache.find(key); it != g_alg_cache.end())
        if (auto existing = it->second.lock()) return existing;
    auto fresh = std::make_shared<const SchurAlg>(n, d, p);
    g_alg_cache[key] = fresh;
    return fresh;
}

Composition omega_weight(int n, int d) {
    if (n < d) throw std::invalid_argument("omega_weight: requires n >= d");
    Composition w(n, 0);
    for (int i = 0; i < d; ++i) w[i] = 1;
    return w;
}

CornerIso symgroup_corner(SchurAlgPtr alg) {
    const int n = alg->n(), d = alg->d();
    if (n < d) throw std::invalid_argument("symgroup_corner: requires n >= d");
    CornerIso iso;
    iso.alg = alg;
    iso.perms = all_perms(d);
    for (const Perm& s : iso.perms) iso.elements.push_back(corner_seq(s));
    // the corner has dimension d!: count basis multisets with row and column
    // content ω
    Composition omega = omega_weight(n, d);
    int count = 0;
    for (const PairSeq& m : alg->basis())
        if (row_content(m, n) == omega && col_content(m, n) == omega) ++count;
    if (count != int(iso.perms.size()))
        throw std::logic_error("symgroup_corner: corner dimension is not d!");
    // multiplicativity against the abstract group
    for (size_t a = 0; a < iso.perms.size(); ++a)
        for (size_t b = 0; b < iso.perms.size(); ++b) {
            DividedElt prod = compose_pairseq(iso.elements[a], iso.elements[b], alg->p());
            PairSeq expect = corner_seq(perm_compose(iso.perms[a], iso.perms[b]));
            if (prod.terms.size() != 1 || prod.terms.begin()->first != expect ||
                prod.terms.begin()->second != 1)
                throw std::logic_error("symgroup_corner: corner table mismatch");
        }
    iso.convention =
        "sigma -> xi_{graph(sigma)} is multiplicative for operator composition; "
        "composing endomorphisms in application order realizes the opposite algebra";
    return iso;
}

ModAction representable_module(SchurAlgPtr alg, int m) {
    const int n = alg->n(), d = alg->d();
    const uint32_t p = alg->p();
    double size = binomial(m * n + d - 1, d);
    if (size > 2e5) throw std::invalid_argument("representable_module: size guard exceeded");
    std::vector<std::pair<int, int>> pool;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) pool.push_back({i, j});
    std::vector<PairSeq> basis;
    std::vector<std::pair<int, int>> cur;
    enum_multisets(pool, d, 0, cur, basis);
    std::sort(basis.begin(), basis.end());
    std::map<PairSeq, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = int(i);

    ModAction mod;
    mod.p = p;
    mod.dim = int(basis.size());
    mod.algebra = schur_algebra_tag(n, d, p);
    for (const LabeledElt& g : alg->generators()) {
        Mat mat(p, mod.dim, mod.dim);
        for (int j = 0; j < mod.dim; ++j)
            for (const auto& [gm, gc] : g.elt.terms) {
                DividedElt prod = compose_pairseq(gm, basis[j], p);
                for (const auto& [pm, pc] : prod.terms) {
                    int k = index.at(pm);
                    mat.at(k, j) = fp::add(mat.at(k, j), fp::mul(gc, pc, p), p);
                }
            }
        mod.labels.push_back(g.label);
        mod.gens.push_back(std::move(mat));
    }
    return mod;
}

}  // namespace spf
