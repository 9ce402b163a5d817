#include "spf/functors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spf {

namespace {

std::string elt_key(const DividedElt& e) {
    std::ostringstream os;
    for (const auto& [m, c] : e.terms) {
        for (auto [r, cc] : m) os << int(r) << ':' << int(cc) << ',';
        os << '=' << c << ';';
    }
    return os.str();
}

DividedElt single_elt(uint32_t p, const PairSeq& m) {
    DividedElt e;
    e.p = p;
    e.add_term(m, 1);
    return e;
}

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

Composition pad_to(const Partition& lam, int m) {
    Composition c(lam.begin(), lam.end());
    if (int(c.size()) > m) return {};
    c.resize(m, 0);
    return c;
}

// ---- quotient bookkeeping over an explicit subspace ----
struct QuotientMaps {
    Mat proj;  // q × ambient
    Mat lift;  // ambient × q
};

QuotientMaps quotient_maps(const Mat& w, int ambient, uint32_t p) {
    RrefResult rr = rref_rank(w.transpose());
    std::vector<bool> is_pivot(ambient, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> free_coords;
    for (int j = 0; j < ambient; ++j)
        if (!is_pivot[j]) free_coords.push_back(j);
    int q = int(free_coords.size());
    QuotientMaps out{Mat(p, q, ambient), Mat(p, ambient, q)};
    for (int j = 0; j < ambient; ++j) {
        std::vector<uint32_t> e(ambient, 0);
        e[j] = 1;
        for (int i = 0; i < rr.rank; ++i) {
            uint32_t c = e[rr.pivots[i]];
            if (!c) continue;
            for (int k = 0; k < ambient; ++k)
                if (rr.r.at(i, k)) e[k] = fp::sub(e[k], fp::mul(c, rr.r.at(i, k), p), p);
        }
        for (int i = 0; i < q; ++i) out.proj.at(i, j) = e[free_coords[i]];
    }
    for (int i = 0; i < q; ++i) out.lift.at(free_coords[i], i) = 1;
    return out;
}

}  // namespace

Mat Realization::act(const DividedElt& e) const {
    if (!cache_acts()) return act_impl(e);
    return act_cached(elt_key(e), e);
}

const Mat& Realization::act_cached(const std::string& key, const DividedElt& e) const {
    {
        std::shared_lock lock(cache_mx_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    Mat m = act_impl(e);
    std::unique_lock lock(cache_mx_);
    return cache_.emplace(key, std::move(m)).first->second;
}

Mat Realization::act_weight(const Composition& lam) const {
    Composition padded = lam;
    if (int(padded.size()) > m_) {
        for (size_t i = m_; i < padded.size(); ++i)
            if (padded[i] != 0) return Mat(p_, dim_, dim_);
        padded.resize(m_);
    }
    padded.resize(m_, 0);
    return act(single_elt(p_, weight_idempotent_seq(padded)));
}

std::vector<int> Realization::character() const {
    std::vector<int> out;
    for (const Composition& lam : enumerate_lambda(m_, d_, LambdaKind::Dominant))
        out.push_back(rank_of(act_weight(lam)));
    return out;
}

ModAction materialize(const Realization& r) {
    ModAction mod;
    mod.p = r.p();
    mod.dim = r.dim();
    mod.algebra = schur_algebra_tag(r.m(), r.d(), r.p());
    for (const LabeledElt& g : dg_generators(r.m(), r.d(), r.p())) {
        mod.labels.push_back(g.label);
        mod.gens.push_back(r.act_cached(g.label, g.elt));
    }
    return mod;
}

// ---------------------------------------------------------------------------
// atom realizations: blockwise subquotients of the tensor power
// ---------------------------------------------------------------------------

namespace {

enum class BlockKind { Gamma, Sym, Ext, Trunc };

struct Block {
    BlockKind kind;
    int deg;
    int offset;
    std::vector<std::vector<uint8_t>> words;  // ascending representatives
    std::map<std::vector<uint8_t>, int> index;
};

void enum_words(int m, int deg, int maxmult, bool strict, std::vector<std::vector<uint8_t>>& out) {
    std::vector<uint8_t> cur;
    std::function<void(int)> rec = [&](int from) {
        if (int(cur.size()) == deg) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v < m; ++v) {
            if (strict && !cur.empty() && v <= cur.back()) continue;
            if (maxmult > 0) {
                int count = 0;
                for (uint8_t x : cur)
                    if (x == v) ++count;
                if (count >= maxmult) continue;
            }
            cur.push_back(uint8_t(v));
            rec(v);
            cur.pop_back();
        }
    };
    rec(0);
}

class AtomRealization : public Realization {
public:
    AtomRealization(uint32_t p, int m, int d, std::vector<std::pair<BlockKind, int>> spec)
        : Realization(p, m, d) {
        int offset = 0;
        for (auto [kind, deg] : spec) {
            Block b;
            b.kind = kind;
            b.deg = deg;
            b.offset = offset;
            offset += deg;
            int maxmult = kind == BlockKind::Trunc ? int(p) - 1 : 0;
            enum_words(m, deg, maxmult, kind == BlockKind::Ext, b.words);
            for (size_t i = 0; i < b.words.size(); ++i) b.index[b.words[i]] = int(i);
            blocks_.push_back(std::move(b));
        }
        if (offset != d) throw std::logic_error("atom: degrees do not sum to d");
        dim_ = 1;
        for (const Block& b : blocks_) {
            radix_.push_back(int(b.words.size()));
            dim_ *= int(b.words.size());
        }
        if (dim_ == 0) return;
        build_lifts();
        verify_trunc_stability();
    }

    // sparse lift of a basis element into the tensor power
    const std::vector<std::pair<uint64_t, uint32_t>>& lift(int j) const { return lifts_[j]; }

    // block-word decode of a full basis index
    std::vector<int> decode(int j) const {
        std::vector<int> out(blocks_.size());
        for (size_t b = 0; b < blocks_.size(); ++b) {
            out[b] = j % radix_[b];
            j /= radix_[b];
        }
        return out;
    }
    int encode(const std::vector<int>& parts) const {
        int j = 0;
        for (size_t b = blocks_.size(); b-- > 0;) j = j * radix_[b] + parts[b];
        return j;
    }

    // reduce a tensor-power word; returns (basis index, coeff) or coeff 0
    std::pair<int, uint32_t> reduce_word(const std::vector<uint8_t>& word) const {
        std::vector<int> parts(blocks_.size());
        uint32_t coeff = 1;
        for (size_t b = 0; b < blocks_.size(); ++b) {
            const Block& blk = blocks_[b];
            std::vector<uint8_t> w(word.begin() + blk.offset,
                                   word.begin() + blk.offset + blk.deg);
            switch (blk.kind) {
                case BlockKind::Gamma: {
                    if (!std::is_sorted(w.begin(), w.end())) return {0, 0};
                    parts[b] = blk.index.at(w);
                    break;
                }
                case BlockKind::Sym: {
                    std::sort(w.begin(), w.end());
                    parts[b] = blk.index.at(w);
                    break;
                }
                case BlockKind::Ext: {
                    int inversions = 0;
                    for (size_t i = 0; i < w.size(); ++i)
                        for (size_t j = i + 1; j < w.size(); ++j) {
                            if (w[i] == w[j]) return {0, 0};
                            if (w[i] > w[j]) ++inversions;
                        }
                    std::sort(w.begin(), w.end());
                    parts[b] = blk.index.at(w);
                    if (inversions % 2) coeff = fp::mul(coeff, p_ - 1, p_);
                    break;
                }
                case BlockKind::Trunc: {
                    std::sort(w.begin(), w.end());
                    auto it = blk.index.find(w);
                    if (it == blk.index.end()) return {0, 0};  // killed by the p-power span
                    parts[b] = it->second;
                    break;
                }
            }
        }
        return {encode(parts), coeff};
    }

protected:
    bool cache_acts() const override { return false; }  // sparse, cheap to recompute

    Mat act_impl(const DividedElt& e) const override {
        Mat out(p_, dim_, dim_);
        SparseOp op = tensor_action(e, m_, d_);
        std::map<uint64_t, std::vector<std::pair<uint64_t, uint32_t>>> by_col;
        for (auto& [r, c, v] : op.entries) by_col[c].push_back({r, v});
        for (int j = 0; j < dim_; ++j) {
            for (const auto& [tidx, c0] : lifts_[j]) {
                auto it = by_col.find(tidx);
                if (it == by_col.end()) continue;
                for (const auto& [row, v] : it->second) {
                    auto [idx, c1] = reduce_word(monomial_of_index(row, m_, d_));
                    if (!c1) continue;
                    uint32_t add = fp::mul(fp::mul(c0, v, p_), c1, p_);
                    out.at(idx, j) = fp::add(out.at(idx, j), add, p_);
                }
            }
        }
        return out;
    }

private:
    void build_lifts() {
        lifts_.resize(dim_);
        for (int j = 0; j < dim_; ++j) {
            std::vector<int> parts = decode(j);
            // start with one empty word, expand per block
            std::vector<std::pair<std::vector<uint8_t>, uint32_t>> words{{{}, 1}};
            for (size_t b = 0; b < blocks_.size(); ++b) {
                const Block& blk = blocks_[b];
                std::vector<std::vector<uint8_t>> arrangements;
                if (blk.kind == BlockKind::Gamma) {
                    std::vector<uint8_t> w = blk.words[parts[b]];
                    do {
                        arrangements.push_back(w);
                    } while (std::next_permutation(w.begin(), w.end()));
                } else {
                    arrangements.push_back(blk.words[parts[b]]);
                }
                std::vector<std::pair<std::vector<uint8_t>, uint32_t>> next;
                for (auto& [prefix, c] : words)
                    for (auto& arr : arrangements) {
                        std::vector<uint8_t> w = prefix;
                        w.insert(w.end(), arr.begin(), arr.end());
                        next.push_back({std::move(w), c});
                    }
                words = std::move(next);
            }
            for (auto& [w, c] : words) lifts_[j].push_back({monomial_index(w, m_), c});
            // reduce ∘ lift = identity on this basis vector
            std::map<int, uint32_t> acc;
            for (auto& [tidx, c] : lifts_[j]) {
                auto [idx, c1] = reduce_word(monomial_of_index(tidx, m_, d_));
                if (c1) {
                    uint32_t& slot = acc[idx];
                    slot = fp::add(slot, fp::mul(c, c1, p_), p_);
                }
            }
            if (acc.size() != 1 || acc.begin()->first != j || acc.begin()->second != 1)
                throw std::logic_error("atom: reduce∘lift is not the identity");
        }
    }

    // The only quotient kernel not forced by the commutant structure is the
    // p-power span inside truncated blocks; verify it is killed coherently.
    void verify_trunc_stability() const {
        bool has_trunc = false;
        for (const Block& b : blocks_) has_trunc = has_trunc || b.kind == BlockKind::Trunc;
        if (!has_trunc || ipow(m_, d_) > 100000) return;
        auto gens = dg_generators(m_, d_, p_);
        int t_dim = int(ipow(m_, d_));
        for (const auto& g : gens) {
            if (g.label[0] == 'e') continue;  // diagonal: preserves contents
            SparseOp op = tensor_action(g.elt, m_, d_);
            std::map<uint64_t, std::vector<std::pair<uint64_t, uint32_t>>> by_col;
            for (auto& [r, c, v] : op.entries) by_col[c].push_back({r, v});
            for (int t = 0; t < t_dim; ++t) {
                auto word = monomial_of_index(uint64_t(t), m_, d_);
                // does this word die in some truncated block?
                bool killed = false;
                for (const Block& blk : blocks_) {
                    if (blk.kind != BlockKind::Trunc) continue;
                    std::vector<uint8_t> w(word.begin() + blk.offset,
                                           word.begin() + blk.offset + blk.deg);
                    std::sort(w.begin(), w.end());
                    if (!blk.index.count(w)) killed = true;
                }
                if (!killed) continue;
                auto it = by_col.find(uint64_t(t));
                if (it == by_col.end()) continue;
                std::map<int, uint32_t> acc;
                for (auto& [row, v] : it->second) {
                    auto [idx, c1] = reduce_word(monomial_of_index(row, m_, d_));
                    if (c1) {
                        uint32_t& slot = acc[idx];
                        slot = fp::add(slot, fp::mul(v, c1, p_), p_);
                    }
                }
                // a generator may not resurrect a killed word modulo the
                // symmetrization kernel: images must cancel exactly
                for (auto& [idx, v] : acc)
                    if (v) throw std::logic_error("atom: truncated block kernel not stable");
            }
        }
    }

    std::vector<Block> blocks_;
    std::vector<int> radix_;
    std::vector<std::vector<std::pair<uint64_t, uint32_t>>> lifts_;
};

class SubspaceRealization : public Realization {
public:
    SubspaceRealization(RealizationPtr parent, Mat basis)
        : Realization(parent->p(), parent->m(), parent->d()),
          parent_(std::move(parent)),
          basis_(std::move(basis)),
          solver_(basis_) {
        dim_ = basis_.cols;
    }
    const Mat& basis() const { return basis_; }
    const RealizationPtr& parent() const { return parent_; }

protected:
    Mat act_impl(const DividedElt& e) const override {
        Mat img = parent_->act(e).mul(basis_);
        return solver_.coords_mat(img);  // throws when the subspace is not stable
    }

private:
    RealizationPtr parent_;
    Mat basis_;
    SpanSolver solver_;
};

class QuotientRealization : public Realization {
public:
    QuotientRealization(RealizationPtr parent, const Mat& kernel)
        : Realization(parent->p(), parent->m(), parent->d()), parent_(std::move(parent)) {
        maps_ = quotient_maps(kernel, parent_->dim(), p_);
        dim_ = maps_.proj.rows;
        // kernel must be stable under the raising/lowering family (the
        // diagonal idempotents preserve weight-homogeneous subspaces)
        for (const LabeledElt& g : dg_generators(m_, d_, p_)) {
            if (g.label[0] == 'e') continue;
            Mat img = parent_->act_cached(g.label, g.elt).mul(kernel);
            if (!maps_.proj.mul(img).is_zero())
                throw std::logic_error("quotient realization: kernel not stable");
        }
    }

protected:
    Mat act_impl(const DividedElt& e) const override {
        return maps_.proj.mul(parent_->act(e).mul(maps_.lift));
    }

private:
    RealizationPtr parent_;
    QuotientMaps maps_;
};

class DualRealization : public Realization {
public:
    explicit DualRealization(RealizationPtr inner)
        : Realization(inner->p(), inner->m(), inner->d()), inner_(std::move(inner)) {
        dim_ = inner_->dim();
    }

protected:
    Mat act_impl(const DividedElt& e) const override {
        return inner_->act(transpose_elt(e)).transpose();
    }

private:
    RealizationPtr inner_;
};

}  // namespace

// ---------------------------------------------------------------------------
// G_⊗ and G_Hom as realizations
// ---------------------------------------------------------------------------

SymModData make_symmod_data(const SymMod& n) {
    SymModData data;
    data.action = n.action;
    data.d = n.d;
    for (const Perm& s : all_perms(n.d)) data.perm_mats.push_back(n.perm_matrix(s));
    return data;
}

namespace {

// permutation π with word = sorted(word) ∘ π (stable occupancy matching)
Perm matching_perm(const std::vector<uint8_t>& word) {
    int d = int(word.size());
    std::vector<uint8_t> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next_pos(256, 0);
    std::vector<std::vector<int>> positions(256);
    for (int k = 0; k < d; ++k) positions[sorted[k]].push_back(k);
    Perm pi(d);
    for (int k = 0; k < d; ++k) {
        uint8_t v = word[k];
        pi[k] = positions[v][size_t(next_pos[v]++)];
    }
    return pi;
}

int perm_index(const Perm& s, const std::vector<Perm>& all) {
    auto it = std::lower_bound(all.begin(), all.end(), s);
    if (it == all.end() || *it != s) throw std::logic_error("perm_index: not found");
    return int(it - all.begin());
}

struct MonomialTable {
    std::vector<int> content_of;   // index into Λ(m,d) list
    std::vector<int> perm_of;      // matching permutation index
    std::vector<uint64_t> rep_of;  // canonical sorted monomial per content
    std::vector<Composition> lambdas;
};

MonomialTable monomial_table(int m, int d) {
    MonomialTable t;
    t.lambdas = enumerate_lambda(m, d, LambdaKind::All);
    std::map<Composition, int> lookup;
    for (size_t i = 0; i < t.lambdas.size(); ++i) lookup[t.lambdas[i]] = int(i);
    auto perms = all_perms(d);
    int dim = int(ipow(m, d));
    t.content_of.resize(dim);
    t.perm_of.resize(dim);
    t.rep_of.assign(t.lambdas.size(), 0);
    for (int idx = 0; idx < dim; ++idx) {
        auto word = monomial_of_index(uint64_t(idx), m, d);
        Composition content(m, 0);
        for (uint8_t v : word) content[v]++;
        int li = lookup.at(content);
        t.content_of[idx] = li;
        t.perm_of[idx] = perm_index(matching_perm(word), perms);
        std::vector<uint8_t> sorted = word;
        std::sort(sorted.begin(), sorted.end());
        t.rep_of[li] = monomial_index(sorted, m);
    }
    return t;
}

class GTensorRealization : public Realization {
public:
    GTensorRealization(SymModData n, int m, uint32_t p)
        : Realization(p, m, n.d), n_(std::move(n)), table_(monomial_table(m, n_.d)) {
        perms_ = all_perms(d_);
        const int nd = n_.action.dim;
        for (size_t li = 0; li < table_.lambdas.size(); ++li) {
            // relation subspace: span (ρ(s)−1)N over Young subgroup generators
            std::vector<std::vector<uint32_t>> cols;
            for (int gi : young_subgroup_gens(table_.lambdas[li])) {
                Mat rel = n_.action.gen(gi).sub(Mat::identity(p_, nd));
                for (int j = 0; j < nd; ++j) cols.push_back(rel.col_vec(j));
            }
            Mat w = from_cols(p_, nd, cols);
            QuotientMaps maps = quotient_maps(w, nd, p_);
            offsets_.push_back(dim_);
            dim_ += maps.proj.rows;
            maps_.push_back(std::move(maps));
        }
    }

    int block_offset(int li) const { return offsets_[li]; }
    int block_dim(int li) const { return maps_[li].proj.rows; }
    const Mat& block_proj(int li) const { return maps_[li].proj; }
    const Mat& block_lift(int li) const { return maps_[li].lift; }
    const MonomialTable& table() const { return table_; }

protected:
    Mat act_impl(const DividedElt& e) const override {
        Mat out(p_, dim_, dim_);
        SparseOp op = tensor_action(e, m_, d_);
        std::map<uint64_t, std::vector<std::pair<uint64_t, uint32_t>>> by_col;
        for (auto& [r, c, v] : op.entries) by_col[c].push_back({r, v});
        for (size_t li = 0; li < table_.lambdas.size(); ++li) {
            auto it = by_col.find(table_.rep_of[li]);
            if (it == by_col.end() || block_dim(int(li)) == 0) continue;
            for (int w = 0; w < block_dim(int(li)); ++w) {
                std::vector<uint32_t> v = maps_[li].lift.col_vec(w);
                int col = offsets_[li] + w;
                for (auto& [row, val] : it->second) {
                    int mu = table_.content_of[row];
                    if (block_dim(mu) == 0) continue;
                    std::vector<uint32_t> moved =
                        n_.perm_mats[table_.perm_of[row]].apply_vec(v);
                    std::vector<uint32_t> red = maps_[mu].proj.apply_vec(moved);
                    for (int i = 0; i < int(red.size()); ++i) {
                        if (!red[i]) continue;
                        uint32_t& slot = out.at(offsets_[mu] + i, col);
                        slot = fp::add(slot, fp::mul(val, red[i], p_), p_);
                    }
                }
            }
        }
        return out;
    }

private:
    SymModData n_;
    MonomialTable table_;
    std::vector<Perm> perms_;
    std::vector<QuotientMaps> maps_;
    std::vector<int> offsets_;
};

class GHomRealization : public Realization {
public:
    GHomRealization(SymModData n, int m, uint32_t p)
        : Realization(p, m, n.d), n_(std::move(n)), table_(monomial_table(m, n_.d)) {
        perms_ = all_perms(d_);
        const int nd = n_.action.dim;
        for (size_t li = 0; li < table_.lambdas.size(); ++li) {
            // invariants N^{S_λ}: common kernel of (ρ(s)−1)
            Mat stack(p_, 0, nd);
            bool first = true;
            for (int gi : young_subgroup_gens(table_.lambdas[li])) {
                Mat rel = n_.action.gen(gi).sub(Mat::identity(p_, nd));
                stack = first ? rel : vcat(stack, rel);
                first = false;
            }
            Mat basis = first ? Mat::identity(p_, nd) : kernel_basis(stack);
            offsets_.push_back(dim_);
            dim_ += basis.cols;
            solvers_.push_back(basis.cols ? std::optional<SpanSolver>(SpanSolver(basis))
                                          : std::nullopt);
            bases_.push_back(std::move(basis));
        }
    }

protected:
    Mat act_impl(const DividedElt& e) const override {
        Mat out(p_, dim_, dim_);
        SparseOp op = tensor_action(e, m_, d_);
        // group entries by row; only canonical rows are needed
        std::map<uint64_t, std::vector<std::pair<uint64_t, uint32_t>>> by_row;
        for (auto& [r, c, v] : op.entries) by_row[r].push_back({c, v});
        for (size_t li = 0; li < table_.lambdas.size(); ++li) {
            if (bases_[li].cols == 0) continue;
            for (int u = 0; u < bases_[li].cols; ++u) {
                int col = offsets_[li] + u;
                std::vector<uint32_t> uvec = bases_[li].col_vec(u);
                for (size_t mu = 0; mu < table_.lambdas.size(); ++mu) {
                    if (bases_[mu].cols == 0) continue;
                    auto it = by_row.find(table_.rep_of[mu]);
                    if (it == by_row.end()) continue;
                    std::vector<uint32_t> val(n_.action.dim, 0);
                    bool any = false;
                    for (auto& [j, v] : it->second) {
                        if (table_.content_of[j] != int(li)) continue;
                        Perm inv = perm_inverse(perms_[table_.perm_of[j]]);
                        std::vector<uint32_t> moved =
                            n_.perm_mats[perm_index(inv, perms_)].apply_vec(uvec);
                        for (int i = 0; i < n_.action.dim; ++i)
                            val[i] = fp::add(val[i], fp::mul(v, moved[i], p_), p_);
                        any = true;
                    }
                    if (!any) continue;
                    std::vector<uint32_t> coords = solvers_[mu]->coords(val);
                    for (int i = 0; i < int(coords.size()); ++i)
                        if (coords[i])
                            out.at(offsets_[mu] + i, col) =
                                fp::add(out.at(offsets_[mu] + i, col), coords[i], p_);
                }
            }
        }
        return out;
    }

private:
    SymModData n_;
    MonomialTable table_;
    std::vector<Perm> perms_;
    std::vector<Mat> bases_;
    std::vector<std::optional<SpanSolver>> solvers_;
    std::vector<int> offsets_;
};

}  // namespace

RealizationPtr gtensor_realize(const SymModData& n, int m, uint32_t p) {
    return std::make_shared<GTensorRealization>(n, m, p);
}

RealizationPtr ghom_realize(const SymModData& n, int m, uint32_t p) {
    return std::make_shared<GHomRealization>(n, m, p);
}

// ---------------------------------------------------------------------------
// cokernel realization for the internal tensor product
// ---------------------------------------------------------------------------

namespace {

class CokerRealization : public Realization {
public:
    CokerRealization(uint32_t p, int m, int d, RealizationPtr yprime, int r, Mat image)
        : Realization(p, m, d), yprime_(std::move(yprime)), r_(r) {
        ambient_ = r_ * yprime_->dim();
        maps_ = quotient_maps(image, ambient_, p_);
        dim_ = maps_.proj.rows;
        // consistency probe: the unit acts as the identity, and the action is
        // multiplicative on sampled generator pairs (an unstable presentation
        // image would break both)
        DividedElt unit;
        unit.p = p_;
        for (const Composition& lam : enumerate_lambda(m_, d_, LambdaKind::All))
            unit.add_term(weight_idempotent_seq(lam), 1);
        if (!(act_impl(unit) == Mat::identity(p_, dim_)))
            throw std::logic_error("internal tensor: unit does not act as identity");
        auto gens = dg_generators(m_, d_, p_);
        for (size_t i = 0; i + 1 < gens.size() && i < 3; ++i) {
            const DividedElt& a = gens[gens.size() - 1 - i].elt;
            const DividedElt& b = gens[i].elt;
            Mat lhs = act_impl(compose_divided(a, b));
            Mat rhs = act_impl(a).mul(act_impl(b));
            if (!(lhs == rhs))
                throw std::logic_error("internal tensor: action not multiplicative");
        }
    }

protected:
    Mat act_impl(const DividedElt& e) const override {
        DividedElt embedded = gamma_embed(e, endo_right_factor(m_), d_);
        const Mat& a = yprime_->act_cached("iota2:" + elt_key(e), embedded);
        int yd = yprime_->dim();
        // blockdiag(a) times the sparse lift columns, then project
        Mat lifted(p_, ambient_, dim_);
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < ambient_; ++k) {
                uint32_t c = maps_.lift.at(k, j);
                if (!c) continue;
                int blk = k / yd, kk = k % yd;
                for (int i = 0; i < yd; ++i) {
                    uint32_t v = a.at(i, kk);
                    if (!v) continue;
                    uint32_t& slot = lifted.at(blk * yd + i, j);
                    slot = fp::add(slot, fp::mul(v, c, p_), p_);
                }
            }
        return maps_.proj.mul(lifted);
    }

private:
    RealizationPtr yprime_;
    int r_;
    int ambient_;
    QuotientMaps maps_;
};

}  // namespace

// ---------------------------------------------------------------------------
// FunctorSpace
// ---------------------------------------------------------------------------

FunctorSpace::Presentation FunctorSpace::presentation(const Realization& x) {
    const int n = x.m();
    SchurAlgPtr alg = get_schur_algebra(n, d_, p_);
    const int dimS = alg->dim();
    Presentation pres;
    if (x.dim() == 0) return pres;

    // action of every basis element
    std::vector<Mat> basis_act;
    basis_act.reserve(dimS);
    for (int i = 0; i < dimS; ++i)
        basis_act.push_back(x.act_cached("b" + std::to_string(i),
                                         single_elt(p_, alg->basis_elt(i))));

    // greedy module generators
    Echelon span(p_, x.dim());
    for (int cand = 0; cand < x.dim() && span.rank() < x.dim(); ++cand) {
        std::vector<uint32_t> v(x.dim(), 0);
        v[cand] = 1;
        if (span.contains(v)) continue;
        pres.gens.push_back(v);
        for (int i = 0; i < dimS; ++i) span.add(basis_act[i].apply_vec(v));
    }
    pres.r = int(pres.gens.size());

    // kernel of the evaluation map S^r -> x
    Mat eval(p_, x.dim(), pres.r * dimS);
    for (int g = 0; g < pres.r; ++g)
        for (int i = 0; i < dimS; ++i) {
            auto col = basis_act[i].apply_vec(pres.gens[g]);
            for (int row = 0; row < x.dim(); ++row) eval.at(row, g * dimS + i) = col[row];
        }
    Mat kernel = kernel_basis(eval);

    // greedy module generators of the kernel under the left regular action
    std::vector<Mat> reg;
    for (const LabeledElt& g : alg->generators()) reg.push_back(alg->left_regular(g.elt));
    Echelon kspan(p_, pres.r * dimS);
    auto apply_reg = [&](const Mat& rg, const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size(), 0);
        for (int blk = 0; blk < pres.r; ++blk) {
            for (int i = 0; i < dimS; ++i) {
                uint64_t acc = 0;
                for (int k = 0; k < dimS; ++k)
                    acc += uint64_t(rg.at(i, k)) * v[size_t(blk) * dimS + k];
                out[size_t(blk) * dimS + i] = uint32_t(acc % p_);
            }
        }
        return out;
    };
    for (int kc = 0; kc < kernel.cols && kspan.rank() < kernel.cols; ++kc) {
        std::vector<uint32_t> v = kernel.col_vec(kc);
        if (kspan.contains(v)) continue;
        // record as a kernel generator and close its submodule
        std::vector<std::vector<AlgElt>>& rows = pres.kernel;
        std::vector<AlgElt> row(pres.r);
        for (int g = 0; g < pres.r; ++g)
            for (int i = 0; i < dimS; ++i)
                if (uint32_t c = v[size_t(g) * dimS + i]) row[g].push_back({i, c});
        rows.push_back(std::move(row));
        std::vector<std::vector<uint32_t>> pending{v};
        kspan.add(v);
        while (!pending.empty()) {
            auto cur = std::move(pending.back());
            pending.pop_back();
            for (const Mat& rg : reg) {
                auto img = apply_reg(rg, cur);
                if (kspan.add(img)) pending.push_back(std::move(img));
            }
        }
    }
    if (kspan.rank() != kernel.cols)
        throw std::logic_error("presentation: kernel generators incomplete");
    return pres;
}

RealizationPtr FunctorSpace::internal_tensor(const FunctorExprPtr& x, const FunctorExprPtr& y,
                                             int m) {
    return realize(fe_itensor(x, y), m);
}

RealizationPtr FunctorSpace::internal_hom(const FunctorExprPtr& x, const FunctorExprPtr& y,
                                          int m) {
    return realize(fe_ihom(x, y), m);
}

RealizationPtr FunctorSpace::mon_dual(const FunctorExprPtr& x, int m) {
    return realize(fe_mon_dual(x), m);
}

RealizationPtr FunctorSpace::kuhn_dual(RealizationPtr r) const {
    return std::make_shared<DualRealization>(std::move(r));
}

RealizationPtr FunctorSpace::realize(const FunctorExprPtr& e, int m) {
    std::string key = print_expr(*e) + "@" + std::to_string(m);
    {
        std::lock_guard lock(mx_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    RealizationPtr built = realize_uncached(e, m);
    std::lock_guard lock(mx_);
    return memo_.emplace(key, std::move(built)).first->second;
}

RealizationPtr FunctorSpace::realize_uncached(const FunctorExprPtr& e, int m) {
    if (e->d != d_) throw std::invalid_argument("realize: degree mismatch with space");
    if (m < 1) throw std::invalid_argument("realize: m >= 1");
    if (ipow(m, d_) > 600000) throw std::invalid_argument("realize: size guard exceeded");
    auto blocks_of = [&](BlockKind kind) {
        std::vector<std::pair<BlockKind, int>> spec;
        for (int part : e->parts) spec.push_back({kind, part});
        return spec;
    };
    switch (e->kind) {
        case FKind::Gamma:
            return std::make_shared<AtomRealization>(p_, m, d_, blocks_of(BlockKind::Gamma));
        case FKind::Sym:
            return std::make_shared<AtomRealization>(p_, m, d_, blocks_of(BlockKind::Sym));
        case FKind::Ext:
            return std::make_shared<AtomRealization>(p_, m, d_, blocks_of(BlockKind::Ext));
        case FKind::TensorPower: {
            std::vector<std::pair<BlockKind, int>> spec(d_, {BlockKind::Sym, 1});
            return std::make_shared<AtomRealization>(p_, m, d_, spec);
        }
        case FKind::TruncSym: {
            std::vector<std::pair<BlockKind, int>> spec{{BlockKind::Trunc, d_}};
            return std::make_shared<AtomRealization>(p_, m, d_, spec);
        }
        case FKind::Weyl:
            return weyl_module(canonical(e->parts), m);
        case FKind::Simple:
            return simple_module(canonical(e->parts), m);
        case FKind::ProjCover:
            return projective_cover(canonical(e->parts), m, 0);
        case FKind::KuhnDual:
            return kuhn_dual(realize(e->kids[0], m));
        case FKind::IHom:
            return kuhn_dual(realize(fe_itensor(e->kids[0], fe_dual(e->kids[1])), m));
        case FKind::MonDual:
            return kuhn_dual(realize(fe_itensor(e->kids[0], fe_dual(fe_gamma({d_}))), m));
        case FKind::GTensor:
        case FKind::GHom: {
            if (!sym_eval_) throw std::logic_error("realize: no symmetric-group evaluator wired");
            SymMod n = sym_eval_(e->sym);
            SymModData data = make_symmod_data(n);
            return e->kind == FKind::GTensor ? gtensor_realize(data, m, p_)
                                             : ghom_realize(data, m, p_);
        }
        case FKind::ITensor: {
            if (ipow(uint64_t(m) * m, d_) > 600000)
                throw std::invalid_argument("internal tensor: size guard exceeded");
            RealizationPtr x = realize(e->kids[0], m);
            Presentation pres = presentation(*x);
            RealizationPtr yprime = realize(e->kids[1], m * m);
            SchurAlgPtr alg = get_schur_algebra(m, d_, p_);
            EndoMap iota1 = endo_left_factor(m);
            // columns of the presentation map, evaluated through ι₁
            Echelon image(p_, pres.r * yprime->dim());
            for (const auto& row : pres.kernel) {
                std::vector<Mat> acts;
                for (int i = 0; i < pres.r; ++i) {
                    DividedElt elt = alg->to_divided(row[i]);
                    DividedElt embedded = gamma_embed(elt, iota1, d_);
                    acts.push_back(yprime->act(embedded));
                }
                for (int j = 0; j < yprime->dim(); ++j) {
                    std::vector<uint32_t> col(size_t(pres.r) * yprime->dim());
                    for (int i = 0; i < pres.r; ++i) {
                        auto v = acts[i].col_vec(j);
                        std::copy(v.begin(), v.end(), col.begin() + size_t(i) * yprime->dim());
                    }
                    image.add(std::move(col));
                }
            }
            return std::make_shared<CokerRealization>(p_, m, d_, yprime, pres.r,
                                                      image.basis_cols());
        }
    }
    throw std::logic_error("realize: unhandled expression kind");
}

// ---------------------------------------------------------------------------
// Weyl and simple modules
// ---------------------------------------------------------------------------

RealizationPtr FunctorSpace::weyl_module(const Partition& lam, int m) {
    if (int(lam.size()) > m)
        throw std::invalid_argument("weyl_module: more parts than the evaluation dimension");
    Partition conj = conjugate(lam);
    RealizationPtr parent = realize(fe_ext(Composition(conj.begin(), conj.end())), m);
    auto atom = std::dynamic_pointer_cast<const AtomRealization>(parent);
    if (!atom) throw std::logic_error("weyl_module: parent is not an atom");

    // highest weight vector: per block the initial-segment subset {0,..,deg-1}
    int nblocks = int(conj.size());
    std::vector<int> word_index(nblocks);
    for (int b = 0; b < nblocks; ++b) {
        std::vector<std::vector<uint8_t>> words;
        enum_words(m, conj[b], 0, true, words);
        std::vector<uint8_t> lead;
        for (int v = 0; v < conj[b]; ++v) lead.push_back(uint8_t(v));
        int idx = -1;
        for (size_t i = 0; i < words.size(); ++i)
            if (words[i] == lead) idx = int(i);
        if (idx < 0) throw std::logic_error("weyl_module: leading word missing");
        word_index[b] = idx;
    }
    int hw_index = atom->encode(word_index);
    std::vector<uint32_t> seed(parent->dim(), 0);
    seed[hw_index] = 1;

    // spin under the lowering family; raising and weight stability follow
    std::vector<Mat> lowering;
    for (const LabeledElt& g : dg_generators(m, d_, p_))
        if (g.label[0] == 'F') lowering.push_back(parent->act_cached(g.label, g.elt));
    Echelon ech(p_, parent->dim());
    ech.add(seed);
    std::vector<std::vector<uint32_t>> pending{seed};
    while (!pending.empty()) {
        auto v = std::move(pending.back());
        pending.pop_back();
        for (const Mat& g : lowering) {
            auto w = g.apply_vec(v);
            if (ech.add(w)) pending.push_back(std::move(w));
        }
    }
    Mat basis = ech.basis_cols();
    auto weyl = std::make_shared<SubspaceRealization>(parent, basis);
    // stability under the raising family: act() throws when the span leaks
    for (const LabeledElt& g : dg_generators(m, d_, p_))
        if (g.label[0] == 'E') weyl->act_cached(g.label, g.elt);
    uint64_t predicted = count_semistandard_tableaux(lam, m);
    if (uint64_t(weyl->dim()) != predicted)
        throw std::logic_error("weyl_module: dimension differs from tableau count");
    // highest weight checks
    if (rank_of(weyl->act_weight(pad_to(lam, m))) != 1)
        throw std::logic_error("weyl_module: highest weight space not one-dimensional");
    for (const Composition& mu : enumerate_lambda(m, d_, LambdaKind::Dominant)) {
        if (rank_of(weyl->act_weight(mu)) == 0) continue;
        Cmp c = compare(Partition(mu.begin(), mu.end()), lam, Order::Dominance);
        if (c != Cmp::Less && c != Cmp::Equal)
            throw std::logic_error("weyl_module: weight above the highest weight");
    }
    return weyl;
}

RealizationPtr FunctorSpace::simple_module(const Partition& lam, int m) {
    RealizationPtr weyl = realize(fe_weyl(lam), m);
    auto sub = std::dynamic_pointer_cast<const SubspaceRealization>(weyl);
    if (!sub) throw std::logic_error("simple_module: weyl realization shape unexpected");
    // contravariant Gram form: the parent atom basis is orthonormal
    Mat b = sub->basis();
    Mat gram = b.transpose().mul(b);
    // ⟨v_λ, v_λ⟩ = 1 for the highest weight vector
    {
        Mat hw = sub->act_weight(pad_to(lam, m));
        Mat hw_basis = column_space_basis(hw);
        if (hw_basis.cols != 1) throw std::logic_error("simple_module: weight space broken");
        std::vector<uint32_t> v = hw_basis.col_vec(0);
        uint64_t norm = 0;
        std::vector<uint32_t> gv = gram.apply_vec(v);
        for (size_t i = 0; i < v.size(); ++i) norm += uint64_t(v[i]) * gv[i];
        if (norm % p_ == 0)
            throw std::logic_error("simple_module: highest weight vector is isotropic");
    }
    Mat rad = kernel_basis(gram);
    return std::make_shared<QuotientRealization>(weyl, rad);
}

// ---------------------------------------------------------------------------
// simple tables and characters
// ---------------------------------------------------------------------------

const FunctorSpace::SimpleTable& FunctorSpace::simple_table(int m) {
    {
        std::lock_guard lock(mx_);
        auto it = tables_.find(m);
        if (it != tables_.end()) return it->second;
    }
    SimpleTable table;
    for (const Composition& lam : enumerate_lambda(m, d_, LambdaKind::Dominant))
        table.labels.push_back(Partition(lam.begin(), lam.end()));
    for (const Partition& lam : table.labels) {
        RealizationPtr simple = realize(fe_simple(lam), m);
        table.simples.push_back(simple);
        table.actions.push_back(materialize(*simple));
        table.chars.push_back(simple->character());
        table.dims.push_back(simple->dim());
    }
    // unitriangularity spot-check: char(L_λ)[λ] = 1
    for (size_t i = 0; i < table.labels.size(); ++i)
        if (table.chars[i][i] != 1)
            throw std::logic_error("simple_table: highest weight multiplicity is not 1");
    std::lock_guard lock(mx_);
    return tables_.emplace(m, std::move(table)).first->second;
}

FunctorSpace::CharacterDecomposition FunctorSpace::character_multiplicities(const ModAction& x,
                                                                            int m) {
    const SimpleTable& table = simple_table(m);
    std::vector<int> remaining;
    for (const Partition& lam : table.labels) {
        Composition padded = pad_to(lam, m);
        std::string label = "e" + format_partition(padded);
        int gi = -1;
        for (size_t i = 0; i < x.labels.size(); ++i)
            if (x.labels[i] == label) gi = int(i);
        if (gi < 0) throw std::invalid_argument("character_multiplicities: weight gen missing");
        remaining.push_back(rank_of(x.gen(gi)));
    }
    CharacterDecomposition out;
    out.character = remaining;
    for (size_t i = 0; i < table.labels.size(); ++i) {
        int mult = remaining[i];
        if (mult < 0) throw std::runtime_error("character_multiplicities: negative multiplicity");
        if (mult == 0) continue;
        for (size_t j = 0; j < table.labels.size(); ++j) {
            remaining[j] -= mult * table.chars[i][j];
            if (remaining[j] < 0)
                throw std::runtime_error("character_multiplicities: negative multiplicity");
        }
        out.simples.push_back({table.labels[i], mult});
    }
    for (int v : remaining)
        if (v != 0) throw std::runtime_error("character_multiplicities: non-zero residue");
    int total = 0;
    for (auto& [lam, mult] : out.simples) {
        size_t idx = 0;
        while (table.labels[idx] != lam) ++idx;
        total += mult * table.dims[idx];
    }
    if (total != x.dim) throw std::runtime_error("character_multiplicities: dimension mismatch");
    return out;
}

FunctorSpace::CharacterDecomposition FunctorSpace::character_multiplicities(const Realization& x) {
    return character_multiplicities(materialize(x), x.m());
}

// ---------------------------------------------------------------------------
// projective covers and Ext^1
// ---------------------------------------------------------------------------

RealizationPtr FunctorSpace::projective_cover(const Partition& mu, int m, uint64_t seed) {
    RealizationPtr gamma = realize(fe_gamma(Composition(mu.begin(), mu.end())), m);
    ModAction big = materialize(*gamma);
    FittingResult fit = fitting_decompose(big, seed);
    if (fit.maybe_decomposable)
        throw std::runtime_error("projective_cover: decomposition budget exhausted");
    const SimpleTable& table = simple_table(m);
    RealizationPtr found;
    for (const Summand& s : fit.summands) {
        RadicalTop rt = radical_top(s.action, table.actions);
        CharacterDecomposition dec = character_multiplicities(rt.top, m);
        if (dec.simples.size() == 1 && dec.simples[0].first == mu && dec.simples[0].second == 1) {
            if (found) throw std::logic_error("projective_cover: summand with top L_mu not unique");
            found = std::make_shared<SubspaceRealization>(gamma, s.basis);
        }
    }
    if (!found) throw std::runtime_error("projective_cover: no summand with the requested top");
    return found;
}

int FunctorSpace::ext1(const Partition& mu, const Partition& nu, int m, uint64_t seed) {
    RealizationPtr cover = projective_cover(mu, m, seed);
    ModAction cover_act = materialize(*cover);
    const SimpleTable& table = simple_table(m);
    RadicalTop rt = radical_top(cover_act, table.actions);
    if (rt.radical.cols == 0) return 0;
    ModAction rad = submodule_action(cover_act, rt.radical);
    RadicalTop rt2 = radical_top(rad, table.actions);
    CharacterDecomposition dec = character_multiplicities(rt2.top, m);
    for (auto& [lam, mult] : dec.simples)
        if (lam == nu) return mult;
    return 0;
}

// ---------------------------------------------------------------------------
// Yoneda evaluation
// ---------------------------------------------------------------------------

ModAction FunctorSpace::yoneda_evaluate(const Realization& y, int m) {
    const int n = y.m();
    SchurAlgPtr alg_n = get_schur_algebra(n, d_, p_);
    std::vector<Composition> lambdas = enumerate_lambda(m, d_, LambdaKind::All);
    for (const Composition& lam : lambdas) {
        int nonzero = 0;
        for (int part : lam)
            if (part) ++nonzero;
        if (nonzero > n) throw std::invalid_argument("yoneda_evaluate: weight needs more rows than n");
    }
    struct BlockData {
        Composition lam, sorted;
        PairSeq pairing;                      // cyclic generator of B_λ
        std::vector<PairSeq> basis;           // basis of B_λ
        std::map<PairSeq, int> index;
        std::vector<AlgElt> expressor;        // x_P per basis element
        Mat weight_basis;                      // basis of e_{λ̃} y
        std::optional<SpanSolver> solver;
        int offset = 0;
    };
    std::vector<BlockData> blocks;
    int total = 0;
    for (const Composition& lam : lambdas) {
        BlockData b;
        b.lam = lam;
        Partition sorted = sorted_partition(lam);
        b.sorted = pad_to(sorted, n);
        // stable sort of column indices by part size, descending
        std::vector<int> order(lam.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int c) { return lam[a] > lam[c]; });
        std::vector<std::pair<int, int>> pairing;
        for (size_t u = 0; u < order.size(); ++u)
            for (int k = 0; k < lam[order[u]]; ++k) pairing.push_back({int(u), order[u]});
        b.pairing = make_pairseq(pairing);
        // basis of B_λ: multisets over [n]×[m] with column content λ
        std::function<void(int, std::vector<std::pair<int, int>>&)> rec =
            [&](int colpos, std::vector<std::pair<int, int>>& cur) {
                if (colpos == int(lam.size())) {
                    b.basis.push_back(make_pairseq(cur));
                    return;
                }
                // choose a multiset of rows of size lam[colpos]
                std::function<void(int, int)> pick = [&](int from, int left) {
                    if (left == 0) {
                        rec(colpos + 1, cur);
                        return;
                    }
                    for (int row = from; row < n; ++row) {
                        cur.push_back({row, colpos});
                        pick(row, left - 1);
                        cur.pop_back();
                    }
                };
                pick(0, lam[colpos]);
            };
        std::vector<std::pair<int, int>> cur;
        rec(0, cur);
        std::sort(b.basis.begin(), b.basis.end());
        b.basis.erase(std::unique(b.basis.begin(), b.basis.end()), b.basis.end());
        for (size_t i = 0; i < b.basis.size(); ++i) b.index[b.basis[i]] = int(i);
        // R_λ: x ↦ x ∘ ξ_{M_λ} from S(n,d)e_{λ̃} onto B_λ
        std::vector<PairSeq> se_basis;
        for (const PairSeq& bs : alg_n->basis())
            if (col_content(bs, n) == b.sorted) se_basis.push_back(bs);
        if (se_basis.size() != b.basis.size())
            throw std::logic_error("yoneda_evaluate: block dimensions mismatch");
        Mat r_mat(p_, int(b.basis.size()), int(se_basis.size()));
        for (size_t j = 0; j < se_basis.size(); ++j) {
            DividedElt prod = compose_pairseq(se_basis[j], b.pairing, p_);
            for (const auto& [pm, pc] : prod.terms) r_mat.at(b.index.at(pm), int(j)) = pc;
        }
        auto r_inv = inverse(r_mat);
        if (!r_inv) throw std::logic_error("yoneda_evaluate: block map not invertible");
        for (size_t i = 0; i < b.basis.size(); ++i) {
            AlgElt x;
            for (size_t j = 0; j < se_basis.size(); ++j)
                if (uint32_t c = r_inv->at(int(j), int(i)))
                    x.push_back({alg_n->index_of(se_basis[j]), c});
            b.expressor.push_back(std::move(x));
        }
        b.weight_basis = column_space_basis(y.act_weight(b.sorted));
        if (b.weight_basis.cols) b.solver = SpanSolver(b.weight_basis);
        b.offset = total;
        total += b.weight_basis.cols;
        blocks.push_back(std::move(b));
    }

    ModAction out;
    out.p = p_;
    out.dim = total;
    out.algebra = schur_algebra_tag(m, d_, p_);
    auto act_of = [&](const AlgElt& x) {
        DividedElt e = alg_n->to_divided(x);
        return y.act(e);
    };
    for (const LabeledElt& t : dg_generators(m, d_, p_)) {
        Mat mat(p_, total, total);
        for (size_t li = 0; li < blocks.size(); ++li) {
            const BlockData& in = blocks[li];
            if (in.weight_basis.cols == 0) continue;
            for (int w = 0; w < in.weight_basis.cols; ++w) {
                std::vector<uint32_t> value = in.weight_basis.col_vec(w);
                int col = in.offset + w;
                // output component at block μ: f(b_μ ∘ t)
                for (size_t mi = 0; mi < blocks.size(); ++mi) {
                    const BlockData& outb = blocks[mi];
                    if (outb.weight_basis.cols == 0) continue;
                    std::vector<uint32_t> acc(y.dim(), 0);
                    bool any = false;
                    for (const auto& [tm, tc] : t.elt.terms) {
                        DividedElt prod = compose_pairseq(outb.pairing, tm, p_);
                        for (const auto& [pm, pc] : prod.terms) {
                            if (col_content(pm, m) != in.lam) continue;
                            uint32_t c = fp::mul(tc, pc, p_);
                            Mat xact = act_of(in.expressor[in.index.at(pm)]);
                            std::vector<uint32_t> moved = xact.apply_vec(value);
                            for (int i = 0; i < y.dim(); ++i)
                                acc[i] = fp::add(acc[i], fp::mul(c, moved[i], p_), p_);
                            any = true;
                        }
                    }
                    if (!any) continue;
                    std::vector<uint32_t> coords = outb.solver->coords(acc);
                    for (int i = 0; i < int(coords.size()); ++i)
                        if (coords[i]) mat.at(outb.offset + i, col) = coords[i];
                }
            }
        }
        out.labels.push_back(t.label);
        out.gens.push_back(std::move(mat));
    }
    return out;
}

// ---------------------------------------------------------------------------

uint64_t predicted_dim(const FunctorExpr& e, int m, uint32_t p) {
    switch (e.kind) {
        case FKind::Gamma:
        case FKind::Sym: {
            uint64_t r = 1;
            for (int part : e.parts) r *= binomial(m + part - 1, part);
            return r;
        }
        case FKind::Ext: {
            uint64_t r = 1;
            for (int part : e.parts) r *= binomial(m, part);
            return r;
        }
        case FKind::TensorPower:
            return ipow(m, e.d);
        case FKind::TruncSym: {
            std::vector<std::vector<uint8_t>> words;
            enum_words(m, e.d, int(p) - 1, false, words);
            return words.size();
        }
        case FKind::Weyl:
            return count_semistandard_tableaux(canonical(e.parts), m);
        default:
            return 0;
    }
}

}  // namespace spf
