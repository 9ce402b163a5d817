#include "spf/divided.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spf {

PairSeq make_pairseq(std::vector<std::pair<int, int>> pairs) {
    PairSeq m;
    m.reserve(pairs.size());
    for (auto [r, c] : pairs) {
        if (r < 0 || r > 255 || c < 0 || c > 255)
            throw std::invalid_argument("make_pairseq: index out of range");
        m.push_back({uint8_t(r), uint8_t(c)});
    }
    std::sort(m.begin(), m.end());
    return m;
}

PairSeq transpose_pairseq(const PairSeq& m) {
    PairSeq t;
    t.reserve(m.size());
    for (auto [r, c] : m) t.push_back({c, r});
    std::sort(t.begin(), t.end());
    return t;
}

std::string pairseq_label(const PairSeq& m) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) os << ",";
        os << "(" << int(m[i].first) + 1 << "," << int(m[i].second) + 1 << ")";
    }
    os << "}";
    return os.str();
}

Composition row_content(const PairSeq& m, int b) {
    Composition c(b, 0);
    for (auto [r, _] : m) c[r]++;
    return c;
}

Composition col_content(const PairSeq& m, int a) {
    Composition c(a, 0);
    for (auto [_, cc] : m) c[cc]++;
    return c;
}

uint64_t arrangement_count(const PairSeq& m) {
    uint64_t d = m.size();
    uint64_t num = 1;
    for (uint64_t i = 2; i <= d; ++i) num *= i;
    size_t i = 0;
    while (i < m.size()) {
        size_t j = i;
        uint64_t f = 1, k = 0;
        while (j < m.size() && m[j] == m[i]) {
            ++j;
            f *= ++k;
        }
        num /= f;
        i = j;
    }
    return num;
}

void DividedElt::add_term(const PairSeq& m, uint32_t c) {
    c %= p;
    if (!c) return;
    auto [it, fresh] = terms.insert({m, c});
    if (!fresh) {
        it->second = fp::add(it->second, c, p);
        if (it->second == 0) terms.erase(it);
    }
}

DividedElt& DividedElt::operator+=(const DividedElt& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
}

DividedElt DividedElt::scaled(uint32_t c) const {
    DividedElt out;
    out.p = p;
    for (const auto& [m, v] : terms) out.add_term(m, fp::mul(v, c, p));
    return out;
}

DividedElt compose_pairseq(const PairSeq& f, const PairSeq& g, uint32_t p) {
    if (f.size() != g.size()) throw std::invalid_argument("compose_pairseq: degree mismatch");
    const size_t d = f.size();
    std::map<PairSeq, int64_t> counts;
    PairSeq s = f;  // sorted; next_permutation enumerates distinct arrangements
    PairSeq prod(d);
    do {
        PairSeq t = g;
        do {
            bool ok = true;
            for (size_t i = 0; i < d; ++i) {
                if (s[i].second != t[i].first) { ok = false; break; }
                prod[i] = {s[i].first, t[i].second};
            }
            if (ok) {
                PairSeq key = prod;
                std::sort(key.begin(), key.end());
                counts[key] += 1;
            }
        } while (std::next_permutation(t.begin(), t.end()));
    } while (std::next_permutation(s.begin(), s.end()));

    DividedElt out;
    out.p = p;
    for (const auto& [key, c] : counts) {
        uint64_t orbit = arrangement_count(key);
        if (c % int64_t(orbit) != 0) throw std::logic_error("compose_pairseq: inexact orbit count");
        out.add_term(key, uint32_t((c / int64_t(orbit)) % p));
    }
    return out;
}

DividedElt compose_divided(const DividedElt& f, const DividedElt& g) {
    if (f.p != g.p) throw std::invalid_argument("compose_divided: field mismatch");
    DividedElt out;
    out.p = f.p;
    for (const auto& [mf, cf] : f.terms)
        for (const auto& [mg, cg] : g.terms) {
            DividedElt part = compose_pairseq(mf, mg, f.p);
            uint32_t c = fp::mul(cf, cg, f.p);
            for (const auto& [m, v] : part.terms) out.add_term(m, fp::mul(v, c, f.p));
        }
    return out;
}

DividedElt transpose_elt(const DividedElt& e) {
    DividedElt out;
    out.p = e.p;
    for (const auto& [m, c] : e.terms) out.add_term(transpose_pairseq(m), c);
    return out;
}

void SparseOp::apply_cols(const Mat& in, Mat& out) const {
    for (auto& [r, c, v] : entries) {
        const uint32_t* src = &in.a[size_t(c) * in.cols];
        uint32_t* dst = &out.a[size_t(r) * out.cols];
        for (int j = 0; j < in.cols; ++j)
            dst[j] = uint32_t((uint64_t(dst[j]) + uint64_t(v) * src[j]) % p);
    }
}

Mat SparseOp::to_mat() const {
    Mat m(p, dim, dim);
    for (auto& [r, c, v] : entries) m.at(int(r), int(c)) = fp::add(m.at(int(r), int(c)), v, p);
    return m;
}

namespace {
uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}
}  // namespace

uint64_t monomial_index(const std::vector<uint8_t>& word, int m) {
    uint64_t idx = 0, pw = 1;
    for (size_t t = 0; t < word.size(); ++t) {
        idx += uint64_t(word[t]) * pw;
        pw *= uint64_t(m);
    }
    return idx;
}

std::vector<uint8_t> monomial_of_index(uint64_t idx, int m, int d) {
    std::vector<uint8_t> w(d);
    for (int t = 0; t < d; ++t) {
        w[t] = uint8_t(idx % m);
        idx /= m;
    }
    return w;
}

SparseOp tensor_action(const PairSeq& m_elt, int m, int d, uint32_t p) {
    SparseOp op;
    op.dim = int(ipow(m, d));
    op.p = p;
    PairSeq s = m_elt;
    do {
        uint64_t row = 0, col = 0, pw = 1;
        bool ok = true;
        for (int t = 0; t < d; ++t) {
            if (s[t].first >= m || s[t].second >= m) { ok = false; break; }
            row += uint64_t(s[t].first) * pw;
            col += uint64_t(s[t].second) * pw;
            pw *= m;
        }
        if (ok) op.entries.push_back({uint32_t(row), uint32_t(col), 1 % p});
    } while (std::next_permutation(s.begin(), s.end()));
    return op;
}

SparseOp tensor_action(const DividedElt& e, int m, int d) {
    SparseOp op;
    op.dim = int(ipow(m, d));
    op.p = e.p;
    for (const auto& [seq, c] : e.terms) {
        SparseOp part = tensor_action(seq, m, d, e.p);
        for (auto& [r, cc, v] : part.entries)
            op.entries.push_back({r, cc, fp::mul(v, c, e.p)});
    }
    return op;
}

PairSeq weight_idempotent_seq(const Composition& lam) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t l = 0; l < lam.size(); ++l)
        for (int k = 0; k < lam[l]; ++k) pairs.push_back({int(l), int(l)});
    return make_pairseq(pairs);
}

PairSeq corner_seq(const std::vector<int>& sigma) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t j = 0; j < sigma.size(); ++j) pairs.push_back({sigma[j], int(j)});
    return make_pairseq(pairs);
}

DividedElt gamma_embed(const DividedElt& e, const EndoMap& phi, int d) {
    DividedElt out;
    out.p = e.p;
    std::map<PairSeq, int64_t> counts;
    for (const auto& [mset, coeff] : e.terms) {
        counts.clear();
        PairSeq s = mset;
        do {
            // expand choices per position
            std::vector<size_t> choice(d, 0);
            while (true) {
                PairSeq prod(d);
                bool ok = true;
                for (int t = 0; t < d && ok; ++t) {
                    const auto& imgs = phi[s[t].first][s[t].second];
                    if (imgs.empty()) { ok = false; break; }
                    prod[t] = {uint8_t(imgs[choice[t]].first), uint8_t(imgs[choice[t]].second)};
                }
                if (ok) {
                    PairSeq key = prod;
                    std::sort(key.begin(), key.end());
                    counts[key] += 1;
                }
                // increment mixed-radix choice vector
                int t = 0;
                for (; t < d; ++t) {
                    const auto& imgs = phi[s[t].first][s[t].second];
                    size_t radix = imgs.empty() ? 1 : imgs.size();
                    if (++choice[t] < radix) break;
                    choice[t] = 0;
                }
                if (t == d) break;
            }
        } while (std::next_permutation(s.begin(), s.end()));
        for (const auto& [key, c] : counts) {
            uint64_t orbit = arrangement_count(key);
            if (c % int64_t(orbit) != 0) throw std::logic_error("gamma_embed: inexact orbit count");
            out.add_term(key, fp::mul(uint32_t((c / int64_t(orbit)) % e.p), coeff, e.p));
        }
    }
    return out;
}

EndoMap endo_right_factor(int n) {
    EndoMap phi(n, std::vector<std::vector<std::pair<int, int>>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) phi[i][j].push_back({k * n + i, k * n + j});
    return phi;
}

EndoMap endo_left_factor(int n) {
    EndoMap phi(n, std::vector<std::vector<std::pair<int, int>>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) phi[i][j].push_back({i * n + k, j * n + k});
    return phi;
}

std::vector<LabeledElt> dg_generators(int n, int d, uint32_t p) {
    std::vector<LabeledElt> gens;
    for (const Composition& lam : enumerate_lambda(n, d, LambdaKind::All)) {
        DividedElt e;
        e.p = p;
        e.add_term(weight_idempotent_seq(lam), 1);
        gens.push_back({"e" + format_partition(lam), std::move(e)});
    }
    for (int dir = 0; dir < 2; ++dir) {
        for (int i = 0; i + 1 < n; ++i) {
            for (int a = 1; a <= d; ++a) {
                DividedElt e;
                e.p = p;
                std::pair<int, int> off = dir == 0 ? std::pair{i, i + 1} : std::pair{i + 1, i};
                for (const Composition& c : enumerate_lambda(n, d - a, LambdaKind::All)) {
                    std::vector<std::pair<int, int>> pairs(a, off);
                    for (size_t l = 0; l < c.size(); ++l)
                        for (int k = 0; k < c[l]; ++k) pairs.push_back({int(l), int(l)});
                    e.add_term(make_pairseq(pairs), 1);
                }
                std::ostringstream label;
                label << (dir == 0 ? "E" : "F") << i + 1 << "^(" << a << ")";
                gens.push_back({label.str(), std::move(e)});
            }
        }
    }
    return gens;
}

}  // namespace spf
