#include "spf/mat.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace spf {

Mat Mat::identity(uint32_t p, int n) {
    Mat m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

Mat Mat::transpose() const {
    Mat t(p, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::mul(const Mat& o) const {
    if (cols != o.rows || p != o.p) throw std::invalid_argument("Mat::mul: dimension mismatch");
    Mat r(p, rows, o.cols);
    std::vector<uint64_t> acc(o.cols);
    for (int i = 0; i < rows; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k = 0; k < cols; ++k) {
            uint64_t v = at(i, k);
            if (!v) continue;
            const uint32_t* row = &o.a[size_t(k) * o.cols];
            for (int j = 0; j < o.cols; ++j) acc[j] += v * row[j];
        }
        for (int j = 0; j < o.cols; ++j) r.at(i, j) = uint32_t(acc[j] % p);
    }
    return r;
}

Mat Mat::add(const Mat& o) const {
    if (rows != o.rows || cols != o.cols || p != o.p)
        throw std::invalid_argument("Mat::add: shape mismatch");
    Mat r(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::add(a[i], o.a[i], p);
    return r;
}

Mat Mat::sub(const Mat& o) const {
    if (rows != o.rows || cols != o.cols || p != o.p)
        throw std::invalid_argument("Mat::sub: shape mismatch");
    Mat r(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::sub(a[i], o.a[i], p);
    return r;
}

Mat Mat::scale(uint32_t c) const {
    Mat r(p, rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::mul(a[i], c, p);
    return r;
}

Mat Mat::col(int j) const {
    Mat r(p, rows, 1);
    for (int i = 0; i < rows; ++i) r.at(i, 0) = at(i, j);
    return r;
}

std::vector<uint32_t> Mat::col_vec(int j) const {
    std::vector<uint32_t> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_col(int j, const std::vector<uint32_t>& v) {
    for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

std::vector<uint32_t> Mat::apply_vec(const std::vector<uint32_t>& v) const {
    if (int(v.size()) != cols) throw std::invalid_argument("apply_vec: dimension mismatch");
    std::vector<uint32_t> out(rows);
    for (int i = 0; i < rows; ++i) {
        uint64_t acc = 0;
        const uint32_t* row = &a[size_t(i) * cols];
        for (int j = 0; j < cols; ++j) acc += uint64_t(row[j]) * v[j];
        out[i] = uint32_t(acc % p);
    }
    return out;
}

Mat hcat(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.p != b.p) throw std::invalid_argument("hcat: shape mismatch");
    Mat r(a.p, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        std::copy_n(&a.a[size_t(i) * a.cols], a.cols, &r.a[size_t(i) * r.cols]);
        std::copy_n(&b.a[size_t(i) * b.cols], b.cols, &r.a[size_t(i) * r.cols + a.cols]);
    }
    return r;
}

Mat vcat(const Mat& a, const Mat& b) {
    if (a.cols != b.cols || a.p != b.p) throw std::invalid_argument("vcat: shape mismatch");
    Mat r(a.p, a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), r.a.begin());
    std::copy(b.a.begin(), b.a.end(), r.a.begin() + a.a.size());
    return r;
}

Mat from_cols(uint32_t p, int rows, const std::vector<std::vector<uint32_t>>& cols) {
    Mat r(p, rows, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j)
        for (int i = 0; i < rows; ++i) r.at(i, j) = cols[j][i];
    return r;
}

RrefResult rref_rank(const Mat& m) {
    RrefResult res;
    res.r = m;
    Mat& r = res.r;
    const uint32_t p = m.p;
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows; ++i)
            if (r.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        uint32_t s = fp::inv(r.at(lead, col), p);
        for (int j = col; j < r.cols; ++j) r.at(lead, j) = fp::mul(r.at(lead, j), s, p);
        for (int i = 0; i < r.rows; ++i) {
            if (i == lead) continue;
            uint32_t f = r.at(i, col);
            if (!f) continue;
            for (int j = col; j < r.cols; ++j)
                r.at(i, j) = fp::sub(r.at(i, j), fp::mul(f, r.at(lead, j), p), p);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = int(res.pivots.size());
    return res;
}

int rank_of(const Mat& m) { return rref_rank(m).rank; }

Mat kernel_basis(const Mat& m) {
    RrefResult rr = rref_rank(m);
    const uint32_t p = m.p;
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> cols;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(m.cols, 0);
        v[free] = 1;
        for (int i = 0; i < rr.rank; ++i)
            v[rr.pivots[i]] = fp::neg(rr.r.at(i, free), p);
        cols.push_back(std::move(v));
    }
    return from_cols(p, m.cols, cols);
}

std::optional<Mat> solve_linear(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.p != b.p)
        throw std::invalid_argument("solve_linear: row count mismatch");
    RrefResult rr = rref_rank(hcat(a, b));
    for (int c : rr.pivots)
        if (c >= a.cols) return std::nullopt;  // pivot in the rhs block => inconsistent
    Mat x(a.p, a.cols, b.cols);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < b.cols; ++j) x.at(rr.pivots[i], j) = rr.r.at(i, a.cols + j);
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) return std::nullopt;
    RrefResult rr = rref_rank(hcat(m, Mat::identity(m.p, m.rows)));
    if (rr.rank < m.rows || rr.pivots.back() >= m.cols) return std::nullopt;
    Mat inv(m.p, m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.rows; ++j) inv.at(i, j) = rr.r.at(i, m.cols + j);
    return inv;
}

Mat kron_product(const Mat& a, const Mat& b) {
    if (a.p != b.p) throw std::invalid_argument("kron_product: field mismatch");
    Mat r(a.p, a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            uint32_t v = a.at(i, j);
            if (!v) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    r.at(i * b.rows + k, j * b.cols + l) = fp::mul(v, b.at(k, l), a.p);
        }
    return r;
}

Mat column_space_basis(const Mat& m) {
    RrefResult rr = rref_rank(m);
    std::vector<std::vector<uint32_t>> cols;
    for (int c : rr.pivots) cols.push_back(m.col_vec(c));
    return from_cols(m.p, m.rows, cols);
}

MeetJoin subspace_meet_join(const Mat& u, const Mat& w) {
    if (u.rows != w.rows || u.p != w.p)
        throw std::invalid_argument("subspace_meet_join: ambient dimension mismatch");
    const uint32_t p = u.p;
    const int n = u.rows;
    // Zassenhaus: rows [u | u] and [w | 0]; echelonize.
    Mat block(p, u.cols + w.cols, 2 * n);
    for (int j = 0; j < u.cols; ++j)
        for (int i = 0; i < n; ++i) {
            block.at(j, i) = u.at(i, j);
            block.at(j, n + i) = u.at(i, j);
        }
    for (int j = 0; j < w.cols; ++j)
        for (int i = 0; i < n; ++i) block.at(u.cols + j, i) = w.at(i, j);
    RrefResult rr = rref_rank(block);
    std::vector<std::vector<uint32_t>> join_cols, meet_cols;
    for (int i = 0; i < rr.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n; ++j)
            if (rr.r.at(i, j) != 0) { left_zero = false; break; }
        std::vector<uint32_t> v(n);
        if (left_zero) {
            for (int j = 0; j < n; ++j) v[j] = rr.r.at(i, n + j);
            meet_cols.push_back(std::move(v));
        } else {
            for (int j = 0; j < n; ++j) v[j] = rr.r.at(i, j);
            join_cols.push_back(std::move(v));
        }
    }
    return {from_cols(p, n, meet_cols), from_cols(p, n, join_cols)};
}

bool Echelon::add(std::vector<uint32_t> v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int i = 0; i < ambient_; ++i)
        if (v[i] != 0) { piv = i; break; }
    if (piv < 0) return false;
    uint32_t s = fp::inv(v[piv], p_);
    for (auto& x : v) x = fp::mul(x, s, p_);
    // keep rows sorted by pivot for deterministic reduction
    size_t pos = 0;
    while (pos < rows_.size() && pivot_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivot_.insert(pivot_.begin() + pos, piv);
    return true;
}

std::vector<uint32_t> Echelon::reduce(std::vector<uint32_t> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t c = v[pivot_[i]];
        if (!c) continue;
        const auto& row = rows_[i];
        for (int j = pivot_[i]; j < ambient_; ++j)
            if (row[j]) v[j] = fp::sub(v[j], fp::mul(c, row[j], p_), p_);
    }
    return v;
}

bool Echelon::contains(const std::vector<uint32_t>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

Mat Echelon::basis_cols() const {
    Mat b(p_, ambient_, rank());
    for (int j = 0; j < rank(); ++j)
        for (int i = 0; i < ambient_; ++i) b.at(i, j) = rows_[j][i];
    return b;
}

SpanSolver::SpanSolver(const Mat& basis_cols) : basis_(basis_cols), k_(basis_cols.cols) {
    RrefResult rr = rref_rank(basis_.transpose());
    if (rr.rank != k_) throw std::invalid_argument("SpanSolver: basis columns are dependent");
    pivot_rows_ = rr.pivots;  // pivot rows of the column basis
    Mat piv(basis_.p, k_, k_);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) piv.at(i, j) = basis_.at(pivot_rows_[i], j);
    auto inv = inverse(piv);
    if (!inv) throw std::logic_error("SpanSolver: pivot block not invertible");
    inv_pivot_ = *inv;
}

std::optional<std::vector<uint32_t>> SpanSolver::try_coords(const std::vector<uint32_t>& v) const {
    std::vector<uint32_t> rhs(k_);
    for (int i = 0; i < k_; ++i) rhs[i] = v[pivot_rows_[i]];
    std::vector<uint32_t> x = inv_pivot_.apply_vec(rhs);
    // residual check
    const uint32_t p = basis_.p;
    for (int i = 0; i < basis_.rows; ++i) {
        uint64_t acc = 0;
        for (int j = 0; j < k_; ++j) acc += uint64_t(basis_.at(i, j)) * x[j];
        if (uint32_t(acc % p) != v[i]) return std::nullopt;
    }
    return x;
}

std::vector<uint32_t> SpanSolver::coords(const std::vector<uint32_t>& v) const {
    auto x = try_coords(v);
    if (!x) throw std::domain_error("SpanSolver: vector not in span");
    return *x;
}

Mat SpanSolver::coords_mat(const Mat& m) const {
    Mat out(m.p, k_, m.cols);
    for (int j = 0; j < m.cols; ++j) out.set_col(j, coords(m.col_vec(j)));
    return out;
}

namespace {
void put_u32(std::ostream& os, uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<char*>(b), 4);
}
uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("matrix record: truncated");
    return uint32_t(b[0]) | (uint32_t(b[1]) << 8) | (uint32_t(b[2]) << 16) | (uint32_t(b[3]) << 24);
}
}  // namespace

void write_spfm(std::ostream& os, const Mat& m) {
    os.write("SPFM", 4);
    put_u32(os, 1);
    put_u32(os, m.p);
    put_u32(os, uint32_t(m.rows));
    put_u32(os, uint32_t(m.cols));
    for (uint32_t v : m.a) put_u32(os, v);
}

Mat read_spfm(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "SPFM", 4) != 0)
        throw std::runtime_error("matrix record: bad magic");
    uint32_t version = get_u32(is);
    if (version != 1) throw std::runtime_error("matrix record: unsupported version");
    Mat m;
    m.p = get_u32(is);
    m.rows = int(get_u32(is));
    m.cols = int(get_u32(is));
    if (m.rows < 0 || m.cols < 0 || uint64_t(m.rows) * uint64_t(m.cols) > (1u << 28))
        throw std::runtime_error("matrix record: implausible shape");
    m.a.resize(size_t(m.rows) * m.cols);
    for (auto& v : m.a) {
        v = get_u32(is);
        if (m.p && v >= m.p) throw std::runtime_error("matrix record: entry out of range");
    }
    return m;
}

void save_spfm(const std::string& path, const Mat& m) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for write: " + path);
    write_spfm(os, m);
}

Mat load_spfm(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for read: " + path);
    return read_spfm(is);
}

}  // namespace spf
