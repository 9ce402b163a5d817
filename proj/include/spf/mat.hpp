#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spf/fp.hpp"

namespace spf {

/// Dense matrix over F_p, row-major, entries reduced to [0, p).
struct Mat {
    uint32_t p = 0;
    int rows = 0;
    int cols = 0;
    std::vector<uint32_t> a;

    Mat() = default;
    Mat(uint32_t p_, int r, int c) : p(p_), rows(r), cols(c), a(size_t(r) * c, 0) {}

    uint32_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
    uint32_t at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static Mat identity(uint32_t p, int n);

    bool operator==(const Mat& o) const = default;

    bool is_zero() const;
    Mat transpose() const;
    Mat mul(const Mat& o) const;
    Mat add(const Mat& o) const;
    Mat sub(const Mat& o) const;
    Mat scale(uint32_t c) const;
    Mat col(int j) const;
    std::vector<uint32_t> col_vec(int j) const;
    void set_col(int j, const std::vector<uint32_t>& v);
    Mat apply(const Mat& v) const { return mul(v); }
    std::vector<uint32_t> apply_vec(const std::vector<uint32_t>& v) const;
};

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);
Mat from_cols(uint32_t p, int rows, const std::vector<std::vector<uint32_t>>& cols);

struct RrefResult {
    Mat r;                    // reduced row-echelon form
    std::vector<int> pivots;  // pivot column per rank row
    int rank = 0;
};

/// Deterministic Gauss-Jordan: leftmost pivot column, topmost nonzero row.
RrefResult rref_rank(const Mat& m);

int rank_of(const Mat& m);

/// Columns form a basis of ker(m), in deterministic free-column order.
Mat kernel_basis(const Mat& m);

/// One solution x of a·x = b, or nullopt when inconsistent.
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

Mat kron_product(const Mat& a, const Mat& b);

/// Basis of the column space (subset of columns rref-selected).
Mat column_space_basis(const Mat& m);

struct MeetJoin {
    Mat meet;  // basis of U ∩ W (columns)
    Mat join;  // basis of U + W (columns)
};

/// Zassenhaus on column-span inputs of equal ambient dimension.
MeetJoin subspace_meet_join(const Mat& u, const Mat& w);

/// Incremental row-echelon accumulator used by spinning algorithms.
class Echelon {
public:
    Echelon(uint32_t p, int ambient) : p_(p), ambient_(ambient) {}

    /// Reduces v against the basis; if a nonzero residue remains it is
    /// normalized and inserted. Returns true when the rank grew.
    bool add(std::vector<uint32_t> v);
    /// Residue of v after reduction (not inserted).
    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;
    bool contains(const std::vector<uint32_t>& v) const;

    int rank() const { return int(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
    /// Basis as matrix columns (ambient × rank).
    Mat basis_cols() const;

private:
    uint32_t p_;
    int ambient_;
    std::vector<std::vector<uint32_t>> rows_;  // echelonized, pivot = 1
    std::vector<int> pivot_;                   // pivot index per row
};

/// Solver for repeated "coordinates of v in span(B)" queries.
/// B must have full column rank; solving a vector outside the span throws
/// unless the caller uses try_coords.
class SpanSolver {
public:
    SpanSolver() = default;
    explicit SpanSolver(const Mat& basis_cols);
    std::optional<std::vector<uint32_t>> try_coords(const std::vector<uint32_t>& v) const;
    std::vector<uint32_t> coords(const std::vector<uint32_t>& v) const;
    /// Coordinates of every column of m.
    Mat coords_mat(const Mat& m) const;
    int dim() const { return k_; }
    const Mat& basis() const { return basis_; }

private:
    Mat basis_;          // ambient × k
    Mat inv_pivot_;      // k × k, inverse of pivot-row submatrix
    std::vector<int> pivot_rows_;
    int k_ = 0;
};

// ---- binary matrix cache record ----
// Header: magic "SPFM", version u32, p u32, rows u32, cols u32,
// then row-major entries as little-endian u32.
void write_spfm(std::ostream& os, const Mat& m);
Mat read_spfm(std::istream& is);
void save_spfm(const std::string& path, const Mat& m);
Mat load_spfm(const std::string& path);

}  // namespace spf
