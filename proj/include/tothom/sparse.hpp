#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "tothom/rational.hpp"

namespace tothom {

/// Sparse matrix over the rationals. Rows are kept sorted by column index
/// and never store explicit zeros.
class SparseMat {
public:
    using Entry = std::pair<int, Rat>;  // (col, value)
    using Row = std::vector<Entry>;

    SparseMat() : rows_(0), cols_(0) {}
    SparseMat(int rows, int cols);

    static SparseMat identity(int n);
    static SparseMat zero(int rows, int cols) { return SparseMat(rows, cols); }
    static SparseMat from_dense(std::initializer_list<std::initializer_list<long>> m);
    static SparseMat from_dense_rat(const std::vector<std::vector<Rat>>& m);
    /// Single column from a dense vector.
    static SparseMat column(const std::vector<Rat>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long nnz() const;
    bool is_zero() const;

    const Row& row(int r) const { return data_[r]; }
    Rat at(int r, int c) const;
    /// Sets entry (r, c); value 0 erases. Keeps the row sorted.
    void set(int r, int c, const Rat& v);
    /// Adds v to entry (r, c).
    void add_at(int r, int c, const Rat& v);

    SparseMat operator+(const SparseMat& o) const;
    SparseMat operator-(const SparseMat& o) const;
    SparseMat operator-() const;
    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator*(const Rat& s) const;
    bool operator==(const SparseMat& o) const;

    SparseMat transpose() const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    /// Columns [c0, c0+n) as a new matrix.
    SparseMat col_slice(int c0, int n) const;
    SparseMat col(int c) const { return col_slice(c, 1); }
    std::vector<Rat> col_dense(int c) const;
    /// [this | o] side by side.
    SparseMat hcat(const SparseMat& o) const;
    /// [this ; o] stacked.
    SparseMat vcat(const SparseMat& o) const;
    /// Writes `block` into this at offset (r0, c0); entries must land in range.
    void insert_block(int r0, int c0, const SparseMat& block);

private:
    int rows_, cols_;
    std::vector<Row> data_;
};

/// Row-echelon data from fraction-exact Gaussian elimination with
/// sparsity-guided pivoting. Deterministic for fixed input.
struct Echelon {
    int rank = 0;
    /// Pivot (row of rref, column) pairs in elimination order.
    std::vector<int> pivot_cols;
    std::vector<bool> is_pivot_col;
    /// Fully reduced form: pivot entries are 1 and alone in their column.
    SparseMat rref;
};

Echelon echelon(const SparseMat& a);

/// Like echelon but always pivots in the leftmost nonzero column, so earlier
/// columns win ties with later ones. Used where column blocks carry meaning.
Echelon echelon_leftmost(const SparseMat& a);

int rank(const SparseMat& a);

/// Basis of the null space, one column per free variable. Deterministic.
SparseMat kernel_basis(const SparseMat& a);

/// Columns of `a` at the pivot positions: a basis of the column space.
SparseMat image_basis(const SparseMat& a);

/// Solves a x = b for each column b of `rhs` independently.
/// Returns one optional column per right-hand side; free variables are 0.
std::vector<std::optional<std::vector<Rat>>> solve(const SparseMat& a, const SparseMat& rhs);

/// Single right-hand side convenience form.
std::optional<std::vector<Rat>> solve1(const SparseMat& a, const std::vector<Rat>& b);

/// All-or-nothing multi-solve: a x = rhs columnwise, as a matrix.
std::optional<SparseMat> solve_matrix(const SparseMat& a, const SparseMat& rhs);

}  // namespace tothom
