#pragma once

#include "tothom/chain.hpp"

namespace tothom {

/// Truncated simplicial object in chain complexes: objects C_0..C_N with
/// faces (and optionally degeneracies) satisfying the simplicial identities.
struct SimplicialChainObject {
    int N = 0;
    std::vector<ComplexPtr> objects;            // size N+1
    std::vector<std::vector<ChainMap>> faces;   // faces[n][i]: C_n -> C_{n-1}, 1 <= n <= N
    std::vector<std::vector<ChainMap>> degens;  // degens[n][j]: C_n -> C_{n+1}; may be empty

    /// Throws when shapes or simplicial identities fail.
    void validate() const;
};

/// First-quadrant-style bicomplex presented by columns: column n is a chain
/// complex (internal differential, unsigned) and horiz[n]: col n -> col n-1
/// are chain maps with horiz . horiz = 0. Signs appear only in totalize.
struct Bicomplex {
    std::vector<ComplexPtr> column;
    std::vector<ChainMap> horiz;  // horiz[n] defined for 1 <= n < column.size()

    int cols() const { return static_cast<int>(column.size()); }
    void validate() const;
};

/// Horizontal differential = alternating sum of faces; validates input.
Bicomplex alternating_sum(const SimplicialChainObject& x);

/// Bounded filtered complex whose stages are coordinate subspaces: each basis
/// coordinate of each degree carries the filtration level where it enters.
struct FilteredComplex {
    ComplexPtr total;
    int length = 0;                       // stages F_0 .. F_length
    std::vector<std::vector<int>> level;  // [deg - total->lo()][coord]

    const std::vector<int>& levels(int degree) const;
    /// F_s in one degree as an explicit coordinate subspace.
    Subspace stage(int s, int degree) const;
    /// Checks d(F_s) within F_s.
    void validate() const;
};

/// Tot_m = sum over columns n of (col n)_{m-n}; the internal differential of
/// column n enters with sign (-1)^n. Filtration by column index.
struct Totalization {
    ComplexPtr tot;
    FilteredComplex filt;
    std::vector<ComplexPtr> column;  // the input columns, for block lookups

    /// Offset of the column-n block inside Tot_m (coords ordered by n asc).
    int offset(int m, int n) const;
    /// Inclusion of column block (n, internal k) into Tot_{n+k} coordinates.
    SparseMat block_inclusion(int m, int n) const;
};

Totalization totalize(const Bicomplex& b);

/// F_n / F_{n-l} with the coordinates of the total complex it came from.
struct GrComplex {
    ComplexPtr complex;
    std::vector<std::vector<int>> coords;  // per degree (complex->lo()-based)
};

GrComplex gr_subquotient(const FilteredComplex& f, int l, int n);

}  // namespace tothom
