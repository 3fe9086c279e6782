#pragma once

#include "tothom/sparse.hpp"

namespace tothom {

/// A subspace of Q^ambient, presented by an independent column basis.
struct Subspace {
    int ambient = 0;
    SparseMat basis;  // ambient rows, one column per basis vector

    int dim() const { return basis.cols(); }
    static Subspace zero(int ambient) { return {ambient, SparseMat(ambient, 0)}; }
    static Subspace full(int ambient) { return {ambient, SparseMat::identity(ambient)}; }
};

/// Prunes `vectors` to an independent spanning set.
Subspace span(const SparseMat& vectors);

/// True when every column of `vecs` lies in w.
bool contains(const Subspace& w, const SparseMat& vecs);
bool contains(const Subspace& w, const Subspace& u);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Basis data for W/U: lift columns live in W and map to a basis of the
/// quotient; proj is a dim x ambient matrix with proj*lift = I and U (plus a
/// fixed complement of W) in its kernel.
struct Subquotient {
    int dim = 0;
    SparseMat lift;
    SparseMat proj;
};

/// Requires U ⊆ W (checked).
Subquotient subquotient(const Subspace& w, const Subspace& u);

}  // namespace tothom
