#include "tothom/subspace.hpp"

#include <stdexcept>

namespace tothom {

Subspace span(const SparseMat& vectors) {
    return {vectors.rows(), image_basis(vectors)};
}

bool contains(const Subspace& w, const SparseMat& vecs) {
    if (vecs.rows() != w.ambient) throw std::invalid_argument("contains: ambient mismatch");
    for (const auto& sol : solve(w.basis, vecs))
        if (!sol) return false;
    return true;
}

bool contains(const Subspace& w, const Subspace& u) {
    return contains(w, u.basis);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("sum: ambient mismatch");
    return span(a.basis.hcat(b.basis));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
    // null space of [A | B] gives A x + B y = 0; intersection vectors are A x
    SparseMat k = kernel_basis(a.basis.hcat(b.basis));
    SparseMat xs(a.basis.cols(), k.cols());
    for (int i = 0; i < a.basis.cols(); ++i)
        for (const auto& [j, v] : k.row(i)) xs.set(i, j, v);
    return span(a.basis * xs);
}

Subquotient subquotient(const Subspace& w, const Subspace& u) {
    if (w.ambient != u.ambient) throw std::invalid_argument("subquotient: ambient mismatch");
    if (!contains(w, u)) throw std::invalid_argument("subquotient: U not contained in W");
    int n = w.ambient;
    // pivot columns of [U | W] past the U block lift to a basis of W/U
    Echelon e = echelon_leftmost(u.basis.hcat(w.basis));
    std::vector<int> lift_cols;
    for (int c : e.pivot_cols)
        if (c >= u.dim()) lift_cols.push_back(c - u.dim());
    std::sort(lift_cols.begin(), lift_cols.end());
    Subquotient q;
    q.dim = static_cast<int>(lift_cols.size());
    q.lift = SparseMat(n, q.dim);
    for (int k = 0; k < q.dim; ++k) q.lift.insert_block(0, k, w.basis.col(lift_cols[k]));
    // complete [U | lift] to an ambient basis with the orthogonal complement
    // (the standard form is definite over Q), invert, keep the lift rows
    SparseMat b = u.basis.hcat(q.lift);
    SparseMat m = b.hcat(kernel_basis(b.transpose()));
    auto inv = solve_matrix(m, SparseMat::identity(n));
    if (!inv) throw std::logic_error("subquotient: basis completion not invertible");
    q.proj = SparseMat(q.dim, n);
    for (int k = 0; k < q.dim; ++k)
        for (int j = 0; j < n; ++j) q.proj.set(k, j, inv->at(u.dim() + k, j));
    return q;
}

}  // namespace tothom
