#pragma once

#include <map>
#include <memory>
#include <vector>

#include "tothom/sparse.hpp"
#include "tothom/subspace.hpp"

namespace tothom {

class ChainComplex;
using ComplexPtr = std::shared_ptr<const ChainComplex>;

/// Bounded chain complex of finite-dimensional Q-vector spaces. Degrees may
/// be negative. d_n maps degree n to degree n-1; d*d = 0 is checked on
/// construction.
class ChainComplex {
public:
    /// dims[k] is the dimension in degree lo+k; d maps degree n to the matrix
    /// of d_n (entries with zero source or target may be omitted).
    ChainComplex(int lo, std::vector<int> dims, std::map<int, SparseMat> d);

    static ComplexPtr make(int lo, std::vector<int> dims, std::map<int, SparseMat> d) {
        return std::make_shared<ChainComplex>(lo, std::move(dims), std::move(d));
    }
    /// Q^dim concentrated in one degree.
    static ComplexPtr point(int degree, int dim = 1);
    static ComplexPtr zero() { return make(0, {}, {}); }

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    int dim(int n) const {
        int k = n - lo_;
        return (k >= 0 && k < static_cast<int>(dims_.size())) ? dims_[k] : 0;
    }
    /// Matrix of d_n, sized dim(n-1) x dim(n) (zero outside support).
    SparseMat d(int n) const;

    int total_dim() const;

private:
    int lo_;
    std::vector<int> dims_;
    std::map<int, SparseMat> d_;
};

/// Degree-homogeneous graded map C -> D of some degree t: components
/// comp[n]: C_n -> D_{n+t}. No chain condition imposed.
struct GradedMap {
    ComplexPtr source, target;
    int degree = 0;
    std::map<int, SparseMat> comp;

    GradedMap() = default;
    GradedMap(ComplexPtr src, ComplexPtr tgt, int deg);

    SparseMat at(int n) const;  // dim D_{n+degree} x dim C_n
    void set(int n, SparseMat m);
    bool is_zero() const;

    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap operator*(const Rat& s) const;
};

/// Compose graded maps: (g after f), degrees add.
GradedMap compose(const GradedMap& g, const GradedMap& f);

/// Hom-differential D(phi) = d_D . phi - (-1)^deg phi . d_C; a graded map is a
/// chain map (up to the usual sign) iff D(phi) = 0.
GradedMap hom_differential(const GradedMap& phi);

bool is_chain_map(const GradedMap& phi);

/// Chain map of degree 0; the commutation squares are checked on construction.
struct ChainMap {
    GradedMap g;

    ChainMap() = default;
    ChainMap(ComplexPtr src, ComplexPtr tgt, std::map<int, SparseMat> f);
    static ChainMap identity(ComplexPtr c);
    static ChainMap zero(ComplexPtr src, ComplexPtr tgt) { return ChainMap(src, tgt, {}); }

    const ComplexPtr& source() const { return g.source; }
    const ComplexPtr& target() const { return g.target; }
    SparseMat at(int n) const { return g.at(n); }
};

ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Witness s for from ~ to: (from - to) = d_D s + s d_C; checked.
struct ChainHomotopy {
    GradedMap s;  // degree +1

    ChainHomotopy() = default;
    ChainHomotopy(const ChainMap& from, const ChainMap& to, GradedMap s);
};

/// Homology in one degree, with a chosen cycle basis and the projection
/// computing coordinates of any cycle's class.
struct HomologySpace {
    int dim = 0;
    SparseMat reps;  // dim C_n rows, one column per class
    Subquotient q;   // of cycles modulo boundaries inside Q^{dim C_n}

    std::vector<Rat> class_of(const std::vector<Rat>& cycle) const;
};

HomologySpace homology(const ComplexPtr& c, int n);
std::vector<int> homology_dims(const ComplexPtr& c);

/// (Sigma^k C)_n = C_{n-k}, differential scaled by (-1)^k.
ComplexPtr suspend(const ComplexPtr& c, int k = 1);
/// The degreewise-identity chain map C -> Sigma^k C viewed on components
/// (a degree-k graded map; a Hom-cycle up to sign bookkeeping by callers).
GradedMap suspension_identity(const ComplexPtr& c, int k);

struct Cone {
    ComplexPtr complex;   // cone_n = D_n + C_{n-1} for f: C -> D
    ChainMap inclusion;   // D -> cone
    ChainMap projection;  // cone -> Sigma C
};

/// Cone differential [[d_D, f],[0, -d_C]].
Cone mapping_cone(const ChainMap& f);

/// The Hom-complex Hom(C,D)_n = prod_k Hom(C_k, D_{k+n}) materialized as a
/// ChainComplex with a fixed flattening of graded maps to coordinates.
class HomComplex {
public:
    HomComplex() : hom_(ChainComplex::zero()) {}
    HomComplex(ComplexPtr c, ComplexPtr d);

    const ComplexPtr& complex() const { return hom_; }
    int dim(int n) const { return hom_->dim(n); }

    std::vector<Rat> flatten(const GradedMap& phi) const;
    GradedMap unflatten(const std::vector<Rat>& v, int degree) const;
    GradedMap unflatten_col(const SparseMat& m, int col, int degree) const;

private:
    ComplexPtr c_, d_;
    ComplexPtr hom_;
    // per Hom-degree: list of (source degree k, offset, rows, cols) blocks
    struct Block {
        int k, offset, rows, cols;
    };
    std::map<int, std::vector<Block>> blocks_;
    int lo_ = 0, hi_ = 0;

    friend HomComplex make_hom(const ComplexPtr&, const ComplexPtr&);
};

/// Solves D(s) = phi for a graded map s of degree phi.degree + 1.
/// phi must be a Hom-cycle for a solution to exist; returns nullopt if none.
std::optional<GradedMap> solve_homotopy(const GradedMap& phi);

/// Nullhomotopy of a chain map to zero (degree 0 case of solve_homotopy).
std::optional<ChainHomotopy> nullhomotopy(const ChainMap& f);

/// H_shift of Hom(C,D): homotopy classes of degree-shift maps.
struct HomotopyClassSpace {
    HomComplex hom;
    int shift = 0;
    HomologySpace h;

    int dim() const { return h.dim; }
    std::vector<Rat> class_of(const GradedMap& phi) const;
    GradedMap rep(int i) const;
};

HomotopyClassSpace homotopy_classes(const ComplexPtr& c, const ComplexPtr& d, int shift);

/// Tensor product with the Koszul sign (-1)^p on 1 (x) d.
ComplexPtr tensor(const ComplexPtr& c, const ComplexPtr& d);

/// Direct sum.
ComplexPtr direct_sum(const ComplexPtr& a, const ComplexPtr& b);

}  // namespace tothom
