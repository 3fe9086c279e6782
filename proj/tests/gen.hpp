#pragma once

#include <random>

#include "tothom/obstruct.hpp"

namespace gen {

using namespace tothom;

/// Direct sums of points and elementary acyclic pieces in degrees
/// [lo, lo+len], conjugation-free (tests conjugate separately when needed).
inline ComplexPtr random_complex(std::mt19937& rng, int lo, int len, int pieces = 3) {
    std::uniform_int_distribution<int> deg(lo, lo + len - 1);
    std::uniform_int_distribution<int> kind(0, 1);
    ComplexPtr acc = ChainComplex::make(lo, std::vector<int>(len + 1, 0), {});
    for (int piece = 0; piece < pieces; ++piece) {
        int n = deg(rng);
        if (kind(rng) == 0) {
            acc = direct_sum(acc, ChainComplex::point(n));
        } else {
            std::map<int, SparseMat> dd;
            dd[n + 1] = SparseMat::identity(1);
            acc = direct_sum(acc, ChainComplex::make(n, {1, 1}, std::move(dd)));
        }
    }
    return acc;
}

inline std::vector<Rat> random_coeffs(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> val(-3, 3);
    std::vector<Rat> v(n);
    for (auto& x : v) x = val(rng);
    return v;
}

/// Random chain map c -> d: random combination of a kernel basis of the
/// degree-0 Hom differential.
inline ChainMap random_chain_map(std::mt19937& rng, const ComplexPtr& c,
                                 const ComplexPtr& d) {
    HomComplex h(c, d);
    SparseMat ker = kernel_basis(h.complex()->d(0));
    std::vector<Rat> v(h.dim(0), Rat(0));
    auto coeffs = random_coeffs(rng, ker.cols());
    for (int j = 0; j < ker.cols(); ++j)
        for (int i = 0; i < ker.rows(); ++i) {
            Rat e = ker.at(i, j);
            if (e != 0) v[i] += e * coeffs[j];
        }
    GradedMap g = h.unflatten(v, 0);
    return ChainMap(c, d, std::move(g.comp));
}

/// Random degree-t graded map (no cycle condition).
inline GradedMap random_graded(std::mt19937& rng, const ComplexPtr& c, const ComplexPtr& d,
                               int t) {
    HomComplex h(c, d);
    return h.unflatten(random_coeffs(rng, h.dim(t)), t);
}

/// Random planted homotopy-commuting square as a 2-column map of bicomplexes:
/// one side of the square is an identity, the other a random chain map, and
/// the defect is planted as a Hom-boundary with recorded witness.
inline HomotopySimplicialMap planted_square(std::mt19937& rng) {
    std::uniform_int_distribution<int> flip(0, 1);
    HomotopySimplicialMap F;
    ComplexPtr a = random_complex(rng, 0, 2);
    ComplexPtr b = random_complex(rng, 0, 2);
    if (flip(rng) == 0) {
        // dC = id on a, dD random b -> b, f1 random a -> b,
        // f0 = dD . f1 + D(t)
        ChainMap dD = random_chain_map(rng, b, b);
        ChainMap f1 = random_chain_map(rng, a, b);
        GradedMap t = random_graded(rng, a, b, 1);
        GradedMap f0g = compose(dD.g, f1.g) + hom_differential(t);
        F.C.column = {a, a};
        F.C.horiz = {ChainMap(), ChainMap::identity(a)};
        F.D.column = {b, b};
        F.D.horiz = {ChainMap(), dD};
        F.f = {ChainMap(a, b, std::move(f0g.comp)), f1};
        F.s1.resize(2);
        F.s1[1] = t;
    } else {
        // dD = id on b, dC random a -> a, f0 random a -> b,
        // f1 = f0 . dC - D(t)
        ChainMap dC = random_chain_map(rng, a, a);
        ChainMap f0 = random_chain_map(rng, a, b);
        GradedMap t = random_graded(rng, a, b, 1);
        GradedMap f1g = compose(f0.g, dC.g) - hom_differential(t);
        F.C.column = {a, a};
        F.C.horiz = {ChainMap(), dC};
        F.D.column = {b, b};
        F.D.horiz = {ChainMap(), ChainMap::identity(b)};
        F.f = {f0, ChainMap(a, b, std::move(f1g.comp))};
        F.s1.resize(2);
        F.s1[1] = t;
    }
    F.validate();
    return F;
}

inline ChainMap block_proj(const ComplexPtr& sum_c, const ComplexPtr& x,
                           const ComplexPtr& y) {
    // projection x (+) y -> x, assuming direct_sum coordinates x first
    std::map<int, SparseMat> f;
    for (int d = sum_c->lo(); d <= sum_c->hi(); ++d) {
        int dx = x->dim(d), dy = y->dim(d);
        if (dx + dy == 0) continue;
        SparseMat m(dx, dx + dy);
        for (int i = 0; i < dx; ++i) m.set(i, i, Rat(1));
        f[d] = std::move(m);
    }
    return ChainMap(sum_c, x, std::move(f));
}

inline ChainMap block_incl(const ComplexPtr& sum_c, const ComplexPtr& x,
                           const ComplexPtr& y) {
    // inclusion y -> x (+) y
    std::map<int, SparseMat> f;
    for (int d = sum_c->lo(); d <= sum_c->hi(); ++d) {
        int dx = x->dim(d), dy = y->dim(d);
        if (dy == 0) continue;
        SparseMat m(dx + dy, dy);
        for (int i = 0; i < dy; ++i) m.set(dx + i, i, Rat(1));
        f[d] = std::move(m);
    }
    return ChainMap(y, sum_c, std::move(f));
}

/// Three-column bicomplex with d_horiz^2 = 0 by construction: the middle
/// column splits as x (+) y with the incoming map landing in y and the
/// outgoing map only seeing x.
inline Bicomplex random_bicomplex3(std::mt19937& rng) {
    auto c0 = random_complex(rng, 0, 2);
    auto x = random_complex(rng, 0, 2, 2);
    auto y = random_complex(rng, 0, 2, 2);
    auto c1 = direct_sum(x, y);
    auto c2 = random_complex(rng, 0, 2);
    Bicomplex b;
    b.column = {c0, c1, c2};
    b.horiz.resize(3);
    b.horiz[1] = compose(random_chain_map(rng, x, c0), block_proj(c1, x, y));
    b.horiz[2] = compose(block_incl(c1, x, y), random_chain_map(rng, c2, y));
    b.validate();
    return b;
}

/// Random filtration-preserving chain self-map 2 + D(h) of the total complex.
inline ChainMap perturbed_double(std::mt19937& rng, const FilteredComplex& f) {
    std::uniform_int_distribution<int> val(-2, 2);
    GradedMap h(f.total, f.total, 1);
    for (int n = f.total->lo(); n < f.total->hi(); ++n) {
        const auto& in = f.levels(n);
        const auto& out = f.levels(n + 1);
        SparseMat m(f.total->dim(n + 1), f.total->dim(n));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (out[i] <= in[j]) m.set(i, j, Rat(val(rng)));
        if (!m.is_zero()) h.set(n, std::move(m));
    }
    GradedMap g = hom_differential(h);
    std::map<int, SparseMat> comp;
    for (int n = f.total->lo(); n <= f.total->hi(); ++n) {
        if (f.total->dim(n) == 0) continue;
        comp[n] = SparseMat::identity(f.total->dim(n)) * Rat(2) + g.at(n);
    }
    return ChainMap(f.total, f.total, std::move(comp));
}

}  // namespace gen
