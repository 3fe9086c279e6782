#include "tothom/examples.hpp"

namespace tothom {

namespace {

/// Q -> Q concentrated in degrees lo, lo+1 with identity differential.
ComplexPtr interval(int lo) {
    std::map<int, SparseMat> d;
    d[lo + 1] = SparseMat::identity(1);
    return ChainComplex::make(lo, {1, 1}, std::move(d));
}

ChainMap identity_between(const ComplexPtr& s, const ComplexPtr& t) {
    std::map<int, SparseMat> f;
    for (int m = s->lo(); m <= s->hi(); ++m)
        if (s->dim(m) > 0) f[m] = SparseMat::identity(s->dim(m));
    return ChainMap(s, t, std::move(f));
}

GradedMap one_entry(const ComplexPtr& s, const ComplexPtr& t, int deg, int m, Rat v) {
    GradedMap g(s, t, deg);
    SparseMat mat(t->dim(m + deg), s->dim(m));
    mat.set(0, 0, v);
    g.set(m, std::move(mat));
    return g;
}

}  // namespace

HomotopySimplicialMap surrogate_counterexample() {
    HomotopySimplicialMap F;
    // C columns: w' (deg 1) <- a',b' with d b' = a' <- u' (deg 0); zero
    // horizontal maps
    auto c0 = ChainComplex::point(1);
    auto c1 = interval(0);
    auto c2 = ChainComplex::point(0);
    F.C.column = {c0, c1, c2};
    F.C.horiz.resize(3);
    F.C.horiz[1] = ChainMap::zero(c1, c0);
    F.C.horiz[2] = ChainMap::zero(c2, c1);
    // D: same columns; horizontally u -> a, b -> w
    auto d0 = ChainComplex::point(1);
    auto d1 = interval(0);
    auto d2 = ChainComplex::point(0);
    F.D.column = {d0, d1, d2};
    F.D.horiz.resize(3);
    {
        std::map<int, SparseMat> m;
        m[1] = SparseMat::identity(1);  // b -> w
        F.D.horiz[1] = ChainMap(d1, d0, std::move(m));
    }
    {
        std::map<int, SparseMat> m;
        m[0] = SparseMat::identity(1);  // u -> a
        F.D.horiz[2] = ChainMap(d2, d1, std::move(m));
    }
    F.f = {identity_between(c0, d0), identity_between(c1, d1), identity_between(c2, d2)};
    F.s1.resize(3);
    F.s1[1] = one_entry(c1, d0, 1, 0, Rat(-1));  // a' -> -w
    F.s1[2] = one_entry(c2, d1, 1, 0, Rat(-1));  // u' -> -b
    F.validate();
    return F;
}

HomotopySimplicialMap obstructed_triple() {
    HomotopySimplicialMap F;
    // C: point(0) <- interval(0) <- interval(1) <- point(2) with zero
    // horizontal maps (columns 3,2,1,0)
    auto c0 = ChainComplex::point(2);
    auto c1 = interval(1);
    auto c2 = interval(0);
    auto c3 = ChainComplex::point(0);
    F.C.column = {c0, c1, c2, c3};
    F.C.horiz.resize(4);
    F.C.horiz[1] = ChainMap::zero(c1, c0);
    F.C.horiz[2] = ChainMap::zero(c2, c1);
    F.C.horiz[3] = ChainMap::zero(c3, c2);
    // D: same columns; horizontally u -> a2, b2 -> a1, b1 -> w
    auto d0 = ChainComplex::point(2);
    auto d1 = interval(1);
    auto d2 = interval(0);
    auto d3 = ChainComplex::point(0);
    F.D.column = {d0, d1, d2, d3};
    F.D.horiz.resize(4);
    {
        std::map<int, SparseMat> m;
        m[2] = SparseMat::identity(1);  // b1 -> w
        F.D.horiz[1] = ChainMap(d1, d0, std::move(m));
    }
    {
        std::map<int, SparseMat> m;
        m[1] = SparseMat::identity(1);  // b2 -> a1
        F.D.horiz[2] = ChainMap(d2, d1, std::move(m));
    }
    {
        std::map<int, SparseMat> m;
        m[0] = SparseMat::identity(1);  // u -> a2
        F.D.horiz[3] = ChainMap(d3, d2, std::move(m));
    }
    F.f = {identity_between(c0, d0), identity_between(c1, d1), identity_between(c2, d2),
           identity_between(c3, d3)};
    F.s1.resize(4);
    F.s1[1] = one_entry(c1, d0, 1, 1, Rat(-1));  // a1' -> -w
    F.s1[2] = one_entry(c2, d1, 1, 1, Rat(-1));  // b2' -> -b1
    F.s1[3] = one_entry(c3, d2, 1, 0, Rat(-1));  // u' -> -b2
    F.validate();
    return F;
}

HomotopyChainObject planted_obstructed_tower() {
    HomotopyChainObject x;
    x.objects = {ChainComplex::point(1), ChainComplex::point(0), ChainComplex::point(0, 2),
                 ChainComplex::point(0)};
    x.d.resize(4);
    x.d[1] = ChainMap::zero(x.objects[1], x.objects[0]);
    {
        std::map<int, SparseMat> m;
        SparseMat d2(1, 2);
        d2.set(0, 1, Rat(1));
        m[0] = std::move(d2);
        x.d[2] = ChainMap(x.objects[2], x.objects[1], std::move(m));
    }
    {
        std::map<int, SparseMat> m;
        SparseMat d3(2, 1);
        d3.set(0, 0, Rat(1));
        m[0] = std::move(d3);
        x.d[3] = ChainMap(x.objects[3], x.objects[2], std::move(m));
    }
    x.h.resize(4);
    x.h[2] = GradedMap(x.objects[2], x.objects[0], 1);
    SparseMat h2(1, 2);
    h2.set(0, 0, Rat(1));
    x.h[2].set(0, std::move(h2));
    x.h[3] = GradedMap(x.objects[3], x.objects[1], 1);
    x.validate();
    return x;
}

}  // namespace tothom
