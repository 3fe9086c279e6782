// Acceptance suite: one pass/fail line per criterion. Run from the
// repository root (the committed fixtures are loaded by relative path).
#include <chrono>
#include <cstdio>
#include <random>

#include "gen.hpp"
#include "oracle.hpp"
#include "tothom/examples.hpp"
#include "tothom/freesimp.hpp"
#include "tothom/io.hpp"

using namespace tothom;

namespace {

#define REQ(cond)                                                              \
    do {                                                                       \
        if (!(cond)) {                                                         \
            std::printf("    failed: %s (%s:%d)\n", #cond, __FILE__, __LINE__); \
            ok = false;                                                        \
        }                                                                      \
    } while (0)

bool acyclic(const ComplexPtr& c) {
    for (int n = c->lo(); n <= c->hi(); ++n)
        if (homology(c, n).dim != 0) return false;
    return true;
}

bool quasi_iso(const ChainMap& f) { return acyclic(mapping_cone(f).complex); }

std::vector<int> h_dims(const ComplexPtr& c, int lo, int hi) {
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(homology(c, n).dim);
    return out;
}

bool induces_iso(const ChainMap& f, int n) {
    auto hs = homology(f.source(), n);
    auto ht = homology(f.target(), n);
    if (hs.dim != ht.dim) return false;
    SparseMat m(ht.dim, hs.dim);
    for (int j = 0; j < hs.dim; ++j) {
        auto cls = ht.class_of(f.at(n).apply(hs.reps.col_dense(j)));
        for (int i = 0; i < ht.dim; ++i) m.set(i, j, cls[i]);
    }
    return oracle::dense_rank(m) == hs.dim;
}

/// Independent dense check that v lies in the column span of basis.
bool in_span(const SparseMat& basis, const std::vector<Rat>& v) {
    SparseMat aug = basis.hcat(SparseMat::column(v));
    return oracle::dense_rank(aug) == oracle::dense_rank(basis);
}

/// Independent dense solvability of D(s) = rep: an exhaustive nullhomotopy
/// search over the whole Hom space, using only the oracle's arithmetic.
bool dense_nullhomotopic(const GradedMap& rep) {
    HomComplex h(rep.source, rep.target);
    SparseMat m = h.complex()->d(rep.degree + 1);
    std::vector<Rat> b = h.flatten(rep);
    SparseMat aug = m.hcat(SparseMat::column(b));
    return oracle::dense_rank(aug) == oracle::dense_rank(m);
}

/// Cross-validated bracket verdict: the library's decision must agree with
/// the dense span test and (through the indeterminacy) the dense search.
bool bracket_cross_validated(const ObstructionClass& t, bool& ok) {
    bool oracle_verdict = in_span(t.indeterminacy.basis, t.coords);
    REQ(t.vanishes() == oracle_verdict);
    if (t.indeterminacy.dim() == 0)
        REQ(t.vanishes() == dense_nullhomotopic(t.representative));
    auto [v, w] = bracket_vanishes(t);
    REQ(v == t.vanishes());
    if (w) REQ((hom_differential(*w) - t.representative).is_zero());
    return t.vanishes();
}

HomotopySimplicialMap strict_identity(const Bicomplex& b) {
    HomotopySimplicialMap s;
    s.C = b;
    s.D = b;
    for (int n = 0; n < b.cols(); ++n) s.f.push_back(ChainMap::identity(b.column[n]));
    s.s1.resize(b.cols());
    for (int n = 1; n < b.cols(); ++n)
        s.s1[n] = GradedMap(b.column[n], b.column[n - 1], 1);
    s.validate();
    return s;
}

// --- criteria -------------------------------------------------------------

bool c1_semisimple_hc() {
    bool ok = true;
    REQ(cyclic_homology(FiniteGroup::cyclic(2), 5).hc ==
        std::vector<int>({2, 0, 2, 0, 2}));
    REQ(cyclic_homology(FiniteGroup::cyclic(3), 5).hc ==
        std::vector<int>({3, 0, 3, 0, 3}));
    return ok;
}

bool c2_burghelea() {
    bool ok = true;
    for (const FiniteGroup& G :
         {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()}) {
        const int N = 4;
        auto dec = ncy_truncated(G, N);
        auto hh = cyclic_homology(G, N).hh;
        for (int n = 0; n <= 3; ++n) {
            int sum = 0;
            for (int comp = 0; comp < dec.components(); ++comp) {
                int y = dec.class_rep[comp];
                auto bm = burghelea_maps(G, y, N);
                int comp_dim = homology(chains(bm.target.s), n).dim;
                REQ(comp_dim == homology(chains(bm.bcy), n).dim);
                sum += comp_dim;
            }
            REQ(sum == hh[n]);
        }
    }
    return ok;
}

bool c3_hc1_of_z() {
    bool ok = true;
    auto model = wtcc_small_model(1, classes_in_window(1, 3), 5);
    REQ(homology(model, 1).dim == 1);
    // cross-check against the windowed cyclic complex of the abelian column
    auto p = build_abelian_bicomplexes(2, 3, 3);
    REQ(homology(p.col[1].cx.lambda, 1).dim == 1);
    return ok;
}

bool c4_planted_squares() {
    bool ok = true;
    std::mt19937 rng(8101);
    for (int trial = 0; trial < 100; ++trial) {
        auto F = gen::planted_square(rng);
        auto s = solve_stage1(F.f[1], F.f[0], F.C.horiz[1], F.D.horiz[1]);
        REQ(s.has_value());
        if (s) {
            GradedMap defect =
                compose(F.f[0], F.C.horiz[1]).g - compose(F.D.horiz[1], F.f[1]).g;
            REQ((hom_differential(*s) - defect).is_zero());
        }
        auto g = gr2_map(F, 1);  // ChainMap constructor checks the squares
        for (int m = g.grC.complex->lo(); m <= g.grC.complex->hi(); ++m) {
            SparseMat mat = g.map.at(m);
            int rs = F.D.column[0]->dim(m), cs = F.C.column[0]->dim(m);
            SparseMat f0 = F.f[0].at(m), f1 = F.f[1].at(m - 1);
            for (int i = 0; i < f0.rows(); ++i)
                for (int j = 0; j < f0.cols(); ++j) REQ(mat.at(i, j) == f0.at(i, j));
            for (int i = 0; i < f1.rows(); ++i)
                for (int j = 0; j < f1.cols(); ++j)
                    REQ(mat.at(rs + i, cs + j) == f1.at(i, j));
        }
    }
    return ok;
}

bool c5_extend_iff_brackets() {
    bool ok = true;
    auto triple = obstructed_triple();
    auto sur = surrogate_counterexample();

    // strict plant: every bracket vanishes and the full extension exists
    auto S = strict_identity(triple.D);
    for (int n = 0; n <= 1; ++n) REQ(bracket_cross_validated(toda_bracket(S, 2, n), ok));
    auto rs = extend_tower(S, 4, 0);
    REQ(rs.map.has_value());
    if (rs.map) REQ(quasi_iso(*rs.map));

    // surrogate: the order-2 bracket obstructs exactly where extension fails
    for (int n = 0; n <= 1; ++n) REQ(extend_tower(sur, 2, n).map.has_value());
    auto t20 = toda_bracket(sur, 2, 0);
    REQ(!bracket_cross_validated(t20, ok));
    auto rf = extend_tower(sur, 3, 0);
    REQ(!rf.map.has_value());
    REQ(rf.obstruction && rf.obstruction->order == 2 && rf.obstruction->position == 0);
    if (rf.obstruction) REQ(!bracket_cross_validated(*rf.obstruction, ok));

    // planted triple: order-2 brackets vanish, the order-3 bracket obstructs
    for (int n = 0; n <= 1; ++n)
        REQ(bracket_cross_validated(toda_bracket(triple, 2, n), ok));
    for (int n = 0; n <= 1; ++n) REQ(extend_tower(triple, 3, n).map.has_value());
    auto r4 = extend_tower(triple, 4, 0);
    REQ(!r4.map.has_value());
    REQ(r4.obstruction && r4.obstruction->order == 3 && r4.obstruction->position == 0);
    if (r4.obstruction) REQ(!bracket_cross_validated(*r4.obstruction, ok));
    return ok;
}

bool c6_surrogate() {
    bool ok = true;
    auto F = io::hsmap_from_json(io::load_file("fixtures/surrogate_pair.json"));
    // the committed fixture is exactly the built-in construction
    REQ(io::render(io::hsmap_to_json(F)) ==
        io::render(io::hsmap_to_json(surrogate_counterexample())));
    for (int n = 0; n < 3; ++n) REQ(quasi_iso(F.f[n]));
    F.validate();  // stage-1 witnesses
    auto t = toda_bracket(F, 2, 0);
    REQ(!t.vanishes());
    REQ(t.indeterminacy.dim() == 0);
    REQ(h_dims(totalize(F.C).tot, 0, 3) != h_dims(totalize(F.D).tot, 0, 3));
    return ok;
}

bool c7_spectral_sequence() {
    bool ok = true;
    std::mt19937 rng(9107);
    for (int trial = 0; trial < 50; ++trial) {
        auto b = gen::random_bicomplex3(rng);
        auto t = totalize(b);
        int L = t.filt.length;
        auto pg = pages(t.filt, ProbeComplex::trivial(), L + 2);
        // E1 = homology of the columns
        for (int s = 0; s <= 2; ++s)
            for (int d = b.column[s]->lo(); d <= b.column[s]->hi(); ++d)
                REQ(pg[0].dim(s, d) == homology(b.column[s], d).dim);
        // d1 = the map induced by horiz on column homology
        for (int s = 1; s <= 2; ++s)
            for (int d = b.column[s]->lo(); d <= b.column[s]->hi(); ++d) {
                auto it = pg[0].cell.find({s, d});
                if (it == pg[0].cell.end()) continue;
                auto tgt = pg[0].cell.find({s - 1, d});
                auto ht = homology(b.column[s - 1], d);
                SparseMat hmat = b.horiz[s].at(d);
                for (int c = 0; c < it->second.dim; ++c) {
                    std::vector<Rat> v = it->second.lift.col_dense(c);
                    std::vector<Rat> slice(b.column[s]->dim(d), Rat(0));
                    const auto& lv = t.filt.levels(s + d);
                    int pos = 0;
                    for (int i = 0; i < static_cast<int>(lv.size()); ++i)
                        if (lv[i] == s) slice[pos++] = v[i];
                    auto lhs = ht.class_of(hmat.apply(slice));
                    std::vector<Rat> rhs(ht.dim, Rat(0));
                    if (tgt != pg[0].cell.end()) {
                        SparseMat dm = pg[0].d_at(s, d);
                        for (int rr = 0; rr < dm.rows(); ++rr) {
                            Rat coef = dm.at(rr, c);
                            if (coef == 0) continue;
                            std::vector<Rat> w = tgt->second.lift.col_dense(rr);
                            std::vector<Rat> wslice(b.column[s - 1]->dim(d), Rat(0));
                            const auto& lw = t.filt.levels(s - 1 + d);
                            int p2 = 0;
                            for (int i = 0; i < static_cast<int>(lw.size()); ++i)
                                if (lw[i] == s - 1) wslice[p2++] = w[i];
                            auto cls = ht.class_of(wslice);
                            for (int q = 0; q < ht.dim; ++q) rhs[q] += coef * cls[q];
                        }
                    }
                    REQ(lhs == rhs);
                }
            }
        // d_r . d_r = 0 on every page
        for (const auto& p : pg)
            for (const auto& [key, m] : p.d)
                REQ((p.d_at(key.first - p.r, key.second + p.r - 1) * m).is_zero());
        // strong convergence: E_infinity sums to H(Tot) per total degree
        REQ(abutment_check(pg, t.filt, ProbeComplex::trivial()).ok());
    }
    return ok;
}

bool c8_page_maps() {
    bool ok = true;
    std::mt19937 rng(7308);
    for (int trial = 0; trial < 6; ++trial) {
        auto t = totalize(gen::random_bicomplex3(rng));
        auto f = gen::perturbed_double(rng, t.filt);
        for (ProbeComplex probe :
             {ProbeComplex::trivial(), ProbeComplex{ChainComplex::point(1), false},
              ProbeComplex{ChainComplex::point(0), true}}) {
            auto im = induced_page_maps(f, t.filt, t.filt, probe, 3);
            for (int i = 0; i < 3; ++i) {
                const auto& sp = im.source_pages[i];
                const auto& tp = im.target_pages[i];
                for (const auto& [key, m] : im.maps[i]) {
                    auto [s, tt] = key;
                    SparseMat lhs = tp.d_at(s, tt) * m;
                    auto down = im.maps[i].find({s - sp.r, tt + sp.r - 1});
                    SparseMat rhs(lhs.rows(), lhs.cols());
                    if (down != im.maps[i].end()) rhs = down->second * sp.d_at(s, tt);
                    REQ(lhs == rhs);
                }
            }
        }
    }
    return ok;
}

bool c9_bn_tower() {
    bool ok = true;
    std::mt19937 rng(5509);
    for (int trial = 0; trial < 5; ++trial) {
        auto b = gen::random_bicomplex3(rng);
        HomotopyChainObject x;
        x.objects = b.column;
        x.d.resize(b.cols());
        x.h.resize(b.cols());
        for (int n = 1; n < b.cols(); ++n) x.d[n] = b.horiz[n];
        for (int n = 2; n < b.cols(); ++n)
            x.h[n] = GradedMap(b.column[n], b.column[n - 2], 1);
        auto r = bn_totalization_tower(x);
        REQ(r.totalizable());
        for (const auto& br : r.brackets) {
            REQ(br.vanishes);
            REQ(br.representative.is_zero());
        }
        auto t = totalize(b);
        REQ(h_dims(r.t_infinity(), t.tot->lo(), t.tot->hi()) ==
            h_dims(t.tot, t.tot->lo(), t.tot->hi()));
    }
    auto planted = bn_totalization_tower(planted_obstructed_tower());
    REQ(!planted.totalizable());
    REQ(planted.obstruction_at && *planted.obstruction_at == 3);
    REQ(!planted.brackets.back().vanishes);
    return ok;
}

bool c10_gamma() {
    bool ok = true;
    auto g2 = gamma_truncation(2, 6);  // identities checked on construction
    auto g4 = gamma_truncation(4, 6);
    for (int n = 0; n <= 6; ++n) {
        REQ(g2.rank(n) == n);
        int c3 = n * (n - 1) * (n - 2) / 6;
        REQ(g4.rank(n) == c3);
    }
    // independent re-check of the face identities on all generators
    for (const auto& g : {g2, g4})
        for (int n = 2; n <= g.N; ++n)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    for (int a = 0; a < g.rank(n); ++a) {
                        auto lhs = apply_hom(g.face[n - 1][i], g.rank(n - 2),
                                             g.face[n][j][a]);
                        auto rhs = apply_hom(g.face[n - 1][j - 1], g.rank(n - 2),
                                             g.face[n][i][a]);
                        REQ(lhs == rhs);
                    }
    return ok;
}

bool c11_windowed_verdicts() {
    bool ok = true;
    auto p = build_example_bicomplexes(2, 3, 3);  // minimal window
    // exact ranks at the fixed window
    std::vector<int> totD, totC;
    for (int n = 0; n <= 3; ++n) {
        totC.push_back(p.totC.tot->dim(n));
        totD.push_back(p.totD.tot->dim(n));
    }
    REQ(totC == std::vector<int>({1, 7, 27, 74}));
    REQ(totD == std::vector<int>({1, 7, 65, 316}));
    auto vC = window_verdict(p.totC, p.iota_coord_C);
    auto vD = window_verdict(p.totD, p.iota_coord_D);
    REQ(vC.alive_e2 && vC.alive_e3);              // survives to E^3 in C
    REQ(vD.e2_dim == 1 && vD.alive_e2);           // present on E^2 in D
    REQ(vD.e3_dim == 0 && !vD.alive_e3);          // killed by a page-2 differential
    auto q = build_example_bicomplexes(2, 3, 4);  // same verdicts at L + 1
    auto wC = window_verdict(q.totC, q.iota_coord_C);
    auto wD = window_verdict(q.totD, q.iota_coord_D);
    REQ(wC.alive_e2 == vC.alive_e2 && wC.alive_e3 == vC.alive_e3);
    REQ(wD.alive_e2 == vD.alive_e2 && wD.alive_e3 == vD.alive_e3);
    REQ(wD.e3_dim == 0);
    return ok;
}

bool c12_abelian_strictness() {
    bool ok = true;
    auto p = build_abelian_bicomplexes(2, 3, 3);
    for (int n = 1; n <= 3; ++n) {
        REQ(p.map.s1[n].is_zero());
        for (int k = 0; k <= p.col[n].R; ++k)
            REQ(p.map.D.horiz[n].at(k) * p.map.f[n].at(k) ==
                p.map.f[n - 1].at(k) * p.map.C.horiz[n].at(k));
    }
    auto F = total_map(p);
    REQ(stable_range(p) == 1);
    for (int n = 0; n <= stable_range(p); ++n) REQ(induces_iso(F, n));
    return ok;
}

struct Criterion {
    int id;
    const char* label;
    bool (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "semisimple cyclic homology of Q[Z/2], Q[Z/3]", c1_semisimple_hc},
        {2, "Burghelea decomposition at test scale", c2_burghelea},
        {3, "HC_1(Q[Z]) = Q via the small model", c3_hc1_of_z},
        {4, "stage-1 solve and gr2 map on planted squares", c4_planted_squares},
        {5, "extension succeeds iff brackets vanish", c5_extend_iff_brackets},
        {6, "surrogate counterexample fixture", c6_surrogate},
        {7, "spectral sequence pages and convergence", c7_spectral_sequence},
        {8, "induced page maps commute with d_r", c8_page_maps},
        {9, "totalization tower vs planted obstruction", c9_bn_tower},
        {10, "free simplicial group combinatorics", c10_gamma},
        {11, "windowed class verdicts at L and L+1", c11_windowed_verdicts},
        {12, "abelianized pair strict and stable-range equivalent", c12_abelian_strictness},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            std::printf("    exception: %s\n", e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        std::printf("criterion %2d: %s (%.2f s) %s\n", c.id, pass ? "PASS" : "FAIL",
                    secs, c.label);
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
