#include "tothom/freesimp.hpp"

#include <algorithm>
#include <stdexcept>

namespace tothom {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

std::vector<int> exps_of(int rank, const FreeWord& w) {
    std::vector<int> e(rank, 0);
    for (auto [g, s] : w.letters) e[g] += s;
    return e;
}

/// Sorted-letter normal form a^{e_0} b^{e_1} ... of an exponent vector.
FreeWord normal_form(int rank, const std::vector<int>& exps) {
    std::vector<std::pair<int, int>> letters;
    for (int g = 0; g < rank; ++g)
        for (int k = 0; k < std::abs(exps[g]); ++k)
            letters.push_back({g, exps[g] > 0 ? 1 : -1});
    return {rank, std::move(letters)};
}

FreeWord elem_mul(bool abelian, int rank, const FreeWord& u, const FreeWord& v) {
    FreeWord w = concat(u, v);
    if (!abelian) return w;
    return normal_form(rank, exps_of(rank, w));
}

/// Image of an element under the face homomorphism given on generators.
FreeWord elem_apply(bool abelian, int target_rank, const std::vector<FreeWord>& images,
                    const FreeWord& w) {
    FreeWord u = apply_hom(images, target_rank, w);
    if (!abelian) return u;
    return normal_form(target_rank, exps_of(target_rank, u));
}

/// All window elements: reduced words (free) or normal forms (abelian) with
/// letter count at most L.
std::vector<FreeWord> words_up_to(int rank, int L, bool abelian) {
    std::vector<FreeWord> out;
    if (!abelian) {
        std::vector<std::pair<int, int>> word;
        auto rec = [&](auto&& self) -> void {
            out.push_back({rank, word});
            if (static_cast<int>(word.size()) == L) return;
            for (int i = 0; i < rank; ++i)
                for (int e : {1, -1}) {
                    if (!word.empty() && word.back().first == i && word.back().second == -e)
                        continue;
                    word.push_back({i, e});
                    self(self);
                    word.pop_back();
                }
        };
        rec(rec);
    } else {
        std::vector<int> exps(rank, 0);
        auto rec = [&](auto&& self, int g, int budget) -> void {
            if (g == rank) {
                out.push_back(normal_form(rank, exps));
                return;
            }
            for (int e = -budget; e <= budget; ++e) {
                exps[g] = e;
                self(self, g + 1, budget - std::abs(e));
            }
            exps[g] = 0;
        };
        rec(rec, 0, L);
    }
    return out;
}

int letters_of(const std::vector<FreeWord>& tuple) {
    int n = 0;
    for (const auto& w : tuple) n += w.length();
    return n;
}

/// One conjugation path: cells of tuple-degree 1 whose boundary is
/// [w] - [canonical_rep(w)] in the chain complex (free case only).
std::vector<std::vector<FreeWord>> conj_path(const FreeWord& w) {
    std::vector<std::vector<FreeWord>> cells;
    FreeWord u = w;
    while (u.length() >= 2 && u.letters.front().first == u.letters.back().first &&
           u.letters.front().second == -u.letters.back().second) {
        FreeWord head{u.rank, {u.letters.front()}};
        FreeWord rest{u.rank, {u.letters.begin() + 1, u.letters.end()}};
        cells.push_back({head, rest});  // boundary (u) - (core step)
        u = FreeWord{u.rank, {u.letters.begin() + 1, u.letters.end() - 1}};
    }
    FreeWord canon = canonical_rep(w);
    if (!(u == canon)) {
        for (int i = 1; i < u.length(); ++i) {
            std::vector<std::pair<int, int>> rot(u.letters.begin() + i, u.letters.end());
            rot.insert(rot.end(), u.letters.begin(), u.letters.begin() + i);
            if (rot == canon.letters) {
                FreeWord a{u.rank, {u.letters.begin(), u.letters.begin() + i}};
                FreeWord b{u.rank, {u.letters.begin() + i, u.letters.end()}};
                cells.push_back({a, b});  // boundary (ab) - (ba)
                u = canon;
                break;
            }
        }
        if (!(u == canon)) throw std::logic_error("conjugation path search failed");
    }
    return cells;
}

WindowedColumn build_column(int rank, int R, int L, bool abelian) {
    WindowedColumn c;
    c.rank = rank;
    c.R = R;
    c.L = L;
    c.abelian = abelian;
    auto words = words_up_to(rank, L, abelian);
    c.s.N = R;
    c.s.cells.resize(R + 1);
    c.s.face.resize(R + 1);
    c.s.degen.resize(R + 1);
    c.t.resize(R + 1);
    c.cells.resize(R + 1);
    c.index.resize(R + 1);
    for (int d = 0; d <= R; ++d) {
        std::vector<FreeWord> tuple;
        auto rec = [&](auto&& self, int pos, int budget) -> void {
            if (pos == d + 1) {
                c.index[d][tuple] = static_cast<int>(c.cells[d].size());
                c.cells[d].push_back(tuple);
                return;
            }
            for (const auto& w : words) {
                if (w.length() > budget) continue;
                tuple.push_back(w);
                self(self, pos + 1, budget - w.length());
                tuple.pop_back();
            }
        };
        rec(rec, 0, L);
        c.s.cells[d] = static_cast<int>(c.cells[d].size());
    }
    auto at = [&](int d, const std::vector<FreeWord>& tuple) {
        auto it = c.index[d].find(tuple);
        if (it == c.index[d].end()) throw std::logic_error("window not closed");
        return it->second;
    };
    for (int d = 0; d <= R; ++d) {
        int count = c.s.cells[d];
        if (d >= 1) c.s.face[d].assign(d + 1, std::vector<int>(count));
        if (d < R) c.s.degen[d].assign(d + 1, std::vector<int>(count));
        c.t[d].resize(count);
        for (int x = 0; x < count; ++x) {
            const auto& g = c.cells[d][x];
            for (int i = 0; i < d; ++i) {
                auto h = g;
                h[i] = elem_mul(abelian, rank, g[i], g[i + 1]);
                h.erase(h.begin() + i + 1);
                c.s.face[d][i][x] = at(d - 1, h);
            }
            if (d >= 1) {
                auto h = g;
                h[0] = elem_mul(abelian, rank, g[d], g[0]);
                h.pop_back();
                c.s.face[d][d][x] = at(d - 1, h);
            }
            if (d < R)
                for (int j = 0; j <= d; ++j) {
                    auto h = g;
                    h.insert(h.begin() + j + 1, FreeWord::id(rank));
                    c.s.degen[d][j][x] = at(d + 1, h);
                }
            auto h = g;
            std::rotate(h.begin(), h.end() - 1, h.end());
            c.t[d][x] = at(d, h);
        }
    }
    CyclicSetTrunc check{c.s, c.t};
    check.validate();
    c.cx = cyclic_complexes(c.s, c.t);
    if (!abelian) {
        if (rank >= 1)
            for (const auto& cd : classes_in_window(rank, L)) c.classes.push_back(cd.rep);
    } else {
        for (const auto& w : words)
            if (!w.is_id()) c.classes.push_back(w);
        std::sort(c.classes.begin(), c.classes.end());
    }
    return c;
}

int class_index(const WindowedColumn& c, const FreeWord& rep) {
    for (int i = 0; i < static_cast<int>(c.classes.size()); ++i)
        if (c.classes[i] == rep) return i;
    throw std::logic_error("class representative outside the window");
}

/// Small-model column: identity summand plus one Q per class in degree 0.
ComplexPtr small_model(const WindowedColumn& c) {
    std::vector<int> dims(c.R + 1);
    for (int k = 0; k <= c.R; ++k) dims[k] = (k % 2 == 0) ? 1 : c.rank;
    dims[0] += static_cast<int>(c.classes.size());
    return ChainComplex::make(0, std::move(dims), {});
}

/// The standard cycle representative of a degree-k model generator: the
/// even classes come from the ground field, (e, ..., e); the degree-1 class
/// for generator a is a^{-1} da, the cell (a^{-1}, a).
std::vector<FreeWord> model_cycle(const WindowedColumn& c, int k, int gen) {
    std::vector<FreeWord> tuple(k + 1, FreeWord::id(c.rank));
    if (k % 2 == 1) {
        require(k == 1, "no standard representative above degree 1");
        tuple[0] = inverse(FreeWord::gen(c.rank, gen));
        tuple[1] = FreeWord::gen(c.rank, gen);
    }
    return tuple;
}

WindowedBicomplexPair build_pair(int m, int N, int L, bool abelian) {
    require(m == 2, "only m = 2 windows are implemented");
    require(N == 3, "only the minimal tower depth N = 3 is implemented");
    require(L >= 2, "window too small to contain the tracked class iota_{1,1}");
    auto gamma = gamma_truncation(m, N);
    auto ab = abelianize(gamma);
    WindowedBicomplexPair p;
    p.m = m;
    p.N = N;
    p.L = L;
    p.abelian = abelian;
    for (int n = 0; n <= N; ++n)
        p.col.push_back(build_column(gamma.rank(n), N - n, L, abelian));

    Bicomplex C, D;
    for (int n = 0; n <= N; ++n) {
        C.column.push_back(small_model(p.col[n]));
        D.column.push_back(p.col[n].cx.lambda);
    }
    // horizontal differentials: alternating sums of the Gamma faces
    for (int n = 1; n <= N; ++n) {
        const auto& src = p.col[n];
        const auto& tgt = p.col[n - 1];
        int tr = gamma.rank(n - 1);
        std::map<int, SparseMat> mc, md;
        for (int k = 0; k <= src.R; ++k) {
            // D side: entrywise group homomorphism on window cells
            SparseMat chain(tgt.s.cells[k], src.s.cells[k]);
            for (int x = 0; x < src.s.cells[k]; ++x)
                for (int i = 0; i <= n; ++i) {
                    std::vector<FreeWord> img;
                    for (const auto& w : src.cells[k][x])
                        img.push_back(elem_apply(abelian, tr, gamma.face[n][i], w));
                    chain.add_at(tgt.cell_index(k, img), x, (i % 2 == 0) ? Rat(1) : Rat(-1));
                }
            SparseMat lam = tgt.cx.lambda_proj.at(k) * (chain * src.cx.lambda_lift.at(k));
            if (!lam.is_zero()) md[k] = std::move(lam);
            // C side
            SparseMat mk(C.column[n - 1]->dim(k), C.column[n]->dim(k));
            if (k % 2 == 1) {
                for (int i = 0; i <= n; ++i) {
                    SparseMat term = ab.face[n][i];
                    if (i % 2 == 1) term = term * Rat(-1);
                    mk = mk + term;
                }
            } else {
                Rat diag(n % 2 == 0 ? 1 : 0);
                if (diag != 0) mk.set(0, 0, diag);
                if (k == 0)
                    for (int q = 0; q < static_cast<int>(src.classes.size()); ++q)
                        for (int i = 0; i <= n; ++i) {
                            FreeWord u = elem_apply(abelian, tr, gamma.face[n][i],
                                                    src.classes[q]);
                            Rat sg(i % 2 == 0 ? 1 : -1);
                            if (u.is_id())
                                mk.add_at(0, 1 + q, sg);
                            else {
                                FreeWord rep = abelian ? u : canonical_rep(u);
                                mk.add_at(1 + class_index(tgt, rep), 1 + q, sg);
                            }
                        }
            }
            if (!mk.is_zero()) mc[k] = std::move(mk);
        }
        C.horiz.push_back(ChainMap(C.column[n], C.column[n - 1], std::move(mc)));
        D.horiz.push_back(ChainMap(D.column[n], D.column[n - 1], std::move(md)));
    }
    // shift: horiz[n] must sit at slot n
    C.horiz.insert(C.horiz.begin(), ChainMap());
    D.horiz.insert(D.horiz.begin(), ChainMap());

    // f: generators to standard cycles, classes to their representative words
    std::vector<ChainMap> f;
    for (int n = 0; n <= N; ++n) {
        const auto& c = p.col[n];
        std::map<int, SparseMat> mats;
        for (int k = 0; k <= c.R; ++k) {
            SparseMat place(c.s.cells[k], C.column[n]->dim(k));
            if (k == 0) {
                place.set(c.cell_index(0, {FreeWord::id(c.rank)}), 0, Rat(1));
                for (int q = 0; q < static_cast<int>(c.classes.size()); ++q)
                    place.set(c.cell_index(0, {c.classes[q]}), 1 + q, Rat(1));
            } else {
                int gens = (k % 2 == 1) ? c.rank : 1;
                for (int j = 0; j < gens; ++j)
                    place.set(c.cell_index(k, model_cycle(c, k, j)), j, Rat(1));
            }
            SparseMat mat = c.cx.lambda_proj.at(k) * place;
            if (!mat.is_zero()) mats[k] = std::move(mat);
        }
        f.push_back(ChainMap(C.column[n], D.column[n], std::move(mats)));
    }

    // stage-1 witnesses: conjugation paths for the class pushforwards
    std::vector<GradedMap> s1(N + 1);
    for (int n = 1; n <= N; ++n) {
        const auto& src = p.col[n];
        const auto& tgt = p.col[n - 1];
        GradedMap w(C.column[n], D.column[n - 1], 1);
        if (!abelian) {
            SparseMat chain(tgt.s.cells[1], C.column[n]->dim(0));
            for (int q = 0; q < static_cast<int>(src.classes.size()); ++q)
                for (int i = 0; i <= n; ++i) {
                    FreeWord u = elem_apply(false, gamma.rank(n - 1), gamma.face[n][i],
                                            src.classes[q]);
                    Rat sg(i % 2 == 0 ? -1 : 1);  // minus the face sign
                    for (const auto& cell : conj_path(u))
                        chain.add_at(tgt.cell_index(1, cell), 1 + q, sg);
                }
            SparseMat mat = tgt.cx.lambda_proj.at(1) * chain;
            if (!mat.is_zero()) w.set(0, std::move(mat));
        }
        s1[n] = std::move(w);
    }

    p.map = HomotopySimplicialMap{std::move(C), std::move(D), std::move(f), std::move(s1)};
    p.map.validate();
    p.totC = totalize(p.map.C);
    p.totD = totalize(p.map.D);
    const auto& c1 = p.col[1];
    p.iota_coord_C = p.totC.offset(2, 1);  // degree-1 generator of column 1
    int cell = c1.cell_index(1, model_cycle(c1, 1, 0));
    require(cell >= 0, "window too small to contain the tracked class iota_{1,1}");
    int lam = c1.lambda_coord(1, cell);
    require(lam >= 0, "window too small to contain the tracked class iota_{1,1}");
    p.iota_coord_D = p.totD.offset(2, 1) + lam;
    return p;
}

}  // namespace

int WindowedColumn::cell_index(int deg, const std::vector<FreeWord>& tuple) const {
    auto it = index[deg].find(tuple);
    return it == index[deg].end() ? -1 : it->second;
}

int WindowedColumn::lambda_coord(int deg, int cell) const {
    const SparseMat& pr = cx.lambda_proj.at(deg);
    for (int r = 0; r < pr.rows(); ++r)
        if (pr.at(r, cell) != 0) return r;
    return -1;
}

WindowedBicomplexPair build_example_bicomplexes(int m, int N, int L) {
    return build_pair(m, N, L, false);
}

WindowedBicomplexPair build_abelian_bicomplexes(int m, int N, int L) {
    return build_pair(m, N, L, true);
}

ChainMap total_map(const WindowedBicomplexPair& p) {
    std::map<int, SparseMat> mats;
    for (int deg = 0; deg <= p.totC.tot->hi(); ++deg) {
        SparseMat m(p.totD.tot->dim(deg), p.totC.tot->dim(deg));
        for (int n = 0; n <= p.N; ++n) {
            SparseMat block = p.map.f[n].at(deg - n);
            if (block.rows() == 0 || block.cols() == 0) continue;
            m.insert_block(p.totD.offset(deg, n), p.totC.offset(deg, n), block);
        }
        if (!m.is_zero()) mats[deg] = std::move(m);
    }
    return ChainMap(p.totC.tot, p.totD.tot, std::move(mats));
}

int stable_range(const WindowedBicomplexPair& p) {
    auto reliable_through = [&](int deg) {
        for (int n = 0; n <= p.N; ++n) {
            int t = deg - n;
            if (t >= 0 && t >= p.col[n].R) return false;  // cell at a truncation top
        }
        return true;
    };
    int n = -1;
    while (reliable_through(n + 1) && reliable_through(n + 2)) ++n;
    return n;
}

WindowVerdict window_verdict(const Totalization& t, int coord) {
    auto pg = pages(t.filt, ProbeComplex::trivial(), 3);
    WindowVerdict v;
    std::vector<Rat> unit(t.tot->dim(2));
    unit[coord] = Rat(1);
    auto read = [&](const SpectralSequencePage& page, int& dim, bool& alive) {
        auto it = page.cell.find({1, 1});
        if (it == page.cell.end()) return;
        dim = it->second.dim;
        for (const Rat& x : it->second.proj.apply(unit))
            if (x != 0) alive = true;
    };
    read(pg[1], v.e2_dim, v.alive_e2);
    read(pg[2], v.e3_dim, v.alive_e3);
    return v;
}

}  // namespace tothom
