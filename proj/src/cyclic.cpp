#include "tothom/cyclic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tothom {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<int> decode(long long c, int order, int len) {
    std::vector<int> g(len);
    for (int i = 0; i < len; ++i) {
        g[i] = static_cast<int>(c % order);
        c /= order;
    }
    return g;
}

long long encode(const std::vector<int>& g, int order) {
    long long c = 0;
    for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) c = c * order + g[i];
    return c;
}

}  // namespace

void SimplicialSetTrunc::validate() const {
    require(static_cast<int>(cells.size()) == N + 1, "cell count table size");
    for (int n = 1; n <= N; ++n) {
        require(static_cast<int>(face[n].size()) == n + 1, "face count");
        for (int i = 0; i <= n; ++i)
            for (int c = 0; c < cells[n]; ++c)
                require(face[n][i][c] >= 0 && face[n][i][c] < cells[n - 1], "face range");
    }
    for (int n = 0; n < N; ++n) {
        require(static_cast<int>(degen[n].size()) == n + 1, "degeneracy count");
        for (int j = 0; j <= n; ++j)
            for (int c = 0; c < cells[n]; ++c)
                require(degen[n][j][c] >= 0 && degen[n][j][c] < cells[n + 1],
                        "degeneracy range");
    }
    // d_i d_j = d_{j-1} d_i (i < j)
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (int c = 0; c < cells[n]; ++c)
                    require(face[n - 1][i][face[n][j][c]] ==
                                face[n - 1][j - 1][face[n][i][c]],
                            "simplicial face identity");
    // s_i s_j = s_{j+1} s_i (i <= j)
    for (int n = 0; n + 1 < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (int c = 0; c < cells[n]; ++c)
                    require(degen[n + 1][i][degen[n][j][c]] ==
                                degen[n + 1][j + 1][degen[n][i][c]],
                            "degeneracy identity");
    // d_i s_j relations
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (int c = 0; c < cells[n]; ++c) {
                    int v = face[n + 1][i][degen[n][j][c]];
                    if (i == j || i == j + 1)
                        require(v == c, "d_i s_j identity case");
                    else if (i < j)
                        require(v == degen[n - 1][j - 1][face[n][i][c]], "d_i s_j, i<j");
                    else
                        require(v == degen[n - 1][j][face[n][i - 1][c]], "d_i s_j, i>j+1");
                }
}

void CyclicSetTrunc::validate() const {
    s.validate();
    require(static_cast<int>(t.size()) == s.N + 1, "cyclic op table size");
    for (int n = 0; n <= s.N; ++n) {
        for (int c = 0; c < s.cells[n]; ++c) {
            int x = c;
            for (int j = 0; j <= n; ++j) x = t[n][x];
            require(x == c, "t^{n+1} != id");
        }
        if (n >= 1)
            for (int c = 0; c < s.cells[n]; ++c) {
                require(s.face[n][0][t[n][c]] == s.face[n][n][c], "d_0 t = d_n");
                for (int i = 1; i <= n; ++i)
                    require(s.face[n][i][t[n][c]] == t[n - 1][s.face[n][i - 1][c]],
                            "d_i t = t d_{i-1}");
            }
    }
}

ComplexPtr chains(const SimplicialSetTrunc& s) {
    std::vector<int> dims(s.cells.begin(), s.cells.end());
    std::map<int, SparseMat> d;
    for (int n = 1; n <= s.N; ++n) {
        SparseMat m(s.cells[n - 1], s.cells[n]);
        for (int c = 0; c < s.cells[n]; ++c)
            for (int i = 0; i <= n; ++i)
                m.add_at(s.face[n][i][c], c, (i % 2 == 0) ? Rat(1) : Rat(-1));
        if (!m.is_zero()) d[n] = std::move(m);
    }
    return ChainComplex::make(0, std::move(dims), std::move(d));
}

NcyDecomposition ncy_truncated(const FiniteGroup& G, int N) {
    G.validate();
    require(N >= 0, "negative truncation");
    NcyDecomposition out;
    out.G = G;
    CyclicSetTrunc& X = out.X;
    X.s.N = N;
    X.s.cells.resize(N + 1);
    X.s.face.resize(N + 1);
    X.s.degen.resize(N + 1);
    X.t.resize(N + 1);
    for (int n = 0; n <= N; ++n) X.s.cells[n] = static_cast<int>(ipow(G.order, n + 1));
    for (int n = 0; n <= N; ++n) {
        long long count = X.s.cells[n];
        if (n >= 1) X.s.face[n].assign(n + 1, std::vector<int>(count));
        if (n < N) X.s.degen[n].assign(n + 1, std::vector<int>(X.s.cells[n]));
        X.t[n].resize(count);
        for (long long c = 0; c < count; ++c) {
            auto g = decode(c, G.order, n + 1);
            for (int i = 0; i < n; ++i) {
                auto h = g;
                h[i] = G.op(g[i], g[i + 1]);
                h.erase(h.begin() + i + 1);
                X.s.face[n][i][c] = static_cast<int>(encode(h, G.order));
            }
            if (n >= 1) {
                auto h = g;
                h[0] = G.op(g[n], g[0]);
                h.pop_back();
                X.s.face[n][n][c] = static_cast<int>(encode(h, G.order));
            }
            if (n < N)
                for (int j = 0; j <= n; ++j) {
                    auto h = g;
                    h.insert(h.begin() + j + 1, G.e);
                    X.s.degen[n][j][c] = static_cast<int>(encode(h, G.order));
                }
            auto h = g;
            std::rotate(h.begin(), h.end() - 1, h.end());
            X.t[n][c] = static_cast<int>(encode(h, G.order));
        }
    }
    X.validate();
    // components by the conjugacy class of the product
    auto classes = G.conjugacy_classes();
    std::vector<int> class_of(G.order);
    for (int k = 0; k < static_cast<int>(classes.size()); ++k)
        for (int g : classes[k]) class_of[g] = k;
    for (const auto& cls : classes) out.class_rep.push_back(cls.front());
    out.component.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        out.component[n].resize(X.s.cells[n]);
        for (long long c = 0; c < X.s.cells[n]; ++c) {
            auto g = decode(c, G.order, n + 1);
            int p = G.e;
            for (int x : g) p = G.op(p, x);
            out.component[n][c] = class_of[p];
        }
    }
    return out;
}

ComponentCells component_cells(const NcyDecomposition& d, int comp) {
    require(comp >= 0 && comp < d.components(), "component index");
    int N = d.X.s.N;
    ComponentCells out;
    out.s.N = N;
    out.s.cells.resize(N + 1);
    out.s.face.resize(N + 1);
    out.s.degen.resize(N + 1);
    out.t.resize(N + 1);
    out.global_id.resize(N + 1);
    std::vector<std::vector<int>> local(N + 1);
    for (int n = 0; n <= N; ++n) {
        local[n].assign(d.X.s.cells[n], -1);
        for (int c = 0; c < d.X.s.cells[n]; ++c)
            if (d.component[n][c] == comp) {
                local[n][c] = static_cast<int>(out.global_id[n].size());
                out.global_id[n].push_back(c);
            }
        out.s.cells[n] = static_cast<int>(out.global_id[n].size());
    }
    auto restrict_table = [&](const std::vector<int>& table, int from, int to) {
        std::vector<int> r(out.s.cells[from]);
        for (int c = 0; c < out.s.cells[from]; ++c) {
            int img = table[out.global_id[from][c]];
            require(local[to][img] >= 0, "structure map leaves component");
            r[c] = local[to][img];
        }
        return r;
    };
    for (int n = 0; n <= N; ++n) {
        if (n >= 1)
            for (int i = 0; i <= n; ++i)
                out.s.face[n].push_back(restrict_table(d.X.s.face[n][i], n, n - 1));
        if (n < N)
            for (int j = 0; j <= n; ++j)
                out.s.degen[n].push_back(restrict_table(d.X.s.degen[n][j], n, n + 1));
        out.t[n] = restrict_table(d.X.t[n], n, n);
    }
    return out;
}

CyclicComplexes cyclic_complexes(const SimplicialSetTrunc& s,
                                 const std::vector<std::vector<int>>& t) {
    CyclicComplexes out;
    out.ch = chains(s);
    int N = s.N;
    // lambda-quotient by t-orbits: e_{t^j(r)} is identified with s^j e_r,
    // s = (-1)^n; an orbit survives iff the sign closes up around it
    std::vector<int> qdims(N + 1);
    for (int n = 0; n <= N; ++n) {
        Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
        std::vector<bool> seen(s.cells[n], false);
        std::vector<Rat> coef(s.cells[n]);
        std::vector<int> orbit_col(s.cells[n], -1);
        int live = 0;
        std::vector<int> reps;
        for (int c = 0; c < s.cells[n]; ++c) {
            if (seen[c]) continue;
            int x = c;
            Rat sj(1);
            std::vector<std::pair<int, Rat>> members;
            do {
                members.push_back({x, sj});
                seen[x] = true;
                x = t[n][x];
                sj *= sign;
            } while (x != c);
            if (sj != 1) continue;  // sign does not close up: orbit dies
            for (auto& [cell, v] : members) {
                coef[cell] = v;
                orbit_col[cell] = live;
            }
            reps.push_back(c);
            ++live;
        }
        qdims[n] = live;
        SparseMat pr(live, s.cells[n]);
        SparseMat lf(s.cells[n], live);
        for (int idx = 0; idx < live; ++idx) lf.set(reps[idx], idx, Rat(1));
        for (int c = 0; c < s.cells[n]; ++c)
            if (orbit_col[c] >= 0) pr.set(orbit_col[c], c, coef[c]);
        out.lambda_proj[n] = std::move(pr);
        out.lambda_lift[n] = std::move(lf);
    }
    std::map<int, SparseMat> qd;
    for (int n = 1; n <= N; ++n) {
        SparseMat m = out.lambda_proj[n - 1] * (out.ch->d(n) * out.lambda_lift[n]);
        if (!m.is_zero()) qd[n] = std::move(m);
    }
    out.lambda = ChainComplex::make(0, std::move(qdims), std::move(qd));
    // Connes B = (1 - lambda) s_extra Norm, degree +1 below the top
    out.B = GradedMap(out.ch, out.ch, 1);
    for (int n = 0; n < N; ++n) {
        Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
        Rat sign1 = -sign;
        SparseMat m(s.cells[n + 1], s.cells[n]);
        for (int c = 0; c < s.cells[n]; ++c) {
            // Norm: sum_j sign^j t^j
            int x = c;
            Rat sj(1);
            for (int j = 0; j <= n; ++j) {
                // extra degeneracy t s_n of the term, then (1 - sign1 t)
                int up = t[n + 1][s.degen[n][n][x]];
                m.add_at(up, c, sj);
                m.add_at(t[n + 1][up], c, -sj * sign1);
                x = t[n][x];
                sj *= sign;
            }
        }
        if (!m.is_zero()) out.B.set(n, std::move(m));
    }
    for (int n = 0; n < N; ++n) {
        out.hh.push_back(homology(out.ch, n).dim);
        out.hc.push_back(homology(out.lambda, n).dim);
    }
    return out;
}

CyclicComplexes cyclic_homology(const FiniteGroup& G, int N) {
    auto d = ncy_truncated(G, N);
    return cyclic_complexes(d.X.s, d.X.t);
}

SimplicialSetTrunc nerve(const FiniteGroup& G, const std::vector<int>& subgroup, int N) {
    int k = static_cast<int>(subgroup.size());
    std::vector<int> local(G.order, -1);
    for (int i = 0; i < k; ++i) local[subgroup[i]] = i;
    require(local[G.e] >= 0, "subgroup must contain the identity");
    for (int a : subgroup)
        for (int b : subgroup) require(local[G.op(a, b)] >= 0, "set not closed");
    SimplicialSetTrunc s;
    s.N = N;
    s.cells.resize(N + 1);
    s.face.resize(N + 1);
    s.degen.resize(N + 1);
    for (int n = 0; n <= N; ++n) s.cells[n] = static_cast<int>(ipow(k, n));
    for (int n = 0; n <= N; ++n) {
        if (n >= 1) s.face[n].assign(n + 1, std::vector<int>(s.cells[n]));
        if (n < N) s.degen[n].assign(n + 1, std::vector<int>(s.cells[n]));
        for (long long c = 0; c < s.cells[n]; ++c) {
            auto g = decode(c, k, n);  // local indices c_1..c_n
            if (n >= 1) {
                auto drop_first = std::vector<int>(g.begin() + 1, g.end());
                s.face[n][0][c] = static_cast<int>(encode(drop_first, k));
                for (int i = 1; i < n; ++i) {
                    auto h = g;
                    h[i - 1] = local[G.op(subgroup[g[i - 1]], subgroup[g[i]])];
                    h.erase(h.begin() + i);
                    s.face[n][i][c] = static_cast<int>(encode(h, k));
                }
                auto drop_last = std::vector<int>(g.begin(), g.end() - 1);
                s.face[n][n][c] = static_cast<int>(encode(drop_last, k));
            }
            if (n < N)
                for (int j = 0; j <= n; ++j) {
                    auto h = g;
                    h.insert(h.begin() + j, local[G.e]);
                    s.degen[n][j][c] = static_cast<int>(encode(h, k));
                }
        }
    }
    s.validate();
    return s;
}

BurgheleaMap burghelea_maps(const FiniteGroup& G, int y, int N) {
    require(y >= 0 && y < G.order, "element out of range");
    auto d = ncy_truncated(G, N);
    int comp = d.component[0][y];  // degree-0 cell (y) lies in <y>
    BurgheleaMap out;
    out.y = y;
    auto cy = G.centralizer(y);
    out.bcy = nerve(G, cy, N);
    out.target = component_cells(d, comp);
    std::vector<std::vector<int>> local(N + 1);
    for (int n = 0; n <= N; ++n) {
        local[n].assign(d.X.s.cells[n], -1);
        for (int c = 0; c < out.target.s.cells[n]; ++c)
            local[n][out.target.global_id[n][c]] = c;
    }
    out.cell_map.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        out.cell_map[n].resize(out.bcy.cells[n]);
        for (long long c = 0; c < out.bcy.cells[n]; ++c) {
            auto g = decode(c, static_cast<int>(cy.size()), n);
            std::vector<int> tup(n + 1);
            int prod = G.e;
            for (int i = 0; i < n; ++i) {
                tup[i + 1] = cy[g[i]];
                prod = G.op(prod, cy[g[i]]);
            }
            tup[0] = G.op(G.inv[prod], y);
            int glob = static_cast<int>(encode(tup, G.order));
            require(local[n][glob] >= 0, "image cell outside the component");
            out.cell_map[n][c] = local[n][glob];
        }
        // injectivity
        std::set<int> seen(out.cell_map[n].begin(), out.cell_map[n].end());
        require(static_cast<int>(seen.size()) == out.bcy.cells[n],
                "composite not injective");
    }
    // simpliciality, exhaustively
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            for (int c = 0; c < out.bcy.cells[n]; ++c)
                require(out.cell_map[n - 1][out.bcy.face[n][i][c]] ==
                            out.target.s.face[n][i][out.cell_map[n][c]],
                        "composite not simplicial (faces)");
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int c = 0; c < out.bcy.cells[n]; ++c)
                require(out.cell_map[n + 1][out.bcy.degen[n][j][c]] ==
                            out.target.s.degen[n][j][out.cell_map[n][c]],
                        "composite not simplicial (degeneracies)");
    ComplexPtr src = chains(out.bcy);
    ComplexPtr tgt = chains(out.target.s);
    std::map<int, SparseMat> f;
    for (int n = 0; n <= N; ++n) {
        SparseMat m(tgt->dim(n), src->dim(n));
        for (int c = 0; c < src->dim(n); ++c) m.set(out.cell_map[n][c], c, Rat(1));
        f[n] = std::move(m);
    }
    out.chain_map = ChainMap(src, tgt, std::move(f));
    return out;
}

std::vector<ClassData> classes_in_window(int rank, int L) {
    require(rank >= 1 && L >= 1, "window parameters");
    std::set<FreeWord> reps;
    std::vector<std::pair<int, int>> word;
    // enumerate reduced words of length <= L
    auto rec = [&](auto&& self, int len) -> void {
        if (len > 0) reps.insert(canonical_rep(FreeWord{rank, word}));
        if (len == L) return;
        for (int i = 0; i < rank; ++i)
            for (int e : {1, -1}) {
                if (!word.empty() && word.back().first == i && word.back().second == -e)
                    continue;
                word.push_back({i, e});
                self(self, len + 1);
                word.pop_back();
            }
    };
    rec(rec, 0);
    std::vector<ClassData> out;
    for (const auto& r : reps) {
        if (r.is_id()) continue;
        auto [root, k] = primitive_root(r);
        out.push_back({r, root, k});
    }
    return out;
}

ComplexPtr wtcc_small_model(int rank, const std::vector<ClassData>& classes, int N) {
    require(rank >= 0 && N >= 0, "small model parameters");
    std::vector<int> dims(N + 1);
    for (int k = 0; k <= N; ++k) dims[k] = (k % 2 == 0) ? 1 : rank;
    dims[0] += static_cast<int>(classes.size());
    return ChainComplex::make(0, std::move(dims), {});
}

}  // namespace tothom
