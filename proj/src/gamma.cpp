#include "tothom/gamma.hpp"

#include <stdexcept>

namespace tothom {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

/// All monotone surjections [n] ->> [m1].
std::vector<Surjection> surjections(int n, int m1) {
    std::vector<Surjection> out;
    std::vector<int> vals;
    auto rec = [&](auto&& self, int pos, int last) -> void {
        if (pos == n + 1) {
            if (last == m1) out.push_back({n, m1, vals});
            return;
        }
        // stay monotone; never jump (surjectivity forces steps of 0 or 1)
        for (int v : {last, last + 1}) {
            if (v > m1) continue;
            if (pos == 0 && v != 0) continue;
            vals.push_back(v);
            self(self, pos + 1, v);
            vals.pop_back();
        }
    };
    vals.clear();
    if (n >= 0) {
        vals.push_back(0);
        rec(rec, 1, 0);
        vals.pop_back();
    }
    return out;
}

int find_gen(const std::vector<Surjection>& gens, const Surjection& s) {
    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
        if (gens[i] == s) return i;
    return -1;
}

bool surjective(const std::vector<int>& vals, int m1) {
    std::vector<bool> hit(m1 + 1, false);
    for (int v : vals) {
        if (v < 0 || v > m1) return false;
        hit[v] = true;
    }
    for (bool b : hit) if (!b) return false;
    return true;
}

}  // namespace

FreeWord apply_hom(const std::vector<FreeWord>& images, int target_rank,
                   const FreeWord& w) {
    std::vector<std::pair<int, int>> out;
    for (auto [g, e] : w.letters) {
        require(g >= 0 && g < static_cast<int>(images.size()), "generator outside rank");
        const FreeWord& im = images[g];
        if (e > 0)
            out.insert(out.end(), im.letters.begin(), im.letters.end());
        else
            for (auto it = im.letters.rbegin(); it != im.letters.rend(); ++it)
                out.push_back({it->first, -it->second});
    }
    return reduce(target_rank, std::move(out));
}

FreeSimplicialGroupTrunc gamma_truncation(int m, int N) {
    require(m >= 2, "m must be at least 2");
    require(m % 2 == 0, "m must be even");
    require(N >= m, "truncation must reach degree m");
    FreeSimplicialGroupTrunc g;
    g.m = m;
    g.N = N;
    g.gens.resize(N + 1);
    g.face.resize(N + 1);
    g.degen.resize(N + 1);
    for (int n = 0; n <= N; ++n) g.gens[n] = surjections(n, m - 1);
    for (int n = 0; n <= N; ++n) {
        int r = g.rank(n);
        if (n >= 1) {
            g.face[n].assign(n + 1, std::vector<FreeWord>(r));
            for (int i = 0; i <= n; ++i)
                for (int a = 0; a < r; ++a) {
                    // compose with the coface that skips i
                    std::vector<int> vals;
                    for (int k = 0; k <= n; ++k)
                        if (k != i) vals.push_back(g.gens[n][a].values[k]);
                    if (surjective(vals, m - 1)) {
                        int b = find_gen(g.gens[n - 1], {n - 1, m - 1, vals});
                        g.face[n][i][a] = FreeWord::gen(g.rank(n - 1), b);
                    } else {
                        g.face[n][i][a] = FreeWord::id(g.rank(n - 1));
                    }
                }
        }
        if (n < N) {
            g.degen[n].assign(n + 1, std::vector<FreeWord>(r));
            for (int j = 0; j <= n; ++j)
                for (int a = 0; a < r; ++a) {
                    // compose with the codegeneracy that repeats j
                    std::vector<int> vals;
                    for (int k = 0; k <= n + 1; ++k)
                        vals.push_back(g.gens[n][a].values[k <= j ? k : k - 1]);
                    int b = find_gen(g.gens[n + 1], {n + 1, m - 1, vals});
                    require(b >= 0, "degeneracy image not a generator");
                    g.degen[n][j][a] = FreeWord::gen(g.rank(n + 1), b);
                }
        }
    }
    // simplicial identities on all generators
    auto word_at = [&](int n, const std::vector<FreeWord>& images, const FreeWord& w) {
        return apply_hom(images, n >= 0 ? g.rank(n) : 0, w);
    };
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (int a = 0; a < g.rank(n); ++a) {
                    auto lhs = word_at(n - 2, g.face[n - 1][i], g.face[n][j][a]);
                    auto rhs = word_at(n - 2, g.face[n - 1][j - 1], g.face[n][i][a]);
                    if (!(lhs == rhs)) throw std::logic_error("face identity fails");
                }
    for (int n = 0; n + 1 < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (int a = 0; a < g.rank(n); ++a) {
                    auto lhs = word_at(n + 2, g.degen[n + 1][i], g.degen[n][j][a]);
                    auto rhs = word_at(n + 2, g.degen[n + 1][j + 1], g.degen[n][i][a]);
                    if (!(lhs == rhs)) throw std::logic_error("degeneracy identity fails");
                }
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (int a = 0; a < g.rank(n); ++a) {
                    auto v = word_at(n, g.face[n + 1][i], g.degen[n][j][a]);
                    FreeWord expect;
                    if (i == j || i == j + 1)
                        expect = FreeWord::gen(g.rank(n), a);
                    else if (i < j)
                        expect = word_at(n, g.degen[n - 1][j - 1], g.face[n][i][a]);
                    else
                        expect = word_at(n, g.degen[n - 1][j], g.face[n][i - 1][a]);
                    if (!(v == expect)) throw std::logic_error("mixed identity fails");
                }
    return g;
}

SimplicialAbelianTrunc abelianize(const FreeSimplicialGroupTrunc& g) {
    SimplicialAbelianTrunc a;
    a.N = g.N;
    a.rank.resize(g.N + 1);
    a.face.resize(g.N + 1);
    a.degen.resize(g.N + 1);
    for (int n = 0; n <= g.N; ++n) a.rank[n] = g.rank(n);
    auto matrix_of = [](const std::vector<FreeWord>& images, int rows) {
        SparseMat m(rows, static_cast<int>(images.size()));
        for (int col = 0; col < static_cast<int>(images.size()); ++col)
            for (auto [gen, e] : images[col].letters) m.add_at(gen, col, Rat(e));
        return m;
    };
    for (int n = 1; n <= g.N; ++n)
        for (int i = 0; i <= n; ++i)
            a.face[n].push_back(matrix_of(g.face[n][i], a.rank[n - 1]));
    for (int n = 0; n < g.N; ++n)
        for (int j = 0; j <= n; ++j)
            a.degen[n].push_back(matrix_of(g.degen[n][j], a.rank[n + 1]));
    return a;
}

ComplexPtr alternating_chains(const SimplicialAbelianTrunc& a) {
    std::vector<int> dims(a.rank.begin(), a.rank.end());
    std::map<int, SparseMat> d;
    for (int n = 1; n <= a.N; ++n) {
        SparseMat m(a.rank[n - 1], a.rank[n]);
        for (int i = 0; i <= n; ++i) {
            SparseMat term = a.face[n][i];
            if (i % 2 == 1) term = term * Rat(-1);
            m = m + term;
        }
        if (!m.is_zero()) d[n] = std::move(m);
    }
    return ChainComplex::make(0, std::move(dims), std::move(d));
}

}  // namespace tothom
