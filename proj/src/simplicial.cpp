#include "tothom/simplicial.hpp"

#include <stdexcept>

namespace tothom {

namespace {
void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}
bool maps_equal(const GradedMap& a, const GradedMap& b) { return (a - b).is_zero(); }
}  // namespace

void SimplicialChainObject::validate() const {
    require(static_cast<int>(objects.size()) == N + 1, "objects size != N+1");
    require(static_cast<int>(faces.size()) >= N + 1 || N == 0, "faces table too short");
    for (int n = 1; n <= N; ++n) {
        require(static_cast<int>(faces[n].size()) == n + 1, "face count at degree " +
                                                                std::to_string(n));
        for (int i = 0; i <= n; ++i) {
            require(faces[n][i].source() == objects[n] && faces[n][i].target() == objects[n - 1],
                    "face endpoints at degree " + std::to_string(n));
        }
    }
    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                require(maps_equal(compose(faces[n - 1][i], faces[n][j]).g,
                                   compose(faces[n - 1][j - 1], faces[n][i]).g),
                        "face identity fails at n=" + std::to_string(n));
    if (degens.empty()) return;
    for (int n = 0; n < N; ++n) {
        if (n >= static_cast<int>(degens.size()) || degens[n].empty()) continue;
        require(static_cast<int>(degens[n].size()) == n + 1,
                "degeneracy count at degree " + std::to_string(n));
        for (int j = 0; j <= n; ++j)
            require(degens[n][j].source() == objects[n] && degens[n][j].target() == objects[n + 1],
                    "degeneracy endpoints");
        // s_i s_j = s_{j+1} s_i for i <= j
        if (n + 1 < N && n + 1 < static_cast<int>(degens.size()) && !degens[n + 1].empty())
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    require(maps_equal(compose(degens[n + 1][i], degens[n][j]).g,
                                       compose(degens[n + 1][j + 1], degens[n][i]).g),
                            "degeneracy identity fails");
        // d_i s_j relations
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const ChainMap& ds = faces[n + 1][i];
                GradedMap lhs = compose(ds, degens[n][j]).g;
                if (i < j) {
                    require(n >= 1, "identity range");
                    require(maps_equal(lhs, compose(degens[n - 1][j - 1], faces[n][i]).g),
                            "d_i s_j (i<j) fails");
                } else if (i == j || i == j + 1) {
                    GradedMap id(objects[n], objects[n], 0);
                    for (int m = objects[n]->lo(); m <= objects[n]->hi(); ++m)
                        if (objects[n]->dim(m) > 0)
                            id.comp[m] = SparseMat::identity(objects[n]->dim(m));
                    require(maps_equal(lhs, id), "d_i s_j (identity case) fails");
                } else {
                    require(maps_equal(lhs, compose(degens[n - 1][j], faces[n][i - 1]).g),
                            "d_i s_j (i>j+1) fails");
                }
            }
    }
}

void Bicomplex::validate() const {
    for (int n = 1; n < cols(); ++n) {
        require(horiz[n].source() == column[n] && horiz[n].target() == column[n - 1],
                "horizontal map endpoints at column " + std::to_string(n));
        if (n >= 2)
            require(compose(horiz[n - 1], horiz[n]).g.is_zero(),
                    "horizontal d^2 != 0 at column " + std::to_string(n));
    }
}

Bicomplex alternating_sum(const SimplicialChainObject& x) {
    x.validate();
    Bicomplex b;
    b.column = x.objects;
    b.horiz.resize(x.N + 1);
    for (int n = 1; n <= x.N; ++n) {
        GradedMap sum = x.faces[n][0].g;
        for (int i = 1; i <= n; ++i)
            sum = sum + x.faces[n][i].g * ((i % 2 == 0) ? Rat(1) : Rat(-1));
        ChainMap m;
        m.g = std::move(sum);
        b.horiz[n] = std::move(m);
    }
    b.validate();
    return b;
}

const std::vector<int>& FilteredComplex::levels(int degree) const {
    static const std::vector<int> empty;
    int k = degree - total->lo();
    if (k < 0 || k >= static_cast<int>(level.size())) return empty;
    return level[k];
}

Subspace FilteredComplex::stage(int s, int degree) const {
    const auto& lv = levels(degree);
    int count = 0;
    for (int l : lv)
        if (l <= s) ++count;
    SparseMat basis(total->dim(degree), count);
    int c = 0;
    for (int i = 0; i < static_cast<int>(lv.size()); ++i)
        if (lv[i] <= s) basis.set(i, c++, Rat(1));
    return {total->dim(degree), std::move(basis)};
}

void FilteredComplex::validate() const {
    for (int m = total->lo(); m <= total->hi(); ++m) {
        require(static_cast<int>(levels(m).size()) == total->dim(m),
                "level table size at degree " + std::to_string(m));
        SparseMat d = total->d(m);
        const auto& out = levels(m - 1);
        const auto& in = levels(m);
        for (int i = 0; i < d.rows(); ++i)
            for (const auto& [j, v] : d.row(i))
                require(out[i] <= in[j], "differential raises filtration level");
    }
}

int Totalization::offset(int m, int n) const {
    int off = 0;
    for (int c = 0; c < n; ++c) off += column[c]->dim(m - c);
    return off;
}

SparseMat Totalization::block_inclusion(int m, int n) const {
    int dim = column[n]->dim(m - n);
    SparseMat inc(tot->dim(m), dim);
    int off = offset(m, n);
    for (int i = 0; i < dim; ++i) inc.set(off + i, i, Rat(1));
    return inc;
}

Totalization totalize(const Bicomplex& b) {
    b.validate();
    int nc = b.cols();
    int lo = b.column[0]->lo(), hi = b.column[0]->hi();
    for (int n = 0; n < nc; ++n) {
        lo = std::min(lo, b.column[n]->lo() + n);
        hi = std::max(hi, b.column[n]->hi() + n);
    }
    Totalization t;
    t.column = b.column;
    std::vector<int> dims;
    std::vector<std::vector<int>> level;
    for (int m = lo; m <= hi; ++m) {
        int total = 0;
        std::vector<int> lv;
        for (int n = 0; n < nc; ++n) {
            int d = b.column[n]->dim(m - n);
            total += d;
            lv.insert(lv.end(), d, n);
        }
        dims.push_back(total);
        level.push_back(std::move(lv));
    }
    auto offset = [&](int m, int n) {
        int off = 0;
        for (int c = 0; c < n; ++c) off += b.column[c]->dim(m - c);
        return off;
    };
    std::map<int, SparseMat> diff;
    for (int m = lo + 1; m <= hi; ++m) {
        SparseMat d(dims[m - 1 - lo], dims[m - lo]);
        for (int n = 0; n < nc; ++n) {
            int k = m - n;  // internal degree
            if (b.column[n]->dim(k) == 0) continue;
            int in_off = offset(m, n);
            // horizontal part: to column n-1, same internal degree
            if (n >= 1) {
                SparseMat h = b.horiz[n].at(k);
                int out_off = offset(m - 1, n - 1);
                for (int i = 0; i < h.rows(); ++i)
                    for (const auto& [j, v] : h.row(i)) d.add_at(out_off + i, in_off + j, v);
            }
            // internal part with sign (-1)^n: to column n, internal degree k-1
            SparseMat dv = b.column[n]->d(k);
            Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
            int out_off = offset(m - 1, n);
            for (int i = 0; i < dv.rows(); ++i)
                for (const auto& [j, v] : dv.row(i)) d.add_at(out_off + i, in_off + j, sign * v);
        }
        if (!d.is_zero()) diff[m] = std::move(d);
    }
    t.tot = ChainComplex::make(lo, std::move(dims), std::move(diff));
    t.filt.total = t.tot;
    t.filt.length = nc - 1;
    t.filt.level = std::move(level);
    t.filt.validate();
    return t;
}

GrComplex gr_subquotient(const FilteredComplex& f, int l, int n) {
    require(n >= 0 && n <= f.length, "gr: stage out of range");
    require(l >= 1 && l <= n + 1, "gr: layer count out of range");
    const auto& total = f.total;
    GrComplex g;
    std::vector<int> dims;
    std::vector<std::vector<int>> coords;
    for (int m = total->lo(); m <= total->hi(); ++m) {
        const auto& lv = f.levels(m);
        std::vector<int> cs;
        for (int i = 0; i < static_cast<int>(lv.size()); ++i)
            if (lv[i] <= n && lv[i] > n - l) cs.push_back(i);
        dims.push_back(static_cast<int>(cs.size()));
        coords.push_back(std::move(cs));
    }
    std::map<int, SparseMat> diff;
    for (int m = total->lo() + 1; m <= total->hi(); ++m) {
        const auto& in = coords[m - total->lo()];
        const auto& out = coords[m - 1 - total->lo()];
        if (in.empty() || out.empty()) continue;
        std::vector<int> out_pos(total->dim(m - 1), -1);
        for (int i = 0; i < static_cast<int>(out.size()); ++i) out_pos[out[i]] = i;
        SparseMat d(static_cast<int>(out.size()), static_cast<int>(in.size()));
        SparseMat full = total->d(m);
        for (int j = 0; j < static_cast<int>(in.size()); ++j) {
            // column of d restricted to the window; entries below drop (quotient)
            for (int i = 0; i < full.rows(); ++i) {
                Rat v = full.at(i, in[j]);
                if (v != 0 && out_pos[i] >= 0) d.set(out_pos[i], j, v);
            }
        }
        if (!d.is_zero()) diff[m] = std::move(d);
    }
    g.complex = ChainComplex::make(total->lo(), std::move(dims), std::move(diff));
    g.coords = std::move(coords);
    return g;
}

}  // namespace tothom
