#include "tothom/specseq.hpp"

#include <stdexcept>

namespace tothom {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

/// Z^r_{s,n} = {x in F_s : dx in F_{s-r}} as a subspace of Tot_n.
Subspace z_space(const FilteredComplex& f, int r, int s, int n) {
    if (s < 0) return Subspace::zero(f.total->dim(n));
    Subspace fs = f.stage(s, n);
    if (r <= 0 || fs.dim() == 0) return fs;
    SparseMat da = f.total->d(n) * fs.basis;
    const auto& lv = f.levels(n - 1);
    std::vector<int> high;
    for (int i = 0; i < static_cast<int>(lv.size()); ++i)
        if (lv[i] > s - r) high.push_back(i);
    SparseMat restr(static_cast<int>(high.size()), da.cols());
    for (int i = 0; i < static_cast<int>(high.size()); ++i)
        for (const auto& [j, v] : da.row(high[i])) restr.set(i, j, v);
    SparseMat k = kernel_basis(restr);
    return {f.total->dim(n), fs.basis * k};
}

/// E^r_{s,n} = Z^r_{s,n} / (Z^{r-1}_{s-1,n} + d Z^{r-1}_{s+r-1,n+1}).
Subquotient page_cell(const FilteredComplex& f, int r, int s, int n) {
    Subspace w = z_space(f, r, s, n);
    Subspace u = sum(z_space(f, r - 1, s - 1, n),
                     span(f.total->d(n + 1) * z_space(f, r - 1, s + r - 1, n + 1).basis));
    return subquotient(w, u);
}

SpectralSequencePage build_page(const FilteredComplex& f, int r) {
    SpectralSequencePage p;
    p.r = r;
    for (int n = f.total->lo(); n <= f.total->hi(); ++n)
        for (int s = 0; s <= f.length; ++s) {
            Subquotient q = page_cell(f, r, s, n);
            if (q.dim > 0) p.cell[{s, n - s}] = std::move(q);
        }
    for (const auto& [key, q] : p.cell) {
        auto [s, t] = key;
        int n = s + t;
        auto target = p.cell.find({s - r, t + r - 1});
        if (target == p.cell.end()) continue;
        SparseMat m = target->second.proj * (f.total->d(n) * q.lift);
        if (!m.is_zero()) p.d[key] = std::move(m);
    }
    return p;
}

}  // namespace

FilteredComplex apply_probe(const FilteredComplex& filt, const ProbeComplex& probe) {
    require(probe.S != nullptr, "probe complex missing");
    FilteredComplex out;
    out.length = filt.length;
    ComplexPtr tot = filt.total;
    HomComplex hom = probe.contravariant ? HomComplex(tot, probe.S)
                                         : HomComplex(probe.S, tot);
    out.total = hom.complex();
    // coordinate levels mirror the Hom flattening: blocks by source degree k,
    // row-major within a block
    for (int n = out.total->lo(); n <= out.total->hi(); ++n) {
        std::vector<int> lv;
        if (probe.contravariant) {
            for (int k = tot->lo(); k <= tot->hi(); ++k) {
                int rows = probe.S->dim(k + n), cols = tot->dim(k);
                const auto& src = filt.levels(k);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j) lv.push_back(filt.length - src[j]);
            }
        } else {
            for (int k = probe.S->lo(); k <= probe.S->hi(); ++k) {
                int rows = tot->dim(k + n), cols = probe.S->dim(k);
                const auto& tgt = filt.levels(k + n);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j) lv.push_back(tgt[i]);
            }
        }
        out.level.push_back(std::move(lv));
    }
    out.validate();
    return out;
}

int SpectralSequencePage::dim(int s, int t) const {
    auto it = cell.find({s, t});
    return it == cell.end() ? 0 : it->second.dim;
}

SparseMat SpectralSequencePage::d_at(int s, int t) const {
    auto it = d.find({s, t});
    if (it != d.end()) return it->second;
    return SparseMat(dim(s - r, t + r - 1), dim(s, t));
}

std::vector<SpectralSequencePage> pages(const FilteredComplex& filt,
                                        const ProbeComplex& probe, int r_max) {
    require(r_max >= 1, "pages: need r_max >= 1");
    FilteredComplex pf = apply_probe(filt, probe);
    std::vector<SpectralSequencePage> out;
    for (int r = 1; r <= r_max; ++r) out.push_back(build_page(pf, r));
    return out;
}

std::pair<int, int> cohomological_index(const FilteredComplex& filt, int s_h, int t_h) {
    // flips the filtration axis so d_r has bidegree (+r, r-1)
    return {filt.length - s_h, t_h};
}

AbutmentReport abutment_check(const std::vector<SpectralSequencePage>& pg,
                              const FilteredComplex& filt, const ProbeComplex& probe) {
    FilteredComplex pf = apply_probe(filt, probe);
    require(!pg.empty() && pg.back().r > pf.length,
            "abutment_check: pages not computed to stabilization");
    const SpectralSequencePage& last = pg.back();
    AbutmentReport rep;
    for (int n = pf.total->lo(); n <= pf.total->hi(); ++n) {
        int einf = 0;
        for (int s = 0; s <= pf.length; ++s) einf += last.dim(s, n - s);
        int h = homology(pf.total, n).dim;
        if (einf != h) rep.mismatches.push_back({n, einf, h});
    }
    return rep;
}

InducedPageMaps induced_page_maps(const ChainMap& f, const FilteredComplex& fc,
                                  const FilteredComplex& fd, const ProbeComplex& probe,
                                  int r_max) {
    require(f.source() == fc.total && f.target() == fd.total,
            "induced_page_maps: map endpoints must be the filtered totals");
    require(fc.length == fd.length, "induced_page_maps: filtration lengths differ");
    for (int n = fc.total->lo(); n <= fc.total->hi(); ++n) {
        SparseMat m = f.at(n);
        const auto& in = fc.levels(n);
        const auto& out = fd.levels(n);
        for (int i = 0; i < m.rows(); ++i)
            for (const auto& [j, v] : m.row(i))
                require(out[i] <= in[j], "induced_page_maps: map does not preserve the "
                                         "filtration");
    }
    FilteredComplex ps = apply_probe(probe.contravariant ? fd : fc, probe);
    FilteredComplex pt = apply_probe(probe.contravariant ? fc : fd, probe);
    // the probed map in flattened coordinates
    std::map<int, SparseMat> comp;
    for (int n = ps.total->lo(); n <= ps.total->hi(); ++n) {
        if (ps.total->dim(n) == 0) continue;
        SparseMat m(pt.total->dim(n), ps.total->dim(n));
        if (probe.contravariant) {
            // unit (k,i,j) of Hom(TotD, S) -> sum_j' f[j,j'] unit (k,i,j')
            int in_off = 0, out_off = 0;
            for (int k = fd.total->lo(); k <= fd.total->hi(); ++k) {
                int rows = probe.S->dim(k + n);
                int ci = fd.total->dim(k), co = fc.total->dim(k);
                SparseMat fk = f.at(k);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < ci; ++j)
                        for (const auto& [jp, v] : fk.row(j))
                            m.set(out_off + i * co + jp, in_off + i * ci + j, v);
                in_off += rows * ci;
                out_off += rows * co;
            }
        } else {
            // unit (k,i,j) of Hom(S, TotC) -> sum_i' f[i',i] unit (k,i',j)
            int in_off = 0, out_off = 0;
            for (int k = probe.S->lo(); k <= probe.S->hi(); ++k) {
                int cols = probe.S->dim(k);
                int ri = fc.total->dim(k + n), ro = fd.total->dim(k + n);
                SparseMat fk = f.at(k + n);
                for (int ip = 0; ip < fk.rows(); ++ip)
                    for (const auto& [i, v] : fk.row(ip))
                        for (int j = 0; j < cols; ++j)
                            m.set(out_off + ip * cols + j, in_off + i * cols + j, v);
                in_off += ri * cols;
                out_off += ro * cols;
            }
        }
        if (!m.is_zero()) comp[n] = std::move(m);
    }
    ChainMap g(ps.total, pt.total, std::move(comp));
    InducedPageMaps out;
    for (int r = 1; r <= r_max; ++r) {
        out.source_pages.push_back(build_page(ps, r));
        out.target_pages.push_back(build_page(pt, r));
        std::map<std::pair<int, int>, SparseMat> table;
        const auto& sp = out.source_pages.back();
        const auto& tp = out.target_pages.back();
        for (const auto& [key, q] : sp.cell) {
            auto it = tp.cell.find(key);
            int rows = it == tp.cell.end() ? 0 : it->second.dim;
            if (rows == 0) {
                table[key] = SparseMat(0, q.dim);
                continue;
            }
            table[key] = it->second.proj * (g.at(key.first + key.second) * q.lift);
        }
        out.maps.push_back(std::move(table));
    }
    return out;
}

}  // namespace tothom
