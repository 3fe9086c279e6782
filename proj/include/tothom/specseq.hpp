#pragma once

#include <array>
#include "tothom/simplicial.hpp"

namespace tothom {

/// Probe functor [S,-] (covariant) or [-,S] (contravariant) applied degreewise
/// as homology of the Hom complex.
struct ProbeComplex {
    ComplexPtr S;
    bool contravariant = false;

    /// Q in degree 0, covariant: the identity probe.
    static ProbeComplex trivial() { return {ChainComplex::point(0), false}; }
};

/// The probe applied to a filtered complex: the Hom complex carries the
/// induced coordinate filtration (for [-,S], maps vanishing on lower stages,
/// reindexed so levels again increase with the filtration).
FilteredComplex apply_probe(const FilteredComplex& filt, const ProbeComplex& probe);

/// One page of the homological spectral sequence of a bounded filtered
/// complex. Cells are keyed by (s, t) with s the filtration degree and t the
/// complementary degree (total degree s + t); empty cells are omitted. The
/// differential d_r has bidegree (-r, r-1) and is stored on its source cell.
struct SpectralSequencePage {
    int r = 0;
    std::map<std::pair<int, int>, Subquotient> cell;  // subquotient of Tot_{s+t}
    std::map<std::pair<int, int>, SparseMat> d;       // (s,t) -> (s-r, t+r-1)

    int dim(int s, int t) const;
    SparseMat d_at(int s, int t) const;  // zero matrix when absent
};

/// Pages E_1..E_{r_max} of the probed filtered complex, by Z/B subquotients.
std::vector<SpectralSequencePage> pages(const FilteredComplex& filt,
                                        const ProbeComplex& probe, int r_max);

/// Cohomological reindexing of a cell per the usual convention: the (s,t)
/// report row for which d_r maps E_r^{s,t} -> E_r^{s+r, t+r-1}.
std::pair<int, int> cohomological_index(const FilteredComplex& filt, int s_h, int t_h);

struct AbutmentReport {
    // (total degree, E_infinity total dim, homology dim) for each mismatch
    std::vector<std::array<int, 3>> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Strong-convergence check: per total degree the E_infinity dims across s
/// must sum to the homology of the probed total complex.
AbutmentReport abutment_check(const std::vector<SpectralSequencePage>& pg,
                              const FilteredComplex& filt, const ProbeComplex& probe);

/// Page maps induced by a filtration-preserving chain map f: TotC -> TotD.
/// For a contravariant probe the induced maps run from the D-side pages to
/// the C-side pages; source/target below are named after the induced
/// direction. Throws if f does not preserve the filtrations.
struct InducedPageMaps {
    std::vector<SpectralSequencePage> source_pages, target_pages;
    // maps[r-1][(s,t)]: cell of source page r -> same (s,t) cell of target
    std::vector<std::map<std::pair<int, int>, SparseMat>> maps;
};

InducedPageMaps induced_page_maps(const ChainMap& f, const FilteredComplex& fc,
                                  const FilteredComplex& fd, const ProbeComplex& probe,
                                  int r_max);

}  // namespace tothom
