#pragma once

#include "tothom/cyclic.hpp"
#include "tothom/gamma.hpp"
#include "tothom/obstruct.hpp"
#include "tothom/specseq.hpp"

namespace tothom {

/// One column of the D-window: the letter-count-<=L part of the cyclic bar
/// construction of the column group, with its lambda complex. Vertical
/// degrees are truncated at R so the pair's total complex is bounded.
struct WindowedColumn {
    int rank = 0, R = 0, L = 0;
    bool abelian = false;
    SimplicialSetTrunc s;
    std::vector<std::vector<int>> t;
    std::vector<std::vector<std::vector<FreeWord>>> cells;  // [deg][cell] = tuple
    std::vector<std::map<std::vector<FreeWord>, int>> index;
    CyclicComplexes cx;
    std::vector<FreeWord> classes;  // canonical reps inside the window, fixed order

    int cell_index(int deg, const std::vector<FreeWord>& tuple) const;
    /// Coordinate of a cell's class in the lambda complex; -1 if the orbit dies.
    int lambda_coord(int deg, int cell) const;
};

/// The windowed comparison pair: C-side columns are the small models (degree-0
/// basis: identity summand first, then the classes in column order), D-side
/// columns are windowed lambda complexes; f sends generators to standard
/// cycle representatives and s1 records the conjugation-path homotopies
/// (zero for the abelian pair, where every square commutes strictly).
struct WindowedBicomplexPair {
    int m = 0, N = 0, L = 0;
    bool abelian = false;
    std::vector<WindowedColumn> col;
    HomotopySimplicialMap map;  // C -> D with stage-1 witnesses
    Totalization totC, totD;
    int iota_coord_C = -1, iota_coord_D = -1;  // tracked class in Tot_2 coords
};

/// Free pair for the given even m (only m = 2 is implemented), columns
/// 0..N with column n truncated vertically at N - n, letter window L.
WindowedBicomplexPair build_example_bicomplexes(int m, int N, int L);

/// Same shape over the abelianized columns Z^rank; strictly commuting.
WindowedBicomplexPair build_abelian_bicomplexes(int m, int N, int L);

/// Tot(f): requires the strictly commuting (abelian) pair.
ChainMap total_map(const WindowedBicomplexPair& p);

/// Largest total degree n such that every bicomplex cell in total degrees
/// <= n+1 sits strictly below its column's vertical truncation top. Window
/// homology is reliable there, so comparisons are meaningful up to degree n.
int stable_range(const WindowedBicomplexPair& p);

/// Fate of one Tot_2 coordinate's class in the cell (s,t) = (1,1) of the
/// column-filtration spectral sequence, on pages 2 and 3.
struct WindowVerdict {
    int e2_dim = 0, e3_dim = 0;
    bool alive_e2 = false, alive_e3 = false;
};
WindowVerdict window_verdict(const Totalization& t, int coord);

}  // namespace tothom
