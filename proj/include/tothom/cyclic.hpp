#pragma once

#include "tothom/chain.hpp"
#include "tothom/freeword.hpp"
#include "tothom/group.hpp"

namespace tothom {

/// Truncated simplicial set with explicit finite cell tables.
struct SimplicialSetTrunc {
    int N = 0;
    std::vector<int> cells;                            // counts, degrees 0..N
    std::vector<std::vector<std::vector<int>>> face;   // face[n][i][c], n >= 1
    std::vector<std::vector<std::vector<int>>> degen;  // degen[n][j][c], n < N

    void validate() const;
};

/// Simplicial set with cyclic operators t_n of order n+1.
struct CyclicSetTrunc {
    SimplicialSetTrunc s;
    std::vector<std::vector<int>> t;  // t[n][c]

    void validate() const;  // simplicial, t^{n+1} = id, cyclic-face relations
};

/// Unnormalized chains with the alternating-sum differential.
ComplexPtr chains(const SimplicialSetTrunc& s);

/// N^cy(G) up to level N with its component decomposition by the conjugacy
/// class of g_0 g_1 ... g_n. Cell (g_0,...,g_n) has index sum g_i |G|^i.
struct NcyDecomposition {
    FiniteGroup G;
    CyclicSetTrunc X;
    std::vector<int> class_rep;               // one element per component
    std::vector<std::vector<int>> component;  // component[n][cell]

    int components() const { return static_cast<int>(class_rep.size()); }
};
NcyDecomposition ncy_truncated(const FiniteGroup& G, int N);

/// The cells of one component as a simplicial set with restricted cyclic ops.
struct ComponentCells {
    SimplicialSetTrunc s;
    std::vector<std::vector<int>> t;
    std::vector<std::vector<int>> global_id;  // local cell -> N^cy cell
};
ComponentCells component_cells(const NcyDecomposition& d, int comp);

/// Hochschild and cyclic data of a cyclic set: chains, Connes lambda-quotient
/// C_n / im(1 - (-1)^n t), the B operator, and homology dims on the reliable
/// range 0..N-1.
struct CyclicComplexes {
    ComplexPtr ch;
    ComplexPtr lambda;
    std::map<int, SparseMat> lambda_proj, lambda_lift;
    GradedMap B;  // degree +1 on ch; zero block at the truncation top
    std::vector<int> hh, hc;
};
CyclicComplexes cyclic_complexes(const SimplicialSetTrunc& s,
                                 const std::vector<std::vector<int>>& t);
CyclicComplexes cyclic_homology(const FiniteGroup& G, int N);

/// Nerve of a subgroup (bar construction, cells = tuples of elements).
SimplicialSetTrunc nerve(const FiniteGroup& G, const std::vector<int>& subgroup, int N);

/// The composite BC_y -> N^cy(G)_{<y>}: [c_1|...|c_n] maps to
/// ((c_1...c_n)^{-1} y, c_1, ..., c_n). Simpliciality and injectivity are
/// verified on construction.
struct BurgheleaMap {
    int y = 0;
    SimplicialSetTrunc bcy;
    ComponentCells target;
    std::vector<std::vector<int>> cell_map;  // per degree: bcy cell -> local cell
    ChainMap chain_map;                      // chains(bcy) -> chains(target.s)
};
BurgheleaMap burghelea_maps(const FiniteGroup& G, int y, int N);

/// A nontrivial free-group conjugacy class with its primitive root.
struct ClassData {
    FreeWord rep, root;
    int k = 1;  // rep = root^k up to conjugacy
};

/// Canonical representatives of all nontrivial classes with representative
/// length at most L in the free group of the given rank.
std::vector<ClassData> classes_in_window(int rank, int L);

/// Rational small model of the ~CC complex: one Q in degree 0 per nontrivial
/// class plus the BF (x) CC(Q) identity summand; zero differential.
ComplexPtr wtcc_small_model(int rank, const std::vector<ClassData>& classes, int N);

}  // namespace tothom
