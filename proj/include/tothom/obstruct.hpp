#pragma once

#include "tothom/simplicial.hpp"

namespace tothom {

/// Columnwise map of alternating-sum bicomplexes that commutes with the
/// horizontal differentials only up to chosen stage-1 homotopies:
/// f[n-1] . dC[n] - dD[n] . f[n] = d . s1[n] + s1[n] . d.
struct HomotopySimplicialMap {
    Bicomplex C, D;
    std::vector<ChainMap> f;    // f[n]: C.column[n] -> D.column[n]
    std::vector<GradedMap> s1;  // s1[n]: C.column[n] -> D.column[n-1], degree +1; n >= 1

    int cols() const { return C.cols(); }
    void validate() const;
};

/// Eq-style stage-1 solve for one square: finds s with
/// f_prev . dC - dD . f = d s + s d, if the square homotopy-commutes.
std::optional<GradedMap> solve_stage1(const ChainMap& f_n, const ChainMap& f_prev,
                                      const ChainMap& dC, const ChainMap& dD);

/// The induced chain map Tot(Gr^2_n C) -> Tot(Gr^2_n D) built from f and the
/// stage-1 witness at column n. Returns the two Gr complexes with the map.
struct Gr2Map {
    GrComplex grC, grD;
    ChainMap map;
};
Gr2Map gr2_map(const HomotopySimplicialMap& f, int n);

/// Tower witnesses g^(r)_j: column j -> column j-r, Hom-degree r, satisfying
/// D(g^(r)_j) = (-1)^(j-r) (g^(r-1)_{j-1} dC_j - dD_{j-r+1} g^(r-1)_j).
/// Level 1 is fixed as g^(1)_j = (-1)^(j-1) s1[j].
using TowerWitnesses = std::map<int, std::map<int, GradedMap>>;

/// Representative and indeterminacy of T(k,n;f), a class of degree-(k-1)
/// maps in [Sigma^{k-1} C_{n+k}, D_n] realized as H_{k-1} Hom(C_{n+k}, D_n).
struct ObstructionClass {
    int order = 0, position = 0;
    GradedMap representative;     // C.column[n+k] -> D.column[n], Hom-degree k-1
    HomotopyClassSpace classes;   // H_{k-1} Hom(C_{n+k}, D_n)
    std::vector<Rat> coords;      // class of the representative
    Subspace indeterminacy;       // subspace of the class coordinate space

    bool vanishes() const;  // coords lie in the indeterminacy subspace
};

/// For k > 2 the witnesses for all lower brackets must be supplied (levels
/// 2..k-2 of the tower over columns n..n+k); missing or invalid witnesses
/// raise an error.
ObstructionClass toda_bracket(const HomotopySimplicialMap& f, int k, int n,
                              const TowerWitnesses& lower = {});

/// Exact vanishing decision; when the representative itself is nullhomotopic
/// the witness is returned.
std::pair<bool, std::optional<GradedMap>> bracket_vanishes(const ObstructionClass& t);

struct ExtendResult {
    GrComplex grC, grD;
    std::optional<ChainMap> map;                 // present on success
    std::optional<ObstructionClass> obstruction;  // first nonvanishing bracket
    TowerWitnesses witnesses;                     // solved tower on success
};

/// Extends f across the k layers of Gr^k_n = F_n / F_{n-k} (columns
/// n-k+1..n). Succeeds iff the required brackets vanish; on failure reports
/// the first nonvanishing bracket in (order, position) order.
ExtendResult extend_tower(const HomotopySimplicialMap& f, int k, int n);

/// Chain complex of complexes up to homotopy: consecutive composites vanish
/// only up to the recorded witnesses h[n]: D(h[n]) = d[n-1] . d[n].
struct HomotopyChainObject {
    std::vector<ComplexPtr> objects;  // C_0..C_N
    std::vector<ChainMap> d;          // d[n]: C_n -> C_{n-1}; d[0] unused
    std::vector<GradedMap> h;         // h[n]: C_n -> C_{n-2}, degree +1; n >= 2

    int N() const { return static_cast<int>(objects.size()) - 1; }
    void validate() const;
};

struct TowerStage {
    int index = 0;
    ComplexPtr T;
    ChainMap psi;         // psi_k: Sigma^{k-1} C_k -> T_{k-1} (k >= 1)
    ChainMap inclusion;   // T_{k-1} -> T_k
    ChainMap projection;  // T_k -> Sigma^k C_k
};

struct BnBracket {
    int n = 0;
    GradedMap representative;  // phi_n: Sigma^{n-2} C_n -> T_{n-2}, a chain map
    bool vanishes = false;
    int class_dim = 0;  // dim of [Sigma^{n-2} C_n, T_{n-2}]
};

struct BnResult {
    std::vector<TowerStage> stages;
    std::vector<BnBracket> brackets;      // for n = 2..N while construction runs
    std::optional<int> obstruction_at;    // first n with phi_n not nullhomotopic

    bool totalizable() const { return !obstruction_at.has_value(); }
    const ComplexPtr& t_infinity() const { return stages.back().T; }
};

BnResult bn_totalization_tower(const HomotopyChainObject& x);

}  // namespace tothom
