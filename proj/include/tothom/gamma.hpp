#pragma once

#include "tothom/chain.hpp"
#include "tothom/freeword.hpp"

namespace tothom {

/// Monotone surjection [n] ->> [m1] recorded by its value list.
struct Surjection {
    int n = 0, m1 = 0;
    std::vector<int> values;  // size n+1, weakly increasing, onto 0..m1

    bool operator==(const Surjection& o) const { return values == o.values; }
};

/// Truncated free simplicial group: degree n is the free group on the
/// monotone surjections [n] ->> [m-1]; faces and degeneracies are
/// homomorphisms recorded on generators (a generator word or the identity).
struct FreeSimplicialGroupTrunc {
    int m = 0, N = 0;
    std::vector<std::vector<Surjection>> gens;             // gens[n]
    std::vector<std::vector<std::vector<FreeWord>>> face;  // face[n][i][g], n >= 1
    std::vector<std::vector<std::vector<FreeWord>>> degen; // degen[n][j][g], n < N

    int rank(int n) const { return static_cast<int>(gens[n].size()); }
};

/// Image of a word under the homomorphism sending generator g to images[g].
FreeWord apply_hom(const std::vector<FreeWord>& images, int target_rank,
                   const FreeWord& w);

/// Gamma(m) up to degree N; m must be even, m >= 2, N >= m. Simplicial
/// identities are verified on all generators.
FreeSimplicialGroupTrunc gamma_truncation(int m, int N);

/// Degreewise abelianization: rational vector spaces with face/degeneracy
/// matrices (exponent sums of the generator images).
struct SimplicialAbelianTrunc {
    int N = 0;
    std::vector<int> rank;
    std::vector<std::vector<SparseMat>> face, degen;
};

SimplicialAbelianTrunc abelianize(const FreeSimplicialGroupTrunc& g);

/// Chains with the alternating-sum differential.
ComplexPtr alternating_chains(const SimplicialAbelianTrunc& a);

}  // namespace tothom
