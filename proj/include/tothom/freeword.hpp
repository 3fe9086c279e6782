#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tothom {

/// Freely reduced word in the free group on `rank` generators. Letters are
/// (generator index, exponent +-1); generator i prints as 'a'+i, its inverse
/// as the corresponding capital.
struct FreeWord {
    int rank = 0;
    std::vector<std::pair<int, int>> letters;

    static FreeWord id(int rank) { return {rank, {}}; }
    static FreeWord gen(int rank, int i, int e = 1);
    /// Parse "abA" style strings.
    static FreeWord parse(int rank, const std::string& s);

    bool is_id() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
    std::string str() const;

    bool operator==(const FreeWord& o) const {
        return rank == o.rank && letters == o.letters;
    }
    bool operator<(const FreeWord& o) const { return letters < o.letters; }
};

/// Free reduction of an arbitrary letter sequence.
FreeWord reduce(int rank, std::vector<std::pair<int, int>> letters);

FreeWord concat(const FreeWord& u, const FreeWord& v);
FreeWord inverse(const FreeWord& u);
/// u^h = h^{-1} u h, reduced.
FreeWord conjugate(const FreeWord& u, const FreeWord& h);
FreeWord power(const FreeWord& u, int k);

/// Cyclic reduction u = p * core * p^{-1}; returns (core, p).
std::pair<FreeWord, FreeWord> cyclic_reduce(const FreeWord& u);

/// Lexicographically least cyclic rotation of the cyclic reduction: the
/// canonical representative of the conjugacy class.
FreeWord canonical_rep(const FreeWord& u);

struct ConjugatorWitness {
    FreeWord source, target, h;  // source^h = target

    bool check() const { return conjugate(source, h) == target; }
};

struct ConjugacyResult {
    FreeWord rep_u, rep_v;
    bool conjugate = false;
    std::optional<ConjugatorWitness> witness;
};

ConjugacyResult free_conjugacy(const FreeWord& u, const FreeWord& v);

/// y = root^k with root not a proper power; y must not be the identity.
std::pair<FreeWord, int> primitive_root(const FreeWord& y);

}  // namespace tothom
