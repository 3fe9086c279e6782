#include "tothom/freeword.hpp"

#include <algorithm>
#include <stdexcept>

namespace tothom {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

/// Rotation of w starting at position i.
std::vector<std::pair<int, int>> rotate(const std::vector<std::pair<int, int>>& w, int i) {
    std::vector<std::pair<int, int>> out(w.begin() + i, w.end());
    out.insert(out.end(), w.begin(), w.begin() + i);
    return out;
}

/// Fixed letter order: generator index ascending, positive before inverse.
bool letter_less(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
}

bool word_less(const std::vector<std::pair<int, int>>& a,
               const std::vector<std::pair<int, int>>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        letter_less);
}

}  // namespace

FreeWord FreeWord::gen(int rank, int i, int e) {
    require(i >= 0 && i < rank, "generator index out of range");
    require(e == 1 || e == -1, "exponent must be +-1");
    return {rank, {{i, e}}};
}

FreeWord FreeWord::parse(int rank, const std::string& s) {
    std::vector<std::pair<int, int>> letters;
    for (char c : s) {
        if (c >= 'a' && c <= 'z')
            letters.push_back({c - 'a', 1});
        else if (c >= 'A' && c <= 'Z')
            letters.push_back({c - 'A', -1});
        else
            throw std::invalid_argument("bad word character");
        require(letters.back().first < rank, "generator outside rank");
    }
    return reduce(rank, std::move(letters));
}

std::string FreeWord::str() const {
    if (letters.empty()) return "1";
    std::string s;
    for (auto [i, e] : letters) s += static_cast<char>((e > 0 ? 'a' : 'A') + i);
    return s;
}

FreeWord reduce(int rank, std::vector<std::pair<int, int>> letters) {
    std::vector<std::pair<int, int>> out;
    for (auto& l : letters) {
        require(l.first >= 0 && l.first < rank, "generator outside rank");
        require(l.second == 1 || l.second == -1, "exponent must be +-1");
        if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
            out.pop_back();
        else
            out.push_back(l);
    }
    return {rank, std::move(out)};
}

FreeWord concat(const FreeWord& u, const FreeWord& v) {
    require(u.rank == v.rank, "rank mismatch");
    auto letters = u.letters;
    letters.insert(letters.end(), v.letters.begin(), v.letters.end());
    return reduce(u.rank, std::move(letters));
}

FreeWord inverse(const FreeWord& u) {
    std::vector<std::pair<int, int>> out;
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
        out.push_back({it->first, -it->second});
    return {u.rank, std::move(out)};
}

FreeWord conjugate(const FreeWord& u, const FreeWord& h) {
    return concat(concat(inverse(h), u), h);
}

FreeWord power(const FreeWord& u, int k) {
    FreeWord base = k < 0 ? inverse(u) : u;
    FreeWord out = FreeWord::id(u.rank);
    for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
    return out;
}

std::pair<FreeWord, FreeWord> cyclic_reduce(const FreeWord& u) {
    FreeWord core = u;
    FreeWord p = FreeWord::id(u.rank);
    while (core.length() >= 2 && core.letters.front().first == core.letters.back().first &&
           core.letters.front().second == -core.letters.back().second) {
        p = concat(p, {u.rank, {core.letters.front()}});
        core.letters.erase(core.letters.begin());
        core.letters.pop_back();
    }
    return {core, p};
}

FreeWord canonical_rep(const FreeWord& u) {
    auto [core, p] = cyclic_reduce(u);
    if (core.is_id()) return core;
    auto best = core.letters;
    for (int i = 1; i < core.length(); ++i) {
        auto r = rotate(core.letters, i);
        if (word_less(r, best)) best = r;
    }
    return {u.rank, std::move(best)};
}

ConjugacyResult free_conjugacy(const FreeWord& u, const FreeWord& v) {
    require(u.rank == v.rank, "rank mismatch");
    ConjugacyResult out;
    out.rep_u = canonical_rep(u);
    out.rep_v = canonical_rep(v);
    out.conjugate = out.rep_u == out.rep_v;
    if (!out.conjugate) return out;
    auto [cu, p] = cyclic_reduce(u);
    auto [cv, q] = cyclic_reduce(v);
    // find the rotation of cu equal to cv: cv = a1^{-1} cu a1 for the prefix a1
    FreeWord a1 = FreeWord::id(u.rank);
    for (int i = 0; i < std::max(1, cu.length()); ++i) {
        if (rotate(cu.letters, i) == cv.letters) {
            a1 = FreeWord{u.rank, {cu.letters.begin(), cu.letters.begin() + i}};
            break;
        }
    }
    FreeWord h = concat(concat(p, a1), inverse(q));
    ConjugatorWitness w{u, v, h};
    if (!w.check()) throw std::logic_error("conjugator construction failed");
    out.witness = std::move(w);
    return out;
}

std::pair<FreeWord, int> primitive_root(const FreeWord& y) {
    require(!y.is_id(), "identity has no primitive root");
    auto [core, p] = cyclic_reduce(y);
    int n = core.length();
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        FreeWord cand{y.rank, {core.letters.begin(), core.letters.begin() + d}};
        if (power(cand, n / d) == core)
            return {conjugate(cand, inverse(p)), n / d};
    }
    throw std::logic_error("primitive root search failed");
}

}  // namespace tothom
