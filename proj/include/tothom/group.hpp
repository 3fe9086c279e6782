#pragma once

#include <string>
#include <vector>

namespace tothom {

/// Finite group by multiplication table; elements are 0..order-1 with the
/// identity at a fixed index.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> mul;  // mul[g][h] = g*h
    std::vector<int> inv;
    int e = 0;

    int op(int g, int h) const { return mul[g][h]; }
    int conj(int g, int h) const { return op(op(inv[h], g), h); }  // g^h

    /// Checks identity, inverses, and full associativity.
    void validate() const;

    std::vector<std::vector<int>> conjugacy_classes() const;
    std::vector<int> centralizer(int y) const;

    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric3();
    /// Table file: first line the order, then order lines of order entries.
    static FiniteGroup from_table(const std::string& path);
};

}  // namespace tothom
