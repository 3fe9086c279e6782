#include "tothom/group.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace tothom {

namespace {
void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}
}  // namespace

void FiniteGroup::validate() const {
    require(order >= 1, "empty group");
    require(static_cast<int>(mul.size()) == order, "table row count");
    require(static_cast<int>(inv.size()) == order, "inverse table size");
    require(e >= 0 && e < order, "identity index");
    for (const auto& row : mul) {
        require(static_cast<int>(row.size()) == order, "table column count");
        for (int x : row) require(x >= 0 && x < order, "table entry range");
    }
    for (int g = 0; g < order; ++g) {
        require(mul[e][g] == g && mul[g][e] == g, "identity law");
        require(mul[g][inv[g]] == e && mul[inv[g]][g] == e, "inverse law");
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                require(mul[mul[a][b]][c] == mul[a][mul[b][c]], "associativity");
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(order, false);
    for (int g = 0; g < order; ++g) {
        if (seen[g]) continue;
        std::vector<int> cls;
        for (int h = 0; h < order; ++h) {
            int c = conj(g, h);
            if (!seen[c]) {
                seen[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<int> FiniteGroup::centralizer(int y) const {
    std::vector<int> out;
    for (int g = 0; g < order; ++g)
        if (mul[g][y] == mul[y][g]) out.push_back(g);
    return out;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    require(n >= 1, "cyclic group needs n >= 1");
    FiniteGroup g;
    g.order = n;
    g.mul.assign(n, std::vector<int>(n));
    g.inv.resize(n);
    for (int a = 0; a < n; ++a) {
        g.inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    }
    g.validate();
    return g;
}

FiniteGroup FiniteGroup::symmetric3() {
    // permutations of {0,1,2} in one-line notation, identity first
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    FiniteGroup g;
    g.order = 6;
    g.mul.assign(6, std::vector<int>(6));
    g.inv.resize(6);
    auto find = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int c[3];
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];  // a after b
            g.mul[a][b] = find(c);
        }
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (g.mul[a][b] == 0) g.inv[a] = b;
    g.validate();
    return g;
}

FiniteGroup FiniteGroup::from_table(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open table file: " + path);
    FiniteGroup g;
    require(static_cast<bool>(in >> g.order) && g.order >= 1,
            "table file: bad order line");
    g.mul.assign(g.order, std::vector<int>(g.order));
    for (auto& row : g.mul)
        for (auto& x : row)
            require(static_cast<bool>(in >> x) && x >= 0 && x < g.order,
                    "table file: bad entry");
    // identity = the row acting as the left/right unit
    g.e = -1;
    for (int a = 0; a < g.order; ++a) {
        bool unit = true;
        for (int b = 0; b < g.order; ++b)
            if (g.mul[a][b] != b || g.mul[b][a] != b) unit = false;
        if (unit) g.e = a;
    }
    require(g.e >= 0, "table file: no identity element");
    g.inv.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.mul[a][b] == g.e) g.inv[a] = b;
    for (int a = 0; a < g.order; ++a) require(g.inv[a] >= 0, "table file: no inverse");
    g.validate();
    return g;
}

}  // namespace tothom
