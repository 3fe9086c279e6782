#include "tothom/obstruct.hpp"

#include <stdexcept>

namespace tothom {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

Rat parity(int e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

/// Stage-1 defect of the square at column n: f[n-1] dC[n] - dD[n] f[n].
GradedMap square_defect(const HomotopySimplicialMap& F, int n) {
    return compose(F.f[n - 1], F.C.horiz[n]).g - compose(F.D.horiz[n], F.f[n]).g;
}

/// Matrix of phi -> post . phi . pre between flattened Hom spaces.
/// Either map may be null (identity).
SparseMat compose_matrix(const HomComplex& from, const HomComplex& to, int degree,
                         const ChainMap* pre, const ChainMap* post) {
    int nc = from.dim(degree);
    SparseMat m(to.dim(degree), nc);
    std::vector<Rat> e(nc, Rat(0));
    for (int i = 0; i < nc; ++i) {
        e[i] = 1;
        GradedMap phi = from.unflatten(e, degree);
        e[i] = 0;
        if (pre) phi = compose(phi, pre->g);
        if (post) phi = compose(post->g, phi);
        auto col = to.flatten(phi);
        for (int r = 0; r < static_cast<int>(col.size()); ++r)
            if (col[r] != 0) m.set(r, i, col[r]);
    }
    return m;
}

/// The joint linear system for a witness tower over columns [a, b]:
/// unknowns g^(r)_j for 1 <= r <= levels, a+r <= j <= b, equations
/// D(g^(r)_j) - (-1)^(j-r) (g^(r-1)_{j-1} dC_j - dD_{j-r+1} g^(r-1)_j) = rhs,
/// where the r = 1 right side comes from f.
struct JointSystem {
    const HomotopySimplicialMap& F;
    int levels, a, b;
    std::map<std::pair<int, int>, std::shared_ptr<HomComplex>> hom;  // (r,j)
    std::map<std::pair<int, int>, int> u_off, e_off;
    int u_dim = 0, e_dim = 0;
    SparseMat A;
    std::vector<Rat> rhs;

    JointSystem(const HomotopySimplicialMap& f, int levels_, int a_, int b_)
        : F(f), levels(levels_), a(a_), b(b_) {
        for (int r = 1; r <= levels; ++r)
            for (int j = a + r; j <= b; ++j) {
                auto h = std::make_shared<HomComplex>(F.C.column[j], F.D.column[j - r]);
                hom[{r, j}] = h;
                u_off[{r, j}] = u_dim;
                u_dim += h->dim(r);
                e_off[{r, j}] = e_dim;
                e_dim += h->dim(r - 1);
            }
        A = SparseMat(e_dim, u_dim);
        rhs.assign(e_dim, Rat(0));
        for (int r = 1; r <= levels; ++r)
            for (int j = a + r; j <= b; ++j) {
                const auto& h = *hom[{r, j}];
                int row = e_off[{r, j}];
                A.insert_block(row, u_off[{r, j}], h.complex()->d(r));
                Rat sg = parity(j - r);
                if (r == 1) {
                    auto v = h.flatten(square_defect(F, j) * sg);
                    for (int i = 0; i < static_cast<int>(v.size()); ++i) rhs[row + i] = v[i];
                } else {
                    // -sg * (previous-level coupling terms) moved to the left side
                    const auto& pre_h = *hom[{r - 1, j - 1}];
                    A.insert_block(row, u_off[{r - 1, j - 1}],
                                   compose_matrix(pre_h, h, r - 1, &F.C.horiz[j], nullptr) *
                                       (-sg));
                    const auto& post_h = *hom[{r - 1, j}];
                    A.insert_block(row, u_off[{r - 1, j}],
                                   compose_matrix(post_h, h, r - 1, nullptr,
                                                  &F.D.horiz[j - r + 1]) *
                                       sg);
                }
            }
    }

    TowerWitnesses extract(const std::vector<Rat>& u) const {
        TowerWitnesses w;
        for (const auto& [key, h] : hom) {
            auto [r, j] = key;
            int off = u_off.at(key);
            std::vector<Rat> v(h->dim(r));
            for (int i = 0; i < static_cast<int>(v.size()); ++i) v[i] = u[off + i];
            w[r][j] = h->unflatten(v, r);
        }
        return w;
    }

    std::optional<TowerWitnesses> solve_affine() const {
        auto u = solve1(A, rhs);
        if (!u) return std::nullopt;
        return extract(*u);
    }
};

/// Representative of T(k,n) from a witness tower (levels up to k-1).
GradedMap bracket_representative(const HomotopySimplicialMap& F, int k, int n,
                                 const TowerWitnesses& w) {
    const GradedMap& g_left = w.at(k - 1).at(n + k - 1);
    const GradedMap& g_right = w.at(k - 1).at(n + k);
    return (compose(g_left, F.C.horiz[n + k].g) - compose(F.D.horiz[n + 1].g, g_right)) *
           parity(n);
}

/// Checks that the tower satisfies the level-r equation at column j.
bool tower_equation_holds(const HomotopySimplicialMap& F, const TowerWitnesses& w, int r,
                          int j) {
    GradedMap lhs = hom_differential(w.at(r).at(j));
    GradedMap coupling =
        (r == 1) ? square_defect(F, j)
                 : compose(w.at(r - 1).at(j - 1), F.C.horiz[j].g) -
                       compose(F.D.horiz[j - r + 1].g, w.at(r - 1).at(j));
    return (lhs - coupling * parity(j - r)).is_zero();
}

ObstructionClass bracket_from_tower(const HomotopySimplicialMap& F, int k, int n,
                                    const TowerWitnesses& w) {
    ObstructionClass t;
    t.order = k;
    t.position = n;
    t.representative = bracket_representative(F, k, n, w);
    if (!hom_differential(t.representative).is_zero())
        throw std::logic_error("bracket representative is not a Hom-cycle");
    t.classes = homotopy_classes(F.C.column[n + k], F.D.column[n], k - 1);
    t.coords = t.classes.class_of(t.representative);
    // indeterminacy: classes reachable from homogeneous witness changes
    JointSystem sys(F, k - 1, n, n + k);
    SparseMat ker = kernel_basis(sys.A);
    SparseMat deltas(t.classes.dim(), ker.cols());
    for (int c = 0; c < ker.cols(); ++c) {
        TowerWitnesses z = sys.extract(ker.col_dense(c));
        GradedMap delta = bracket_representative(F, k, n, z);
        auto coords = t.classes.class_of(delta);
        for (int i = 0; i < static_cast<int>(coords.size()); ++i)
            if (coords[i] != 0) deltas.set(i, c, coords[i]);
    }
    t.indeterminacy = span(deltas);
    return t;
}

/// Level-1 witnesses with the tower sign: g^(1)_j = (-1)^(j-1) s1[j].
void seed_level1(const HomotopySimplicialMap& F, TowerWitnesses& w, int j_lo, int j_hi) {
    for (int j = j_lo; j <= j_hi; ++j) w[1][j] = F.s1[j] * parity(j - 1);
}

}  // namespace

void HomotopySimplicialMap::validate() const {
    C.validate();
    D.validate();
    require(C.cols() == D.cols(), "column count mismatch");
    require(static_cast<int>(f.size()) == cols(), "one f per column required");
    require(static_cast<int>(s1.size()) == cols(), "one s1 slot per column required");
    for (int n = 0; n < cols(); ++n)
        require(f[n].source() == C.column[n] && f[n].target() == D.column[n],
                "f endpoints at column " + std::to_string(n));
    for (int n = 1; n < cols(); ++n) {
        require(s1[n].degree == 1 && s1[n].source == C.column[n] &&
                    s1[n].target == D.column[n - 1],
                "s1 shape at column " + std::to_string(n));
        require((hom_differential(s1[n]) -
                 (compose(f[n - 1], C.horiz[n]).g - compose(D.horiz[n], f[n]).g))
                    .is_zero(),
                "stage-1 witness identity fails at column " + std::to_string(n));
    }
}

std::optional<GradedMap> solve_stage1(const ChainMap& f_n, const ChainMap& f_prev,
                                      const ChainMap& dC, const ChainMap& dD) {
    require(dC.source() == f_n.source() && dC.target() == f_prev.source(),
            "stage-1 square shapes (source side)");
    require(dD.source() == f_n.target() && dD.target() == f_prev.target(),
            "stage-1 square shapes (target side)");
    GradedMap defect = compose(f_prev, dC).g - compose(dD, f_n).g;
    return solve_homotopy(defect);
}

Gr2Map gr2_map(const HomotopySimplicialMap& F, int n) {
    require(n >= 1 && n < F.cols(), "gr2_map: column out of range");
    // precondition: the witness at column n is valid
    require((hom_differential(F.s1[n]) - square_defect(F, n)).is_zero(),
            "gr2_map: invalid stage-1 witness");
    Gr2Map out;
    out.grC = gr_subquotient(totalize(F.C).filt, 2, n);
    out.grD = gr_subquotient(totalize(F.D).filt, 2, n);
    const auto& cm1 = F.C.column[n - 1];
    const auto& cn = F.C.column[n];
    const auto& dm1 = F.D.column[n - 1];
    GradedMap sigma = F.s1[n] * parity(n - 1);
    std::map<int, SparseMat> mats;
    for (int m = out.grC.complex->lo(); m <= out.grC.complex->hi(); ++m) {
        int rows = out.grD.complex->dim(m), cols = out.grC.complex->dim(m);
        if (rows == 0 || cols == 0) continue;
        SparseMat mat(rows, cols);
        // block layout per total degree m: column n-1 part, then column n part
        mat.insert_block(0, 0, F.f[n - 1].at(m - (n - 1)));
        mat.insert_block(0, cm1->dim(m - (n - 1)), sigma.at(m - n));
        mat.insert_block(dm1->dim(m - (n - 1)), cm1->dim(m - (n - 1)), F.f[n].at(m - n));
        mats[m] = std::move(mat);
    }
    out.map = ChainMap(out.grC.complex, out.grD.complex, std::move(mats));
    return out;
}

bool ObstructionClass::vanishes() const {
    if (classes.dim() == 0) return true;
    std::vector<Rat> c = coords;
    return solve1(indeterminacy.basis, c).has_value();
}

ObstructionClass toda_bracket(const HomotopySimplicialMap& F, int k, int n,
                              const TowerWitnesses& lower) {
    require(k >= 2, "toda_bracket: order must be >= 2");
    require(n >= 0 && n + k < F.cols(), "toda_bracket: position out of range");
    TowerWitnesses w;
    seed_level1(F, w, n + 1, n + k);
    for (int r = 2; r <= k - 1; ++r)
        for (int j = n + r; j <= n + k; ++j) {
            auto rit = lower.find(r);
            require(rit != lower.end() && rit->second.count(j),
                    "toda_bracket: missing lower-bracket witness at level " +
                        std::to_string(r) + ", column " + std::to_string(j));
            w[r][j] = rit->second.at(j);
            require(tower_equation_holds(F, w, r, j),
                    "toda_bracket: invalid lower-bracket witness at level " +
                        std::to_string(r) + ", column " + std::to_string(j));
        }
    return bracket_from_tower(F, k, n, w);
}

std::pair<bool, std::optional<GradedMap>> bracket_vanishes(const ObstructionClass& t) {
    bool verdict = t.vanishes();
    std::optional<GradedMap> witness;
    if (verdict) witness = solve_homotopy(t.representative);
    return {verdict, witness};
}

ExtendResult extend_tower(const HomotopySimplicialMap& F, int k, int n) {
    // base-column reading: the map lives on columns n..n+k-1, i.e. the
    // subquotient F_{n+k-1} / F_{n-1}
    require(k >= 1 && n >= 0 && n + k - 1 < F.cols(), "extend_tower: range");
    int a = n, b = n + k - 1;
    ExtendResult out;
    out.grC = gr_subquotient(totalize(F.C).filt, k, b);
    out.grD = gr_subquotient(totalize(F.D).filt, k, b);
    std::optional<TowerWitnesses> tower;
    if (k == 1) {
        tower = TowerWitnesses{};
    } else {
        JointSystem sys(F, k - 1, a, b);
        tower = sys.solve_affine();
    }
    if (tower) {
        // assemble the filtration-preserving map in Gr coordinates
        auto col_offset = [&](const Bicomplex& bc, int m, int j) {
            int off = 0;
            for (int c = a; c < j; ++c) off += bc.column[c]->dim(m - c);
            return off;
        };
        std::map<int, SparseMat> mats;
        for (int m = out.grC.complex->lo(); m <= out.grC.complex->hi(); ++m) {
            int rows = out.grD.complex->dim(m), cols = out.grC.complex->dim(m);
            if (cols == 0) continue;
            SparseMat mat(rows, cols);
            for (int j = a; j <= b; ++j) {
                int kk = m - j;  // internal degree of the source block
                if (F.C.column[j]->dim(kk) == 0) continue;
                int in_off = col_offset(F.C, m, j);
                for (int r = 0; r < k && j - r >= a; ++r) {
                    SparseMat block = (r == 0) ? F.f[j].at(kk) : tower->at(r).at(j).at(kk);
                    if (block.is_zero()) continue;
                    int out_off = col_offset(F.D, m, j - r);
                    mat.insert_block(out_off, in_off, block);
                }
            }
            mats[m] = std::move(mat);
        }
        out.map = ChainMap(out.grC.complex, out.grD.complex, std::move(mats));
        out.witnesses = std::move(*tower);
        return out;
    }
    // failure: find the first nonvanishing bracket in (order, position) order
    for (int N = 2; N <= k - 1; ++N) {
        std::optional<TowerWitnesses> w;
        if (N == 2) {
            w = TowerWitnesses{};
            seed_level1(F, *w, a + 1, b);
        } else {
            JointSystem sub(F, N - 1, a, b);
            w = sub.solve_affine();
            if (!w)
                throw std::logic_error(
                    "extend_tower: witness tower unsolvable below vanishing brackets");
        }
        for (int i = a; i + N <= b; ++i) {
            ObstructionClass t = bracket_from_tower(F, N, i, *w);
            if (!t.vanishes()) {
                out.obstruction = std::move(t);
                return out;
            }
        }
    }
    throw std::logic_error("extend_tower: joint system unsolvable with vanishing brackets");
}

void HomotopyChainObject::validate() const {
    int n_max = N();
    require(n_max >= 0, "empty homotopy chain object");
    require(static_cast<int>(d.size()) == n_max + 1, "one d per positive degree");
    require(static_cast<int>(h.size()) == n_max + 1, "one h slot per degree");
    for (int n = 1; n <= n_max; ++n)
        require(d[n].source() == objects[n] && d[n].target() == objects[n - 1],
                "d endpoints at degree " + std::to_string(n));
    for (int n = 2; n <= n_max; ++n) {
        require(h[n].degree == 1 && h[n].source == objects[n] && h[n].target == objects[n - 2],
                "h shape at degree " + std::to_string(n));
        require((hom_differential(h[n]) - compose(d[n - 1], d[n]).g).is_zero(),
                "composite witness identity fails at degree " + std::to_string(n));
    }
}

BnResult bn_totalization_tower(const HomotopyChainObject& x) {
    x.validate();
    BnResult out;
    TowerStage s0;
    s0.index = 0;
    s0.T = x.objects[0];
    out.stages.push_back(std::move(s0));
    if (x.N() == 0) return out;

    Cone c1 = mapping_cone(x.d[1]);
    TowerStage s1{1, c1.complex, x.d[1], c1.inclusion, c1.projection};
    out.stages.push_back(std::move(s1));

    for (int n = 2; n <= x.N(); ++n) {
        const TowerStage& prev = out.stages[n - 1];       // T_{n-1} = cone(psi_{n-1})
        const ComplexPtr& t_small = out.stages[n - 2].T;  // T_{n-2}
        ComplexPtr a_cx = prev.psi.source();              // Sigma^{n-2} C_{n-1}
        ComplexPtr x_cx = suspend(x.objects[n], n - 2);   // Sigma^{n-2} C_n
        // u0 = Sigma^{n-2} d_n
        std::map<int, SparseMat> u0m;
        for (int m = x.objects[n]->lo(); m <= x.objects[n]->hi(); ++m)
            if (!x.d[n].at(m).is_zero()) u0m[m + n - 2] = x.d[n].at(m);
        ChainMap u0(x_cx, a_cx, std::move(u0m));
        // phi_n = psi_{n-1} . u0 : Sigma^{n-2} C_n -> T_{n-2}. Its homotopy
        // class is the obstruction: psi_n with the right top coordinate exists
        // iff phi_n is nullhomotopic, by the cone-map construction below.
        GradedMap phi = compose(prev.psi.g, u0.g);

        BnBracket br;
        br.n = n;
        br.representative = phi;
        std::optional<GradedMap> witness;
        if (n == 2) {
            // the supplied h_2 is exactly a witness for phi_2 = d_1 d_2
            witness = x.h[2];
            if (!(hom_differential(*witness) - phi).is_zero())
                throw std::logic_error("h_2 does not witness phi_2");
        } else {
            witness = solve_homotopy(phi);
        }
        if (!witness) {
            br.vanishes = false;
            br.class_dim = homotopy_classes(x_cx, t_small, 0).dim();
            out.brackets.push_back(std::move(br));
            out.obstruction_at = n;
            return out;
        }
        br.vanishes = true;
        out.brackets.push_back(std::move(br));

        // psi_n = (-H, u0) : Sigma^{n-1} C_n -> cone(psi_{n-1}) = T_{n-1},
        // a chain map precisely because D(H) = psi_{n-1} . u0
        ComplexPtr sx = suspend(x.objects[n], n - 1);
        std::map<int, SparseMat> psim;
        for (int m = sx->lo(); m <= sx->hi(); ++m) {
            int cols = sx->dim(m);
            if (cols == 0) continue;
            SparseMat mat(prev.T->dim(m), cols);
            mat.insert_block(0, 0, -witness->at(m - 1));
            mat.insert_block(t_small->dim(m), 0, u0.at(m - 1));
            psim[m] = std::move(mat);
        }
        ChainMap psi(sx, prev.T, std::move(psim));
        Cone cone = mapping_cone(psi);
        TowerStage st{n, cone.complex, psi, cone.inclusion, cone.projection};
        out.stages.push_back(std::move(st));
    }
    return out;
}

}  // namespace tothom
