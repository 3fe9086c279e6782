#include "tothom/chain.hpp"

#include <stdexcept>

namespace tothom {

ChainComplex::ChainComplex(int lo, std::vector<int> dims, std::map<int, SparseMat> d)
    : lo_(lo), dims_(std::move(dims)) {
    for (int k : dims_)
        if (k < 0) throw std::invalid_argument("negative dimension");
    for (auto& [n, m] : d) {
        if (m.rows() != dim(n - 1) || m.cols() != dim(n))
            throw std::invalid_argument("differential shape mismatch at degree " +
                                        std::to_string(n));
        if (!m.is_zero()) d_.emplace(n, std::move(m));
    }
    for (int n = lo_; n <= hi() + 1; ++n)
        if (!(this->d(n) * this->d(n + 1)).is_zero())
            throw std::invalid_argument("d*d != 0 at degree " + std::to_string(n + 1));
}

ComplexPtr ChainComplex::point(int degree, int dim) {
    return make(degree, {dim}, {});
}

SparseMat ChainComplex::d(int n) const {
    auto it = d_.find(n);
    if (it != d_.end()) return it->second;
    return SparseMat(dim(n - 1), dim(n));
}

int ChainComplex::total_dim() const {
    int t = 0;
    for (int k : dims_) t += k;
    return t;
}

GradedMap::GradedMap(ComplexPtr src, ComplexPtr tgt, int deg)
    : source(std::move(src)), target(std::move(tgt)), degree(deg) {}

SparseMat GradedMap::at(int n) const {
    auto it = comp.find(n);
    if (it != comp.end()) return it->second;
    return SparseMat(target->dim(n + degree), source->dim(n));
}

void GradedMap::set(int n, SparseMat m) {
    if (m.rows() != target->dim(n + degree) || m.cols() != source->dim(n))
        throw std::invalid_argument("graded map component shape mismatch at degree " +
                                    std::to_string(n));
    if (m.is_zero())
        comp.erase(n);
    else
        comp[n] = std::move(m);
}

bool GradedMap::is_zero() const {
    for (const auto& [n, m] : comp)
        if (!m.is_zero()) return false;
    return true;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    if (source != o.source || target != o.target || degree != o.degree)
        throw std::invalid_argument("graded map + mismatch");
    GradedMap r(source, target, degree);
    for (int n = source->lo(); n <= source->hi(); ++n) {
        SparseMat m = at(n) + o.at(n);
        if (!m.is_zero()) r.comp[n] = std::move(m);
    }
    return r;
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
    return *this + o * Rat(-1);
}

GradedMap GradedMap::operator*(const Rat& s) const {
    GradedMap r(source, target, degree);
    if (s == 0) return r;
    for (const auto& [n, m] : comp) r.comp[n] = m * s;
    return r;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (f.target != g.source) throw std::invalid_argument("compose: middle complex mismatch");
    GradedMap r(f.source, g.target, f.degree + g.degree);
    for (int n = f.source->lo(); n <= f.source->hi(); ++n) {
        SparseMat m = g.at(n + f.degree) * f.at(n);
        if (!m.is_zero()) r.comp[n] = std::move(m);
    }
    return r;
}

GradedMap hom_differential(const GradedMap& phi) {
    const auto& c = phi.source;
    const auto& d = phi.target;
    Rat sign = (phi.degree % 2 == 0) ? Rat(1) : Rat(-1);
    GradedMap r(c, d, phi.degree - 1);
    for (int n = c->lo(); n <= c->hi(); ++n) {
        SparseMat m = d->d(n + phi.degree) * phi.at(n) - phi.at(n - 1) * c->d(n) * sign;
        if (!m.is_zero()) r.comp[n] = std::move(m);
    }
    return r;
}

bool is_chain_map(const GradedMap& phi) { return hom_differential(phi).is_zero(); }

ChainMap::ChainMap(ComplexPtr src, ComplexPtr tgt, std::map<int, SparseMat> f)
    : g(std::move(src), std::move(tgt), 0) {
    for (auto& [n, m] : f) g.set(n, std::move(m));
    if (!is_chain_map(g)) throw std::invalid_argument("not a chain map");
}

ChainMap ChainMap::identity(ComplexPtr c) {
    std::map<int, SparseMat> f;
    for (int n = c->lo(); n <= c->hi(); ++n)
        if (c->dim(n) > 0) f[n] = SparseMat::identity(c->dim(n));
    return ChainMap(c, c, std::move(f));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap r;
    r.g = compose(g.g, f.g);
    return r;
}

ChainHomotopy::ChainHomotopy(const ChainMap& from, const ChainMap& to, GradedMap s_)
    : s(std::move(s_)) {
    if (s.degree != 1) throw std::invalid_argument("homotopy must have degree +1");
    if (s.source != from.source() || s.target != from.target())
        throw std::invalid_argument("homotopy endpoints mismatch");
    GradedMap diff = from.g - to.g;
    // D(s) = d s + s d in degree 0 (sign (-1)^1 on the second term of the
    // Hom-differential makes D(s) = d s + s d exactly)
    if (!(hom_differential(s) - diff).is_zero())
        throw std::invalid_argument("homotopy identity fails");
}

std::vector<Rat> HomologySpace::class_of(const std::vector<Rat>& cycle) const {
    return q.proj.apply(cycle);
}

HomologySpace homology(const ComplexPtr& c, int n) {
    HomologySpace h;
    int amb = c->dim(n);
    if (amb == 0) {
        h.reps = SparseMat(0, 0);
        return h;
    }
    Subspace cycles = {amb, kernel_basis(c->d(n))};
    Subspace boundaries = span(c->d(n + 1));
    h.q = subquotient(cycles, boundaries);
    h.dim = h.q.dim;
    h.reps = h.q.lift;
    return h;
}

std::vector<int> homology_dims(const ComplexPtr& c) {
    std::vector<int> out;
    for (int n = c->lo(); n <= c->hi(); ++n) out.push_back(homology(c, n).dim);
    return out;
}

ComplexPtr suspend(const ComplexPtr& c, int k) {
    if (k == 0) return c;
    std::vector<int> dims;
    std::map<int, SparseMat> d;
    Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
    for (int n = c->lo(); n <= c->hi(); ++n) dims.push_back(c->dim(n));
    for (int n = c->lo(); n <= c->hi() + 1; ++n) {
        SparseMat m = c->d(n) * sign;
        if (!m.is_zero()) d[n + k] = std::move(m);
    }
    return ChainComplex::make(c->lo() + k, std::move(dims), std::move(d));
}

GradedMap suspension_identity(const ComplexPtr& c, int k) {
    GradedMap g(c, suspend(c, k), k);
    for (int n = c->lo(); n <= c->hi(); ++n)
        if (c->dim(n) > 0) g.comp[n] = SparseMat::identity(c->dim(n));
    return g;
}

Cone mapping_cone(const ChainMap& f) {
    const auto& c = f.source();
    const auto& d = f.target();
    int lo = std::min(d->lo(), c->lo() + 1);
    int hi = std::max(d->hi(), c->hi() + 1);
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(d->dim(n) + c->dim(n - 1));
    std::map<int, SparseMat> diff;
    for (int n = lo + 1; n <= hi; ++n) {
        SparseMat m(d->dim(n - 1) + c->dim(n - 2), d->dim(n) + c->dim(n - 1));
        m.insert_block(0, 0, d->d(n));
        m.insert_block(0, d->dim(n), f.at(n - 1));
        m.insert_block(d->dim(n - 1), d->dim(n), -c->d(n - 1));
        if (!m.is_zero()) diff[n] = std::move(m);
    }
    Cone cone;
    cone.complex = ChainComplex::make(lo, std::move(dims), std::move(diff));
    std::map<int, SparseMat> inc, proj;
    auto sc = suspend(c, 1);
    for (int n = lo; n <= hi; ++n) {
        int dn = d->dim(n), cn = c->dim(n - 1);
        if (dn > 0) {
            SparseMat i(dn + cn, dn);
            i.insert_block(0, 0, SparseMat::identity(dn));
            inc[n] = std::move(i);
        }
        if (cn > 0) {
            SparseMat p(cn, dn + cn);
            p.insert_block(0, dn, SparseMat::identity(cn));
            proj[n] = std::move(p);
        }
    }
    cone.inclusion = ChainMap(d, cone.complex, std::move(inc));
    cone.projection = ChainMap(cone.complex, sc, std::move(proj));
    return cone;
}

HomComplex::HomComplex(ComplexPtr c, ComplexPtr d) : c_(std::move(c)), d_(std::move(d)) {
    lo_ = d_->lo() - c_->hi();
    hi_ = d_->hi() - c_->lo();
    if (lo_ > hi_) lo_ = hi_ = 0;
    std::vector<int> dims(hi_ - lo_ + 1, 0);
    for (int n = lo_; n <= hi_; ++n) {
        int offset = 0;
        for (int k = c_->lo(); k <= c_->hi(); ++k) {
            int rows = d_->dim(k + n), cols = c_->dim(k);
            if (rows == 0 || cols == 0) continue;
            blocks_[n].push_back({k, offset, rows, cols});
            offset += rows * cols;
        }
        dims[n - lo_] = offset;
    }
    // differential Hom_n -> Hom_{n-1}:
    // block k of D(phi) = d_D . phi_k - (-1)^n phi_{k-1} . d_C
    std::map<int, SparseMat> diff;
    auto offset_of = [&](int deg, int k) -> const Block* {
        auto it = blocks_.find(deg);
        if (it == blocks_.end()) return nullptr;
        for (const auto& b : it->second)
            if (b.k == k) return &b;
        return nullptr;
    };
    for (int n = lo_ + 1; n <= hi_; ++n) {
        SparseMat m(dims[n - 1 - lo_], dims[n - lo_]);
        Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
        for (const auto& out : blocks_.count(n - 1) ? blocks_[n - 1] : std::vector<Block>{}) {
            int k = out.k;
            // d_D . phi_k term: phi_k has shape (dim D_{k+n}, cols)
            if (const Block* in = offset_of(n, k)) {
                SparseMat dd = d_->d(k + n);
                for (int i = 0; i < out.rows; ++i)
                    for (int j = 0; j < out.cols; ++j)
                        for (const auto& [a, v] : dd.row(i))
                            m.add_at(out.offset + i * out.cols + j,
                                     in->offset + a * in->cols + j, v);
            }
            // -(-1)^n phi_{k-1} . d_C term
            if (const Block* in = offset_of(n, k - 1)) {
                SparseMat dc = c_->d(k);
                for (int i = 0; i < out.rows; ++i)
                    for (int b = 0; b < in->cols; ++b)
                        for (const auto& [j, v] : dc.row(b))
                            m.add_at(out.offset + i * out.cols + j,
                                     in->offset + i * in->cols + b, -sign * v);
            }
        }
        if (!m.is_zero()) diff[n] = std::move(m);
    }
    hom_ = ChainComplex::make(lo_, std::move(dims), std::move(diff));
}

std::vector<Rat> HomComplex::flatten(const GradedMap& phi) const {
    if (phi.source != c_ || phi.target != d_)
        throw std::invalid_argument("flatten: wrong complexes");
    std::vector<Rat> v(hom_->dim(phi.degree), Rat(0));
    auto it = blocks_.find(phi.degree);
    if (it == blocks_.end()) return v;
    for (const auto& b : it->second) {
        SparseMat m = phi.at(b.k);
        for (int i = 0; i < b.rows; ++i)
            for (const auto& [j, val] : m.row(i)) v[b.offset + i * b.cols + j] = val;
    }
    return v;
}

GradedMap HomComplex::unflatten(const std::vector<Rat>& v, int degree) const {
    if (static_cast<int>(v.size()) != hom_->dim(degree))
        throw std::invalid_argument("unflatten: length mismatch");
    GradedMap phi(c_, d_, degree);
    auto it = blocks_.find(degree);
    if (it == blocks_.end()) return phi;
    for (const auto& b : it->second) {
        SparseMat m(b.rows, b.cols);
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j)
                if (v[b.offset + i * b.cols + j] != 0)
                    m.set(i, j, v[b.offset + i * b.cols + j]);
        if (!m.is_zero()) phi.comp[b.k] = std::move(m);
    }
    return phi;
}

GradedMap HomComplex::unflatten_col(const SparseMat& m, int col, int degree) const {
    return unflatten(m.col_dense(col), degree);
}

std::optional<GradedMap> solve_homotopy(const GradedMap& phi) {
    HomComplex hom(phi.source, phi.target);
    int t = phi.degree;
    SparseMat a = hom.complex()->d(t + 1);
    auto x = solve1(a, hom.flatten(phi));
    if (!x) return std::nullopt;
    return hom.unflatten(*x, t + 1);
}

std::optional<ChainHomotopy> nullhomotopy(const ChainMap& f) {
    auto s = solve_homotopy(f.g);
    if (!s) return std::nullopt;
    return ChainHomotopy(f, ChainMap::zero(f.source(), f.target()), *s);
}

std::vector<Rat> HomotopyClassSpace::class_of(const GradedMap& phi) const {
    return h.class_of(hom.flatten(phi));
}

GradedMap HomotopyClassSpace::rep(int i) const {
    return hom.unflatten_col(h.reps, i, shift);
}

HomotopyClassSpace homotopy_classes(const ComplexPtr& c, const ComplexPtr& d, int shift) {
    HomComplex hom(c, d);
    HomologySpace h = homology(hom.complex(), shift);
    return {std::move(hom), shift, std::move(h)};
}

ComplexPtr tensor(const ComplexPtr& c, const ComplexPtr& d) {
    int lo = c->lo() + d->lo(), hi = c->hi() + d->hi();
    // block layout per total degree: (p, q = n-p) ascending in p,
    // entry (i, j) at index i * dim D_q + j
    auto offset = [&](int n, int p) {
        int off = 0;
        for (int pp = c->lo(); pp < p; ++pp) off += c->dim(pp) * d->dim(n - pp);
        return off;
    };
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) {
        int t = 0;
        for (int p = c->lo(); p <= c->hi(); ++p) t += c->dim(p) * d->dim(n - p);
        dims.push_back(t);
    }
    std::map<int, SparseMat> diff;
    for (int n = lo + 1; n <= hi; ++n) {
        SparseMat m(dims[n - 1 - lo], dims[n - lo]);
        for (int p = c->lo(); p <= c->hi(); ++p) {
            int q = n - p;
            int cp = c->dim(p), dq = d->dim(q);
            if (cp == 0 || dq == 0) continue;
            int in_off = offset(n, p);
            // dC (x) 1 : to block (p-1, q)
            SparseMat dc = c->d(p);
            int out_off = offset(n - 1, p - 1);
            for (int i = 0; i < dc.rows(); ++i)
                for (const auto& [a, v] : dc.row(i))
                    for (int j = 0; j < dq; ++j)
                        m.add_at(out_off + i * dq + j, in_off + a * dq + j, v);
            // (-1)^p 1 (x) dD : to block (p, q-1)
            SparseMat dd = d->d(q);
            Rat sign = (p % 2 == 0) ? Rat(1) : Rat(-1);
            int out_off2 = offset(n - 1, p);
            for (int i = 0; i < cp; ++i)
                for (int b = 0; b < dd.rows(); ++b)
                    for (const auto& [a, v] : dd.row(b))
                        m.add_at(out_off2 + i * dd.rows() + b, in_off + i * dq + a, sign * v);
        }
        if (!m.is_zero()) diff[n] = std::move(m);
    }
    return ChainComplex::make(lo, std::move(dims), std::move(diff));
}

ComplexPtr direct_sum(const ComplexPtr& a, const ComplexPtr& b) {
    int lo = std::min(a->lo(), b->lo()), hi = std::max(a->hi(), b->hi());
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(a->dim(n) + b->dim(n));
    std::map<int, SparseMat> diff;
    for (int n = lo + 1; n <= hi; ++n) {
        SparseMat m(a->dim(n - 1) + b->dim(n - 1), a->dim(n) + b->dim(n));
        m.insert_block(0, 0, a->d(n));
        m.insert_block(a->dim(n - 1), a->dim(n), b->d(n));
        if (!m.is_zero()) diff[n] = std::move(m);
    }
    return ChainComplex::make(lo, std::move(dims), std::move(diff));
}

}  // namespace tothom
