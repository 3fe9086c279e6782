#include "tothom/sparse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tothom {

SparseMat::SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
    return m;
}

SparseMat SparseMat::from_dense(std::initializer_list<std::initializer_list<long>> m) {
    int r = static_cast<int>(m.size());
    int c = r ? static_cast<int>(m.begin()->size()) : 0;
    SparseMat out(r, c);
    int i = 0;
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged dense init");
        int j = 0;
        for (long v : row) {
            if (v != 0) out.data_[i].emplace_back(j, Rat(v));
            ++j;
        }
        ++i;
    }
    return out;
}

SparseMat SparseMat::from_dense_rat(const std::vector<std::vector<Rat>>& m) {
    int r = static_cast<int>(m.size());
    int c = r ? static_cast<int>(m[0].size()) : 0;
    SparseMat out(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(m[i].size()) != c) throw std::invalid_argument("ragged dense init");
        for (int j = 0; j < c; ++j)
            if (m[i][j] != 0) out.data_[i].emplace_back(j, m[i][j]);
    }
    return out;
}

SparseMat SparseMat::column(const std::vector<Rat>& v) {
    SparseMat out(static_cast<int>(v.size()), 1);
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) out.data_[i].emplace_back(0, v[i]);
    return out;
}

long SparseMat::nnz() const {
    long n = 0;
    for (const auto& r : data_) n += static_cast<long>(r.size());
    return n;
}

bool SparseMat::is_zero() const { return nnz() == 0; }

Rat SparseMat::at(int r, int c) const {
    const Row& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rat(0);
}

void SparseMat::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("SparseMat::set");
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

void SparseMat::add_at(int r, int c, const Rat& v) {
    if (v == 0) return;
    Row& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

namespace {
SparseMat::Row row_axpy(const SparseMat::Row& a, const Rat& s, const SparseMat::Row& b) {
    // a + s*b, merged
    SparseMat::Row out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat v = s * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            Rat v = a[i].second + s * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}
}  // namespace

SparseMat SparseMat::operator+(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    SparseMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i) out.data_[i] = row_axpy(data_[i], Rat(1), o.data_[i]);
    return out;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    SparseMat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i) out.data_[i] = row_axpy(data_[i], Rat(-1), o.data_[i]);
    return out;
}

SparseMat SparseMat::operator-() const { return *this * Rat(-1); }

SparseMat SparseMat::operator*(const SparseMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    SparseMat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        if (data_[i].empty()) continue;
        std::map<int, Rat> acc;
        for (const auto& [k, v] : data_[i])
            for (const auto& [j, w] : o.data_[k]) acc[j] += v * w;
        Row& r = out.data_[i];
        for (auto& [j, v] : acc)
            if (v != 0) r.emplace_back(j, std::move(v));
    }
    return out;
}

SparseMat SparseMat::operator*(const Rat& s) const {
    SparseMat out(rows_, cols_);
    if (s == 0) return out;
    for (int i = 0; i < rows_; ++i) {
        out.data_[i] = data_[i];
        for (auto& e : out.data_[i]) e.second *= s;
    }
    return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

SparseMat SparseMat::transpose() const {
    SparseMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) out.data_[j].emplace_back(i, v);
    return out;
}

std::vector<Rat> SparseMat::apply(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: length mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, a] : data_[i]) out[i] += a * v[j];
    return out;
}

SparseMat SparseMat::col_slice(int c0, int n) const {
    if (c0 < 0 || c0 + n > cols_) throw std::out_of_range("col_slice");
    SparseMat out(rows_, n);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i])
            if (j >= c0 && j < c0 + n) out.data_[i].emplace_back(j - c0, v);
    return out;
}

std::vector<Rat> SparseMat::col_dense(int c) const {
    std::vector<Rat> out(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
}

SparseMat SparseMat::hcat(const SparseMat& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
    SparseMat out(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        out.data_[i] = data_[i];
        for (const auto& [j, v] : o.data_[i]) out.data_[i].emplace_back(j + cols_, v);
    }
    return out;
}

SparseMat SparseMat::vcat(const SparseMat& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vcat: col mismatch");
    SparseMat out(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i) out.data_[i] = data_[i];
    for (int i = 0; i < o.rows_; ++i) out.data_[rows_ + i] = o.data_[i];
    return out;
}

void SparseMat::insert_block(int r0, int c0, const SparseMat& block) {
    if (r0 < 0 || c0 < 0 || r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
        throw std::out_of_range("insert_block");
    for (int i = 0; i < block.rows(); ++i)
        for (const auto& [j, v] : block.row(i)) set(r0 + i, c0 + j, v);
}

// ---------------------------------------------------------------------------
// Elimination.
//
// Plain rational Gaussian elimination; pivots chosen to limit fill:
// shortest active row first, then the column with fewest active occurrences.
// Ties break on lowest index, so the result is deterministic.

namespace {

struct Eliminator {
    int rows, cols;
    int limit_cols;  // columns eligible as pivots (augmented ones are not)
    bool leftmost = false;
    std::vector<SparseMat::Row> work;
    std::vector<std::set<int>> col_rows;  // active rows containing each column
    std::vector<bool> done;               // row already used as pivot
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_order;  // rows in elimination order

    Eliminator(const SparseMat& a, int eligible_cols)
        : rows(a.rows()),
          cols(a.cols()),
          limit_cols(eligible_cols),
          work(a.rows()),
          col_rows(a.cols()),
          done(a.rows(), false),
          pivot_col_of_row(a.rows(), -1) {
        for (int i = 0; i < rows; ++i) {
            work[i] = a.row(i);
            for (const auto& [j, v] : work[i])
                if (j < limit_cols) col_rows[j].insert(i);
        }
    }

    void detach(int r) {
        for (const auto& [j, v] : work[r])
            if (j < limit_cols) col_rows[j].erase(r);
    }
    void attach(int r) {
        if (done[r]) return;
        for (const auto& [j, v] : work[r])
            if (j < limit_cols) col_rows[j].insert(r);
    }

    // Replaces row r by row_r + s * row_p, keeping the column index in sync.
    void axpy_row(int r, const Rat& s, int p) {
        bool track = !done[r];
        if (track) detach(r);
        work[r] = row_axpy(work[r], s, work[p]);
        if (track) attach(r);
    }

    int active_nnz_in_pivot_range(int r) const {
        int n = 0;
        for (const auto& [j, v] : work[r])
            if (j < limit_cols) ++n;
        return n;
    }

    void run() {
        if (leftmost) {
            run_leftmost();
            back_substitute();
            return;
        }
        while (true) {
            // pick the shortest active row with entries in pivotable columns
            int best_row = -1, best_nnz = -1;
            for (int r = 0; r < rows; ++r) {
                if (done[r]) continue;
                int n = active_nnz_in_pivot_range(r);
                if (n == 0) continue;
                if (best_row < 0 || n < best_nnz) {
                    best_row = r;
                    best_nnz = n;
                }
            }
            if (best_row < 0) break;
            // within it, the column occurring in fewest active rows
            int best_col = -1;
            size_t best_count = 0;
            for (const auto& [j, v] : work[best_row]) {
                if (j >= limit_cols) continue;
                size_t cnt = col_rows[j].size();
                if (best_col < 0 || cnt < best_count) {
                    best_col = j;
                    best_count = cnt;
                }
            }
            pivot(best_row, best_col);
        }
        back_substitute();
    }

    void run_leftmost() {
        for (int c = 0; c < limit_cols; ++c) {
            if (col_rows[c].empty()) continue;
            int best_row = -1, best_nnz = -1;
            for (int r : col_rows[c]) {
                int n = active_nnz_in_pivot_range(r);
                if (best_row < 0 || n < best_nnz || (n == best_nnz && r < best_row)) {
                    best_row = r;
                    best_nnz = n;
                }
            }
            pivot(best_row, c);
        }
    }

    void pivot(int r, int c) {
        detach(r);
        done[r] = true;
        pivot_col_of_row[r] = c;
        pivot_order.push_back(r);
        // normalize
        Rat pv = 0;
        for (const auto& [j, v] : work[r])
            if (j == c) pv = v;
        if (pv != 1) {
            Rat inv = 1 / pv;
            for (auto& e : work[r]) e.second *= inv;
        }
        // eliminate from remaining active rows
        std::vector<int> targets(col_rows[c].begin(), col_rows[c].end());
        for (int t : targets) {
            Rat coeff = 0;
            for (const auto& [j, v] : work[t])
                if (j == c) coeff = v;
            if (coeff != 0) axpy_row(t, -coeff, r);
        }
    }

    void back_substitute() {
        // clear pivot columns from earlier pivot rows
        for (int k = static_cast<int>(pivot_order.size()) - 1; k >= 0; --k) {
            int r = pivot_order[k];
            int c = pivot_col_of_row[r];
            for (int m = 0; m < k; ++m) {
                int r2 = pivot_order[m];
                Rat coeff = 0;
                for (const auto& [j, v] : work[r2])
                    if (j == c) coeff = v;
                if (coeff != 0) work[r2] = row_axpy(work[r2], -coeff, work[r]);
            }
        }
    }
};

Echelon echelon_limited(const SparseMat& a, int eligible_cols, bool leftmost = false) {
    Eliminator e(a, eligible_cols);
    e.leftmost = leftmost;
    e.run();
    Echelon out;
    out.rank = static_cast<int>(e.pivot_order.size());
    out.is_pivot_col.assign(a.cols(), false);
    SparseMat r(a.rows(), a.cols());
    int row_idx = 0;
    for (int pr : e.pivot_order) {
        out.pivot_cols.push_back(e.pivot_col_of_row[pr]);
        out.is_pivot_col[e.pivot_col_of_row[pr]] = true;
        for (const auto& en : e.work[pr]) r.set(row_idx, en.first, en.second);
        ++row_idx;
    }
    // non-pivot (residual) rows follow; nonzero only in non-eligible columns
    for (int i = 0; i < a.rows(); ++i) {
        if (e.done[i]) continue;
        if (e.work[i].empty()) continue;
        for (const auto& en : e.work[i]) r.set(row_idx, en.first, en.second);
        ++row_idx;
    }
    out.rref = std::move(r);
    return out;
}

}  // namespace

Echelon echelon(const SparseMat& a) { return echelon_limited(a, a.cols()); }

Echelon echelon_leftmost(const SparseMat& a) { return echelon_limited(a, a.cols(), true); }

int rank(const SparseMat& a) { return echelon(a).rank; }

SparseMat kernel_basis(const SparseMat& a) {
    Echelon e = echelon(a);
    int nfree = a.cols() - e.rank;
    SparseMat k(a.cols(), nfree);
    std::vector<int> free_cols;
    for (int j = 0; j < a.cols(); ++j)
        if (!e.is_pivot_col[j]) free_cols.push_back(j);
    for (int fi = 0; fi < nfree; ++fi) {
        int j = free_cols[fi];
        k.set(j, fi, Rat(1));
        for (int pr = 0; pr < e.rank; ++pr) {
            Rat v = e.rref.at(pr, j);
            if (v != 0) k.set(e.pivot_cols[pr], fi, -v);
        }
    }
    return k;
}

SparseMat image_basis(const SparseMat& a) {
    Echelon e = echelon(a);
    SparseMat img(a.rows(), e.rank);
    std::vector<int> cols_sorted = e.pivot_cols;
    std::sort(cols_sorted.begin(), cols_sorted.end());
    for (int k = 0; k < e.rank; ++k) img.insert_block(0, k, a.col(cols_sorted[k]));
    return img;
}

std::vector<std::optional<std::vector<Rat>>> solve(const SparseMat& a, const SparseMat& rhs) {
    if (rhs.rows() != a.rows()) throw std::invalid_argument("solve: rhs row mismatch");
    SparseMat aug = a.hcat(rhs);
    Echelon e = echelon_limited(aug, a.cols());
    // residual rows (beyond rank) have entries only in the rhs block;
    // a rhs column hit there is inconsistent.
    std::vector<bool> bad(rhs.cols(), false);
    for (int i = e.rank; i < aug.rows(); ++i)
        for (const auto& [j, v] : e.rref.row(i))
            if (j >= a.cols()) bad[j - a.cols()] = true;
    std::vector<std::optional<std::vector<Rat>>> out(rhs.cols());
    for (int b = 0; b < rhs.cols(); ++b) {
        if (bad[b]) continue;
        std::vector<Rat> x(a.cols(), Rat(0));
        for (int pr = 0; pr < e.rank; ++pr) {
            Rat v = e.rref.at(pr, a.cols() + b);
            if (v != 0) x[e.pivot_cols[pr]] = v;
        }
        out[b] = std::move(x);
    }
    return out;
}

std::optional<std::vector<Rat>> solve1(const SparseMat& a, const std::vector<Rat>& b) {
    return solve(a, SparseMat::column(b))[0];
}

std::optional<SparseMat> solve_matrix(const SparseMat& a, const SparseMat& rhs) {
    auto sols = solve(a, rhs);
    SparseMat x(a.cols(), rhs.cols());
    for (int j = 0; j < rhs.cols(); ++j) {
        if (!sols[j]) return std::nullopt;
        for (int i = 0; i < a.cols(); ++i)
            if ((*sols[j])[i] != 0) x.set(i, j, (*sols[j])[i]);
    }
    return x;
}

}  // namespace tothom
