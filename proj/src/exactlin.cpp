#include "nf/exactlin.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nf {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nf

namespace nf::exactlin {

namespace {

constexpr int kDenseColLimit = 64;
constexpr std::size_t kParallelRowThreshold = 512;

void check_index(int i, int bound, const char* what) {
    if (i < 0 || i >= bound) throw std::out_of_range(std::string("SparseMatrix: ") + what);
}

}  // namespace

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative shape");
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vec>& rows, int cols) {
    SparseMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw std::invalid_argument("SparseMatrix::from_dense: ragged row");
        m.data_[r] = row_from_dense(rows[r]);
    }
    return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
    check_index(r, rows_, "row out of range");
    check_index(c, cols_, "col out of range");
    SparseRow& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.col < col; });
    if (it != row.end() && it->col == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->val = v;
    } else if (!v.is_zero()) {
        row.insert(it, Entry{c, v});
    }
}

Rational SparseMatrix::get(int r, int c) const {
    check_index(r, rows_, "row out of range");
    check_index(c, cols_, "col out of range");
    const SparseRow& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.col < col; });
    if (it != row.end() && it->col == c) return it->val;
    return Rational(0);
}

const SparseRow& SparseMatrix::row(int r) const {
    check_index(r, rows_, "row out of range");
    return data_[r];
}

void SparseMatrix::set_row(int r, SparseRow row) {
    check_index(r, rows_, "row out of range");
    for (std::size_t i = 0; i < row.size(); ++i) {
        check_index(row[i].col, cols_, "entry col out of range");
        assert(!row[i].val.is_zero());
        assert(i == 0 || row[i - 1].col < row[i].col);
    }
    data_[r] = std::move(row);
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void row_axpy(SparseRow& row, const Rational& c, const SparseRow& other) {
    if (c.is_zero() || other.empty()) return;
    SparseRow out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() && j < other.size()) {
        if (row[i].col < other[j].col) {
            out.push_back(row[i++]);
        } else if (row[i].col > other[j].col) {
            out.push_back(Entry{other[j].col, c * other[j].val});
            ++j;
        } else {
            Rational v = row[i].val + c * other[j].val;
            if (!v.is_zero()) out.push_back(Entry{row[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    for (; i < row.size(); ++i) out.push_back(row[i]);
    for (; j < other.size(); ++j) out.push_back(Entry{other[j].col, c * other[j].val});
    row = std::move(out);
}

void row_scale(SparseRow& row, const Rational& c) {
    if (c.is_zero()) {
        row.clear();
        return;
    }
    for (auto& e : row) e.val *= c;
}

SparseRow row_from_dense(const Vec& v) {
    SparseRow r;
    for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) r.push_back(Entry{static_cast<int>(c), v[c]});
    return r;
}

Vec row_to_dense(const SparseRow& r, int cols) {
    Vec v(cols, Rational(0));
    for (const auto& e : r) v[e.col] = e.val;
    return v;
}

int Echelon::slot_for_col(int col) const {
    if (col < 0 || col >= static_cast<int>(pivot_slot_by_col_.size())) return -1;
    return pivot_slot_by_col_[col];
}

void Echelon::set_slot(int col, int slot) {
    if (col >= static_cast<int>(pivot_slot_by_col_.size()))
        pivot_slot_by_col_.resize(cols_, -1);
    pivot_slot_by_col_[col] = slot;
}

bool Echelon::insert(SparseRow row) {
    const int rank_before = rank();
    while (!row.empty()) {
        int lead = row[0].col;
        int slot = slot_for_col(lead);
        if (slot < 0) {
            pivot_weight_.push_back(row[0].val.complexity());
            Rational inv = Rational(1) / row[0].val;
            row_scale(row, inv);
            rows_.push_back(std::move(row));
            set_slot(lead, static_cast<int>(rows_.size()) - 1);
            break;
        }
        // Pivot selection: keep the candidate whose lead entry has the
        // smaller |num|*den. The final RREF is unique either way, this only
        // controls intermediate arithmetic.
        mpz_class weight = row[0].val.complexity();
        if (weight < pivot_weight_[slot]) {
            pivot_weight_[slot] = weight;
            SparseRow incoming = std::move(row);
            row_scale(incoming, Rational(1) / incoming[0].val);
            std::swap(rows_[slot], incoming);
            row = std::move(incoming);
        }
        row_axpy(row, -row[0].val, rows_[slot]);
    }
    return rank() > rank_before;
}

SparseRow Echelon::reduce_full(SparseRow row) const {
    // Eliminate pivot coordinates left to right; each elimination only
    // introduces entries at larger columns, so one forward sweep suffices.
    std::size_t i = 0;
    while (i < row.size()) {
        int slot = slot_for_col(row[i].col);
        if (slot < 0) {
            ++i;
            continue;
        }
        Rational c = -row[i].val;
        row_axpy(row, c, rows_[slot]);
        // row[i] was cancelled; entries before position i are untouched.
    }
    return row;
}

void Echelon::back_substitute() {
    std::vector<std::pair<int, int>> order;  // (pivot col, slot)
    order.reserve(rows_.size());
    for (int col = 0; col < static_cast<int>(pivot_slot_by_col_.size()); ++col)
        if (pivot_slot_by_col_[col] >= 0) order.emplace_back(col, pivot_slot_by_col_[col]);
    // Reduce each row against rows with larger pivots, from the bottom up.
    for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
        SparseRow& row = rows_[order[k].second];
        std::size_t i = 1;  // entry 0 is the pivot itself
        while (i < row.size()) {
            int slot = slot_for_col(row[i].col);
            if (slot < 0 || row[i].col == order[k].first) {
                ++i;
                continue;
            }
            row_axpy(row, -row[i].val, rows_[slot]);
        }
    }
}

std::vector<std::pair<int, const SparseRow*>> Echelon::sorted_rows() const {
    std::vector<std::pair<int, const SparseRow*>> out;
    out.reserve(rows_.size());
    for (int col = 0; col < static_cast<int>(pivot_slot_by_col_.size()); ++col)
        if (pivot_slot_by_col_[col] >= 0)
            out.emplace_back(col, &rows_[pivot_slot_by_col_[col]]);
    return out;
}

void Echelon::merge_from(const Echelon& other) {
    for (auto& [col, row] : other.sorted_rows()) {
        (void)col;
        insert(*row);
    }
}

namespace {

// Dense elimination for narrow systems; same unique RREF.
struct DenseEchelon {
    int cols;
    std::vector<Vec> rows;                 // each normalized, lead 1
    std::vector<int> leads;                // lead col per row
    std::vector<int> pivot_slot_by_col;    // -1 = none

    explicit DenseEchelon(int c) : cols(c), pivot_slot_by_col(c, -1) {}

    bool insert(Vec v) {
        int lead = 0;
        while (true) {
            while (lead < cols && v[lead].is_zero()) ++lead;
            if (lead == cols) return false;
            int slot = pivot_slot_by_col[lead];
            if (slot < 0) break;
            Rational c = -v[lead];
            const Vec& p = rows[slot];
            for (int j = lead; j < cols; ++j)
                if (!p[j].is_zero()) v[j] += c * p[j];
        }
        Rational inv = Rational(1) / v[lead];
        for (int j = lead; j < cols; ++j) v[j] *= inv;
        rows.push_back(std::move(v));
        leads.push_back(lead);
        pivot_slot_by_col[lead] = static_cast<int>(rows.size()) - 1;
        return true;
    }

    void back_substitute() {
        std::vector<std::pair<int, int>> order;
        for (int col = 0; col < cols; ++col)
            if (pivot_slot_by_col[col] >= 0) order.emplace_back(col, pivot_slot_by_col[col]);
        for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
            Vec& row = rows[order[k].second];
            for (int j = order[k].first + 1; j < cols; ++j) {
                if (row[j].is_zero()) continue;
                int slot = pivot_slot_by_col[j];
                if (slot < 0) continue;
                Rational c = -row[j];
                const Vec& p = rows[slot];
                for (int t = j; t < cols; ++t)
                    if (!p[t].is_zero()) row[t] += c * p[t];
            }
        }
    }
};

RrefResult emit_rref(Echelon& ech, int cols) {
    ech.back_substitute();
    auto sorted = ech.sorted_rows();
    SparseMatrix out(static_cast<int>(sorted.size()), cols);
    std::vector<int> pivots;
    pivots.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        out.set_row(static_cast<int>(i), *sorted[i].second);
        pivots.push_back(sorted[i].first);
    }
    return RrefResult{std::move(out), std::move(pivots)};
}

RrefResult rref_dense_path(const SparseMatrix& m) {
    DenseEchelon ech(m.cols());
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) ech.insert(row_to_dense(m.row(r), m.cols()));
    ech.back_substitute();
    std::vector<std::pair<int, int>> order;
    for (int col = 0; col < m.cols(); ++col)
        if (ech.pivot_slot_by_col[col] >= 0) order.emplace_back(col, ech.pivot_slot_by_col[col]);
    SparseMatrix out(static_cast<int>(order.size()), m.cols());
    std::vector<int> pivots;
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.set_row(static_cast<int>(i), row_from_dense(ech.rows[order[i].second]));
        pivots.push_back(order[i].first);
    }
    return RrefResult{std::move(out), std::move(pivots)};
}

}  // namespace

RrefResult rref_serial(const SparseMatrix& m) {
    if (m.cols() < kDenseColLimit) return rref_dense_path(m);
    Echelon ech(m.cols());
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) ech.insert(m.row(r));
    return emit_rref(ech, m.cols());
}

RrefResult rref(const SparseMatrix& m) {
    if (m.cols() < kDenseColLimit) return rref_dense_path(m);
#ifdef _OPENMP
    if (static_cast<std::size_t>(m.rows()) >= kParallelRowThreshold) {
        int nthreads = 1;
#pragma omp parallel
        {
#pragma omp single
            nthreads = omp_get_num_threads();
        }
        if (nthreads > 1) {
            std::vector<Echelon> locals;
            locals.reserve(nthreads);
            for (int t = 0; t < nthreads; ++t) locals.emplace_back(m.cols());
            const int rows = m.rows();
            const int chunk = (rows + nthreads - 1) / nthreads;
#pragma omp parallel for schedule(static, 1)
            for (int t = 0; t < nthreads; ++t) {
                int lo = t * chunk;
                int hi = std::min(rows, lo + chunk);
                for (int r = lo; r < hi; ++r)
                    if (!m.row(r).empty()) locals[t].insert(m.row(r));
            }
            Echelon global(m.cols());
            for (int t = 0; t < nthreads; ++t) global.merge_from(locals[t]);
            return emit_rref(global, m.cols());
        }
    }
#endif
    return rref_serial(m);
}

SubspaceBasis kernel_basis(const SparseMatrix& m) {
    RrefResult rr = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivots) is_pivot[p] = true;

    std::vector<Vec> vectors;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, Rational(0));
        v[f] = Rational(1);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            Rational coef = rr.matrix.get(static_cast<int>(r), f);
            if (!coef.is_zero()) v[rr.pivots[r]] = -coef;
        }
        vectors.push_back(std::move(v));
    }
    return canonical_span(vectors, n);
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    const int n = m.cols();
    SparseMatrix aug(m.rows(), n + 1);
    for (int r = 0; r < m.rows(); ++r) {
        SparseRow row = m.row(r);
        if (!b[r].is_zero()) row.push_back(Entry{n, b[r]});
        aug.set_row(r, std::move(row));
    }
    RrefResult rr = rref(aug);
    Vec x(n, Rational(0));
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        if (rr.pivots[r] == n) return std::nullopt;  // inconsistent
        x[rr.pivots[r]] = rr.matrix.get(static_cast<int>(r), n);
    }
    return x;
}

SubspaceBasis canonical_span(const std::vector<Vec>& vectors, int ambient_dim) {
    SparseMatrix m(static_cast<int>(vectors.size()), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (static_cast<int>(vectors[r].size()) != ambient_dim)
            throw std::invalid_argument("canonical_span: vector length mismatch");
        m.set_row(static_cast<int>(r), row_from_dense(vectors[r]));
    }
    RrefResult rr = rref(m);
    SubspaceBasis basis;
    basis.ambient_dim = ambient_dim;
    for (int r = 0; r < rr.matrix.rows(); ++r)
        basis.vectors.push_back(row_to_dense(rr.matrix.row(r), ambient_dim));
    return basis;
}

Vec reduce_against(const SubspaceBasis& basis, Vec v) {
    if (static_cast<int>(v.size()) != basis.ambient_dim)
        throw std::invalid_argument("subspace: dimension mismatch");
    for (const Vec& row : basis.vectors) {
        int lead = 0;
        while (lead < basis.ambient_dim && row[lead].is_zero()) ++lead;
        if (lead == basis.ambient_dim || v[lead].is_zero()) continue;
        Rational c = v[lead];
        for (int j = lead; j < basis.ambient_dim; ++j)
            if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    return v;
}

bool subspace_membership(const SubspaceBasis& basis, const Vec& v) {
    Vec r = reduce_against(basis, v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<Vec> coordinates_in(const SubspaceBasis& basis, const Vec& v) {
    if (!subspace_membership(basis, v)) return std::nullopt;
    // Basis rows are RREF: the coefficient of row k is v at row k's pivot.
    Vec coords;
    coords.reserve(basis.vectors.size());
    for (const Vec& row : basis.vectors) {
        int lead = 0;
        while (lead < basis.ambient_dim && row[lead].is_zero()) ++lead;
        coords.push_back(lead < basis.ambient_dim ? v[lead] : Rational(0));
    }
    return coords;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("subspace_sum: dimension mismatch");
    std::vector<Vec> all = a.vectors;
    all.insert(all.end(), b.vectors.begin(), b.vectors.end());
    return canonical_span(all, a.ambient_dim);
}

}  // namespace nf::exactlin
