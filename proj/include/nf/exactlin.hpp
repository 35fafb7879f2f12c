#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nf/rational.hpp"

namespace nf::exactlin {

using Vec = std::vector<Rational>;

struct Entry {
    int col;
    Rational val;
    bool operator==(const Entry& o) const { return col == o.col && val == o.val; }
};

// Sorted by column, no zero values stored.
using SparseRow = std::vector<Entry>;

class SparseMatrix {
public:
    SparseMatrix(int rows, int cols);
    static SparseMatrix from_dense(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    const SparseRow& row(int r) const;
    void set_row(int r, SparseRow row);
    std::size_t nnz() const;

    bool operator==(const SparseMatrix& o) const;

private:
    int rows_, cols_;
    std::vector<SparseRow> data_;
};

// row += c * other
void row_axpy(SparseRow& row, const Rational& c, const SparseRow& other);
void row_scale(SparseRow& row, const Rational& c);
SparseRow row_from_dense(const Vec& v);
Vec row_to_dense(const SparseRow& r, int cols);

struct RrefResult {
    SparseMatrix matrix;
    std::vector<int> pivots;
};

// Reduced row echelon form. `rref` may use OpenMP internally; the result is
// the unique RREF of the row space, so it is identical to `rref_serial`
// regardless of thread count.
RrefResult rref(const SparseMatrix& m);
RrefResult rref_serial(const SparseMatrix& m);

// Basis of a linear subspace, stored in canonical RREF form: each vector has
// a leading 1 at a pivot column, pivot columns strictly increase, and each
// pivot column is zero in every other vector. Two bases of the same subspace
// compare equal.
struct SubspaceBasis {
    int ambient_dim = 0;
    std::vector<Vec> vectors;

    int dim() const { return static_cast<int>(vectors.size()); }
    bool operator==(const SubspaceBasis& o) const {
        return ambient_dim == o.ambient_dim && vectors == o.vectors;
    }
};

// Canonical basis of {v : m v = 0}.
SubspaceBasis kernel_basis(const SparseMatrix& m);

// One exact solution of m x = b (free variables set to 0), if consistent.
std::optional<Vec> solve(const SparseMatrix& m, const Vec& b);

// Canonical basis of span(vectors).
SubspaceBasis canonical_span(const std::vector<Vec>& vectors, int ambient_dim);

bool subspace_membership(const SubspaceBasis& basis, const Vec& v);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);

// v minus its projection onto the span; zero residual iff member.
Vec reduce_against(const SubspaceBasis& basis, Vec v);

// Coefficients of v in the basis rows, if v lies in the span.
std::optional<Vec> coordinates_in(const SubspaceBasis& basis, const Vec& v);

// Incremental echelon engine used by everything above. Rows are kept
// normalized (leading coefficient 1) and lead-reduced; back_substitute()
// turns the set into the unique RREF.
class Echelon {
public:
    explicit Echelon(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Returns true if the row was independent (rank grew).
    bool insert(SparseRow row);

    // Residual of row after eliminating every pivot coordinate.
    SparseRow reduce_full(SparseRow row) const;

    void back_substitute();

    // Pivot columns in increasing order with their rows.
    std::vector<std::pair<int, const SparseRow*>> sorted_rows() const;

    void merge_from(const Echelon& other);

private:
    int cols_;
    std::vector<SparseRow> rows_;           // indexed by slot
    std::vector<mpz_class> pivot_weight_;   // |num|*den of the original lead
    std::vector<int> pivot_slot_by_col_;    // lazily sized; -1 = none
    int slot_for_col(int col) const;
    void set_slot(int col, int slot);
};

}  // namespace nf::exactlin
