#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nf/exactlin.hpp"
#include "nf/quiver.hpp"

namespace nf {
// dim x dim dense matrix of exact rationals (row-major by convention when
// vectorized).
using Mat = std::vector<exactlin::Vec>;

Mat mat_zero(int n);
exactlin::Vec mat_vectorize(const Mat& m);
Mat mat_from_flat(const exactlin::Vec& v, int n);
bool mat_is_zero(const Mat& m);
}  // namespace nf

namespace nf::algebra {

using exactlin::Vec;
// Element coordinates in the owning algebra's ordered basis.
using AlgebraElement = exactlin::Vec;
// Sorted by basis index, zero coefficients absent.
using SparseVec = std::vector<std::pair<int, Rational>>;

// Finite-dimensional unital associative algebra presented by structure
// constants on an ordered labeled basis.
class FiniteAlgebra {
public:
    static FiniteAlgebra from_parts(std::vector<std::string> labels,
                                    std::vector<std::vector<SparseVec>> table, Vec unit,
                                    std::vector<int> generators);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    int label_index(const std::string& s) const;  // -1 if absent

    // e_i * e_j
    const SparseVec& product(int i, int j) const { return table_[i][j]; }
    const Vec& unit() const { return unit_; }
    const std::vector<int>& generators() const { return generators_; }

    Vec basis_vec(int i) const;
    Vec mul(const Vec& a, const Vec& b) const;

    // Associativity, unit laws, and generator span; nullopt when consistent.
    std::optional<std::string> check_consistency() const;

private:
    FiniteAlgebra() = default;
    int dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVec>> table_;
    Vec unit_;
    std::vector<int> generators_;
};

// (e_x (x) 1) . delta  and  delta . (1 (x) e_x) for a Casimir candidate.
Mat act_left(const FiniteAlgebra& a, int x, const Mat& delta);
Mat act_right(const FiniteAlgebra& a, int x, const Mat& delta);

// --- builders ------------------------------------------------------------

FiniteAlgebra from_bound_quiver(const quiver::BoundQuiverSpec& spec,
                                std::size_t path_cap = 100000);
FiniteAlgebra truncated_polynomial(int n);
FiniteAlgebra matrix_algebra(int n);
FiniteAlgebra cyclic_group_algebra(int n);

// --- morphisms -----------------------------------------------------------

class AlgebraMorphism {
public:
    // images[j] = f(e_j); throws unless f(1)=1 and f(e_i e_j)=f(e_i)f(e_j).
    AlgebraMorphism(const FiniteAlgebra& source, const FiniteAlgebra& target,
                    std::vector<Vec> images);

    const FiniteAlgebra& source() const { return *source_; }
    const FiniteAlgebra& target() const { return *target_; }
    const Vec& image(int j) const { return images_[j]; }
    Vec apply(const Vec& v) const;
    bool surjective() const;

private:
    const FiniteAlgebra* source_;
    const FiniteAlgebra* target_;
    std::vector<Vec> images_;
};

// --- ideals and quotients --------------------------------------------------

struct IdealSubspace {
    exactlin::SubspaceBasis basis;  // closed under left/right multiplication
};

// Smallest two-sided ideal containing the given elements, by saturation.
IdealSubspace ideal_closure(const FiniteAlgebra& a, const std::vector<Vec>& gens);

// Delta(J) subset J(x)A + A(x)J for the coproduct induced by delta.
bool is_nf_ideal(const FiniteAlgebra& a, const Mat& delta, const IdealSubspace& j);

struct QuotientResult {
    FiniteAlgebra algebra;
    Mat projection;                // q x dim matrix of p : A -> A/J
    std::optional<Mat> induced_delta;  // (p (x) p) delta, when delta given
};

// Throws if 1 lies in J, or if delta is given but J is not a nearly
// Frobenius ideal for it.
QuotientResult quotient(const FiniteAlgebra& a, const IdealSubspace& j,
                        const std::optional<Mat>& delta);

// --- sums, tensors, opposites ----------------------------------------------

FiniteAlgebra opposite(const FiniteAlgebra& a);
Mat opposite_delta(const Mat& delta);  // swap of tensor factors (transpose)

struct DirectSumResult {
    FiniteAlgebra algebra;
    std::vector<int> offsets;  // block start per summand
};
DirectSumResult direct_sum(const std::vector<const FiniteAlgebra*>& parts);
Mat direct_sum_delta(const DirectSumResult& sum, const std::vector<Mat>& deltas);

struct TensorResult {
    FiniteAlgebra algebra;
    int dim_a = 0, dim_b = 0;  // pair (i,k) -> i*dim_b + k
};
TensorResult tensor_product(const FiniteAlgebra& a, const FiniteAlgebra& b,
                            int dim_cap = 4096);
// (1 (x) twist (x) 1)(delta_a (x) delta_b)
Mat tensor_delta(const TensorResult& t, const Mat& da, const Mat& db);

// --- pullback ----------------------------------------------------------------

struct PullbackResult {
    FiniteAlgebra algebra;              // R = { (a,b) : f_A(a) = f_B(b) }
    exactlin::SubspaceBasis embedding;  // R basis vectors inside A (+) B
    Mat proj_a, proj_b;                 // dimA x dimR and dimB x dimR
    Mat delta;                          // lifted coproduct on R
};

// Requires the same target algebra, surjective morphisms, and
// (f_A (x) f_A) delta_a == (f_B (x) f_B) delta_b (the shared coproduct on C).
PullbackResult pullback(const AlgebraMorphism& fa, const AlgebraMorphism& fb,
                        const Mat& delta_a, const Mat& delta_b);

}  // namespace nf::algebra
