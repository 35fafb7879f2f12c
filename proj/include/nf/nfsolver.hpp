#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nf/algebra.hpp"

namespace nf::nfsolver {

using algebra::FiniteAlgebra;
using exactlin::Vec;

// delta = Delta(1) = sum D[i][j] e_i (x) e_j with
// (x (x) 1) delta = delta (1 (x) x) for every x. Every such element induces a
// coassociative bimodule coproduct via Delta(x) = (x (x) 1) delta, and every
// such coproduct arises this way for a unital algebra.
struct CasimirElement {
    Mat coefficients;
};

// Full coproduct: one dim x dim image matrix per basis element.
struct Coproduct {
    std::vector<Mat> images;
};

struct FrobeniusSpace {
    std::vector<Mat> basis;  // canonical: vectorized row-major, RREF order
    int dimension() const { return static_cast<int>(basis.size()); }
};

struct Counit {
    Vec functional;  // value on each basis element
};

struct SolverOptions {
    // Assemble constraints only over the algebra's generator set; the full
    // basis gives the same space (checked by tests and in debug builds).
    bool use_generators = true;
    // Re-verify every kernel element against the full basis constraints.
    bool verify_full_basis = false;
};

// Sparse constraint matrix whose kernel (viewed row-major as dim x dim
// matrices) is the Frobenius space.
exactlin::SparseMatrix casimir_constraints(const FiniteAlgebra& a,
                                           const std::vector<int>& constrain_over);

FrobeniusSpace casimir_space(const FiniteAlgebra& a, const SolverOptions& opts = {});

long long frobdim(const FiniteAlgebra& a);

// True iff (x (x) 1) delta == delta (1 (x) x) for every basis element x.
bool is_casimir(const FiniteAlgebra& a, const Mat& delta, std::string* offending = nullptr);

// Throws std::invalid_argument naming the offending basis element when delta
// is not a Casimir element.
Coproduct induce_coproduct(const FiniteAlgebra& a, const Mat& delta);

struct VerifyResult {
    bool ok = false;
    std::string counterexample;  // empty when ok
};

VerifyResult verify_bimodule(const FiniteAlgebra& a, const Coproduct& c);
VerifyResult verify_coassociative(const FiniteAlgebra& a, const Coproduct& c);

std::optional<Counit> find_counit(const FiniteAlgebra& a, const Coproduct& c);

// Membership of a coproduct (by its Casimir matrix) in the Frobenius space.
bool space_contains(const FrobeniusSpace& space, const Mat& delta);

}  // namespace nf::nfsolver
