#include "nf/nfsolver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nf::nfsolver {

using algebra::SparseVec;

exactlin::SparseMatrix casimir_constraints(const FiniteAlgebra& a,
                                           const std::vector<int>& constrain_over) {
    const int n = a.dim();
    const int block = n * n;
    exactlin::SparseMatrix m(static_cast<int>(constrain_over.size()) * block, block);

    // Row ((g, l, j)): sum_i a_{g i}^l D[i][j] - sum_i a_{i g}^j D[l][i] = 0,
    // variable (i, j) at column i*n + j.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int gpos = 0; gpos < static_cast<int>(constrain_over.size()); ++gpos) {
        const int g = constrain_over[gpos];
        // left[l] = entries (i, c) with e_g e_i = ... + c e_l + ...
        std::vector<std::vector<std::pair<int, Rational>>> left(n), right(n);
        for (int i = 0; i < n; ++i) {
            for (const auto& [l, c] : a.product(g, i)) left[l].emplace_back(i, c);
            for (const auto& [j, c] : a.product(i, g)) right[j].emplace_back(i, c);
        }
        for (int l = 0; l < n; ++l) {
            for (int j = 0; j < n; ++j) {
                std::map<int, Rational> row;
                for (const auto& [i, c] : left[l]) row[i * n + j] += c;
                for (const auto& [i, c] : right[j]) row[l * n + i] -= c;
                exactlin::SparseRow sr;
                for (auto& [col, val] : row)
                    if (!val.is_zero()) sr.push_back(exactlin::Entry{col, val});
                m.set_row((gpos * n + l) * n + j, std::move(sr));
            }
        }
    }
    return m;
}

FrobeniusSpace casimir_space(const FiniteAlgebra& a, const SolverOptions& opts) {
    const int n = a.dim();
    std::vector<int> over;
    if (opts.use_generators) {
        over = a.generators();
    } else {
        over.resize(n);
        for (int i = 0; i < n; ++i) over[i] = i;
    }
    exactlin::SubspaceBasis kernel = exactlin::kernel_basis(casimir_constraints(a, over));

    FrobeniusSpace space;
    for (const Vec& v : kernel.vectors) space.basis.push_back(mat_from_flat(v, n));

    bool recheck = opts.verify_full_basis;
#ifndef NDEBUG
    recheck = true;
#endif
    if (recheck && opts.use_generators) {
        for (const Mat& d : space.basis) {
            if (!is_casimir(a, d))
                throw std::logic_error(
                    "casimir_space: generator constraints admitted a non-Casimir element");
        }
    }
    return space;
}

long long frobdim(const FiniteAlgebra& a) { return casimir_space(a).dimension(); }

bool is_casimir(const FiniteAlgebra& a, const Mat& delta, std::string* offending) {
    for (int x = 0; x < a.dim(); ++x) {
        if (algebra::act_left(a, x, delta) != algebra::act_right(a, x, delta)) {
            if (offending) *offending = a.label(x);
            return false;
        }
    }
    return true;
}

Coproduct induce_coproduct(const FiniteAlgebra& a, const Mat& delta) {
    std::string offending;
    if (!is_casimir(a, delta, &offending))
        throw std::invalid_argument(
            "induce_coproduct: (x (x) 1) delta != delta (1 (x) x) at basis element " +
            offending);
    Coproduct c;
    c.images.reserve(a.dim());
    for (int k = 0; k < a.dim(); ++k) c.images.push_back(algebra::act_left(a, k, delta));
    return c;
}

namespace {

Mat image_of_element(const FiniteAlgebra& a, const Coproduct& c, const Vec& v) {
    Mat out = mat_zero(a.dim());
    for (int k = 0; k < a.dim(); ++k) {
        if (v[k].is_zero()) continue;
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                if (!c.images[k][i][j].is_zero()) out[i][j] += v[k] * c.images[k][i][j];
    }
    return out;
}

// (e_x (x) 1) . M where M is a coproduct image (left factor multiplied).
Mat left_mult_image(const FiniteAlgebra& a, int x, const Mat& m) {
    return algebra::act_left(a, x, m);
}

// M . (1 (x) e_y) (right factor multiplied).
Mat right_mult_image(const FiniteAlgebra& a, int y, const Mat& m) {
    return algebra::act_right(a, y, m);
}

}  // namespace

VerifyResult verify_bimodule(const FiniteAlgebra& a, const Coproduct& c) {
    const int n = a.dim();
    if (static_cast<int>(c.images.size()) != n)
        return {false, "coproduct has the wrong number of basis images"};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Mat lhs = image_of_element(a, c, a.mul(a.basis_vec(i), a.basis_vec(j)));
            Mat left = left_mult_image(a, i, c.images[j]);
            if (lhs != left)
                return {false, "Delta(" + a.label(i) + "*" + a.label(j) + ") != (" +
                                    a.label(i) + " (x) 1) Delta(" + a.label(j) + ")"};
            Mat right = right_mult_image(a, j, c.images[i]);
            if (lhs != right)
                return {false, "Delta(" + a.label(i) + "*" + a.label(j) + ") != Delta(" +
                                    a.label(i) + ") (1 (x) " + a.label(j) + ")"};
        }
    }
    return {true, ""};
}

VerifyResult verify_coassociative(const FiniteAlgebra& a, const Coproduct& c) {
    const int n = a.dim();
    if (static_cast<int>(c.images.size()) != n)
        return {false, "coproduct has the wrong number of basis images"};
    // Compare (Delta (x) 1) Delta(e_k) with (1 (x) Delta) Delta(e_k) in the
    // flattened triple tensor (u, v, w) -> (u*n + v)*n + w.
    for (int k = 0; k < n; ++k) {
        std::vector<Rational> lhs(static_cast<std::size_t>(n) * n * n, Rational(0));
        std::vector<Rational> rhs(lhs.size(), Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rational& c_ij = c.images[k][i][j];
                if (c_ij.is_zero()) continue;
                const Mat& di = c.images[i];
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (!di[u][v].is_zero())
                            lhs[(static_cast<std::size_t>(u) * n + v) * n + j] +=
                                c_ij * di[u][v];
                const Mat& dj = c.images[j];
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v)
                        if (!dj[u][v].is_zero())
                            rhs[(static_cast<std::size_t>(i) * n + u) * n + v] +=
                                c_ij * dj[u][v];
            }
        if (lhs != rhs) return {false, "coassociativity fails at Delta(" + a.label(k) + ")"};
    }
    return {true, ""};
}

std::optional<Counit> find_counit(const FiniteAlgebra& a, const Coproduct& c) {
    const int n = a.dim();
    // Unknown eps (length n); equations, for each k:
    //   sum_i M^k[i][j] eps_i = delta_{jk}   (left counit identity)
    //   sum_j M^k[i][j] eps_j = delta_{ik}   (right counit identity)
    std::vector<exactlin::Vec> rows;
    exactlin::Vec rhs_values;
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            exactlin::Vec row(n, Rational(0));
            for (int i = 0; i < n; ++i) row[i] = c.images[k][i][j];
            rows.push_back(std::move(row));
            rhs_values.push_back(j == k ? Rational(1) : Rational(0));
        }
        for (int i = 0; i < n; ++i) {
            exactlin::Vec row(n, Rational(0));
            for (int j = 0; j < n; ++j) row[j] = c.images[k][i][j];
            rows.push_back(std::move(row));
            rhs_values.push_back(i == k ? Rational(1) : Rational(0));
        }
    }
    exactlin::SparseMatrix m = exactlin::SparseMatrix::from_dense(rows, n);
    auto sol = exactlin::solve(m, rhs_values);
    if (!sol) return std::nullopt;
    return Counit{*sol};
}

bool space_contains(const FrobeniusSpace& space, const Mat& delta) {
    if (space.basis.empty()) return mat_is_zero(delta);
    const int n = static_cast<int>(delta.size());
    exactlin::SubspaceBasis basis;
    basis.ambient_dim = n * n;
    for (const Mat& b : space.basis) basis.vectors.push_back(mat_vectorize(b));
    return exactlin::subspace_membership(basis, mat_vectorize(delta));
}

}  // namespace nf::nfsolver
