#include <algorithm>
#include <set>
#include <stdexcept>

#include "nf/algebra.hpp"
#include "nf/nfsolver.hpp"

namespace nf::algebra {

namespace {

// (f (x) f) delta, written on the target's basis.
Mat push_delta(const AlgebraMorphism& f, const Mat& delta) {
    const int s = f.source().dim(), t = f.target().dim();
    Mat out = mat_zero(t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            if (delta[i][j].is_zero()) continue;
            const Vec& fi = f.image(i);
            const Vec& fj = f.image(j);
            for (int u = 0; u < t; ++u) {
                if (fi[u].is_zero()) continue;
                for (int v = 0; v < t; ++v)
                    if (!fj[v].is_zero()) out[u][v] += delta[i][j] * fi[u] * fj[v];
            }
        }
    return out;
}

}  // namespace

PullbackResult pullback(const AlgebraMorphism& fa, const AlgebraMorphism& fb,
                        const Mat& delta_a, const Mat& delta_b) {
    const FiniteAlgebra& A = fa.source();
    const FiniteAlgebra& B = fb.source();
    if (&fa.target() != &fb.target())
        throw std::invalid_argument("pullback: morphisms must share the same target algebra");
    const FiniteAlgebra& C = fa.target();
    if (!fa.surjective() || !fb.surjective())
        throw std::invalid_argument("pullback: both morphisms must be surjective");

    std::string offending;
    if (!nfsolver::is_casimir(A, delta_a, &offending))
        throw std::invalid_argument("pullback: delta_a is not a coproduct (fails at " +
                                    offending + ")");
    if (!nfsolver::is_casimir(B, delta_b, &offending))
        throw std::invalid_argument("pullback: delta_b is not a coproduct (fails at " +
                                    offending + ")");
    if (push_delta(fa, delta_a) != push_delta(fb, delta_b))
        throw std::invalid_argument(
            "pullback: the two coproducts do not agree through the target (the morphism "
            "squares fail for every choice of target coproduct)");

    const int na = A.dim(), nb = B.dim(), nc = C.dim();

    // R = kernel of f_A o pi_1 - f_B o pi_2 inside A (+) B.
    exactlin::SparseMatrix glue(nc, na + nb);
    for (int t = 0; t < nc; ++t) {
        exactlin::SparseRow row;
        for (int j = 0; j < na; ++j)
            if (!fa.image(j)[t].is_zero()) row.push_back(exactlin::Entry{j, fa.image(j)[t]});
        for (int j = 0; j < nb; ++j)
            if (!fb.image(j)[t].is_zero())
                row.push_back(exactlin::Entry{na + j, -fb.image(j)[t]});
        glue.set_row(t, std::move(row));
    }
    exactlin::SubspaceBasis embedding = exactlin::kernel_basis(glue);
    const int nr = embedding.dim();
    if (nr < 1) throw std::invalid_argument("pullback: the pullback is zero-dimensional");

    auto split_mul = [&](const Vec& u, const Vec& v) {
        Vec ua(u.begin(), u.begin() + na), ub(u.begin() + na, u.end());
        Vec va(v.begin(), v.begin() + na), vb(v.begin() + na, v.end());
        Vec pa = A.mul(ua, va), pb = B.mul(ub, vb);
        Vec out(na + nb, Rational(0));
        for (int i = 0; i < na; ++i) out[i] = pa[i];
        for (int i = 0; i < nb; ++i) out[na + i] = pb[i];
        return out;
    };

    std::vector<std::vector<SparseVec>> table(nr, std::vector<SparseVec>(nr));
    for (int x = 0; x < nr; ++x)
        for (int y = 0; y < nr; ++y) {
            Vec prod = split_mul(embedding.vectors[x], embedding.vectors[y]);
            auto coords = exactlin::coordinates_in(embedding, prod);
            if (!coords)
                throw std::logic_error("pullback: product fell outside the subalgebra");
            SparseVec s;
            for (int k = 0; k < nr; ++k)
                if (!(*coords)[k].is_zero()) s.emplace_back(k, (*coords)[k]);
            table[x][y] = std::move(s);
        }

    Vec unit_ab(na + nb, Rational(0));
    for (int i = 0; i < na; ++i) unit_ab[i] = A.unit()[i];
    for (int i = 0; i < nb; ++i) unit_ab[na + i] = B.unit()[i];
    auto unit_coords = exactlin::coordinates_in(embedding, unit_ab);
    if (!unit_coords)
        throw std::invalid_argument("pullback: (1,1) does not lie in the pullback");

    // Labels: shared or one-sided basis pairs keep their names.
    std::vector<std::string> labels(nr);
    std::set<std::string> used;
    for (int k = 0; k < nr; ++k) {
        const Vec& w = embedding.vectors[k];
        int ia = -1, ib = -1;
        bool clean = true;
        for (int i = 0; i < na && clean; ++i)
            if (!w[i].is_zero()) {
                if (ia >= 0 || w[i] != Rational(1)) clean = false;
                else ia = i;
            }
        for (int i = 0; i < nb && clean; ++i)
            if (!w[na + i].is_zero()) {
                if (ib >= 0 || w[na + i] != Rational(1)) clean = false;
                else ib = i;
            }
        std::string name;
        if (clean && ia >= 0)
            name = A.label(ia);
        else if (clean && ib >= 0)
            name = B.label(ib);
        else
            name = "r" + std::to_string(k);
        while (!used.insert(name).second) name += "'";
        labels[k] = name;
    }

    std::vector<int> gens(nr);
    for (int i = 0; i < nr; ++i) gens[i] = i;
    FiniteAlgebra R = FiniteAlgebra::from_parts(std::move(labels), std::move(table),
                                                *unit_coords, std::move(gens));

    // Projections pi_1, pi_2 on the chosen basis of R.
    Mat proj_a(na, Vec(nr, Rational(0))), proj_b(nb, Vec(nr, Rational(0)));
    for (int k = 0; k < nr; ++k) {
        for (int i = 0; i < na; ++i) proj_a[i][k] = embedding.vectors[k][i];
        for (int i = 0; i < nb; ++i) proj_b[i][k] = embedding.vectors[k][na + i];
    }

    // Lift the pair (delta_a, delta_b): delta_R in R (x) R must be a Casimir
    // element of R with (pi_1 (x) pi_1) delta_R = delta_a and
    // (pi_2 (x) pi_2) delta_R = delta_b.
    std::vector<int> all(nr);
    for (int i = 0; i < nr; ++i) all[i] = i;
    exactlin::SparseMatrix casimir = nfsolver::casimir_constraints(R, all);

    const int vars = nr * nr;
    const int casimir_rows = casimir.rows();
    const int proj_rows = na * na + nb * nb;
    exactlin::SparseMatrix system(casimir_rows + proj_rows, vars);
    Vec rhs(casimir_rows + proj_rows, Rational(0));
    for (int r = 0; r < casimir_rows; ++r) system.set_row(r, casimir.row(r));

    int row_at = casimir_rows;
    auto add_projection_rows = [&](const Mat& proj, const Mat& target_delta, int tdim) {
        for (int p = 0; p < tdim; ++p)
            for (int q = 0; q < tdim; ++q) {
                exactlin::SparseRow row;
                for (int k = 0; k < nr; ++k) {
                    if (proj[p][k].is_zero()) continue;
                    for (int l = 0; l < nr; ++l) {
                        if (proj[q][l].is_zero()) continue;
                        row.push_back(exactlin::Entry{k * nr + l, proj[p][k] * proj[q][l]});
                    }
                }
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) { return x.col < y.col; });
                // combine duplicates
                exactlin::SparseRow merged;
                for (auto& e : row) {
                    if (!merged.empty() && merged.back().col == e.col)
                        merged.back().val += e.val;
                    else
                        merged.push_back(e);
                }
                merged.erase(std::remove_if(merged.begin(), merged.end(),
                                            [](const auto& e) { return e.val.is_zero(); }),
                             merged.end());
                system.set_row(row_at, std::move(merged));
                rhs[row_at] = target_delta[p][q];
                ++row_at;
            }
    };
    add_projection_rows(proj_a, delta_a, na);
    add_projection_rows(proj_b, delta_b, nb);

    auto sol = exactlin::solve(system, rhs);
    if (!sol)
        throw std::invalid_argument(
            "pullback: no coproduct on the pullback projects onto the given pair; "
            "the image of the paired coproduct is not contained in R (x) R");

    PullbackResult out{std::move(R), std::move(embedding), std::move(proj_a),
                       std::move(proj_b), mat_from_flat(*sol, nr)};
    return out;
}

}  // namespace nf::algebra
