#include "nf/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nf {

Mat mat_zero(int n) { return Mat(n, exactlin::Vec(n, Rational(0))); }

exactlin::Vec mat_vectorize(const Mat& m) {
    exactlin::Vec v;
    v.reserve(m.size() * m.size());
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
}

Mat mat_from_flat(const exactlin::Vec& v, int n) {
    Mat m = mat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = v[i * n + j];
    return m;
}

bool mat_is_zero(const Mat& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

}  // namespace nf

namespace nf::algebra {

namespace {

SparseVec sparse_from_dense(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
    return s;
}

void add_scaled(Vec& acc, const Rational& c, const SparseVec& s) {
    for (const auto& [i, val] : s) acc[i] += c * val;
}

bool vec_equal(const Vec& a, const Vec& b) { return a == b; }

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_parts(std::vector<std::string> labels,
                                        std::vector<std::vector<SparseVec>> table, Vec unit,
                                        std::vector<int> generators) {
    FiniteAlgebra a;
    a.dim_ = static_cast<int>(labels.size());
    if (a.dim_ < 1) throw std::invalid_argument("FiniteAlgebra: dimension must be >= 1");
    if (static_cast<int>(table.size()) != a.dim_ ||
        static_cast<int>(unit.size()) != a.dim_)
        throw std::invalid_argument("FiniteAlgebra: shape mismatch");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != a.dim_)
            throw std::invalid_argument("FiniteAlgebra: table shape mismatch");
    for (int g : generators)
        if (g < 0 || g >= a.dim_)
            throw std::invalid_argument("FiniteAlgebra: generator index out of range");
    a.labels_ = std::move(labels);
    a.table_ = std::move(table);
    a.unit_ = std::move(unit);
    a.generators_ = std::move(generators);
#ifndef NDEBUG
    if (auto err = a.check_consistency())
        throw std::logic_error("FiniteAlgebra: " + *err);
#endif
    return a;
}

int FiniteAlgebra::label_index(const std::string& s) const {
    for (int i = 0; i < dim_; ++i)
        if (labels_[i] == s) return i;
    return -1;
}

Vec FiniteAlgebra::basis_vec(int i) const {
    Vec v(dim_, Rational(0));
    v[i] = Rational(1);
    return v;
}

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
    Vec out(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            Rational c = a[i] * b[j];
            add_scaled(out, c, table_[i][j]);
        }
    }
    return out;
}

std::optional<std::string> FiniteAlgebra::check_consistency() const {
    // unit laws
    for (int i = 0; i < dim_; ++i) {
        if (!vec_equal(mul(unit_, basis_vec(i)), basis_vec(i)))
            return "unit law fails on the left at basis " + labels_[i];
        if (!vec_equal(mul(basis_vec(i), unit_), basis_vec(i)))
            return "unit law fails on the right at basis " + labels_[i];
    }
    // associativity on all basis triples
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Vec ij = mul(basis_vec(i), basis_vec(j));
            for (int l = 0; l < dim_; ++l) {
                Vec left = mul(ij, basis_vec(l));
                Vec right = mul(basis_vec(i), mul(basis_vec(j), basis_vec(l)));
                if (!vec_equal(left, right))
                    return "associativity fails at (" + labels_[i] + ", " + labels_[j] +
                           ", " + labels_[l] + ")";
            }
        }
    // generators generate (iterated products of generators and the unit)
    exactlin::Echelon span(dim_);
    std::deque<Vec> frontier;
    auto push = [&](Vec v) {
        if (span.insert(exactlin::row_from_dense(v))) frontier.push_back(std::move(v));
    };
    push(unit_);
    for (int g : generators_) push(basis_vec(g));
    while (!frontier.empty()) {
        Vec v = std::move(frontier.front());
        frontier.pop_front();
        for (int g : generators_) {
            push(mul(v, basis_vec(g)));
            push(mul(basis_vec(g), v));
        }
    }
    if (span.rank() != dim_) return "generators do not generate the algebra";
    return std::nullopt;
}

Mat act_left(const FiniteAlgebra& a, int x, const Mat& delta) {
    const int n = a.dim();
    Mat out = mat_zero(n);
    for (int i = 0; i < n; ++i) {
        const SparseVec& prod = a.product(x, i);  // e_x e_i
        if (prod.empty()) continue;
        for (int j = 0; j < n; ++j) {
            if (delta[i][j].is_zero()) continue;
            for (const auto& [u, c] : prod) out[u][j] += c * delta[i][j];
        }
    }
    return out;
}

Mat act_right(const FiniteAlgebra& a, int x, const Mat& delta) {
    const int n = a.dim();
    Mat out = mat_zero(n);
    for (int j = 0; j < n; ++j) {
        const SparseVec& prod = a.product(j, x);  // e_j e_x
        if (prod.empty()) continue;
        for (int i = 0; i < n; ++i) {
            if (delta[i][j].is_zero()) continue;
            for (const auto& [k, c] : prod) out[i][k] += c * delta[i][j];
        }
    }
    return out;
}

// --- builders ------------------------------------------------------------

FiniteAlgebra from_bound_quiver(const quiver::BoundQuiverSpec& spec, std::size_t path_cap) {
    spec.check_valid();
    if (!quiver::validate_admissible(spec, path_cap))
        throw std::invalid_argument(
            "bound quiver is not admissible: some path of the bound length does not "
            "reduce to zero");

    quiver::PathSpace ps = quiver::build_path_space(spec, spec.bound - 1, path_cap);
    exactlin::SubspaceBasis ideal = quiver::truncated_relation_ideal(spec, ps);

    const int n = ps.size();
    std::vector<bool> eliminated(n, false);
    for (const Vec& row : ideal.vectors) {
        int lead = 0;
        while (lead < n && row[lead].is_zero()) ++lead;
        eliminated[lead] = true;
    }
    std::vector<int> kept;        // path index -> quotient index
    std::vector<int> quot_index(n, -1);
    for (int i = 0; i < n; ++i)
        if (!eliminated[i]) {
            quot_index[i] = static_cast<int>(kept.size());
            kept.push_back(i);
        }
    const int dim = static_cast<int>(kept.size());

    auto reduce_to_quotient = [&](Vec v) {
        v = exactlin::reduce_against(ideal, std::move(v));
        Vec out(dim, Rational(0));
        for (int i = 0; i < n; ++i)
            if (!v[i].is_zero()) out[quot_index[i]] = v[i];
        return out;
    };

    std::vector<std::string> labels;
    labels.reserve(dim);
    for (int i : kept) labels.push_back(ps.paths[i].label(spec.quiver));

    std::vector<std::vector<SparseVec>> table(dim, std::vector<SparseVec>(dim));
    for (int a = 0; a < dim; ++a) {
        const quiver::Path& pa = ps.paths[kept[a]];
        for (int b = 0; b < dim; ++b) {
            const quiver::Path& pb = ps.paths[kept[b]];
            if (pa.target(spec.quiver) != pb.source) continue;           // zero product
            if (pa.length() + pb.length() >= spec.bound) continue;       // truncated
            quiver::Path prod;
            prod.source = pa.trivial() ? pb.source : pa.source;
            prod.arrows = pa.arrows;
            prod.arrows.insert(prod.arrows.end(), pb.arrows.begin(), pb.arrows.end());
            int idx = ps.index_of(prod);
            if (idx < 0) continue;
            Vec v(n, Rational(0));
            v[idx] = Rational(1);
            table[a][b] = sparse_from_dense(reduce_to_quotient(std::move(v)));
        }
    }

    Vec unit(dim, Rational(0));
    std::vector<int> generators;
    for (int qi = 0; qi < dim; ++qi) {
        const quiver::Path& p = ps.paths[kept[qi]];
        if (p.trivial()) {
            unit[qi] = Rational(1);
            generators.push_back(qi);
        } else if (p.length() == 1) {
            generators.push_back(qi);
        }
    }
    return FiniteAlgebra::from_parts(std::move(labels), std::move(table), std::move(unit),
                                     std::move(generators));
}

FiniteAlgebra truncated_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("truncated_polynomial: n must be >= 0");
    const int dim = n + 1;
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    std::vector<std::vector<SparseVec>> table(dim, std::vector<SparseVec>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i + j <= n) table[i][j] = {{i + j, Rational(1)}};
    Vec unit(dim, Rational(0));
    unit[0] = Rational(1);
    std::vector<int> gens = n >= 1 ? std::vector<int>{1} : std::vector<int>{0};
    return FiniteAlgebra::from_parts(std::move(labels), std::move(table), std::move(unit),
                                     std::move(gens));
}

FiniteAlgebra matrix_algebra(int n) {
    if (n < 1) throw std::invalid_argument("matrix_algebra: n must be >= 1");
    const int dim = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };  // E_{i+1, j+1}
    std::vector<std::string> labels(dim);
    std::vector<std::vector<SparseVec>> table(dim, std::vector<SparseVec>(dim));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            labels[idx(i, j)] = "E_" + std::to_string(i + 1) + std::to_string(j + 1);
    // E_ij E_kl = delta_jk E_il
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                table[idx(i, j)][idx(j, l)] = {{idx(i, l), Rational(1)}};
    Vec unit(dim, Rational(0));
    for (int i = 0; i < n; ++i) unit[idx(i, i)] = Rational(1);
    std::vector<int> gens(dim);
    for (int i = 0; i < dim; ++i) gens[i] = i;
    return FiniteAlgebra::from_parts(std::move(labels), std::move(table), std::move(unit),
                                     std::move(gens));
}

FiniteAlgebra cyclic_group_algebra(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group_algebra: n must be >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = {{(i + j) % n, Rational(1)}};
    Vec unit(n, Rational(0));
    unit[0] = Rational(1);
    std::vector<int> gens = n >= 2 ? std::vector<int>{1} : std::vector<int>{0};
    return FiniteAlgebra::from_parts(std::move(labels), std::move(table), std::move(unit),
                                     std::move(gens));
}

// --- morphisms -----------------------------------------------------------

AlgebraMorphism::AlgebraMorphism(const FiniteAlgebra& source, const FiniteAlgebra& target,
                                 std::vector<Vec> images)
    : source_(&source), target_(&target), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source.dim())
        throw std::invalid_argument("AlgebraMorphism: one image per source basis element");
    for (const auto& v : images_)
        if (static_cast<int>(v.size()) != target.dim())
            throw std::invalid_argument("AlgebraMorphism: image length mismatch");
    if (!vec_equal(apply(source.unit()), target.unit()))
        throw std::invalid_argument("AlgebraMorphism: f(1) != 1");
    for (int i = 0; i < source.dim(); ++i)
        for (int j = 0; j < source.dim(); ++j) {
            Vec lhs = apply(source.mul(source.basis_vec(i), source.basis_vec(j)));
            Vec rhs = target.mul(images_[i], images_[j]);
            if (!vec_equal(lhs, rhs))
                throw std::invalid_argument("AlgebraMorphism: not multiplicative at (" +
                                            source.label(i) + ", " + source.label(j) + ")");
        }
}

Vec AlgebraMorphism::apply(const Vec& v) const {
    Vec out(target_->dim(), Rational(0));
    for (int j = 0; j < source_->dim(); ++j) {
        if (v[j].is_zero()) continue;
        for (int t = 0; t < target_->dim(); ++t) out[t] += v[j] * images_[j][t];
    }
    return out;
}

bool AlgebraMorphism::surjective() const {
    return exactlin::canonical_span(images_, target_->dim()).dim() == target_->dim();
}

// --- ideals ----------------------------------------------------------------

IdealSubspace ideal_closure(const FiniteAlgebra& a, const std::vector<Vec>& gens) {
    const int n = a.dim();
    exactlin::Echelon ech(n);
    std::deque<Vec> frontier;
    auto push = [&](Vec v) {
        if (vec_is_zero(v)) return;
        if (ech.insert(exactlin::row_from_dense(v))) frontier.push_back(std::move(v));
    };
    for (const Vec& g : gens) {
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("ideal_closure: element length mismatch");
        push(g);
    }
    while (!frontier.empty()) {
        Vec v = std::move(frontier.front());
        frontier.pop_front();
        for (int g : a.generators()) {
            push(a.mul(a.basis_vec(g), v));
            push(a.mul(v, a.basis_vec(g)));
        }
    }
    ech.back_substitute();
    IdealSubspace out;
    out.basis.ambient_dim = n;
    for (auto& [col, row] : ech.sorted_rows()) {
        (void)col;
        out.basis.vectors.push_back(exactlin::row_to_dense(*row, n));
    }
    return out;
}

bool is_nf_ideal(const FiniteAlgebra& a, const Mat& delta, const IdealSubspace& j) {
    const int n = a.dim();
    // span of J (x) A + A (x) J inside A (x) A, vectorized row-major
    std::vector<Vec> span;
    for (const Vec& jv : j.basis.vectors) {
        for (int k = 0; k < n; ++k) {
            Vec left(n * n, Rational(0));   // jv (x) e_k
            Vec right(n * n, Rational(0));  // e_k (x) jv
            for (int i = 0; i < n; ++i) {
                if (jv[i].is_zero()) continue;
                left[i * n + k] = jv[i];
                right[k * n + i] = jv[i];
            }
            span.push_back(std::move(left));
            span.push_back(std::move(right));
        }
    }
    exactlin::SubspaceBasis target = exactlin::canonical_span(span, n * n);

    for (const Vec& jv : j.basis.vectors) {
        // Delta(v) = (v (x) 1) delta
        Mat image = mat_zero(n);
        for (int x = 0; x < n; ++x) {
            if (jv[x].is_zero()) continue;
            Mat part = act_left(a, x, delta);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) image[r][c] += jv[x] * part[r][c];
        }
        if (!exactlin::subspace_membership(target, mat_vectorize(image))) return false;
    }
    return true;
}

QuotientResult quotient(const FiniteAlgebra& a, const IdealSubspace& j,
                        const std::optional<Mat>& delta) {
    const int n = a.dim();
    if (j.basis.ambient_dim != n)
        throw std::invalid_argument("quotient: ideal lives in a different algebra");
    if (exactlin::subspace_membership(j.basis, a.unit()))
        throw std::invalid_argument("quotient: the unit lies in the ideal");
    if (delta && !is_nf_ideal(a, *delta, j))
        throw std::invalid_argument(
            "quotient: the ideal is not a nearly Frobenius ideal for the given coproduct");

    std::vector<bool> eliminated(n, false);
    for (const Vec& row : j.basis.vectors) {
        int lead = 0;
        while (lead < n && row[lead].is_zero()) ++lead;
        eliminated[lead] = true;
    }
    std::vector<int> kept, quot_index(n, -1);
    for (int i = 0; i < n; ++i)
        if (!eliminated[i]) {
            quot_index[i] = static_cast<int>(kept.size());
            kept.push_back(i);
        }
    const int q = static_cast<int>(kept.size());

    auto project = [&](Vec v) {
        v = exactlin::reduce_against(j.basis, std::move(v));
        Vec out(q, Rational(0));
        for (int i = 0; i < n; ++i)
            if (!v[i].is_zero()) out[quot_index[i]] = v[i];
        return out;
    };

    std::vector<std::string> labels;
    for (int i : kept) labels.push_back(a.label(i));
    std::vector<std::vector<SparseVec>> table(q, std::vector<SparseVec>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            table[x][y] =
                sparse_from_dense(project(a.mul(a.basis_vec(kept[x]), a.basis_vec(kept[y]))));
    Vec unit = project(a.unit());
    std::vector<int> gens(q);
    for (int i = 0; i < q; ++i) gens[i] = i;

    QuotientResult out{FiniteAlgebra::from_parts(std::move(labels), std::move(table),
                                                 std::move(unit), std::move(gens)),
                       Mat(q, Vec(n, Rational(0))), std::nullopt};
    for (int i = 0; i < n; ++i) {
        Vec col = project(a.basis_vec(i));
        for (int r = 0; r < q; ++r) out.projection[r][i] = col[r];
    }
    if (delta) {
        // (p (x) p) delta
        Mat induced = mat_zero(q);
        for (int i = 0; i < n; ++i)
            for (int jx = 0; jx < n; ++jx) {
                if ((*delta)[i][jx].is_zero()) continue;
                for (int r = 0; r < q; ++r) {
                    if (out.projection[r][i].is_zero()) continue;
                    for (int c = 0; c < q; ++c)
                        induced[r][c] +=
                            (*delta)[i][jx] * out.projection[r][i] * out.projection[c][jx];
                }
            }
        out.induced_delta = std::move(induced);
    }
    return out;
}

// --- opposite / sum / tensor -------------------------------------------------

FiniteAlgebra opposite(const FiniteAlgebra& a) {
    const int n = a.dim();
    std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = a.product(j, i);
    return FiniteAlgebra::from_parts(a.labels(), std::move(table), a.unit(), a.generators());
}

Mat opposite_delta(const Mat& delta) {
    const int n = static_cast<int>(delta.size());
    Mat out = mat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[j][i] = delta[i][j];
    return out;
}

DirectSumResult direct_sum(const std::vector<const FiniteAlgebra*>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: empty summand list");
    int dim = 0;
    std::vector<int> offsets;
    for (const auto* p : parts) {
        offsets.push_back(dim);
        dim += p->dim();
    }
    std::vector<std::string> labels(dim);
    std::vector<std::vector<SparseVec>> table(dim, std::vector<SparseVec>(dim));
    Vec unit(dim, Rational(0));
    std::vector<int> gens;
    std::set<int> gen_set;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const FiniteAlgebra& p = *parts[k];
        const int off = offsets[k];
        const std::string prefix = parts.size() > 1 ? "q" + std::to_string(k) + ":" : "";
        for (int i = 0; i < p.dim(); ++i) {
            labels[off + i] = prefix + p.label(i);
            unit[off + i] = p.unit()[i];
            for (int j = 0; j < p.dim(); ++j) {
                SparseVec s;
                for (const auto& [t, c] : p.product(i, j)) s.emplace_back(off + t, c);
                table[off + i][off + j] = std::move(s);
            }
            if (!p.unit()[i].is_zero()) gen_set.insert(off + i);
        }
        for (int g : p.generators()) gen_set.insert(off + g);
    }
    gens.assign(gen_set.begin(), gen_set.end());
    return DirectSumResult{FiniteAlgebra::from_parts(std::move(labels), std::move(table),
                                                     std::move(unit), std::move(gens)),
                           std::move(offsets)};
}

Mat direct_sum_delta(const DirectSumResult& sum, const std::vector<Mat>& deltas) {
    const int n = sum.algebra.dim();
    if (deltas.size() != sum.offsets.size())
        throw std::invalid_argument("direct_sum_delta: one coproduct per summand");
    Mat out = mat_zero(n);
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        const int off = sum.offsets[k];
        const int d = static_cast<int>(deltas[k].size());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out[off + i][off + j] = deltas[k][i][j];
    }
    return out;
}

TensorResult tensor_product(const FiniteAlgebra& a, const FiniteAlgebra& b, int dim_cap) {
    const long long dim_ll = static_cast<long long>(a.dim()) * b.dim();
    if (dim_ll > dim_cap)
        throw std::invalid_argument("tensor_product: dimension cap exceeded");
    const int da = a.dim(), db = b.dim(), dim = static_cast<int>(dim_ll);
    auto idx = [db](int i, int k) { return i * db + k; };

    std::vector<std::string> labels(dim);
    for (int i = 0; i < da; ++i)
        for (int k = 0; k < db; ++k) labels[idx(i, k)] = a.label(i) + "⊗" + b.label(k);

    std::vector<std::vector<SparseVec>> table(dim, std::vector<SparseVec>(dim));
    for (int i = 0; i < da; ++i)
        for (int k = 0; k < db; ++k)
            for (int j = 0; j < da; ++j)
                for (int l = 0; l < db; ++l) {
                    SparseVec s;
                    for (const auto& [u, cu] : a.product(i, j))
                        for (const auto& [v, cv] : b.product(k, l))
                            s.emplace_back(idx(u, v), cu * cv);
                    std::sort(s.begin(), s.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
                    table[idx(i, k)][idx(j, l)] = std::move(s);
                }

    Vec unit(dim, Rational(0));
    for (int i = 0; i < da; ++i)
        for (int k = 0; k < db; ++k) unit[idx(i, k)] = a.unit()[i] * b.unit()[k];

    std::set<int> gen_set;
    std::vector<int> supp_a, supp_b;
    for (int i = 0; i < da; ++i)
        if (!a.unit()[i].is_zero()) supp_a.push_back(i);
    for (int k = 0; k < db; ++k)
        if (!b.unit()[k].is_zero()) supp_b.push_back(k);
    for (int g : a.generators())
        for (int u : supp_b) gen_set.insert(idx(g, u));
    for (int g : b.generators())
        for (int u : supp_a) gen_set.insert(idx(u, g));
    for (int u : supp_a)
        for (int v : supp_b) gen_set.insert(idx(u, v));
    std::vector<int> gens(gen_set.begin(), gen_set.end());

    return TensorResult{FiniteAlgebra::from_parts(std::move(labels), std::move(table),
                                                  std::move(unit), std::move(gens)),
                        da, db};
}

Mat tensor_delta(const TensorResult& t, const Mat& da, const Mat& db) {
    const int a = t.dim_a, b = t.dim_b, n = a * b;
    Mat out = mat_zero(n);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            if (da[i][j].is_zero()) continue;
            for (int k = 0; k < b; ++k)
                for (int l = 0; l < b; ++l) {
                    if (db[k][l].is_zero()) continue;
                    out[i * b + k][j * b + l] += da[i][j] * db[k][l];
                }
        }
    return out;
}

}  // namespace nf::algebra
