#include <doctest.h>

#include "nf/algebra.hpp"
#include "nf/census.hpp"
#include "nf/nfsolver.hpp"
#include "nf/quiver.hpp"

using namespace nf;
using namespace nf::nfsolver;
using algebra::FiniteAlgebra;

namespace {

// Delta_k(1) = sum_{i+j = n+k} x^i (x) x^j on k[x]/x^{n+1}.
Mat truncpoly_delta(int n, int k) {
    Mat d = mat_zero(n + 1);
    for (int i = k; i <= n; ++i) d[i][n + k - i] = Rational(1);
    return d;
}

// Delta_kl(I) = sum_i E_ik (x) E_li on the matrix algebra (k, l are 1-based).
Mat matrix_delta(int n, int k, int l) {
    Mat d = mat_zero(n * n);
    auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    for (int i = 1; i <= n; ++i) d[idx(i, k)][idx(l, i)] = Rational(1);
    return d;
}

// The anti-circulant line a + b == s (mod n) on the cyclic group algebra.
Mat cyclic_delta(int n, int s) {
    Mat d = mat_zero(n);
    for (int a = 0; a < n; ++a) d[a][((s - a) % n + n) % n] = Rational(1);
    return d;
}

}  // namespace

TEST_CASE("truncated polynomial space matches the shifted diagonals") {
    for (int n = 0; n <= 4; ++n) {
        auto a = algebra::truncated_polynomial(n);
        auto space = casimir_space(a);
        REQUIRE(space.dimension() == n + 1);
        for (int k = 0; k <= n; ++k) CHECK(space.basis[k] == truncpoly_delta(n, k));
    }
}

TEST_CASE("matrix algebra space matches the E_ik (x) E_li pattern") {
    for (int n = 1; n <= 3; ++n) {
        auto a = algebra::matrix_algebra(n);
        auto space = casimir_space(a);
        REQUIRE(space.dimension() == n * n);
        int at = 0;
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) CHECK(space.basis[at++] == matrix_delta(n, k, l));
    }
}

TEST_CASE("cyclic group algebra carries one structure per circulant line") {
    // Each line a+b == s (mod n) is exactly coassociative and a bimodule
    // morphism, and the kernel finds all of them. At n = 1 this reduces to
    // the one-dimensional algebra with its single structure; in general the
    // count matches the direct-sum additivity over the splitting of x^n - 1.
    for (int n = 1; n <= 6; ++n) {
        auto a = algebra::cyclic_group_algebra(n);
        auto space = casimir_space(a);
        CHECK(space.dimension() == n);
        for (int s = 0; s < n; ++s) {
            Mat line = cyclic_delta(n, s);
            CHECK(is_casimir(a, line));
            auto c = induce_coproduct(a, line);
            CHECK(verify_bimodule(a, c).ok);
            CHECK(verify_coassociative(a, c).ok);
            CHECK(space_contains(space, line));
        }
    }
}

TEST_CASE("linear A_n path algebras carry a single structure") {
    for (int n = 1; n <= 5; ++n) {
        auto spec = quiver::make_linear_An(n);
        auto a = algebra::from_bound_quiver(spec);
        auto space = casimir_space(a);
        REQUIRE(space.dimension() == 1);

        // Delta(e_i) = a_i...a_{n-1} (x) a_1...a_{i-1}
        auto path_label = [&](int from, int to) {  // product a_from..a_to, 1-based
            if (from > to) return std::string();
            std::string s;
            for (int k = from; k <= to; ++k) {
                if (!s.empty()) s += '.';
                s += "a" + std::to_string(k);
            }
            return s;
        };
        Mat expected = mat_zero(a.dim());
        for (int i = 1; i <= n; ++i) {
            std::string left = path_label(i, n - 1);
            std::string right = path_label(1, i - 1);
            int li = left.empty() ? a.label_index("e" + std::to_string(n))
                                  : a.label_index(left);
            int ri = right.empty() ? a.label_index("e1") : a.label_index(right);
            REQUIRE(li >= 0);
            REQUIRE(ri >= 0);
            expected[li][ri] = Rational(1);
        }
        CHECK(space.basis[0] == expected);
    }
}

TEST_CASE("the bound A_3 quiver has the three printed structures") {
    auto spec = quiver::parse_quiver("vertices 3\na: 1->2\nb: 2->3\nrel a.b\n");
    auto b = algebra::from_bound_quiver(spec);
    auto space = casimir_space(b);
    REQUIRE(space.dimension() == 3);
    auto cell = [&](const std::string& u, const std::string& v) {
        Mat d = mat_zero(b.dim());
        d[b.label_index(u)][b.label_index(v)] = Rational(1);
        return d;
    };
    auto plus = [&](Mat x, const Mat& y) {
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j) x[i][j] += y[i][j];
        return x;
    };
    CHECK(space.basis[0] == plus(cell("a", "e1"), cell("e2", "a")));
    CHECK(space.basis[1] == plus(cell("b", "e2"), cell("e3", "b")));
    CHECK(space.basis[2] == cell("b", "a"));
}

TEST_CASE("one-dimensional algebra") {
    auto k = algebra::truncated_polynomial(0);
    auto space = casimir_space(k);
    REQUIRE(space.dimension() == 1);
    CHECK(space.basis[0][0][0] == Rational(1));
}

TEST_CASE("induced coproducts") {
    auto t3 = algebra::truncated_polynomial(3);
    SUBCASE("shifted diagonal images") {
        auto c = induce_coproduct(t3, truncpoly_delta(3, 0));
        // Delta(x^l) = sum_{i+j = n+l} x^i (x) x^j
        for (int l = 0; l <= 3; ++l) {
            Mat expected = mat_zero(4);
            for (int i = l; i <= 3; ++i) expected[i][3 + l - i] = Rational(1);
            CHECK(c.images[l] == expected);
        }
    }
    SUBCASE("zero coproduct") {
        auto c = induce_coproduct(t3, mat_zero(4));
        for (const auto& img : c.images) CHECK(mat_is_zero(img));
    }
    SUBCASE("non-Casimir input is rejected with the offending element") {
        Mat bad = mat_zero(4);
        bad[0][0] = Rational(1);  // 1 (x) 1 is not Casimir here
        CHECK_THROWS_WITH_AS(induce_coproduct(t3, bad),
                             doctest::Contains("x"), std::invalid_argument);
    }
}

TEST_CASE("verification catches corrupted coproducts") {
    auto a = algebra::truncated_polynomial(2);
    auto space = casimir_space(a);
    auto good = induce_coproduct(a, space.basis[1]);
    CHECK(verify_bimodule(a, good).ok);
    CHECK(verify_coassociative(a, good).ok);

    auto corrupted = good;
    corrupted.images[1][0][0] += Rational(1);
    auto res = verify_bimodule(a, corrupted);
    CHECK_FALSE(res.ok);
    CHECK_FALSE(res.counterexample.empty());

    // the paper-style quotient coproduct on the bound A_3 quiver
    auto spec = quiver::parse_quiver("vertices 3\na: 1->2\nb: 2->3\nrel a.b\n");
    auto b = algebra::from_bound_quiver(spec);
    auto bspace = casimir_space(b);
    auto c2 = induce_coproduct(b, bspace.basis[1]);
    CHECK(verify_bimodule(b, c2).ok);
    CHECK(verify_coassociative(b, c2).ok);
}

TEST_CASE("counit search") {
    SUBCASE("only the top shift of the truncated polynomial completes") {
        for (int n = 1; n <= 4; ++n) {
            auto a = algebra::truncated_polynomial(n);
            auto c0 = induce_coproduct(a, truncpoly_delta(n, 0));
            auto eps = find_counit(a, c0);
            REQUIRE(eps.has_value());
            for (int i = 0; i <= n; ++i)
                CHECK(eps->functional[i] == Rational(i == n ? 1 : 0));
            for (int k = 1; k <= n; ++k) {
                auto ck = induce_coproduct(a, truncpoly_delta(n, k));
                CHECK_FALSE(find_counit(a, ck).has_value());
            }
        }
    }
    SUBCASE("matrix algebra trace") {
        for (int n = 2; n <= 3; ++n) {
            auto a = algebra::matrix_algebra(n);
            Mat d = mat_zero(n * n);
            for (int k = 1; k <= n; ++k) {
                Mat part = matrix_delta(n, k, k);
                for (int i = 0; i < n * n; ++i)
                    for (int j = 0; j < n * n; ++j) d[i][j] += part[i][j];
            }
            auto eps = find_counit(a, induce_coproduct(a, d));
            REQUIRE(eps.has_value());
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    CHECK(eps->functional[(i - 1) * n + (j - 1)] ==
                          Rational(i == j ? 1 : 0));
        }
    }
    SUBCASE("group algebra completion") {
        for (int n = 2; n <= 5; ++n) {
            auto a = algebra::cyclic_group_algebra(n);
            auto eps = find_counit(a, induce_coproduct(a, cyclic_delta(n, 0)));
            REQUIRE(eps.has_value());
            for (int i = 0; i < n; ++i)
                CHECK(eps->functional[i] == Rational(i == 0 ? 1 : 0));
        }
    }
}

TEST_CASE("generator constraints equal full-basis constraints") {
    std::vector<FiniteAlgebra> roster;
    roster.push_back(algebra::truncated_polynomial(3));
    roster.push_back(algebra::matrix_algebra(2));
    roster.push_back(algebra::cyclic_group_algebra(4));
    roster.push_back(algebra::from_bound_quiver(quiver::make_linear_An(4)));
    roster.push_back(algebra::from_bound_quiver(quiver::make_cyclic_family({2, 2})));
    for (const auto& a : roster) {
        SolverOptions gens, full;
        full.use_generators = false;
        auto sg = casimir_space(a, gens);
        auto sf = casimir_space(a, full);
        REQUIRE(sg.dimension() == sf.dimension());
        for (int k = 0; k < sg.dimension(); ++k) CHECK(sg.basis[k] == sf.basis[k]);
    }
}

TEST_CASE("census at desk scale") {
    SUBCASE("empty budget") {
        auto report = census::nontriviality_census(0, 0);
        CHECK(report.examined == 0);
        CHECK(report.holds());
    }
    SUBCASE("two vertices") {
        auto report = census::nontriviality_census(2, 2);
        CHECK(report.holds());
        // A_1 and A_2 in both orientations are the nontrivial ones
        for (const auto& row : report.nontrivial) CHECK(row.frobdim == 1);
    }
    SUBCASE("star quiver is trivial") {
        auto spec = quiver::parse_quiver("vertices 3\na: 1->2\nb: 1->3\n");
        CHECK(frobdim(algebra::from_bound_quiver(spec)) == 0);
    }
    SUBCASE("merge quiver is trivial") {
        auto spec = quiver::parse_quiver("vertices 3\na: 1->3\nb: 2->3\n");
        CHECK(frobdim(algebra::from_bound_quiver(spec)) == 0);
    }
}

TEST_CASE("frobdim respects opposites and sums") {
    auto m2 = algebra::matrix_algebra(2);
    CHECK(frobdim(algebra::opposite(m2)) == frobdim(m2));
    auto t1 = algebra::truncated_polynomial(1);
    auto sum = algebra::direct_sum({&m2, &t1});
    CHECK(frobdim(sum.algebra) == frobdim(m2) + frobdim(t1));
}
