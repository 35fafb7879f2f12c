// Compares the OpenMP elimination path against the serial reference on the
// constraint systems this project actually produces, plus a synthetic sparse
// workload. Both paths must produce the identical reduced form.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nf/algebra.hpp"
#include "nf/exactlin.hpp"
#include "nf/nfsolver.hpp"
#include "nf/quiver.hpp"

using namespace nf;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count() /
           1000.0;
}

struct Workload {
    std::string name;
    exactlin::SparseMatrix matrix;
};

exactlin::SparseMatrix random_sparse(std::uint64_t seed, int rows, int cols, int per_row) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> col(0, cols - 1);
    std::uniform_int_distribution<int> val(-3, 3);
    exactlin::SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < per_row; ++k) {
            int v = val(rng);
            if (v != 0) m.set(r, col(rng), Rational(v));
        }
    return m;
}

exactlin::SparseMatrix constraints_of(const algebra::FiniteAlgebra& a) {
    return nfsolver::casimir_constraints(a, a.generators());
}

void run(const Workload& w) {
    auto t0 = Clock::now();
    auto serial = exactlin::rref_serial(w.matrix);
    double t_serial = ms_since(t0);

    t0 = Clock::now();
    auto parallel = exactlin::rref(w.matrix);
    double t_parallel = ms_since(t0);

    bool same = serial.matrix == parallel.matrix && serial.pivots == parallel.pivots;
    std::printf("%-28s %7d x %-6d nnz %-8zu serial %8.1f ms   parallel %8.1f ms   %s\n",
                w.name.c_str(), w.matrix.rows(), w.matrix.cols(), w.matrix.nnz(), t_serial,
                t_parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    if (omp_get_max_threads() == 1) {
        omp_set_num_threads(4);
        std::printf("threads: 4 (oversubscribed; one hardware core visible)\n");
    } else {
        std::printf("threads: %d\n", omp_get_max_threads());
    }
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    std::vector<Workload> workloads;
    workloads.push_back({"casimir cycle(3,3,3)",
                         constraints_of(algebra::from_bound_quiver(
                             quiver::make_cyclic_family({3, 3, 3})))});
    workloads.push_back(
        {"casimir crossing(3,3,3,3)",
         constraints_of(algebra::from_bound_quiver(quiver::make_gentle_lemma_family(
             quiver::GentleLemmaKind::Crossing, {3, 3, 3, 3})))});
    workloads.push_back({"casimir matrix(4)", constraints_of(algebra::matrix_algebra(4))});
    workloads.push_back({"casimir An(8)",
                         constraints_of(algebra::from_bound_quiver(quiver::make_linear_An(8)))});
    workloads.push_back({"random 20000x1500", random_sparse(42, 20000, 1500, 3)});

    for (const auto& w : workloads) run(w);
    return 0;
}
