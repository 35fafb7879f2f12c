#include "nf/census.hpp"

#include <algorithm>
#include <functional>

#include "nf/algebra.hpp"
#include "nf/nfsolver.hpp"

namespace nf::census {

bool is_linear_chain(const quiver::Quiver& q) {
    if (!q.is_connected()) return false;
    if (static_cast<int>(q.arrows.size()) != q.vertex_count - 1) return false;
    std::vector<int> indeg(q.vertex_count, 0), outdeg(q.vertex_count, 0);
    for (const auto& a : q.arrows) {
        if (a.source == a.target) return false;
        ++outdeg[a.source];
        ++indeg[a.target];
    }
    for (int v = 0; v < q.vertex_count; ++v)
        if (indeg[v] > 1 || outdeg[v] > 1) return false;
    return !q.has_loops_or_cycles();
}

namespace {

void sweep(int vertices, int max_arrows, std::size_t path_cap, CensusReport& report) {
    // Ordered pairs (s, t), loops included; combinations with repetition.
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < vertices; ++s)
        for (int t = 0; t < vertices; ++t) pairs.emplace_back(s, t);

    std::vector<int> pick;  // nondecreasing indices into pairs

    auto examine = [&]() {
        quiver::Quiver q;
        q.vertex_count = vertices;
        for (std::size_t k = 0; k < pick.size(); ++k)
            q.arrows.push_back(quiver::Arrow{static_cast<int>(k), pairs[pick[k]].first,
                                             pairs[pick[k]].second,
                                             "a" + std::to_string(k + 1)});
        if (!q.is_connected()) return;
        if (q.has_loops_or_cycles()) {
            ++report.skipped_cyclic;
            return;
        }
        quiver::BoundQuiverSpec spec;
        spec.quiver = q;
        spec.bound = std::max(2, q.longest_path_length() + 1);
        spec.check_valid();

        algebra::FiniteAlgebra a = algebra::from_bound_quiver(spec, path_cap);
        long long fd = nfsolver::frobdim(a);
        ++report.examined;

        CensusRow row;
        row.vertices = vertices;
        for (const auto& ar : q.arrows) row.arrows.emplace_back(ar.source, ar.target);
        row.dim_k = a.dim();
        row.frobdim = fd;
        row.linear_chain = is_linear_chain(q);
        if (fd > 0) report.nontrivial.push_back(row);
        bool expected = row.linear_chain;
        if ((fd > 0) != expected || (expected && fd != 1)) report.violations.push_back(row);
    };

    std::function<void(int, int)> rec = [&](int start, int remaining) {
        examine();
        if (remaining == 0) return;
        for (int i = start; i < static_cast<int>(pairs.size()); ++i) {
            pick.push_back(i);
            rec(i, remaining - 1);
            pick.pop_back();
        }
    };
    rec(0, max_arrows);
}

}  // namespace

CensusReport nontriviality_census(int max_vertices, int max_arrows, std::size_t path_cap) {
    CensusReport report;
    report.max_vertices = max_vertices;
    report.max_arrows = max_arrows;
    for (int v = 1; v <= max_vertices; ++v) sweep(v, max_arrows, path_cap, report);
    return report;
}

}  // namespace nf::census
