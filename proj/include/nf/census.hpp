#pragma once

#include <string>
#include <vector>

#include "nf/quiver.hpp"

namespace nf::census {

struct CensusRow {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based
    int dim_k = 0;
    long long frobdim = 0;
    bool linear_chain = false;  // the quiver is a linearly oriented chain
};

struct CensusReport {
    int max_vertices = 0;
    int max_arrows = 0;
    long long examined = 0;        // connected acyclic path algebras solved
    long long skipped_cyclic = 0;  // candidates dropped for oriented cycles
    std::vector<CensusRow> nontrivial;  // rows with frobdim > 0
    std::vector<CensusRow> violations;  // nontrivial but not a chain, or chain with frobdim != 1
    bool holds() const { return violations.empty(); }
};

// Exhaustive sweep over connected quivers (parallel arrows allowed) with
// at most the given budget, path algebras only (no relations): records which
// ones carry a nonzero space of coproducts. Every nontrivial one must be a
// linearly oriented chain, with a one-dimensional space.
CensusReport nontriviality_census(int max_vertices, int max_arrows,
                                  std::size_t path_cap = 100000);

// True iff the quiver is a linearly oriented A_n chain.
bool is_linear_chain(const quiver::Quiver& q);

}  // namespace nf::census
