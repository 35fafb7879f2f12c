#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nf/quiver.hpp"

namespace nf::gentle {

// Local shape of a vertex in a gentle acyclic quiver. "Source" vertices are
// handled by the seeding step; the numbered types are, by (in-degree,
// out-degree, relation incidence):
//   0: (1,1) composition survives        1: (1,1) composition vanishes
//   2: (2,1)                             3: (1,2)
//   4: (2,2)                             5: (2,0) sink
//   6: (1,0) sink
enum class VertexType { Source, T0, T1, T2, T3, T4, T5, T6 };

std::string vertex_type_name(VertexType t);

struct VertexInfo {
    VertexType type = VertexType::Source;
    std::vector<int> in_arrows;   // sorted by arrow id
    std::vector<int> out_arrows;  // sorted by arrow id
    // For type 1: longest surviving path lengths ending / starting here.
    int l_left = 0, l_right = 0;
};

struct VertexClassification {
    std::vector<VertexInfo> vertices;
};

struct GentleAlgorithmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requires a gentle presentation with no oriented cycles.
VertexClassification classify(const quiver::BoundQuiverSpec& spec);

struct AlgorithmTrace {
    std::vector<long long> y;  // per vertex
    std::vector<long long> x;  // per arrow
    long long d = 0;
    std::vector<int> order;  // processing order (0-based vertices)
};

struct GentleResult {
    long long frobdim = 0;
    AlgorithmTrace trace;
};

// Counter-propagation over a topological order. `tie_break` optionally ranks
// vertices for order-independence testing; smaller rank is processed first
// among the ready vertices (default: vertex index).
GentleResult run_gentle_algorithm(const quiver::BoundQuiverSpec& spec,
                                  const std::vector<int>* tie_break = nullptr);

struct CrossValidation {
    long long algorithm_d = 0;
    long long solver_frobdim = 0;
    bool agree = false;
};

CrossValidation cross_validate(const quiver::BoundQuiverSpec& spec);

// Seeded generator of connected acyclic gentle presentations with at most
// `max_vertices` vertices.
quiver::BoundQuiverSpec random_gentle_spec(std::uint64_t seed, int max_vertices = 8);

}  // namespace nf::gentle
