#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nf/exactlin.hpp"
#include "nf/rational.hpp"

namespace nf::quiver {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) +
                             ": " + msg),
          line(l),
          column(c) {}
};

struct Arrow {
    int id;
    int source;  // 0-based vertex index
    int target;
    std::string name;
};

struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;

    bool has_loops_or_cycles() const;  // directed cycle (incl. loops)
    bool is_connected() const;         // underlying undirected graph
    int longest_path_length() const;   // arrows in the longest path; acyclic only
};

// A path: consecutive arrows compose left to right (first arrows.front(),
// then the next). Trivial paths carry their anchor vertex.
struct Path {
    int source = 0;
    std::vector<int> arrows;  // arrow ids

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
    int target(const Quiver& q) const;
    bool composes(const Quiver& q) const;
    std::string label(const Quiver& q) const;  // "e3" or "a.b"

    bool operator==(const Path& o) const {
        return source == o.source && arrows == o.arrows;
    }
};

// (length, lexicographic arrow ids); trivial paths ordered by vertex.
bool path_less(const Path& a, const Path& b);

struct RelationTerm {
    Rational coeff;
    Path path;
};

// Parallel linear combination of paths of length >= 2.
struct Relation {
    std::vector<RelationTerm> terms;
};

struct BoundQuiverSpec {
    Quiver quiver;
    std::vector<Relation> relations;
    int bound = 2;  // paths of length >= bound are zero

    // Structural checks (index ranges, parallel relations, bound >= 2).
    void check_valid() const;
};

// --- DSL ---------------------------------------------------------------
//
//   vertices <n>
//   <name>: <i> -> <j>
//   rel <term> [+ <term> ...]     term = [coeff*]path, path = a.b.c
//   bound <m>
//   # comment
//
// If no bound is given it is inferred as longest-path+1 for acyclic quivers
// (at least 2); cyclic quivers require an explicit bound.
BoundQuiverSpec parse_quiver(const std::string& text);
std::string emit_quiver(const BoundQuiverSpec& spec);

struct PathEnumerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All paths of length < spec.bound, ordered by (length, lex arrow ids).
std::vector<Path> enumerate_paths(const BoundQuiverSpec& spec,
                                  std::size_t cap = 100000);

// Coordinate space spanned by all paths of length <= maxlen, in canonical
// order. Products that exceed maxlen are treated as zero (truncation).
struct PathSpace {
    int maxlen = 0;
    std::vector<Path> paths;
    std::map<std::vector<int>, int> index_map;  // key: {-(v+1)} for e_v, else arrow ids

    int size() const { return static_cast<int>(paths.size()); }
    int index_of(const Path& p) const;
};

PathSpace build_path_space(const BoundQuiverSpec& spec, int maxlen,
                           std::size_t cap = 100000);

// Two-sided ideal generated by the relations inside the truncated path
// space, computed by saturation (multiply by arrows on both sides until the
// rank stabilizes).
exactlin::SubspaceBasis truncated_relation_ideal(const BoundQuiverSpec& spec,
                                                 const PathSpace& ps);

struct GentleCheck {
    bool gentle = false;
    std::vector<std::string> violations;
};

GentleCheck is_gentle(const BoundQuiverSpec& spec);

// True iff every path of length == bound reduces to zero modulo the ideal
// generated by the relations (computed in the length <= bound truncation).
bool validate_admissible(const BoundQuiverSpec& spec, std::size_t cap = 100000);

// Built-in families.
BoundQuiverSpec make_linear_An(int n);
BoundQuiverSpec make_cyclic_family(const std::vector<int>& segment_lengths);

enum class GentleLemmaKind { MidRelation, InBranch, OutBranch, Crossing };

struct GentleLemmaParams {
    int m = 1, n = 1, r = 1, s = 1;
};

BoundQuiverSpec make_gentle_lemma_family(GentleLemmaKind kind, const GentleLemmaParams& p);

// Expected dimension of the family's space of coproducts.
long long gentle_lemma_expected_frobdim(GentleLemmaKind kind, const GentleLemmaParams& p);

}  // namespace nf::quiver
