#include "nf/gentle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>

#include "nf/algebra.hpp"
#include "nf/nfsolver.hpp"

namespace nf::gentle {

std::string vertex_type_name(VertexType t) {
    switch (t) {
        case VertexType::Source: return "source";
        case VertexType::T0: return "0";
        case VertexType::T1: return "1";
        case VertexType::T2: return "2";
        case VertexType::T3: return "3";
        case VertexType::T4: return "4";
        case VertexType::T5: return "5";
        case VertexType::T6: return "6";
    }
    return "?";
}

namespace {

using quiver::BoundQuiverSpec;

std::set<std::pair<int, int>> ideal_pairs(const BoundQuiverSpec& spec) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& rel : spec.relations)
        pairs.insert({rel.terms[0].path.arrows[0], rel.terms[0].path.arrows[1]});
    return pairs;
}

// Longest surviving path lengths per arrow: fwd(a) = arrows of the longest
// path starting with a whose consecutive pairs avoid the ideal.
struct StrandLengths {
    std::vector<int> fwd, bwd;
};

StrandLengths strand_lengths(const BoundQuiverSpec& spec,
                             const std::set<std::pair<int, int>>& pairs) {
    const auto& q = spec.quiver;
    const int m = static_cast<int>(q.arrows.size());
    StrandLengths s{std::vector<int>(m, -1), std::vector<int>(m, -1)};
    // Quiver is acyclic, so plain recursion terminates.
    std::function<int(int)> fwd = [&](int a) -> int {
        if (s.fwd[a] >= 0) return s.fwd[a];
        int best = 1;
        for (const auto& b : q.arrows)
            if (b.source == q.arrows[a].target && !pairs.count({a, b.id}))
                best = std::max(best, 1 + fwd(b.id));
        return s.fwd[a] = best;
    };
    std::function<int(int)> bwd = [&](int a) -> int {
        if (s.bwd[a] >= 0) return s.bwd[a];
        int best = 1;
        for (const auto& b : q.arrows)
            if (b.target == q.arrows[a].source && !pairs.count({b.id, a}))
                best = std::max(best, 1 + bwd(b.id));
        return s.bwd[a] = best;
    };
    for (int a = 0; a < m; ++a) fwd(a), bwd(a);
    return s;
}

}  // namespace

VertexClassification classify(const BoundQuiverSpec& spec) {
    auto check = quiver::is_gentle(spec);
    if (!check.gentle)
        throw GentleAlgorithmError("classify: presentation is not gentle: " +
                                   (check.violations.empty() ? std::string("?")
                                                             : check.violations.front()));
    if (spec.quiver.has_loops_or_cycles())
        throw GentleAlgorithmError("classify: quiver has oriented cycles");

    const auto& q = spec.quiver;
    auto pairs = ideal_pairs(spec);
    StrandLengths lens = strand_lengths(spec, pairs);

    VertexClassification cls;
    cls.vertices.resize(q.vertex_count);
    for (const auto& a : q.arrows) {
        cls.vertices[a.source].out_arrows.push_back(a.id);
        cls.vertices[a.target].in_arrows.push_back(a.id);
    }
    for (int v = 0; v < q.vertex_count; ++v) {
        VertexInfo& info = cls.vertices[v];
        std::sort(info.in_arrows.begin(), info.in_arrows.end());
        std::sort(info.out_arrows.begin(), info.out_arrows.end());
        const int in = static_cast<int>(info.in_arrows.size());
        const int out = static_cast<int>(info.out_arrows.size());
        if (in == 0) {
            info.type = VertexType::Source;
        } else if (in == 1 && out == 1) {
            bool through = pairs.count({info.in_arrows[0], info.out_arrows[0]}) > 0;
            info.type = through ? VertexType::T1 : VertexType::T0;
            if (through) {
                info.l_left = lens.bwd[info.in_arrows[0]];
                info.l_right = lens.fwd[info.out_arrows[0]];
            }
        } else if (in == 2 && out == 1) {
            info.type = VertexType::T2;
        } else if (in == 1 && out == 2) {
            info.type = VertexType::T3;
        } else if (in == 2 && out == 2) {
            info.type = VertexType::T4;
        } else if (in == 2 && out == 0) {
            info.type = VertexType::T5;
        } else if (in == 1 && out == 0) {
            info.type = VertexType::T6;
        } else {
            throw GentleAlgorithmError("classify: vertex " + std::to_string(v + 1) +
                                       " matches no local type");
        }
    }
    return cls;
}

GentleResult run_gentle_algorithm(const BoundQuiverSpec& spec,
                                  const std::vector<int>* tie_break) {
    const auto& q = spec.quiver;
    VertexClassification cls = classify(spec);
    auto pairs = ideal_pairs(spec);

    AlgorithmTrace trace;
    trace.y.assign(q.vertex_count, 0);
    trace.x.assign(q.arrows.size(), 0);
    trace.d = 0;

    // Among the incoming arrows of `out`'s source vertex, the unique one
    // whose composition with `out` survives.
    auto surviving_pred = [&](int out_arrow, const std::vector<int>& in_arrows)
        -> std::optional<int> {
        for (int a : in_arrows)
            if (!pairs.count({a, out_arrow})) return a;
        return std::nullopt;
    };

    auto rank = [&](int v) { return tie_break ? (*tie_break)[v] : v; };

    // Kahn order over vertices; deterministic tie-break.
    std::vector<int> remaining_in(q.vertex_count, 0);
    for (const auto& a : q.arrows) ++remaining_in[a.target];
    std::set<std::pair<int, int>> ready;  // (rank, vertex)
    for (int v = 0; v < q.vertex_count; ++v)
        if (remaining_in[v] == 0) ready.insert({rank(v), v});

    while (!ready.empty()) {
        int v = ready.begin()->second;
        ready.erase(ready.begin());
        trace.order.push_back(v);
        const VertexInfo& info = cls.vertices[v];

        switch (info.type) {
            case VertexType::Source: {
                if (info.out_arrows.empty()) {
                    // Isolated vertex: the one-dimensional algebra carries a
                    // single structure.
                    trace.y[v] = 1;
                    trace.d += 1;
                } else if (info.out_arrows.size() == 1) {
                    trace.y[v] = 1;
                    trace.x[info.out_arrows[0]] = 1;
                } else {
                    trace.y[v] = 0;
                    for (int a : info.out_arrows) trace.x[a] = 0;
                }
                break;
            }
            case VertexType::T0: {
                trace.y[v] = trace.x[info.in_arrows[0]];
                trace.x[info.out_arrows[0]] = trace.y[v];
                break;
            }
            case VertexType::T1: {
                trace.y[v] = static_cast<long long>(info.l_left) * info.l_right + 2 +
                             trace.x[info.in_arrows[0]] - 1;
                trace.x[info.out_arrows[0]] = trace.y[v];
                break;
            }
            case VertexType::T2: {
                int beta = info.out_arrows[0];
                auto alive = surviving_pred(beta, info.in_arrows);
                if (!alive)
                    throw GentleAlgorithmError("run_gentle_algorithm: no surviving merge");
                int dead = info.in_arrows[0] == *alive ? info.in_arrows[1] : info.in_arrows[0];
                trace.y[v] = trace.x[*alive];
                trace.x[beta] = trace.y[v];
                // The merged branch loses its own strand structure; only the
                // surplus it carried is banked.
                long long xd = trace.x[dead];
                trace.d += xd - (xd >= 1 ? 1 : 0);
                break;
            }
            case VertexType::T3: {
                int alpha = info.in_arrows[0];
                trace.y[v] = trace.x[alpha];
                for (int beta : info.out_arrows) {
                    bool survives = !pairs.count({alpha, beta});
                    trace.x[beta] = survives ? trace.x[alpha] : 0;
                }
                break;
            }
            case VertexType::T4: {
                long long ysum = 0;
                for (int a : info.in_arrows) ysum += trace.y[q.arrows[a].source];
                trace.y[v] = ysum;
                for (int beta : info.out_arrows) {
                    auto alive = surviving_pred(beta, info.in_arrows);
                    trace.x[beta] = alive ? trace.x[*alive] : 0;
                }
                break;
            }
            case VertexType::T5: {
                trace.y[v] = 0;
                for (int a : info.in_arrows) {
                    long long xa = trace.x[a];
                    trace.d += xa - (xa >= 1 ? 1 : 0);
                }
                break;
            }
            case VertexType::T6: {
                trace.y[v] = trace.x[info.in_arrows[0]];
                trace.d += trace.x[info.in_arrows[0]];
                break;
            }
        }

        for (int a : info.out_arrows)
            if (--remaining_in[q.arrows[a].target] == 0)
                ready.insert({rank(q.arrows[a].target), q.arrows[a].target});
    }

    if (static_cast<int>(trace.order.size()) != q.vertex_count)
        throw GentleAlgorithmError("run_gentle_algorithm: not all vertices processed");

    return GentleResult{trace.d, std::move(trace)};
}

CrossValidation cross_validate(const BoundQuiverSpec& spec) {
    CrossValidation out;
    out.algorithm_d = run_gentle_algorithm(spec).frobdim;
    out.solver_frobdim = nfsolver::frobdim(algebra::from_bound_quiver(spec));
    out.agree = out.algorithm_d == out.solver_frobdim;
    return out;
}

quiver::BoundQuiverSpec random_gentle_spec(std::uint64_t seed, int max_vertices) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    auto randint = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        const int n = randint(2, std::max(2, max_vertices));
        quiver::BoundQuiverSpec spec;
        spec.quiver.vertex_count = n;
        std::vector<int> indeg(n, 0), outdeg(n, 0);
        auto add_arrow = [&](int s, int t) {
            int id = static_cast<int>(spec.quiver.arrows.size());
            spec.quiver.arrows.push_back(
                quiver::Arrow{id, s, t, "a" + std::to_string(id + 1)});
            ++outdeg[s];
            ++indeg[t];
        };
        // Forward arrows only (vertex order is a topological order).
        // Connect each vertex to an earlier one first, then sprinkle.
        for (int v = 1; v < n; ++v) {
            std::vector<int> candidates;
            for (int u = 0; u < v; ++u)
                if (outdeg[u] < 2) candidates.push_back(u);
            if (candidates.empty()) break;
            add_arrow(candidates[randint(0, static_cast<int>(candidates.size()) - 1)], v);
        }
        if (static_cast<int>(spec.quiver.arrows.size()) != n - 1) continue;
        int extra = randint(0, n);
        for (int k = 0; k < extra; ++k) {
            int s = randint(0, n - 2);
            int t = randint(s + 1, n - 1);
            if (outdeg[s] >= 2 || indeg[t] >= 2) continue;
            add_arrow(s, t);
        }

        // Random gentle relation pattern per vertex.
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            std::vector<int> ins, outs;
            for (const auto& a : spec.quiver.arrows) {
                if (a.target == v) ins.push_back(a.id);
                if (a.source == v) outs.push_back(a.id);
            }
            auto relate = [&](int first, int second) {
                quiver::Path p;
                p.arrows = {first, second};
                p.source = spec.quiver.arrows[first].source;
                spec.relations.push_back(
                    quiver::Relation{{quiver::RelationTerm{Rational(1), p}}});
            };
            if (ins.size() == 1 && outs.size() == 1) {
                if (randint(0, 1)) relate(ins[0], outs[0]);
            } else if (ins.size() == 1 && outs.size() == 2) {
                relate(ins[0], outs[randint(0, 1)]);
            } else if (ins.size() == 2 && outs.size() == 1) {
                relate(ins[randint(0, 1)], outs[0]);
            } else if (ins.size() == 2 && outs.size() == 2) {
                int flip = randint(0, 1);
                relate(ins[0], outs[flip]);
                relate(ins[1], outs[1 - flip]);
            }
        }
        if (!ok) continue;

        spec.bound = std::max(2, spec.quiver.longest_path_length() + 1);
        if (!spec.quiver.is_connected()) continue;
        if (!quiver::is_gentle(spec).gentle) continue;
        spec.check_valid();
        return spec;
    }
    throw GentleAlgorithmError("random_gentle_spec: generation failed for seed " +
                               std::to_string(seed));
}

}  // namespace nf::gentle
