#include "nf/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nf::quiver {

bool Quiver::has_loops_or_cycles() const {
    std::vector<int> indeg(vertex_count, 0);
    for (const auto& a : arrows) {
        if (a.source == a.target) return true;
        ++indeg[a.target];
    }
    std::deque<int> q;
    for (int v = 0; v < vertex_count; ++v)
        if (indeg[v] == 0) q.push_back(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++seen;
        for (const auto& a : arrows)
            if (a.source == v && --indeg[a.target] == 0) q.push_back(a.target);
    }
    return seen < vertex_count;
}

bool Quiver::is_connected() const {
    if (vertex_count == 0) return false;
    std::vector<bool> seen(vertex_count, false);
    std::deque<int> q{0};
    seen[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (const auto& a : arrows) {
            if (a.source == v && !seen[a.target]) seen[a.target] = true, q.push_back(a.target);
            if (a.target == v && !seen[a.source]) seen[a.source] = true, q.push_back(a.source);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

int Quiver::longest_path_length() const {
    if (has_loops_or_cycles())
        throw std::logic_error("longest_path_length: quiver has oriented cycles");
    // longest chain of arrows ending at each vertex
    std::vector<int> best(vertex_count, 0);
    // process in topological order
    std::vector<int> indeg(vertex_count, 0);
    for (const auto& a : arrows) ++indeg[a.target];
    std::deque<int> q;
    for (int v = 0; v < vertex_count; ++v)
        if (indeg[v] == 0) q.push_back(v);
    int longest = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (const auto& a : arrows) {
            if (a.source != v) continue;
            best[a.target] = std::max(best[a.target], best[v] + 1);
            longest = std::max(longest, best[a.target]);
            if (--indeg[a.target] == 0) q.push_back(a.target);
        }
    }
    return longest;
}

int Path::target(const Quiver& q) const {
    if (trivial()) return source;
    return q.arrows[arrows.back()].target;
}

bool Path::composes(const Quiver& q) const {
    if (trivial()) return source >= 0 && source < q.vertex_count;
    if (q.arrows[arrows.front()].source != source) return false;
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.arrows[arrows[i]].target != q.arrows[arrows[i + 1]].source) return false;
    return true;
}

std::string Path::label(const Quiver& q) const {
    if (trivial()) return "e" + std::to_string(source + 1);
    std::string s;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (i) s += '.';
        s += q.arrows[arrows[i]].name;
    }
    return s;
}

bool path_less(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.trivial()) return a.source < b.source;
    return a.arrows < b.arrows;
}

void BoundQuiverSpec::check_valid() const {
    if (quiver.vertex_count < 1) throw std::invalid_argument("quiver needs at least one vertex");
    std::set<std::string> names;
    for (const auto& a : quiver.arrows) {
        if (a.source < 0 || a.source >= quiver.vertex_count || a.target < 0 ||
            a.target >= quiver.vertex_count)
            throw std::invalid_argument("arrow endpoint out of range: " + a.name);
        if (!names.insert(a.name).second)
            throw std::invalid_argument("duplicate arrow name: " + a.name);
    }
    if (bound < 2) throw std::invalid_argument("admissibility bound must be >= 2");
    for (const auto& rel : relations) {
        if (rel.terms.empty()) throw std::invalid_argument("empty relation");
        bool any_nonzero = false;
        int src = -1, tgt = -1;
        for (const auto& t : rel.terms) {
            if (!t.path.composes(quiver))
                throw std::invalid_argument("relation path does not compose");
            if (t.path.length() < 2)
                throw std::invalid_argument("relation path of length < 2");
            if (!t.coeff.is_zero()) any_nonzero = true;
            int s = t.path.source, g = t.path.target(quiver);
            if (src == -1) src = s, tgt = g;
            else if (s != src || g != tgt)
                throw std::invalid_argument("relation terms are not parallel");
        }
        if (!any_nonzero) throw std::invalid_argument("relation with all-zero coefficients");
    }
}

// --- parser -------------------------------------------------------------

namespace {

struct LineScanner {
    const std::string& text;
    int line_no;

    std::string trimmed() const {
        std::string s = text;
        auto hash = s.find('#');
        if (hash != std::string::npos) s.erase(hash);
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }
};

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!(std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) return false;
    return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

BoundQuiverSpec parse_quiver(const std::string& text) {
    BoundQuiverSpec spec;
    spec.quiver.vertex_count = 0;
    std::map<std::string, int> arrow_by_name;
    bool saw_vertices = false;
    std::optional<int> explicit_bound;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    auto fail = [&](int col, const std::string& msg) -> void {
        throw ParseError(line_no, col, msg);
    };

    auto parse_path = [&](const std::string& token) -> Path {
        // Composition separators: '.' always; '*' segments that are not a
        // leading numeric coefficient are treated the same way.
        std::vector<std::string> parts;
        for (const auto& seg : split(token, '.'))
            for (const auto& sub : split(seg, '*')) parts.push_back(strip(sub));
        Path p;
        std::vector<int> ids;
        for (const auto& name : parts) {
            if (name.empty()) fail(1, "empty path segment in '" + token + "'");
            auto it = arrow_by_name.find(name);
            if (it == arrow_by_name.end()) fail(1, "unknown arrow name '" + name + "'");
            ids.push_back(it->second);
        }
        p.arrows = ids;
        p.source = ids.empty() ? 0 : spec.quiver.arrows[ids[0]].source;
        if (!p.composes(spec.quiver)) fail(1, "path does not compose: '" + token + "'");
        return p;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = LineScanner{raw, line_no}.trimmed();
        if (line.empty()) continue;

        if (line.rfind("vertices", 0) == 0) {
            std::string rest = strip(line.substr(8));
            if (saw_vertices) fail(1, "duplicate 'vertices' line");
            try {
                std::size_t pos = 0;
                int n = std::stoi(rest, &pos);
                if (pos != rest.size() || n < 1) throw std::invalid_argument("");
                spec.quiver.vertex_count = n;
            } catch (...) {
                fail(10, "expected 'vertices <n>' with n >= 1");
            }
            saw_vertices = true;
            continue;
        }
        if (line.rfind("bound", 0) == 0) {
            std::string rest = strip(line.substr(5));
            try {
                std::size_t pos = 0;
                int b = std::stoi(rest, &pos);
                if (pos != rest.size() || b < 2) throw std::invalid_argument("");
                explicit_bound = b;
            } catch (...) {
                fail(7, "expected 'bound <m>' with m >= 2");
            }
            continue;
        }
        if (line.rfind("rel", 0) == 0 &&
            (line.size() == 3 || line[3] == ' ' || line[3] == '\t')) {
            if (!saw_vertices) fail(1, "'rel' before 'vertices'");
            std::string rest = strip(line.substr(3));
            if (rest.empty()) fail(5, "empty relation");
            Relation rel;
            for (const std::string& raw_term : split(rest, '+')) {
                std::string term = strip(raw_term);
                if (term.empty()) fail(5, "empty relation term");
                Rational coeff(1);
                std::string path_part = term;
                auto star = term.find('*');
                if (star != std::string::npos) {
                    std::string head = strip(term.substr(0, star));
                    if (looks_numeric(head)) {
                        coeff = Rational::parse(head);
                        path_part = strip(term.substr(star + 1));
                    }
                }
                Path p = parse_path(path_part);
                if (p.length() < 2)
                    fail(5, "relation path '" + path_part + "' has length < 2");
                rel.terms.push_back(RelationTerm{coeff, p});
            }
            int src = rel.terms[0].path.source;
            int tgt = rel.terms[0].path.target(spec.quiver);
            for (const auto& t : rel.terms)
                if (t.path.source != src || t.path.target(spec.quiver) != tgt)
                    fail(5, "relation terms are not parallel");
            spec.relations.push_back(std::move(rel));
            continue;
        }

        // arrow line: name: i -> j
        auto colon = line.find(':');
        if (colon == std::string::npos) fail(1, "unrecognized line: '" + line + "'");
        std::string name = strip(line.substr(0, colon));
        if (!is_ident(name)) fail(1, "invalid arrow name '" + name + "'");
        if (!saw_vertices) fail(1, "arrow before 'vertices'");
        if (arrow_by_name.count(name)) fail(1, "duplicate arrow name '" + name + "'");
        std::string rest = strip(line.substr(colon + 1));
        auto arrow_pos = rest.find("->");
        if (arrow_pos == std::string::npos) fail(static_cast<int>(colon) + 1, "expected 'i -> j'");
        std::string lhs = strip(rest.substr(0, arrow_pos));
        std::string rhs = strip(rest.substr(arrow_pos + 2));
        int i = 0, j = 0;
        try {
            std::size_t p1 = 0, p2 = 0;
            i = std::stoi(lhs, &p1);
            j = std::stoi(rhs, &p2);
            if (p1 != lhs.size() || p2 != rhs.size()) throw std::invalid_argument("");
        } catch (...) {
            fail(static_cast<int>(colon) + 1, "expected vertex numbers in 'i -> j'");
        }
        if (i < 1 || i > spec.quiver.vertex_count || j < 1 || j > spec.quiver.vertex_count)
            fail(static_cast<int>(colon) + 1, "vertex index out of range");
        int id = static_cast<int>(spec.quiver.arrows.size());
        spec.quiver.arrows.push_back(Arrow{id, i - 1, j - 1, name});
        arrow_by_name[name] = id;
    }

    if (!saw_vertices) throw ParseError(1, 1, "missing 'vertices <n>' line");

    if (explicit_bound) {
        spec.bound = *explicit_bound;
    } else {
        if (spec.quiver.has_loops_or_cycles())
            throw ParseError(line_no, 1, "cyclic quiver requires an explicit 'bound' line");
        spec.bound = std::max(2, spec.quiver.longest_path_length() + 1);
    }
    spec.check_valid();
    return spec;
}

std::string emit_quiver(const BoundQuiverSpec& spec) {
    std::ostringstream out;
    out << "vertices " << spec.quiver.vertex_count << "\n";
    for (const auto& a : spec.quiver.arrows)
        out << a.name << ": " << a.source + 1 << " -> " << a.target + 1 << "\n";
    out << "bound " << spec.bound << "\n";
    for (const auto& rel : spec.relations) {
        out << "rel ";
        for (std::size_t i = 0; i < rel.terms.size(); ++i) {
            if (i) out << " + ";
            if (rel.terms[i].coeff != Rational(1)) out << rel.terms[i].coeff.str() << "*";
            out << rel.terms[i].path.label(spec.quiver);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<Path> paths_up_to(const Quiver& q, int maxlen, std::size_t cap) {
    std::vector<Path> all;
    std::vector<Path> current;
    for (int v = 0; v < q.vertex_count; ++v) current.push_back(Path{v, {}});
    std::vector<std::vector<int>> out_arrows(q.vertex_count);
    for (const auto& a : q.arrows) out_arrows[a.source].push_back(a.id);

    for (int len = 0; len <= maxlen; ++len) {
        for (const auto& p : current) {
            all.push_back(p);
            if (all.size() > cap)
                throw PathEnumerationError("path enumeration exceeded cap of " +
                                           std::to_string(cap));
        }
        if (len == maxlen) break;
        std::vector<Path> next;
        for (const auto& p : current) {
            for (int id : out_arrows[p.target(q)]) {
                Path ext = p;
                ext.arrows.push_back(id);
                next.push_back(std::move(ext));
            }
        }
        current = std::move(next);
        if (current.empty()) break;
    }
    return all;
}

std::vector<int> path_key(const Path& p) {
    if (p.trivial()) return {-(p.source + 1)};
    return p.arrows;
}

}  // namespace

std::vector<Path> enumerate_paths(const BoundQuiverSpec& spec, std::size_t cap) {
    spec.check_valid();
    return paths_up_to(spec.quiver, spec.bound - 1, cap);
}

int PathSpace::index_of(const Path& p) const {
    auto it = index_map.find(path_key(p));
    return it == index_map.end() ? -1 : it->second;
}

PathSpace build_path_space(const BoundQuiverSpec& spec, int maxlen, std::size_t cap) {
    PathSpace ps;
    ps.maxlen = maxlen;
    ps.paths = paths_up_to(spec.quiver, maxlen, cap);
    for (int i = 0; i < ps.size(); ++i) ps.index_map[path_key(ps.paths[i])] = i;
    return ps;
}

exactlin::SubspaceBasis truncated_relation_ideal(const BoundQuiverSpec& spec,
                                                 const PathSpace& ps) {
    using exactlin::Vec;
    const Quiver& q = spec.quiver;
    const int n = ps.size();

    std::vector<Vec> frontier;
    for (const auto& rel : spec.relations) {
        Vec v(n, Rational(0));
        bool nonzero = false;
        for (const auto& t : rel.terms) {
            int idx = ps.index_of(t.path);
            if (idx < 0) continue;  // beyond the truncation, already zero
            v[idx] += t.coeff;
            nonzero = true;
        }
        if (nonzero) frontier.push_back(std::move(v));
    }

    exactlin::Echelon ech(n);
    std::deque<Vec> queue;
    for (auto& v : frontier) {
        exactlin::SparseRow r = exactlin::row_from_dense(v);
        if (ech.insert(r)) queue.push_back(std::move(v));
    }

    auto multiply = [&](const Vec& v, const Arrow& a, bool left) {
        Vec out(n, Rational(0));
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            if (v[i].is_zero()) continue;
            const Path& p = ps.paths[i];
            if (p.length() + 1 > ps.maxlen) continue;  // truncated to zero
            Path prod;
            if (left) {
                if (a.target != p.source) continue;
                prod.source = a.source;
                prod.arrows.reserve(p.arrows.size() + 1);
                prod.arrows.push_back(a.id);
                prod.arrows.insert(prod.arrows.end(), p.arrows.begin(), p.arrows.end());
            } else {
                if (p.target(q) != a.source) continue;
                prod = p;
                prod.arrows.push_back(a.id);
            }
            int idx = ps.index_of(prod);
            if (idx < 0) continue;
            out[idx] += v[i];
            nonzero = true;
        }
        return nonzero ? std::optional<Vec>(std::move(out)) : std::nullopt;
    };

    while (!queue.empty()) {
        Vec v = std::move(queue.front());
        queue.pop_front();
        for (const auto& a : q.arrows) {
            for (bool left : {true, false}) {
                auto prod = multiply(v, a, left);
                if (!prod) continue;
                if (ech.insert(exactlin::row_from_dense(*prod))) queue.push_back(std::move(*prod));
            }
        }
    }

    ech.back_substitute();
    exactlin::SubspaceBasis basis;
    basis.ambient_dim = n;
    for (auto& [col, row] : ech.sorted_rows()) {
        (void)col;
        basis.vectors.push_back(exactlin::row_to_dense(*row, n));
    }
    return basis;
}

bool validate_admissible(const BoundQuiverSpec& spec, std::size_t cap) {
    spec.check_valid();
    PathSpace ps = build_path_space(spec, spec.bound, cap);
    exactlin::SubspaceBasis ideal = truncated_relation_ideal(spec, ps);
    for (int i = 0; i < ps.size(); ++i) {
        if (ps.paths[i].length() != spec.bound) continue;
        exactlin::Vec v(ps.size(), Rational(0));
        v[i] = Rational(1);
        if (!exactlin::subspace_membership(ideal, v)) return false;
    }
    return true;
}

GentleCheck is_gentle(const BoundQuiverSpec& spec) {
    spec.check_valid();
    GentleCheck check;
    const Quiver& q = spec.quiver;

    std::set<std::pair<int, int>> in_ideal;  // (first arrow, second arrow)
    for (const auto& rel : spec.relations) {
        bool monomial_len2 = rel.terms.size() == 1 && rel.terms[0].path.length() == 2 &&
                             !rel.terms[0].coeff.is_zero();
        if (!monomial_len2) {
            check.violations.push_back(
                "(3) the ideal must be generated by monomial paths of length 2");
            continue;
        }
        in_ideal.insert({rel.terms[0].path.arrows[0], rel.terms[0].path.arrows[1]});
    }

    std::vector<int> indeg(q.vertex_count, 0), outdeg(q.vertex_count, 0);
    for (const auto& a : q.arrows) ++outdeg[a.source], ++indeg[a.target];
    for (int v = 0; v < q.vertex_count; ++v) {
        if (outdeg[v] > 2)
            check.violations.push_back("(1) at most 2 arrows start: vertex " +
                                       std::to_string(v + 1) + " has " +
                                       std::to_string(outdeg[v]));
        if (indeg[v] > 2)
            check.violations.push_back("(1) at most 2 arrows finish: vertex " +
                                       std::to_string(v + 1) + " has " +
                                       std::to_string(indeg[v]));
    }

    for (const auto& b : q.arrows) {
        int succ_out = 0, succ_in = 0, pred_out = 0, pred_in = 0;
        for (const auto& g : q.arrows) {
            if (g.source == b.target) (in_ideal.count({b.id, g.id}) ? succ_in : succ_out)++;
            if (g.target == b.source) (in_ideal.count({g.id, b.id}) ? pred_in : pred_out)++;
        }
        if (succ_out > 1)
            check.violations.push_back("(2) arrow " + b.name +
                                       " has more than one continuation outside the ideal");
        if (pred_out > 1)
            check.violations.push_back("(2) arrow " + b.name +
                                       " has more than one predecessor outside the ideal");
        if (succ_in > 1)
            check.violations.push_back("(4) arrow " + b.name +
                                       " has more than one continuation inside the ideal");
        if (pred_in > 1)
            check.violations.push_back("(4) arrow " + b.name +
                                       " has more than one predecessor inside the ideal");
    }

    check.gentle = check.violations.empty();
    return check;
}

BoundQuiverSpec make_linear_An(int n) {
    if (n < 1) throw std::invalid_argument("make_linear_An: n must be >= 1");
    BoundQuiverSpec spec;
    spec.quiver.vertex_count = n;
    for (int i = 0; i + 1 < n; ++i)
        spec.quiver.arrows.push_back(Arrow{i, i, i + 1, "a" + std::to_string(i + 1)});
    spec.bound = std::max(2, n);
    spec.check_valid();
    return spec;
}

BoundQuiverSpec make_cyclic_family(const std::vector<int>& segment_lengths) {
    if (segment_lengths.empty())
        throw std::invalid_argument("make_cyclic_family: empty segment list");
    for (int n : segment_lengths)
        if (n < 1) throw std::invalid_argument("make_cyclic_family: segment length must be >= 1");
    const int m = static_cast<int>(segment_lengths.size());
    const int total = [&] {
        int t = 0;
        for (int n : segment_lengths) t += n;
        return t;
    }();

    BoundQuiverSpec spec;
    spec.quiver.vertex_count = total;
    int v = 0;
    std::vector<int> first_arrow_of_segment(m), last_arrow_of_segment(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < segment_lengths[i]; ++j) {
            int id = static_cast<int>(spec.quiver.arrows.size());
            std::string name = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            spec.quiver.arrows.push_back(Arrow{id, v, (v + 1) % total, name});
            if (j == 0) first_arrow_of_segment[i] = id;
            if (j == segment_lengths[i] - 1) last_arrow_of_segment[i] = id;
            ++v;
        }
    }
    // junction compositions vanish
    for (int i = 0; i < m; ++i) {
        int next = (i + 1) % m;
        Path p;
        p.arrows = {last_arrow_of_segment[i], first_arrow_of_segment[next]};
        p.source = spec.quiver.arrows[p.arrows[0]].source;
        spec.relations.push_back(Relation{{RelationTerm{Rational(1), p}}});
    }
    spec.bound = *std::max_element(segment_lengths.begin(), segment_lengths.end()) + 1;
    spec.bound = std::max(2, spec.bound);
    spec.check_valid();
    return spec;
}

namespace {

struct LemmaBuilder {
    BoundQuiverSpec spec;
    int next_vertex = 0;

    int add_vertex() { return next_vertex++; }
    int add_arrow(const std::string& name, int s, int t) {
        int id = static_cast<int>(spec.quiver.arrows.size());
        spec.quiver.arrows.push_back(Arrow{id, s, t, name});
        return id;
    }
    void add_relation(int first, int second) {
        Path p;
        p.arrows = {first, second};
        p.source = spec.quiver.arrows[first].source;
        spec.relations.push_back(Relation{{RelationTerm{Rational(1), p}}});
    }
    BoundQuiverSpec finish() {
        spec.quiver.vertex_count = next_vertex;
        spec.bound = std::max(2, spec.quiver.longest_path_length() + 1);
        spec.check_valid();
        return spec;
    }
};

}  // namespace

BoundQuiverSpec make_gentle_lemma_family(GentleLemmaKind kind, const GentleLemmaParams& p) {
    if (p.m < 1 || p.n < 1 || p.r < 1 || p.s < 1)
        throw std::invalid_argument("gentle lemma family parameters must be >= 1");
    LemmaBuilder b;

    // Common alpha strand through a distinguished middle vertex.
    auto build_strand = [&](int before, int after, const std::string& prefix) {
        // returns (vertices, arrow ids); vertices.size() == before+after+1
        std::vector<int> verts, arrows;
        verts.push_back(b.add_vertex());
        for (int i = 0; i < before + after; ++i) {
            int v = b.add_vertex();
            arrows.push_back(
                b.add_arrow(prefix + std::to_string(i + 1), verts.back(), v));
            verts.push_back(v);
        }
        return std::pair(verts, arrows);
    };

    switch (kind) {
        case GentleLemmaKind::MidRelation: {
            // alpha_1..alpha_m then beta_1..beta_n in one line; the
            // composition through the middle vertex vanishes.
            auto [verts, alphas] = build_strand(p.m, 0, "a");
            std::vector<int> betas;
            for (int j = 0; j < p.n; ++j) {
                int v = b.add_vertex();
                betas.push_back(b.add_arrow("b" + std::to_string(j + 1), verts.back(), v));
                verts.push_back(v);
            }
            b.add_relation(alphas[p.m - 1], betas[0]);
            break;
        }
        case GentleLemmaKind::InBranch: {
            auto [verts, alphas] = build_strand(p.m, p.n, "a");
            int mid = verts[p.m];
            // branch of r arrows running into the middle vertex
            int w = b.add_vertex();
            std::vector<int> betas;
            for (int j = 0; j < p.r; ++j) {
                int t = (j + 1 == p.r) ? mid : b.add_vertex();
                betas.push_back(b.add_arrow("b" + std::to_string(j + 1), w, t));
                w = t;
            }
            b.add_relation(betas[p.r - 1], alphas[p.m]);
            break;
        }
        case GentleLemmaKind::OutBranch: {
            auto [verts, alphas] = build_strand(p.m, p.n, "a");
            int mid = verts[p.m];
            int w = mid;
            std::vector<int> betas;
            for (int j = 0; j < p.r; ++j) {
                int t = b.add_vertex();
                betas.push_back(b.add_arrow("b" + std::to_string(j + 1), w, t));
                w = t;
            }
            b.add_relation(alphas[p.m - 1], betas[0]);
            break;
        }
        case GentleLemmaKind::Crossing: {
            auto [verts, alphas] = build_strand(p.m, p.n, "a");
            int mid = verts[p.m];
            // beta strand of r+s arrows crossing at the middle vertex
            int w = b.add_vertex();
            std::vector<int> betas;
            for (int j = 0; j < p.r; ++j) {
                int t = (j + 1 == p.r) ? mid : b.add_vertex();
                betas.push_back(b.add_arrow("b" + std::to_string(j + 1), w, t));
                w = t;
            }
            for (int j = 0; j < p.s; ++j) {
                int t = b.add_vertex();
                betas.push_back(b.add_arrow("b" + std::to_string(p.r + j + 1), w, t));
                w = t;
            }
            b.add_relation(betas[p.r - 1], alphas[p.m]);
            b.add_relation(alphas[p.m - 1], betas[p.r]);
            break;
        }
    }
    return b.finish();
}

long long gentle_lemma_expected_frobdim(GentleLemmaKind kind, const GentleLemmaParams& p) {
    switch (kind) {
        case GentleLemmaKind::MidRelation:
            return static_cast<long long>(p.m) * p.n + 2;
        case GentleLemmaKind::InBranch:
        case GentleLemmaKind::OutBranch:
            return 1;
        case GentleLemmaKind::Crossing:
            return 2;
    }
    return -1;
}

}  // namespace nf::quiver
