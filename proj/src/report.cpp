#include "nf/report.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nf::report {

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty parameter list");
    return out;
}

}  // namespace

ResolvedInput resolve_input(const std::string& selector, std::size_t path_cap) {
    if (selector.rfind("builtin:", 0) == 0) {
        std::string rest = selector.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("selector needs builtin:<family>:<params>");
        std::string family = rest.substr(0, colon);
        std::string params = rest.substr(colon + 1);
        if (family == "truncpoly")
            return {selector, std::nullopt, algebra::truncated_polynomial(parse_int_list(params).at(0))};
        if (family == "matrix")
            return {selector, std::nullopt, algebra::matrix_algebra(parse_int_list(params).at(0))};
        if (family == "cyclicgroup")
            return {selector, std::nullopt, algebra::cyclic_group_algebra(parse_int_list(params).at(0))};
        if (family == "An") {
            auto spec = quiver::make_linear_An(parse_int_list(params).at(0));
            auto a = algebra::from_bound_quiver(spec, path_cap);
            return {selector, std::move(spec), std::move(a)};
        }
        if (family == "cycle") {
            auto spec = quiver::make_cyclic_family(parse_int_list(params));
            auto a = algebra::from_bound_quiver(spec, path_cap);
            return {selector, std::move(spec), std::move(a)};
        }
        throw std::invalid_argument("unknown builtin family '" + family + "'");
    }
    if (selector.rfind("file:", 0) == 0) {
        std::string path = selector.substr(5);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open quiver file '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        auto spec = quiver::parse_quiver(buf.str());
        auto a = algebra::from_bound_quiver(spec, path_cap);
        return {selector, std::move(spec), std::move(a)};
    }
    throw std::invalid_argument("selector must be 'builtin:...' or 'file:<path>'");
}

std::string format_coeff_term(const Rational& c, const std::string& term) {
    if (c == Rational(1)) return term;
    if (c == Rational(-1)) return "-" + term;
    return c.str() + "*" + term;
}

std::string coproduct_image_text(const algebra::FiniteAlgebra& a, const Mat& image) {
    std::string out;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (image[i][j].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += format_coeff_term(image[i][j], a.label(i) + "⊗" + a.label(j));
        }
    return out.empty() ? "0" : out;
}

json delta_json(const Mat& delta) {
    json arr = json::array();
    const int n = static_cast<int>(delta.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!delta[i][j].is_zero()) arr.push_back({i, j, delta[i][j].str()});
    return arr;
}

Mat delta_from_json(const json& j, int dim) {
    Mat d = mat_zero(dim);
    for (const auto& triple : j) {
        if (!triple.is_array() || triple.size() != 3)
            throw std::invalid_argument("delta entries must be [row, col, \"p/q\"]");
        int r = triple[0].get<int>(), c = triple[1].get<int>();
        if (r < 0 || r >= dim || c < 0 || c >= dim)
            throw std::invalid_argument("delta entry out of range");
        d[r][c] = Rational::parse(triple[2].get<std::string>());
    }
    return d;
}

json frobdim_json(const std::string& label, int dim_k, long long frobdim) {
    json j;
    j["algebra"] = label;
    j["dim_k"] = dim_k;
    j["frobdim"] = frobdim;
    return j;
}

std::string frobdim_text(int dim_k, long long frobdim) {
    return "dim_k=" + std::to_string(dim_k) + " frobdim=" + std::to_string(frobdim);
}

json basis_json(const std::string& label, const algebra::FiniteAlgebra& a,
                const nfsolver::FrobeniusSpace& space) {
    json j;
    j["algebra"] = label;
    j["dim_k"] = a.dim();
    j["frobdim"] = space.dimension();
    json basis = json::array();
    for (const Mat& d : space.basis) {
        json entry;
        entry["delta"] = delta_json(d);
        basis.push_back(std::move(entry));
    }
    j["basis"] = std::move(basis);
    return j;
}

std::string basis_text(const std::string& label, const algebra::FiniteAlgebra& a,
                       const nfsolver::FrobeniusSpace& space) {
    std::ostringstream out;
    out << label << ": dim_k=" << a.dim() << " frobdim=" << space.dimension() << "\n";
    for (int k = 0; k < space.dimension(); ++k) {
        out << "delta[" << k << "]\n";
        nfsolver::Coproduct c = nfsolver::induce_coproduct(a, space.basis[k]);
        for (int i = 0; i < a.dim(); ++i) {
            if (mat_is_zero(c.images[i])) continue;
            out << "  Delta(" << a.label(i) << ") = " << coproduct_image_text(a, c.images[i])
                << "\n";
        }
    }
    return out.str();
}

json counit_json(const std::string& label, int delta_index, const algebra::FiniteAlgebra& a,
                 const std::optional<nfsolver::Counit>& counit) {
    json j;
    j["algebra"] = label;
    j["delta_index"] = delta_index;
    j["exists"] = counit.has_value();
    if (counit) {
        json values = json::array();
        for (int i = 0; i < a.dim(); ++i)
            values.push_back({a.label(i), counit->functional[i].str()});
        j["counit"] = std::move(values);
    }
    return j;
}

std::string counit_text(const algebra::FiniteAlgebra& a,
                        const std::optional<nfsolver::Counit>& counit) {
    if (!counit) return "no counit: the coproduct admits no completion\n";
    std::ostringstream out;
    out << "counit exists\n";
    for (int i = 0; i < a.dim(); ++i) {
        if (counit->functional[i].is_zero()) continue;
        out << "  eps(" << a.label(i) << ") = " << counit->functional[i].str() << "\n";
    }
    return out.str();
}

json gentle_json(const std::string& label, const quiver::BoundQuiverSpec& spec,
                 const gentle::VertexClassification& cls, const gentle::GentleResult& result,
                 const std::optional<gentle::CrossValidation>& verify) {
    json j;
    j["algebra"] = label;
    json order = json::array();
    for (int v : result.trace.order) order.push_back(v + 1);
    j["order"] = std::move(order);
    json types;
    for (int v = 0; v < spec.quiver.vertex_count; ++v)
        types[std::to_string(v + 1)] = gentle::vertex_type_name(cls.vertices[v].type);
    j["types"] = std::move(types);
    json x;
    for (const auto& a : spec.quiver.arrows) x[a.name] = result.trace.x[a.id];
    j["x"] = std::move(x);
    json y;
    for (int v = 0; v < spec.quiver.vertex_count; ++v)
        y[std::to_string(v + 1)] = result.trace.y[v];
    j["y"] = std::move(y);
    j["d"] = result.frobdim;
    if (verify) {
        json v;
        v["algorithm_d"] = verify->algorithm_d;
        v["solver_frobdim"] = verify->solver_frobdim;
        v["agree"] = verify->agree;
        j["verify"] = std::move(v);
    }
    return j;
}

std::string gentle_text(const quiver::BoundQuiverSpec& spec,
                        const gentle::VertexClassification& cls,
                        const gentle::GentleResult& result,
                        const std::optional<gentle::CrossValidation>& verify) {
    std::ostringstream out;
    out << "vertex  type    y\n";
    for (int v : result.trace.order)
        out << "  " << v + 1 << "\t" << gentle::vertex_type_name(cls.vertices[v].type) << "\t"
            << result.trace.y[v] << "\n";
    out << "arrow   x\n";
    for (const auto& a : spec.quiver.arrows)
        out << "  " << a.name << "\t" << result.trace.x[a.id] << "\n";
    out << "d = " << result.frobdim << "\n";
    if (verify)
        out << "verify: solver frobdim = " << verify->solver_frobdim
            << (verify->agree ? " (agree)" : " (DISAGREE)") << "\n";
    return out.str();
}

namespace {

json census_row_json(const census::CensusRow& row) {
    json r;
    r["vertices"] = row.vertices;
    json arrows = json::array();
    for (const auto& [s, t] : row.arrows) arrows.push_back({s + 1, t + 1});
    r["arrows"] = std::move(arrows);
    r["dim_k"] = row.dim_k;
    r["frobdim"] = row.frobdim;
    r["linear_chain"] = row.linear_chain;
    return r;
}

}  // namespace

json census_json(const census::CensusReport& report) {
    json j;
    j["max_vertices"] = report.max_vertices;
    j["max_arrows"] = report.max_arrows;
    j["examined"] = report.examined;
    j["skipped_cyclic"] = report.skipped_cyclic;
    json nontrivial = json::array();
    for (const auto& row : report.nontrivial) nontrivial.push_back(census_row_json(row));
    j["nontrivial"] = std::move(nontrivial);
    json violations = json::array();
    for (const auto& row : report.violations) violations.push_back(census_row_json(row));
    j["violations"] = std::move(violations);
    j["holds"] = report.holds();
    return j;
}

std::string census_text(const census::CensusReport& report) {
    std::ostringstream out;
    out << "census: vertices <= " << report.max_vertices << ", arrows <= "
        << report.max_arrows << ", path algebras examined = " << report.examined
        << ", cyclic candidates skipped = " << report.skipped_cyclic << "\n";
    out << "nontrivial (frobdim > 0): " << report.nontrivial.size() << "\n";
    for (const auto& row : report.nontrivial) {
        out << "  vertices=" << row.vertices << " arrows=[";
        for (std::size_t k = 0; k < row.arrows.size(); ++k) {
            if (k) out << ",";
            out << row.arrows[k].first + 1 << "->" << row.arrows[k].second + 1;
        }
        out << "] dim_k=" << row.dim_k << " frobdim=" << row.frobdim
            << (row.linear_chain ? " (linear chain)" : " (NOT a chain)") << "\n";
    }
    out << (report.holds() ? "only linearly oriented chains are nontrivial\n"
                           : "VIOLATION: a non-chain carries a nontrivial structure\n");
    return out.str();
}

json construct_json(const std::string& op, const algebra::FiniteAlgebra& a,
                    const std::optional<Mat>& delta, bool bimodule_ok, bool coassoc_ok) {
    json j;
    j["op"] = op;
    j["dim_k"] = a.dim();
    json labels = json::array();
    for (const auto& l : a.labels()) labels.push_back(l);
    j["labels"] = std::move(labels);
    if (delta) j["delta"] = delta_json(*delta);
    json verify;
    verify["bimodule"] = bimodule_ok;
    verify["coassociative"] = coassoc_ok;
    j["verify"] = std::move(verify);
    return j;
}

std::string construct_text(const std::string& op, const algebra::FiniteAlgebra& a,
                           const std::optional<Mat>& delta, bool bimodule_ok,
                           bool coassoc_ok) {
    std::ostringstream out;
    out << op << ": dim_k=" << a.dim() << "\nbasis:";
    for (const auto& l : a.labels()) out << " " << l;
    out << "\n";
    if (delta) {
        nfsolver::Coproduct c = nfsolver::induce_coproduct(a, *delta);
        for (int i = 0; i < a.dim(); ++i) {
            if (mat_is_zero(c.images[i])) continue;
            out << "Delta(" << a.label(i) << ") = " << coproduct_image_text(a, c.images[i])
                << "\n";
        }
    }
    out << "verify: bimodule=" << (bimodule_ok ? "ok" : "FAIL")
        << " coassociative=" << (coassoc_ok ? "ok" : "FAIL") << "\n";
    return out.str();
}

json validate_json(const std::string& label, const quiver::BoundQuiverSpec& spec,
                   bool admissible, const quiver::GentleCheck& gentle_check,
                   std::optional<int> dim_k) {
    json j;
    j["input"] = label;
    j["vertices"] = spec.quiver.vertex_count;
    j["arrows"] = spec.quiver.arrows.size();
    j["relations"] = spec.relations.size();
    j["bound"] = spec.bound;
    j["admissible"] = admissible;
    j["gentle"] = gentle_check.gentle;
    json violations = json::array();
    for (const auto& v : gentle_check.violations) violations.push_back(v);
    j["gentle_violations"] = std::move(violations);
    if (dim_k) j["dim_k"] = *dim_k;
    return j;
}

std::string validate_text(const std::string& label, const quiver::BoundQuiverSpec& spec,
                          bool admissible, const quiver::GentleCheck& gentle_check,
                          std::optional<int> dim_k) {
    std::ostringstream out;
    out << label << ": vertices=" << spec.quiver.vertex_count
        << " arrows=" << spec.quiver.arrows.size() << " relations=" << spec.relations.size()
        << " bound=" << spec.bound << "\n";
    out << "admissible: " << (admissible ? "yes" : "no") << "\n";
    out << "gentle: " << (gentle_check.gentle ? "yes" : "no") << "\n";
    for (const auto& v : gentle_check.violations) out << "  violation: " << v << "\n";
    if (dim_k) out << "dim_k=" << *dim_k << "\n";
    return out.str();
}

}  // namespace nf::report
