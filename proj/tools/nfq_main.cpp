#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nf/report.hpp"

namespace {

using nf::Mat;
using nf::Rational;
using nf::report::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;

struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::size_t max_paths = 100000;
};

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

Mat load_delta_file(const std::string& path, int dim) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open delta file '" + path + "'");
    json j = json::parse(in);
    return nf::report::delta_from_json(j.contains("delta") ? j["delta"] : j, dim);
}

Mat select_delta(const nf::algebra::FiniteAlgebra& a, const nf::nfsolver::FrobeniusSpace& space,
                 std::optional<int> index, const std::string& delta_file) {
    if (!delta_file.empty()) return load_delta_file(delta_file, a.dim());
    if (!index) throw std::invalid_argument("a coproduct is required: --delta or --delta-file");
    if (*index < 0 || *index >= space.dimension())
        throw ValidationFailure("delta index " + std::to_string(*index) +
                                " out of range: frobdim = " +
                                std::to_string(space.dimension()));
    return space.basis[*index];
}

// "a.b + 2*x^2" over basis labels.
nf::exactlin::Vec parse_element(const nf::algebra::FiniteAlgebra& a, const std::string& expr) {
    nf::exactlin::Vec v(a.dim(), Rational(0));
    std::istringstream in(expr);
    std::string term;
    while (std::getline(in, term, '+')) {
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            if (b == std::string::npos) return std::string();
            auto e = s.find_last_not_of(" \t");
            return s.substr(b, e - b + 1);
        };
        term = strip(term);
        if (term.empty()) throw std::invalid_argument("empty term in element '" + expr + "'");
        Rational coeff(1);
        std::string label = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            std::string head = strip(term.substr(0, star));
            bool numeric = !head.empty() && (std::isdigit(static_cast<unsigned char>(head[0])) ||
                                             head[0] == '-' || head[0] == '+');
            if (numeric) {
                coeff = Rational::parse(head);
                label = strip(term.substr(star + 1));
            }
        }
        int idx = a.label_index(label);
        if (idx < 0) throw std::invalid_argument("unknown basis label '" + label + "'");
        v[idx] += coeff;
    }
    return v;
}

nf::algebra::AlgebraMorphism load_morphism(const std::string& path,
                                           const nf::algebra::FiniteAlgebra& source,
                                           const nf::algebra::FiniteAlgebra& target) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open morphism file '" + path + "'");
    json j = json::parse(in);
    const json& images = j.contains("images") ? j["images"] : j;
    if (!images.is_array() || static_cast<int>(images.size()) != source.dim())
        throw std::invalid_argument("morphism file needs one image row per source basis element");
    std::vector<nf::exactlin::Vec> rows;
    for (const auto& row : images) {
        if (!row.is_array() || static_cast<int>(row.size()) != target.dim())
            throw std::invalid_argument("morphism image row has the wrong length");
        nf::exactlin::Vec v;
        for (const auto& cell : row) v.push_back(Rational::parse(cell.get<std::string>()));
        rows.push_back(std::move(v));
    }
    return nf::algebra::AlgebraMorphism(source, target, std::move(rows));
}

int run_frobdim(const Options& opt, const std::string& input) {
    auto in = nf::report::resolve_input(input, opt.max_paths);
    long long fd = nf::nfsolver::frobdim(in.algebra);
    emit(opt, nf::report::frobdim_json(in.label, in.algebra.dim(), fd),
         nf::report::frobdim_text(in.algebra.dim(), fd) + "\n");
    return kExitOk;
}

int run_basis(const Options& opt, const std::string& input) {
    auto in = nf::report::resolve_input(input, opt.max_paths);
    auto space = nf::nfsolver::casimir_space(in.algebra);
    emit(opt, nf::report::basis_json(in.label, in.algebra, space),
         nf::report::basis_text(in.label, in.algebra, space));
    return kExitOk;
}

int run_counit(const Options& opt, const std::string& input, std::optional<int> index,
               const std::string& delta_file) {
    auto in = nf::report::resolve_input(input, opt.max_paths);
    auto space = nf::nfsolver::casimir_space(in.algebra);
    Mat delta = select_delta(in.algebra, space, index, delta_file);
    auto coproduct = nf::nfsolver::induce_coproduct(in.algebra, delta);
    auto counit = nf::nfsolver::find_counit(in.algebra, coproduct);
    emit(opt, nf::report::counit_json(in.label, index.value_or(-1), in.algebra, counit),
         nf::report::counit_text(in.algebra, counit));
    return kExitOk;
}

int run_gentle(const Options& opt, const std::string& input, bool verify) {
    auto in = nf::report::resolve_input(input, opt.max_paths);
    if (!in.spec)
        throw std::invalid_argument("gentle needs a quiver-backed input (file or An/cycle)");
    nf::gentle::VertexClassification cls;
    nf::gentle::GentleResult result;
    try {
        cls = nf::gentle::classify(*in.spec);
        result = nf::gentle::run_gentle_algorithm(*in.spec);
    } catch (const nf::gentle::GentleAlgorithmError& e) {
        throw ValidationFailure(e.what());
    }
    std::optional<nf::gentle::CrossValidation> cross;
    if (verify) cross = nf::gentle::cross_validate(*in.spec);
    emit(opt, nf::report::gentle_json(in.label, *in.spec, cls, result, cross),
         nf::report::gentle_text(*in.spec, cls, result, cross));
    if (cross && !cross->agree)
        throw ValidationFailure("algorithm d = " + std::to_string(cross->algorithm_d) +
                                " but solver frobdim = " +
                                std::to_string(cross->solver_frobdim));
    return kExitOk;
}

int run_census(const Options& opt, int max_vertices, int max_arrows) {
    auto report = nf::census::nontriviality_census(max_vertices, max_arrows, opt.max_paths);
    emit(opt, nf::report::census_json(report), nf::report::census_text(report));
    if (!report.holds()) throw ValidationFailure("census found a violation");
    return kExitOk;
}

int run_validate(const Options& opt, const std::string& input) {
    auto resolved = [&]() -> std::pair<std::string, nf::quiver::BoundQuiverSpec> {
        if (input.rfind("file:", 0) == 0) {
            std::ifstream in(input.substr(5));
            if (!in) throw std::invalid_argument("cannot open quiver file");
            std::stringstream buf;
            buf << in.rdbuf();
            return {input, nf::quiver::parse_quiver(buf.str())};
        }
        auto r = nf::report::resolve_input(input, opt.max_paths);
        if (!r.spec) throw std::invalid_argument("validate needs a quiver-backed input");
        return {r.label, *r.spec};
    }();
    const auto& spec = resolved.second;
    bool admissible = nf::quiver::validate_admissible(spec, opt.max_paths);
    auto gentle_check = nf::quiver::is_gentle(spec);
    std::optional<int> dim;
    if (admissible)
        dim = nf::algebra::from_bound_quiver(spec, opt.max_paths).dim();
    emit(opt, nf::report::validate_json(resolved.first, spec, admissible, gentle_check, dim),
         nf::report::validate_text(resolved.first, spec, admissible, gentle_check, dim));
    if (!admissible) throw ValidationFailure("not admissible at the declared bound");
    return kExitOk;
}

struct ConstructArgs {
    std::vector<std::string> inputs;
    std::string deltas;      // comma-separated basis indices
    std::string delta_file;
    std::string ideal;
    std::string fa_file, fb_file;
};

std::vector<int> parse_indices(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

int run_construct(const Options& opt, const std::string& sub, const ConstructArgs& args) {
    using nf::algebra::FiniteAlgebra;
    auto indices = parse_indices(args.deltas);
    auto space_of = [&](const FiniteAlgebra& a) { return nf::nfsolver::casimir_space(a); };

    FiniteAlgebra out_algebra = nf::algebra::truncated_polynomial(0);  // placeholder
    std::optional<Mat> out_delta;

    if (sub == "op") {
        auto in = nf::report::resolve_input(args.inputs.at(0), opt.max_paths);
        auto space = space_of(in.algebra);
        Mat delta = select_delta(in.algebra, space,
                                 indices.empty() ? std::optional<int>() : indices[0],
                                 args.delta_file);
        out_algebra = nf::algebra::opposite(in.algebra);
        out_delta = nf::algebra::opposite_delta(delta);
    } else if (sub == "dsum") {
        std::vector<nf::report::ResolvedInput> parts;
        for (const auto& sel : args.inputs) parts.push_back(nf::report::resolve_input(sel, opt.max_paths));
        if (parts.empty()) throw std::invalid_argument("dsum needs at least one algebra");
        if (!indices.empty() && indices.size() != parts.size())
            throw std::invalid_argument("dsum needs one delta index per summand");
        std::vector<const FiniteAlgebra*> ptrs;
        for (auto& p : parts) ptrs.push_back(&p.algebra);
        auto sum = nf::algebra::direct_sum(ptrs);
        if (!indices.empty()) {
            std::vector<Mat> deltas;
            for (std::size_t k = 0; k < parts.size(); ++k) {
                auto space = space_of(parts[k].algebra);
                deltas.push_back(select_delta(parts[k].algebra, space, indices[k], ""));
            }
            out_delta = nf::algebra::direct_sum_delta(sum, deltas);
        }
        out_algebra = std::move(sum.algebra);
    } else if (sub == "tensor") {
        auto a = nf::report::resolve_input(args.inputs.at(0), opt.max_paths);
        auto b = nf::report::resolve_input(args.inputs.at(1), opt.max_paths);
        auto t = nf::algebra::tensor_product(a.algebra, b.algebra);
        if (!indices.empty()) {
            if (indices.size() != 2) throw std::invalid_argument("tensor needs two delta indices");
            Mat da = select_delta(a.algebra, space_of(a.algebra), indices[0], "");
            Mat db = select_delta(b.algebra, space_of(b.algebra), indices[1], "");
            out_delta = nf::algebra::tensor_delta(t, da, db);
        }
        out_algebra = std::move(t.algebra);
    } else if (sub == "quotient") {
        auto in = nf::report::resolve_input(args.inputs.at(0), opt.max_paths);
        if (args.ideal.empty()) throw std::invalid_argument("quotient needs --ideal");
        std::vector<nf::exactlin::Vec> gens;
        std::istringstream terms(args.ideal);
        std::string expr;
        while (std::getline(terms, expr, ';')) gens.push_back(parse_element(in.algebra, expr));
        auto ideal = nf::algebra::ideal_closure(in.algebra, gens);
        std::optional<Mat> delta;
        if (!indices.empty() || !args.delta_file.empty())
            delta = select_delta(in.algebra, space_of(in.algebra),
                                 indices.empty() ? std::optional<int>() : indices[0],
                                 args.delta_file);
        try {
            auto q = nf::algebra::quotient(in.algebra, ideal, delta);
            out_algebra = std::move(q.algebra);
            out_delta = q.induced_delta;
        } catch (const std::invalid_argument& e) {
            throw ValidationFailure(e.what());
        }
    } else if (sub == "pullback") {
        auto a = nf::report::resolve_input(args.inputs.at(0), opt.max_paths);
        auto b = nf::report::resolve_input(args.inputs.at(1), opt.max_paths);
        auto c = nf::report::resolve_input(args.inputs.at(2), opt.max_paths);
        auto fa = load_morphism(args.fa_file, a.algebra, c.algebra);
        auto fb = load_morphism(args.fb_file, b.algebra, c.algebra);
        if (indices.size() != 2)
            throw std::invalid_argument("pullback needs --delta <ka>,<kb>");
        Mat da = select_delta(a.algebra, space_of(a.algebra), indices[0], "");
        Mat db = select_delta(b.algebra, space_of(b.algebra), indices[1], "");
        try {
            auto r = nf::algebra::pullback(fa, fb, da, db);
            out_algebra = std::move(r.algebra);
            out_delta = std::move(r.delta);
        } catch (const std::invalid_argument& e) {
            throw ValidationFailure(e.what());
        }
    } else {
        throw std::invalid_argument("unknown construct sub-verb '" + sub + "'");
    }

    bool bimodule_ok = true, coassoc_ok = true;
    if (out_delta) {
        auto coproduct = nf::nfsolver::induce_coproduct(out_algebra, *out_delta);
        bimodule_ok = nf::nfsolver::verify_bimodule(out_algebra, coproduct).ok;
        coassoc_ok = nf::nfsolver::verify_coassociative(out_algebra, coproduct).ok;
    }
    emit(opt, nf::report::construct_json(sub, out_algebra, out_delta, bimodule_ok, coassoc_ok),
         nf::report::construct_text(sub, out_algebra, out_delta, bimodule_ok, coassoc_ok));
    if (!bimodule_ok || !coassoc_ok)
        throw ValidationFailure("constructed coproduct failed verification");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nearly Frobenius structures of finite-dimensional algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "random seed for seeded operations");
    app.add_option("--max-paths", opt.max_paths, "path enumeration cap");

    std::string input;
    std::string delta_file;
    bool verify = false;
    int max_vertices = 4, max_arrows = 4;
    ConstructArgs cargs;

    auto* cmd_frobdim = app.add_subcommand("frobdim", "dimension of the coproduct space");
    cmd_frobdim->add_option("input", input)->required();

    auto* cmd_basis = app.add_subcommand("basis", "canonical basis of the coproduct space");
    cmd_basis->add_option("input", input)->required();

    auto* cmd_counit = app.add_subcommand("counit", "search for a counit completion");
    cmd_counit->add_option("input", input)->required();
    int raw_delta = -1;
    cmd_counit->add_option("--delta", raw_delta, "basis index of the coproduct");
    cmd_counit->add_option("--delta-file", delta_file, "explicit coefficient matrix (JSON)");

    auto* cmd_gentle = app.add_subcommand("gentle", "counting algorithm for gentle algebras");
    cmd_gentle->add_option("input", input)->required();
    cmd_gentle->add_flag("--verify", verify, "also run the solver and compare");

    auto* cmd_census = app.add_subcommand("census", "exhaustive path-algebra sweep");
    cmd_census->add_option("--max-vertices", max_vertices)->capture_default_str();
    cmd_census->add_option("--max-arrows", max_arrows)->capture_default_str();

    auto* cmd_validate = app.add_subcommand("validate", "check a bound quiver presentation");
    cmd_validate->add_option("input", input)->required();

    auto* cmd_construct = app.add_subcommand("construct", "derived algebras with coproducts");
    cmd_construct->require_subcommand(1);
    std::vector<CLI::App*> subs;
    for (const char* name : {"op", "dsum", "tensor", "quotient", "pullback"}) {
        auto* s = cmd_construct->add_subcommand(name);
        s->add_option("inputs", cargs.inputs)->required();
        s->add_option("--delta", cargs.deltas, "comma-separated basis indices");
        if (std::string(name) == "op" || std::string(name) == "quotient")
            s->add_option("--delta-file", cargs.delta_file);
        if (std::string(name) == "quotient")
            s->add_option("--ideal", cargs.ideal, "ideal generators, ';'-separated expressions");
        if (std::string(name) == "pullback") {
            s->add_option("--fa", cargs.fa_file)->required();
            s->add_option("--fb", cargs.fb_file)->required();
        }
        subs.push_back(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_frobdim->parsed()) return run_frobdim(opt, input);
        if (cmd_basis->parsed()) return run_basis(opt, input);
        if (cmd_counit->parsed())
            return run_counit(opt, input,
                              raw_delta >= 0 ? std::optional<int>(raw_delta) : std::nullopt,
                              delta_file);
        if (cmd_gentle->parsed()) return run_gentle(opt, input, verify);
        if (cmd_census->parsed()) return run_census(opt, max_vertices, max_arrows);
        if (cmd_validate->parsed()) return run_validate(opt, input);
        if (cmd_construct->parsed()) {
            for (auto* s : subs)
                if (s->parsed()) return run_construct(opt, s->get_name(), cargs);
        }
        std::cerr << "no command\n";
        return kExitUsage;
    } catch (const ValidationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const nf::quiver::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
