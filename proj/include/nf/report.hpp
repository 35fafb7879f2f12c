#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "nf/algebra.hpp"
#include "nf/census.hpp"
#include "nf/gentle.hpp"
#include "nf/nfsolver.hpp"

namespace nf::report {

using json = nlohmann::ordered_json;

// Input selector: `builtin:<family>:<params>` or `file:<path>`.
// Families: truncpoly:<n>, matrix:<n>, cyclicgroup:<n>, An:<n>, cycle:<n1,...,nm>.
struct ResolvedInput {
    std::string label;
    std::optional<quiver::BoundQuiverSpec> spec;  // present for quiver-backed inputs
    algebra::FiniteAlgebra algebra;
};

ResolvedInput resolve_input(const std::string& selector, std::size_t path_cap = 100000);

std::string format_coeff_term(const Rational& c, const std::string& term);
std::string coproduct_image_text(const algebra::FiniteAlgebra& a, const Mat& image);

json delta_json(const Mat& delta);
Mat delta_from_json(const json& j, int dim);

json frobdim_json(const std::string& label, int dim_k, long long frobdim);
std::string frobdim_text(int dim_k, long long frobdim);

json basis_json(const std::string& label, const algebra::FiniteAlgebra& a,
                const nfsolver::FrobeniusSpace& space);
std::string basis_text(const std::string& label, const algebra::FiniteAlgebra& a,
                       const nfsolver::FrobeniusSpace& space);

json counit_json(const std::string& label, int delta_index, const algebra::FiniteAlgebra& a,
                 const std::optional<nfsolver::Counit>& counit);
std::string counit_text(const algebra::FiniteAlgebra& a,
                        const std::optional<nfsolver::Counit>& counit);

json gentle_json(const std::string& label, const quiver::BoundQuiverSpec& spec,
                 const gentle::VertexClassification& cls, const gentle::GentleResult& result,
                 const std::optional<gentle::CrossValidation>& verify);
std::string gentle_text(const quiver::BoundQuiverSpec& spec,
                        const gentle::VertexClassification& cls,
                        const gentle::GentleResult& result,
                        const std::optional<gentle::CrossValidation>& verify);

json census_json(const census::CensusReport& report);
std::string census_text(const census::CensusReport& report);

json construct_json(const std::string& op, const algebra::FiniteAlgebra& a,
                    const std::optional<Mat>& delta, bool bimodule_ok, bool coassoc_ok);
std::string construct_text(const std::string& op, const algebra::FiniteAlgebra& a,
                           const std::optional<Mat>& delta, bool bimodule_ok,
                           bool coassoc_ok);

json validate_json(const std::string& label, const quiver::BoundQuiverSpec& spec,
                   bool admissible, const quiver::GentleCheck& gentle_check,
                   std::optional<int> dim_k);
std::string validate_text(const std::string& label, const quiver::BoundQuiverSpec& spec,
                          bool admissible, const quiver::GentleCheck& gentle_check,
                          std::optional<int> dim_k);

}  // namespace nf::report
