#ifndef OPERLAB_JSON_IO_HPP
#define OPERLAB_JSON_IO_HPP

#include "json.hpp"
#include "operlab/barhomology.hpp"
#include "operlab/monoidquot.hpp"
#include "operlab/opers.hpp"
#include "operlab/tsen.hpp"

namespace operlab::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Rationals as strings "p/q", polynomials as coefficient arrays lowest-first,
// rational functions as {"num", "den"}, punctures as "inf" or a rational.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);
json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j);

json curve_to_json(const PuncturedCurve& curve);
PuncturedCurve curve_from_json(const json& j);

/// Whole system: {"punctures", "derivation_unit", "A", "form"?}.
json system_to_json(const LocalSystem& sys);
LocalSystem system_from_json(const json& j);

json line_to_json(const LineSection& line);
LineSection line_from_json(const LocalSystem& sys, const json& j);

json flag_to_json(const Flag& flag);
json quadratic_system_to_json(const QuadraticSystem& qs);
json connectivity_to_json(const ConnectivityReport& rep);
json witness_to_json(const WitnessPair& w);
json g2_to_json(const G2Report& rep);

json action_to_json(const MonoidAction& action);
MonoidAction action_from_json(const json& j);
json contractibility_to_json(const ContractibilityReport& rep);

json projective_system_to_json(const ProjectiveSystem& sys);
ProjectiveSystem projective_system_from_json(const json& j);
json tsen_count_to_json(const TsenCount& c);
json section_to_json(const SectionCandidate& s);

}  // namespace operlab::io

#endif
