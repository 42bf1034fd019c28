#pragma once

// JSON and CSV forms of polynomials, Betti tables and experiment reports.
//
// Polynomial objects look like
//   {"field": "GF(3)", "vars": [{"name": "x1", "degree": 1}, ...],
//    "terms": [{"coeff": "2", "exps": [1, 0]}, ...]}
// and on input "vars" may also list bare names (degree 1) and "terms" may
// be replaced by an "expr" string. Lists of polynomials are either an array
// of such objects or {"field", "vars", "polys": [object or expr string]}.

#include <string>
#include <vector>

#include "json.hpp"

#include "bigpoly/experiments.hpp"
#include "bigpoly/families.hpp"

namespace bigpoly::io {

using json = nlohmann::ordered_json;

json ring_to_json(const Ring& ring);
Ring ring_from_json(const json& j);

json poly_to_json(const Poly& f);
Poly poly_from_json(const json& j);
/// Terms only, for polynomials whose ring is recorded elsewhere.
json terms_to_json(const Poly& f);

/// Accepts any of the list shapes above, or a single polynomial.
std::vector<Poly> polys_from_json(const json& j);
json polys_to_json(const std::vector<Poly>& fs);

/// {"field", "vars", "target": [degrees], "source": [degrees],
///  "columns": [[entry, ...], ...]} with entries as expr strings or term
/// objects; or a list of polynomials, read as the 1 x r row.
GradedMap presentation_from_json(const json& j);
json presentation_to_json(const GradedMap& phi);

/// {"field", "elements": [{"head": expr or poly, "n0": int,
///  "tail": {"coeff", "degree", "start", "index_weighted"}}]}
std::vector<LimitElement> limit_elements_from_json(const json& j);

json certificate_to_json(const StrengthCertificate& cert);
json betti_to_json(const BettiTable& table);
/// g written with the field's parameter names.
std::string open_to_string(const DistinguishedOpen& open, const Field& field);

json threshold_to_json(const ThresholdReport& r);
std::string threshold_to_csv(const ThresholdReport& r);
std::string threshold_to_text(const ThresholdReport& r);

json census_to_json(const CensusReport& r);
std::string census_to_csv(const CensusReport& r);
std::string census_to_text(const CensusReport& r);

json pd_to_json(const PdReport& r);
std::string pd_to_csv(const PdReport& r);
std::string pd_to_text(const PdReport& r);

json subalgebra_to_json(const SmallSubalgebra& r);
std::string subalgebra_to_text(const SmallSubalgebra& r);

/// Reports end with a newline; two-space indentation.
std::string dump(const json& j);

extern const char* const kToolVersion;

}  // namespace bigpoly::io
