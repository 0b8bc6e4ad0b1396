#pragma once
// JSON views of the library's results. Rationals are written as strings
// ("-1/3") so no precision is lost; readers also accept JSON integers.

#include "waring/apolarity.hpp"
#include "waring/certificates.hpp"
#include "waring/decomposition.hpp"
#include "waring/ideal.hpp"

#include <json.hpp>

#include <stdexcept>

namespace waring {

using Json = nlohmann::ordered_json;

/// Malformed JSON input to one of the readers below.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"degree", "nvars", "terms": [{"coefficient", "form": [...]}], "identity"}
Json to_json(const WaringDecomposition& dec);
WaringDecomposition decomposition_from_json(const Json& j);

/// {"nvars", "truncation_bound", "generators": ["d0*d1", ...]}
Json to_json(const HomogeneousIdeal& ideal);
HomogeneousIdeal ideal_from_json(const Json& j);

Json to_json(const HilbertFunction& hf);
Json to_json(const Matrix& m);
/// Rows of the matrix plus the two monomial bases.
Json to_json(const CatalecticantMatrix& cat);
/// Square matrix given as a list of rows.
Matrix matrix_from_json(const Json& j);

Json to_json(const AvoidanceCertificate& cert);
Json to_json(const CaseCertificate& cert);
Json to_json(const VerificationResult& result);
Json to_json(const RankReport& report);

}  // namespace waring
