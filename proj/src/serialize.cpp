#include "waring/serialize.hpp"

namespace waring {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) throw FormatError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Json monomial_names(const MonomialBasis& basis, const Variables& vars) {
  Json out = Json::array();
  for (const auto& m : basis.monomials()) out.push_back(Polynomial::monomial(m).to_string(vars));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw FormatError("a rational must be a string like \"-3/4\" or an integer");
}

Json to_json(const WaringDecomposition& dec) {
  Json terms = Json::array();
  for (const auto& t : dec.terms()) {
    Json form = Json::array();
    for (const auto& c : t.form.coefficients()) form.push_back(to_json(c));
    terms.push_back({{"coefficient", to_json(t.coefficient)}, {"form", form}});
  }
  return {{"degree", dec.degree()}, {"nvars", dec.nvars()}, {"terms", terms}, {"identity", dec.identity_string()}};
}

WaringDecomposition decomposition_from_json(const Json& j) {
  const std::size_t degree = size_field(j, "degree");
  const std::size_t nvars = size_field(j, "nvars");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw FormatError("\"terms\" must be an array");
  WaringDecomposition dec(static_cast<unsigned>(degree), nvars);
  for (const auto& t : terms) {
    const Json& form = field(t, "form");
    if (!form.is_array() || form.size() != nvars) throw FormatError("each form needs exactly nvars coefficients");
    Vector coeffs;
    for (const auto& c : form) coeffs.push_back(rational_from_json(c));
    dec.add(rational_from_json(field(t, "coefficient")), LinearForm(std::move(coeffs)));
  }
  return dec;
}

Json to_json(const HomogeneousIdeal& ideal) {
  Json gens = Json::array();
  const Variables vars = dual_variables(ideal.nvars());
  for (const auto& g : ideal.generators()) gens.push_back(g.polynomial().to_string(vars));
  Json bound = ideal.truncation_bound() ? Json(*ideal.truncation_bound()) : Json(nullptr);
  return {{"nvars", ideal.nvars()}, {"truncation_bound", bound}, {"generators", gens}};
}

HomogeneousIdeal ideal_from_json(const Json& j) {
  const std::size_t nvars = size_field(j, "nvars");
  std::optional<unsigned> bound;
  if (const Json& b = field(j, "truncation_bound"); !b.is_null()) bound = static_cast<unsigned>(size_field(j, "truncation_bound"));
  std::vector<DiffOperator> gens;
  for (const auto& g : field(j, "generators")) {
    if (!g.is_string()) throw FormatError("generators are written as strings");
    gens.push_back(parse_operator(g.get<std::string>(), nvars));
  }
  return HomogeneousIdeal(nvars, std::move(gens), bound);
}

Json to_json(const HilbertFunction& hf) {
  return {{"values", hf.values}, {"delta", hf.delta()}, {"sum", hf.sum()}};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const CatalecticantMatrix& cat) {
  const std::size_t nvars = cat.operator_basis->nvars();
  return {{"form_degree", cat.form_degree},
          {"operator_degree", cat.source_degree},
          {"rank", cat.rank()},
          {"columns", monomial_names(*cat.operator_basis, dual_variables(nvars))},
          {"rows", monomial_names(*cat.image_basis, Variables::indexed("x", nvars))},
          {"entries", to_json(cat.entries)}};
}

Matrix matrix_from_json(const Json& j) {
  if (j.is_object()) return matrix_from_json(field(j, "matrix"));
  if (!j.is_array() || j.empty()) throw FormatError("a matrix is a non-empty list of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != j.size()) throw FormatError("the matrix must be square");
    Vector row;
    for (const auto& c : r) row.push_back(rational_from_json(c));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

Json to_json(const AvoidanceCertificate& cert) {
  Json out = {{"hyperplane", cert.hyperplane.to_string()},
              {"hilbert", to_json(cert.hilbert)},
              {"hf_sum", cert.hf_sum}};
  if (cert.colon) out["colon"] = cert.colon->to_string();
  if (cert.refined_hilbert) out["refined_hilbert"] = to_json(*cert.refined_hilbert);
  if (cert.refined_sum) out["refined_sum"] = *cert.refined_sum;
  if (cert.removed_points) out["removed_points"] = *cert.removed_points;
  out["bound"] = cert.bound();
  out["condition"] = cert.condition;
  return out;
}

Json to_json(const CaseCertificate& cert) {
  Json claims = Json::array();
  for (const auto& c : cert.claims)
    claims.push_back({{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
  Json out = {{"claims", claims}, {"all_passed", cert.all_passed()}, {"conclusion", cert.conclusion()}};
  if (cert.refinement) {
    Json ref = to_json(*cert.refinement);
    const Variables ops = example_operator_variables();
    ref["hyperplane"] = cert.refinement->hyperplane.polynomial().to_string(ops);
    if (cert.refinement->colon) ref["colon"] = cert.refinement->colon->polynomial().to_string(ops);
    out["refinement"] = ref;
  }
  return out;
}

Json to_json(const VerificationResult& result) {
  return {{"ok", result.ok()},
          {"expansion_matches", result.expansion_matches},
          {"pairwise_independent", result.pairwise_independent},
          {"residual", result.residual.to_string()}};
}

Json to_json(const RankReport& report) {
  Json upper = {{"value", report.upper.value}, {"kind", to_string(report.upper.kind)}};
  if (report.witness) upper["witness"] = to_json(*report.witness);
  Json certs = Json::array();
  for (const auto& c : report.certificates) certs.push_back(to_json(c));
  return {{"type", to_string(report.classification.kind)},
          {"n", report.n},
          {"essential_variables", report.classification.essential_variables},
          {"quadric_rank", report.classification.quadric_rank},
          {"lower", {{"value", report.lower.value}, {"kind", to_string(report.lower.kind)}}},
          {"upper", upper},
          {"catalecticant_bound", report.catalecticant_bound},
          {"generic_rank", report.generic_rank},
          {"certificates", certs},
          {"notes", report.notes}};
}

}  // namespace waring
