#include "waring/certificates.hpp"

#include "waring/apolarity.hpp"
#include "waring/binary.hpp"
#include "waring/parse.hpp"
#include "waring/type_c.hpp"

#include <algorithm>
#include <functional>

namespace waring {

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Catalecticant: return "catalecticant";
    case BoundKind::Table: return "table";
    case BoundKind::Avoidance: return "avoidance";
    case BoundKind::ColonRefinement: return "colon-refinement";
    case BoundKind::Sylvester: return "sylvester";
    case BoundKind::Witness: return "witness";
  }
  return "?";
}

std::size_t ah_generic_rank(std::size_t n, unsigned d) {
  if (n < 1 || d < 2) throw std::invalid_argument("generic rank needs n >= 1 and d >= 2");
  if (d == 2) return n + 1;
  if (d == 3 && n == 4) return 8;
  if (d == 4 && n >= 2 && n <= 4) return n == 2 ? 6 : (n == 3 ? 10 : 15);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n + d, d);
  Integer q;
  mpz_cdiv_q_ui(q.get_mpz_t(), b.get_mpz_t(), n + 1);
  return q.get_ui();
}

std::optional<TableBounds> table_bounds(CubicKind kind, std::size_t n) {
  if (n < 2) throw std::invalid_argument("the classification table starts at n = 2");
  switch (kind) {
    case CubicKind::TypeA:
    case CubicKind::TypeB: return TableBounds{2 * n, 2 * n};
    case CubicKind::TypeC: return TableBounds{2 * n, 2 * n + 1};
    case CubicKind::Cone: return std::nullopt;
    case CubicKind::DegenerateProduct: break;
  }
  throw UnsupportedCubicType("L dividing Q has no entry in the classification table");
}

std::size_t catalecticant_lower_bound(const Polynomial& form) { return hilbert_function(apolar_ideal(form)).max(); }

std::size_t AvoidanceCertificate::bound() const {
  if (refined_sum && removed_points) return *refined_sum + *removed_points;
  return hf_sum;
}

AvoidanceCertificate avoidance_lower_bound(const Polynomial& form, const DiffOperator& ell) {
  if (ell.nvars() != form.nvars()) throw AmbientMismatch("hyperplane and form live in different rings");
  if (ell.is_zero()) throw std::invalid_argument("the hyperplane operator is zero");
  if (!ell.is_homogeneous() || ell.degree() != 1) throw std::invalid_argument("the hyperplane operator must be linear");
  if (apolar_apply(ell, form).is_zero())
    throw std::invalid_argument("ell annihilates F, so every decomposition lies on {ell = 0}");
  AvoidanceCertificate cert;
  cert.hyperplane = ell;
  cert.hilbert = hilbert_function(ideal_sum(apolar_ideal(form), HomogeneousIdeal::principal(ell)));
  cert.hf_sum = cert.hilbert.sum();
  cert.condition = "holds for decompositions with no point on {" + ell.to_string() + " = 0}";
  return cert;
}

AvoidanceCertificate colon_refinement(const Polynomial& form, const DiffOperator& ell, const DiffOperator& g) {
  if (g.is_zero()) throw std::invalid_argument("the colon operator is zero");
  AvoidanceCertificate cert = avoidance_lower_bound(form, ell);
  const HomogeneousIdeal colon = ideal_colon(apolar_ideal(form), g);
  cert.colon = g;
  cert.refined_hilbert = hilbert_function(ideal_sum(colon, HomogeneousIdeal::principal(ell)));
  cert.refined_sum = cert.refined_hilbert->sum();
  cert.condition = "holds for the points of a decomposition off {" + g.to_string() + " = 0}, when none of them lies on {" +
                   ell.to_string() + " = 0}";
  return cert;
}

Variables example_form_variables() { return Variables({"y1", "y2", "y3"}); }
Variables example_operator_variables() { return Variables({"d1", "d2", "d3"}); }

Polynomial example_type_c_form() { return parse_polynomial("y1*(y1*y3 + y2^2)", example_form_variables()); }

bool CaseCertificate::all_passed() const {
  return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
}

std::string CaseCertificate::conclusion() const {
  return all_passed() ? "rank >= 5" : "inconclusive: at least one claim failed";
}

namespace {

DiffOperator op3(std::string_view text) { return DiffOperator(parse_polynomial(text, example_operator_variables())); }

// The restriction of an operator to the hyperplane {d3 = 0}.
Polynomial restrict_to_d3_zero(const DiffOperator& g) {
  const std::vector<LinearForm> images{LinearForm::variable(3, 0), LinearForm::variable(3, 1), LinearForm(Vector(3))};
  return substitute_linear(g.polynomial(), images);
}

std::string ideal_text(const HomogeneousIdeal& ideal) {
  std::string out = "<";
  for (std::size_t k = 0; k < ideal.generators().size(); ++k)
    out += (k ? ", " : "") + ideal.generators()[k].polynomial().to_string(example_operator_variables());
  return out + ">";
}

// det of a 3x3 matrix of polynomials.
Polynomial det3(const std::vector<std::vector<Polynomial>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

CaseCertificate segre_case_certificate(const Polynomial& form) {
  CaseCertificate cert;
  if (form.nvars() != 3) throw AmbientMismatch("the scripted case lives in three variables");
  const HomogeneousIdeal perp = apolar_ideal(form);
  const DiffOperator d2 = op3("d2");
  const DiffOperator d3 = op3("d3");
  auto claim = [&](std::string id, std::string statement, const std::function<std::pair<bool, std::string>()>& check) {
    ClaimResult r{std::move(id), std::move(statement), false, {}};
    try {
      std::tie(r.passed, r.detail) = check();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    cert.claims.push_back(std::move(r));
  };

  claim("i", "F^perp = <d1*d3 - d2^2, d2*d3, d3^2, d1^3, d1^2*d2, d2^3>", [&] {
    const HomogeneousIdeal stated(3, {op3("d1*d3 - d2^2"), op3("d2*d3"), op3("d3^2"), op3("d1^3"), op3("d1^2*d2"), op3("d2^3")});
    return std::pair{same_ideal_up_to(perp, stated, form.degree() + 1), "computed " + ideal_text(perp)};
  });

  claim("ii", "HF(T/(F^perp + <d3>)) = (1, 2, 2, 0) with sum 5", [&] {
    const HilbertFunction hf = hilbert_function(ideal_sum(perp, HomogeneousIdeal::principal(d3)));
    return std::pair{hf.values == std::vector<std::size_t>{1, 2, 2, 0} && hf.sum() == 5,
                     "HF = " + hf.to_string() + ", sum " + std::to_string(hf.sum())};
  });

  claim("iii", "F^perp_2 = span{d1*d3 - d2^2, d2*d3, d3^2}", [&] {
    const auto basis = monomial_basis(3, 2);
    const Subspace stated = Subspace::span(
        basis->size(), {to_coordinates(op3("d1*d3 - d2^2").polynomial(), *basis), to_coordinates(op3("d2*d3").polynomial(), *basis),
                        to_coordinates(op3("d3^2").polynomial(), *basis)});
    const Subspace computed = graded_basis(perp, 2);
    return std::pair{computed == stated, "dim F^perp_2 = " + std::to_string(computed.dim())};
  });

  claim("iv", "the pencil a*d3^2 + b*d2*d3 has base locus {d3 = 0}", [&] {
    // Both members vanish on {d3 = 0}, and d3^2 lies in the pencil, so every
    // common zero has d3 = 0.
    const bool vanish = restrict_to_d3_zero(op3("d3^2")).is_zero() && restrict_to_d3_zero(op3("d2*d3")).is_zero();
    const auto basis = monomial_basis(3, 2);
    const Subspace pencil = Subspace::span(basis->size(), {to_coordinates(op3("d3^2").polynomial(), *basis),
                                                           to_coordinates(op3("d2*d3").polynomial(), *basis)});
    const bool in_perp = graded_basis(perp, 2).contains(pencil);
    return std::pair{vanish && in_perp, std::string(in_perp ? "pencil lies in F^perp_2" : "pencil not contained in F^perp_2")};
  });

  claim("v", "each conic d1*d3 - d2^2 + a*d3^2 + b*d2*d3 is smooth and meets {d3 = 0} only at (1:0:0)", [&] {
    const std::vector<DiffOperator> parts{op3("d1*d3 - d2^2"), op3("d3^2"), op3("d2*d3")};
    // M(a, b) = M0 + a M1 + b M2 over Q[a, b].
    std::vector<Matrix> mats;
    for (const auto& p : parts) mats.push_back(quadric_matrix(p.polynomial()));
    std::vector<std::vector<Polynomial>> m(3, std::vector<Polynomial>(3, Polynomial(2)));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m[i][j] = Polynomial::constant(2, mats[0](i, j)) + mats[1](i, j) * Polynomial::variable(2, 0) +
                  mats[2](i, j) * Polynomial::variable(2, 1);
    const Polynomial det = det3(m);
    const bool smooth = det.is_homogeneous() && det.degree() == 0 && !det.is_zero();
    const Polynomial r0 = restrict_to_d3_zero(parts[0]);
    const bool rest_vanish = restrict_to_d3_zero(parts[1]).is_zero() && restrict_to_d3_zero(parts[2]).is_zero();
    // On the line {d3 = 0} the conic is c*d2^2, zero only where d2 = 0.
    const Polynomial d2sq = op3("d2^2").polynomial();
    const bool single_point = r0.size() == 1 && r0.terms().begin()->first == d2sq.terms().begin()->first;
    return std::pair{smooth && rest_vanish && single_point,
                     "det M(a,b) = " + det.to_string(Variables({"a", "b"})) + ", restriction " +
                         r0.to_string(example_operator_variables())};
  });

  claim("vi", "(F^perp : d2) + <d3> = <d3, d1^2, d2^2> with HF sum 4", [&] {
    const HomogeneousIdeal refined = ideal_sum(ideal_colon(perp, d2), HomogeneousIdeal::principal(d3));
    const HomogeneousIdeal stated(3, {op3("d3"), op3("d1^2"), op3("d2^2")});
    const HilbertFunction hf = hilbert_function(refined);
    const bool same = same_ideal_up_to(refined, stated, form.degree() + 1);
    return std::pair{same && hf.sum() == 4, "HF = " + hf.to_string() + ", sum " + std::to_string(hf.sum())};
  });

  claim("vii", "d3 F != 0", [&] {
    const Polynomial image = apolar_apply(d3, form);
    return std::pair{!image.is_zero(), "d3 F = " + image.to_string(example_form_variables())};
  });

  try {
    AvoidanceCertificate ref = colon_refinement(form, d3, d2);
    if (cert.all_passed()) ref.removed_points = 1;  // the point (1:0:0) lies on {d2 = 0}
    ref.condition = "holds for the points of a decomposition off {d2 = 0}, when none of them lies on {d3 = 0}";
    cert.refinement = std::move(ref);
  } catch (const std::exception&) {
    // d3 F = 0 is already reported by claim (vii).
  }
  return cert;
}

Polynomial peeled_type_c_form(std::size_t n) {
  if (n < 3) throw std::invalid_argument("the peeled form needs n >= 3");
  return substitute(type_c_normal_form(n), type_c_peeling_coordinates(n));
}

std::vector<DiffOperator> peeled_type_c_generators(std::size_t n) {
  if (n < 3) throw std::invalid_argument("the peeled form needs n >= 3");
  const std::size_t nv = n + 1;
  auto d = [nv](std::size_t i) { return DiffOperator::partial(nv, i); };
  auto poly = [](const DiffOperator& op) { return op.polynomial(); };
  std::vector<DiffOperator> gens;
  for (std::size_t i = 0; i <= n; ++i)
    if (i != 1) gens.push_back(d(i) * d(3));
  for (std::size_t i = 0; i <= n; ++i)
    if (i != 1 && i != 2 && i != 3) gens.emplace_back(poly(d(1) * d(3)) - poly(d(i) * d(i)));
  gens.emplace_back(poly(d(1) * d(3)) + poly(d(2) * d(2)));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (i != 1 && i != 3 && j != 1 && j != 3) gens.push_back(d(i) * d(j));
  for (std::size_t i = 0; i <= n; ++i)
    if (i != 3) gens.push_back(d(i) * d(i) * d(i));
  for (std::size_t i = 0; i <= n; ++i)
    if (i != 3) gens.push_back(d(1) * d(1) * d(i));
  return gens;
}

namespace {

// Integer vector with coprime entries and a positive first non-zero entry.
Vector primitive(Vector v) {
  const Integer den = common_denominator(v);
  Integer g = 0;
  for (auto& c : v) {
    c *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (g == 0) return v;
  const auto first = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
  if (*first < 0) g = -g;
  for (auto& c : v) c /= g;
  return v;
}

// Direction vectors and decomposition forms in reduced coordinates, mapped
// back to the original ones through x = A y.
LinearForm lift_form(const LinearForm& reduced_form, const EssentialReduction& red) {
  LinearForm out(Vector(red.to_reduced.size()));
  for (std::size_t i = 0; i < reduced_form.nvars(); ++i) out += reduced_form[i] * red.coordinates[i];
  return out;
}

DiffOperator lift_direction(const DiffOperator& op, const EssentialReduction& red) {
  const LinearForm w = LinearForm::from_polynomial(op.polynomial());
  Vector padded(red.to_reduced.size());
  for (std::size_t i = 0; i < w.nvars(); ++i) padded[i] = w[i];
  return DiffOperator::directional(LinearForm(primitive(red.to_reduced.matrix() * std::span<const Rational>(padded))));
}

WaringDecomposition lift(const WaringDecomposition& dec, const EssentialReduction& red) {
  WaringDecomposition out(dec.degree(), red.to_reduced.size());
  for (const auto& t : dec.terms()) out.add(t.coefficient, lift_form(t.form, red));
  return out;
}

void check_consistent(const RankReport& r, const Polynomial& f) {
  if (r.lower.value > r.upper.value) throw std::logic_error("rank report has lower bound above upper bound");
  if (r.witness && !verify_decomposition(f, *r.witness).ok()) throw std::logic_error("rank report witness does not verify");
}

RankReport reduced_report(const ReducibleCubic& cubic, RankReport report) {
  const Polynomial f = cubic.product();
  const EssentialReduction red = reduce_to_essential(f);
  const std::size_t k = red.coordinates.size();
  report.notes.push_back("depends on " + std::to_string(k) + " essential variables; analysed there");
  if (k == 1) {
    const Rational c = red.reduced.coefficient(Monomial{3});
    WaringDecomposition dec(3, 1);
    dec.add(c, LinearForm::variable(1, 0));
    report.witness = lift(dec, red);
    report.lower = {1, BoundKind::Catalecticant};
    report.upper = {1, BoundKind::Witness};
  } else if (k == 2) {
    const BinaryRank br = decompose_binary(red.reduced);
    report.lower = {br.rank, BoundKind::Sylvester};
    report.upper = {br.rank, BoundKind::Sylvester};
    if (br.decomposition) {
      report.witness = lift(*br.decomposition, red);
      report.upper.kind = BoundKind::Witness;
    }
  } else {
    const LinearForm l = substitute(cubic.linear(), red.to_reduced);
    const Polynomial q = substitute(cubic.quadric(), red.to_reduced);
    const ReducibleCubic sub(LinearForm(Vector(l.coefficients().begin(), l.coefficients().begin() + static_cast<std::ptrdiff_t>(k))),
                             q.with_nvars(k));
    const RankReport inner = rank_report(sub);
    report.lower = inner.lower;
    report.upper = inner.upper;
    if (inner.witness) report.witness = lift(*inner.witness, red);
    for (const auto& c : inner.certificates) {
      AvoidanceCertificate lifted = avoidance_lower_bound(f, lift_direction(c.hyperplane, red));
      report.certificates.push_back(std::move(lifted));
    }
    report.notes.push_back("reduced cubic is of type " + to_string(inner.classification.kind) + " with n = " +
                           std::to_string(k - 1));
    for (const auto& note : inner.notes) report.notes.push_back(note);
  }
  report.catalecticant_bound = catalecticant_lower_bound(f);
  check_consistent(report, f);
  return report;
}

}  // namespace

RankReport rank_report(const ReducibleCubic& cubic) {
  const Polynomial f = cubic.product();
  RankReport report;
  report.classification = classify(cubic);
  report.n = cubic.projective_dimension();
  report.generic_rank = report.n >= 1 ? ah_generic_rank(report.n, 3) : 1;
  const CubicKind kind = report.classification.kind;

  if (kind == CubicKind::DegenerateProduct)
    report.notes.push_back("L divides Q: no entry in the classification table");
  if (kind == CubicKind::Cone || kind == CubicKind::DegenerateProduct || cubic.nvars() <= 2)
    return reduced_report(cubic, std::move(report));

  report.catalecticant_bound = catalecticant_lower_bound(f);
  const TableBounds table = *table_bounds(kind, report.n);
  report.lower = {table.lower, BoundKind::Table};
  if (report.catalecticant_bound > report.lower.value) report.lower = {report.catalecticant_bound, BoundKind::Catalecticant};
  report.upper = {table.upper, BoundKind::Table};

  if (kind == CubicKind::TypeB && report.n == 2) {
    if (const auto factors = factor_quadric(cubic.quadric())) {
      const WaringDecomposition dec = decompose_linear_product(cubic.linear(), factors->first, factors->second);
      if (dec.pairwise_independent() && dec.size() <= report.upper.value) {
        report.witness = dec;
        report.upper = {dec.size(), BoundKind::Witness};
      }
    }
  }

  if (kind == CubicKind::TypeC) {
    const WaringDecomposition dec = decompose_type_c(cubic, std::nullopt, TypeCOptions{.allow_weighted = true});
    report.witness = dec;
    report.upper = {dec.size(), BoundKind::Witness};
    // Derivative along the tangency point adj(M) l of L with Q.
    const Matrix m = quadric_matrix(cubic.quadric());
    const Vector pole = *m.solve(cubic.linear().coefficients());
    report.certificates.push_back(avoidance_lower_bound(f, DiffOperator::directional(LinearForm(primitive(pole)))));
    if (report.n == 2) {
      const CaseCertificate seg = segre_case_certificate();
      if (seg.all_passed()) {
        report.lower = {5, BoundKind::ColonRefinement};
        report.notes.push_back(
            "n = 2: the colon-refinement case analysis on y1(y1y3 + y2^2) gives rank >= 5 for every type-C cubic");
      }
    } else {
      report.notes.push_back("type C: rank 2n + 1 = " + std::to_string(2 * report.n + 1) +
                             " is conjectured (open); not used as a bound");
    }
  }
  check_consistent(report, f);
  return report;
}

}  // namespace waring
