#include "waring/apolarity.hpp"

#include <stdexcept>

namespace waring {

namespace {

void require_form(const Polynomial& form) {
  if (form.is_zero()) throw std::invalid_argument("the zero polynomial has no apolar ideal");
  if (!form.is_homogeneous()) throw std::invalid_argument("expected a homogeneous form");
}

// b! / (b - a)!
Integer falling_factorial(unsigned b, unsigned a) {
  Integer r = 1;
  for (unsigned k = 0; k < a; ++k) r *= b - k;
  return r;
}

}  // namespace

Polynomial apolar_apply(const DiffOperator& op, const Polynomial& form) {
  if (op.nvars() != form.nvars()) throw AmbientMismatch("operator and form live in different rings");
  Polynomial out(form.nvars());
  for (const auto& [alpha, a] : op.polynomial().terms()) {
    for (const auto& [beta, b] : form.terms()) {
      if (!alpha.divides(beta)) continue;
      Rational c = a * b;
      for (std::size_t j = 0; j < alpha.nvars(); ++j)
        if (alpha[j] != 0) c *= falling_factorial(beta[j], alpha[j]);
      out.add_term(beta / alpha, c);
    }
  }
  return out;
}

CatalecticantMatrix catalecticant(const Polynomial& form, unsigned i) {
  require_form(form);
  const unsigned d = form.degree();
  if (i > d) throw std::invalid_argument("catalecticant degree " + std::to_string(i) + " exceeds the form degree");
  CatalecticantMatrix cat;
  cat.operator_basis = monomial_basis(form.nvars(), i);
  cat.image_basis = monomial_basis(form.nvars(), d - i);
  cat.source_degree = i;
  cat.form_degree = d;
  cat.entries = Matrix(cat.image_basis->size(), cat.operator_basis->size());
  for (std::size_t col = 0; col < cat.operator_basis->size(); ++col) {
    const Polynomial image = apolar_apply(DiffOperator(Polynomial::monomial((*cat.operator_basis)[col])), form);
    for (const auto& [m, c] : image.terms()) cat.entries(cat.image_basis->index_of(m), col) = c;
  }
  return cat;
}

Subspace apolar_component(const Polynomial& form, unsigned i) {
  require_form(form);
  if (i > form.degree()) return Subspace::full(monomial_count(form.nvars(), i));
  const auto cat = catalecticant(form, i);
  return Subspace::span(cat.operator_basis->size(), cat.entries.kernel());
}

HomogeneousIdeal apolar_ideal(const Polynomial& form) {
  require_form(form);
  const unsigned d = form.degree();
  std::vector<Subspace> comps;
  for (unsigned i = 0; i <= d + 1; ++i) comps.push_back(apolar_component(form, i));
  return ideal_from_components(form.nvars(), comps, d + 1);
}

std::size_t essential_variables(const Polynomial& form) {
  require_form(form);
  if (form.degree() == 0) return 0;
  return catalecticant(form, 1).rank();
}

EssentialReduction reduce_to_essential(const Polynomial& form) {
  require_form(form);
  const std::size_t n = form.nvars();
  const unsigned d = form.degree();
  if (d == 0) throw std::invalid_argument("constants have no essential variables");
  // Columns of Cat_{d-1} are the (d-1)-th partials, i.e. linear forms.
  const auto cat = catalecticant(form, d - 1);
  Subspace partials(n);
  for (std::size_t c = 0; c < cat.entries.cols(); ++c) partials.insert(cat.entries.column(c));
  std::vector<LinearForm> coordinates;
  for (const auto& v : partials.basis()) coordinates.emplace_back(v);

  // Complete with unit vectors to an invertible C; then x = C^{-1} y.
  std::vector<Vector> rows;
  Subspace span = partials;
  for (const auto& z : coordinates) rows.push_back(z.coefficients());
  for (std::size_t j = 0; j < n && rows.size() < n; ++j) {
    Vector e(n);
    e[j] = 1;
    if (span.insert(e)) rows.push_back(e);
  }
  const LinearChange to_reduced = LinearChange(Matrix::from_rows(rows)).inverse();
  const Polynomial padded = substitute(form, to_reduced);
  return {padded.with_nvars(coordinates.size()), std::move(coordinates), to_reduced};
}

}  // namespace waring
