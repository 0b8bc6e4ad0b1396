#include "waring/ideal.hpp"

#include "waring/parse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace waring {

DiffOperator DiffOperator::partial(std::size_t nvars, std::size_t index) {
  return DiffOperator(Polynomial::variable(nvars, index));
}

DiffOperator DiffOperator::unit(std::size_t nvars) { return DiffOperator(Polynomial::constant(nvars, 1)); }

DiffOperator DiffOperator::directional(const LinearForm& direction) { return DiffOperator(direction.to_polynomial()); }

std::string DiffOperator::to_string() const { return poly_.to_string(dual_variables(poly_.nvars())); }

Variables dual_variables(std::size_t nvars) { return Variables::indexed("d", nvars); }

DiffOperator parse_operator(std::string_view text, std::size_t nvars) {
  return DiffOperator(parse_polynomial(text, dual_variables(nvars)));
}

HomogeneousIdeal::HomogeneousIdeal(std::size_t nvars, std::vector<DiffOperator> generators,
                                   std::optional<unsigned> truncation_bound)
    : nvars_(nvars), bound_(truncation_bound) {
  for (auto& g : generators) {
    if (g.nvars() != nvars) throw AmbientMismatch("generator does not belong to the ideal's ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous: " + g.to_string());
    generators_.push_back(std::move(g));
  }
}

HomogeneousIdeal HomogeneousIdeal::principal(const DiffOperator& g) { return HomogeneousIdeal(g.nvars(), {g}); }

HomogeneousIdeal HomogeneousIdeal::maximal(std::size_t nvars) {
  std::vector<DiffOperator> gens;
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(DiffOperator::partial(nvars, i));
  return HomogeneousIdeal(nvars, std::move(gens), 1);
}

std::string HomogeneousIdeal::to_string() const {
  std::string out = "<";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k) out += ", ";
    out += generators_[k].to_string();
  }
  return out + ">";
}

std::vector<long long> HilbertFunction::delta() const {
  std::vector<long long> d(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    d[i] = static_cast<long long>(values[i]) - (i ? static_cast<long long>(values[i - 1]) : 0LL);
  return d;
}

std::size_t HilbertFunction::sum() const {
  std::size_t s = 0;
  for (auto v : values) s += v;
  return s;
}

std::size_t HilbertFunction::max() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

bool HilbertFunction::is_symmetric() const {
  // Ignore trailing zeros so the socle degree decides the centre.
  std::size_t n = values.size();
  while (n > 0 && values[n - 1] == 0) --n;
  for (std::size_t i = 0; i < n; ++i)
    if (values[i] != values[n - 1 - i]) return false;
  return true;
}

std::string HilbertFunction::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << ')';
  return out.str();
}

Subspace multiply_by_linear(const Subspace& lower, std::size_t nvars, unsigned lower_degree) {
  const auto src = monomial_basis(nvars, lower_degree);
  const auto dst = monomial_basis(nvars, lower_degree + 1);
  if (lower.is_full() && nvars > 0) return Subspace::full(dst->size());
  // shift[j][k]: index of (monomial k) * x_j in the next degree.
  std::vector<std::vector<std::size_t>> shift(nvars, std::vector<std::size_t>(src->size()));
  for (std::size_t j = 0; j < nvars; ++j)
    for (std::size_t k = 0; k < src->size(); ++k) {
      Monomial m = (*src)[k];
      m[j] += 1;
      shift[j][k] = dst->index_of(m);
    }
  Subspace out(dst->size());
  for (const auto& v : lower.basis()) {
    for (std::size_t j = 0; j < nvars && !out.is_full(); ++j) {
      Vector w(dst->size());
      for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(v[k]) != 0) w[shift[j][k]] = v[k];
      out.insert(std::move(w));
    }
  }
  return out;
}

std::vector<Subspace> graded_components(const HomogeneousIdeal& ideal, unsigned max_degree) {
  const std::size_t n = ideal.nvars();
  const auto bound = ideal.truncation_bound();
  std::vector<Subspace> comps;
  comps.reserve(max_degree + 1);
  for (unsigned i = 0; i <= max_degree; ++i) {
    const auto basis = monomial_basis(n, i);
    if (bound && i >= *bound) {
      comps.push_back(Subspace::full(basis->size()));
      continue;
    }
    Subspace c = i == 0 ? Subspace(basis->size()) : multiply_by_linear(comps.back(), n, i - 1);
    for (const auto& g : ideal.generators()) {
      if (c.is_full()) break;
      if (g.degree() == i) c.insert(to_coordinates(g.polynomial(), *basis));
    }
    comps.push_back(std::move(c));
  }
  return comps;
}

Subspace graded_basis(const HomogeneousIdeal& ideal, unsigned degree) {
  auto comps = graded_components(ideal, degree);
  return std::move(comps.back());
}

HilbertFunction hilbert_function(const HomogeneousIdeal& ideal) {
  const auto bound = ideal.truncation_bound();
  if (!bound) throw std::invalid_argument("Hilbert function needs an ideal with a truncation bound");
  HilbertFunction hf;
  if (*bound == 0) return hf;
  const auto comps = graded_components(ideal, *bound - 1);
  for (unsigned i = 0; i < *bound; ++i) hf.values.push_back(comps[i].ambient_dim() - comps[i].dim());
  return hf;
}

HomogeneousIdeal ideal_sum(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
  if (a.nvars() != b.nvars()) throw AmbientMismatch("ideal sum of ideals in different rings");
  std::vector<DiffOperator> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  std::optional<unsigned> bound = a.truncation_bound();
  if (b.truncation_bound()) bound = bound ? std::min(*bound, *b.truncation_bound()) : b.truncation_bound();
  return HomogeneousIdeal(a.nvars(), std::move(gens), bound);
}

std::vector<Subspace> colon_components(const HomogeneousIdeal& ideal, const DiffOperator& g, unsigned max_degree) {
  if (g.nvars() != ideal.nvars()) throw AmbientMismatch("colon operator is in a different ring");
  if (g.is_zero()) throw std::invalid_argument("colon by the zero operator");
  if (!g.is_homogeneous()) throw std::invalid_argument("colon operator must be homogeneous");
  const std::size_t n = ideal.nvars();
  const unsigned e = g.degree();
  const auto bound = ideal.truncation_bound();
  const auto ideal_comps = graded_components(ideal, max_degree + e);
  std::vector<Subspace> out;
  out.reserve(max_degree + 1);
  for (unsigned i = 0; i <= max_degree; ++i) {
    const auto src = monomial_basis(n, i);
    const Subspace& target = ideal_comps[i + e];
    if ((bound && i + e >= *bound) || target.is_full()) {
      out.push_back(Subspace::full(src->size()));
      continue;
    }
    const auto dst = monomial_basis(n, i + e);
    Matrix images(dst->size(), src->size());
    for (std::size_t k = 0; k < src->size(); ++k) {
      const Vector r = target.reduce(to_coordinates(g.polynomial() * Polynomial::monomial((*src)[k]), *dst));
      for (std::size_t row = 0; row < r.size(); ++row) images(row, k) = r[row];
    }
    out.push_back(Subspace::span(src->size(), images.kernel()));
  }
  return out;
}

HomogeneousIdeal ideal_from_components(std::size_t nvars, const std::vector<Subspace>& components, unsigned bound) {
  std::vector<DiffOperator> gens;
  for (unsigned i = 0; i < components.size() && i <= bound; ++i) {
    const auto basis = monomial_basis(nvars, i);
    const Subspace lower = i == 0 ? Subspace(basis->size()) : multiply_by_linear(components[i - 1], nvars, i - 1);
    const Subspace current = i >= bound ? Subspace::full(basis->size()) : components[i];
    if (lower.dim() == current.dim()) continue;
    Subspace fresh(basis->size());
    for (const auto& v : current.basis()) fresh.insert(lower.reduce(v));
    for (const auto& v : fresh.basis()) gens.emplace_back(from_coordinates(v, *basis));
  }
  return HomogeneousIdeal(nvars, std::move(gens), bound);
}

HomogeneousIdeal ideal_colon(const HomogeneousIdeal& ideal, const DiffOperator& g) {
  const auto bound = ideal.truncation_bound();
  if (!bound) throw std::invalid_argument("colon ideal needs an ideal with a truncation bound");
  auto comps = colon_components(ideal, g, *bound);
  return ideal_from_components(ideal.nvars(), comps, *bound);
}

bool is_nonzero_divisor(const HomogeneousIdeal& ideal, const DiffOperator& ell, unsigned up_to) {
  const auto colon = colon_components(ideal, ell, up_to);
  const auto comps = graded_components(ideal, up_to);
  for (unsigned i = 0; i <= up_to; ++i)
    if (!(colon[i] == comps[i])) return false;
  return true;
}

bool same_ideal_up_to(const HomogeneousIdeal& a, const HomogeneousIdeal& b, unsigned max_degree) {
  if (a.nvars() != b.nvars()) return false;
  const auto ca = graded_components(a, max_degree);
  const auto cb = graded_components(b, max_degree);
  for (unsigned i = 0; i <= max_degree; ++i)
    if (!(ca[i] == cb[i])) return false;
  return true;
}

}  // namespace waring
