#include "waring/binary.hpp"

#include "waring/apolarity.hpp"
#include "waring/monomial_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

namespace {

// Dense univariate polynomial, c[k] is the coefficient of t^k; no trailing zeros.
using Univariate = std::vector<Rational>;

void trim(Univariate& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Univariate derivative(const Univariate& p) {
  Univariate d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

Univariate remainder(Univariate a, const Univariate& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Rational evaluate(const Univariate& p, const Rational& t) {
  Rational s = 0;
  for (std::size_t k = p.size(); k-- > 0;) s = s * t + p[k];
  return s;
}

// g(t, 1) for a binary form g(u, v).
Univariate dehomogenize(const Polynomial& g) {
  Univariate p(g.degree() + 1);
  for (const auto& [m, c] : g.terms()) p[m[0]] = c;
  trim(p);
  return p;
}

constexpr unsigned long kDivisorLimit = 1000000000000UL;

std::optional<std::vector<Integer>> divisors(Integer n) {
  n = abs(n);
  if (n == 0 || n > kDivisorLimit) return std::nullopt;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Distinct rational roots of p, provided there are deg p of them.
std::optional<std::vector<Rational>> all_rational_roots(Univariate p) {
  trim(p);
  std::vector<Rational> roots;
  // Strip t = 0.
  std::size_t zeros = 0;
  while (zeros < p.size() && sgn(p[zeros]) == 0) ++zeros;
  if (zeros > 1) return std::nullopt;
  if (zeros == 1) roots.push_back(0);
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
  if (p.size() <= 1) return roots;
  const Integer den = common_denominator(p);
  std::vector<Integer> ints;
  for (const auto& c : p) ints.push_back(Integer(c * den));
  const auto num_divs = divisors(ints.front());
  const auto lead_divs = divisors(ints.back());
  if (!num_divs || !lead_divs) return std::nullopt;
  for (const auto& a : *num_divs)
    for (const auto& b : *lead_divs)
      for (int sign : {1, -1}) {
        Rational t(sign * a, b);
        t.canonicalize();
        if (std::find(roots.begin(), roots.end(), t) != roots.end()) continue;
        if (sgn(evaluate(p, t)) == 0) roots.push_back(t);
      }
  if (roots.size() != p.size() - 1 + zeros) return std::nullopt;
  return roots;
}

void require_binary(const Polynomial& form) {
  if (form.nvars() != 2) throw std::invalid_argument("expected a form in two variables");
  if (form.is_zero() || !form.is_homogeneous() || form.degree() == 0)
    throw std::invalid_argument("expected a non-zero binary form of positive degree");
}

// Small-height combinations c_1 v_1 + ... + c_k v_k, c_i in [-2, 2], in a
// fixed order, giving up after `limit` candidates.
template <typename Visit>
void for_each_combination(const std::vector<Vector>& basis, std::size_t limit, Visit visit) {
  const std::size_t k = basis.size();
  if (k == 0) return;
  const std::size_t dim = basis.front().size();
  std::vector<int> coeffs(k, 0);
  std::size_t tried = 0;
  // Single basis vectors first, then everything else by odometer.
  for (std::size_t i = 0; i < k; ++i)
    if (visit(basis[i]) || ++tried >= limit) return;
  const int values[] = {0, 1, -1, 2, -2};
  std::vector<int> idx(k, 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == 5) idx[pos++] = 0;
    if (pos == k) return;
    Vector v(dim);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (values[idx[i]] == 0) continue;
      ++nonzero;
      for (std::size_t c = 0; c < dim; ++c) v[c] += values[idx[i]] * basis[i][c];
    }
    if (nonzero < 2) continue;
    if (visit(v) || ++tried >= limit) return;
  }
}

}  // namespace

bool is_squarefree_binary(const Polynomial& form) {
  require_binary(form);
  const unsigned r = form.degree();
  const Univariate p = dehomogenize(form);
  const std::size_t deg_p = p.size() - 1;
  if (deg_p + 1 < r) return false;  // v^2 divides
  if (deg_p == 0) return true;
  return gcd(p, derivative(p)).size() == 1;
}

std::optional<std::vector<std::pair<Rational, Rational>>> rational_roots_binary(const Polynomial& form) {
  require_binary(form);
  if (!is_squarefree_binary(form)) return std::nullopt;
  const unsigned r = form.degree();
  const Univariate p = dehomogenize(form);
  const auto roots = all_rational_roots(p);
  if (!roots) return std::nullopt;
  std::vector<std::pair<Rational, Rational>> points;
  for (const auto& t : *roots) points.push_back({t, Rational(1)});
  if (p.size() - 1 < r) points.push_back({Rational(1), Rational(0)});  // v divides
  return points;
}

BinaryRank decompose_binary(const Polynomial& form) {
  require_binary(form);
  const unsigned d = form.degree();
  const HomogeneousIdeal perp = apolar_ideal(form);
  auto gens = perp.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const DiffOperator& a, const DiffOperator& b) { return a.degree() < b.degree(); });
  if (gens.size() != 2 || gens[0].degree() + gens[1].degree() != d + 2)
    throw std::logic_error("binary apolar ideal is not a complete intersection of degrees summing to d + 2");

  BinaryRank out;
  out.low_generator = gens[0];
  out.high_generator = gens[1];
  out.low_squarefree = is_squarefree_binary(gens[0].polynomial());
  // Equal degrees: the pencil has squarefree members, so the rank is that degree.
  out.rank = (out.low_squarefree || gens[0].degree() == gens[1].degree()) ? gens[0].degree() : gens[1].degree();

  const unsigned s = static_cast<unsigned>(out.rank);
  const auto basis = monomial_basis(2, s);
  std::vector<Vector> candidates;
  if (out.low_squarefree && s == gens[0].degree()) candidates.push_back(to_coordinates(gens[0].polynomial(), *basis));
  const Subspace component = graded_basis(perp, s);
  for (const auto& v : component.basis()) candidates.push_back(v);

  for_each_combination(candidates, 4000, [&](const Vector& v) {
    const Polynomial g = from_coordinates(v, *basis);
    if (g.is_zero() || !is_squarefree_binary(g)) return false;
    if (!out.certificate) out.certificate = DiffOperator(g);
    const auto points = rational_roots_binary(g);
    if (!points) return false;
    // Root (a : b) of g(d0, d1) <-> linear factor (b d0 - a d1), which
    // annihilates (a x0 + b x1)^d.
    std::vector<LinearForm> forms;
    for (const auto& [a, b] : *points) forms.push_back(LinearForm({a, b}));
    const auto target = monomial_basis(2, d);
    Matrix powers(target->size(), forms.size());
    for (std::size_t j = 0; j < forms.size(); ++j) {
      const Vector c = to_coordinates(forms[j].to_polynomial().pow(d), *target);
      for (std::size_t i = 0; i < c.size(); ++i) powers(i, j) = c[i];
    }
    const auto coeffs = powers.solve(to_coordinates(form, *target));
    if (!coeffs) return false;
    WaringDecomposition dec(d, 2);
    for (std::size_t j = 0; j < forms.size(); ++j) dec.add((*coeffs)[j], forms[j]);
    dec = dec.merged();
    if (dec.size() != out.rank || !verify_decomposition(form, dec).ok()) return false;
    out.certificate = DiffOperator(g);
    out.decomposition = std::move(dec);
    return true;
  });
  return out;
}

}  // namespace waring
