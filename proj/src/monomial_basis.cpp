#include "waring/monomial_basis.hpp"

#include <mutex>
#include <stdexcept>

namespace waring {

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<unsigned>& current, std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
  if (nvars == 0) {
    if (degree == 0) monomials_.emplace_back(std::vector<unsigned>{});
  } else {
    std::vector<unsigned> current(nvars, 0);
    enumerate(0, degree, current, monomials_);
  }
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k].exps(), k);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m.exps());
  if (it == index_.end()) throw std::out_of_range("monomial is not in this basis");
  return it->second;
}

std::shared_ptr<const MonomialBasis> monomial_basis(std::size_t nvars, unsigned degree) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(nvars, degree);
  return slot;
}

std::size_t monomial_count(std::size_t nvars, unsigned degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // binom(nvars - 1 + degree, degree)
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), nvars - 1 + degree, degree);
  return b.get_ui();
}

Vector to_coordinates(const Polynomial& p, const MonomialBasis& basis) {
  if (p.nvars() != basis.nvars()) throw AmbientMismatch("polynomial does not match the basis ring");
  Vector v(basis.size());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != basis.degree())
      throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(basis.degree()));
    v[basis.index_of(m)] = c;
  }
  return v;
}

Polynomial from_coordinates(std::span<const Rational> v, const MonomialBasis& basis) {
  if (v.size() != basis.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  Polynomial p(basis.nvars());
  for (std::size_t k = 0; k < v.size(); ++k) p.add_term(basis[k], v[k]);
  return p;
}

}  // namespace waring
