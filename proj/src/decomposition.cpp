#include "waring/decomposition.hpp"

#include <stdexcept>

namespace waring {

WaringDecomposition::WaringDecomposition(unsigned degree, std::size_t nvars, std::vector<WaringTerm> terms)
    : degree_(degree), nvars_(nvars) {
  for (auto& t : terms) add(t.coefficient, t.form);
}

void WaringDecomposition::add(const Rational& coefficient, const LinearForm& form) {
  if (form.nvars() != nvars_) throw AmbientMismatch("decomposition term has the wrong number of variables");
  terms_.push_back({coefficient, form});
}

void WaringDecomposition::append(const WaringDecomposition& other) {
  if (other.degree_ != degree_ || other.nvars_ != nvars_)
    throw AmbientMismatch("cannot append decompositions of different shape");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
}

Polynomial WaringDecomposition::expand() const {
  Polynomial sum(nvars_);
  for (const auto& t : terms_) sum += t.coefficient * t.form.to_polynomial().pow(degree_);
  return sum;
}

WaringDecomposition WaringDecomposition::merged() const {
  std::vector<WaringTerm> out;
  for (const auto& t : terms_) {
    if (sgn(t.coefficient) == 0 || t.form.is_zero()) continue;
    bool absorbed = false;
    for (auto& kept : out) {
      Rational r;
      if (kept.form.proportional_to(t.form, &r)) {
        Rational scale = 1;
        for (unsigned k = 0; k < degree_; ++k) scale *= r;
        kept.coefficient += t.coefficient * scale;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) out.push_back(t);
  }
  std::erase_if(out, [](const WaringTerm& t) { return sgn(t.coefficient) == 0; });
  return WaringDecomposition(degree_, nvars_, std::move(out));
}

bool WaringDecomposition::pairwise_independent() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].form.is_zero()) return false;
    for (std::size_t j = i + 1; j < terms_.size(); ++j)
      if (terms_[i].form.proportional_to(terms_[j].form)) return false;
  }
  return true;
}

std::string WaringDecomposition::identity_string(const Variables& vars, std::string_view lhs) const {
  std::vector<Rational> coeffs;
  for (const auto& t : terms_) coeffs.push_back(t.coefficient);
  const Integer den = common_denominator(coeffs);
  std::string out = den == 1 ? std::string(lhs) : den.get_str() + "*" + std::string(lhs);
  out += " =";
  if (terms_.empty()) return out + " 0";
  bool first = true;
  for (const auto& t : terms_) {
    const Rational scaled = t.coefficient * den;
    const bool negative = sgn(scaled) < 0;
    out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
    first = false;
    const Rational mag = abs(scaled);
    if (mag != 1) out += to_string(mag) + "*";
    out += "(" + t.form.to_string(vars) + ")^" + std::to_string(degree_);
  }
  return out;
}

std::string WaringDecomposition::identity_string() const {
  return identity_string(Variables::indexed("x", nvars_));
}

WaringDecomposition substitute(const WaringDecomposition& dec, const LinearChange& change) {
  WaringDecomposition out(dec.degree(), dec.nvars());
  for (const auto& t : dec.terms()) out.add(t.coefficient, substitute(t.form, change));
  return out;
}

VerificationResult verify_decomposition(const Polynomial& form, const WaringDecomposition& dec) {
  if (form.nvars() != dec.nvars()) throw AmbientMismatch("decomposition and form live in different rings");
  VerificationResult r;
  r.residual = form - dec.expand();
  r.expansion_matches = r.residual.is_zero();
  r.pairwise_independent = dec.pairwise_independent();
  return r;
}

}  // namespace waring
