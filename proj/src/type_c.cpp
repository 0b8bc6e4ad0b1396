#include "waring/type_c.hpp"

#include "waring/apolarity.hpp"

#include <deque>
#include <algorithm>
#include <functional>

namespace waring {

namespace {

Rational bilinear(const Matrix& m, const Vector& x, const Vector& y) {
  const Vector my = m * std::span<const Rational>(y);
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * my[k];
  return s;
}

Vector axpy(const Vector& x, const Rational& a, const Vector& y) {
  Vector out = x;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += a * y[k];
  return out;
}

void require_type_c(const ReducibleCubic& cubic) {
  if (classify(cubic).kind != CubicKind::TypeC)
    throw std::invalid_argument("cubic is not of type C (L tangent to a smooth quadric)");
  if (cubic.projective_dimension() < 2) throw std::invalid_argument("type-C construction needs n >= 2");
}

WaringDecomposition checked(const Polynomial& target, const WaringDecomposition& dec, std::size_t max_terms) {
  const WaringDecomposition out = dec.merged();
  const auto v = verify_decomposition(target, out);
  if (!v.ok()) throw std::logic_error("constructed decomposition failed verification: residual " + v.residual.to_string());
  if (out.size() > max_terms) throw std::logic_error("constructed decomposition exceeds the term bound");
  return out;
}

}  // namespace

Polynomial type_c_normal_form(std::size_t n) { return type_c_normal_cubic(n).product(); }

ReducibleCubic type_c_normal_cubic(std::size_t n) {
  if (n < 2) throw std::invalid_argument("the type-C normal form needs n >= 2");
  const std::size_t nv = n + 1;
  auto x = [nv](std::size_t i) { return Polynomial::variable(nv, i); };
  Polynomial q = x(0) * x(1);
  if (n == 2) {
    q += x(2) * x(2);
  } else {
    q += x(2) * x(3);
    for (std::size_t k = 4; k <= n; ++k) q += x(k) * x(k);
  }
  return ReducibleCubic(LinearForm::variable(nv, 0), q);
}

Polynomial TangentCubicData::expand() const {
  Polynomial q = a.to_polynomial() * b.to_polynomial();
  for (const auto& [p, r] : pairs) q += p.to_polynomial() * r.to_polynomial();
  for (const auto& [w, c] : squares) q += w * c.to_polynomial().pow(2);
  return a.to_polynomial() * q;
}

WaringDecomposition decompose_tangent_cubic(const TangentCubicData& data) {
  const std::size_t nv = data.a.nvars();
  const LinearForm a = data.a;
  LinearForm b = data.b;
  std::deque<std::pair<LinearForm, LinearForm>> pairs(data.pairs.begin(), data.pairs.end());
  std::vector<std::pair<Rational, LinearForm>> squares = data.squares;
  WaringDecomposition dec(3, nv);

  // a (w c^2) + (w/3) a^3 as two cubes; the a^3 debt moves into b.
  auto peel = [&](const Rational& w, const LinearForm& c) {
    dec.add(w / 6, a + c);
    dec.add(w / 6, a - c);
    b -= (w / 3) * a;
  };
  auto square_times_linear = [&](const LinearForm& t) {
    if (t.is_zero()) return;
    dec.add(Rational(1, 6), a + t);
    dec.add(Rational(-1, 6), a - t);
    dec.add(Rational(-1, 3), t);
  };

  for (;;) {
    if (!pairs.empty()) {
      const auto [p, q] = pairs.front();
      pairs.pop_front();
      const LinearForm u = Rational(1, 2) * (p + q);
      const LinearForm v = Rational(1, 2) * (p - q);
      peel(1, u);
      squares.insert(squares.begin(), {Rational(-1), v});
      continue;
    }
    if (squares.empty()) {
      square_times_linear(b);
      break;
    }
    if (squares.size() == 1) {
      peel(squares[0].first, squares[0].second);
      square_times_linear(b);
      break;
    }
    bool paired = false;
    for (std::size_t i = 0; i < squares.size() && !paired; ++i) {
      for (std::size_t j = i + 1; j < squares.size() && !paired; ++j) {
        Rational r;
        if (!is_rational_square(-squares[j].first / squares[i].first, &r)) continue;
        const auto [wi, ci] = squares[i];
        const LinearForm cj = squares[j].second;
        // wi ci^2 + wj cj^2 = wi (ci - r cj)(ci + r cj)
        pairs.push_back({wi * (ci - r * cj), ci + r * cj});
        squares.erase(squares.begin() + static_cast<std::ptrdiff_t>(j));
        squares.erase(squares.begin() + static_cast<std::ptrdiff_t>(i));
        paired = true;
      }
    }
    if (paired) continue;
    peel(squares[0].first, squares[0].second);
    squares.erase(squares.begin());
  }

  const std::size_t summands = data.pairs.size() * 2 + data.squares.size();
  return checked(data.expand(), dec, summands == 0 ? 3 : 2 * summands + 3);
}

WaringDecomposition decompose_type_c_normal(std::size_t n) {
  if (n < 2) throw std::invalid_argument("the type-C normal form needs n >= 2");
  const std::size_t nv = n + 1;
  auto x = [nv](std::size_t i) { return LinearForm::variable(nv, i); };
  TangentCubicData data{x(0), x(1), {}, {}};
  if (n == 2) {
    data.squares.push_back({Rational(1), x(2)});
  } else {
    data.pairs.push_back({x(2), x(3)});
    for (std::size_t k = 4; k <= n; ++k) data.squares.push_back({Rational(1), x(k)});
  }
  return checked(type_c_normal_form(n), decompose_tangent_cubic(data), 2 * n + 1);
}

namespace {

// Orthogonal basis of span(vs) for the symmetric form m, as (value, vector).
// Vectors spanning a degenerate subspace are rejected.
std::vector<std::pair<Rational, Vector>> diagonalize(const Matrix& m, std::vector<Vector> ws) {
  std::vector<std::pair<Rational, Vector>> diag;
  while (!ws.empty()) {
    std::size_t pick = ws.size();
    for (std::size_t i = 0; i < ws.size() && pick == ws.size(); ++i)
      if (sgn(bilinear(m, ws[i], ws[i])) != 0) pick = i;
    for (std::size_t i = 0; i < ws.size() && pick == ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size() && pick == ws.size(); ++j)
        if (sgn(bilinear(m, ws[i], ws[j])) != 0) {
          ws[i] = axpy(ws[i], 1, ws[j]);
          pick = i;
        }
    if (pick == ws.size()) throw std::logic_error("degenerate subspace in diagonalization");
    const Vector w = ws[pick];
    const Rational q = bilinear(m, w, w);
    ws.erase(ws.begin() + static_cast<std::ptrdiff_t>(pick));
    for (auto& other : ws) other = axpy(other, -bilinear(m, other, w) / q, w);
    diag.push_back({q, w});
  }
  return diag;
}

// Scales each vector to a primitive integer vector and LLL-reduces the
// lattice they span (delta = 3/4, exact arithmetic), so that short
// vectors of the subspace are small combinations of the result.
std::vector<Vector> lll_reduce(std::vector<Vector> b) {
  for (auto& v : b) {
    const Integer den = common_denominator(v);
    Integer g = 0;
    for (auto& c : v) {
      c *= den;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    if (g != 0)
      for (auto& c : v) c /= g;
  }
  const std::size_t k = b.size();
  if (k < 2) return b;
  auto dot = [](const Vector& x, const Vector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<Vector> star(k);
  std::vector<Rational> norm(k);
  Matrix mu(k, k);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      star[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu(i, j) = dot(b[i], star[j]) / norm[j];
        star[i] = axpy(star[i], -mu(i, j), star[j]);
      }
      norm[i] = dot(star[i], star[i]);
    }
  };
  gram_schmidt();
  std::size_t i = 1;
  const Rational delta(3, 4);
  while (i < k) {
    for (std::size_t j = i; j-- > 0;) {
      const Rational& m = mu(i, j);
      if (abs(m) * 2 > 1) {
        Integer q;
        const Rational shifted = m + Rational(1, 2);
        mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        b[i] = axpy(b[i], Rational(-q), b[j]);
        gram_schmidt();
      }
    }
    if (norm[i] >= (delta - mu(i, i - 1) * mu(i, i - 1)) * norm[i - 1]) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      gram_schmidt();
      i = std::max<std::size_t>(i - 1, 1);
    }
  }
  return b;
}

// Vectors B-orthogonal to every vector in `against`: the RREF kernel basis,
// which keeps small integer-like coordinates.
std::vector<Vector> orthogonal_complement(const Matrix& m, const std::vector<Vector>& against) {
  const std::size_t nv = m.rows();
  Matrix constraints(against.size(), nv);
  for (std::size_t i = 0; i < against.size(); ++i) {
    const Vector mv = m * std::span<const Rational>(against[i]);
    for (std::size_t c = 0; c < nv; ++c) constraints(i, c) = mv[c];
  }
  return lll_reduce(constraints.kernel());
}

// Visits integer combinations sum c_j basis_j by increasing L1 norm, up to
// sign, with their value under m, until `visit` returns true.
template <class Visit>
void for_each_small_vector(const Matrix& m, const std::vector<Vector>& basis, Visit visit) {
  constexpr int kMaxNorm = 6;
  const std::size_t k = basis.size();
  if (k == 0) return;
  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) gram(i, j) = gram(j, i) = bilinear(m, basis[i], basis[j]);
  std::vector<int> c(k, 0);
  std::function<bool(std::size_t, int, bool)> rec = [&](std::size_t i, int budget, bool signed_yet) -> bool {
    if (i == k) {
      if (budget != 0) return false;
      Rational v = 0;
      for (std::size_t a = 0; a < k; ++a) {
        if (c[a] == 0) continue;
        v += c[a] * c[a] * gram(a, a);
        for (std::size_t b = a + 1; b < k; ++b)
          if (c[b] != 0) v += 2 * c[a] * c[b] * gram(a, b);
      }
      return visit(c, v);
    }
    // The last coordinate takes whatever budget remains.
    const int lo = i + 1 == k ? budget : 0;
    for (int a = lo; a <= budget; ++a) {
      for (int sign : {1, -1}) {
        if (a == 0 && sign == -1) continue;
        if (!signed_yet && sign == -1) continue;
        c[i] = sign * a;
        if (rec(i + 1, budget - a, signed_yet || a != 0)) return true;
      }
    }
    c[i] = 0;
    return false;
  };
  for (int norm = 1; norm <= kMaxNorm; ++norm)
    if (rec(0, norm, false)) return;
}

Vector combine(const std::vector<Vector>& basis, const std::vector<int>& c) {
  Vector v(basis.front().size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (c[j] != 0) v = axpy(v, c[j], basis[j]);
  return v;
}

// The tangent frame of a type-C cubic: pole p with B(p, x) = L(x), an
// isotropic r with B(p, r) = 1, and an orthogonal basis of {p, r}^perp.
struct TangentFrame {
  Matrix m;
  Vector p;
  Vector r;
  std::vector<std::pair<Rational, Vector>> diag;
};

TangentFrame tangent_frame(const ReducibleCubic& cubic) {
  require_type_c(cubic);
  const std::size_t nv = cubic.nvars();
  TangentFrame frame{quadric_matrix(cubic.quadric()), {}, {}, {}};
  const Vector& l = cubic.linear().coefficients();
  frame.p = *frame.m.solve(l);  // Q(p) = 0 by tangency
  std::size_t k = 0;
  while (sgn(l[k]) == 0) ++k;
  Vector r(nv);
  r[k] = 1 / l[k];
  frame.r = axpy(r, -bilinear(frame.m, r, r) / 2, frame.p);

  Matrix constraints(2, nv);
  const Vector mp = frame.m * std::span<const Rational>(frame.p);
  const Vector mr = frame.m * std::span<const Rational>(frame.r);
  for (std::size_t c = 0; c < nv; ++c) {
    constraints(0, c) = mp[c];
    constraints(1, c) = mr[c];
  }
  frame.diag = diagonalize(frame.m, constraints.kernel());
  return frame;
}

// Rows of the inverse of the basis matrix with columns p, r, extra...:
// the coordinate functionals of that basis.
Matrix dual_coordinates(const Vector& p, const Vector& r, const std::vector<Vector>& extra) {
  const std::size_t nv = p.size();
  Matrix basis(nv, nv);
  for (std::size_t row = 0; row < nv; ++row) {
    basis(row, 0) = p[row];
    basis(row, 1) = r[row];
    for (std::size_t j = 0; j < extra.size(); ++j) basis(row, 2 + j) = extra[j][row];
  }
  return *basis.inverse();
}

}  // namespace

TangentCubicData tangent_cubic_data(const ReducibleCubic& cubic) {
  const TangentFrame frame = tangent_frame(cubic);
  std::vector<Vector> ws;
  for (const auto& d : frame.diag) ws.push_back(d.second);
  const Matrix coords = dual_coordinates(frame.p, frame.r, ws);
  // Q = 2 alpha beta + sum mu gamma^2 and L = beta.
  TangentCubicData data{LinearForm(coords.row(1)), Rational(2) * LinearForm(coords.row(0)), {}, {}};
  for (std::size_t j = 0; j < frame.diag.size(); ++j)
    data.squares.push_back({frame.diag[j].first, LinearForm(coords.row(2 + j))});
  if (!(data.expand() == cubic.product())) throw std::logic_error("tangent cubic normalization does not reproduce L Q");
  return data;
}

std::optional<LinearChange> normalize_type_c(const ReducibleCubic& cubic) {
  const TangentFrame frame = tangent_frame(cubic);
  const std::size_t n = cubic.projective_dimension();
  const Matrix& m = frame.m;
  auto value = [&m](const Vector& v) { return bilinear(m, v, v); };
  auto off_pole = [&](const Vector& v) { return !LinearForm(v).proportional_to(LinearForm(frame.p)); };
  // {L = 0} = p^perp carries q_W with radical p; v -> v - B(v, r) p is an
  // isometry onto W. Searching there keeps integer coordinates small.
  auto to_w = [&](const Vector& v) { return axpy(v, -bilinear(m, v, frame.r), frame.p); };

  // In the frame, L Q = beta (2 alpha beta + q_W). With y0 = beta / t and
  // y1 = 2 t^2 alpha the target needs t q_W = y2 y3 + y4^2 + ... (n >= 3)
  // or t q_W = y2^2 (n = 2). By Witt cancellation any hyperbolic plane of
  // q_W can be split off first, and then any vector of square value under
  // t q_W, one at a time.
  std::vector<Vector> taken{frame.p};
  std::vector<Vector> hyperbolic;
  if (n >= 3) {
    const std::vector<Vector> h = orthogonal_complement(m, taken);
    std::optional<Vector> iso;
    for_each_small_vector(m, h, [&](const std::vector<int>& c, const Rational& v) {
      if (sgn(v) != 0) return false;
      Vector x = combine(h, c);
      if (!off_pole(x)) return false;
      iso = std::move(x);
      return true;
    });
    if (!iso) return std::nullopt;
    std::size_t k = 0;
    while (sgn(bilinear(m, h[k], *iso)) == 0) ++k;
    const Vector u = axpy(h[k], -value(h[k]) / (2 * bilinear(m, *iso, h[k])), *iso);
    hyperbolic = {to_w(*iso), to_w(u)};
    taken.push_back(*iso);
    taken.push_back(u);
  }
  const std::vector<Vector> rest = orthogonal_complement(m, taken);
  const std::size_t needed = n >= 3 ? n - 3 : 1;

  // Candidate scales: the inverse values of small vectors in the rest; for
  // an odd number of squares t is also fixed up to squares by the
  // discriminant.
  std::vector<Rational> scales;
  if (needed == 0) {
    scales.push_back(1);
  } else {
    if (needed % 2 == 1) {
      std::vector<Vector> rest_w;
      for (const auto& v : rest)
        if (off_pole(v)) rest_w.push_back(to_w(v));
      Rational disc = 1;
      for (const auto& d : diagonalize(m, Subspace::span(m.rows(), rest_w).basis())) disc *= d.first;
      scales.push_back(disc);
    }
    constexpr std::size_t kScaleCandidates = 8;
    for_each_small_vector(m, rest, [&](const std::vector<int>&, const Rational& v) {
      if (sgn(v) != 0 && std::find(scales.begin(), scales.end(), 1 / v) == scales.end()) scales.push_back(1 / v);
      return scales.size() >= kScaleCandidates;
    });
  }

  const Polynomial f = cubic.product();
  const Polynomial target = type_c_normal_form(n);
  for (const Rational& t : scales) {
    std::vector<Vector> units;
    std::vector<Vector> used = taken;
    std::vector<Vector> left = rest;
    while (units.size() < needed) {
      std::optional<Vector> unit;
      for_each_small_vector(m, left, [&](const std::vector<int>& c, const Rational& v) {
        Rational s;
        if (sgn(v) == 0 || !is_rational_square(t * v, &s)) return false;
        unit = combine(left, c);
        used.push_back(*unit);
        *unit = axpy(Vector(unit->size()), 1 / s, *unit);
        return true;
      });
      if (!unit) break;
      units.push_back(to_w(*unit));
      left = orthogonal_complement(m, used);
    }
    if (units.size() < needed) continue;

    std::vector<Vector> extra;
    if (n >= 3) {
      // t B(u2, u3) = 1/2 makes t q_W on the plane equal to y2 y3.
      extra = {hyperbolic[0], axpy(Vector(hyperbolic[1].size()), 1 / (2 * t * bilinear(m, hyperbolic[0], hyperbolic[1])),
                                   hyperbolic[1])};
    }
    extra.insert(extra.end(), units.begin(), units.end());
    const Matrix coords = dual_coordinates(frame.p, frame.r, extra);
    std::vector<LinearForm> rows{(1 / t) * LinearForm(coords.row(1)), (2 * t * t) * LinearForm(coords.row(0))};
    for (std::size_t j = 0; j < extra.size(); ++j) rows.push_back(LinearForm(coords.row(2 + j)));
    const LinearChange change = LinearChange::from_images(rows).inverse();
    if (substitute(f, change) == target) return change;
  }
  return std::nullopt;
}

WaringDecomposition decompose_type_c(const ReducibleCubic& cubic, const std::optional<LinearChange>& change,
                                     TypeCOptions options) {
  require_type_c(cubic);
  const std::size_t n = cubic.projective_dimension();
  const Polynomial f = cubic.product();
  std::optional<LinearChange> to_normal = change;
  if (to_normal) {
    if (to_normal->size() != cubic.nvars()) throw InvalidChange("linear change has the wrong size");
    if (!(substitute(f, *to_normal) == type_c_normal_form(n)))
      throw InvalidChange("the supplied change does not map L Q to the normal form");
  } else {
    to_normal = normalize_type_c(cubic);
  }
  if (to_normal) return checked(f, substitute(decompose_type_c_normal(n), to_normal->inverse()), 2 * n + 1);
  if (options.allow_weighted) return checked(f, decompose_tangent_cubic(tangent_cubic_data(cubic)), 2 * n + 1);
  throw NeedsFieldExtension("no change of coordinates over Q to the type-C normal form was found");
}

WaringDecomposition decompose_linear_product(const LinearForm& l1, const LinearForm& l2, const LinearForm& l3) {
  WaringDecomposition dec(3, l1.nvars());
  const Rational c(1, 24);
  dec.add(c, l1 + l2 + l3);
  dec.add(-c, l1 + l2 - l3);
  dec.add(-c, l1 - l2 + l3);
  dec.add(-c, l2 + l3 - l1);
  const Polynomial target = l1.to_polynomial() * l2.to_polynomial() * l3.to_polynomial();
  return checked(target, dec, 4);
}

std::optional<std::pair<LinearForm, LinearForm>> factor_quadric(const Polynomial& quadric) {
  if (!quadric.is_form_of_degree(2)) throw std::invalid_argument("not a quadratic form");
  const EssentialReduction red = reduce_to_essential(quadric);
  const auto& z = red.coordinates;
  std::optional<std::pair<LinearForm, LinearForm>> out;
  if (z.size() == 1) {
    out = {red.reduced.coefficient(Monomial{2}) * z[0], z[0]};
  } else if (z.size() == 2) {
    const Rational qa = red.reduced.coefficient(Monomial{2, 0});
    const Rational qb = red.reduced.coefficient(Monomial{1, 1});
    const Rational qc = red.reduced.coefficient(Monomial{0, 2});
    if (sgn(qa) == 0) {
      out = {z[1], qb * z[0] + qc * z[1]};
    } else {
      Rational s;
      if (!is_rational_square(qb * qb - 4 * qa * qc, &s)) return std::nullopt;
      const Rational t1 = (-qb + s) / (2 * qa);
      const Rational t2 = (-qb - s) / (2 * qa);
      out = {qa * (z[0] - t1 * z[1]), z[0] - t2 * z[1]};
    }
  } else {
    return std::nullopt;
  }
  if (!(out->first.to_polynomial() * out->second.to_polynomial() == quadric))
    throw std::logic_error("quadric factorization does not reproduce Q");
  return out;
}

}  // namespace waring
