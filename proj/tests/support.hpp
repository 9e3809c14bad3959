#pragma once

// Shared fixtures and brute-force oracles. The oracles only use field
// arithmetic, polynomial ring operations and exhaustive search, so they are
// independent of the factoring, resultant and gcd code under test.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fqtype/bipoly.hpp"
#include "fqtype/gf.hpp"
#include "fqtype/text.hpp"
#include "fqtype/unipoly.hpp"

namespace fqtest {

using namespace fqtype;

inline FieldPtr field(const std::string& spec) { return parse_field(spec); }

inline UniPoly poly(const FieldPtr& F, const std::string& text) { return parse_unipoly(F, text); }
inline BiPoly bipoly(const FieldPtr& F, const std::string& text) { return parse_bipoly(F, text); }

inline Elem random_elem(const FieldCtx& F, std::mt19937_64& rng) {
  return Elem{static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, F.q() - 1)(rng))};
}

inline Elem random_nonzero(const FieldCtx& F, std::mt19937_64& rng) {
  return Elem{static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(1, F.q() - 1)(rng))};
}

inline UniPoly random_poly(const FieldPtr& F, int degree, std::mt19937_64& rng, bool make_monic = false) {
  std::vector<Elem> c(static_cast<std::size_t>(degree) + 1);
  for (auto& e : c) e = random_elem(*F, rng);
  c.back() = make_monic ? Elem{1} : random_nonzero(*F, rng);
  return UniPoly(F, c);
}

inline BiPoly random_bipoly(const FieldPtr& F, int total_degree, std::mt19937_64& rng) {
  std::vector<BiPoly::Term> terms;
  for (int i = 0; i <= total_degree; ++i)
    for (int j = 0; i + j <= total_degree; ++j)
      if (i || j != total_degree) terms.push_back({unsigned(i), unsigned(j), random_elem(*F, rng)});
  terms.push_back({0, unsigned(total_degree), random_nonzero(*F, rng)});
  return BiPoly::from_terms(F, terms);
}

/// All monic polynomials of degree d, in base-q index order.
inline std::vector<UniPoly> all_monic(const FieldPtr& F, int d) {
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= F->q();
  std::vector<UniPoly> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
    std::uint64_t m = n;
    for (int i = 0; i < d; ++i, m /= F->q()) c[i] = Elem{static_cast<std::uint32_t>(m % F->q())};
    c[d] = Elem{1};
    out.emplace_back(F, c);
  }
  return out;
}

/// Irreducibility by trial division against every monic polynomial of degree <= deg/2.
inline bool irreducible_by_trial_division(const UniPoly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  for (int e = 1; 2 * e <= d; ++e)
    for (const UniPoly& g : all_monic(f.field(), e))
      if ((f % g).is_zero()) return false;
  return true;
}

/// Determinant by Gaussian elimination over F_q.
inline Elem determinant(const FieldCtx& F, std::vector<std::vector<Elem>> m) {
  const std::size_t n = m.size();
  Elem det = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].v == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = F.neg(det);
    }
    det = F.mul(det, m[col][col]);
    const Elem inv = F.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Elem factor = F.mul(m[r][col], inv);
      if (factor.v == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] = F.sub(m[r][c], F.mul(factor, m[col][c]));
    }
  }
  return det;
}

/// Res(f, g) as the determinant of the Sylvester matrix.
inline Elem sylvester_resultant(const UniPoly& f, const UniPoly& g) {
  const FieldCtx& F = f.ctx();
  const int m = f.degree(), n = g.degree();
  if (m == 0) return F.pow(f.lead(), n);
  if (n == 0) return F.pow(g.lead(), m);
  const std::size_t size = m + n;
  std::vector<std::vector<Elem>> s(size, std::vector<Elem>(size, F.zero()));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
  return determinant(F, s);
}

/// f(x) - f(y) as a bivariate polynomial.
inline BiPoly difference(const UniPoly& f) { return BiPoly::in_x(f) - BiPoly::in_y(f); }

/// Roots of f inside a field containing its coefficients, by evaluation at every element.
inline std::vector<Elem> roots_by_search(const UniPoly& f) {
  std::vector<Elem> out;
  for (Elem a : enumerate_field(f.ctx()))
    if (f(a).v == 0) out.push_back(a);
  return out;
}

/// Morse test done in a splitting field: find all roots of f' by exhaustive
/// evaluation in F_{q^L} and compare root and critical-value counts.
inline bool morse_by_roots(const UniPoly& f, unsigned L) {
  const int d = f.degree();
  const UniPoly fp = derivative(f);
  if (fp.degree() != d - 1) return false;
  const FieldPtr big = extension_field(f.field(), L);
  const Embedding& e = field_embedding(f.field(), big);
  const UniPoly fe = embed(f, e), fpe = embed(fp, e);
  const std::vector<Elem> roots = roots_by_search(fpe);
  if (static_cast<int>(roots.size()) != d - 1) return false;
  std::set<std::uint32_t> values;
  for (Elem a : roots) values.insert(fe(a).v);
  return static_cast<int>(values.size()) == d - 1;
}

/// True when F has a factor of total degree 1 over its own field, found by trial division.
inline bool has_linear_factor(const BiPoly& F) {
  const FieldPtr& K = F.field();
  const BiPoly x = BiPoly::x(K), y = BiPoly::y(K);
  for (Elem c : enumerate_field(*K)) {
    const BiPoly cst = BiPoly::constant(K, c);
    for (Elem b : enumerate_field(*K))
      if (try_divide(F, x + y.scaled(b) + cst)) return true;
    if (try_divide(F, y + cst)) return true;
  }
  return false;
}

/// Geometric reducibility of a curve of total degree 2 or 3 over F_q. Such a
/// curve is reducible over the closure iff it has a line component, and every
/// line component is defined over F_{q^t} with t in {1, 2, 3}.
inline bool geometrically_reducible_low_degree(const BiPoly& F) {
  for (unsigned t : {1u, 2u, 3u}) {
    const FieldPtr K = t == 1 ? F.field() : extension_field(F.field(), t);
    const BiPoly G = t == 1 ? F : embed(F, field_embedding(F.field(), K));
    if (has_linear_factor(G)) return true;
  }
  return false;
}

}  // namespace fqtest
