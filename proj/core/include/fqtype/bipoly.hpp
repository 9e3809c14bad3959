#pragma once

// Bivariate polynomials over F_q, stored as polynomials in y whose
// coefficients are univariate polynomials in x.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fqtype/gf.hpp"
#include "fqtype/unipoly.hpp"

namespace fqtype {

enum class Var { x, y };

/// Largest total degree accepted by the bivariate factorizer.
inline constexpr int kMaxBivariateDegree = 12;

class BiPoly {
 public:
  struct Term {
    unsigned i = 0;  // x exponent
    unsigned j = 0;  // y exponent
    Elem c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit BiPoly(FieldPtr field) : field_(std::move(field)) {}
  /// rows[j] is the coefficient of y^j, a polynomial in x.
  BiPoly(FieldPtr field, std::vector<UniPoly> rows);

  static BiPoly from_terms(FieldPtr field, const std::vector<Term>& terms);
  static BiPoly constant(FieldPtr field, Elem c);
  static BiPoly x(FieldPtr field);
  static BiPoly y(FieldPtr field);
  /// p(x) and p(y) for a univariate p.
  static BiPoly in_x(const UniPoly& p);
  static BiPoly in_y(const UniPoly& p);

  const FieldPtr& field() const { return field_; }
  const FieldCtx& ctx() const { return *field_; }
  const std::vector<UniPoly>& rows() const { return rows_; }

  bool is_zero() const { return rows_.empty(); }
  bool is_constant() const { return rows_.size() <= 1 && (rows_.empty() || rows_[0].degree() <= 0); }
  int deg_x() const;
  int deg_y() const { return static_cast<int>(rows_.size()) - 1; }
  int total_degree() const;
  Elem coeff(unsigned i, unsigned j) const;
  /// Nonzero terms sorted by (j, i).
  std::vector<Term> terms() const;
  /// Coefficient of the highest power of y.
  UniPoly lead_y() const { return rows_.empty() ? UniPoly(field_) : rows_.back(); }
  /// Coefficient of the leading monomial in y-then-x lexicographic order.
  Elem leading_coeff() const { return rows_.empty() ? Elem{0} : rows_.back().lead(); }

  Elem operator()(Elem x0, Elem y0) const;
  /// F(x0, y) as a polynomial in y.
  UniPoly eval_x(Elem x0) const;
  /// F(x, y0) as a polynomial in x.
  UniPoly eval_y(Elem y0) const;

  BiPoly operator+(const BiPoly& g) const;
  BiPoly operator-(const BiPoly& g) const;
  BiPoly operator*(const BiPoly& g) const;
  BiPoly operator-() const;
  BiPoly scaled(Elem c) const;
  BiPoly scaled(const UniPoly& c_of_x) const;

  BiPoly swap_xy() const;
  BiPoly d_dx() const;
  BiPoly d_dy() const;
  /// F(x + c, y).
  BiPoly shift_x(Elem c) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.rows_ == b.rows_ && same_field(*a.field_, *b.field_);
  }

 private:
  void trim();

  FieldPtr field_;
  std::vector<UniPoly> rows_;
};

/// Canonical order: total degree, then terms.
bool canonical_less(const BiPoly& a, const BiPoly& b);

/// Scales F so the y-then-x leading coefficient is 1.
BiPoly normalize(const BiPoly& F);
/// Gcd of the y-coefficients, a monic polynomial in x.
UniPoly content_y(const BiPoly& F);
BiPoly primitive_part_y(const BiPoly& F);
/// F / D when D divides F exactly, otherwise nullopt.
std::optional<BiPoly> try_divide(const BiPoly& F, const BiPoly& D);

/// Difference quotient: f(x) - f(y) = (x - y) * tilde(f).
BiPoly tilde(const UniPoly& f);

/// Normalized gcd via content split and a subresultant remainder sequence in y.
BiPoly bipoly_gcd(const BiPoly& F, const BiPoly& G);

/// True iff F = c (x - y)^m for some m >= 0.
bool is_power_of_x_minus_y(const BiPoly& F);
/// F = (x - y)^m * rest with (x - y) not dividing rest; returns (rest, m).
std::pair<BiPoly, int> strip_x_minus_y(const BiPoly& F);

/// Res_y(F, G), a polynomial in x (subresultant algorithm over F_q[x]).
UniPoly resultant_y(const BiPoly& F, const BiPoly& G);
/// Resultant eliminating `var`; the result is a polynomial in the other variable.
/// With strip_diagonal, powers of (x - y) are first divided out of both inputs.
/// Throws std::domain_error when the resultant vanishes identically.
UniPoly eliminate(const BiPoly& F, const BiPoly& G, Var var, bool strip_diagonal = false);

/// Irreducible factors over the coefficient field with multiplicities;
/// factors are normalized and canonically ordered. Total degree <= 12.
std::vector<std::pair<BiPoly, int>> bivariate_factorize(const BiPoly& F, std::uint64_t seed = 0);

/// Irreducibility over the algebraic closure, decided by factoring over
/// F_{q^t} for t = 1 and every prime t up to the total degree.
bool geometrically_irreducible(const BiPoly& F);

/// F_{q^t} with its canonical modulus (cached).
FieldPtr extension_field(const FieldPtr& base, unsigned t);
/// The fixed embedding between two fields (cached).
const Embedding& field_embedding(const FieldPtr& source, const FieldPtr& target);
UniPoly embed(const UniPoly& f, const Embedding& e);
BiPoly embed(const BiPoly& F, const Embedding& e);

}  // namespace fqtype
