#pragma once

// Univariate polynomials over F_q and their factorization.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqtype/gf.hpp"
#include "fqtype/numeric.hpp"

namespace fqtype {

/// Degree reported for the zero polynomial.
inline constexpr int kDegreeOfZero = -1;

class UniPoly {
 public:
  explicit UniPoly(FieldPtr field) : field_(std::move(field)) {}
  /// Coefficients in ascending degree; trailing zeros are dropped.
  UniPoly(FieldPtr field, std::vector<Elem> coeffs);

  static UniPoly constant(FieldPtr field, Elem c);
  /// c * T^e
  static UniPoly monomial(FieldPtr field, Elem c, std::size_t e);
  /// The polynomial T.
  static UniPoly variable(FieldPtr field) { return monomial(std::move(field), Elem{1}, 1); }
  /// Coefficients given as integer encodings, ascending.
  static UniPoly from_encodings(FieldPtr field, const std::vector<std::uint64_t>& encodings);

  const FieldPtr& field() const { return field_; }
  const FieldCtx& ctx() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  std::vector<std::uint32_t> encodings() const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].v == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().v == 1; }
  Elem lead() const { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Elem{0}; }

  Elem operator()(Elem x) const;

  UniPoly operator+(const UniPoly& g) const;
  UniPoly operator-(const UniPoly& g) const;
  UniPoly operator*(const UniPoly& g) const;
  UniPoly operator-() const;
  UniPoly scaled(Elem c) const;
  UniPoly& operator+=(const UniPoly& g) { return *this = *this + g; }
  UniPoly& operator-=(const UniPoly& g) { return *this = *this - g; }
  UniPoly& operator*=(const UniPoly& g) { return *this = *this * g; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_ && same_field(*a.field_, *b.field_);
  }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// Canonical order: by degree, then by coefficient encodings from the top down.
bool canonical_less(const UniPoly& a, const UniPoly& b);

/// Quotient and remainder; throws std::domain_error when g is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);
UniPoly operator/(const UniPoly& f, const UniPoly& g);
UniPoly operator%(const UniPoly& f, const UniPoly& g);
/// Quotient of an exact division; throws std::logic_error on a remainder.
UniPoly divide_exact(const UniPoly& f, const UniPoly& g);

/// Monic gcd (zero only when both are zero).
UniPoly gcd(const UniPoly& f, const UniPoly& g);
/// Monic gcd together with u, v such that u f + v g = gcd.
struct ExtendedGcd {
  UniPoly gcd, u, v;
};
ExtendedGcd extended_gcd(const UniPoly& f, const UniPoly& g);

UniPoly monic(const UniPoly& f);
UniPoly derivative(const UniPoly& f);
/// f(g(T)).
UniPoly compose(const UniPoly& f, const UniPoly& g);
/// f(T) + sT + b.
UniPoly shift(const UniPoly& f, Elem s, Elem b);
UniPoly pow(const UniPoly& f, unsigned e);
UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly powmod(const UniPoly& a, std::uint64_t e, const UniPoly& m);

/// D^j f = sum binom(i, j) a_i T^(i-j), with binomials reduced mod p.
UniPoly hasse_derivative(const UniPoly& f, unsigned j);
/// binom(n, r) mod p via Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t r, std::uint32_t p);

/// Order of vanishing of f at alpha, via Hasse derivatives. f must be nonzero.
int root_multiplicity(const UniPoly& f, Elem alpha);

/// f with every coefficient raised to p^(k-1) and exponents divided by p.
/// Requires f to be a polynomial in T^p.
UniPoly pth_root(const UniPoly& f);

/// Squarefree, pairwise coprime monic parts with their exponents, sorted by exponent.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);
/// Degree of the product of the distinct irreducible factors.
int radical_degree(const UniPoly& f);
bool is_squarefree(const UniPoly& f);

struct Factorization {
  Elem unit;
  /// Monic irreducible factors and multiplicities, canonical order.
  std::vector<std::pair<UniPoly, int>> factors;
};

/// Full factorization (squarefree split, distinct-degree, equal-degree).
/// The seed only steers random splitting choices; the result does not depend on it.
Factorization factorize(const UniPoly& f, std::uint64_t seed = 0);

/// Distinct-degree split of a monic squarefree polynomial: (degree, product
/// of all irreducible factors of that degree).
std::vector<std::pair<int, UniPoly>> distinct_degree_factorization(const UniPoly& f);

/// Roots of f lying in its coefficient field, increasing encoding order.
std::vector<Elem> roots_in_field(const UniPoly& f);

/// A multiset of positive integers, kept in descending order.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  std::size_t length() const { return parts_.size(); }
  /// "3+2+1"
  std::string to_string() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the descending parts, larger first: (3) < (2,1) < (1,1,1).
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Degrees of the irreducible factors counted with multiplicity.
/// Computed from the squarefree and distinct-degree splits only.
Partition factorization_type(const UniPoly& f);
/// Same quantity read off a full factorization.
Partition factorization_type(const Factorization& fac);

/// Res(f, g) = lc(f)^deg g * prod g(alpha) over the roots of f.
Elem resultant(const UniPoly& f, const UniPoly& g);
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f) with f' taken at formal degree n-1.
Elem discriminant(const UniPoly& f);

/// Number of monic irreducible polynomials of degree d over F_q.
BigInt count_irreducibles(int d, std::uint64_t q);
int mobius(int n);

}  // namespace fqtype
