#pragma once

// Checkers for the equidistribution criteria and the bad-set computations
// attached to them.

#include <cstdint>
#include <optional>
#include <vector>

#include "fqtype/bipoly.hpp"
#include "fqtype/unipoly.hpp"

namespace fqtype {

struct Hypotheses {
  bool d2f_nonzero = false;
  bool deg_fprime_ge_1 = false;
  bool gcd_condition = false;
  bool fprimeprime_nonzero = false;
  bool q_coprime_2d = false;
  bool q_coprime_d_dminus1 = false;
};

struct CriterionReport {
  UniPoly f;
  int d = 0;
  Hypotheses hypotheses;
  /// gcd(tilde(f) - f'(x), tilde(f')); absent when f' is constant.
  std::optional<BiPoly> gcd_polynomial;
  /// D^2 f != 0, deg f' >= 1 and the gcd is c (x - y)^m.
  bool main_theorem = false;
  /// f'' != 0 and gcd(q, 2d) = 1.
  bool prop_kr = false;
  /// gcd(q, d(d-1)) = 1.
  bool thm_duke = false;
  /// d^2 - d - 1.
  int bad_set_bound = 0;
};

struct BadSetBounds {
  int B1 = 0;     // d - 2
  int B2 = 0;     // (d - 1)(d - 2)
  int B = 0;      // d^2 - 2d
  int total = 0;  // d^2 - d - 1
};
BadSetBounds bad_set_bounds(int d);

/// A locus polynomial in S whose closure roots contain a bad set.
struct BadSetLocus {
  UniPoly locus;
  std::vector<Elem> roots_in_field;
  /// Number of distinct roots over the closure (degree of the radical).
  int distinct_roots = 0;
};

struct BadSetReport {
  UniPoly f;
  BadSetLocus B1;
  BadSetLocus B2;
  BadSetBounds bounds;
  /// Union of the F_q-roots of both loci, sorted. Candidates only: the B2
  /// locus may also vanish at values coming from diagonal points (a, a).
  std::vector<Elem> candidates;
  std::optional<std::vector<Elem>> lemma21_bad_s;
};

/// Every exponent with a nonzero coefficient is 0 or a power of p.
bool is_affine_linearized(const UniPoly& f);

/// f' has d - 1 distinct roots and f takes distinct values on them; decided by
/// a squarefreeness test on f' and on Res_T(f'(T), S - f(T)).
bool is_morse(const UniPoly& f);

/// Res_T(f'(T), S - f(T)), whose roots are the critical values of f.
UniPoly critical_value_polynomial(const UniPoly& f);

/// Rejects non-monic input with std::invalid_argument.
CriterionReport check_main_theorem(const UniPoly& f);

struct PropKrFlags {
  bool fprimeprime_nonzero = false;
  bool q_coprime_2d = false;
  bool verdict() const { return fprimeprime_nonzero && q_coprime_2d; }
};
PropKrFlags check_prop_kr(const UniPoly& f);
bool check_thm_duke(int d, const FieldCtx& field);

/// Locus Res_T(D^2 f(T), S + f'(T)); throws std::domain_error if D^2 f = 0.
BadSetLocus bad_set_B1(const UniPoly& f);
/// Locus Res_x(r(x), S + f'(x)) with r = Res_y of the (x - y)-stripped
/// tilde(f) - f'(x) and tilde(f'). Throws std::domain_error when those share
/// a factor.
BadSetLocus bad_set_B2(const UniPoly& f);
BadSetReport bad_sets(const UniPoly& f, bool with_lemma21 = false);

/// Values s in `search_field` with tilde(f) + s geometrically reducible.
/// Throws std::invalid_argument for affine linearized f.
std::vector<Elem> bad_set_lemma21(const UniPoly& f, const FieldPtr& search_field);

struct ConjectureScanReport {
  std::string field;
  int d_max = 0;
  std::uint64_t scanned = 0;
  /// f'' = 0, outside the conjecture's hypothesis.
  std::uint64_t skipped_by_hypothesis = 0;
  /// Skipped polynomials whose gcd is nonetheless nonconstant.
  std::uint64_t skipped_with_common_factor = 0;
  std::vector<UniPoly> skipped_common_factor_examples;
  std::uint64_t checked = 0;
  std::vector<UniPoly> counterexamples;
};

/// Scans every monic f with 2 <= deg f <= d_max (d_max <= 8).
ConjectureScanReport conjecture_scan(const FieldPtr& field, int d_max);

/// The monic polynomial of degree d whose lower coefficients are the base-q digits of index.
UniPoly monic_from_index(const FieldPtr& field, int d, std::uint64_t index);

}  // namespace fqtype
