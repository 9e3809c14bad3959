#pragma once

// Factorization-type statistics over short intervals f(T) + a_m T^m + ... + a_0.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fqtype/numeric.hpp"
#include "fqtype/unipoly.hpp"

namespace fqtype {

/// Largest interval enumerated exhaustively.
inline constexpr std::uint64_t kMaxExhaustiveInterval = std::uint64_t{1} << 24;

struct SweepMode {
  bool sampled = false;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  static SweepMode exhaustive() { return {}; }
  static SweepMode sample(std::uint64_t n, std::uint64_t seed) { return {true, n, seed}; }
};

std::vector<Partition> partitions(int d);
/// 1 / prod_j (j^{m_j} m_j!).
Rational cycle_type_probability(const Partition& lambda);

struct DistributionReport {
  explicit DistributionReport(UniPoly poly) : f(std::move(poly)) {}

  UniPoly f;
  int m = 0;
  std::optional<Elem> s;
  std::uint64_t q = 0;
  int d = 0;
  SweepMode mode;
  /// Every partition of d appears, including zero counts.
  std::map<Partition, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::map<Partition, Rational> probabilities;
  std::map<Partition, Rational> reference;
  Rational max_abs_deviation;
  double scaled_deviation = 0.0;
  Rational total_variation;

  Rational deviation(const Partition& lambda) const;
};

/// m = 0 ranges over f + sT + b (s defaults to 0); m = 1 over f + sT + b for
/// all (s, b) and takes no s.
DistributionReport interval_distribution(const UniPoly& f, int m, std::optional<Elem> s, SweepMode mode);

struct BadSweepReport {
  double C = 0;
  std::uint64_t q = 0;
  int d = 0;
  /// sqrt(q) * max_lambda |P_s(lambda) - p_lambda| for each s, by encoding.
  std::vector<double> scaled_deviation;
  /// sqrt(q) * |P_s((d)) - 1/d| for each s.
  std::vector<double> irreducible_scaled_deviation;
  std::vector<Elem> flagged;
  int bound = 0;  // d^2 - d - 1
  double median_irreducible_scaled = 0;
};

/// Flags s when sqrt(q) * max deviation of f + sT exceeds C.
BadSweepReport count_bad_s(const UniPoly& f, double C, SweepMode mode = SweepMode::exhaustive());

/// Exact counts of monic degree-d polynomials of each type (d <= 8, q <= 2^10).
std::map<Partition, BigInt> full_space_exact(int d, const FieldCtx& field);

}  // namespace fqtype
