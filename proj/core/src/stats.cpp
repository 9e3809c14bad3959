#include "fqtype/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fqtype/parallel.hpp"
#include "fqtype/rng.hpp"

namespace fqtype {

namespace {

void extend_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

std::uint64_t scaled_draw(std::uint64_t word, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(word) * bound) >> 64);
}

BigInt binomial(BigInt n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

// Index-to-polynomial map for one interval; the shared coefficient vector is copied per call.
struct IntervalWalker {
  const UniPoly& f;
  int m;
  std::optional<Elem> s;
  SweepMode mode;
  std::uint64_t q;
  KeyedRng rng;

  std::pair<Elem, Elem> shift_at(std::uint64_t i) const {
    std::uint64_t sv = 0, bv = 0;
    if (mode.sampled) {
      bv = scaled_draw(rng.at(2 * i), q);
      if (m == 1) sv = scaled_draw(rng.at(2 * i + 1), q);
    } else {
      bv = i % q;
      if (m == 1) sv = i / q;
    }
    if (m == 0 && s) sv = s->v;
    return {Elem{static_cast<std::uint32_t>(sv)}, Elem{static_cast<std::uint32_t>(bv)}};
  }

  UniPoly poly_at(std::uint64_t i) const {
    const auto [sv, bv] = shift_at(i);
    const FieldCtx& F = f.ctx();
    std::vector<Elem> c = f.coeffs();
    c[0] = F.add(c[0], bv);
    c[1] = F.add(c[1], sv);
    return UniPoly(f.field(), std::move(c));
  }
};

}  // namespace

std::vector<Partition> partitions(int d) {
  if (d < 1 || d > 20) throw std::out_of_range("partitions supports 1 <= d <= 20");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend_partitions(d, d, prefix, out);
  return out;
}

Rational cycle_type_probability(const Partition& lambda) {
  if (lambda.length() == 0) throw std::invalid_argument("empty partition");
  BigInt denom = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int t = 0; t < mult; ++t) denom *= parts[i];
    for (int t = 2; t <= mult; ++t) denom *= t;
    i = j;
  }
  return Rational(BigInt(1), denom);
}

Rational DistributionReport::deviation(const Partition& lambda) const {
  if (total == 0) return Rational(0);
  const Rational diff = probabilities.at(lambda) - reference.at(lambda);
  return diff < 0 ? Rational(-diff) : diff;
}

DistributionReport interval_distribution(const UniPoly& f, int m, std::optional<Elem> s, SweepMode mode) {
  if (f.degree() < 2) throw std::invalid_argument("interval distribution needs deg f >= 2");
  if (m != 0 && m != 1) throw std::invalid_argument("interval parameter m must be 0 or 1");
  if (m == 1 && s) throw std::invalid_argument("a fixed s only applies to m = 0");
  if (s) f.ctx().from_encoding(s->v);
  const std::uint64_t q = f.ctx().q();
  const int d = f.degree();
  std::uint64_t size = q;
  if (m == 1) size = q * q;
  if (!mode.sampled && size > kMaxExhaustiveInterval)
    throw std::out_of_range("interval too large for exhaustive mode; use sampling");

  DistributionReport r(f);
  r.m = m;
  r.s = s;
  r.q = q;
  r.d = d;
  r.mode = mode;
  const std::vector<Partition> parts = partitions(d);
  std::map<Partition, std::size_t> slot;
  for (std::size_t i = 0; i < parts.size(); ++i) slot.emplace(parts[i], i);

  std::vector<std::uint32_t> key = f.encodings();
  key.push_back(static_cast<std::uint32_t>(m));
  const IntervalWalker walker{f, m, s, mode, q, KeyedRng(mode.seed, key)};
  const std::uint64_t total = mode.sampled ? mode.n : size;
  const std::uint64_t blocks = std::min<std::uint64_t>(total, 256);
  std::vector<std::vector<std::uint64_t>> tallies(blocks, std::vector<std::uint64_t>(parts.size(), 0));
  parallel_for(blocks, [&](std::size_t b) {
    const std::uint64_t lo = total * b / blocks, hi = total * (b + 1) / blocks;
    for (std::uint64_t i = lo; i < hi; ++i) ++tallies[b][slot.at(factorization_type(walker.poly_at(i)))];
  });

  r.total = total;
  Rational tv = 0, maxdev = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::uint64_t c = 0;
    for (const auto& t : tallies) c += t[i];
    r.counts[parts[i]] = c;
    r.reference[parts[i]] = cycle_type_probability(parts[i]);
    r.probabilities[parts[i]] = total == 0 ? Rational(0) : Rational(BigInt(c), BigInt(total));
    const Rational dev = r.deviation(parts[i]);
    maxdev = std::max(maxdev, dev);
    tv += dev;
  }
  r.max_abs_deviation = maxdev;
  r.total_variation = tv / 2;
  r.scaled_deviation = to_double(maxdev) * std::sqrt(static_cast<double>(q));
  return r;
}

BadSweepReport count_bad_s(const UniPoly& f, double C, SweepMode mode) {
  const std::uint64_t q = f.ctx().q();
  if (!mode.sampled && q * q > kMaxExhaustiveInterval) throw std::out_of_range("bad-s sweep too large for exhaustive mode");
  if (!(C >= 0)) throw std::invalid_argument("tolerance must be non-negative");
  BadSweepReport r;
  r.C = C;
  r.q = q;
  r.d = f.degree();
  r.bound = r.d * r.d - r.d - 1;
  r.scaled_deviation.resize(q);
  r.irreducible_scaled_deviation.resize(q);
  const double root_q = std::sqrt(static_cast<double>(q));
  const Partition irreducible({r.d});
  for (std::uint64_t s = 0; s < q; ++s) {
    const DistributionReport dist = interval_distribution(f, 0, Elem{static_cast<std::uint32_t>(s)}, mode);
    r.scaled_deviation[s] = dist.scaled_deviation;
    r.irreducible_scaled_deviation[s] = to_double(dist.deviation(irreducible)) * root_q;
    if (dist.scaled_deviation > C) r.flagged.push_back(Elem{static_cast<std::uint32_t>(s)});
  }
  std::vector<double> sorted = r.irreducible_scaled_deviation;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  r.median_irreducible_scaled = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2;
  return r;
}

std::map<Partition, BigInt> full_space_exact(int d, const FieldCtx& field) {
  if (d < 1 || d > 8) throw std::out_of_range("full-space oracle supports 1 <= d <= 8");
  if (field.q() > (1u << 10)) throw std::out_of_range("full-space oracle supports q <= 2^10");
  std::vector<BigInt> irreducibles(d + 1);
  for (int j = 1; j <= d; ++j) irreducibles[j] = count_irreducibles(j, field.q());
  std::map<Partition, BigInt> out;
  for (const Partition& lambda : partitions(d)) {
    std::map<int, int> mult;
    for (int part : lambda.parts()) ++mult[part];
    BigInt count = 1;
    for (auto [j, mj] : mult) count *= binomial(irreducibles[j] + mj - 1, mj);
    out[lambda] = count;
  }
  return out;
}

}  // namespace fqtype
