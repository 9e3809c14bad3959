#include "fqtype/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fqtype/parallel.hpp"

namespace fqtype {

namespace {

constexpr std::size_t kExampleLimit = 20;

BadSetLocus make_locus(UniPoly locus) {
  BadSetLocus out{locus, {}, 0};
  if (locus.degree() >= 1) {
    out.roots_in_field = roots_in_field(locus);
    out.distinct_roots = radical_degree(locus);
  }
  return out;
}

// Res_T(A(T), S + B(T)) as a polynomial in S.
UniPoly resultant_against_shift(const UniPoly& a, const UniPoly& b, bool plus_s) {
  const BiPoly s = BiPoly::x(a.field());
  const BiPoly rhs = plus_s ? s + BiPoly::in_y(b) : s - BiPoly::in_y(b);
  return resultant_y(BiPoly::in_y(a), rhs);
}

void require_degree_two(const UniPoly& f, const char* what) {
  if (f.degree() < 2) throw std::invalid_argument(std::string(what) + " needs a polynomial of degree at least 2");
}

}  // namespace

BadSetBounds bad_set_bounds(int d) { return {d - 2, (d - 1) * (d - 2), d * d - 2 * d, d * d - d - 1}; }

bool is_affine_linearized(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("affine linearized test on the zero polynomial");
  const std::uint64_t p = f.ctx().p();
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].v == 0) continue;
    std::uint64_t e = i;
    while (e % p == 0) e /= p;
    if (e != 1) return false;
  }
  return true;
}

UniPoly critical_value_polynomial(const UniPoly& f) { return resultant_against_shift(derivative(f), f, false); }

bool is_morse(const UniPoly& f) {
  require_degree_two(f, "Morse test");
  const int d = f.degree();
  const UniPoly fp = derivative(f);
  if (fp.degree() != d - 1) return false;
  if (!gcd(fp, derivative(fp)).is_one()) return false;
  const UniPoly crit = critical_value_polynomial(f);
  return crit.degree() == d - 1 && radical_degree(crit) == d - 1;
}

PropKrFlags check_prop_kr(const UniPoly& f) {
  require_degree_two(f, "the f'' and gcd(q, 2d) check");
  const std::uint64_t q = f.ctx().q(), d = static_cast<std::uint64_t>(f.degree());
  return {!derivative(derivative(f)).is_zero(), std::gcd(q, 2 * d) == 1};
}

bool check_thm_duke(int d, const FieldCtx& field) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  const std::uint64_t dd = static_cast<std::uint64_t>(d);
  return std::gcd(static_cast<std::uint64_t>(field.q()), dd * (dd - 1)) == 1;
}

CriterionReport check_main_theorem(const UniPoly& f) {
  require_degree_two(f, "criterion check");
  if (!f.is_monic()) throw std::invalid_argument("criterion check expects a monic polynomial");
  CriterionReport r{f, f.degree(), {}, std::nullopt, false, false, false, 0};
  const int d = r.d;
  const UniPoly fp = derivative(f);
  auto& h = r.hypotheses;
  h.d2f_nonzero = !hasse_derivative(f, 2).is_zero();
  h.deg_fprime_ge_1 = fp.degree() >= 1;
  if (h.deg_fprime_ge_1) {
    const BiPoly F1 = tilde(f) - BiPoly::in_x(fp);
    const BiPoly F2 = tilde(fp);
    r.gcd_polynomial = bipoly_gcd(F1, F2);
    h.gcd_condition = is_power_of_x_minus_y(*r.gcd_polynomial);
  }
  const PropKrFlags kr = check_prop_kr(f);
  h.fprimeprime_nonzero = kr.fprimeprime_nonzero;
  h.q_coprime_2d = kr.q_coprime_2d;
  h.q_coprime_d_dminus1 = check_thm_duke(d, f.ctx());
  r.main_theorem = h.d2f_nonzero && h.deg_fprime_ge_1 && h.gcd_condition;
  r.prop_kr = kr.verdict();
  r.thm_duke = h.q_coprime_d_dminus1;
  r.bad_set_bound = bad_set_bounds(d).total;
  return r;
}

BadSetLocus bad_set_B1(const UniPoly& f) {
  const UniPoly d2 = hasse_derivative(f, 2);
  if (d2.is_zero()) throw std::domain_error("D^2 f vanishes; the B1 locus is undefined");
  return make_locus(resultant_against_shift(d2, derivative(f), true));
}

BadSetLocus bad_set_B2(const UniPoly& f) {
  const UniPoly fp = derivative(f);
  if (fp.degree() < 1) throw std::domain_error("f' is constant; the B2 locus is undefined");
  const BiPoly F1 = tilde(f) - BiPoly::in_x(fp);
  const BiPoly F2 = tilde(fp);
  const UniPoly r = eliminate(F1, F2, Var::y, /*strip_diagonal=*/true);
  return make_locus(resultant_against_shift(r, fp, true));
}

BadSetReport bad_sets(const UniPoly& f, bool with_lemma21) {
  require_degree_two(f, "bad-set computation");
  BadSetReport r{f, bad_set_B1(f), bad_set_B2(f), bad_set_bounds(f.degree()), {}, std::nullopt};
  r.candidates = r.B1.roots_in_field;
  r.candidates.insert(r.candidates.end(), r.B2.roots_in_field.begin(), r.B2.roots_in_field.end());
  std::sort(r.candidates.begin(), r.candidates.end());
  r.candidates.erase(std::unique(r.candidates.begin(), r.candidates.end()), r.candidates.end());
  if (with_lemma21) r.lemma21_bad_s = bad_set_lemma21(f, f.field());
  return r;
}

std::vector<Elem> bad_set_lemma21(const UniPoly& f, const FieldPtr& search_field) {
  if (is_affine_linearized(f)) throw std::invalid_argument("tilde(f) + s degenerates for affine linearized f");
  if (f.degree() > kMaxBivariateDegree) throw std::out_of_range("degree over the bivariate factorization limit");
  const UniPoly g = same_field(f.ctx(), *search_field) ? f : embed(f, field_embedding(f.field(), search_field));
  const BiPoly base = tilde(g);
  const std::uint32_t q = search_field->q();
  std::vector<char> bad(q, 0);
  parallel_for(q, [&](std::size_t n) {
    const BiPoly F = base + BiPoly::constant(search_field, Elem{static_cast<std::uint32_t>(n)});
    bad[n] = !geometrically_irreducible(F);
  });
  std::vector<Elem> out;
  for (std::uint32_t n = 0; n < q; ++n)
    if (bad[n]) out.push_back(Elem{n});
  return out;
}

UniPoly monic_from_index(const FieldPtr& field, int d, std::uint64_t index) {
  std::vector<Elem> c(static_cast<std::size_t>(d) + 1, Elem{0});
  const std::uint64_t q = field->q();
  for (int i = 0; i < d; ++i) {
    c[i] = Elem{static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  c[d] = Elem{1};
  return UniPoly(field, std::move(c));
}

ConjectureScanReport conjecture_scan(const FieldPtr& field, int d_max) {
  if (d_max < 2 || d_max > 8) throw std::out_of_range("conjecture scan supports 2 <= d_max <= 8");
  ConjectureScanReport report;
  report.field = field->spec();
  report.d_max = d_max;
  enum Outcome : char { kChecked, kCounterexample, kSkipped, kSkippedCommon };
  for (int d = 2; d <= d_max; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= field->q();
    std::vector<char> outcome(count, kChecked);
    parallel_for(count, [&](std::size_t n) {
      const UniPoly f = monic_from_index(field, d, n);
      const UniPoly fp = derivative(f);
      const bool hypothesis = !derivative(fp).is_zero();
      bool common = false;
      if (fp.degree() >= 1) {
        const BiPoly g = bipoly_gcd(tilde(f) - BiPoly::in_x(fp), tilde(fp));
        common = g.total_degree() > 0;
      }
      if (hypothesis) {
        outcome[n] = common ? kCounterexample : kChecked;
      } else {
        outcome[n] = common ? kSkippedCommon : kSkipped;
      }
    });
    for (std::uint64_t n = 0; n < count; ++n) {
      ++report.scanned;
      switch (outcome[n]) {
        case kChecked:
          ++report.checked;
          break;
        case kCounterexample:
          ++report.checked;
          report.counterexamples.push_back(monic_from_index(field, d, n));
          break;
        case kSkippedCommon:
          ++report.skipped_with_common_factor;
          if (report.skipped_common_factor_examples.size() < kExampleLimit)
            report.skipped_common_factor_examples.push_back(monic_from_index(field, d, n));
          [[fallthrough]];
        case kSkipped:
          ++report.skipped_by_hypothesis;
          break;
      }
    }
  }
  return report;
}

}  // namespace fqtype
