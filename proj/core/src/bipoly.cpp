#include "fqtype/bipoly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace fqtype {

namespace {

UniPoly zero_like(const FieldPtr& f) { return UniPoly(f); }
UniPoly one_like(const FieldPtr& f) { return UniPoly::constant(f, Elem{1}); }

}  // namespace

BiPoly::BiPoly(FieldPtr field, std::vector<UniPoly> rows) : field_(std::move(field)), rows_(std::move(rows)) {
  for (const auto& r : rows_) require_same_field(*field_, r.ctx());
  trim();
}

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly BiPoly::from_terms(FieldPtr field, const std::vector<Term>& terms) {
  std::vector<std::vector<Elem>> dense;
  const FieldCtx& F = *field;
  for (const auto& t : terms) {
    if (t.c.v >= F.q()) throw std::out_of_range("coefficient encoding outside the field");
    if (dense.size() <= t.j) dense.resize(t.j + 1);
    auto& row = dense[t.j];
    if (row.size() <= t.i) row.resize(t.i + 1, Elem{0});
    row[t.i] = F.add(row[t.i], t.c);
  }
  std::vector<UniPoly> rows;
  rows.reserve(dense.size());
  for (auto& r : dense) rows.emplace_back(field, std::move(r));
  return BiPoly(std::move(field), std::move(rows));
}

BiPoly BiPoly::constant(FieldPtr field, Elem c) {
  auto row = UniPoly::constant(field, c);
  return BiPoly(std::move(field), {std::move(row)});
}

BiPoly BiPoly::x(FieldPtr field) { return in_x(UniPoly::variable(field)); }

BiPoly BiPoly::y(FieldPtr field) {
  return BiPoly(field, {UniPoly(field), one_like(field)});
}

BiPoly BiPoly::in_x(const UniPoly& p) { return BiPoly(p.field(), {p}); }

BiPoly BiPoly::in_y(const UniPoly& p) {
  std::vector<UniPoly> rows;
  rows.reserve(p.coeffs().size());
  for (auto c : p.coeffs()) rows.push_back(UniPoly::constant(p.field(), c));
  return BiPoly(p.field(), std::move(rows));
}

int BiPoly::deg_x() const {
  int d = kDegreeOfZero;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = kDegreeOfZero;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    if (!rows_[j].is_zero()) d = std::max(d, rows_[j].degree() + static_cast<int>(j));
  return d;
}

Elem BiPoly::coeff(unsigned i, unsigned j) const { return j < rows_.size() ? rows_[j].coeff(i) : Elem{0}; }

std::vector<BiPoly::Term> BiPoly::terms() const {
  std::vector<Term> out;
  for (unsigned j = 0; j < rows_.size(); ++j) {
    const auto& c = rows_[j].coeffs();
    for (unsigned i = 0; i < c.size(); ++i)
      if (c[i].v != 0) out.push_back({i, j, c[i]});
  }
  return out;
}

Elem BiPoly::operator()(Elem x0, Elem y0) const { return eval_x(x0)(y0); }

UniPoly BiPoly::eval_x(Elem x0) const {
  std::vector<Elem> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_) c.push_back(r(x0));
  return UniPoly(field_, std::move(c));
}

UniPoly BiPoly::eval_y(Elem y0) const {
  UniPoly acc(field_);
  for (std::size_t j = rows_.size(); j-- > 0;) acc = acc.scaled(y0) + rows_[j];
  return acc;
}

BiPoly BiPoly::operator+(const BiPoly& g) const {
  require_same_field(*field_, *g.field_);
  std::vector<UniPoly> r(std::max(rows_.size(), g.rows_.size()), zero_like(field_));
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (j < rows_.size()) r[j] = r[j] + rows_[j];
    if (j < g.rows_.size()) r[j] = r[j] + g.rows_[j];
  }
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& g) const { return *this + (-g); }

BiPoly BiPoly::operator*(const BiPoly& g) const {
  require_same_field(*field_, *g.field_);
  if (is_zero() || g.is_zero()) return BiPoly(field_);
  std::vector<UniPoly> r(rows_.size() + g.rows_.size() - 1, zero_like(field_));
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (rows_[a].is_zero()) continue;
    for (std::size_t b = 0; b < g.rows_.size(); ++b) r[a + b] += rows_[a] * g.rows_[b];
  }
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::operator-() const {
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(-row);
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::scaled(Elem c) const {
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(row.scaled(c));
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::scaled(const UniPoly& c_of_x) const {
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(row * c_of_x);
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::swap_xy() const {
  std::vector<Term> t = terms();
  for (auto& term : t) std::swap(term.i, term.j);
  return from_terms(field_, t);
}

BiPoly BiPoly::d_dx() const {
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(derivative(row));
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::d_dy() const {
  if (rows_.size() <= 1) return BiPoly(field_);
  std::vector<UniPoly> r;
  r.reserve(rows_.size() - 1);
  for (std::size_t j = 1; j < rows_.size(); ++j) r.push_back(rows_[j].scaled(field_->from_int(static_cast<long long>(j))));
  return BiPoly(field_, std::move(r));
}

BiPoly BiPoly::shift_x(Elem c) const {
  const UniPoly lin(field_, {c, Elem{1}});
  std::vector<UniPoly> r;
  r.reserve(rows_.size());
  for (const auto& row : rows_) r.push_back(compose(row, lin));
  return BiPoly(field_, std::move(r));
}

bool canonical_less(const BiPoly& a, const BiPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto ta = a.terms(), tb = b.terms();
  return std::lexicographical_compare(ta.rbegin(), ta.rend(), tb.rbegin(), tb.rend(),
                                      [](const BiPoly::Term& u, const BiPoly::Term& v) {
                                        if (u.j != v.j) return u.j < v.j;
                                        if (u.i != v.i) return u.i < v.i;
                                        return u.c < v.c;
                                      });
}

BiPoly normalize(const BiPoly& F) {
  if (F.is_zero()) return F;
  const Elem lc = F.leading_coeff();
  if (lc.v == 1) return F;
  return F.scaled(F.ctx().inv(lc));
}

UniPoly content_y(const BiPoly& F) {
  UniPoly g(F.field());
  for (const auto& r : F.rows()) {
    g = gcd(g, r);
    if (g.is_one()) break;
  }
  return g;
}

BiPoly primitive_part_y(const BiPoly& F) {
  if (F.is_zero()) return F;
  const UniPoly c = content_y(F);
  if (c.is_one()) return F;
  std::vector<UniPoly> r;
  r.reserve(F.rows().size());
  for (const auto& row : F.rows()) r.push_back(divide_exact(row, c));
  return BiPoly(F.field(), std::move(r));
}

std::optional<BiPoly> try_divide(const BiPoly& F, const BiPoly& D) {
  require_same_field(F.ctx(), D.ctx());
  if (D.is_zero()) throw std::domain_error("bivariate division by zero");
  if (F.is_zero()) return F;
  const int dd = D.deg_y();
  if (F.deg_y() < dd) return std::nullopt;
  std::vector<UniPoly> rem = F.rows();
  std::vector<UniPoly> quot(F.deg_y() - dd + 1, UniPoly(F.field()));
  const UniPoly& lc = D.rows().back();
  for (int top = F.deg_y(); top >= dd; --top) {
    if (rem[top].is_zero()) continue;
    auto [c, r] = divmod(rem[top], lc);
    if (!r.is_zero()) return std::nullopt;
    const int shift = top - dd;
    quot[shift] = c;
    for (int j = 0; j <= dd; ++j) rem[shift + j] -= c * D.rows()[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return BiPoly(F.field(), std::move(quot));
}

BiPoly tilde(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("difference quotient needs a nonconstant polynomial");
  const int d = f.degree();
  std::vector<UniPoly> rows;
  rows.reserve(d);
  // coefficient of x^u y^v is a_{u+v+1}
  for (int v = 0; v < d; ++v) {
    std::vector<Elem> row(d - v, Elem{0});
    for (int u = 0; u + v + 1 <= d; ++u) row[u] = f.coeff(u + v + 1);
    rows.emplace_back(f.field(), std::move(row));
  }
  return BiPoly(f.field(), std::move(rows));
}

namespace {

using RPoly = std::vector<UniPoly>;  // polynomial in y over F_q[x], trimmed

int rdeg(const RPoly& a) { return static_cast<int>(a.size()) - 1; }

void rtrim(RPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// lc(B)^(deg A - deg B + 1) * A mod B.
RPoly prem(RPoly A, const RPoly& B) {
  const int n = rdeg(B);
  int e = rdeg(A) - n + 1;
  if (e <= 0) return A;
  const UniPoly& lb = B.back();
  while (!A.empty() && rdeg(A) >= n) {
    const UniPoly s = A.back();
    const int shift = rdeg(A) - n;
    for (auto& c : A) c = c * lb;
    for (int j = 0; j <= n; ++j) A[shift + j] -= s * B[j];
    rtrim(A);
    --e;
  }
  if (e > 0) {
    const UniPoly f = pow(lb, static_cast<unsigned>(e));
    for (auto& c : A) c = c * f;
  }
  return A;
}

RPoly rdiv_exact(RPoly A, const UniPoly& c) {
  if (c.is_one()) return A;
  for (auto& a : A) a = divide_exact(a, c);
  return A;
}

UniPoly rcontent(const RPoly& A) {
  UniPoly g(A.front().field());
  for (const auto& r : A) {
    g = gcd(g, r);
    if (g.is_one()) break;
  }
  return g;
}

// Subresultant remainder sequence; returns the last nonzero remainder (or a
// constant in y when the sequence ends in one).
RPoly subresultant_last(RPoly A, RPoly B) {
  const FieldPtr& field = A.front().field();
  UniPoly g = one_like(field), h = one_like(field);
  for (;;) {
    const int delta = rdeg(A) - rdeg(B);
    RPoly R = prem(A, B);
    if (R.empty()) return B;
    if (rdeg(R) == 0) return R;
    A = std::move(B);
    B = rdiv_exact(std::move(R), g * pow(h, static_cast<unsigned>(delta)));
    g = A.back();
    if (delta > 0) h = divide_exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
  }
}

}  // namespace

BiPoly bipoly_gcd(const BiPoly& F, const BiPoly& G) {
  require_same_field(F.ctx(), G.ctx());
  if (F.is_zero() && G.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (F.is_zero()) return normalize(G);
  if (G.is_zero()) return normalize(F);
  const FieldPtr& field = F.field();
  const UniPoly cF = content_y(F), cG = content_y(G);
  const UniPoly c = gcd(cF, cG);
  RPoly A = rdiv_exact(F.rows(), cF), B = rdiv_exact(G.rows(), cG);
  if (rdeg(A) < rdeg(B)) std::swap(A, B);
  BiPoly prim = BiPoly::constant(field, Elem{1});
  if (rdeg(B) > 0) {
    RPoly last = subresultant_last(std::move(A), std::move(B));
    if (rdeg(last) > 0) prim = primitive_part_y(BiPoly(field, std::move(last)));
  }
  return normalize(prim.scaled(c));
}

std::pair<BiPoly, int> strip_x_minus_y(const BiPoly& F) {
  if (F.is_zero()) throw std::invalid_argument("cannot strip (x - y) from the zero polynomial");
  const BiPoly diag = BiPoly::x(F.field()) - BiPoly::y(F.field());
  BiPoly rest = F;
  int m = 0;
  while (rest.total_degree() > 0) {
    auto q = try_divide(rest, diag);
    if (!q) break;
    rest = std::move(*q);
    ++m;
  }
  return {rest, m};
}

bool is_power_of_x_minus_y(const BiPoly& F) {
  if (F.is_zero()) throw std::invalid_argument("zero polynomial is not a power of (x - y)");
  return strip_x_minus_y(F).first.total_degree() == 0;
}

UniPoly resultant_y(const BiPoly& F, const BiPoly& G) {
  require_same_field(F.ctx(), G.ctx());
  if (F.is_zero() && G.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  const FieldPtr& field = F.field();
  if (F.is_zero() || G.is_zero()) return UniPoly(field);
  RPoly A = F.rows(), B = G.rows();
  if (rdeg(A) == 0) return pow(A[0], static_cast<unsigned>(rdeg(B)));
  if (rdeg(B) == 0) return pow(B[0], static_cast<unsigned>(rdeg(A)));

  const UniPoly a = rcontent(A), b = rcontent(B);
  A = rdiv_exact(std::move(A), a);
  B = rdiv_exact(std::move(B), b);
  UniPoly g = one_like(field), h = one_like(field);
  bool negate = false;
  const UniPoly t = pow(a, static_cast<unsigned>(rdeg(B))) * pow(b, static_cast<unsigned>(rdeg(A)));
  if (rdeg(A) < rdeg(B)) {
    std::swap(A, B);
    if ((rdeg(A) & 1) && (rdeg(B) & 1)) negate = true;
  }
  for (;;) {
    const int delta = rdeg(A) - rdeg(B);
    if ((rdeg(A) & 1) && (rdeg(B) & 1)) negate = !negate;
    RPoly R = prem(A, B);
    A = std::move(B);
    B = R.empty() ? RPoly{} : rdiv_exact(std::move(R), g * pow(h, static_cast<unsigned>(delta)));
    g = A.back();
    if (delta > 0) h = divide_exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    if (rdeg(B) <= 0) break;
  }
  if (B.empty()) return UniPoly(field);
  const int da = rdeg(A);
  h = divide_exact(pow(B[0], static_cast<unsigned>(da)), pow(h, static_cast<unsigned>(da - 1)));
  UniPoly result = t * h;
  return negate ? -result : result;
}

UniPoly eliminate(const BiPoly& F, const BiPoly& G, Var var, bool strip_diagonal) {
  BiPoly A = F, B = G;
  if (strip_diagonal) {
    A = strip_x_minus_y(A).first;
    B = strip_x_minus_y(B).first;
  }
  if (var == Var::x) {
    A = A.swap_xy();
    B = B.swap_xy();
  }
  UniPoly r = resultant_y(A, B);
  if (r.is_zero()) throw std::domain_error("resultant vanishes identically: the inputs share a common factor");
  return r;
}

// ---------------------------------------------------------------------------
// Extension fields and embeddings

FieldPtr extension_field(const FieldPtr& base, unsigned t) {
  if (t == 1) return base;
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  const auto key = std::make_pair(base->p(), base->k() * t);
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldPtr f = mk_field(key.first, key.second);
  cache.emplace(key, f);
  return f;
}

const Embedding& field_embedding(const FieldPtr& source, const FieldPtr& target) {
  using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, Key>, std::unique_ptr<Embedding>> cache;
  auto key = std::make_pair(source->p(), Key{source->modulus(), target->modulus()});
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto emb = std::make_unique<Embedding>(source, target);
  const Embedding& ref = *emb;
  cache.emplace(std::move(key), std::move(emb));
  return ref;
}

UniPoly embed(const UniPoly& f, const Embedding& e) {
  require_same_field(f.ctx(), *e.source());
  std::vector<Elem> c;
  c.reserve(f.coeffs().size());
  for (auto a : f.coeffs()) c.push_back(e.map(a));
  return UniPoly(e.target(), std::move(c));
}

BiPoly embed(const BiPoly& F, const Embedding& e) {
  std::vector<UniPoly> rows;
  rows.reserve(F.rows().size());
  for (const auto& r : F.rows()) rows.push_back(embed(r, e));
  return BiPoly(e.target(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Bivariate factorization

namespace {

// Power series in x with coefficients polynomials in y: s[t] = coefficient of x^t.
using Series = std::vector<UniPoly>;

Series series_mul(const Series& a, const Series& b, std::size_t prec) {
  const FieldPtr& field = a.front().field();
  Series r(prec, UniPoly(field));
  for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < prec; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// x-adic expansion of F truncated at prec.
Series to_series(const BiPoly& F, std::size_t prec) {
  Series s(prec, UniPoly(F.field()));
  std::vector<std::vector<Elem>> dense(prec);
  for (const auto& t : F.terms()) {
    if (t.i >= prec) continue;
    auto& row = dense[t.i];
    if (row.size() <= t.j) row.resize(t.j + 1, Elem{0});
    row[t.j] = t.c;
  }
  for (std::size_t i = 0; i < prec; ++i) s[i] = UniPoly(F.field(), std::move(dense[i]));
  return s;
}

BiPoly from_series(const Series& s) {
  std::vector<BiPoly::Term> terms;
  for (unsigned i = 0; i < s.size(); ++i) {
    const auto& c = s[i].coeffs();
    for (unsigned j = 0; j < c.size(); ++j)
      if (c[j].v != 0) terms.push_back({i, j, c[j]});
  }
  return BiPoly::from_terms(s.front().field(), terms);
}

// Inverse of a power series c(x) with c(0) != 0, modulo x^prec.
std::vector<Elem> series_inverse(const FieldCtx& F, const UniPoly& c, std::size_t prec) {
  std::vector<Elem> inv(prec, Elem{0});
  const Elem c0inv = F.inv(c.coeff(0));
  inv[0] = c0inv;
  for (std::size_t n = 1; n < prec; ++n) {
    Elem acc{0};
    for (std::size_t i = 1; i <= n; ++i) acc = F.add(acc, F.mul(c.coeff(i), inv[n - i]));
    inv[n] = F.neg(F.mul(acc, c0inv));
  }
  return inv;
}

bool good_point(const BiPoly& F, const UniPoly& lc, Elem x0) {
  if (lc(x0).v == 0) return false;
  const UniPoly f0 = F.eval_x(x0);
  return gcd(f0, derivative(f0)).is_one();
}

std::optional<Elem> find_good_point(const BiPoly& F) {
  const UniPoly lc = F.lead_y();
  for (std::uint32_t n = 0; n < F.ctx().q(); ++n)
    if (good_point(F, lc, Elem{n})) return Elem{n};
  return std::nullopt;
}

// F primitive in y, squarefree and separable in y, with a good point x0:
// F(x0, y) squarefree of full degree.
std::vector<BiPoly> lift_and_recombine(const BiPoly& F, Elem x0, std::uint64_t seed) {
  const FieldPtr& field = F.field();
  const FieldCtx& K = *field;
  const BiPoly G = F.shift_x(x0);
  const UniPoly lcG = G.lead_y();
  const UniPoly g0 = monic(G.eval_x(Elem{0}));
  const Factorization fac = factorize(g0, seed);
  const std::size_t r = fac.factors.size();
  if (r == 1) return {normalize(F)};

  const std::size_t prec = static_cast<std::size_t>(lcG.degree() + G.deg_x() + 1);
  // Monic target M = G / lc(G) as a series in x.
  const auto lc_inv = series_inverse(K, lcG, prec);
  Series inv(prec, UniPoly(field));
  for (std::size_t i = 0; i < prec; ++i) inv[i] = UniPoly::constant(field, lc_inv[i]);
  const Series target = series_mul(to_series(G, prec), inv, prec);

  std::vector<UniPoly> base;
  for (const auto& [g, e] : fac.factors) base.push_back(g);
  // Bezout data: sum s_i * (g0 / g_i) = 1 with deg s_i < deg g_i.
  std::vector<UniPoly> cofactor_inv(r, UniPoly(field));
  for (std::size_t i = 0; i < r; ++i) {
    const UniPoly h = divide_exact(g0, base[i]);
    cofactor_inv[i] = extended_gcd(h, base[i]).u % base[i];
  }
  std::vector<Series> lifted(r, Series(prec, UniPoly(field)));
  for (std::size_t i = 0; i < r; ++i) lifted[i][0] = base[i];

  for (std::size_t t = 1; t < prec; ++t) {
    Series prod = lifted[0];
    prod.resize(t + 1, UniPoly(field));
    for (std::size_t i = 1; i < r; ++i) prod = series_mul(prod, lifted[i], t + 1);
    const UniPoly err = target[t] - prod[t];
    if (err.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) lifted[i][t] = (err * cofactor_inv[i]) % base[i];
  }

  // Recombination: lc(G) * prod(subset) mod x^prec, made primitive, tried as a divisor.
  std::vector<std::size_t> active(r);
  for (std::size_t i = 0; i < r; ++i) active[i] = i;
  BiPoly rest = G;
  std::vector<BiPoly> found;
  std::size_t size = 1;
  while (2 * size <= active.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      Series acc(prec, UniPoly(field));
      const UniPoly lc_rest = rest.lead_y();
      for (std::size_t i = 0; i < prec; ++i) acc[i] = UniPoly::constant(field, lc_rest.coeff(i));
      for (auto idx : pick) acc = series_mul(acc, lifted[active[idx]], prec);
      const BiPoly cand = primitive_part_y(from_series(acc));
      if (cand.deg_y() > 0) {
        if (auto q = try_divide(rest, cand)) {
          found.push_back(cand);
          rest = std::move(*q);
          for (std::size_t i = size; i-- > 0;) active.erase(active.begin() + static_cast<long>(pick[i]));
          hit = true;
          break;
        }
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == active.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!hit) ++size;
  }
  if (rest.deg_y() > 0) found.push_back(primitive_part_y(rest));

  std::vector<BiPoly> out;
  out.reserve(found.size());
  for (const auto& h : found) out.push_back(normalize(h.shift_x(K.neg(x0))));
  return out;
}

BiPoly frobenius_coeffs(const BiPoly& F, unsigned power) {
  const FieldCtx& K = F.ctx();
  std::vector<BiPoly::Term> t = F.terms();
  for (auto& term : t) term.c = K.frobenius(term.c, power);
  return BiPoly::from_terms(F.field(), t);
}

BiPoly restrict_coeffs(const BiPoly& F, const Embedding& e) {
  std::vector<BiPoly::Term> t = F.terms();
  for (auto& term : t) {
    auto pre = e.restrict(term.c);
    if (!pre) throw std::logic_error("Galois orbit product has coefficients outside the base field");
    term.c = *pre;
  }
  return BiPoly::from_terms(e.source(), t);
}

// Irreducible factors of F: primitive, squarefree, separable in y.
std::vector<BiPoly> hensel_factor(const BiPoly& F, std::uint64_t seed) {
  if (F.deg_y() <= 1) return {normalize(F)};
  if (auto x0 = find_good_point(F)) return lift_and_recombine(F, *x0, seed);

  // No usable specialization point in the base field: factor over an
  // extension and multiply Galois orbits back together.
  const FieldPtr& base = F.field();
  for (unsigned e = 2;; ++e) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < base->k() * e; ++i) size *= base->p();
    if (size > kMaxFieldSize) throw std::out_of_range("no specialization point within the supported field sizes");
    const FieldPtr ext = extension_field(base, e);
    const Embedding& emb = field_embedding(base, ext);
    const BiPoly Fe = embed(F, emb);
    auto x0 = find_good_point(Fe);
    if (!x0) continue;
    std::vector<BiPoly> pieces = lift_and_recombine(Fe, *x0, seed);
    std::vector<BiPoly> out;
    std::vector<bool> used(pieces.size(), false);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (used[i]) continue;
      BiPoly prod = pieces[i];
      used[i] = true;
      BiPoly cur = normalize(frobenius_coeffs(pieces[i], base->k()));
      while (!(cur == pieces[i])) {
        auto it = std::find(pieces.begin(), pieces.end(), cur);
        if (it == pieces.end()) throw std::logic_error("conjugate factor missing from the extension factorization");
        used[static_cast<std::size_t>(it - pieces.begin())] = true;
        prod = prod * cur;
        cur = normalize(frobenius_coeffs(cur, base->k()));
      }
      out.push_back(normalize(restrict_coeffs(prod, emb)));
    }
    return out;
  }
}

BiPoly divide_by_x_content(const BiPoly& F, const UniPoly& c) {
  std::vector<UniPoly> rows;
  for (const auto& r : F.rows()) rows.push_back(divide_exact(r, c));
  return BiPoly(F.field(), std::move(rows));
}

BiPoly pth_root_bi(const BiPoly& F) {
  const FieldCtx& K = F.ctx();
  std::vector<BiPoly::Term> t = F.terms();
  for (auto& term : t) {
    if (term.i % K.p() || term.j % K.p()) throw std::logic_error("bivariate polynomial is not a p-th power");
    term.i /= K.p();
    term.j /= K.p();
    term.c = K.pth_root(term.c);
  }
  return BiPoly::from_terms(F.field(), t);
}

void add_unique(std::vector<BiPoly>& out, BiPoly f) {
  f = normalize(f);
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
}

void distinct_factors(const BiPoly& input, std::uint64_t seed, std::vector<BiPoly>& out) {
  if (input.total_degree() <= 0) return;
  BiPoly F = input;
  const UniPoly cx = content_y(F);
  if (cx.degree() > 0) {
    for (const auto& [g, e] : factorize(cx, seed).factors) add_unique(out, BiPoly::in_x(g));
    F = divide_by_x_content(F, cx);
  }
  const UniPoly cy = content_y(F.swap_xy());
  if (cy.degree() > 0) {
    for (const auto& [g, e] : factorize(cy, seed).factors) add_unique(out, BiPoly::in_y(g));
    F = *try_divide(F, BiPoly::in_y(cy));
  }
  if (F.total_degree() <= 0) return;

  const BiPoly Fy = F.d_dy();
  if (!Fy.is_zero()) {
    const BiPoly g = bipoly_gcd(F, Fy);
    if (g.total_degree() > 0) {
      distinct_factors(g, seed, out);
      distinct_factors(*try_divide(F, g), seed, out);
    } else {
      for (auto& h : hensel_factor(F, seed)) add_unique(out, std::move(h));
    }
    return;
  }
  if (!F.d_dx().is_zero()) {
    std::vector<BiPoly> swapped;
    distinct_factors(F.swap_xy(), seed, swapped);
    for (const auto& h : swapped) add_unique(out, h.swap_xy());
    return;
  }
  distinct_factors(pth_root_bi(F), seed, out);
}

}  // namespace

std::vector<std::pair<BiPoly, int>> bivariate_factorize(const BiPoly& F, std::uint64_t seed) {
  if (F.total_degree() < 1) throw std::invalid_argument("bivariate factorization needs a nonconstant polynomial");
  if (F.total_degree() > kMaxBivariateDegree) {
    throw std::out_of_range("bivariate factorization is limited to total degree " + std::to_string(kMaxBivariateDegree));
  }
  std::vector<BiPoly> irreducibles;
  distinct_factors(F, seed, irreducibles);
  std::sort(irreducibles.begin(), irreducibles.end(), [](const BiPoly& a, const BiPoly& b) { return canonical_less(a, b); });
  std::vector<std::pair<BiPoly, int>> out;
  for (auto& h : irreducibles) {
    int m = 0;
    BiPoly rest = F;
    while (auto q = try_divide(rest, h)) {
      rest = std::move(*q);
      ++m;
    }
    if (m == 0) throw std::logic_error("computed factor does not divide the input");
    out.emplace_back(std::move(h), m);
  }
  return out;
}

bool geometrically_irreducible(const BiPoly& F) {
  const int D = F.total_degree();
  if (D < 1) throw std::invalid_argument("geometric irreducibility needs a nonconstant polynomial");
  if (D > kMaxBivariateDegree) {
    throw std::out_of_range("geometric irreducibility is limited to total degree " + std::to_string(kMaxBivariateDegree));
  }
  auto single = [](const std::vector<std::pair<BiPoly, int>>& f) { return f.size() == 1 && f[0].second == 1; };
  if (!single(bivariate_factorize(F))) return false;
  // An F_q-irreducible F splitting into r conjugates over the closure already
  // splits over F_{q^t} for any prime t dividing r, and r <= D.
  for (unsigned t = 2; t <= static_cast<unsigned>(D); ++t) {
    if (!is_prime(t)) continue;
    const FieldPtr ext = extension_field(F.field(), t);
    if (!single(bivariate_factorize(embed(F, field_embedding(F.field(), ext))))) return false;
  }
  return true;
}

}  // namespace fqtype
