#include "fqtype/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fqtype/rng.hpp"

namespace fqtype {

namespace {

using Coeffs = std::vector<Elem>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
}

Coeffs vmul(const FieldCtx& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, Elem{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

// In-place remainder of a modulo nonzero m; optionally collects the quotient.
void vrem(const FieldCtx& F, Coeffs& a, const Coeffs& m, Coeffs* quot = nullptr) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  if (quot) quot->assign(a.size() >= m.size() ? a.size() - dm : 0, Elem{0});
  if (a.size() < m.size()) return;
  const Elem li = F.inv(m.back());
  const bool monic = m.back().v == 1;
  for (std::size_t top = a.size(); top-- > dm;) {
    const Elem c = monic ? a[top] : F.mul(a[top], li);
    if (c.v == 0) continue;
    const std::size_t shift = top - dm;
    if (quot) (*quot)[shift] = c;
    const Elem nc = F.neg(c);
    for (std::size_t i = 0; i < dm; ++i) a[shift + i] = F.add(a[shift + i], F.mul(nc, m[i]));
    a[top] = Elem{0};
  }
  trim(a);
}

Coeffs vmulmod(const FieldCtx& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  Coeffs r = vmul(F, a, b);
  vrem(F, r, m);
  return r;
}

Coeffs vgcd(const FieldCtx& F, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    vrem(F, a, b);
    std::swap(a, b);
  }
  if (!a.empty() && a.back().v != 1) {
    const Elem li = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, li);
  }
  return a;
}

Coeffs vsub(const FieldCtx& F, Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), Elem{0});
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

// Frobenius h -> h^q modulo a fixed modulus f, as a linear map: row j holds T^(qj) mod f.
class FrobeniusMap {
 public:
  FrobeniusMap(const FieldCtx& F, const Coeffs& f) : F_(F), f_(f) {
    const std::size_t n = f.size() - 1;
    rows_.resize(n);
    rows_[0] = Coeffs{Elem{1}};
    if (n == 1) {
      vrem(F, rows_[0], f);
      return;
    }
    Coeffs xq = powmod_t(F.q());
    for (std::size_t j = 1; j < n; ++j) rows_[j] = vmulmod(F, rows_[j - 1], xq, f);
  }

  Coeffs apply(const Coeffs& h) const {
    const std::size_t n = f_.size() - 1;
    Coeffs r(n, Elem{0});
    for (std::size_t j = 0; j < h.size() && j < n; ++j) {
      if (h[j].v == 0) continue;
      const Coeffs& row = rows_[j];
      for (std::size_t i = 0; i < row.size(); ++i) r[i] = F_.add(r[i], F_.mul(h[j], row[i]));
    }
    trim(r);
    return r;
  }

 private:
  Coeffs powmod_t(std::uint64_t e) const {
    Coeffs base{Elem{0}, Elem{1}}, r{Elem{1}};
    vrem(F_, base, f_);
    while (e) {
      if (e & 1) r = vmulmod(F_, r, base, f_);
      e >>= 1;
      if (e) base = vmulmod(F_, base, base, f_);
    }
    return r;
  }

  const FieldCtx& F_;
  Coeffs f_;
  std::vector<Coeffs> rows_;
};

std::vector<std::pair<int, Coeffs>> ddf(const FieldCtx& F, const Coeffs& f) {
  std::vector<std::pair<int, Coeffs>> out;
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return out;
  if (n == 1) {
    out.emplace_back(1, f);
    return out;
  }
  FrobeniusMap frob(F, f);
  Coeffs rest = f;
  Coeffs h{Elem{0}, Elem{1}};
  const Coeffs t{Elem{0}, Elem{1}};
  for (int i = 1; 2 * i <= static_cast<int>(rest.size()) - 1; ++i) {
    h = frob.apply(h);
    Coeffs g = vgcd(F, rest, vsub(F, h, t));
    if (g.size() > 1) {
      Coeffs q;
      vrem(F, rest, g, &q);
      rest = std::move(q);
      trim(rest);
      out.emplace_back(i, std::move(g));
    }
  }
  if (rest.size() > 1) out.emplace_back(static_cast<int>(rest.size()) - 1, std::move(rest));
  return out;
}

// Splits g, a product of distinct monic irreducibles of degree i.
void edf(const FieldCtx& F, const Coeffs& g, int i, KeyedRng& rng, std::vector<Coeffs>& out) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n == i) {
    out.push_back(g);
    return;
  }
  for (;;) {
    Coeffs a(n, Elem{0});
    for (auto& c : a) c = Elem{static_cast<std::uint32_t>(rng.below(F.q()))};
    trim(a);
    if (a.size() < 2) continue;
    Coeffs b;
    if (F.p() == 2) {
      // Absolute trace to F_2 of a in F_{2^(k i)}: a + a^2 + ... + a^(2^(ki-1)).
      const unsigned terms = F.k() * static_cast<unsigned>(i);
      Coeffs cur = a;
      b = a;
      for (unsigned j = 1; j < terms; ++j) {
        cur = vmulmod(F, cur, cur, g);
        if (b.size() < cur.size()) b.resize(cur.size(), Elem{0});
        for (std::size_t t = 0; t < cur.size(); ++t) b[t] = F.add(b[t], cur[t]);
        trim(b);
      }
    } else {
      // a^((q^i - 1)/2) = (a^(1 + q + ... + q^(i-1)))^((q-1)/2).
      FrobeniusMap frob(F, g);
      Coeffs norm = a, cur = a;
      for (int j = 1; j < i; ++j) {
        cur = frob.apply(cur);
        norm = vmulmod(F, norm, cur, g);
      }
      std::uint64_t e = (F.q() - 1) / 2;
      Coeffs r{Elem{1}};
      while (e) {
        if (e & 1) r = vmulmod(F, r, norm, g);
        e >>= 1;
        if (e) norm = vmulmod(F, norm, norm, g);
      }
      b = vsub(F, r, Coeffs{Elem{1}});
    }
    Coeffs d = vgcd(F, g, b);
    const int dd = static_cast<int>(d.size()) - 1;
    if (dd > 0 && dd < n) {
      Coeffs q = g;
      Coeffs quot;
      vrem(F, q, d, &quot);
      trim(quot);
      edf(F, d, i, rng, out);
      edf(F, quot, i, rng, out);
      return;
    }
  }
}

std::vector<std::uint32_t> raw_words(const Coeffs& c) {
  std::vector<std::uint32_t> w(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) w[i] = c[i].v;
  return w;
}

}  // namespace

UniPoly::UniPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (c.v >= field_->q()) throw std::out_of_range("coefficient encoding outside the field");
  trim();
}

void UniPoly::trim() { fqtype::trim(coeffs_); }

UniPoly UniPoly::constant(FieldPtr field, Elem c) { return UniPoly(std::move(field), {c}); }

UniPoly UniPoly::monomial(FieldPtr field, Elem c, std::size_t e) {
  std::vector<Elem> v(e + 1, Elem{0});
  v[e] = c;
  return UniPoly(std::move(field), std::move(v));
}

UniPoly UniPoly::from_encodings(FieldPtr field, const std::vector<std::uint64_t>& encodings) {
  std::vector<Elem> v;
  v.reserve(encodings.size());
  for (auto n : encodings) v.push_back(field->from_encoding(n));
  return UniPoly(std::move(field), std::move(v));
}

std::vector<std::uint32_t> UniPoly::encodings() const { return raw_words(coeffs_); }

Elem UniPoly::operator()(Elem x) const {
  const FieldCtx& F = *field_;
  Elem acc{0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs_[i]);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& g) const {
  require_same_field(*field_, *g.field_);
  const FieldCtx& F = *field_;
  std::vector<Elem> r(std::max(coeffs_.size(), g.coeffs_.size()), Elem{0});
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(i), g.coeff(i));
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& g) const {
  require_same_field(*field_, *g.field_);
  return UniPoly(field_, vsub(*field_, coeffs_, g.coeffs_));
}

UniPoly UniPoly::operator*(const UniPoly& g) const {
  require_same_field(*field_, *g.field_);
  return UniPoly(field_, vmul(*field_, coeffs_, g.coeffs_));
}

UniPoly UniPoly::operator-() const {
  std::vector<Elem> r(coeffs_);
  for (auto& c : r) c = field_->neg(c);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scaled(Elem c) const {
  std::vector<Elem> r(coeffs_);
  for (auto& x : r) x = field_->mul(x, c);
  return UniPoly(field_, std::move(r));
}

bool canonical_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  require_same_field(f.ctx(), g.ctx());
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  Coeffs r = f.coeffs(), q;
  vrem(f.ctx(), r, g.coeffs(), &q);
  return {UniPoly(f.field(), std::move(q)), UniPoly(f.field(), std::move(r))};
}

UniPoly operator/(const UniPoly& f, const UniPoly& g) { return divmod(f, g).first; }
UniPoly operator%(const UniPoly& f, const UniPoly& g) { return divmod(f, g).second; }

UniPoly divide_exact(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  require_same_field(f.ctx(), g.ctx());
  return UniPoly(f.field(), vgcd(f.ctx(), f.coeffs(), g.coeffs()));
}

ExtendedGcd extended_gcd(const UniPoly& f, const UniPoly& g) {
  require_same_field(f.ctx(), g.ctx());
  const auto& field = f.field();
  UniPoly r0 = f, r1 = g;
  UniPoly u0 = UniPoly::constant(field, Elem{1}), u1(field);
  UniPoly v0(field), v1 = UniPoly::constant(field, Elem{1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    u0 = std::exchange(u1, u0 - q * u1);
    v0 = std::exchange(v1, v0 - q * v1);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const Elem li = field->inv(r0.lead());
  return {r0.scaled(li), u0.scaled(li), v0.scaled(li)};
}

UniPoly monic(const UniPoly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return f.scaled(f.ctx().inv(f.lead()));
}

UniPoly derivative(const UniPoly& f) { return hasse_derivative(f, 1); }

UniPoly compose(const UniPoly& f, const UniPoly& g) {
  require_same_field(f.ctx(), g.ctx());
  UniPoly acc(f.field());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * g + UniPoly::constant(f.field(), f.coeffs()[i]);
  return acc;
}

UniPoly shift(const UniPoly& f, Elem s, Elem b) {
  const FieldCtx& F = f.ctx();
  std::vector<Elem> c = f.coeffs();
  if (c.size() < 2) c.resize(2, Elem{0});
  c[1] = F.add(c[1], s);
  c[0] = F.add(c[0], b);
  return UniPoly(f.field(), std::move(c));
}

UniPoly pow(const UniPoly& f, unsigned e) {
  UniPoly r = UniPoly::constant(f.field(), Elem{1}), b = f;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) {
  require_same_field(a.ctx(), m.ctx());
  if (m.is_zero()) throw std::domain_error("reduction modulo zero polynomial");
  return UniPoly(a.field(), vmulmod(a.ctx(), a.coeffs(), b.coeffs(), m.coeffs()));
}

UniPoly powmod(const UniPoly& a, std::uint64_t e, const UniPoly& m) {
  UniPoly r = UniPoly::constant(a.field(), Elem{1}) % m, b = a % m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return r;
}

std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t r, std::uint32_t p) {
  std::uint64_t result = 1;
  while (n || r) {
    const std::uint64_t ni = n % p, ri = r % p;
    if (ri > ni) return 0;
    // binom(ni, ri) with ni < p: numerator and denominator are units mod p.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t t = 0; t < ri; ++t) {
      num = num * ((ni - t) % p) % p;
      den = den * ((t + 1) % p) % p;
    }
    std::uint64_t inv = 1, b = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    r /= p;
  }
  return static_cast<std::uint32_t>(result);
}

UniPoly hasse_derivative(const UniPoly& f, unsigned j) {
  const FieldCtx& F = f.ctx();
  const auto& c = f.coeffs();
  if (c.size() <= j) return UniPoly(f.field());
  std::vector<Elem> r(c.size() - j, Elem{0});
  for (std::size_t i = j; i < c.size(); ++i) {
    if (c[i].v == 0) continue;
    r[i - j] = F.mul(c[i], F.from_int(binomial_mod_p(i, j, F.p())));
  }
  return UniPoly(f.field(), std::move(r));
}

int root_multiplicity(const UniPoly& f, Elem alpha) {
  if (f.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
  int m = 0;
  while (m <= f.degree() && hasse_derivative(f, static_cast<unsigned>(m))(alpha).v == 0) ++m;
  return m;
}

UniPoly pth_root(const UniPoly& f) {
  const FieldCtx& F = f.ctx();
  const auto& c = f.coeffs();
  if (c.empty()) return f;
  std::vector<Elem> r(c.size() / F.p() + 1, Elem{0});
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].v == 0) continue;
    if (i % F.p() != 0) throw std::invalid_argument("polynomial is not a p-th power");
    r[i / F.p()] = F.pth_root(c[i]);
  }
  return UniPoly(f.field(), std::move(r));
}

namespace {

void sfd_into(const UniPoly& f, int scale, std::vector<std::pair<UniPoly, int>>& out) {
  if (f.degree() <= 0) return;
  const int p = static_cast<int>(f.ctx().p());
  UniPoly d = derivative(f);
  if (d.is_zero()) {
    sfd_into(pth_root(f), scale * p, out);
    return;
  }
  UniPoly c = gcd(f, d);
  UniPoly w = divide_exact(f, c);
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly fac = divide_exact(w, y);
    if (fac.degree() > 0) out.emplace_back(std::move(fac), i * scale);
    c = divide_exact(c, y);
    w = std::move(y);
    ++i;
  }
  if (c.degree() > 0) sfd_into(pth_root(c), scale * p, out);
}

}  // namespace

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  sfd_into(monic(f), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

int radical_degree(const UniPoly& f) {
  int total = 0;
  for (const auto& [part, e] : squarefree_decomposition(f)) total += part.degree();
  return total;
}

bool is_squarefree(const UniPoly& f) { return radical_degree(f) == f.degree(); }

std::vector<std::pair<int, UniPoly>> distinct_degree_factorization(const UniPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("distinct-degree factorization needs a monic input");
  std::vector<std::pair<int, UniPoly>> out;
  for (auto& [i, g] : ddf(f.ctx(), f.coeffs())) out.emplace_back(i, UniPoly(f.field(), std::move(g)));
  return out;
}

Factorization factorize(const UniPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  Factorization result{f.lead(), {}};
  if (f.degree() == 0) return result;
  const FieldCtx& F = f.ctx();
  const UniPoly m = monic(f);
  KeyedRng rng(seed, m.encodings());
  for (const auto& [part, e] : squarefree_decomposition(m)) {
    for (auto& [i, g] : ddf(F, part.coeffs())) {
      std::vector<Coeffs> pieces;
      edf(F, g, i, rng, pieces);
      for (auto& piece : pieces) result.factors.emplace_back(UniPoly(f.field(), std::move(piece)), e);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return result;
}

std::vector<Elem> roots_in_field(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Elem> roots;
  if (f.degree() <= 0) return roots;
  const FieldCtx& F = f.ctx();
  const UniPoly m = monic(f);
  const UniPoly t = UniPoly::variable(f.field());
  UniPoly split = gcd(m, powmod(t, F.q(), m) - t);
  if (split.degree() <= 0) return roots;
  KeyedRng rng(0, split.encodings());
  std::vector<Coeffs> linear;
  edf(F, split.coeffs(), 1, rng, linear);
  for (const auto& l : linear) roots.push_back(F.neg(l[0]));
  std::sort(roots.begin(), roots.end());
  return roots;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_) {
    if (x < 1) throw std::invalid_argument("partition parts must be positive");
    total_ += x;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) {
    try {
      parts.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition '" + text + "'");
    }
  }
  return Partition(std::move(parts));
}

Partition factorization_type(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("factorization type needs a nonconstant polynomial");
  std::vector<int> parts;
  for (const auto& [part, e] : squarefree_decomposition(f)) {
    for (const auto& [i, g] : ddf(f.ctx(), part.coeffs())) {
      const int count = (static_cast<int>(g.size()) - 1) / i;
      for (int c = 0; c < count * e; ++c) parts.push_back(i);
    }
  }
  return Partition(std::move(parts));
}

Partition factorization_type(const Factorization& fac) {
  std::vector<int> parts;
  for (const auto& [g, e] : fac.factors)
    for (int c = 0; c < e; ++c) parts.push_back(g.degree());
  return Partition(std::move(parts));
}

Elem resultant(const UniPoly& f, const UniPoly& g) {
  require_same_field(f.ctx(), g.ctx());
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  const FieldCtx& F = f.ctx();
  if (f.is_zero() || g.is_zero()) return Elem{0};
  Coeffs a = f.coeffs(), b = g.coeffs();
  Elem acc{1};
  for (;;) {
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    if (m == 0) return F.mul(acc, F.pow(a[0], n));
    if (n == 0) return F.mul(acc, F.pow(b[0], m));
    // Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r), r = a mod b.
    Coeffs r = a;
    vrem(F, r, b);
    if (r.empty()) return Elem{0};
    if ((m & 1) && (n & 1)) acc = F.neg(acc);
    acc = F.mul(acc, F.pow(b.back(), m - (r.size() - 1)));
    a = std::move(b);
    b = std::move(r);
  }
}

Elem discriminant(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant needs a nonconstant polynomial");
  const FieldCtx& F = f.ctx();
  const int n = f.degree();
  if (n == 1) return Elem{1};
  const UniPoly d = derivative(f);
  if (d.is_zero()) return Elem{0};
  Elem r = resultant(f, d);
  r = F.mul(r, F.pow(f.lead(), static_cast<std::uint64_t>(n - 1 - d.degree())));
  r = F.div(r, f.lead());
  if ((static_cast<long long>(n) * (n - 1) / 2) % 2 == 1) r = F.neg(r);
  return r;
}

int mobius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

BigInt count_irreducibles(int d, std::uint64_t q) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  BigInt sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(e);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d / e));
    sum += mu > 0 ? term : BigInt(-term);
  }
  return sum / d;
}

}  // namespace fqtype
