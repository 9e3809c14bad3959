#include "fqtype/gf.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string_view>

namespace fqtype {

namespace {

using Digits = std::vector<std::uint32_t>;

// Small dense polynomial helpers over F_p, ascending coefficients, trimmed.

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Digits fp_mul(const Digits& a, const Digits& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  Digits r(acc.begin(), acc.end());
  trim(r);
  return r;
}

// Remainder of a modulo a nonzero b.
Digits fp_mod(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Digits fp_sub(Digits a, const Digits& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Digits fp_gcd(Digits a, Digits b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Digits fp_powmod(Digits base, std::uint64_t e, const Digits& m, std::uint32_t p) {
  Digits r{1};
  base = fp_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = fp_mod(fp_mul(r, base, p), m, p);
    e >>= 1;
    if (e) base = fp_mod(fp_mul(base, base, p), m, p);
  }
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t parse_u32(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Digits m(poly.begin(), poly.end());
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  // Rabin: T^(p^k) = T mod m, and gcd(T^(p^(k/r)) - T, m) = 1 for primes r | k.
  std::vector<Digits> frob(k + 1);
  frob[0] = fp_mod(Digits{0, 1}, m, p);
  for (std::size_t i = 1; i <= k; ++i) frob[i] = fp_powmod(frob[i - 1], p, m, p);
  const Digits t = fp_mod(Digits{0, 1}, m, p);
  if (frob[k] != t) return false;
  for (auto r : prime_divisors(k)) {
    Digits g = fp_gcd(m, fp_sub(frob[k / r], t, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldPtr FieldCtx::make(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw std::out_of_range("field size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^20");
    }
  }

  std::shared_ptr<FieldCtx> ctx(new FieldCtx());
  ctx->p_ = p;
  ctx->k_ = k;
  ctx->q_ = static_cast<std::uint32_t>(q);

  if (modulus) {
    Digits m = *modulus;
    for (auto c : m)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
    if (m.size() != k + 1 || m.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree " + std::to_string(k));
    }
    if (!is_irreducible_mod_p(m, p)) throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
    ctx->modulus_ = std::move(m);
  } else {
    for (std::uint64_t n = 0; n < q; ++n) {
      Digits m(k + 1, 0);
      std::uint64_t t = n;
      for (unsigned i = 0; i < k; ++i) {
        m[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      m[k] = 1;
      if (is_irreducible_mod_p(m, p)) {
        ctx->modulus_ = std::move(m);
        break;
      }
    }
  }
  ctx->build_tables();
  return ctx;
}

FieldPtr mk_field(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
  return FieldCtx::make(p, k, std::move(modulus));
}

FieldPtr parse_field(const std::string& spec, const std::string& modulus) {
  std::string_view s(spec);
  std::uint32_t p = 0;
  unsigned k = 1;
  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    p = parse_u32(s.substr(0, caret), "field characteristic");
    k = parse_u32(s.substr(caret + 1), "extension degree");
  } else {
    p = parse_u32(s, "field characteristic");
  }
  if (modulus.empty()) return mk_field(p, k);
  std::vector<std::uint32_t> coeffs;
  std::string_view m(modulus);
  while (!m.empty()) {
    auto comma = m.find(',');
    coeffs.push_back(parse_u32(m.substr(0, comma), "modulus coefficient"));
    if (comma == std::string_view::npos) break;
    m.remove_prefix(comma + 1);
  }
  return mk_field(p, k, std::move(coeffs));
}

std::string FieldCtx::spec() const {
  return k_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(k_);
}

bool FieldCtx::same_as(const FieldCtx& other) const {
  return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

void require_same_field(const FieldCtx& a, const FieldCtx& b) {
  if (!same_field(a, b)) throw std::invalid_argument("field mismatch: F_" + a.spec() + " vs F_" + b.spec());
}

Elem FieldCtx::gen() const {
  if (k_ == 1) return from_int(static_cast<long long>(p_) - static_cast<long long>(modulus_[0]));
  return {p_};
}

Elem FieldCtx::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

Elem FieldCtx::from_encoding(std::uint64_t n) const {
  if (n >= q_) throw std::out_of_range("element encoding " + std::to_string(n) + " not below q = " + std::to_string(q_));
  return {static_cast<std::uint32_t>(n)};
}

Elem FieldCtx::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > k_) throw std::invalid_argument("too many digits for field element");
  std::uint64_t n = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw std::invalid_argument("digit out of range [0, p)");
    n = n * p_ + digits[i];
  }
  return {static_cast<std::uint32_t>(n)};
}

std::vector<std::uint32_t> FieldCtx::digits(Elem a) const {
  std::vector<std::uint32_t> d(k_, 0);
  std::uint32_t n = a.v;
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = n % p_;
    n /= p_;
  }
  return d;
}

Elem FieldCtx::add_digits(Elem a, Elem b) const {
  std::uint32_t x = a.v, y = b.v, out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return {out};
}

Elem FieldCtx::mul_power_basis(Elem a, Elem b) const {
  if (p_ == 2) {
    std::uint64_t prod = 0;
    for (unsigned i = 0; i < k_; ++i)
      if ((b.v >> i) & 1u) prod ^= std::uint64_t(a.v) << i;
    std::uint64_t mod = 0;
    for (unsigned i = 0; i <= k_; ++i)
      if (modulus_[i]) mod |= std::uint64_t(1) << i;
    for (int bit = 2 * static_cast<int>(k_) - 2; bit >= static_cast<int>(k_); --bit) {
      if ((prod >> bit) & 1u) prod ^= mod << (bit - k_);
    }
    return {static_cast<std::uint32_t>(prod)};
  }
  Digits r = fp_mod(fp_mul(digits(a), digits(b), p_), modulus_, p_);
  return from_digits(r);
}

Elem FieldCtx::inv_euclid(Elem a) const {
  if (a.v == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on (modulus, a): track s with s * a = r mod modulus.
  Digits r0 = modulus_, r1 = digits(a);
  trim(r1);
  Digits s0{}, s1{1};
  while (r1.size() > 1) {
    // r0 = quot * r1 + rem
    Digits rem = r0, quot(r0.size(), 0);
    const std::uint32_t li = inv_mod_p(r1.back(), p_);
    while (!rem.empty() && rem.size() >= r1.size()) {
      const std::size_t shift = rem.size() - r1.size();
      const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(rem.back()) * li % p_);
      quot[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + std::uint64_t(p_ - c) * r1[i]) % p_);
      trim(rem);
    }
    trim(quot);
    Digits s2 = fp_sub(s0, fp_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant c; a^{-1} = s1 / c.
  const std::uint32_t ci = inv_mod_p(r1[0], p_);
  for (auto& c : s1) c = static_cast<std::uint32_t>(std::uint64_t(c) * ci % p_);
  s1 = fp_mod(std::move(s1), modulus_, p_);
  return from_digits(s1);
}

void FieldCtx::build_tables() {
  const std::uint32_t order = q_ - 1;
  Elem prim{1};
  if (q_ > 2) {
    const auto primes = prime_divisors(order);
    auto pow_pb = [&](Elem b, std::uint64_t e) {
      Elem r{1};
      while (e) {
        if (e & 1) r = mul_power_basis(r, b);
        b = mul_power_basis(b, b);
        e >>= 1;
      }
      return r;
    };
    for (std::uint32_t c = 2; c < q_; ++c) {
      bool ok = true;
      for (auto r : primes) {
        if (pow_pb(Elem{c}, order / r) == Elem{1}) {
          ok = false;
          break;
        }
      }
      if (ok) {
        prim = Elem{c};
        break;
      }
    }
  }
  exp_.assign(2 * std::size_t(order), 0);
  log_.assign(q_, 0);
  Elem cur{1};
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = cur.v;
    exp_[i + order] = cur.v;
    log_[cur.v] = i;
    cur = mul_power_basis(cur, prim);
  }

  if (p_ != 2 && k_ > 1) {
    neg_table_.resize(q_);
    for (std::uint32_t n = 0; n < q_; ++n) {
      std::uint32_t x = n, out = 0, scale = 1;
      for (unsigned i = 0; i < k_; ++i) {
        const std::uint32_t d = x % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        x /= p_;
      }
      neg_table_[n] = out;
    }
    if (q_ <= 1024) {
      add_table_.resize(std::size_t(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) add_table_[std::size_t(a) * q_ + b] = add_digits({a}, {b}).v;
    }
  }
}

Elem FieldCtx::inv(Elem a) const {
  if (a.v == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t order = q_ - 1;
  return {exp_[(order - log_[a.v]) % order]};
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return {1};
  if (a.v == 0) return {0};
  const std::uint64_t order = q_ - 1;
  return {exp_[(std::uint64_t(log_[a.v]) * (e % order)) % order]};
}

Elem FieldCtx::frobenius(Elem a, unsigned j) const {
  if (a.v == 0 || k_ == 1) return a;
  const std::uint64_t order = q_ - 1;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < j % k_; ++i) e = e * p_ % order;
  return {exp_[(std::uint64_t(log_[a.v]) * e) % order]};
}

std::vector<Elem> enumerate_field(const FieldCtx& ctx) {
  std::vector<Elem> out(ctx.q());
  for (std::uint32_t i = 0; i < ctx.q(); ++i) out[i] = Elem{i};
  return out;
}

FqElem FqElem::operator+(const FqElem& b) const {
  require_same_field(*ctx_, *b.ctx_);
  return {ctx_, ctx_->add(v_, b.v_)};
}
FqElem FqElem::operator-(const FqElem& b) const {
  require_same_field(*ctx_, *b.ctx_);
  return {ctx_, ctx_->sub(v_, b.v_)};
}
FqElem FqElem::operator*(const FqElem& b) const {
  require_same_field(*ctx_, *b.ctx_);
  return {ctx_, ctx_->mul(v_, b.v_)};
}
FqElem FqElem::operator/(const FqElem& b) const {
  require_same_field(*ctx_, *b.ctx_);
  return {ctx_, ctx_->div(v_, b.v_)};
}

Embedding::Embedding(FieldPtr source, FieldPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (source_->p() != target_->p() || target_->k() % source_->k() != 0) {
    throw std::invalid_argument("cannot embed F_" + source_->spec() + " into F_" + target_->spec());
  }
  const FieldCtx& t = *target_;
  const auto& m = source_->modulus();
  auto eval_modulus = [&](Elem x) {
    Elem acc{0};
    for (std::size_t i = m.size(); i-- > 0;) acc = t.add(t.mul(acc, x), t.from_int(m[i]));
    return acc;
  };
  bool found = false;
  for (std::uint32_t n = 0; n < t.q(); ++n) {
    if (eval_modulus(Elem{n}).v == 0) {
      root_ = Elem{n};
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("source modulus has no root in the target field");

  std::vector<Elem> powers(source_->k());
  powers[0] = t.one();
  for (unsigned i = 1; i < source_->k(); ++i) powers[i] = t.mul(powers[i - 1], root_);
  image_.resize(source_->q());
  preimage_.assign(t.q(), UINT32_MAX);
  for (std::uint32_t n = 0; n < source_->q(); ++n) {
    const auto d = source_->digits(Elem{n});
    Elem acc{0};
    for (unsigned i = 0; i < d.size(); ++i) acc = t.add(acc, t.mul(t.from_int(d[i]), powers[i]));
    image_[n] = acc.v;
    preimage_[acc.v] = n;
  }
}

std::optional<Elem> Embedding::restrict(Elem b) const {
  const std::uint32_t n = preimage_.at(b.v);
  if (n == UINT32_MAX) return std::nullopt;
  return Elem{n};
}

FqElem embed(const FqElem& a, const FieldPtr& target) {
  Embedding e(a.field(), target);
  return {target, e.map(a.raw())};
}

}  // namespace fqtype
