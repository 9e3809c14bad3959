#pragma once

// Finite fields F_{p^k} in power-basis representation.
//
// Elements are stored as their integer encoding n = sum digits[i] * p^i, where
// digits are the coordinates with respect to 1, g, ..., g^{k-1} and g is the
// root of the defining modulus. Arithmetic is done against a FieldCtx, which
// owns exp/log tables for multiplication and is immutable once built.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fqtype {

/// Raw element encoding; only meaningful together with a FieldCtx.
struct Elem {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Largest supported field size.
inline constexpr std::uint32_t kMaxFieldSize = 1u << 20;

class FieldCtx {
 public:
  /// Builds F_{p^k}. Without a modulus the canonical one is chosen: the monic
  /// irreducible of degree k whose low coefficients, read as base-p digits,
  /// form the smallest integer. `modulus` lists c0, c1, ..., c_{k-1}, 1.
  static FieldPtr make(std::uint32_t p, unsigned k,
                       std::optional<std::vector<std::uint32_t>> modulus = {});

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Defining polynomial over F_p, ascending, leading 1 included.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool is_prime_field() const { return k_ == 1; }

  /// "p" or "p^k".
  std::string spec() const;
  /// Same p, k and modulus.
  bool same_as(const FieldCtx& other) const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  /// Root g of the modulus (encoding p when k > 1).
  Elem gen() const;
  /// Image of an integer in the prime subfield.
  Elem from_int(long long n) const;
  /// Checked conversion from an integer encoding.
  Elem from_encoding(std::uint64_t n) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(Elem a) const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return {a.v ^ b.v};
    if (k_ == 1) {
      std::uint32_t s = a.v + b.v;
      return {s >= p_ ? s - p_ : s};
    }
    if (!add_table_.empty()) return {add_table_[std::size_t(a.v) * q_ + b.v]};
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
    return {neg_table_[a.v]};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {exp_[std::size_t(log_[a.v]) + log_[b.v]]};
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(p^j).
  Elem frobenius(Elem a, unsigned j = 1) const;
  /// Inverse of the Frobenius, i.e. the unique p-th root.
  Elem pth_root(Elem a) const { return frobenius(a, k_ - 1); }

  /// Multiplicative generator used by the log tables.
  Elem primitive_element() const { return {exp_[1]}; }

  // Reference routes working directly on the power basis. They do not touch
  // the log tables and exist so the tables can be checked against them.
  Elem mul_power_basis(Elem a, Elem b) const;
  Elem inv_euclid(Elem a) const;

 private:
  FieldCtx() = default;
  Elem add_digits(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t p_ = 2;
  unsigned k_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;  // length q
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> add_table_;  // only for small odd-characteristic extensions
};

FieldPtr mk_field(std::uint32_t p, unsigned k = 1,
                  std::optional<std::vector<std::uint32_t>> modulus = {});

/// Parses "p" or "p^k", with an optional "c0,c1,...,1" modulus list.
FieldPtr parse_field(const std::string& spec, const std::string& modulus = {});

bool is_prime(std::uint64_t n);
/// Irreducibility of a monic polynomial over F_p (ascending coefficients).
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Fields are interchangeable when they are the same object or share p, k, modulus.
inline bool same_field(const FieldCtx& a, const FieldCtx& b) {
  return &a == &b || a.same_as(b);
}
void require_same_field(const FieldCtx& a, const FieldCtx& b);

/// All q elements in increasing encoding order.
std::vector<Elem> enumerate_field(const FieldCtx& ctx);

/// An element bound to its field. Convenience surface with checked operators;
/// the algorithms work on raw Elem values against a FieldCtx.
class FqElem {
 public:
  FqElem(FieldPtr ctx, Elem v) : ctx_(std::move(ctx)), v_(v) {}
  static FqElem encoding(FieldPtr ctx, std::uint64_t n) {
    Elem e = ctx->from_encoding(n);
    return {std::move(ctx), e};
  }

  const FieldPtr& field() const { return ctx_; }
  Elem raw() const { return v_; }
  std::uint32_t encoding() const { return v_.v; }
  std::vector<std::uint32_t> digits() const { return ctx_->digits(v_); }
  bool is_zero() const { return v_.v == 0; }

  FqElem operator+(const FqElem& b) const;
  FqElem operator-(const FqElem& b) const;
  FqElem operator*(const FqElem& b) const;
  FqElem operator/(const FqElem& b) const;
  FqElem operator-() const { return {ctx_, ctx_->neg(v_)}; }
  FqElem inv() const { return {ctx_, ctx_->inv(v_)}; }
  FqElem pow(std::uint64_t e) const { return {ctx_, ctx_->pow(v_, e)}; }
  FqElem frobenius(unsigned j = 1) const { return {ctx_, ctx_->frobenius(v_, j)}; }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.v_ == b.v_ && same_field(*a.ctx_, *b.ctx_);
  }

 private:
  FieldPtr ctx_;
  Elem v_;
};

/// Fixed embedding F_{p^k} -> F_{p^{km}} sending g to the first root (in
/// encoding order) of the source modulus inside the target.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Elem image_of_gen() const { return root_; }

  Elem map(Elem a) const { return {image_[a.v]}; }
  /// Preimage of a target element, if it lies in the image.
  std::optional<Elem> restrict(Elem b) const;

 private:
  FieldPtr source_;
  FieldPtr target_;
  Elem root_;
  std::vector<std::uint32_t> image_;
  std::vector<std::uint32_t> preimage_;
};

FqElem embed(const FqElem& a, const FieldPtr& target);

}  // namespace fqtype
