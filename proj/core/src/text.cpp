#include "fqtype/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace fqtype {

namespace {

// Sparse polynomial in up to two variables, keyed by (x exponent, y exponent).
using Sparse = std::map<std::pair<unsigned, unsigned>, Elem>;

class Parser {
 public:
  Parser(const FieldPtr& field, const std::string& text, std::string vars)
      : F_(*field), text_(text), vars_(std::move(vars)) {}

  Sparse parse() {
    Sparse r = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + text_ + "' at position " + std::to_string(pos_) + ": " +
                                what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned long long number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    unsigned long long n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (n > (1ull << 40)) fail("number too large");
    }
    return n;
  }

  void add_into(Sparse& acc, const Sparse& b, bool negate) const {
    for (const auto& [e, c] : b) {
      Elem& slot = acc[e];
      slot = F_.add(slot, negate ? F_.neg(c) : c);
      if (slot.v == 0) acc.erase(e);
    }
  }

  Sparse mul(const Sparse& a, const Sparse& b) const {
    Sparse r;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        const std::pair<unsigned, unsigned> e{ea.first + eb.first, ea.second + eb.second};
        Elem& slot = r[e];
        slot = F_.add(slot, F_.mul(ca, cb));
        if (slot.v == 0) r.erase(e);
      }
    return r;
  }

  Sparse expression() {
    Sparse acc;
    bool negate = accept('-');
    if (!negate) accept('+');
    add_into(acc, term(), negate);
    for (;;) {
      if (accept('+')) {
        add_into(acc, term(), false);
      } else if (accept('-')) {
        add_into(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  Sparse term() {
    Sparse acc = factor();
    while (accept('*')) acc = mul(acc, factor());
    return acc;
  }

  Sparse factor() {
    Sparse base = primary();
    if (accept('^')) {
      const auto e = number();
      if (e > 4096) fail("exponent too large");
      Sparse r{{{0, 0}, Elem{1}}};
      for (unsigned long long i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  Sparse primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse r = expression();
      if (!accept(')')) fail("missing ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto n = number();
      if (n >= F_.q()) fail("coefficient encoding " + std::to_string(n) + " is not below q");
      if (n == 0) return {};
      return {{{0, 0}, Elem{static_cast<std::uint32_t>(n)}}};
    }
    if (c == 'g') {
      ++pos_;
      const Elem g = F_.gen();
      if (g.v == 0) return {};
      return {{{0, 0}, g}};
    }
    const auto slot = vars_.find(c);
    if (slot != std::string::npos) {
      ++pos_;
      if (slot == 0) return {{{1, 0}, Elem{1}}};
      return {{{0, 1}, Elem{1}}};
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const FieldCtx& F_;
  std::string text_;
  std::string vars_;
  std::size_t pos_ = 0;
};

std::string term_string(Elem c, const std::string& monomial) {
  if (monomial.empty()) return std::to_string(c.v);
  if (c.v == 1) return monomial;
  return std::to_string(c.v) + "*" + monomial;
}

std::string power(char var, unsigned e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

UniPoly parse_unipoly(const FieldPtr& field, const std::string& text) {
  Sparse s = Parser(field, text, "T").parse();
  std::vector<Elem> c;
  for (const auto& [e, v] : s) {
    if (c.size() <= e.first) c.resize(e.first + 1, Elem{0});
    c[e.first] = v;
  }
  return UniPoly(field, std::move(c));
}

BiPoly parse_bipoly(const FieldPtr& field, const std::string& text) {
  Sparse s = Parser(field, text, "xy").parse();
  std::vector<BiPoly::Term> terms;
  for (const auto& [e, v] : s) terms.push_back({e.first, e.second, v});
  return BiPoly::from_terms(field, terms);
}

std::string to_string(const UniPoly& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Elem c = f.coeffs()[i];
    if (c.v == 0) continue;
    if (!out.empty()) out += '+';
    out += term_string(c, power(var, static_cast<unsigned>(i)));
  }
  return out;
}

std::string to_string(const BiPoly& F) {
  if (F.is_zero()) return "0";
  auto terms = F.terms();
  std::sort(terms.begin(), terms.end(), [](const BiPoly::Term& a, const BiPoly::Term& b) {
    if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
    return a.i > b.i;
  });
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += '+';
    std::string mono = power('x', t.i);
    const std::string ypart = power('y', t.j);
    if (!mono.empty() && !ypart.empty()) mono += '*';
    mono += ypart;
    out += term_string(t.c, mono);
  }
  return out;
}

}  // namespace fqtype
