#include <doctest.h>

#include <stdexcept>

#include "support.hpp"

using namespace fqtest;

namespace {

const char* kFields[] = {"2", "3", "2^2", "5", "2^3", "3^2"};

BiPoly reassemble(const std::vector<std::pair<BiPoly, int>>& fac, const FieldPtr& F) {
  BiPoly out = BiPoly::constant(F, F->one());
  for (const auto& [g, e] : fac)
    for (int i = 0; i < e; ++i) out = out * g;
  return out;
}

}  // namespace

TEST_CASE("tilde examples") {
  auto F2 = field("2");
  CHECK(tilde(poly(F2, "T")) == bipoly(F2, "1"));
  CHECK(tilde(poly(F2, "T^2")) == bipoly(F2, "x+y"));
  CHECK(tilde(poly(F2, "T^3")) == bipoly(F2, "x^2+x*y+y^2"));
  CHECK_THROWS(tilde(poly(F2, "1")));
  CHECK_THROWS(tilde(UniPoly(F2)));
}

TEST_CASE("tilde identity and linearity") {
  std::mt19937_64 rng(10);
  for (const char* spec : {"2", "3", "2^2", "5", "2^3", "3^2"}) {
    auto F = field(spec);
    const BiPoly diag = BiPoly::x(F) - BiPoly::y(F);
    for (int trial = 0; trial < 60; ++trial) {
      const int d = 1 + trial % 12;
      const UniPoly f = random_poly(F, d, rng), g = random_poly(F, d, rng);
      CHECK(diag * tilde(f) == difference(f));
      CHECK(tilde(f).deg_y() == d - 1);
      if ((f + g).degree() >= 1) CHECK(tilde(f + g) == tilde(f) + tilde(g));
      const Elem c = random_nonzero(*F, rng);
      CHECK(tilde(f.scaled(c)) == tilde(f).scaled(c));
    }
  }
}

TEST_CASE("bivariate gcd examples") {
  auto F2 = field("2");
  const UniPoly f = poly(F2, "T^12+T^3");
  CHECK(bipoly_gcd(tilde(f) - BiPoly::in_x(derivative(f)), tilde(derivative(f))) == bipoly(F2, "x+y"));
  const UniPoly g = poly(F2, "T^7");
  const BiPoly G1 = tilde(g) - BiPoly::in_x(derivative(g)), G2 = tilde(derivative(g));
  const BiPoly expected = bipoly(F2, "(x+y)*(x^2+x*y+y^2)^2");
  CHECK(G1 == bipoly(F2, "y*(x+y)*(x^2+x*y+y^2)^2"));
  CHECK(G2 == expected);
  CHECK(bipoly_gcd(G1, G2) == normalize(expected));
  const BiPoly F = bipoly(F2, "x^3*y+x+1");
  CHECK(bipoly_gcd(F, F) == normalize(F));
  CHECK_THROWS(bipoly_gcd(BiPoly(F2), BiPoly(F2)));
}

TEST_CASE("gcd of products contains the shared factor") {
  std::mt19937_64 rng(42);
  for (const char* spec : kFields) {
    auto F = field(spec);
    for (int trial = 0; trial < 40; ++trial) {
      const BiPoly a = random_bipoly(F, 1 + trial % 3, rng), b = random_bipoly(F, 1 + trial % 3, rng);
      const BiPoly h = random_bipoly(F, 1 + trial % 2, rng);
      const BiPoly g = bipoly_gcd(a * h, b * h);
      CHECK(try_divide(g, normalize(h)).has_value());
      CHECK(try_divide(a * h, g).has_value());
      CHECK(try_divide(b * h, g).has_value());
      CHECK(g.leading_coeff() == F->one());
    }
  }
}

TEST_CASE("powers of x - y") {
  auto F3 = field("3"), F2 = field("2");
  CHECK(is_power_of_x_minus_y(bipoly(F3, "2")));
  CHECK(is_power_of_x_minus_y(bipoly(F3, "(x-y)^3")));
  CHECK(is_power_of_x_minus_y(bipoly(F3, "2*(x-y)^2")));
  CHECK_FALSE(is_power_of_x_minus_y(bipoly(F3, "x+y")));
  CHECK(is_power_of_x_minus_y(bipoly(F2, "x+y")));
  CHECK_FALSE(is_power_of_x_minus_y(bipoly(F3, "(x-y)*(x+1)")));
  CHECK_THROWS(is_power_of_x_minus_y(BiPoly(F3)));
  const auto [rest, m] = strip_x_minus_y(bipoly(F3, "(x-y)^2*(x+y+1)"));
  CHECK(m == 2);
  CHECK(rest == bipoly(F3, "x+y+1"));
}

TEST_CASE("resultant in y specializes to the univariate resultant") {
  std::mt19937_64 rng(77);
  for (const char* spec : kFields) {
    auto F = field(spec);
    for (int trial = 0; trial < 30; ++trial) {
      const BiPoly A = random_bipoly(F, 1 + trial % 4, rng), B = random_bipoly(F, 1 + (trial / 4) % 3, rng);
      const UniPoly r = resultant_y(A, B);
      for (Elem x0 : enumerate_field(*F)) {
        if (A.lead_y()(x0).v == 0 || B.lead_y()(x0).v == 0) continue;
        CHECK(r(x0) == sylvester_resultant(A.eval_x(x0), B.eval_x(x0)));
      }
    }
  }
}

TEST_CASE("elimination examples") {
  auto F3 = field("3"), F5 = field("5");
  const UniPoly r = eliminate(bipoly(F3, "x+y"), bipoly(F3, "x-y"), Var::y);
  CHECK(r == poly(F3, "2*T"));
  const UniPoly r2 = eliminate(bipoly(F5, "y-x^2"), bipoly(F5, "y"), Var::y);
  CHECK(monic(r2) == poly(F5, "T^2"));
  CHECK_THROWS_AS(eliminate(bipoly(F5, "x+y"), bipoly(F5, "x+y"), Var::y), std::domain_error);
  const UniPoly r3 = eliminate(bipoly(F5, "x-y^2"), bipoly(F5, "x"), Var::x);
  CHECK(monic(r3) == poly(F5, "T^2"));
  // Diagonal powers are only removed on request.
  CHECK_THROWS_AS(eliminate(bipoly(F5, "(x-y)*(x+1)"), bipoly(F5, "(x-y)*y"), Var::y), std::domain_error);
  CHECK(monic(eliminate(bipoly(F5, "(x-y)*(x+1)"), bipoly(F5, "(x-y)*y"), Var::y, true)) == poly(F5, "T+1"));
}

TEST_CASE("bivariate factorization examples") {
  auto F2 = field("2");
  auto fac = bivariate_factorize(bipoly(F2, "(x+y)*(x+y+1)"));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first == bipoly(F2, "x+y"));
  CHECK(fac[1].first == bipoly(F2, "x+y+1"));
  fac = bivariate_factorize(bipoly(F2, "x^2+y^2"));
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == bipoly(F2, "x+y"));
  CHECK(fac[0].second == 2);
  fac = bivariate_factorize(bipoly(F2, "x^2+x*y+y^2+1"));
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].second == 1);
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(bivariate_factorize(random_bipoly(F2, 13, rng)), std::out_of_range);
  CHECK_THROWS(bivariate_factorize(bipoly(F2, "1")));
}

TEST_CASE("bivariate factorization of random products") {
  std::mt19937_64 rng(2024);
  for (const char* spec : kFields) {
    auto F = field(spec);
    for (int trial = 0; trial < 25; ++trial) {
      BiPoly P = random_bipoly(F, 1 + trial % 3, rng);
      const int pieces = 1 + trial % 3;
      for (int i = 0; i < pieces; ++i) P = P * random_bipoly(F, 1 + (trial + i) % 3, rng);
      if (trial % 4 == 0) P = P * BiPoly::in_x(random_poly(F, 2, rng));
      if (trial % 5 == 0) P = P * BiPoly::in_y(random_poly(F, 1, rng));
      if (P.total_degree() > kMaxBivariateDegree) continue;
      const auto fac = bivariate_factorize(P, trial);
      CHECK(reassemble(fac, F) == normalize(P));
      int with_mult = 0;
      for (const auto& [g, e] : fac) {
        with_mult += e;
        const auto again = bivariate_factorize(g);
        REQUIRE(again.size() == 1);
        CHECK(again[0].second == 1);
        CHECK(again[0].first == g);
        if (g.total_degree() >= 2 && g.total_degree() <= 3) CHECK_FALSE(has_linear_factor(g));
      }
      CHECK(with_mult >= pieces);
      CHECK(bivariate_factorize(P, trial + 1000) == fac);
    }
  }
}

TEST_CASE("factorization with inseparable pieces") {
  auto F2 = field("2"), F3 = field("3"), F4 = field("2^2");
  for (const auto& [F, text] : std::vector<std::pair<FieldPtr, std::string>>{
           {F2, "x^2*y^2+x^2+y^2"},
           {F2, "(x^2+y)^2*(x+y^2+1)"},
           {F3, "(x^3+y^3+x*y)*(x+y)^3"},
           {F3, "x^3*y^3+x^3+1"},
           {F4, "(x^2+2*y^2+3)*(x*y+2)^2"},
           {F2, "(y^2+y+1)*(x^2+x+1)*(x*y+1)"}}) {
    const BiPoly P = bipoly(F, text);
    const auto fac = bivariate_factorize(P);
    CHECK(reassemble(fac, F) == normalize(P));
    for (const auto& [g, e] : fac) {
      (void)e;
      const auto again = bivariate_factorize(g);
      CHECK(again.size() == 1);
    }
  }
}

TEST_CASE("geometric irreducibility examples") {
  auto F2 = field("2"), F5 = field("5");
  for (Elem s : enumerate_field(*F5)) CHECK(geometrically_irreducible(bipoly(F5, "x+y") + BiPoly::constant(F5, s)));
  CHECK_FALSE(geometrically_irreducible(bipoly(F2, "x^2+y^2")));
  CHECK(geometrically_irreducible(bipoly(F2, "x^2+x*y+y^2+1")));
  CHECK_FALSE(geometrically_irreducible(bipoly(F2, "x^2+x*y+y^2")));
  // Irreducible over F_2 but splits over F_8.
  CHECK_FALSE(geometrically_irreducible(bipoly(F2, "x^3+x*y^2+y^3")));
  CHECK(bivariate_factorize(bipoly(F2, "x^3+x*y^2+y^3")).size() == 1);
}

TEST_CASE("geometric irreducibility against the line-component oracle") {
  std::mt19937_64 rng(6);
  for (const char* spec : {"2", "3", "2^2"}) {
    auto F = field(spec);
    int reducible = 0;
    for (int trial = 0; trial < 60; ++trial) {
      BiPoly P = random_bipoly(F, 2 + trial % 2, rng);
      if (trial % 3 == 0) {
        // Bias towards reducible curves: a product of conjugate lines.
        const UniPoly m = random_poly(F, 2, rng, true);
        P = BiPoly::from_terms(F, {{2, 0, m.coeff(2)}, {1, 1, m.coeff(1)}, {0, 2, m.coeff(0)}});
      }
      if (P.total_degree() < 2) continue;
      const bool oracle = geometrically_reducible_low_degree(P);
      reducible += oracle;
      CHECK(geometrically_irreducible(P) == !oracle);
    }
    CHECK(reducible > 0);
  }
}

TEST_CASE("embedding polynomials into extensions") {
  auto F2 = field("2");
  auto F8 = extension_field(F2, 3);
  CHECK(F8->q() == 8);
  CHECK(extension_field(F2, 3) == F8);
  const Embedding& e = field_embedding(F2, F8);
  const BiPoly P = bipoly(F2, "x^2+x*y+1");
  CHECK(embed(P, e).total_degree() == 2);
  CHECK(embed(poly(F2, "T^3+T+1"), e).degree() == 3);
  CHECK(roots_in_field(embed(poly(F2, "T^3+T+1"), e)).size() == 3);
}

TEST_CASE("parsing and printing") {
  auto F4 = field("2^2"), F3 = field("3");
  CHECK(to_string(poly(F4, "(g+1)*T^2+g")) == "3*T^2+2");
  CHECK(to_string(poly(F3, "T^3-T")) == "T^3+2*T");
  CHECK(to_string(poly(F3, "0")) == "0");
  CHECK(to_string(bipoly(F3, "y^2+x^2+x*y+1")) == "x^2+x*y+y^2+1");
  CHECK(to_string(bipoly(F3, "2*x*y^2+y")) == "2*x*y^2+y");
  CHECK(poly(F3, "(T+1)^2") == poly(F3, "T^2+2*T+1"));
  CHECK_THROWS_AS(poly(F3, "T^2+3"), std::invalid_argument);
  CHECK_THROWS_AS(poly(F3, "T^"), std::invalid_argument);
  CHECK_THROWS_AS(poly(F3, "x+1"), std::invalid_argument);
  CHECK_THROWS_AS(bipoly(F3, "T"), std::invalid_argument);
  CHECK_THROWS_AS(poly(F3, "(T+1"), std::invalid_argument);
  std::mt19937_64 rng(1);
  for (const char* spec : kFields) {
    auto F = field(spec);
    for (int trial = 0; trial < 30; ++trial) {
      const UniPoly f = random_poly(F, trial % 9, rng);
      CHECK(poly(F, to_string(f)) == f);
      const BiPoly B = random_bipoly(F, trial % 5, rng);
      CHECK(bipoly(F, to_string(B)) == B);
    }
  }
}
