#include <doctest.h>

#include <set>
#include <stdexcept>

#include "support.hpp"

using namespace fqtest;

namespace {

const char* kFields[] = {"2", "3", "5", "7", "2^2", "2^3", "2^4", "3^2", "5^2", "2^8", "3^5", "7^3"};

}  // namespace

TEST_CASE("prime and small extension fields") {
  auto F2 = mk_field(2);
  CHECK(F2->q() == 2);
  CHECK(F2->spec() == "2");
  auto F4 = mk_field(2, 2);
  CHECK(F4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(F4->spec() == "2^2");
  CHECK_THROWS_AS(mk_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(mk_field(4), std::invalid_argument);
  CHECK_THROWS_AS(mk_field(2, 21), std::out_of_range);
  CHECK_THROWS_AS(mk_field(2, 2, std::vector<std::uint32_t>{1, 1}), std::invalid_argument);
  CHECK(mk_field(2, 8)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1, 1, 0, 0, 0, 1});
  CHECK(mk_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("canonical modulus is the smallest irreducible") {
  for (auto [p, k] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}}) {
    auto F = mk_field(p, k);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      std::vector<std::uint32_t> m;
      std::uint64_t t = n;
      for (unsigned i = 0; i < k; ++i, t /= p) m.push_back(static_cast<std::uint32_t>(t % p));
      m.push_back(1);
      if (m == F->modulus()) break;
      // Anything smaller must have a root or a factor; check by building a field.
      CHECK_THROWS_AS(mk_field(p, k, m), std::invalid_argument);
    }
  }
}

TEST_CASE("F_4 arithmetic examples") {
  auto F4 = mk_field(2, 2);
  const FqElem g = FqElem::encoding(F4, 2), one = FqElem::encoding(F4, 1);
  CHECK((g * g).encoding() == 3);
  CHECK(g.inv().encoding() == 3);
  CHECK(g.frobenius().encoding() == 3);
  CHECK(g.frobenius(2) == g);
  CHECK((g + one).encoding() == 3);
  CHECK_THROWS_AS(FqElem::encoding(F4, 0).inv(), std::domain_error);
  CHECK_THROWS_AS(FqElem::encoding(F4, 4), std::out_of_range);
  CHECK_THROWS_AS(g + FqElem::encoding(mk_field(2), 1), std::invalid_argument);
}

TEST_CASE("enumeration order and encoding round trip") {
  CHECK(enumerate_field(*mk_field(2)) == std::vector<Elem>{{0}, {1}});
  CHECK(enumerate_field(*mk_field(2, 2)) == std::vector<Elem>{{0}, {1}, {2}, {3}});
  for (const char* spec : kFields) {
    auto F = field(spec);
    auto all = enumerate_field(*F);
    REQUIRE(all.size() == F->q());
    std::set<std::uint32_t> seen;
    for (Elem a : all) {
      seen.insert(a.v);
      CHECK(F->from_digits(F->digits(a)) == a);
    }
    CHECK(seen.size() == F->q());
  }
}

TEST_CASE("field axioms and table routes agree with power-basis routes") {
  std::mt19937_64 rng(11);
  for (const char* spec : kFields) {
    auto F = field(spec);
    const FieldCtx& K = *F;
    for (int trial = 0; trial < 300; ++trial) {
      const Elem a = random_elem(K, rng), b = random_elem(K, rng), c = random_elem(K, rng);
      CHECK(K.mul(a, b) == K.mul_power_basis(a, b));
      CHECK(K.add(a, b) == K.add(b, a));
      CHECK(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
      CHECK(K.add(a, K.neg(a)) == K.zero());
      CHECK(K.mul(a, K.one()) == a);
      CHECK(K.add(a, K.zero()) == a);
      CHECK(K.pow(a, K.q()) == a);
      CHECK(K.frobenius(K.mul(a, b)) == K.mul(K.frobenius(a), K.frobenius(b)));
      CHECK(K.frobenius(a, K.k()) == a);
      CHECK(K.frobenius(K.pth_root(a)) == a);
      if (a.v != 0) {
        CHECK(K.inv(a) == K.inv_euclid(a));
        CHECK(K.mul(a, K.inv(a)) == K.one());
      }
    }
  }
}

TEST_CASE("prime field Frobenius is trivial") {
  for (const char* spec : {"2", "3", "5", "7"}) {
    auto F = field(spec);
    for (Elem a : enumerate_field(*F)) CHECK(F->frobenius(a) == a);
  }
}

TEST_CASE("embeddings are injective ring homomorphisms") {
  std::mt19937_64 rng(5);
  const std::pair<const char*, const char*> towers[] = {
      {"2", "2^2"}, {"2^2", "2^4"}, {"2^2", "2^6"}, {"2^3", "2^6"}, {"3", "3^2"}, {"3^2", "3^4"}, {"5", "5^3"}};
  for (auto [s, t] : towers) {
    auto S = field(s), T = field(t);
    const Embedding e(S, T);
    CHECK(e.map(S->zero()) == T->zero());
    CHECK(e.map(S->one()) == T->one());
    std::set<std::uint32_t> images;
    for (Elem a : enumerate_field(*S)) {
      images.insert(e.map(a).v);
      CHECK(e.restrict(e.map(a)) == a);
    }
    CHECK(images.size() == S->q());
    for (int trial = 0; trial < 200; ++trial) {
      const Elem a = random_elem(*S, rng), b = random_elem(*S, rng);
      CHECK(e.map(S->add(a, b)) == T->add(e.map(a), e.map(b)));
      CHECK(e.map(S->mul(a, b)) == T->mul(e.map(a), e.map(b)));
    }
    // The generator goes to the first root of the source modulus in the target.
    std::vector<Elem> coeffs;
    for (auto c : S->modulus()) coeffs.push_back(T->from_int(c));
    const UniPoly m(T, coeffs);
    if (S->k() > 1) CHECK(roots_by_search(m).front() == e.image_of_gen());
  }
  CHECK_THROWS_AS(Embedding(field("2^2"), field("2^3")), std::invalid_argument);
  // F_2 -> F_4 fixes both elements.
  const Embedding e2(field("2"), field("2^2"));
  CHECK(e2.map(Elem{0}) == Elem{0});
  CHECK(e2.map(Elem{1}) == Elem{1});
}

TEST_CASE("embedding is consistent along a tower") {
  auto F2 = field("2"), F4 = field("2^2"), F16 = field("2^4");
  const Embedding a(F2, F4), b(F4, F16), c(F2, F16);
  for (Elem x : enumerate_field(*F2)) CHECK(b.map(a.map(x)) == c.map(x));
  const FqElem g = FqElem::encoding(F4, 2);
  const FqElem h = embed(g, F16);
  CHECK(h * h + h + FqElem::encoding(F16, 1) == FqElem::encoding(F16, 0));
}

TEST_CASE("field spec parsing") {
  CHECK(parse_field("2^8")->q() == 256);
  CHECK(parse_field("7")->q() == 7);
  CHECK(parse_field("2^2", "1,1,1")->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK_THROWS_AS(parse_field("2^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field("2^2", "1,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field("2^2", "1,1,2"), std::invalid_argument);
}
