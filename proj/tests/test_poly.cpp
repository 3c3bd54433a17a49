#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellip/errors.hpp"
#include "ellip/poly.hpp"

using namespace ellip;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

Poly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<long> d(-4, 4);
  std::vector<Scalar> v;
  for (int k = 0; k <= deg; ++k) v.push_back(Scalar::ratio(d(rng), 1 + (rng() % 3)));
  return Poly(v);
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(Scalar::parse("3/6") == Scalar::ratio(1, 2));
  CHECK(Scalar::parse("-2/4").str() == "-1/2");
  CHECK(Scalar::parse("1/2+3/4i") == Scalar(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(Scalar::parse("i") == Scalar::i());
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("2-i").str() == "2-1i");
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
  CHECK(Scalar(mpq_class(3), mpq_class(4)).inv() * Scalar(mpq_class(3), mpq_class(4)) == Scalar(1));
}

TEST_CASE("exact_log") {
  CHECK(exact_log(Scalar(8), 2) == 3);
  CHECK(exact_log(Scalar::ratio(1, 9), 3) == -2);
  CHECK(exact_log(Scalar(1), 5) == 0);
  CHECK_FALSE(exact_log(Scalar(7), 2).has_value());
  CHECK_FALSE(exact_log(Scalar(-4), 2).has_value());
}

TEST_CASE("polynomial ring operations") {
  Poly a = P({1, 1});   // 1 + X
  Poly b = P({-1, 1});  // -1 + X
  CHECK(a * b == P({-1, 0, 1}));
  CHECK((a - a).is_zero());
  CHECK((a * b).degree() == 2);
  CHECK(P({0, 0, 3}).derivative() == P({0, 6}));
  CHECK(P({1, 2, 1}).eval(Scalar(2)) == Scalar(9));
  CHECK(P({1, 0, 1}).compose(a) == P({2, 2, 1}));
}

TEST_CASE("division, gcd, inverse modulo") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 3);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    Poly g = random_poly(rng, 2);
    if (g.degree() < 1) continue;
    Poly gg = gcd(a * g, b * g);
    CHECK((gg % g.monic()).is_zero());
    ExtGcd e = ext_gcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
  }
  Poly m = P({-2, 0, 1});
  Poly inv = inverse_mod(P({1, 1}), m);
  CHECK((inv * P({1, 1}) - Poly(1)) % m == Poly());
  CHECK_THROWS(P({1, 1}) / P({2, 1}));
}

TEST_CASE("squarefree decomposition") {
  Poly f = P({1, 1}) * P({-2, 1}).pow(2) * P({3, 0, 1}).pow(3) * Scalar(5);
  auto parts = squarefree(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == P({1, 1}));
  CHECK(parts[1] == P({-2, 1}));
  CHECK(parts[2] == P({3, 0, 1}));
}

TEST_CASE("rational functions are reduced and compose correctly") {
  RatFun r(P({-1, 0, 1}), P({-1, 1}));
  CHECK(r.is_poly());
  CHECK(r.num() == P({1, 1}));
  RatFun s(P({1}), P({0, 2}));
  CHECK(s.den().is_monic());
  CHECK(s * RatFun(P({0, 2})) == RatFun(1));
  // (1/X) ∘ (X/(X+1)) = (X+1)/X
  RatFun inv_x(P({1}), P({0, 1}));
  RatFun t(P({0, 1}), P({1, 1}));
  CHECK(inv_x.compose(t) == RatFun(P({1, 1}), P({0, 1})));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    RatFun u(random_poly(rng, 2), random_poly(rng, 2) + Poly(P({0, 0, 0, 1})));
    RatFun v(random_poly(rng, 1) + Poly(P({0, 1})), random_poly(rng, 2) + Poly(P({0, 0, 1})));
    Scalar x0 = Scalar::ratio(static_cast<long>(k) + 3, 7);
    Scalar inner = v.eval(x0);
    if (u.den().eval(inner).is_zero()) continue;
    CHECK(u.compose(v).eval(x0) == u.eval(inner));
    CHECK((u * v / v) == u);
    CHECK((u + v - v) == u);
  }
}
