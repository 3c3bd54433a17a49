#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellip/errors.hpp"
#include "ellip/json_io.hpp"
#include "random_elements.hpp"

using namespace ellip;
using io::json;

namespace {

ExactCurve square() { return make_exact_curve(Scalar(4), Scalar(0), 2); }

/// serialize(parse(serialize(x))) = serialize(x) after a trip through text.
template <class Parse>
void round_trip(const json& j, Parse parse) {
  json back = json::parse(j.dump());
  CHECK(parse(back) == j);
}

}  // namespace

TEST_CASE("exact scalars and curves") {
  for (const char* s : {"0", "3/4", "-2", "1/3+2/5i", "-1i", "7i"}) {
    json j = s;
    CHECK(io::to_json(io::scalar_from(j)) == j);
  }
  CHECK(io::scalar_from(json(5)) == Scalar(5));
  CHECK(io::scalar_from(json("-i")) == io::scalar_from(json("-1i")));
  CHECK_THROWS_AS(io::scalar_from(json("1/0")), io::SchemaError);
  CHECK_THROWS_AS(io::scalar_from(json(0.5)), io::SchemaError);
  CHECK_THROWS_AS(io::rational_from(json("1+i")), io::SchemaError);
  ExactCurve c = make_exact_curve(Scalar(11), Scalar::ratio(7, 3), 3);
  round_trip(io::to_json(c), [](const json& j) { return io::to_json(io::curve_from(j)); });
  CHECK_THROWS_AS(io::curve_from(json{{"g2", "1"}, {"q", 2}}), io::SchemaError);
  CHECK_THROWS_AS(io::curve_from(json{{"g2", "0"}, {"g3", "0"}, {"q", 2}}), SingularCurve);
}

TEST_CASE("function field and S elements") {
  ExactCurve c = square();
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    EllFun f = testing::random_ellfun(rng, c, 3);
    round_trip(io::to_json(f), [&](const json& j) { return io::to_json(io::ellfun_from(j, c)); });
    CHECK(io::ellfun_from(io::to_json(f), c) == f);
    SElem s = testing::random_selem(rng, c);
    round_trip(io::to_json(s), [&](const json& j) { return io::to_json(io::selem_from(j, c)); });
    CHECK(io::selem_from(io::to_json(s), c) == s);
    SFraction q(s.in_s(), SElem::z(c).in_s());
    round_trip(io::to_json(q), [&](const json& j) { return io::to_json(io::sfraction_from(j, c)); });
    Poly p = testing::random_poly(rng, 3);
    round_trip(io::to_json(p), [](const json& j) { return io::to_json(io::poly_from(j)); });
  }
  CHECK(io::selem_from(json("3/2"), c) == SElem::constant(c, Scalar::ratio(3, 2)));
  CHECK(io::selem_from(json{{"a", {"0", "1"}}}, c) == SElem::from(EllFun::X(c)));
  CHECK_THROWS_AS(io::ratfun_from(json{{"num", {"1"}}, {"den", json::array()}}), io::SchemaError);
  CHECK_THROWS_AS(io::selem_from(json{{"terms", {{{"i", 0}}}}}, c), io::SchemaError);
}

TEST_CASE("matrices") {
  ExactCurve c = square();
  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) {
    Mat m = testing::random_triangular(rng, c, 2 + static_cast<size_t>(t % 2), t % 2 == 0);
    round_trip(io::to_json(m), [&](const json& j) { return io::to_json(io::mat_from(j, c)); });
    CHECK(io::mat_from(io::to_json(m), c) == m);
  }
  CHECK_THROWS_AS(io::mat_from(json{{"1", "0"}, {"0"}}, c), io::SchemaError);
  QMat M = testing::random_unipotent_pair(rng, 3).M1;
  round_trip(io::to_json(M), [](const json& j) { return io::to_json(io::qmat_from(j)); });
  CHECK_THROWS_AS(io::qmat_from(json{{"1", "0"}}), io::SchemaError);
}

TEST_CASE("divisors and torsion points") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    PeriodicDivisor D = testing::random_divisor(rng, 1 + static_cast<long>(rng() % 12), 4, t % 2 == 0);
    round_trip(io::to_json(D), [](const json& j) { return io::to_json(io::divisor_from(j)); });
    CHECK(io::divisor_from(io::entries_json(D)) == D);
  }
  CHECK(io::divisor_from(json::array()).is_zero());
  CHECK_THROWS_AS(io::torsion_from(json{{"r1", "1/2"}}), io::SchemaError);
}

TEST_CASE("numeric documents") {
  PrecisionGuard g(80);
  NumericLattice L = make_numeric_lattice(Complex(Real("0.3"), Real("1.1")), Complex(1), 30);
  json j = io::to_json(L);
  CHECK(j["precision"] == 30);
  round_trip(j, [](const json& d) { return io::to_json(io::lattice_from(d, 40)); });
  Complex z(Real("0.125"), Real("-2.5"));
  CHECK(io::to_json(io::complex_from(io::to_json(z, 30)), 30) == io::to_json(z, 30));
  CHECK_THROWS_AS(io::complex_from(json{"1"}), io::SchemaError);
  CHECK_THROWS_AS(io::complex_from(json{"x", "0"}), io::SchemaError);
  UnipotentPair P{parse_qmat({{"1", "1"}, {"0", "1"}}), QMat::identity(2)};
  RealizationMatrix Z = realize(P, L);
  json zj = io::to_json(Z, 30);
  round_trip(zj, [](const json& d) { return io::to_json(io::realization_from(d), 30); });
}

TEST_CASE("result documents") {
  json v = io::to_json(rank1_test(PeriodicDivisor(), 2));
  CHECK(v["kind"] == "Algebraic");
  CHECK(v["witness"] == json::array());
  json s = io::to_json(solve_phi_minus_one(PeriodicDivisor::point(TorsionPoint()), 2));
  CHECK(s["kind"] == "NoSolution");
  CHECK(s.contains("certificate"));
  ExactCurve c = square();
  json w = io::to_json(elliptic_primitive(EllFun::X(c)));
  CHECK(w["kind"] == "Primitive");
  CHECK(w["r"] == "-1");
}
