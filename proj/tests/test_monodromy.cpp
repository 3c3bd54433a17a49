#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellip/errors.hpp"
#include "ellip/monodromy.hpp"
#include "random_elements.hpp"

using namespace ellip;

namespace {

QMat jordan2() { return parse_qmat({{"1", "1"}, {"0", "1"}}); }

NumericLattice generic_lattice(int digits) {
  PrecisionGuard g(static_cast<unsigned>(digits + 20));
  return make_numeric_lattice(Complex(Real("0.3"), Real("1.1")), Complex(1), digits);
}

/// Same shape with ω2 ≠ 1, to exercise the rescaling.
NumericLattice skew_lattice(int digits) {
  PrecisionGuard g(static_cast<unsigned>(digits + 20));
  return make_numeric_lattice(Complex(Real("-0.4"), Real("1.7")), Complex(Real("1.2"), Real("0.5")), digits);
}

}  // namespace

TEST_CASE("finite log and exp") {
  QMat I = QMat::identity(3);
  CHECK(is_zero(nilpotent_log(I)));
  CHECK(nilpotent_log(jordan2()) == parse_qmat({{"0", "1"}, {"0", "0"}}));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    QMat M = QMat::identity(4) + testing::random_nilpotent(rng, 4);
    CHECK(nilpotent_exp(nilpotent_log(M)) == M);
    QMat N = testing::random_nilpotent(rng, 4);
    CHECK(nilpotent_log(nilpotent_exp(N)) == N);
  }
  CHECK_THROWS_AS(nilpotent_log(parse_qmat({{"2", "0"}, {"0", "1"}})), NotUnipotent);
  CHECK_THROWS_AS(nilpotent_exp(parse_qmat({{"0", "1"}, {"1", "0"}})), NotNilpotent);
  UnipotentPair bad{jordan2(), parse_qmat({{"1", "0"}, {"1", "1"}})};
  CHECK_THROWS_AS(bad.validate(), NotCommuting);
}

TEST_CASE("period function") {
  PrecisionGuard g(60);
  for (const NumericLattice& L : {generic_lattice(40), skew_lattice(40)}) {
    PeriodFunction pf = period_function(L);
    CHECK(abs(abs(pf.det) - 2 * pi()) < pow10(-30));
    // ζ from the independent row-sum evaluator
    auto ell = [&](const Complex& z) { return pf.a * z + pf.b * wp_eval_direct(L, z).zeta; };
    for (const Complex& z0 : {Complex(Real("0.21"), Real("0.13")), Complex(Real("0.6"), Real("0.4"))}) {
      CHECK(abs(ell(z0 + L.omega2()) - ell(z0)) < pow10(-25));
      CHECK(abs(ell(z0 + L.omega1()) - ell(z0) - Complex(1)) < pow10(-25));
    }
  }
}

TEST_CASE("realization examples") {
  PrecisionGuard g(60);
  NumericLattice L = generic_lattice(40);
  QMat I = QMat::identity(2), J = jordan2();
  UnipotentPair id{I, I};
  RealizationMatrix Z0 = realize(id, L);
  REQUIRE(Z0.entries[0].size() == 1);
  CHECK(abs(Z0.entries[0].at({0, 0}) - Complex(1)) == 0);
  CHECK(Z0.entries[1].empty());
  CHECK(verify_monodromy(Z0, id, L, 4) == 0);

  UnipotentPair p1{J, I};
  RealizationMatrix Z1 = realize(p1, L);
  PeriodFunction pf = period_function(L);
  REQUIRE(Z1.entries[1].size() == 2);
  CHECK(abs(Z1.entries[1].at({1, 0}) - pf.a) < pow10(-35));
  CHECK(abs(Z1.entries[1].at({0, 1}) - pf.b) < pow10(-35));
  CHECK(Z1.entries[2].empty());
  CHECK(verify_monodromy(Z1, p1, L, 5) < pow10(-20));

  UnipotentPair p2{I, J};
  CHECK(verify_monodromy(realize(p2, L), p2, L, 5) < pow10(-20));

  UnipotentPair wrong{parse_qmat({{"1", "2"}, {"0", "1"}}), I};
  CHECK(verify_monodromy(Z1, wrong, L, 3) > pow10(-3));
}

TEST_CASE("random commuting pairs") {
  PrecisionGuard g(60);
  std::mt19937_64 rng(8);
  NumericLattice Ls[] = {generic_lattice(40), skew_lattice(40)};
  for (int t = 0; t < 20; ++t) {
    const NumericLattice& L = Ls[t % 2];
    size_t n = 2 + static_cast<size_t>(t % 3);
    UnipotentPair P = testing::random_unipotent_pair(rng, n);
    RealizationMatrix Z = realize(P, L);
    CHECK(verify_monodromy(Z, P, L, 3, static_cast<std::uint64_t>(t)) < pow10(10 - 40));
    Complex d = realization_det(Z, L, Complex(Real("0.37"), Real("0.29")));
    CHECK(abs(d - Complex(1)) < pow10(-30));
  }
}

TEST_CASE("potential unipotence") {
  QMat rot = parse_qmat({{"0", "-1"}, {"1", "0"}});
  CHECK(eigenvalues_are_roots_of_unity(rot));
  CHECK(eigenvalues_are_roots_of_unity(parse_qmat({{"-1", "1", "0"}, {"0", "-1", "0"}, {"0", "0", "1"}})));
  CHECK_FALSE(eigenvalues_are_roots_of_unity(parse_qmat({{"2", "0"}, {"0", "1"}})));
  CHECK_FALSE(eigenvalues_are_roots_of_unity(parse_qmat({{"0", "1"}, {"1", "1"}})));
  // order 3 rotation in SL2(Z)
  QMat r3 = parse_qmat({{"0", "-1"}, {"1", "-1"}});
  CHECK(charpoly(r3) == Poly(std::vector<Scalar>{1, 1, 1}));
  CHECK(eigenvalues_are_roots_of_unity(r3));
  // J = C J^2 C⁻¹ with C = diag(1, 2)
  CHECK(potentially_unipotent(jordan2(), parse_qmat({{"1", "0"}, {"0", "2"}}), 2));
  // rot^5 = rot
  CHECK(potentially_unipotent(rot, QMat::identity(2), 5));
  CHECK_THROWS_AS(potentially_unipotent(rot, QMat::identity(2), 2), HypothesisViolated);
}
