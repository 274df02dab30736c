#include "bschur/scalar.hpp"

#include <complex>
#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace bschur;
using bschur_test::random_nonzero;
using bschur_test::random_scalar;
using bschur_test::spec_matrix;

TEST_CASE("basic arithmetic and normal forms") {
  const ScalarField& F = ScalarField::get(ParamSpec::generic());
  Scalar q = F.q_pow(1);
  CHECK(q + q == F.integer(2) * q);
  CHECK((q - q).is_zero());
  CHECK(q * F.q_pow(-1) == F.one());
  CHECK_THROWS_AS(F.zero().inv(), DomainError);

  const ScalarField& F2 = ScalarField::get(ParamSpec::at(2, std::nullopt));
  CHECK(F2.q_pow(1) * F2.q_pow(1) == F2.one());  // q^2 = 1 at e = 2

  const ScalarField& Fk = ScalarField::get(ParamSpec::at(std::nullopt, 1));
  CHECK((Fk.Q() + Fk.q_pow(1)).is_zero());  // Q = -q forces Q + q = 0
}

TEST_CASE("rendering") {
  const ScalarField& F = ScalarField::get(ParamSpec::generic());
  Scalar v = F.q_pow(-1) * F.Q() + F.one();
  CHECK(v.to_string() == "q^-1*Q + 1");
  CHECK(F.zero().to_string() == "0");
  CHECK((F.Q() + F.one()).to_string() == "Q + 1");
  CHECK(((F.Q() + F.one()) * (F.Q() * F.q_pow(1) + F.one())).to_string() ==
        "q*Q^2 + q*Q + Q + 1");
  CHECK((F.one() / (F.Q() + F.one())).to_string() == "(1)/(Q + 1)");
  CHECK(F.integer(-3).to_string() == "-3");
}

TEST_CASE("field axioms on random scalars across the spec matrix") {
  std::mt19937 rng(20240817);
  for (const ParamSpec& spec : spec_matrix()) {
    const ScalarField& F = ScalarField::get(spec);
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
      Scalar a = random_scalar(F, rng);
      Scalar b = random_scalar(F, rng);
      Scalar c = random_scalar(F, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - a).is_zero());
      Scalar nz = random_nonzero(F, rng);
      REQUIRE(nz * nz.inv() == F.one());
    }
  }
}

namespace {

// numeric oracle: evaluate Q + q^i at a primitive e-th root of unity with
// Q = -q^k, entirely outside the exact layer
bool numeric_vanishes(int e, int k, long i) {
  const double pi = 3.14159265358979323846;
  std::complex<double> q = std::polar(1.0, 2 * pi / e);
  std::complex<double> Q = -std::pow(q, k);
  return std::abs(Q + std::pow(q, static_cast<double>(i))) < 1e-9;
}

}  // namespace

TEST_CASE("factor_vanishes: examples and the numeric oracle") {
  CHECK(factor_vanishes(ParamSpec::at(std::nullopt, 1), 1));
  CHECK(factor_vanishes(ParamSpec::at(3, 1), 4));  // 4 = 1 mod 3
  CHECK(numeric_vanishes(3, 1, 4));
  CHECK_FALSE(factor_vanishes(ParamSpec::generic(), 0));

  for (int e = 2; e <= 6; ++e)
    for (int k = -3; k <= 3; ++k)
      for (long i = -12; i <= 12; ++i)
        CHECK(factor_vanishes(ParamSpec::at(e, k), i) == numeric_vanishes(e, k, i));
}

TEST_CASE("factor_vanishes agrees with exact zero-testing of Q + q^i") {
  for (const ParamSpec& spec : spec_matrix()) {
    const ScalarField& F = ScalarField::get(spec);
    for (long i = -12; i <= 12; ++i) {
      Scalar value = F.Q() + F.q_pow(i);
      CHECK(factor_vanishes(spec, i) == value.is_zero());
    }
  }
}

TEST_CASE("k_window_vanishes") {
  CHECK(k_window_vanishes(ParamSpec::at(std::nullopt, 1), -1, 1));  // f_2 window
  CHECK_FALSE(k_window_vanishes(ParamSpec::generic(), -5, 5));
  CHECK(k_window_vanishes(ParamSpec::at(2, 0), 2, 3));  // 2 = 0 mod 2
  CHECK_FALSE(k_window_vanishes(ParamSpec::at(std::nullopt, 0), 2, 0));  // empty window
}

TEST_CASE("cyclotomic reduction keeps inverses exact") {
  std::mt19937 rng(7);
  for (int e = 2; e <= 6; ++e) {
    const ScalarField& F = ScalarField::get(ParamSpec::at(e, std::nullopt));
    for (int i = 0; i < 200; ++i) {
      Scalar a = random_nonzero(F, rng);
      REQUIRE((a.inv() * a) == F.one());
    }
    // q has multiplicative order exactly e
    Scalar p = F.one();
    for (int j = 1; j < e; ++j) {
      p = p * F.q_pow(1);
      CHECK(p != F.one());
    }
    CHECK(p * F.q_pow(1) == F.one());
  }
}
