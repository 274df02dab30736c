#ifndef BSCHUR_TEST_UTIL_HPP
#define BSCHUR_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "bschur/params.hpp"
#include "bschur/scalar.hpp"

namespace bschur_test {

using bschur::ParamSpec;
using bschur::Scalar;
using bschur::ScalarField;

// The standard ParamSpec matrix used across suites:
// {generic, e=2..emax} x {generic Q, k in [kmin, kmax]}.
inline std::vector<ParamSpec> spec_matrix(int emax = 6, int kmin = -3, int kmax = 3) {
  std::vector<ParamSpec> specs;
  std::vector<std::optional<int>> es = {std::nullopt};
  for (int e = 2; e <= emax; ++e) es.push_back(e);
  std::vector<std::optional<int>> ks = {std::nullopt};
  for (int k = kmin; k <= kmax; ++k) ks.push_back(k);
  for (auto e : es)
    for (auto k : ks) specs.push_back(ParamSpec::at(e, k));
  return specs;
}

// Small random scalars: Laurent monomials in q and Q, sums of two of them,
// and rational multiples.
inline Scalar random_scalar(const ScalarField& F, std::mt19937& rng) {
  std::uniform_int_distribution<int> expd(-3, 3), pick(0, 5), coef(-4, 4);
  auto monomial = [&]() {
    int c = coef(rng);
    Scalar base = pick(rng) < 2 ? F.Q_pow_q(expd(rng)) : F.q_pow(expd(rng));
    return F.integer(c) * base;
  };
  switch (pick(rng)) {
    case 0: return F.integer(coef(rng));
    case 1:
    case 2: return monomial();
    case 3: return monomial() + monomial();
    case 4: return monomial() + F.integer(coef(rng));
    default: {
      Scalar s = monomial() + F.one();
      return s.is_zero() ? F.one() : s;
    }
  }
}

inline Scalar random_nonzero(const ScalarField& F, std::mt19937& rng) {
  for (int tries = 0; tries < 64; ++tries) {
    Scalar s = random_scalar(F, rng);
    if (!s.is_zero()) return s;
  }
  return F.one();
}

}  // namespace bschur_test

#endif
