#ifndef BSCHUR_ALPHA_HPP
#define BSCHUR_ALPHA_HPP

#include <vector>

#include "bschur/bipartition.hpp"

namespace bschur {

// Symmetric weight vector indexed by I(m). Stored by its non-negative half:
// a0 is the entry at index 0 (odd m only; odd value), pos[i-1] the entry at
// index i for 1 <= i <= r = floor(m/2). Entries sum to 2n+1 for m odd and to
// 2n for m even (the index 0 is absent then).
struct Alpha {
  long m = 0;
  long a0 = 0;  // meaningful only when m is odd
  Parts pos;    // entries at indices 1..r

  long r() const { return m / 2; }
  long rank() const;  // the n with sum = 2n+1 (odd m) / 2n (even m)
  void validate() const;

  bool operator==(const Alpha& o) const { return m == o.m && a0 == o.a0 && pos == o.pos; }
  bool operator<(const Alpha& o) const;
  std::string to_string() const;
};

// All alpha in B_n(m).
std::vector<Alpha> enumerate_Bnm(long n, long m);

// lambda(alpha) = ((floor(a0/2)), (alpha_1, ..., alpha_r)) as a bicomposition
// (zero parts retained).
Bicomposition lambda_of_alpha(const Alpha& alpha);

// Generator indices of the parabolic subgroup attached to alpha: the s_i
// with 0 <= i < n that are not cut at a block boundary.
std::vector<int> G_alpha(const Alpha& alpha);

// Membership in Lambda^B_{n,m} for a canonical bipartition: odd m admits a
// first component with at most one part and a second with at most r parts;
// even m requires an empty first component.
bool in_LambdaB(const Bipartition& lambda, long n, long m);

}  // namespace bschur

#endif
