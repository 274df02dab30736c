#ifndef BSCHUR_BIPARTITION_HPP
#define BSCHUR_BIPARTITION_HPP

#include <string>
#include <vector>

#include "bschur/common.hpp"

namespace bschur {

using Parts = std::vector<long>;

// Pair of compositions. Trailing zeros are allowed; helpers below work with
// the canonical (stripped) form where noted.
struct Bicomposition {
  Parts c1, c2;

  long size() const;
  bool operator==(const Bicomposition& o) const { return c1 == o.c1 && c2 == o.c2; }
  bool operator<(const Bicomposition& o) const;

  Bicomposition stripped() const;  // trailing zeros removed from both parts
  std::string to_string() const;   // shape string grammar: "a,b|c", "" = empty
};

// Bicomposition whose components are weakly decreasing, kept in canonical
// form (trailing zeros stripped).
struct Bipartition {
  Parts c1, c2;

  Bipartition() = default;
  Bipartition(Parts a, Parts b);  // validates and canonicalizes

  long size() const;
  const Parts& comp(int ell) const { return ell == 1 ? c1 : c2; }

  bool operator==(const Bipartition& o) const { return c1 == o.c1 && c2 == o.c2; }
  bool operator!=(const Bipartition& o) const { return !(*this == o); }
  bool operator<(const Bipartition& o) const;

  Bicomposition as_bicomposition() const { return {c1, c2}; }
  std::string to_string() const;
};

// Box (r, c, ell): row r >= 1, column c >= 1, component ell in {1, 2}.
struct Box {
  long r, c;
  int ell;
  bool operator==(const Box& o) const { return r == o.r && c == o.c && ell == o.ell; }
  bool operator<(const Box& o) const;
  std::string to_string() const;
};

enum class Dominance { dominates, dominated, equal, incomparable };

// Dominance order on bicompositions of equal size (DJM convention): lambda
// dominates mu iff every prefix sum of lambda's first component weakly
// exceeds mu's, and |lambda^(1)| plus every prefix sum of lambda^(2) weakly
// exceeds the corresponding value for mu.
Dominance dominance_cmp(const Bicomposition& lambda, const Bicomposition& mu);

inline bool strictly_dominates(const Bipartition& a, const Bipartition& b) {
  return dominance_cmp(a.as_bicomposition(), b.as_bicomposition()) == Dominance::dominates;
}

// All bipartitions of n, each once, in an order where lambda > mu in
// dominance implies lambda comes first.
std::vector<Bipartition> enumerate_bipartitions(long n);

// All partitions of n, weakly decreasing.
std::vector<Parts> enumerate_partitions(long n);

// Row-unstacking of a one-component bipartition and its inverse.
Bipartition unstack(const Bipartition& lambda);   // requires lambda.c2 empty
Bipartition stack(const Bicomposition& rho);      // requires concat weakly decreasing

// Membership in Lambda_{n,m}: second component fits in floor(m/2) rows.
bool in_Lambda_nm(const Bipartition& lambda, long n, long m);

// Shape-string / JSON parsing ("a,b|c" or [[a,b],[c]]).
Bipartition parse_shape(const std::string& text);

// Diagram box listings.
std::vector<Box> diagram_boxes(const Bipartition& lambda);
std::vector<Box> addable_boxes(const Bipartition& lambda);
std::vector<Box> removable_boxes(const Bipartition& lambda);
Bipartition add_box(const Bipartition& lambda, const Box& b);
Bipartition remove_box(const Bipartition& lambda, const Box& b);

// Whether every box of inner lies in the diagram of outer.
bool contains_diagram(const Bipartition& outer, const Bipartition& inner);

}  // namespace bschur

#endif
