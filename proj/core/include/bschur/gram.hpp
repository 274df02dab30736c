#ifndef BSCHUR_GRAM_HPP
#define BSCHUR_GRAM_HPP

#include <string>
#include <vector>

#include "bschur/murphy.hpp"
#include "bschur/residue.hpp"

namespace bschur {

// Entry alphabet for cell-module bases.
//   standard: entries 1..n, type (empty, (1^n)) — the full Weyl module
//   b_odd:    entries {0, 1, .., r}, 0 only in component 1 (m = 2r+1)
//   b_even:   entries {1, .., r} (m = 2r)
struct Alphabet {
  enum Kind { standard, b_odd, b_even } kind;
  long r = 0;  // floor(m/2) for the B kinds

  static Alphabet standard_kind() { return {standard, 0}; }
  static Alphabet for_m(long m) { return {m % 2 ? b_odd : b_even, m / 2}; }
  std::string to_string() const;
};

enum class CellStatus { NONZERO_FORM, ZERO_FORM, EMPTY_CELL };

std::string to_string(CellStatus s);

// Gram matrix of the (truncated) cell module of shape lambda over the given
// alphabet: symmetric matrix of the canonical bilinear form on the basis of
// admissible semistandard bitableaux, block-diagonal across contents.
struct GramMatrix {
  Bipartition shape;
  Alphabet alphabet;
  std::vector<Bitableau> index;  // admissible tableaux, sorted
  std::vector<std::vector<Scalar>> entries;

  bool empty() const { return index.empty(); }
  bool all_zero() const;
  CellStatus status() const;
  long exact_rank() const;  // rank over the coefficient field
};

// Which of the two composite orders realizes the defining congruence of the
// form. Both reproduce the worked fixture values (the matrices are mutual
// transposes and the form is symmetric); first_index_target is the pinned
// default and tests assert the fixtures against it.
enum class CompositeOrder { first_index_target, first_index_source };

GramMatrix gram_matrix(const MurphyBasis& basis, const Bipartition& lambda,
                       const Alphabet& alphabet,
                       CompositeOrder order = CompositeOrder::first_index_target);

CellStatus cell_status(const MurphyBasis& basis, const Bipartition& lambda,
                       const Alphabet& alphabet);

// Admissible tableaux for the alphabet.
std::vector<Bitableau> alphabet_tableaux(const Bipartition& lambda, long n,
                                         const Alphabet& alphabet);

}  // namespace bschur

#endif
