#ifndef BSCHUR_RESIDUE_HPP
#define BSCHUR_RESIDUE_HPP

#include <map>
#include <string>

#include "bschur/bipartition.hpp"
#include "bschur/params.hpp"
#include "bschur/scalar.hpp"

namespace bschur {

// Point of the residue set U = Q*q^Z  u  -q^Z, in canonical form for the
// given ParamSpec: exponents are reduced mod e, and when Q = -q^k the Q-line
// is folded onto the minus-line via exponent shift by k. Residues compare
// structurally; no Scalar evaluation is involved.
struct Residue {
  bool q_line;  // true: Q*q^exp, false: -q^exp
  long exp;

  bool operator==(const Residue& o) const { return q_line == o.q_line && exp == o.exp; }
  bool operator!=(const Residue& o) const { return !(*this == o); }
  bool operator<(const Residue& o) const {
    if (q_line != o.q_line) return q_line < o.q_line;
    return exp < o.exp;
  }

  // Rendering used in DOT edge labels and TSV/JSON reports: "-q^j" / "Q*q^j".
  std::string to_string() const;
};

Residue canonical_residue(bool q_line, long exp, const ParamSpec& p);

// Residue of a box: Q*q^(c-r) in component 1, -q^(c-r) in component 2.
Residue box_residue(const Box& b, const ParamSpec& p);

// Exact scalar value of a residue (for cross-checks against the structural
// form; equality of canonical residues must match equality of these values).
Scalar residue_value(const Residue& u, const ScalarField& F);

// Residue shifted by one arrow step u -> q^{+-1} u.
Residue residue_q_shift(const Residue& u, long shift, const ParamSpec& p);

// The block invariant b_lambda: count of diagram boxes per residue.
using ResidueFn = std::map<Residue, long>;

ResidueFn residue_fn(const Bipartition& lambda, const ParamSpec& p);

std::string residue_fn_to_string(const ResidueFn& b);

// Description of U for reporting: number of lines (1 or 2) and cycle length
// (e when finite, 0 meaning an infinite A-line).
struct ResidueSetShape {
  int lines;
  long cycle;  // 0 = infinite
  std::string to_string() const;
};

ResidueSetShape residue_set(const ParamSpec& p);

}  // namespace bschur

#endif
