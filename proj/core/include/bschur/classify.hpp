#ifndef BSCHUR_CLASSIFY_HPP
#define BSCHUR_CLASSIFY_HPP

#include <string>
#include <vector>

#include "bschur/crystal.hpp"
#include "bschur/gram.hpp"

namespace bschur {

enum class Parity { odd, even };

inline Parity parity_of(long m) { return m % 2 ? Parity::odd : Parity::even; }
std::string to_string(Parity p);

// Large-m classification of a one-component shape: the cell form survives
// truncation iff no factor (Q + q^{a-b}) over the relevant rows vanishes
// (rows from a = 2 for odd m, from a = 1 for even m).
bool row_formula_lnx(const Bipartition& lambda, Parity parity, const ParamSpec& p);

// Closed-form diagonal Gram entry at the generator tableau of a
// one-component shape: product of (Q q^{b-a} + 1) over the same rows.
Scalar gram_generator_value(const Bipartition& lambda, Parity parity, const ParamSpec& p);

// The generator tableau itself (letters by row: 0,1,2,... for odd parity,
// 1,2,3,... for even parity).
Bitableau generator_tableau(const Bipartition& lambda, Parity parity);

// Exponent window [2 - floor(n/2), n-1]: the k with Q = -q^k for which some
// one-component shape of size <= n can fail the odd-parity row formula.
// Empty when lo > hi.
std::pair<long, long> klimits_window(long n);

enum class LnxStatus { LNX, NOT_LNX, UNKNOWN };
enum class LnxEvidence {
  lambdaB_membership,
  crystal_propagation,
  row_formula,
  b_even_classification,
  gram_oracle,
  none,
};

std::string to_string(LnxStatus s);
std::string to_string(LnxEvidence e);

struct LnxVerdict {
  LnxStatus status;
  LnxEvidence evidence;
  std::string detail;
};

// Decision procedure for membership of lambda in the simple-indexing set of
// the rank-n endomorphism algebra at dimension m. Large m (>= 2n) uses
// crystal reasoning; small m goes straight to the Gram oracle.
LnxVerdict is_lnx(const Bipartition& lambda, long m, const ParamSpec& p);

struct QhVerdict {
  bool qh;
  std::string certificate;
};

// Quasi-hereditarity of the rank-n algebra at dimension m. Large m reduces
// to the vanishing window on Q + q^i; small m counts zero forms over
// nonempty truncated cells (rank bound 4 applies there).
QhVerdict is_quasi_hereditary(long n, long m, const ParamSpec& p);

// alpha_u^vee(b) = b(qu) + b(q^{-1}u) - 2 b(u) + [u = -1] + [u = Q].
long alpha_coroot(const ResidueFn& b, const Residue& u, const ParamSpec& p);

// Residues where alpha_coroot can be nonzero for this b.
std::vector<Residue> relevant_residues(const ResidueFn& b, const ParamSpec& p);

bool is_dominant(const ResidueFn& b, const ParamSpec& p);

struct ReductionStep {
  Residue u;
  long delta;  // negative alpha value applied at u
};

struct DominantReduction {
  ResidueFn reduced;
  std::vector<ReductionStep> trace;
};

// Repeatedly lowers b at residues with negative coroot value until dominant.
// Requires b to be realized by some bipartition.
DominantReduction dominant_reduce(const ResidueFn& b, const ParamSpec& p);

struct BlockReport {
  ResidueFn b;
  std::vector<Bipartition> members;
  std::vector<std::pair<Residue, long>> alpha;  // coroot profile on relevant residues
  DominantReduction reduction;
  bool qh;
};

// Block decomposition of the rank-n algebra by residue function, with
// per-block quasi-hereditarity for the given parity of large m.
std::vector<BlockReport> blocks(long n, const ParamSpec& p, Parity parity);

// Quasi-hereditarity of the dominant block with invariant b: fails exactly
// when b dominates the residue function of a minimal non-surviving witness
// shape (a column (1^{k+1}) for k in K, k >= 1 odd / k >= 0 even; a 2 x j
// rectangle with 2 - j in K for odd; a row (k+1) with -k in K for even).
bool block_is_qh(const ResidueFn& b, Parity parity, const ParamSpec& p);

}  // namespace bschur

#endif
