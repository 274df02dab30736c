#ifndef BSCHUR_CRYSTAL_HPP
#define BSCHUR_CRYSTAL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bschur/residue.hpp"

namespace bschur {

// One signed slot of the parenthesis rule: a removable box renders as "("
// and an addable box as ")", listed in decreasing box order (component 1
// above component 2, larger columns first within a component).
struct SignatureSlot {
  Box box;
  bool addable;       // false: removable
  bool canceled;      // matched against a neighbour
};

struct Signature {
  std::vector<SignatureSlot> slots;
  std::string word() const;     // "(" / ")" sequence as listed
  std::string reduced() const;  // cancellation-free word
};

// Addable/removable boxes of residue u, in the decreasing order above.
std::vector<std::pair<Box, bool>> addable_removable(const Bipartition& lambda,
                                                    const Residue& u, const ParamSpec& p);

Signature signature(const Bipartition& lambda, const Residue& u, const ParamSpec& p);

// Kashiwara operators; empty optional when no uncanceled slot of the needed
// kind exists.
std::optional<Bipartition> f_tilde(const Bipartition& lambda, const Residue& u,
                                   const ParamSpec& p);
std::optional<Bipartition> e_tilde(const Bipartition& lambda, const Residue& u,
                                   const ParamSpec& p);

// Residues carried by at least one addable (resp. removable) box.
std::set<Residue> addable_residues(const Bipartition& lambda, const ParamSpec& p);
std::set<Residue> removable_residues(const Bipartition& lambda, const ParamSpec& p);

// Highest weight of the component of lambda: the unique vertex killed by
// every raising operator, reached by iterated e_tilde.
Bipartition highest_weight(const Bipartition& lambda, const ParamSpec& p);

bool is_kleshchev(const Bipartition& lambda, const ParamSpec& p);

struct CrystalEdge {
  Bipartition from, to;
  Residue label;
  bool operator<(const CrystalEdge& o) const;
};

struct CrystalGraph {
  long n_max;
  ParamSpec params;
  std::vector<Bipartition> vertices;  // sizes 0..n_max, enumeration order per size
  std::vector<CrystalEdge> edges;     // sorted

  std::string to_dot() const;
};

// Full labeled crystal on bipartitions of size <= n_max (guarded at 8).
CrystalGraph crystal_graph(long n_max, const ParamSpec& p);

// Connected component of lambda restricted to sizes <= |lambda| (or to
// size_bound when given), plus its highest weight vertex.
struct Component {
  std::vector<Bipartition> vertices;
  Bipartition highest;
};

Component component(const Bipartition& lambda, const ParamSpec& p,
                    std::optional<long> size_bound = std::nullopt);

}  // namespace bschur

#endif
