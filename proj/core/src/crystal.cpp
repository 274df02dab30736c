#include "bschur/crystal.hpp"

#include <algorithm>
#include <deque>

namespace bschur {

std::string Signature::word() const {
  std::string s;
  for (const auto& slot : slots) s += slot.addable ? ')' : '(';
  return s;
}

std::string Signature::reduced() const {
  std::string s;
  for (const auto& slot : slots)
    if (!slot.canceled) s += slot.addable ? ')' : '(';
  return s;
}

std::vector<std::pair<Box, bool>> addable_removable(const Bipartition& lambda,
                                                    const Residue& u, const ParamSpec& p) {
  std::vector<std::pair<Box, bool>> out;
  for (const Box& b : addable_boxes(lambda))
    if (box_residue(b, p) == u) out.emplace_back(b, true);
  for (const Box& b : removable_boxes(lambda))
    if (box_residue(b, p) == u) out.emplace_back(b, false);
  // strictly decreasing: component 1 above component 2, larger column first
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.ell != b.first.ell) return a.first.ell < b.first.ell;
    return a.first.c > b.first.c;
  });
  return out;
}

Signature signature(const Bipartition& lambda, const Residue& u, const ParamSpec& p) {
  Signature sig;
  for (const auto& [box, addable] : addable_removable(lambda, u, p))
    sig.slots.push_back({box, addable, false});
  // cancel matched "()" pairs: a removable "(" against the nearest addable
  // ")" below it
  std::vector<size_t> open;
  for (size_t i = 0; i < sig.slots.size(); ++i) {
    if (!sig.slots[i].addable) {
      open.push_back(i);
    } else if (!open.empty()) {
      sig.slots[open.back()].canceled = true;
      sig.slots[i].canceled = true;
      open.pop_back();
    }
  }
  return sig;
}

std::optional<Bipartition> f_tilde(const Bipartition& lambda, const Residue& u,
                                   const ParamSpec& p) {
  Signature sig = signature(lambda, u, p);
  // lowest uncanceled addable box
  for (auto it = sig.slots.rbegin(); it != sig.slots.rend(); ++it)
    if (it->addable && !it->canceled) return add_box(lambda, it->box);
  return std::nullopt;
}

std::optional<Bipartition> e_tilde(const Bipartition& lambda, const Residue& u,
                                   const ParamSpec& p) {
  Signature sig = signature(lambda, u, p);
  // highest uncanceled removable box
  for (const auto& slot : sig.slots)
    if (!slot.addable && !slot.canceled) return remove_box(lambda, slot.box);
  return std::nullopt;
}

std::set<Residue> addable_residues(const Bipartition& lambda, const ParamSpec& p) {
  std::set<Residue> out;
  for (const Box& b : addable_boxes(lambda)) out.insert(box_residue(b, p));
  return out;
}

std::set<Residue> removable_residues(const Bipartition& lambda, const ParamSpec& p) {
  std::set<Residue> out;
  for (const Box& b : removable_boxes(lambda)) out.insert(box_residue(b, p));
  return out;
}

Bipartition highest_weight(const Bipartition& lambda, const ParamSpec& p) {
  Bipartition cur = lambda;
  for (;;) {
    bool raised = false;
    for (const Residue& u : removable_residues(cur, p)) {
      if (auto up = e_tilde(cur, u, p)) {
        cur = *up;
        raised = true;
        break;
      }
    }
    if (!raised) return cur;
  }
}

bool is_kleshchev(const Bipartition& lambda, const ParamSpec& p) {
  return highest_weight(lambda, p) == Bipartition();
}

bool CrystalEdge::operator<(const CrystalEdge& o) const {
  if (from != o.from) return from < o.from;
  if (to != o.to) return to < o.to;
  return label < o.label;
}

CrystalGraph crystal_graph(long n_max, const ParamSpec& p) {
  if (n_max < 0 || n_max > 8)
    throw BoundError("crystal_graph: n_max bound is 8");
  CrystalGraph g;
  g.n_max = n_max;
  g.params = p;
  for (long s = 0; s <= n_max; ++s)
    for (const Bipartition& lam : enumerate_bipartitions(s)) g.vertices.push_back(lam);
  for (const Bipartition& lam : g.vertices) {
    if (lam.size() == n_max) continue;
    for (const Residue& u : addable_residues(lam, p))
      if (auto img = f_tilde(lam, u, p)) g.edges.push_back({lam, *img, u});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string CrystalGraph::to_dot() const {
  std::string s = "digraph crystal {\n";
  s += "  rankdir=LR;\n";
  for (const Bipartition& v : vertices)
    s += "  \"" + v.to_string() + "\";\n";
  for (const CrystalEdge& e : edges)
    s += "  \"" + e.from.to_string() + "\" -> \"" + e.to.to_string() + "\" [label=\"" +
         e.label.to_string() + "\"];\n";
  s += "}\n";
  return s;
}

Component component(const Bipartition& lambda, const ParamSpec& p,
                    std::optional<long> size_bound) {
  long bound = size_bound.value_or(lambda.size());
  Component comp;
  comp.highest = highest_weight(lambda, p);
  std::set<Bipartition> seen = {lambda};
  std::deque<Bipartition> queue = {lambda};
  while (!queue.empty()) {
    Bipartition cur = queue.front();
    queue.pop_front();
    comp.vertices.push_back(cur);
    // raising neighbours
    for (const Residue& u : removable_residues(cur, p))
      if (auto up = e_tilde(cur, u, p))
        if (seen.insert(*up).second) queue.push_back(*up);
    // lowering neighbours within the bound
    if (cur.size() < bound)
      for (const Residue& u : addable_residues(cur, p))
        if (auto down = f_tilde(cur, u, p))
          if (seen.insert(*down).second) queue.push_back(*down);
  }
  std::sort(comp.vertices.begin(), comp.vertices.end());
  return comp;
}

}  // namespace bschur
