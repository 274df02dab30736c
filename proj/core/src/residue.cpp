#include "bschur/residue.hpp"

namespace bschur {

Residue canonical_residue(bool q_line, long exp, const ParamSpec& p) {
  Residue u{q_line, exp};
  if (q_line && p.k) {
    // Q*q^j = -q^(j+k)
    u.q_line = false;
    u.exp = exp + *p.k;
  }
  u.exp = p.reduce_exp(u.exp);
  return u;
}

Residue box_residue(const Box& b, const ParamSpec& p) {
  return canonical_residue(b.ell == 1, b.c - b.r, p);
}

Scalar residue_value(const Residue& u, const ScalarField& F) {
  return u.q_line ? F.Q_pow_q(u.exp) : F.minus_q_pow(u.exp);
}

Residue residue_q_shift(const Residue& u, long shift, const ParamSpec& p) {
  return canonical_residue(u.q_line, u.exp + shift, p);
}

std::string Residue::to_string() const {
  if (q_line) {
    if (exp == 0) return "Q";
    return "Q*q^" + std::to_string(exp);
  }
  if (exp == 0) return "-1";
  if (exp == 1) return "-q";
  return "-q^" + std::to_string(exp);
}

ResidueFn residue_fn(const Bipartition& lambda, const ParamSpec& p) {
  ResidueFn b;
  for (const Box& box : diagram_boxes(lambda)) b[box_residue(box, p)]++;
  return b;
}

std::string residue_fn_to_string(const ResidueFn& b) {
  std::string s = "{";
  bool first = true;
  for (const auto& [u, count] : b) {
    if (count == 0) continue;
    if (!first) s += ", ";
    s += u.to_string() + ":" + std::to_string(count);
    first = false;
  }
  s += "}";
  return s;
}

ResidueSetShape residue_set(const ParamSpec& p) {
  ResidueSetShape shape;
  shape.lines = p.k ? 1 : 2;
  shape.cycle = p.e ? *p.e : 0;
  return shape;
}

std::string ResidueSetShape::to_string() const {
  std::string s = lines == 1 ? "one " : "two ";
  if (cycle == 0)
    s += lines == 1 ? "A-infinity line" : "A-infinity lines";
  else
    s += std::to_string(cycle) + "-cycle" + (lines == 1 ? "" : "s");
  return s;
}

}  // namespace bschur
