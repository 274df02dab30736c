#include "bschur/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bschur/alpha.hpp"
#include "bschur/engine.hpp"

namespace bschur {

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

std::string to_string(LnxStatus s) {
  switch (s) {
    case LnxStatus::LNX: return "LNX";
    case LnxStatus::NOT_LNX: return "NOT_LNX";
    case LnxStatus::UNKNOWN: return "UNKNOWN";
  }
  return "?";
}

std::string to_string(LnxEvidence e) {
  switch (e) {
    case LnxEvidence::lambdaB_membership: return "LambdaB-membership";
    case LnxEvidence::crystal_propagation: return "crystal-propagation";
    case LnxEvidence::row_formula: return "row-formula";
    case LnxEvidence::b_even_classification: return "B-even-classification";
    case LnxEvidence::gram_oracle: return "gram-oracle";
    case LnxEvidence::none: return "none";
  }
  return "?";
}

bool row_formula_lnx(const Bipartition& lambda, Parity parity, const ParamSpec& p) {
  if (!lambda.c2.empty())
    throw DomainError("row_formula_lnx: second component must be empty");
  size_t start = parity == Parity::odd ? 1 : 0;  // row index a-1
  for (size_t a = start; a < lambda.c1.size(); ++a)
    for (long b = 1; b <= lambda.c1[a]; ++b)
      if (factor_vanishes(p, static_cast<long>(a + 1) - b)) return false;
  return true;
}

Scalar gram_generator_value(const Bipartition& lambda, Parity parity, const ParamSpec& p) {
  if (!lambda.c2.empty())
    throw DomainError("gram_generator_value: second component must be empty");
  const ScalarField& F = ScalarField::get(p);
  Scalar prod = F.one();
  size_t start = parity == Parity::odd ? 1 : 0;
  for (size_t a = start; a < lambda.c1.size(); ++a)
    for (long b = 1; b <= lambda.c1[a]; ++b)
      prod *= F.Q_pow_q(b - static_cast<long>(a + 1)) + F.one();
  return prod;
}

Bitableau generator_tableau(const Bipartition& lambda, Parity parity) {
  if (!lambda.c2.empty())
    throw DomainError("generator_tableau: second component must be empty");
  Bitableau t(lambda);
  int offset = parity == Parity::odd ? -1 : 0;
  for (const Box& b : diagram_boxes(lambda))
    t.set_entry(b, static_cast<int>(b.r) + offset);
  return t;
}

std::pair<long, long> klimits_window(long n) {
  if (n < 1) throw DomainError("klimits_window: n >= 1 required");
  return {2 - n / 2, n - 1};
}

namespace {

// K cap [lo, hi] for K = {k : Q = -q^k}.
std::vector<long> K_in_window(const ParamSpec& p, long lo, long hi) {
  std::vector<long> out;
  if (!p.k) return out;
  if (!p.e) {
    if (lo <= *p.k && *p.k <= hi) out.push_back(*p.k);
    return out;
  }
  long e = *p.e;
  long base = ((*p.k % e) + e) % e;
  long first = base + e * ((lo - base) / e);
  while (first < lo) first += e;
  while (first - e >= lo) first -= e;
  for (long k = first; k <= hi; k += e) out.push_back(k);
  return out;
}

}  // namespace

LnxVerdict is_lnx(const Bipartition& lambda, long m, const ParamSpec& p) {
  long n = lambda.size();
  if (m < 1) throw DomainError("is_lnx: m >= 1 required");

  if (m >= 2 * n && n > 0) {
    Parity par = parity_of(m);
    long m_prime = par == Parity::odd ? 2 * n + 1 : 2 * n;
    // (a) the component of lambda meets Lambda^B
    if (in_LambdaB(lambda, n, m_prime))
      return {LnxStatus::LNX, LnxEvidence::lambdaB_membership, lambda.to_string()};
    Component comp = component(lambda, p);
    for (const Bipartition& v : comp.vertices)
      if (v.size() == n && in_LambdaB(v, n, m_prime))
        return {LnxStatus::LNX, LnxEvidence::crystal_propagation,
                "component contains " + v.to_string()};
    // (b) one-component highest weight decides via the row formula
    const Bipartition& hw = comp.highest;
    if (hw.c2.empty()) {
      bool ok = row_formula_lnx(hw, par, p);
      return {ok ? LnxStatus::LNX : LnxStatus::NOT_LNX, LnxEvidence::row_formula,
              "highest weight " + hw.to_string()};
    }
    // (c) q not a root of unity of order <= n: hw with boxes in the second
    // component cannot head a surviving component
    if (!p.e || *p.e > n)
      return {LnxStatus::NOT_LNX, LnxEvidence::b_even_classification,
              "highest weight " + hw.to_string()};
    // (d) Gram oracle fallback
    if (n <= 4) {
      CellStatus st = cell_status(murphy_engine(static_cast<int>(n), p), lambda,
                                  Alphabet::for_m(m_prime));
      return {st == CellStatus::NONZERO_FORM ? LnxStatus::LNX : LnxStatus::NOT_LNX,
              LnxEvidence::gram_oracle, to_string(st)};
    }
    return {LnxStatus::UNKNOWN, LnxEvidence::none, "outside oracle bound"};
  }

  // small m: Gram oracle on the truncated cell directly
  if (n <= 4) {
    CellStatus st = cell_status(murphy_engine(static_cast<int>(n), p), lambda,
                                Alphabet::for_m(m));
    return {st == CellStatus::NONZERO_FORM ? LnxStatus::LNX : LnxStatus::NOT_LNX,
            LnxEvidence::gram_oracle, to_string(st)};
  }
  return {LnxStatus::UNKNOWN, LnxEvidence::none, "outside oracle bound"};
}

QhVerdict is_quasi_hereditary(long n, long m, const ParamSpec& p) {
  if (n < 0 || m < 1) throw DomainError("is_quasi_hereditary: need n >= 0, m >= 1");
  if (n == 0) return {true, "rank 0 algebra"};
  if (m >= 2 * n) {
    long lo = parity_of(m) == Parity::odd ? 2 - n / 2 : 1 - n;
    long hi = n - 1;
    for (long i = lo; i <= hi; ++i)
      if (factor_vanishes(p, i))
        return {false, "Q + q^" + std::to_string(i) + " = 0"};
    return {true, "window [" + std::to_string(lo) + "," + std::to_string(hi) + "] clear"};
  }
  // small m: every nonempty truncated cell must keep a nonzero form
  if (n > 4) throw BoundError("is_quasi_hereditary: small-m census bound is n <= 4");
  const MurphyBasis& basis = murphy_engine(static_cast<int>(n), p);
  long nonempty = 0;
  for (const Bipartition& lambda : enumerate_bipartitions(n)) {
    CellStatus st = cell_status(basis, lambda, Alphabet::for_m(m));
    if (st == CellStatus::EMPTY_CELL) continue;
    ++nonempty;
    if (st == CellStatus::ZERO_FORM)
      return {false, "zero form on truncated cell " + lambda.to_string()};
  }
  return {true, std::to_string(nonempty) + " nonempty truncated cells, all with nonzero form"};
}

long alpha_coroot(const ResidueFn& b, const Residue& u, const ParamSpec& p) {
  auto at = [&](const Residue& v) {
    auto it = b.find(v);
    return it == b.end() ? 0L : it->second;
  };
  long val = at(residue_q_shift(u, 1, p)) + at(residue_q_shift(u, -1, p)) - 2 * at(u);
  if (u == canonical_residue(false, 0, p)) ++val;     // delta_{u, -1}
  if (u == canonical_residue(true, 0, p)) ++val;      // delta_{u, Q}
  return val;
}

std::vector<Residue> relevant_residues(const ResidueFn& b, const ParamSpec& p) {
  std::set<Residue> keys;
  for (const auto& [u, count] : b) {
    if (count == 0) continue;
    keys.insert(u);
    keys.insert(residue_q_shift(u, 1, p));
    keys.insert(residue_q_shift(u, -1, p));
  }
  keys.insert(canonical_residue(false, 0, p));
  keys.insert(canonical_residue(true, 0, p));
  return {keys.begin(), keys.end()};
}

bool is_dominant(const ResidueFn& b, const ParamSpec& p) {
  for (const Residue& u : relevant_residues(b, p))
    if (alpha_coroot(b, u, p) < 0) return false;
  return true;
}

namespace {

long total_boxes(const ResidueFn& b) {
  long s = 0;
  for (const auto& [u, c] : b) s += c;
  return s;
}

bool realizable(const ResidueFn& b, const ParamSpec& p) {
  long size = total_boxes(b);
  if (size > 10) throw BoundError("dominant_reduce: realizability check bound is 10 boxes");
  for (const Bipartition& lam : enumerate_bipartitions(size))
    if (residue_fn(lam, p) == b) return true;
  return false;
}

ResidueFn strip_zeros(ResidueFn b) {
  for (auto it = b.begin(); it != b.end();)
    it = it->second == 0 ? b.erase(it) : std::next(it);
  return b;
}

}  // namespace

DominantReduction dominant_reduce(const ResidueFn& b_in, const ParamSpec& p) {
  ResidueFn b = strip_zeros(b_in);
  for (const auto& [u, c] : b)
    if (c < 0) throw DomainError("dominant_reduce: negative multiplicity");
  if (!realizable(b, p))
    throw DomainError("dominant_reduce: residue function is not realized by any bipartition");
  DominantReduction out;
  for (;;) {
    bool changed = false;
    for (const Residue& u : relevant_residues(b, p)) {
      long a = alpha_coroot(b, u, p);
      if (a < 0) {
        b[u] += a;  // remove |a| boxes of residue u
        if (b[u] < 0) throw InternalError("dominant_reduce: went negative");
        b = strip_zeros(b);
        out.trace.push_back({u, a});
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  out.reduced = b;
  return out;
}

bool block_is_qh(const ResidueFn& b_in, Parity parity, const ParamSpec& p) {
  ResidueFn b = strip_zeros(b_in);
  if (!is_dominant(b, p))
    throw DomainError("block_is_qh: apply dominant_reduce first");
  if (!p.k) return true;  // K empty: no witness can fire
  long size = total_boxes(b);
  auto dominated_by_b = [&](const Bipartition& witness) {
    ResidueFn w = residue_fn(witness, p);
    for (const auto& [u, c] : w) {
      auto it = b.find(u);
      if (it == b.end() || it->second < c) return false;
    }
    return true;
  };
  if (parity == Parity::odd) {
    // columns (1^{k+1}) for k in K, k >= 1
    for (long k : K_in_window(p, 1, size - 1)) {
      Bipartition col(Parts(static_cast<size_t>(k + 1), 1), {});
      if (dominated_by_b(col)) return false;
    }
    // 2 x j rectangles with 2 - j in K, j >= 2
    for (long j = 2; 2 * j <= size; ++j) {
      if (K_in_window(p, 2 - j, 2 - j).empty()) continue;
      Bipartition rect({j, j}, {});
      if (dominated_by_b(rect)) return false;
    }
  } else {
    // columns (1^{k+1}) for k in K, k >= 0
    for (long k : K_in_window(p, 0, size - 1)) {
      Bipartition col(Parts(static_cast<size_t>(k + 1), 1), {});
      if (dominated_by_b(col)) return false;
    }
    // rows (k+1) with -k in K, k >= 0
    for (long k = 0; k + 1 <= size; ++k) {
      if (K_in_window(p, -k, -k).empty()) continue;
      Bipartition row({k + 1}, {});
      if (dominated_by_b(row)) return false;
    }
  }
  return true;
}

std::vector<BlockReport> blocks(long n, const ParamSpec& p, Parity parity) {
  std::map<ResidueFn, BlockReport> grouped;
  for (const Bipartition& lam : enumerate_bipartitions(n)) {
    ResidueFn b = residue_fn(lam, p);
    auto [it, fresh] = grouped.try_emplace(b);
    if (fresh) it->second.b = b;
    it->second.members.push_back(lam);
  }
  std::vector<BlockReport> out;
  for (auto& [b, report] : grouped) {
    for (const Residue& u : relevant_residues(b, p))
      report.alpha.emplace_back(u, alpha_coroot(b, u, p));
    report.reduction = dominant_reduce(b, p);
    report.qh = block_is_qh(report.reduction.reduced, parity, p);
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace bschur
