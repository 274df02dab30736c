#include "bschur/murphy.hpp"

#include <algorithm>
#include <mutex>

namespace bschur {

namespace {

// rough cost proxy used to pick cheap pivots
long scalar_weight(const Scalar& s) { return s.complexity(); }

}  // namespace

MurphyBasis::MurphyBasis(int n, const ParamSpec& p) : n_(n), H_(n, p) {
  if (n < 0 || n > 5) throw BoundError("MurphyBasis: rank bound is 5");
  dim_ = H_.group().size();

  std::vector<Bipartition> enumerated = enumerate_bipartitions(n);
  shapes_.assign(enumerated.rbegin(), enumerated.rend());

  long pair_count = 0;
  for (size_t si = 0; si < shapes_.size(); ++si) {
    const Bipartition& shape = shapes_[si];
    std::vector<Bitableau> tabs = standard_tableaux(shape);
    std::vector<long> dperm;
    dperm.reserve(tabs.size());
    for (const Bitableau& t : tabs) dperm.push_back(H_.group().index_of(H_.d_of(t)));
    Bitableau super = superstandard_tableau(shape);
    int sup = -1;
    for (size_t i = 0; i < tabs.size(); ++i)
      if (tabs[i] == super) sup = static_cast<int>(i);
    if (sup < 0) throw InternalError("murphy: superstandard tableau missing");
    std_tabs_.push_back(std::move(tabs));
    d_perm_.push_back(std::move(dperm));
    m_lambda_.push_back(H_.m_element(shape.as_bicomposition()));
    super_idx_.push_back(sup);
    pair_count += static_cast<long>(std_tabs_.back().size()) *
                  static_cast<long>(std_tabs_.back().size());
  }
  if (pair_count != dim_)
    throw InternalError("murphy: pair count does not match 2^n n!");

  pairs_.reserve(static_cast<size_t>(dim_));
  columns_.reserve(static_cast<size_t>(dim_));
  for (size_t si = 0; si < shapes_.size(); ++si) {
    const auto& tabs = std_tabs_[si];
    for (size_t s = 0; s < tabs.size(); ++s) {
      // T*_{d(s)} m_lambda computed once per s
      HeckeElt left = H_.mul_basis_left(H_.group().inverse(d_perm_[si][s]), m_lambda_[si]);
      for (size_t t = 0; t < tabs.size(); ++t) {
        pairs_.push_back({static_cast<int>(si), static_cast<int>(s), static_cast<int>(t)});
        columns_.push_back(H_.mul_basis_right(left, d_perm_[si][t]));
      }
    }
  }
  factorize();
}

int MurphyBasis::shape_index(const Bipartition& lambda) const {
  for (size_t i = 0; i < shapes_.size(); ++i)
    if (shapes_[i] == lambda) return static_cast<int>(i);
  throw DomainError("murphy: shape is not a bipartition of n");
}

const HeckeElt& MurphyBasis::basis_vector(const MurphyPair& p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || !(*it == p))
    throw DomainError("murphy: no such basis pair");
  return columns_[static_cast<size_t>(it - pairs_.begin())];
}

void MurphyBasis::factorize() {
  const size_t N = static_cast<size_t>(dim_);
  lu_.pivot_row.assign(N, -1);
  lu_.diag.resize(N);
  lu_.lcols.resize(N);
  lu_.ucols.resize(N);
  lu_.urows.resize(N);
  std::vector<long> pivot_step_of_row(N, -1);

  for (size_t j = 0; j < N; ++j) {
    // left-looking elimination of column j
    std::map<long, Scalar> x(columns_[j].begin(), columns_[j].end());
    std::vector<std::pair<int, Scalar>>& ucol = lu_.ucols[j];
    for (size_t p = 0; p < j; ++p) {
      auto it = x.find(lu_.pivot_row[p]);
      if (it == x.end() || it->second.is_zero()) continue;
      Scalar u = it->second;
      ucol.emplace_back(static_cast<int>(p), u);
      x.erase(it);
      for (const auto& [row, mult] : lu_.lcols[p]) {
        auto xt = x.find(row);
        Scalar delta = u * mult;
        if (xt == x.end()) {
          if (!delta.is_zero()) x.emplace(row, -delta);
        } else {
          xt->second -= delta;
          if (xt->second.is_zero()) x.erase(xt);
        }
      }
    }
    // pivot choice: cheapest scalar among remaining rows
    long best_row = -1;
    long best_w = 0;
    for (const auto& [row, val] : x) {
      if (pivot_step_of_row[static_cast<size_t>(row)] >= 0) continue;
      if (val.is_zero()) continue;
      long w = val.is_one() ? 0 : scalar_weight(val);
      if (best_row < 0 || w < best_w) {
        best_row = row;
        best_w = w;
        if (w == 0) break;
      }
    }
    if (best_row < 0)
      throw InternalError("murphy: change-of-basis matrix is singular");
    Scalar d = x.at(best_row);
    lu_.pivot_row[j] = best_row;
    lu_.diag[j] = d;
    pivot_step_of_row[static_cast<size_t>(best_row)] = static_cast<long>(j);
    Scalar dinv = d.inv();
    for (const auto& [row, val] : x) {
      if (row == best_row) continue;
      lu_.lcols[j].emplace_back(row, val * dinv);
    }
  }
  for (size_t j = 0; j < N; ++j)
    for (const auto& [p, u] : lu_.ucols[j])
      lu_.urows[static_cast<size_t>(p)].emplace_back(static_cast<int>(j), u);
}

std::vector<Scalar> MurphyBasis::solve(const HeckeElt& b) const {
  const size_t N = static_cast<size_t>(dim_);
  const ScalarField& F = H_.field();
  // forward: L y = b (rows permuted by pivot_row)
  std::map<long, Scalar> resid(b.begin(), b.end());
  std::vector<Scalar> y(N, F.zero());
  for (size_t j = 0; j < N; ++j) {
    auto it = resid.find(lu_.pivot_row[j]);
    if (it == resid.end() || it->second.is_zero()) continue;
    Scalar yj = it->second;
    y[j] = yj;
    resid.erase(it);
    for (const auto& [row, mult] : lu_.lcols[j]) {
      auto rt = resid.find(row);
      Scalar delta = yj * mult;
      if (rt == resid.end()) {
        if (!delta.is_zero()) resid.emplace(row, -delta);
      } else {
        rt->second -= delta;
        if (rt->second.is_zero()) resid.erase(rt);
      }
    }
  }
  if (!resid.empty())
    throw InternalError("murphy: solve left a nonzero residual");
  // backward: U x = y
  std::vector<Scalar> xcoef(N, F.zero());
  for (size_t jj = N; jj-- > 0;) {
    Scalar acc = y[jj];
    for (const auto& [col, u] : lu_.urows[jj]) {
      const Scalar& xc = xcoef[static_cast<size_t>(col)];
      if (!xc.is_zero()) acc -= u * xc;
    }
    if (!acc.is_zero()) xcoef[jj] = acc / lu_.diag[jj];
  }
  return xcoef;
}

MurphyCoords MurphyBasis::coordinates(const HeckeElt& h) const {
  std::vector<Scalar> x = solve(h);
  MurphyCoords out;
  for (size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero()) out.emplace(pairs_[j], x[j]);
  return out;
}

MurphyCoords MurphyBasis::reduce_mod_ideal(const HeckeElt& h, const Bipartition& lambda) const {
  MurphyCoords all = coordinates(h);
  MurphyCoords out;
  for (const auto& [pair, c] : all) {
    const Bipartition& shape = shapes_[static_cast<size_t>(pair.shape)];
    if (strictly_dominates(shape, lambda)) continue;
    out.emplace(pair, c);
  }
  return out;
}

const std::vector<Scalar>& MurphyBasis::lead_functional(int shape_idx) const {
  std::lock_guard<std::mutex> lock(lead_mutex_);
  auto it = lead_functionals_.find(shape_idx);
  if (it != lead_functionals_.end()) return it->second;

  const size_t N = static_cast<size_t>(dim_);
  const ScalarField& F = H_.field();
  // target pair (lambda, t^lambda, t^lambda)
  MurphyPair target{shape_idx, super_idx_[static_cast<size_t>(shape_idx)],
                    super_idx_[static_cast<size_t>(shape_idx)]};
  auto pit = std::lower_bound(pairs_.begin(), pairs_.end(), target);
  size_t ti = static_cast<size_t>(pit - pairs_.begin());

  // U^T y = e_ti (forward over steps)
  std::vector<Scalar> y(N, F.zero());
  for (size_t j = 0; j < N; ++j) {
    Scalar acc = j == ti ? F.one() : F.zero();
    for (const auto& [p, u] : lu_.ucols[j]) {
      const Scalar& yp = y[static_cast<size_t>(p)];
      if (!yp.is_zero()) acc -= u * yp;
    }
    if (!acc.is_zero()) y[j] = acc / lu_.diag[j];
  }
  // L^T v = y (reverse over steps; v indexed by row)
  std::vector<Scalar> v(N, F.zero());
  for (size_t jj = N; jj-- > 0;) {
    Scalar acc = y[jj];
    for (const auto& [row, mult] : lu_.lcols[jj]) {
      const Scalar& vr = v[static_cast<size_t>(row)];
      if (!vr.is_zero()) acc -= mult * vr;
    }
    v[static_cast<size_t>(lu_.pivot_row[jj])] = acc;
  }
  return lead_functionals_.emplace(shape_idx, std::move(v)).first->second;
}

Scalar MurphyBasis::leading_coefficient(const HeckeElt& h, int shape_idx) const {
  const std::vector<Scalar>& v = lead_functional(shape_idx);
  Scalar acc = H_.field().zero();
  for (const auto& [row, c] : h) {
    const Scalar& vr = v[static_cast<size_t>(row)];
    if (!vr.is_zero()) acc += vr * c;
  }
  return acc;
}

}  // namespace bschur
