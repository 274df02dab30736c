#ifndef BSCHUR_HECKE_HPP
#define BSCHUR_HECKE_HPP

#include <map>
#include <string>
#include <vector>

#include "bschur/alpha.hpp"
#include "bschur/bipartition.hpp"
#include "bschur/scalar.hpp"
#include "bschur/signed_perm.hpp"
#include "bschur/tableaux.hpp"

namespace bschur {

// Finitely supported map from T_w basis elements (by group index) to
// scalars. No explicit zero coefficients are stored; iteration order is the
// canonical group order, so output is deterministic.
using HeckeElt = std::map<long, Scalar>;

// The type B Hecke algebra at fixed rank and parameters. Quadratic relations
// (T_0 - Q)(T_0 + 1) = 0 and (T_i - q)(T_i + 1) = 0 for i >= 1.
class HeckeAlgebra {
 public:
  HeckeAlgebra(int n, const ParamSpec& p);

  int rank() const { return n_; }
  const WeylGroupB& group() const { return W_; }
  const ScalarField& field() const { return F_; }
  const ParamSpec& params() const { return F_.spec(); }

  const Scalar& q() const { return q_; }
  const Scalar& Q() const { return Q_; }
  const Scalar& gen_param(int i) const { return i == 0 ? Q_ : q_; }

  HeckeElt zero() const { return {}; }
  HeckeElt one() const;
  HeckeElt T(int i) const;                         // generator
  HeckeElt T_word(const std::vector<int>& word) const;
  HeckeElt T_elem(const SignedPerm& w) const;

  HeckeElt add(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt sub(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt scale(const HeckeElt& a, const Scalar& c) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt mul_gen_right(const HeckeElt& a, int i) const;  // a * T_i
  HeckeElt mul_gen_left(int i, const HeckeElt& a) const;   // T_i * a
  HeckeElt mul_basis_right(const HeckeElt& a, long w_idx) const;  // a * T_w
  HeckeElt mul_basis_left(long w_idx, const HeckeElt& a) const;   // T_w * a

  // Linear anti-automorphism T_w -> T_{w^{-1}}.
  HeckeElt star(const HeckeElt& a) const;

  bool is_zero(const HeckeElt& a) const { return a.empty(); }
  bool equal(const HeckeElt& a, const HeckeElt& b) const { return a == b; }

  // Jucys-Murphy element L_i = q^{1-i} T_{t_i} for the sign-flip reflection
  // t_i (1 <= i <= n); equals the inductive q^{-1} T_{i-1} L_{i-1} T_{i-1}.
  HeckeElt jucys_murphy(int i) const;

  // u_lambda = prod_{i<=|lambda^(1)|} (L_i + 1), x_lambda = sum over the
  // Young subgroup, m_lambda = u_lambda x_lambda.
  HeckeElt u_element(const Bicomposition& lambda) const;
  HeckeElt x_element(const Bicomposition& lambda) const;
  HeckeElt m_element(const Bicomposition& lambda) const;

  // x_alpha^B: sum of T_w over the parabolic subgroup generated by G_alpha.
  HeckeElt x_alpha_B(const Alpha& alpha) const;

  // Generator indices of the parabolic attached to a bicomposition type:
  // {s_0..s_{a-1}} plus within-row generators of both components.
  std::vector<int> type_parabolic_gens(const Bicomposition& type) const;
  // All group indices of the parabolic subgroup generated by `gens`.
  std::vector<long> parabolic_elements(const std::vector<int>& gens) const;
  // Minimal-length right coset representatives: no left descent in `gens`.
  std::vector<long> distinguished_reps(const std::vector<int>& gens) const;

  // The permutation d(t) with t . d(t) = t^shape for a row-standard t
  // (entry-wise: d(t) maps the entry of t^shape in each box to t's entry).
  SignedPerm d_of(const Bitableau& t) const;

  std::string to_string(const HeckeElt& a) const;

 private:
  int n_;
  const ScalarField& F_;
  const WeylGroupB& W_;
  Scalar q_, Q_, one_s_, qm1_, Qm1_;
};

}  // namespace bschur

#endif
