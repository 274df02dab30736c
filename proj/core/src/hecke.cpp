#include "bschur/hecke.hpp"

#include <algorithm>

namespace bschur {

HeckeAlgebra::HeckeAlgebra(int n, const ParamSpec& p)
    : n_(n), F_(ScalarField::get(p)), W_(WeylGroupB::get(n)) {
  q_ = F_.q_pow(1);
  Q_ = p.k ? F_.minus_q_pow(*p.k) : F_.Q();
  one_s_ = F_.one();
  qm1_ = q_ - one_s_;
  Qm1_ = Q_ - one_s_;
}

HeckeElt HeckeAlgebra::one() const {
  HeckeElt r;
  r[W_.identity()] = one_s_;
  return r;
}

HeckeElt HeckeAlgebra::T(int i) const {
  if (i < 0 || i >= n_) throw DomainError("hecke: generator index out of range");
  HeckeElt r;
  r[W_.right_gen(W_.identity(), i)] = one_s_;
  return r;
}

HeckeElt HeckeAlgebra::T_word(const std::vector<int>& word) const {
  HeckeElt r = one();
  for (int i : word) r = mul_gen_right(r, i);
  return r;
}

HeckeElt HeckeAlgebra::T_elem(const SignedPerm& w) const {
  HeckeElt r;
  r[W_.index_of(w)] = one_s_;
  return r;
}

HeckeElt HeckeAlgebra::add(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt r = a;
  for (const auto& [w, c] : b) {
    auto it = r.find(w);
    if (it == r.end()) {
      r.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::sub(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt r = a;
  for (const auto& [w, c] : b) {
    auto it = r.find(w);
    if (it == r.end()) {
      r.emplace(w, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::scale(const HeckeElt& a, const Scalar& c) const {
  if (c.is_zero()) return {};
  HeckeElt r;
  for (const auto& [w, x] : a) r.emplace(w, x * c);
  return r;
}

HeckeElt HeckeAlgebra::mul_gen_right(const HeckeElt& a, int i) const {
  HeckeElt r;
  const Scalar& qi = gen_param(i);
  const Scalar& qim1 = i == 0 ? Qm1_ : qm1_;
  auto acc = [&r](long w, const Scalar& c) {
    auto it = r.find(w);
    if (it == r.end()) {
      r.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  };
  for (const auto& [w, c] : a) {
    long ws = W_.right_gen(w, i);
    if (W_.length(ws) > W_.length(w)) {
      acc(ws, c);
    } else {
      // T_w T_i = (q_i - 1) T_w + q_i T_{w s_i}
      acc(w, c * qim1);
      acc(ws, c * qi);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::mul_gen_left(int i, const HeckeElt& a) const {
  HeckeElt r;
  const Scalar& qi = gen_param(i);
  const Scalar& qim1 = i == 0 ? Qm1_ : qm1_;
  auto acc = [&r](long w, const Scalar& c) {
    auto it = r.find(w);
    if (it == r.end()) {
      r.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  };
  for (const auto& [w, c] : a) {
    long sw = W_.left_gen(w, i);
    if (W_.length(sw) > W_.length(w)) {
      acc(sw, c);
    } else {
      acc(w, c * qim1);
      acc(sw, c * qi);
    }
  }
  return r;
}

HeckeElt HeckeAlgebra::mul_basis_right(const HeckeElt& a, long w_idx) const {
  HeckeElt r = a;
  for (int i : W_.reduced_word(w_idx)) r = mul_gen_right(r, i);
  return r;
}

HeckeElt HeckeAlgebra::mul_basis_left(long w_idx, const HeckeElt& a) const {
  std::vector<int> word = W_.reduced_word(w_idx);
  HeckeElt r = a;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = mul_gen_left(*it, r);
  return r;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  // expand the sparser factor through reduced words of the other side
  HeckeElt r;
  for (const auto& [w, c] : b) {
    HeckeElt term = scale(mul_basis_right(a, w), c);
    r = add(r, term);
  }
  return r;
}

HeckeElt HeckeAlgebra::star(const HeckeElt& a) const {
  HeckeElt r;
  for (const auto& [w, c] : a) r.emplace(W_.inverse(w), c);
  return r;
}

HeckeElt HeckeAlgebra::jucys_murphy(int i) const {
  if (i < 1 || i > n_) throw DomainError("jucys_murphy: index out of range");
  SignedPerm t = SignedPerm::identity(n_);
  t.window[static_cast<size_t>(i - 1)] = -i;
  HeckeElt r;
  r[W_.index_of(t)] = F_.q_pow(1 - i);
  return r;
}

HeckeElt HeckeAlgebra::u_element(const Bicomposition& lambda) const {
  long a = 0;
  for (long v : lambda.c1) a += v;
  HeckeElt r = one();
  for (int i = 1; i <= a; ++i) {
    HeckeElt li = jucys_murphy(i);
    r = add(mul(r, li), r);  // r * (L_i + 1)
  }
  return r;
}

std::vector<int> HeckeAlgebra::type_parabolic_gens(const Bicomposition& type) const {
  long a = 0;
  for (long v : type.c1) a += v;
  std::vector<bool> cut(static_cast<size_t>(n_) + 1, false);
  long acc = a;
  if (acc <= n_) cut[static_cast<size_t>(acc)] = true;
  for (long v : type.c2) {
    acc += v;
    if (acc <= n_) cut[static_cast<size_t>(acc)] = true;
  }
  if (acc != n_)
    throw DomainError("type_parabolic_gens: type size mismatch");
  std::vector<int> gens;
  for (int i = 0; i < n_; ++i)
    if (!cut[static_cast<size_t>(i)]) gens.push_back(i);
  return gens;
}

std::vector<long> HeckeAlgebra::parabolic_elements(const std::vector<int>& gens) const {
  std::vector<long> members = {W_.identity()};
  std::vector<bool> seen(static_cast<size_t>(W_.size()), false);
  seen[static_cast<size_t>(W_.identity())] = true;
  for (size_t head = 0; head < members.size(); ++head) {
    for (int i : gens) {
      long next = W_.right_gen(members[head], i);
      if (!seen[static_cast<size_t>(next)]) {
        seen[static_cast<size_t>(next)] = true;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<long> HeckeAlgebra::distinguished_reps(const std::vector<int>& gens) const {
  std::vector<long> reps;
  for (long w = 0; w < W_.size(); ++w) {
    bool ok = true;
    for (int i : gens)
      if (W_.left_descent(w, i)) {
        ok = false;
        break;
      }
    if (ok) reps.push_back(w);
  }
  return reps;
}

HeckeElt HeckeAlgebra::x_element(const Bicomposition& lambda) const {
  // Young subgroup of S_n along the concatenated rows: the within-row
  // generators (no s_0)
  long acc = 0;
  std::vector<int> gens;
  for (const Parts* comp : {&lambda.c1, &lambda.c2}) {
    for (long v : *comp) {
      for (long i = acc + 1; i < acc + v; ++i) gens.push_back(static_cast<int>(i));
      acc += v;
    }
  }
  if (acc != n_) throw DomainError("x_element: bicomposition size mismatch");
  HeckeElt r;
  for (long w : parabolic_elements(gens)) r[w] = one_s_;
  return r;
}

HeckeElt HeckeAlgebra::m_element(const Bicomposition& lambda) const {
  return mul(u_element(lambda), x_element(lambda));
}

HeckeElt HeckeAlgebra::x_alpha_B(const Alpha& alpha) const {
  if (alpha.rank() != n_) throw DomainError("x_alpha_B: alpha has wrong rank");
  HeckeElt r;
  for (long w : parabolic_elements(G_alpha(alpha))) r[w] = one_s_;
  return r;
}

SignedPerm HeckeAlgebra::d_of(const Bitableau& t) const {
  if (!t.is_row_standard())
    throw DomainError("d_of: tableau is not row standard");
  Bitableau super = superstandard_tableau(t.shape());
  SignedPerm d = SignedPerm::identity(static_cast<int>(t.shape().size()));
  for (const Box& b : diagram_boxes(t.shape()))
    d.window[static_cast<size_t>(super.entry(b) - 1)] = t.entry(b);
  return d;
}

std::string HeckeAlgebra::to_string(const HeckeElt& a) const {
  if (a.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : a) {
    if (!first) s += " + ";
    s += "(" + c.to_string() + ")*T" + W_.element(w).to_string();
    first = false;
  }
  return s;
}

}  // namespace bschur
