#include "bschur/tensor.hpp"

#include <functional>

#include "bschur/common.hpp"

namespace bschur {

TensorSpace::TensorSpace(int n, long m, const ParamSpec& p)
    : n_(n), m_(m), F_(ScalarField::get(p)) {
  if (n < 0 || m < 1) throw DomainError("tensor: need n >= 0 and m >= 1");
  q_ = F_.q_pow(1);
  Q_ = p.k ? F_.minus_q_pow(*p.k) : F_.Q();
}

bool TensorSpace::index_ok(int i) const {
  long r = m_ / 2;
  if (i < -r || i > r) return false;
  if (i == 0 && m_ % 2 == 0) return false;
  return true;
}

void TensorSpace::check_tuple(const Tuple& d) const {
  if (static_cast<int>(d.size()) != n_)
    throw DomainError("tensor: tuple length mismatch");
  for (int i : d)
    if (!index_ok(i)) throw DomainError("tensor: index outside I(m)");
}

std::vector<int> TensorSpace::index_set() const {
  std::vector<int> out;
  long r = m_ / 2;
  for (long i = -r; i <= r; ++i)
    if (i != 0 || m_ % 2 == 1) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Tuple> TensorSpace::basis_tuples() const {
  std::vector<Tuple> out;
  std::vector<int> idx = index_set();
  Tuple cur(static_cast<size_t>(n_), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n_) {
      out.push_back(cur);
      return;
    }
    for (int i : idx) {
      cur[static_cast<size_t>(pos)] = i;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

TensorVec TensorSpace::unit(const Tuple& d) const {
  check_tuple(d);
  TensorVec v;
  v[d] = F_.one();
  return v;
}

TensorVec TensorSpace::add(const TensorVec& a, const TensorVec& b) const {
  TensorVec r = a;
  for (const auto& [d, c] : b) {
    auto it = r.find(d);
    if (it == r.end()) {
      r.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

TensorVec TensorSpace::scale(const TensorVec& a, const Scalar& c) const {
  if (c.is_zero()) return {};
  TensorVec r;
  for (const auto& [d, x] : a) r.emplace(d, x * c);
  return r;
}

TensorVec TensorSpace::act_gen(const TensorVec& v, int t) const {
  if (t < 0 || t >= n_) throw DomainError("tensor: generator index out of range");
  TensorVec r;
  auto acc = [&r](const Tuple& d, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = r.find(d);
    if (it == r.end()) {
      r.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  };
  Scalar qm1 = q_ - F_.one(), Qm1 = Q_ - F_.one();
  for (const auto& [d, c] : v) {
    check_tuple(d);
    Tuple ds = d;
    if (t == 0) {
      ds[0] = -ds[0];
      if (d[0] > 0) {
        acc(ds, c);
      } else if (d[0] == 0) {
        acc(ds, c * Q_);
      } else {
        acc(ds, c);
        acc(d, c * Qm1);
      }
    } else {
      std::swap(ds[static_cast<size_t>(t - 1)], ds[static_cast<size_t>(t)]);
      if (d[static_cast<size_t>(t - 1)] < d[static_cast<size_t>(t)]) {
        acc(ds, c);
      } else if (d[static_cast<size_t>(t - 1)] == d[static_cast<size_t>(t)]) {
        acc(ds, c * q_);
      } else {
        acc(ds, c);
        acc(d, c * qm1);
      }
    }
  }
  return r;
}

TensorVec TensorSpace::act_word(const TensorVec& v, const std::vector<int>& word) const {
  TensorVec r = v;
  for (int t : word) r = act_gen(r, t);
  return r;
}

}  // namespace bschur
