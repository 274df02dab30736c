#include "bschur/signed_perm.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace bschur {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm w;
  w.window.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w.window[static_cast<size_t>(i)] = i + 1;
  return w;
}

SignedPerm SignedPerm::generator(int n, int i) {
  SignedPerm w = identity(n);
  if (i == 0) {
    w.window[0] = -1;
  } else {
    std::swap(w.window[static_cast<size_t>(i - 1)], w.window[static_cast<size_t>(i)]);
  }
  return w;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (window[static_cast<size_t>(i)] != i + 1) return false;
  return true;
}

long SignedPerm::length() const {
  long inv = 0, neg = 0;
  for (int i = 0; i < n(); ++i) {
    if (window[static_cast<size_t>(i)] < 0) neg -= window[static_cast<size_t>(i)];
    for (int j = i + 1; j < n(); ++j)
      if (window[static_cast<size_t>(i)] > window[static_cast<size_t>(j)]) ++inv;
  }
  return inv + neg;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm w = identity(n());
  for (int i = 1; i <= n(); ++i) {
    int v = window[static_cast<size_t>(i - 1)];
    if (v > 0)
      w.window[static_cast<size_t>(v - 1)] = i;
    else
      w.window[static_cast<size_t>(-v - 1)] = -i;
  }
  return w;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  SignedPerm w;
  w.window.resize(static_cast<size_t>(n()));
  for (int i = 1; i <= n(); ++i) {
    int v = o.window[static_cast<size_t>(i - 1)];
    int image = v > 0 ? window[static_cast<size_t>(v - 1)] : -window[static_cast<size_t>(-v - 1)];
    w.window[static_cast<size_t>(i - 1)] = image;
  }
  return w;
}

SignedPerm SignedPerm::right_mult_gen(int i) const {
  SignedPerm w = *this;
  if (i == 0) {
    w.window[0] = -w.window[0];
  } else {
    std::swap(w.window[static_cast<size_t>(i - 1)], w.window[static_cast<size_t>(i)]);
  }
  return w;
}

SignedPerm SignedPerm::left_mult_gen(int i) const {
  SignedPerm w = *this;
  if (i == 0) {
    for (auto& v : w.window)
      if (v == 1 || v == -1) v = -v;
  } else {
    for (auto& v : w.window) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
      else if (v == -i) v = -(i + 1);
      else if (v == -(i + 1)) v = -i;
    }
  }
  return w;
}

bool SignedPerm::right_descent(int i) const {
  if (i == 0) return window[0] < 0;
  return window[static_cast<size_t>(i - 1)] > window[static_cast<size_t>(i)];
}

bool SignedPerm::left_descent(int i) const {
  return inverse().right_descent(i);
}

std::vector<int> SignedPerm::reduced_word() const {
  std::vector<int> word;
  SignedPerm w = *this;
  while (!w.is_identity()) {
    bool found = false;
    for (int i = 0; i < n(); ++i) {
      if (w.right_descent(i)) {
        word.push_back(i);
        w = w.right_mult_gen(i);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("signed_perm: no descent on non-identity element");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string SignedPerm::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    s += std::to_string(window[static_cast<size_t>(i)]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

WeylGroupB::WeylGroupB(int n) : n_(n) {
  if (n < 0 || n > 8) throw BoundError("WeylGroupB: rank must be in [0, 8]");
  // BFS closure from the identity under right multiplication
  std::map<SignedPerm, long> index;
  std::vector<SignedPerm> queue = {SignedPerm::identity(n)};
  index[queue[0]] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    SignedPerm w = queue[head];
    for (int i = 0; i < n; ++i) {
      SignedPerm v = w.right_mult_gen(i);
      if (index.emplace(v, static_cast<long>(queue.size())).second) queue.push_back(v);
    }
  }
  // canonical order: sorted windows
  elements_.reserve(queue.size());
  for (const auto& [w, idx] : index) elements_.push_back(w);
  std::map<SignedPerm, long> pos;
  for (size_t i = 0; i < elements_.size(); ++i) pos[elements_[i]] = static_cast<long>(i);

  size_t count = elements_.size();
  lengths_.resize(count);
  inverses_.resize(count);
  right_.assign(count, std::vector<long>(static_cast<size_t>(std::max(n, 1)), -1));
  left_.assign(count, std::vector<long>(static_cast<size_t>(std::max(n, 1)), -1));
  for (size_t idx = 0; idx < count; ++idx) {
    const SignedPerm& w = elements_[idx];
    lengths_[idx] = w.length();
    inverses_[idx] = pos.at(w.inverse());
    for (int i = 0; i < n; ++i) {
      right_[idx][static_cast<size_t>(i)] = pos.at(w.right_mult_gen(i));
      left_[idx][static_cast<size_t>(i)] = pos.at(w.left_mult_gen(i));
    }
  }
  id_index_ = pos.at(SignedPerm::identity(n));
}

const WeylGroupB& WeylGroupB::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<WeylGroupB>> pool;
  std::lock_guard<std::mutex> lock(mu);
  auto it = pool.find(n);
  if (it == pool.end())
    it = pool.emplace(n, std::unique_ptr<WeylGroupB>(new WeylGroupB(n))).first;
  return *it->second;
}

long WeylGroupB::index_of(const SignedPerm& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || !(*it == w))
    throw DomainError("WeylGroupB: element outside group");
  return static_cast<long>(it - elements_.begin());
}

std::vector<int> WeylGroupB::reduced_word(long idx) const {
  std::vector<int> word;
  long cur = idx;
  while (cur != id_index_) {
    bool found = false;
    for (int i = 0; i < n_; ++i) {
      if (right_descent(cur, i)) {
        word.push_back(i);
        cur = right_gen(cur, i);
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("WeylGroupB: descent search failed");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace bschur
