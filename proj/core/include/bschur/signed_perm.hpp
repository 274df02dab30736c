#ifndef BSCHUR_SIGNED_PERM_HPP
#define BSCHUR_SIGNED_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bschur/common.hpp"

namespace bschur {

// Signed permutation in window notation: w(1..n) with w(-i) = -w(i).
// Generator s_0 negates the value in position 1; s_i (i >= 1) swaps the
// values in positions i, i+1.
struct SignedPerm {
  std::vector<int> window;

  static SignedPerm identity(int n);
  static SignedPerm generator(int n, int i);

  int n() const { return static_cast<int>(window.size()); }
  bool is_identity() const;
  long length() const;  // Coxeter length: inversions + sum of |negative values|

  SignedPerm inverse() const;
  SignedPerm operator*(const SignedPerm& o) const;  // (this*o)(i) = this(o(i))
  SignedPerm right_mult_gen(int i) const;
  SignedPerm left_mult_gen(int i) const;

  bool right_descent(int i) const;  // l(w s_i) < l(w)
  bool left_descent(int i) const;   // l(s_i w) < l(w)
  std::vector<int> reduced_word() const;

  bool operator==(const SignedPerm& o) const { return window == o.window; }
  bool operator<(const SignedPerm& o) const { return window < o.window; }
  std::string to_string() const;
};

// The full signed-permutation group of rank n, enumerated once with
// generator multiplication tables; interned per n and immutable afterwards.
class WeylGroupB {
 public:
  static const WeylGroupB& get(int n);

  int rank() const { return n_; }
  long size() const { return static_cast<long>(elements_.size()); }

  long index_of(const SignedPerm& w) const;
  const SignedPerm& element(long idx) const { return elements_[static_cast<size_t>(idx)]; }
  long length(long idx) const { return lengths_[static_cast<size_t>(idx)]; }
  long inverse(long idx) const { return inverses_[static_cast<size_t>(idx)]; }
  long identity() const { return id_index_; }

  // Index of w * s_i / s_i * w.
  long right_gen(long idx, int i) const { return right_[static_cast<size_t>(idx)][static_cast<size_t>(i)]; }
  long left_gen(long idx, int i) const { return left_[static_cast<size_t>(idx)][static_cast<size_t>(i)]; }
  bool right_descent(long idx, int i) const { return length(right_gen(idx, i)) < length(idx); }
  bool left_descent(long idx, int i) const { return length(left_gen(idx, i)) < length(idx); }

  std::vector<int> reduced_word(long idx) const;

 private:
  explicit WeylGroupB(int n);

  int n_;
  std::vector<SignedPerm> elements_;           // sorted by window
  std::vector<long> lengths_, inverses_;
  std::vector<std::vector<long>> right_, left_;
  long id_index_;
};

}  // namespace bschur

#endif
