#ifndef BSCHUR_TENSOR_HPP
#define BSCHUR_TENSOR_HPP

#include <map>
#include <vector>

#include "bschur/scalar.hpp"

namespace bschur {

// Basis tuples of V^{otimes n} with V = k^{I(m)},
// I(m) = {-r..r} (m odd) or {-r..-1, 1..r} (m even).
using Tuple = std::vector<int>;

using TensorVec = std::map<Tuple, Scalar>;

class TensorSpace {
 public:
  TensorSpace(int n, long m, const ParamSpec& p);

  int rank() const { return n_; }
  long m() const { return m_; }
  const ScalarField& field() const { return F_; }

  bool index_ok(int i) const;
  void check_tuple(const Tuple& d) const;
  std::vector<int> index_set() const;
  std::vector<Tuple> basis_tuples() const;  // all of I(m)^n, sorted

  TensorVec unit(const Tuple& d) const;
  TensorVec add(const TensorVec& a, const TensorVec& b) const;
  TensorVec scale(const TensorVec& a, const Scalar& c) const;

  // v * T_t per the three-case action formulas (t = 0 uses Q, else q).
  TensorVec act_gen(const TensorVec& v, int t) const;
  TensorVec act_word(const TensorVec& v, const std::vector<int>& word) const;

 private:
  int n_;
  long m_;
  const ScalarField& F_;
  Scalar q_, Q_;
};

}  // namespace bschur

#endif
