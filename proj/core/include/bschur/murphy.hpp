#ifndef BSCHUR_MURPHY_HPP
#define BSCHUR_MURPHY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "bschur/hecke.hpp"

namespace bschur {

// Index of one cellular basis vector m_{st} = T*_{d(s)} m_lambda T_{d(t)}.
struct MurphyPair {
  int shape;  // position in shape order (reverse dominance refining)
  int s, t;   // positions in the sorted standard-tableau list of the shape
  bool operator<(const MurphyPair& o) const {
    if (shape != o.shape) return shape < o.shape;
    if (s != o.s) return s < o.s;
    return t < o.t;
  }
  bool operator==(const MurphyPair& o) const {
    return shape == o.shape && s == o.s && t == o.t;
  }
};

// Coordinates of a Hecke element in the cellular basis.
using MurphyCoords = std::map<MurphyPair, Scalar>;

// The full cellular basis of H_n at fixed parameters, with an exact sparse
// LU factorization of the change-of-basis matrix. Built once, then
// immutable; all queries are const and safe to run concurrently.
class MurphyBasis {
 public:
  MurphyBasis(int n, const ParamSpec& p);

  const HeckeAlgebra& algebra() const { return H_; }
  int rank() const { return n_; }
  long dimension() const { return dim_; }

  // Shapes in basis order (reverse of the dominance-refining enumeration:
  // most dominated first).
  const std::vector<Bipartition>& shapes() const { return shapes_; }
  int shape_index(const Bipartition& lambda) const;
  const std::vector<Bitableau>& tableaux(int shape_idx) const {
    return std_tabs_[static_cast<size_t>(shape_idx)];
  }
  const HeckeElt& m_lambda(int shape_idx) const { return m_lambda_[static_cast<size_t>(shape_idx)]; }
  int superstandard_index(int shape_idx) const { return super_idx_[static_cast<size_t>(shape_idx)]; }
  const HeckeElt& basis_vector(const MurphyPair& p) const;

  // Full cellular coordinates of h.
  MurphyCoords coordinates(const HeckeElt& h) const;

  // Coordinates of h on basis vectors of shapes not strictly dominating
  // lambda (the strictly-dominating part is discarded).
  MurphyCoords reduce_mod_ideal(const HeckeElt& h, const Bipartition& lambda) const;

  // Coefficient of m_{t^lambda t^lambda} in the cellular coordinates of h;
  // cheap (one precomputed functional per shape).
  Scalar leading_coefficient(const HeckeElt& h, int shape_idx) const;

 private:
  int n_;
  HeckeAlgebra H_;
  long dim_;
  std::vector<Bipartition> shapes_;
  std::vector<std::vector<Bitableau>> std_tabs_;
  std::vector<std::vector<long>> d_perm_;  // group index of d(t) per tableau
  std::vector<HeckeElt> m_lambda_;
  std::vector<int> super_idx_;
  std::vector<MurphyPair> pairs_;          // column order of the factorization
  std::vector<HeckeElt> columns_;

  // sparse LU of the change-of-basis matrix (columns = pairs_, rows = T_w)
  struct LU {
    std::vector<long> pivot_row;                         // per step
    std::vector<Scalar> diag;                            // U diagonal per step
    std::vector<std::vector<std::pair<long, Scalar>>> lcols;  // below-pivot multipliers (by row)
    std::vector<std::vector<std::pair<int, Scalar>>> ucols;   // U entries (by step p < j)
    std::vector<std::vector<std::pair<int, Scalar>>> urows;   // transposed view of ucols
  };
  LU lu_;
  mutable std::map<int, std::vector<Scalar>> lead_functionals_;
  mutable std::mutex lead_mutex_;

  void factorize();
  std::vector<Scalar> solve(const HeckeElt& b) const;           // M x = b
  const std::vector<Scalar>& lead_functional(int shape_idx) const;  // M^T v = e_pair
};

}  // namespace bschur

#endif
