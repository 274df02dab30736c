#ifndef BSCHUR_SCALAR_HPP
#define BSCHUR_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bschur/common.hpp"
#include "bschur/params.hpp"

namespace bschur {

// Dense polynomial in q over the rationals, lowest degree first, no trailing
// zero coefficients.
using QPoly = std::vector<mpq_class>;

// Element of the q-coefficient field F:
//   q generic  -> fraction num/den in Q(q), den monic, gcd(num, den) = 1
//   q_order=e  -> residue num mod Phi_e(q), den identically {1}
struct FqElem {
  QPoly num, den;
  bool operator==(const FqElem& o) const { return num == o.num && den == o.den; }
};

// Polynomial in Q over F, lowest degree first.
using FqPoly = std::vector<FqElem>;

class Scalar;

// One interned context per ParamSpec; owns the cyclotomic modulus and the
// normalization rules. All Scalar arithmetic goes through its field.
class ScalarField {
 public:
  static const ScalarField& get(const ParamSpec& spec);

  const ParamSpec& spec() const { return spec_; }
  const QPoly& modulus() const { return phi_; }  // empty when q generic

  // Constructors for scalars.
  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long v) const;
  Scalar rational(const mpq_class& v) const;
  Scalar q_pow(long j) const;        // q^j (j may be negative)
  Scalar Q_pow_q(long j) const;      // Q * q^j
  Scalar Q() const;                  // Q_pow_q(0)
  Scalar minus_q_pow(long j) const;  // -q^j

  // Field arithmetic on F-elements (used by Scalar internals and tests).
  FqElem fq_zero() const;
  FqElem fq_one() const;
  FqElem fq_from(const QPoly& num, const QPoly& den) const;
  FqElem fq_add(const FqElem& a, const FqElem& b) const;
  FqElem fq_sub(const FqElem& a, const FqElem& b) const;
  FqElem fq_mul(const FqElem& a, const FqElem& b) const;
  FqElem fq_neg(const FqElem& a) const;
  FqElem fq_inv(const FqElem& a) const;
  bool fq_is_zero(const FqElem& a) const { return a.num.empty(); }
  bool fq_is_one(const FqElem& a) const;

 private:
  explicit ScalarField(const ParamSpec& spec);
  friend class Scalar;

  ParamSpec spec_;
  QPoly phi_;        // Phi_e(q) when e finite
  FqElem q_value_;   // q as an F-element
  FqElem Q_value_;   // -q^k when k set; unused for generic Q
  bool cyclo_ = false;

  FqElem fq_reduce(QPoly num, QPoly den) const;
  FqElem fq_q_pow(long j) const;
};

// Exact element of the coefficient field under the declared specialization,
// kept in canonical form: two scalars are equal iff their representations are
// identical. Immutable value type, safe to share across threads.
class Scalar {
 public:
  Scalar() : field_(nullptr) {}  // uninitialized; only for containers

  const ScalarField& field() const { return *field_; }
  bool initialized() const { return field_ != nullptr; }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;  // throws DomainError on zero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical textual form, integer-coefficient Laurent expression where the
  // denominator is monomial, e.g. "q^-1*Q + 1"; otherwise "(num)/(den)".
  std::string to_string() const;

  // Cheap size proxy (term counts), used for pivot selection.
  long complexity() const;

 private:
  friend class ScalarField;
  Scalar(const ScalarField* f, FqPoly num, FqPoly den)
      : field_(f), num_(std::move(num)), den_(std::move(den)) {}

  const ScalarField* field_;
  FqPoly num_, den_;  // fraction in Q; den monic over F, coprime with num

  static Scalar make(const ScalarField* f, FqPoly num, FqPoly den);
};

// Decides whether Q + q^i = 0 under the specialization.
bool factor_vanishes(const ParamSpec& p, long i);

// Decides whether the product of (Q + q^i) over i in [lo, hi] vanishes.
// An empty window (lo > hi) is the empty product, which never vanishes.
bool k_window_vanishes(const ParamSpec& p, long lo, long hi);

}  // namespace bschur

#endif
