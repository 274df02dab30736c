#ifndef BSCHUR_PARAMS_HPP
#define BSCHUR_PARAMS_HPP

#include <optional>
#include <string>
#include <tuple>

namespace bschur {

// Declared specialization of the two Hecke parameters.
//
// q is either generic or a primitive e-th root of unity (e >= 2), in which
// case all q-arithmetic happens modulo the e-th cyclotomic polynomial.
// Q is either generic or tied to q by Q = -q^k.
struct ParamSpec {
  std::optional<int> e;  // multiplicative order of q; empty = generic
  std::optional<int> k;  // Q = -q^k when set; empty = Q generic

  static ParamSpec generic() { return {}; }
  static ParamSpec at(std::optional<int> e_, std::optional<int> k_) {
    ParamSpec p;
    p.e = e_;
    p.k = k_;
    return p;
  }

  bool q_generic() const { return !e.has_value(); }
  bool Q_generic() const { return !k.has_value(); }

  // Exponent arithmetic on q reduces mod e when e is finite.
  long reduce_exp(long j) const {
    if (!e) return j;
    long m = ((j % *e) + *e) % *e;
    return m;
  }

  // Whether q^a = q^b under this specialization.
  bool exp_equal(long a, long b) const { return reduce_exp(a - b) == 0; }

  bool operator==(const ParamSpec& o) const { return e == o.e && k == o.k; }
  bool operator<(const ParamSpec& o) const {
    return std::tie(e, k) < std::tie(o.e, o.k);
  }

  std::string to_string() const {
    std::string s = "e=";
    s += e ? std::to_string(*e) : "generic";
    s += ",k=";
    s += k ? std::to_string(*k) : "generic";
    return s;
  }
};

}  // namespace bschur

#endif
