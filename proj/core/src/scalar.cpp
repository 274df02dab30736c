#include "bschur/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace bschur {

namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool pz(const QPoly& p) { return p.empty(); }

QPoly padd(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly psub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly pneg(QPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

QPoly pmul(const QPoly& a, const QPoly& b) {
  if (pz(a) || pz(b)) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a = q*b + r with deg r < deg b; b nonzero.
void pdivrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  rem = a;
  quo.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class lead = b.back();
  while (rem.size() >= b.size()) {
    mpq_class c = rem.back() / lead;
    size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  trim(quo);
}

QPoly pmod(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  if (a.size() < b.size()) return a;
  pdivrem(a, b, q, r);
  return r;
}

QPoly pmonic(QPoly a) {
  if (pz(a)) return a;
  mpq_class lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

QPoly pgcd(QPoly a, QPoly b) {
  while (!pz(b)) {
    QPoly r = pmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a);
}

// Inverse of a modulo m (m irreducible over Q, a != 0 mod m), via the
// extended Euclidean algorithm.
QPoly pinvmod(QPoly a, const QPoly& m) {
  QPoly r0 = m, r1 = pmod(a, m);
  QPoly s0 = {}, s1 = {mpq_class(1)};
  while (!pz(r1)) {
    QPoly q, r2;
    pdivrem(r0, r1, q, r2);
    QPoly s2 = psub(s0, pmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd, constant for invertible a
  if (r0.size() != 1) throw DomainError("scalar: element not invertible modulo cyclotomic");
  mpq_class g = r0[0];
  for (auto& c : s0) c /= g;
  return pmod(s0, m);
}

QPoly cyclotomic(int e) {
  // Phi_e = (q^e - 1) / prod_{d | e, d < e} Phi_d
  QPoly num(e + 1, mpq_class(0));
  num[0] = -1;
  num[e] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    QPoly phi_d = cyclotomic(d);
    QPoly q, r;
    pdivrem(num, phi_d, q, r);
    if (!pz(r)) throw InternalError("cyclotomic division not exact");
    num = std::move(q);
  }
  return num;
}

const QPoly kOne = {mpq_class(1)};

}  // namespace

// ---------------------------------------------------------------------------
// F-element arithmetic

FqElem ScalarField::fq_zero() const { return {{}, kOne}; }
FqElem ScalarField::fq_one() const { return {kOne, kOne}; }

bool ScalarField::fq_is_one(const FqElem& a) const {
  return a.num == kOne && a.den == kOne;
}

FqElem ScalarField::fq_reduce(QPoly num, QPoly den) const {
  if (pz(den)) throw DomainError("scalar: zero denominator in q");
  if (cyclo_) {
    num = pmod(num, phi_);
    if (pz(num)) return fq_zero();
    if (den != kOne) {
      den = pmod(den, phi_);
      num = pmod(pmul(num, pinvmod(den, phi_)), phi_);
    }
    return {num, kOne};
  }
  if (pz(num)) return fq_zero();
  QPoly g = pgcd(num, den);
  if (g != kOne) {
    QPoly q, r;
    pdivrem(num, g, q, r);
    num = std::move(q);
    pdivrem(den, g, q, r);
    den = std::move(q);
  }
  mpq_class lead = den.back();
  if (lead != 1) {
    for (auto& c : num) c /= lead;
    for (auto& c : den) c /= lead;
  }
  return {num, den};
}

FqElem ScalarField::fq_from(const QPoly& num, const QPoly& den) const {
  return fq_reduce(num, den);
}

FqElem ScalarField::fq_add(const FqElem& a, const FqElem& b) const {
  if (fq_is_zero(a)) return b;
  if (fq_is_zero(b)) return a;
  if (a.den == b.den) return fq_reduce(padd(a.num, b.num), a.den);
  return fq_reduce(padd(pmul(a.num, b.den), pmul(b.num, a.den)), pmul(a.den, b.den));
}

FqElem ScalarField::fq_sub(const FqElem& a, const FqElem& b) const {
  return fq_add(a, fq_neg(b));
}

FqElem ScalarField::fq_neg(const FqElem& a) const { return {pneg(a.num), a.den}; }

FqElem ScalarField::fq_mul(const FqElem& a, const FqElem& b) const {
  if (fq_is_zero(a) || fq_is_zero(b)) return fq_zero();
  if (fq_is_one(a)) return b;
  if (fq_is_one(b)) return a;
  return fq_reduce(pmul(a.num, b.num), pmul(a.den, b.den));
}

FqElem ScalarField::fq_inv(const FqElem& a) const {
  if (fq_is_zero(a)) throw DomainError("scalar: inversion of zero");
  if (cyclo_) return {pinvmod(a.num, phi_), kOne};
  return fq_reduce(a.den, a.num);
}

FqElem ScalarField::fq_q_pow(long j) const {
  if (j >= 0) {
    QPoly p(static_cast<size_t>(j) + 1, mpq_class(0));
    p[static_cast<size_t>(j)] = 1;
    return fq_reduce(p, kOne);
  }
  QPoly p(static_cast<size_t>(-j) + 1, mpq_class(0));
  p[static_cast<size_t>(-j)] = 1;
  return fq_reduce(kOne, p);
}

// ---------------------------------------------------------------------------
// ScalarField

ScalarField::ScalarField(const ParamSpec& spec) : spec_(spec) {
  if (spec_.e) {
    if (*spec_.e < 2) throw DomainError("ParamSpec: q order must be >= 2");
    cyclo_ = true;
    phi_ = cyclotomic(*spec_.e);
  }
  q_value_ = fq_q_pow(1);
  if (spec_.k) Q_value_ = fq_neg(fq_q_pow(*spec_.k));
}

const ScalarField& ScalarField::get(const ParamSpec& spec) {
  static std::mutex mu;
  static std::map<ParamSpec, std::unique_ptr<ScalarField>> pool;
  std::lock_guard<std::mutex> lock(mu);
  auto it = pool.find(spec);
  if (it == pool.end())
    it = pool.emplace(spec, std::unique_ptr<ScalarField>(new ScalarField(spec))).first;
  return *it->second;
}

Scalar ScalarField::zero() const { return Scalar(this, {}, {fq_one()}); }
Scalar ScalarField::one() const { return Scalar(this, {fq_one()}, {fq_one()}); }

Scalar ScalarField::integer(long v) const { return rational(mpq_class(v)); }

Scalar ScalarField::rational(const mpq_class& v) const {
  if (v == 0) return zero();
  return Scalar(this, {fq_from({v}, kOne)}, {fq_one()});
}

Scalar ScalarField::q_pow(long j) const {
  return Scalar(this, {fq_q_pow(j)}, {fq_one()});
}

Scalar ScalarField::minus_q_pow(long j) const {
  return Scalar(this, {fq_neg(fq_q_pow(j))}, {fq_one()});
}

Scalar ScalarField::Q() const { return Q_pow_q(0); }

Scalar ScalarField::Q_pow_q(long j) const {
  FqElem qj = fq_q_pow(j);
  if (spec_.k) return Scalar(this, {fq_mul(Q_value_, qj)}, {fq_one()});
  // degree-1 polynomial in Q
  return Scalar(this, {fq_zero(), qj}, {fq_one()});
}

// ---------------------------------------------------------------------------
// Scalar (fractions of polynomials in Q over F)

namespace {

bool fpz(const FqPoly& p) { return p.empty(); }

FqPoly fadd(const ScalarField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), F.fq_zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.fq_add(r[i], b[i]);
  while (!r.empty() && F.fq_is_zero(r.back())) r.pop_back();
  return r;
}

FqPoly fneg(const ScalarField& F, FqPoly a) {
  for (auto& c : a) c = F.fq_neg(c);
  return a;
}

FqPoly fmul(const ScalarField& F, const FqPoly& a, const FqPoly& b) {
  if (fpz(a) || fpz(b)) return {};
  FqPoly r(a.size() + b.size() - 1, F.fq_zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (F.fq_is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (F.fq_is_zero(b[j])) continue;
      r[i + j] = F.fq_add(r[i + j], F.fq_mul(a[i], b[j]));
    }
  }
  while (!r.empty() && F.fq_is_zero(r.back())) r.pop_back();
  return r;
}

FqPoly fscale(const ScalarField& F, FqPoly a, const FqElem& c) {
  for (auto& x : a) x = F.fq_mul(x, c);
  while (!a.empty() && F.fq_is_zero(a.back())) a.pop_back();
  return a;
}

FqPoly fmod(const ScalarField& F, FqPoly a, const FqPoly& b) {
  FqElem lead_inv = F.fq_inv(b.back());
  while (a.size() >= b.size()) {
    FqElem c = F.fq_mul(a.back(), lead_inv);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.fq_sub(a[shift + i], F.fq_mul(c, b[i]));
    while (!a.empty() && F.fq_is_zero(a.back())) a.pop_back();
  }
  return a;
}

FqPoly fdiv_exact(const ScalarField& F, FqPoly a, const FqPoly& b) {
  if (fpz(a)) return {};
  if (a.size() < b.size()) throw InternalError("scalar: inexact division in Q");
  FqElem lead_inv = F.fq_inv(b.back());
  FqPoly quo(a.size() - b.size() + 1, F.fq_zero());
  while (a.size() >= b.size()) {
    FqElem c = F.fq_mul(a.back(), lead_inv);
    size_t shift = a.size() - b.size();
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.fq_sub(a[shift + i], F.fq_mul(c, b[i]));
    while (!a.empty() && F.fq_is_zero(a.back())) a.pop_back();
  }
  if (!fpz(a)) throw InternalError("scalar: inexact division in Q");
  return quo;
}

FqPoly fgcd(const ScalarField& F, FqPoly a, FqPoly b) {
  while (!fpz(b)) {
    FqPoly r = fmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!fpz(a)) a = fscale(F, a, F.fq_inv(a.back()));
  return a;
}

}  // namespace

Scalar Scalar::make(const ScalarField* f, FqPoly num, FqPoly den) {
  const ScalarField& F = *f;
  if (fpz(den)) throw DomainError("scalar: division by zero");
  if (fpz(num)) return Scalar(f, {}, {F.fq_one()});
  if (den.size() > 1 || num.size() > 1) {
    FqPoly g = fgcd(F, num, den);
    if (g.size() > 1) {
      num = fdiv_exact(F, std::move(num), g);
      den = fdiv_exact(F, std::move(den), g);
    }
  }
  if (!F.fq_is_one(den.back())) {
    FqElem inv = F.fq_inv(den.back());
    num = fscale(F, std::move(num), inv);
    den = fscale(F, std::move(den), inv);
  }
  return Scalar(f, std::move(num), std::move(den));
}

bool Scalar::is_one() const {
  return field_ && num_.size() == 1 && den_.size() == 1 &&
         field_->fq_is_one(num_[0]) && field_->fq_is_one(den_[0]);
}

Scalar Scalar::operator+(const Scalar& o) const {
  const ScalarField& F = *field_;
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return make(field_, fadd(F, num_, o.num_), den_);
  return make(field_, fadd(F, fmul(F, num_, o.den_), fmul(F, o.num_, den_)),
              fmul(F, den_, o.den_));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  return Scalar(field_, fneg(*field_, num_), den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  const ScalarField& F = *field_;
  if (is_zero() || o.is_zero()) return F.zero();
  if (is_one()) return o;
  if (o.is_one()) return *this;
  return make(field_, fmul(F, num_, o.num_), fmul(F, den_, o.den_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
  if (is_zero()) throw DomainError("scalar: inversion of zero");
  return make(field_, den_, num_);
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
}

long Scalar::complexity() const {
  long w = 0;
  for (const auto* poly : {&num_, &den_})
    for (const FqElem& c : *poly) w += static_cast<long>(c.num.size() + c.den.size());
  return w;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Integer Laurent polynomial in (q, Q): map (qexp, Qexp) -> coefficient.
using Display = std::map<std::pair<long, long>, mpz_class>;

QPoly plcm(const QPoly& a, const QPoly& b) {
  QPoly g = pgcd(a, b);
  QPoly q, r;
  pdivrem(pmul(a, b), g, q, r);
  return pmonic(q);
}

void render_term(std::ostringstream& out, bool first, const mpz_class& coeff,
                 long qe, long Qe) {
  mpz_class a = coeff;
  if (first) {
    if (a < 0) {
      out << "-";
      a = -a;
    }
  } else {
    out << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  bool need_coeff = (a != 1) || (qe == 0 && Qe == 0);
  bool printed = false;
  if (need_coeff) {
    out << a.get_str();
    printed = true;
  }
  if (qe != 0) {
    if (printed) out << "*";
    out << "q";
    if (qe != 1) out << "^" << qe;
    printed = true;
  }
  if (Qe != 0) {
    if (printed) out << "*";
    out << "Q";
    if (Qe != 1) out << "^" << Qe;
  }
}

std::string render_display(const Display& d) {
  // descending in Q-degree, then descending in q-degree
  std::vector<std::pair<std::pair<long, long>, mpz_class>> terms(d.begin(), d.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    if (c == 0) continue;
    render_term(out, first, c, key.first, key.second);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace

std::string Scalar::to_string() const {
  if (!field_) return "<uninitialized>";
  if (is_zero()) return "0";
  const ScalarField& F = *field_;

  // common q-denominator over all coefficients
  QPoly D = kOne;
  for (const auto& c : num_)
    if (!F.fq_is_zero(c) && c.den != kOne) D = plcm(D, c.den);
  for (const auto& c : den_)
    if (!F.fq_is_zero(c) && c.den != kOne) D = plcm(D, c.den);

  auto cleared = [&](const FqPoly& p) {
    std::vector<QPoly> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
      if (F.fq_is_zero(p[i])) continue;
      QPoly q, r;
      pdivrem(D, p[i].den, q, r);
      out[i] = pmul(p[i].num, q);
    }
    return out;
  };
  std::vector<QPoly> N = cleared(num_), M = cleared(den_);

  // clear rational denominators and integer content jointly
  mpz_class L = 1, content = 0;
  auto scan = [&](const std::vector<QPoly>& polys) {
    for (const auto& p : polys)
      for (const auto& c : p)
        if (c != 0) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den().get_mpz_t());
  };
  scan(N);
  scan(M);
  auto to_display = [&](const std::vector<QPoly>& polys) {
    Display d;
    for (size_t Qe = 0; Qe < polys.size(); ++Qe)
      for (size_t qe = 0; qe < polys[Qe].size(); ++qe) {
        mpq_class v = polys[Qe][qe] * L;
        if (v == 0) continue;
        mpz_class z = v.get_num();
        d[{static_cast<long>(qe), static_cast<long>(Qe)}] = z;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
      }
    return d;
  };
  Display dn = to_display(N), dm = to_display(M);
  if (content > 1) {
    for (auto& [k, v] : dn) v /= content;
    for (auto& [k, v] : dm) v /= content;
  }
  // sign: highest term of denominator positive
  if (!dm.empty() && dm.rbegin()->second < 0) {
    for (auto& [k, v] : dn) v = -v;
    for (auto& [k, v] : dm) v = -v;
  }

  // fold a monomial denominator q^a into Laurent exponents
  if (dm.size() == 1 && dm.begin()->second == 1 && dm.begin()->first.second == 0) {
    long shift = dm.begin()->first.first;
    Display folded;
    for (const auto& [k, v] : dn) folded[{k.first - shift, k.second}] = v;
    return render_display(folded);
  }
  std::string n = render_display(dn), m = render_display(dm);
  if (m == "1") return n;
  return "(" + n + ")/(" + m + ")";
}

// ---------------------------------------------------------------------------

bool factor_vanishes(const ParamSpec& p, long i) {
  if (!p.k) return false;  // no relation between Q and q
  return p.exp_equal(i, *p.k);
}

bool k_window_vanishes(const ParamSpec& p, long lo, long hi) {
  for (long i = lo; i <= hi; ++i)
    if (factor_vanishes(p, i)) return true;
  return false;
}

}  // namespace bschur
