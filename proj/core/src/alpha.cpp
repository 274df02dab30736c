#include "bschur/alpha.hpp"

#include <functional>
#include <numeric>

namespace bschur {

long Alpha::rank() const {
  long total = std::accumulate(pos.begin(), pos.end(), 0L) * 2;
  if (m % 2 == 1) total += a0;
  return m % 2 == 1 ? (total - 1) / 2 : total / 2;
}

void Alpha::validate() const {
  if (m < 1) throw DomainError("alpha: m must be positive");
  if (static_cast<long>(pos.size()) != r())
    throw DomainError("alpha: expected " + std::to_string(r()) + " positive-index entries");
  for (long v : pos)
    if (v < 0) throw DomainError("alpha: negative entry");
  if (m % 2 == 1) {
    if (a0 < 1 || a0 % 2 == 0) throw DomainError("alpha: entry at 0 must be odd positive");
  } else if (a0 != 0) {
    throw DomainError("alpha: entry at 0 not allowed for even m");
  }
}

bool Alpha::operator<(const Alpha& o) const {
  if (m != o.m) return m < o.m;
  if (a0 != o.a0) return a0 < o.a0;
  return pos < o.pos;
}

std::string Alpha::to_string() const {
  std::string s = "(";
  bool first = true;
  auto app = [&](long v) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  };
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) app(*it);
  if (m % 2 == 1) app(a0);
  for (long v : pos) app(v);
  s += ")";
  return s;
}

std::vector<Alpha> enumerate_Bnm(long n, long m) {
  if (n < 0 || m < 1) throw DomainError("B_n(m): need n >= 0, m >= 1");
  long r = m / 2;
  std::vector<Alpha> out;
  // compositions of `rest` into r non-negative parts
  std::function<void(Alpha&, long, size_t)> fill = [&](Alpha& a, long rest, size_t idx) {
    if (idx == static_cast<size_t>(r)) {
      if (rest == 0) out.push_back(a);
      return;
    }
    for (long v = 0; v <= rest; ++v) {
      a.pos[idx] = v;
      fill(a, rest - v, idx + 1);
    }
  };
  if (m % 2 == 1) {
    for (long half = 0; half <= n; ++half) {
      Alpha a;
      a.m = m;
      a.a0 = 2 * half + 1;
      a.pos.assign(r, 0);
      fill(a, n - half, 0);
    }
  } else {
    Alpha a;
    a.m = m;
    a.pos.assign(r, 0);
    fill(a, n, 0);
  }
  return out;
}

Bicomposition lambda_of_alpha(const Alpha& alpha) {
  alpha.validate();
  Bicomposition out;
  out.c1 = {alpha.a0 / 2};
  out.c2 = alpha.pos;
  return out;
}

std::vector<int> G_alpha(const Alpha& alpha) {
  alpha.validate();
  long n = alpha.rank();
  std::vector<bool> cut(static_cast<size_t>(n) + 1, false);
  long acc = alpha.a0 / 2;
  if (acc <= n) cut[acc] = true;
  for (long v : alpha.pos) {
    acc += v;
    if (acc <= n) cut[acc] = true;
  }
  std::vector<int> gens;
  for (long i = 0; i < n; ++i)
    if (!cut[i]) gens.push_back(static_cast<int>(i));
  return gens;
}

bool in_LambdaB(const Bipartition& lambda, long n, long m) {
  if (lambda.size() != n) return false;
  long r = m / 2;
  if (static_cast<long>(lambda.c2.size()) > r) return false;
  if (m % 2 == 1) return lambda.c1.size() <= 1;
  return lambda.c1.empty();
}

}  // namespace bschur
