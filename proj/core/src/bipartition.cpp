#include "bschur/bipartition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace bschur {

namespace {

long sum(const Parts& p) { return std::accumulate(p.begin(), p.end(), 0L); }

Parts strip(Parts p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool weakly_decreasing(const Parts& p) {
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) return false;
  return true;
}

std::string parts_to_string(const Parts& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace

long Bicomposition::size() const { return sum(c1) + sum(c2); }

bool Bicomposition::operator<(const Bicomposition& o) const {
  if (c1 != o.c1) return c1 < o.c1;
  return c2 < o.c2;
}

Bicomposition Bicomposition::stripped() const { return {strip(c1), strip(c2)}; }

std::string Bicomposition::to_string() const {
  return parts_to_string(c1) + "|" + parts_to_string(c2);
}

Bipartition::Bipartition(Parts a, Parts b) : c1(strip(std::move(a))), c2(strip(std::move(b))) {
  if (!weakly_decreasing(c1) || !weakly_decreasing(c2))
    throw DomainError("bipartition: components must be weakly decreasing");
  for (long v : c1)
    if (v < 0) throw DomainError("bipartition: negative part");
  for (long v : c2)
    if (v < 0) throw DomainError("bipartition: negative part");
}

long Bipartition::size() const { return sum(c1) + sum(c2); }

bool Bipartition::operator<(const Bipartition& o) const {
  if (c1 != o.c1) return c1 < o.c1;
  return c2 < o.c2;
}

std::string Bipartition::to_string() const {
  return parts_to_string(c1) + "|" + parts_to_string(c2);
}

bool Box::operator<(const Box& o) const {
  if (ell != o.ell) return ell < o.ell;
  if (r != o.r) return r < o.r;
  return c < o.c;
}

std::string Box::to_string() const {
  return "(" + std::to_string(r) + "," + std::to_string(c) + "," + std::to_string(ell) + ")";
}

Dominance dominance_cmp(const Bicomposition& lambda, const Bicomposition& mu) {
  if (lambda.size() != mu.size())
    throw DomainError("dominance_cmp: size mismatch");
  // prefix sums of the flattened sequence (comp1 rows, then comp2 rows with
  // the full |comp1| already counted)
  auto prefixes = [](const Bicomposition& x, size_t rows1, size_t rows2) {
    std::vector<long> ps;
    long acc = 0;
    for (size_t i = 0; i < rows1; ++i) {
      acc += i < x.c1.size() ? x.c1[i] : 0;
      ps.push_back(acc);
    }
    for (size_t i = 0; i < rows2; ++i) {
      acc += i < x.c2.size() ? x.c2[i] : 0;
      ps.push_back(acc);
    }
    return ps;
  };
  size_t rows1 = std::max(lambda.c1.size(), mu.c1.size());
  size_t rows2 = std::max(lambda.c2.size(), mu.c2.size());
  std::vector<long> a = prefixes(lambda, rows1, rows2), b = prefixes(mu, rows1, rows2);
  bool ge = true, le = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) ge = false;
    if (a[i] > b[i]) le = false;
  }
  if (ge && le) return Dominance::equal;
  if (ge) return Dominance::dominates;
  if (le) return Dominance::dominated;
  return Dominance::incomparable;
}

std::vector<Parts> enumerate_partitions(long n) {
  std::vector<Parts> out;
  Parts cur;
  // descending parts, largest first
  std::function<void(long, long)> rec = [&](long rest, long maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (long p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  if (n == 0) out.push_back({});
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(long n) {
  std::vector<Bipartition> out;
  for (long a = n; a >= 0; --a) {
    for (const Parts& p1 : enumerate_partitions(a))
      for (const Parts& p2 : enumerate_partitions(n - a))
        out.emplace_back(p1, p2);
  }
  // order by descending prefix-sum vector: a linear extension of dominance
  auto key = [n](const Bipartition& x) {
    std::vector<long> ps;
    long acc = 0;
    for (long i = 0; i < n; ++i) {
      acc += i < static_cast<long>(x.c1.size()) ? x.c1[i] : 0;
      ps.push_back(acc);
    }
    for (long i = 0; i < n; ++i) {
      acc += i < static_cast<long>(x.c2.size()) ? x.c2[i] : 0;
      ps.push_back(acc);
    }
    return ps;
  };
  std::stable_sort(out.begin(), out.end(), [&](const Bipartition& x, const Bipartition& y) {
    return key(x) > key(y);
  });
  return out;
}

Bipartition unstack(const Bipartition& lambda) {
  if (!lambda.c2.empty())
    throw DomainError("unstack: second component must be empty");
  if (lambda.c1.empty()) return {};
  Parts head = {lambda.c1[0]};
  Parts tail(lambda.c1.begin() + 1, lambda.c1.end());
  return Bipartition(head, tail);
}

Bipartition stack(const Bicomposition& rho) {
  Parts all = rho.c1;
  all.insert(all.end(), rho.c2.begin(), rho.c2.end());
  all = strip(all);
  if (!weakly_decreasing(all))
    throw DomainError("stack: concatenation is not weakly decreasing");
  return Bipartition(all, {});
}

bool in_Lambda_nm(const Bipartition& lambda, long n, long m) {
  if (lambda.size() != n) return false;
  long r = m / 2;
  return static_cast<long>(lambda.c1.size()) <= n &&
         static_cast<long>(lambda.c2.size()) <= r;
}

namespace {

Parts parse_parts(const std::string& s) {
  Parts out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      if (cur.empty()) throw DomainError("shape: malformed part list '" + s + "'");
      out.push_back(std::stol(cur));
      cur.clear();
    } else if (ch >= '0' && ch <= '9') {
      cur += ch;
    } else if (ch == ' ') {
      continue;
    } else {
      throw DomainError("shape: unexpected character in '" + s + "'");
    }
  }
  if (!cur.empty()) out.push_back(std::stol(cur));
  return out;
}

Bipartition parse_json_shape(const std::string& text) {
  // minimal [[a,b],[c]] reader; full JSON is not needed here
  std::vector<Parts> comps;
  Parts cur;
  std::string num;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') {
      ++depth;
      if (depth == 2) cur.clear();
    } else if (ch == ']') {
      if (!num.empty()) {
        cur.push_back(std::stol(num));
        num.clear();
      }
      if (depth == 2) comps.push_back(cur);
      --depth;
    } else if (ch == ',') {
      if (!num.empty()) {
        cur.push_back(std::stol(num));
        num.clear();
      }
    } else if (ch >= '0' && ch <= '9') {
      num += ch;
    } else if (ch == ' ') {
      continue;
    } else {
      throw DomainError("shape: bad JSON '" + text + "'");
    }
  }
  if (depth != 0 || comps.size() != 2)
    throw DomainError("shape: bad JSON '" + text + "'");
  return Bipartition(comps[0], comps[1]);
}

}  // namespace

Bipartition parse_shape(const std::string& text) {
  if (!text.empty() && text[0] == '[') return parse_json_shape(text);
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw DomainError("shape: missing '|' separator in '" + text + "'");
  return Bipartition(parse_parts(text.substr(0, bar)), parse_parts(text.substr(bar + 1)));
}

std::vector<Box> diagram_boxes(const Bipartition& lambda) {
  std::vector<Box> out;
  for (int ell = 1; ell <= 2; ++ell) {
    const Parts& p = lambda.comp(ell);
    for (size_t r = 0; r < p.size(); ++r)
      for (long c = 1; c <= p[r]; ++c) out.push_back({static_cast<long>(r + 1), c, ell});
  }
  return out;
}

std::vector<Box> addable_boxes(const Bipartition& lambda) {
  std::vector<Box> out;
  for (int ell = 1; ell <= 2; ++ell) {
    const Parts& p = lambda.comp(ell);
    for (size_t r = 0; r <= p.size(); ++r) {
      long len = r < p.size() ? p[r] : 0;
      long above = r == 0 ? -1 : p[r - 1];
      if (r == 0 || len < above) out.push_back({static_cast<long>(r + 1), len + 1, ell});
    }
  }
  return out;
}

std::vector<Box> removable_boxes(const Bipartition& lambda) {
  std::vector<Box> out;
  for (int ell = 1; ell <= 2; ++ell) {
    const Parts& p = lambda.comp(ell);
    for (size_t r = 0; r < p.size(); ++r) {
      long below = r + 1 < p.size() ? p[r + 1] : 0;
      if (p[r] > below && p[r] > 0) out.push_back({static_cast<long>(r + 1), p[r], ell});
    }
  }
  return out;
}

Bipartition add_box(const Bipartition& lambda, const Box& b) {
  Parts p1 = lambda.c1, p2 = lambda.c2;
  Parts& p = b.ell == 1 ? p1 : p2;
  if (static_cast<size_t>(b.r) > p.size() + 1)
    throw DomainError("add_box: box not addable");
  if (static_cast<size_t>(b.r) == p.size() + 1) p.push_back(0);
  if (p[b.r - 1] + 1 != b.c) throw DomainError("add_box: box not addable");
  p[b.r - 1] += 1;
  return Bipartition(p1, p2);
}

Bipartition remove_box(const Bipartition& lambda, const Box& b) {
  Parts p1 = lambda.c1, p2 = lambda.c2;
  Parts& p = b.ell == 1 ? p1 : p2;
  if (static_cast<size_t>(b.r) > p.size() || p[b.r - 1] != b.c)
    throw DomainError("remove_box: box not removable");
  p[b.r - 1] -= 1;
  return Bipartition(p1, p2);
}

bool contains_diagram(const Bipartition& outer, const Bipartition& inner) {
  for (int ell = 1; ell <= 2; ++ell) {
    const Parts& in = inner.comp(ell);
    const Parts& out = outer.comp(ell);
    for (size_t r = 0; r < in.size(); ++r)
      if (r >= out.size() || out[r] < in[r]) return false;
  }
  return true;
}

}  // namespace bschur
