#include "bschur/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bschur {

namespace {

std::vector<std::vector<int>> empty_rows(const Parts& p) {
  std::vector<std::vector<int>> rows(p.size());
  for (size_t r = 0; r < p.size(); ++r) rows[r].assign(static_cast<size_t>(p[r]), 0);
  return rows;
}

}  // namespace

Bitableau::Bitableau(Bipartition shape) : shape_(std::move(shape)) {
  rows1_ = empty_rows(shape_.c1);
  rows2_ = empty_rows(shape_.c2);
}

int Bitableau::entry(const Box& b) const {
  const auto& rows = b.ell == 1 ? rows1_ : rows2_;
  return rows[static_cast<size_t>(b.r - 1)][static_cast<size_t>(b.c - 1)];
}

void Bitableau::set_entry(const Box& b, int v) {
  auto& rows = b.ell == 1 ? rows1_ : rows2_;
  rows[static_cast<size_t>(b.r - 1)][static_cast<size_t>(b.c - 1)] = v;
}

bool Bitableau::operator==(const Bitableau& o) const {
  return shape_ == o.shape_ && rows1_ == o.rows1_ && rows2_ == o.rows2_;
}

bool Bitableau::operator<(const Bitableau& o) const {
  if (!(shape_ == o.shape_)) return shape_ < o.shape_;
  if (rows1_ != o.rows1_) return rows1_ < o.rows1_;
  return rows2_ < o.rows2_;
}

std::string Bitableau::to_string() const {
  auto comp = [](const std::vector<std::vector<int>>& rows) {
    std::string s;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r) s += ";";
      for (size_t c = 0; c < rows[r].size(); ++c) {
        if (c) s += ",";
        s += std::to_string(rows[r][c]);
      }
    }
    return s;
  };
  return "[" + comp(rows1_) + "|" + comp(rows2_) + "]";
}

bool Bitableau::is_row_standard() const {
  long n = shape_.size();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (const auto* rows : {&rows1_, &rows2_})
    for (const auto& row : *rows)
      for (size_t c = 0; c < row.size(); ++c) {
        int v = row[c];
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
        if (c > 0 && row[c - 1] >= v) return false;
      }
  return true;
}

bool Bitableau::is_standard() const {
  if (!is_row_standard()) return false;
  for (const auto* rows : {&rows1_, &rows2_})
    for (size_t r = 1; r < rows->size(); ++r)
      for (size_t c = 0; c < (*rows)[r].size(); ++c)
        if ((*rows)[r - 1][c] >= (*rows)[r][c]) return false;
  return true;
}

Bitableau superstandard_tableau(const Bipartition& shape) {
  Bitableau t(shape);
  int next = 1;
  for (const Box& b : diagram_boxes(shape)) {
    // diagram_boxes lists component 1 rows first, in row order
    t.set_entry(b, next++);
  }
  return t;
}

std::vector<Bitableau> standard_tableaux(const Bipartition& shape) {
  long n = shape.size();
  std::vector<Box> boxes = diagram_boxes(shape);
  std::vector<Bitableau> out;
  Bitableau t(shape);
  // place entries 1..n one at a time; a placement is valid if the left and
  // upper neighbours are already filled (smaller entries)
  std::function<void(int)> rec = [&](int next) {
    if (next > n) {
      out.push_back(t);
      return;
    }
    for (const Box& b : boxes) {
      if (t.entry(b) != 0) continue;
      if (b.c > 1 && t.entry({b.r, b.c - 1, b.ell}) == 0) continue;
      if (b.r > 1 && t.entry({b.r - 1, b.c, b.ell}) == 0) continue;
      t.set_entry(b, next);
      rec(next + 1);
      t.set_entry(b, 0);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// letter tableaux

Bicomposition letter_content(const Bitableau& t, long num_letters) {
  Parts counts(static_cast<size_t>(num_letters) + 1, 0);
  for (const Box& b : diagram_boxes(t.shape())) {
    int v = t.entry(b);
    if (v < 0 || v > num_letters) throw DomainError("letter tableau: entry out of range");
    counts[static_cast<size_t>(v)]++;
  }
  Bicomposition type;
  type.c1 = {counts[0]};
  type.c2.assign(counts.begin() + 1, counts.end());
  return type;
}

bool is_letter_semistandard(const Bitableau& t, long num_letters) {
  const Bipartition& shape = t.shape();
  for (int ell = 1; ell <= 2; ++ell) {
    const Parts& p = shape.comp(ell);
    for (size_t r = 0; r < p.size(); ++r)
      for (long c = 1; c <= p[r]; ++c) {
        int v = t.entry({static_cast<long>(r + 1), c, ell});
        if (v < 0 || v > num_letters) return false;
        if (ell == 2 && v == 0) return false;  // first-alphabet letter in component 2
        if (c > 1 && t.entry({static_cast<long>(r + 1), c - 1, ell}) > v) return false;
        if (r > 0 && t.entry({static_cast<long>(r), c, ell}) >= v) return false;
      }
  }
  return true;
}

std::vector<Bitableau> semistandard_tableaux(const Bipartition& shape, long num_letters,
                                             bool allow_zero) {
  std::vector<Box> boxes = diagram_boxes(shape);
  std::vector<Bitableau> out;
  Bitableau t(shape);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == boxes.size()) {
      out.push_back(t);
      return;
    }
    const Box& b = boxes[i];
    int lo = (b.ell == 1 && allow_zero) ? 0 : 1;
    if (b.c > 1) lo = std::max(lo, t.entry({b.r, b.c - 1, b.ell}));
    if (b.r > 1) lo = std::max(lo, t.entry({b.r - 1, b.c, b.ell}) + 1);
    for (int v = lo; v <= num_letters; ++v) {
      t.set_entry(b, v);
      rec(i + 1);
    }
    t.set_entry(b, 0);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Bitableau letterize(const Bitableau& std_tab, const Bicomposition& type) {
  long n = std_tab.shape().size();
  if (type.size() != n) throw DomainError("letterize: type size mismatch");
  if (type.c1.size() > 1) throw DomainError("letterize: type must have at most one first part");
  // letter of entry j: 0 for the first a entries, then letter i for the next
  // type.c2[i-1] entries
  std::vector<int> letter(static_cast<size_t>(n) + 1, 0);
  long next = 1;
  long a = type.c1.empty() ? 0 : type.c1[0];
  for (long j = 0; j < a; ++j) letter[static_cast<size_t>(next++)] = 0;
  for (size_t i = 0; i < type.c2.size(); ++i)
    for (long j = 0; j < type.c2[i]; ++j) letter[static_cast<size_t>(next++)] = static_cast<int>(i + 1);
  Bitableau out(std_tab.shape());
  for (const Box& b : diagram_boxes(std_tab.shape()))
    out.set_entry(b, letter[static_cast<size_t>(std_tab.entry(b))]);
  return out;
}

std::vector<Bitableau> standard_lifts(const Bitableau& semi, const Bicomposition& type) {
  std::vector<Bitableau> out;
  for (const Bitableau& s : standard_tableaux(semi.shape()))
    if (letterize(s, type) == semi) out.push_back(s);
  return out;
}

}  // namespace bschur
