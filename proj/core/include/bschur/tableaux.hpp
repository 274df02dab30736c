#ifndef BSCHUR_TABLEAUX_HPP
#define BSCHUR_TABLEAUX_HPP

#include <string>
#include <vector>

#include "bschur/bipartition.hpp"

namespace bschur {

// Filling of the diagram of a bipartition. Entries are either 1..n (standard
// kind) or alphabet letters (0 = the single first-alphabet letter, 1..r the
// second alphabet); 0 doubles as "unset" during construction.
class Bitableau {
 public:
  explicit Bitableau(Bipartition shape);

  const Bipartition& shape() const { return shape_; }
  int entry(const Box& b) const;
  void set_entry(const Box& b, int v);

  bool is_row_standard() const;  // entries 1..n once each, rows increasing
  bool is_standard() const;      // row standard + columns strictly increasing

  bool operator==(const Bitableau& o) const;
  bool operator!=(const Bitableau& o) const { return !(*this == o); }
  bool operator<(const Bitableau& o) const;
  std::string to_string() const;

 private:
  Bipartition shape_;
  std::vector<std::vector<int>> rows1_, rows2_;
};

// t^lambda: 1, 2, ... filled along rows, component 1 first.
Bitableau superstandard_tableau(const Bipartition& shape);

// All standard bitableaux of the given shape, sorted.
std::vector<Bitableau> standard_tableaux(const Bipartition& shape);

// Letter tableaux with entries in {0, 1, .., num_letters} (0 only when
// allow_zero, and only in component 1), weakly increasing along rows,
// strictly increasing down columns. Sorted.
std::vector<Bitableau> semistandard_tableaux(const Bipartition& shape, long num_letters,
                                             bool allow_zero);

// Content of a letter tableau as the bicomposition ((#0s), (#1s, ..., #rs)).
Bicomposition letter_content(const Bitableau& t, long num_letters);

bool is_letter_semistandard(const Bitableau& t, long num_letters);

// Replace entry j of a standard tableau by its letter under the row-reading
// of the type: entries 1..a map to letter 0, the next type.c2[0] to letter 1,
// and so on. (The type's first component must be a single part.)
Bitableau letterize(const Bitableau& std_tab, const Bicomposition& type);

// Standard tableaux s of the same shape with letterize(s, type) == semi.
std::vector<Bitableau> standard_lifts(const Bitableau& semi, const Bicomposition& type);

}  // namespace bschur

#endif
