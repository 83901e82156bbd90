#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bibool/rational.hpp"

namespace bibool {

enum class TableKind {
  moments,
  boolean_cum,
  free_cum,
  bifree_cum,
  biboolean_cum,
  bifermi_cum,
};

std::string table_kind_name(TableKind k);
TableKind table_kind_from_name(const std::string& name);

// Sparse (m,n)-indexed table, 1 <= m+n <= max_degree; missing entries are
// zero. For kind == moments the (0,0) slot is implicitly 1.
struct ExponentTable {
  TableKind kind = TableKind::moments;
  int max_degree = 0;
  std::map<std::pair<int, int>, Rational> entries;

  ExponentTable() = default;
  ExponentTable(TableKind k, int degree) : kind(k), max_degree(degree) {
    if (degree < 1) throw std::invalid_argument("table degree must be >= 1");
  }

  Rational get(int m, int n) const {
    if (m == 0 && n == 0)
      return kind == TableKind::moments ? Rational(1) : Rational(0);
    auto it = entries.find({m, n});
    return it == entries.end() ? Rational(0) : it->second;
  }

  void set(int m, int n, Rational v) {
    if (m < 0 || n < 0 || m + n < 1 || m + n > max_degree)
      throw std::out_of_range("table index out of range");
    if (v == 0)
      entries.erase({m, n});
    else
      entries[{m, n}] = std::move(v);
  }

  bool operator==(const ExponentTable& o) const {
    return kind == o.kind && max_degree == o.max_degree && entries == o.entries;
  }
};

// Finitely-atomic signed measure on the plane.
struct AtomicMeasure2D {
  struct Atom {
    Rational x, y, w;
  };
  std::vector<Atom> atoms;

  static AtomicMeasure2D point_mass(Rational x, Rational y) {
    return AtomicMeasure2D{{{std::move(x), std::move(y), Rational(1)}}};
  }

  // Merges duplicate coordinates, drops zero weights.
  void normalize();
  bool is_probability() const;
};

ExponentTable measure_moments(const AtomicMeasure2D& mu, int degree);
AtomicMeasure2D dilate(const AtomicMeasure2D& mu, const Rational& lambda);
AtomicMeasure2D shift(const AtomicMeasure2D& mu, const Rational& dx,
                      const Rational& dy);

// Moment table of the translated variable pair (a + dx, b + dy), assuming a
// commuting pair (binomial expansion of mixed powers).
ExponentTable table_shift_moments(const ExponentTable& moments,
                                  const Rational& dx, const Rational& dy);

}  // namespace bibool
