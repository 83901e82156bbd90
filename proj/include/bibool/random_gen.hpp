#pragma once

#include <random>

#include "bibool/ncseries.hpp"
#include "bibool/table.hpp"

namespace bibool {

// Seeded generators used by verification trials and property tests. Atom
// coordinates and weights come from small rational grids (denominators <= 4)
// to keep intermediate rationals desk-sized.
struct RandomGen {
  std::mt19937_64 rng;

  explicit RandomGen(uint64_t seed) : rng(seed) {}

  Rational grid_rational(int num_lo = -3, int num_hi = 3, int den_hi = 4) {
    std::uniform_int_distribution<int> num(num_lo, num_hi), den(1, den_hi);
    return Rational(num(rng), den(rng));
  }

  // Signed measure with the given number of atoms at distinct grid points.
  AtomicMeasure2D measure(int max_atoms, bool probability = false) {
    std::uniform_int_distribution<int> count(1, max_atoms);
    int k = count(rng);
    AtomicMeasure2D mu;
    while (static_cast<int>(mu.atoms.size()) < k) {
      Rational x = grid_rational(), y = grid_rational();
      bool dup = false;
      for (const auto& a : mu.atoms) dup |= (a.x == x && a.y == y);
      if (!dup) mu.atoms.push_back({x, y, grid_rational()});
    }
    if (probability) {
      std::uniform_int_distribution<int> pos(1, 4);
      Rational total = 0;
      for (auto& a : mu.atoms) {
        a.w = Rational(pos(rng));
        total += a.w;
      }
      for (auto& a : mu.atoms) a.w /= total;
    }
    mu.normalize();
    if (mu.atoms.empty()) mu.atoms.push_back({grid_rational(), grid_rational(), Rational(1)});
    return mu;
  }

  ExponentTable table(TableKind kind, int degree, int zero_chance_in = 3) {
    ExponentTable t(kind, degree);
    std::uniform_int_distribution<int> zero(0, zero_chance_in - 1);
    for (int m = 0; m <= degree; ++m)
      for (int n = 0; m + n <= degree; ++n) {
        if (m + n < 1) continue;
        if (zero(rng) == 0) continue;
        t.set(m, n, grid_rational());
      }
    return t;
  }

  NcSeries ncseries(const Alphabet& alphabet, int degree,
                    int zero_chance_in = 3) {
    NcSeries s;
    s.alphabet = alphabet;
    s.max_degree = degree;
    std::uniform_int_distribution<int> zero(0, zero_chance_in - 1);
    for_each_alphabet_word(alphabet, degree, [&](const Word& w) {
      if (zero(rng) == 0) return;
      s.set(w, grid_rational());
    });
    return s;
  }
};

}  // namespace bibool
