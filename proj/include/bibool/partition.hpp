#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bibool/rational.hpp"

namespace bibool {

// Position labels: 'l' (left) or 'r' (right), one per index 0..n-1.
struct ChiMap {
  std::string labels;

  int size() const { return static_cast<int>(labels.size()); }
  bool is_left(int i) const { return labels[i] == 'l'; }

  // The chi-map of the word a^m b^n: m lefts followed by n rights.
  static ChiMap pair_word(int m, int n) {
    return ChiMap{std::string(m, 'l') + std::string(n, 'r')};
  }
};

// s(j) = the index occupying position j of the induced total order:
// left indices ascending, then right indices descending.
std::vector<int> s_chi(const ChiMap& chi);

// rank[i] = position of index i in the induced total order.
std::vector<int> chi_rank(const ChiMap& chi);

// Set partition of {0..n-1} in canonical form: each block sorted ascending,
// blocks ordered by their minimum.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);
  static Partition singletons(int n);
  static Partition full(int n);

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  // element -> index of its block in `blocks`
  std::vector<int> block_index() const;
  // Restricted-growth string; canonical key for memoization and ordering.
  std::string key() const;

  bool operator==(const Partition& o) const { return n == o.n && blocks == o.blocks; }
  bool operator<(const Partition& o) const;
};

enum class Family { NC, INT, BNC, BI, ABI, BI_STAR };

// Image partition {{s(i) : i in V} : V in p}.
Partition transport(const std::vector<int>& s, const Partition& p);

bool is_noncrossing(const Partition& p);
bool is_interval_partition(const Partition& p);

// sigma refines pi: every block of sigma lies inside a block of pi.
bool leq(const Partition& sigma, const Partition& pi);

bool in_family(Family fam, const ChiMap& chi, const Partition& p);

// All partitions of the family, deterministic canonical order (sorted by key).
// Throws if chi.size() exceeds the bound.
const std::vector<Partition>& enumerate_family(Family fam, const ChiMap& chi,
                                               int bound = 12);

// The maximal bi-interval partition refining the coloring omega: maximal runs
// of constant color along the chi order.
Partition pi_omega_chi(const ChiMap& chi, const std::vector<int>& omega);

// Moebius function of NC(n) on the interval [sigma, pi], memoized.
Rational mobius_nc(const Partition& sigma, const Partition& pi);

// Moebius function of BI(chi) or BNC(chi); requires sigma <= pi and membership.
Rational mobius(Family fam, const ChiMap& chi, const Partition& sigma,
                const Partition& pi);

// Kreweras complement on NC(n).
Partition kreweras_nc(const Partition& p);

// Bi-non-crossing Kreweras complement, and the relative form within each
// block of rho (requires p <= rho).
Partition kreweras(const ChiMap& chi, const Partition& p);
Partition kreweras_relative(const ChiMap& chi, const Partition& p,
                            const Partition& rho);

// For each block (aligned with p.blocks): is it interior, i.e. does some
// other block straddle it in the chi order?
std::vector<bool> interior_blocks(const ChiMap& chi, const Partition& p);

// sigma << pi: sigma <= pi and every block of pi has its chi-min and chi-max
// inside a single block of sigma.
bool lessless(const ChiMap& chi, const Partition& sigma, const Partition& pi);

}  // namespace bibool
