#include "bibool/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace bibool {

std::vector<int> s_chi(const ChiMap& chi) {
  std::vector<int> lefts, rights;
  for (int i = 0; i < chi.size(); ++i)
    (chi.is_left(i) ? lefts : rights).push_back(i);
  std::vector<int> s = lefts;
  s.insert(s.end(), rights.rbegin(), rights.rend());
  return s;
}

std::vector<int> chi_rank(const ChiMap& chi) {
  auto s = s_chi(chi);
  std::vector<int> rank(s.size());
  for (int j = 0; j < static_cast<int>(s.size()); ++j) rank[s[j]] = j;
  return rank;
}

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  std::vector<bool> seen(n, false);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (int i : b) {
      if (i < 0 || i >= n || seen[i])
        throw std::invalid_argument("blocks do not partition the index set");
      seen[i] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("blocks do not cover the index set");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return Partition{n, std::move(blocks)};
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> b;
  for (int i = 0; i < n; ++i) b.push_back({i});
  return Partition{n, std::move(b)};
}

Partition Partition::full(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return Partition{n, {all}};
}

std::vector<int> Partition::block_index() const {
  std::vector<int> idx(n, -1);
  for (int b = 0; b < num_blocks(); ++b)
    for (int i : blocks[b]) idx[i] = b;
  return idx;
}

std::string Partition::key() const {
  auto idx = block_index();
  std::string k;
  k.reserve(n);
  // blocks are sorted by minimum, so idx is a restricted-growth string
  for (int i = 0; i < n; ++i) k.push_back(static_cast<char>('a' + idx[i]));
  return k;
}

bool Partition::operator<(const Partition& o) const {
  if (n != o.n) return n < o.n;
  return key() < o.key();
}

Partition transport(const std::vector<int>& s, const Partition& p) {
  std::vector<std::vector<int>> out;
  out.reserve(p.blocks.size());
  for (const auto& b : p.blocks) {
    std::vector<int> img;
    img.reserve(b.size());
    for (int i : b) img.push_back(s[i]);
    out.push_back(std::move(img));
  }
  return Partition::from_blocks(p.n, std::move(out));
}

bool is_noncrossing(const Partition& p) {
  auto idx = p.block_index();
  // a < b < c < d with idx[a]=idx[c] != idx[b]=idx[d]
  for (int a = 0; a < p.n; ++a)
    for (int b = a + 1; b < p.n; ++b) {
      if (idx[a] == idx[b]) continue;
      for (int c = b + 1; c < p.n; ++c) {
        if (idx[c] != idx[a]) continue;
        for (int d = c + 1; d < p.n; ++d)
          if (idx[d] == idx[b]) return false;
      }
    }
  return true;
}

bool is_interval_partition(const Partition& p) {
  for (const auto& b : p.blocks)
    if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
  return true;
}

bool leq(const Partition& sigma, const Partition& pi) {
  if (sigma.n != pi.n) throw std::invalid_argument("size mismatch in leq");
  auto idx = pi.block_index();
  for (const auto& b : sigma.blocks)
    for (size_t i = 1; i < b.size(); ++i)
      if (idx[b[i]] != idx[b[0]]) return false;
  return true;
}

namespace {

// Non-crossing partitions of the ordered element list `elems`, as block
// lists in the original indices. The block of elems[0] splits the rest into
// gaps that are partitioned independently (the Catalan recursion).
std::vector<std::vector<std::vector<int>>> nc_block_lists(
    const std::vector<int>& elems) {
  std::vector<std::vector<std::vector<int>>> result;
  if (elems.empty()) {
    result.push_back({});
    return result;
  }
  int m = static_cast<int>(elems.size());
  for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<int> block{elems[0]};
    std::vector<std::vector<int>> gaps;
    std::vector<int> cur;
    for (int j = 1; j < m; ++j) {
      if (mask & (1u << (j - 1))) {
        block.push_back(elems[j]);
        gaps.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(elems[j]);
      }
    }
    gaps.push_back(cur);
    // cross product of gap partitions
    std::vector<std::vector<std::vector<int>>> partial{{block}};
    for (const auto& gap : gaps) {
      auto subs = nc_block_lists(gap);
      std::vector<std::vector<std::vector<int>>> next;
      for (const auto& p : partial)
        for (const auto& s : subs) {
          auto combined = p;
          combined.insert(combined.end(), s.begin(), s.end());
          next.push_back(std::move(combined));
        }
      partial = std::move(next);
    }
    for (auto& p : partial) result.push_back(std::move(p));
  }
  return result;
}

std::vector<Partition> enumerate_nc(int n) {
  std::vector<int> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = i;
  std::vector<Partition> out;
  for (auto& bl : nc_block_lists(elems))
    out.push_back(Partition::from_blocks(n, std::move(bl)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_int(int n) {
  // interval partitions = compositions of n
  std::vector<Partition> out;
  for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cur{0};
    for (int i = 1; i < n; ++i) {
      if (cuts & (1u << (i - 1))) {
        blocks.push_back(cur);
        cur.clear();
      }
      cur.push_back(i);
    }
    blocks.push_back(cur);
    out.push_back(Partition::from_blocks(n, std::move(blocks)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool in_family(Family fam, const ChiMap& chi, const Partition& p) {
  switch (fam) {
    case Family::NC:
      return is_noncrossing(p);
    case Family::INT:
      return is_interval_partition(p);
    case Family::BNC: {
      auto rank = chi_rank(chi);
      return is_noncrossing(transport(rank, p));
    }
    case Family::BI: {
      auto rank = chi_rank(chi);
      return is_interval_partition(transport(rank, p));
    }
    case Family::ABI: {
      if (!in_family(Family::BNC, chi, p)) return false;
      auto interior = interior_blocks(chi, p);
      for (int b = 0; b < p.num_blocks(); ++b)
        if (interior[b] && p.blocks[b].size() > 1) return false;
      return true;
    }
    case Family::BI_STAR: {
      if (!in_family(Family::BI, chi, p)) return false;
      for (const auto& b : p.blocks)
        if (b.size() == 1) return false;
      return true;
    }
  }
  throw std::logic_error("unknown family");
}

const std::vector<Partition>& enumerate_family(Family fam, const ChiMap& chi,
                                               int bound) {
  int n = chi.size();
  if (n > bound)
    throw std::invalid_argument("partition enumeration bound exceeded");
  static std::map<std::pair<int, std::string>, std::vector<Partition>> cache;
  std::string key = std::to_string(static_cast<int>(fam)) + ":" +
                    (fam == Family::NC || fam == Family::INT
                         ? std::string(n, 'l')
                         : chi.labels);
  auto it = cache.find({n, key});
  if (it != cache.end()) return it->second;

  std::vector<Partition> out;
  switch (fam) {
    case Family::NC:
      out = enumerate_nc(n);
      break;
    case Family::INT:
      out = enumerate_int(n);
      break;
    case Family::BNC: {
      auto s = s_chi(chi);
      for (const auto& p : enumerate_nc(n)) out.push_back(transport(s, p));
      break;
    }
    case Family::BI: {
      auto s = s_chi(chi);
      for (const auto& p : enumerate_int(n)) out.push_back(transport(s, p));
      break;
    }
    case Family::ABI:
      for (const auto& p : enumerate_family(Family::BNC, chi, bound))
        if (in_family(Family::ABI, chi, p)) out.push_back(p);
      break;
    case Family::BI_STAR:
      for (const auto& p : enumerate_family(Family::BI, chi, bound))
        if (in_family(Family::BI_STAR, chi, p)) out.push_back(p);
      break;
  }
  std::sort(out.begin(), out.end());
  return cache.emplace(std::make_pair(n, key), std::move(out)).first->second;
}

Partition pi_omega_chi(const ChiMap& chi, const std::vector<int>& omega) {
  if (static_cast<int>(omega.size()) != chi.size())
    throw std::invalid_argument("omega length mismatch");
  auto s = s_chi(chi);
  std::vector<std::vector<int>> blocks;
  for (int j = 0; j < chi.size(); ++j) {
    if (j == 0 || omega[s[j]] != omega[s[j - 1]]) blocks.push_back({});
    blocks.back().push_back(s[j]);
  }
  return Partition::from_blocks(chi.size(), std::move(blocks));
}

Rational mobius_nc(const Partition& sigma, const Partition& pi) {
  if (!leq(sigma, pi)) throw std::invalid_argument("mobius: sigma not <= pi");
  static std::map<std::pair<std::string, std::string>, Rational> cache;
  auto ck = std::make_pair(sigma.key(), pi.key());
  auto it = cache.find(ck);
  if (it != cache.end()) return it->second;
  Rational value;
  if (sigma == pi) {
    value = 1;
  } else {
    // sum over sigma <= tau <= pi of mu(sigma, tau) is 0 when sigma < pi
    Rational acc = 0;
    ChiMap all_left{std::string(sigma.n, 'l')};
    for (const auto& tau : enumerate_family(Family::NC, all_left))
      if (!(tau == pi) && leq(sigma, tau) && leq(tau, pi))
        acc += mobius_nc(sigma, tau);
    value = -acc;
  }
  cache[ck] = value;
  return value;
}

Rational mobius(Family fam, const ChiMap& chi, const Partition& sigma,
                const Partition& pi) {
  if (!in_family(fam, chi, sigma) || !in_family(fam, chi, pi))
    throw std::invalid_argument("mobius: partition not in family");
  if (!leq(sigma, pi)) throw std::invalid_argument("mobius: sigma not <= pi");
  if (fam == Family::BI || fam == Family::INT) {
    int diff = sigma.num_blocks() - pi.num_blocks();
    return (diff % 2 == 0) ? Rational(1) : Rational(-1);
  }
  if (fam == Family::BNC || fam == Family::NC) {
    if (fam == Family::NC) return mobius_nc(sigma, pi);
    auto rank = chi_rank(chi);
    return mobius_nc(transport(rank, sigma), transport(rank, pi));
  }
  throw std::invalid_argument("mobius defined for BI/BNC (and NC/INT) only");
}

Partition kreweras_nc(const Partition& p) {
  int n = p.n;
  // sigma_p cycles each block in increasing order; K(p) has the cycles of
  // sigma_p^{-1} composed with the long cycle i -> i+1 (mod n).
  std::vector<int> perm(n), inv(n);
  for (const auto& b : p.blocks)
    for (size_t i = 0; i < b.size(); ++i)
      perm[b[i]] = b[(i + 1) % b.size()];
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = inv[(i + 1) % n];
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = comp[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    blocks.push_back(std::move(cyc));
  }
  return Partition::from_blocks(n, std::move(blocks));
}

Partition kreweras(const ChiMap& chi, const Partition& p) {
  if (!in_family(Family::BNC, chi, p))
    throw std::invalid_argument("kreweras: partition not in BNC(chi)");
  auto rank = chi_rank(chi);
  auto s = s_chi(chi);
  return transport(s, kreweras_nc(transport(rank, p)));
}

Partition kreweras_relative(const ChiMap& chi, const Partition& p,
                            const Partition& rho) {
  if (!in_family(Family::BNC, chi, rho) || !leq(p, rho))
    throw std::invalid_argument("kreweras_relative: need p <= rho in BNC(chi)");
  std::vector<std::vector<int>> out;
  auto p_idx = p.block_index();
  for (const auto& V : rho.blocks) {
    // restrict p to V, complement within the restricted chi, map back
    ChiMap sub_chi{""};
    for (int i : V) sub_chi.labels.push_back(chi.labels[i]);
    std::map<int, std::vector<int>> restricted;
    for (size_t local = 0; local < V.size(); ++local)
      restricted[p_idx[V[local]]].push_back(static_cast<int>(local));
    std::vector<std::vector<int>> sub_blocks;
    for (auto& [_, b] : restricted) sub_blocks.push_back(std::move(b));
    auto sub = Partition::from_blocks(static_cast<int>(V.size()),
                                      std::move(sub_blocks));
    auto complemented = kreweras(sub_chi, sub);
    for (const auto& b : complemented.blocks) {
      std::vector<int> global;
      for (int local : b) global.push_back(V[local]);
      out.push_back(std::move(global));
    }
  }
  return Partition::from_blocks(p.n, std::move(out));
}

std::vector<bool> interior_blocks(const ChiMap& chi, const Partition& p) {
  auto rank = chi_rank(chi);
  std::vector<std::pair<int, int>> span(p.num_blocks(),
                                        {chi.size(), -1});  // (min, max) rank
  for (int b = 0; b < p.num_blocks(); ++b)
    for (int i : p.blocks[b]) {
      span[b].first = std::min(span[b].first, rank[i]);
      span[b].second = std::max(span[b].second, rank[i]);
    }
  std::vector<bool> interior(p.num_blocks(), false);
  for (int v = 0; v < p.num_blocks(); ++v)
    for (int w = 0; w < p.num_blocks(); ++w)
      if (w != v && span[w].first < span[v].first &&
          span[v].second < span[w].second) {
        interior[v] = true;
        break;
      }
  return interior;
}

bool lessless(const ChiMap& chi, const Partition& sigma, const Partition& pi) {
  if (!leq(sigma, pi)) return false;
  auto rank = chi_rank(chi);
  auto idx = sigma.block_index();
  for (const auto& V : pi.blocks) {
    int lo = V[0], hi = V[0];
    for (int i : V) {
      if (rank[i] < rank[lo]) lo = i;
      if (rank[i] > rank[hi]) hi = i;
    }
    if (idx[lo] != idx[hi]) return false;
  }
  return true;
}

}  // namespace bibool
