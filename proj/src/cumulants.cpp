#include "bibool/cumulants.hpp"

#include <algorithm>
#include <stdexcept>

namespace bibool {

Family family_for_kind(TableKind kind) {
  switch (kind) {
    case TableKind::boolean_cum:
      return Family::INT;
    case TableKind::free_cum:
      return Family::NC;
    case TableKind::bifree_cum:
      return Family::BNC;
    case TableKind::biboolean_cum:
      return Family::BI;
    case TableKind::bifermi_cum:
      return Family::ABI;
    case TableKind::moments:
      break;
  }
  throw std::invalid_argument("no partition family for this kind");
}

namespace {

// (left count, right count) of each block of pi for the word a^m b^n,
// where positions 0..m-1 are left.
std::vector<std::pair<int, int>> block_signatures(const Partition& pi, int m) {
  std::vector<std::pair<int, int>> sig;
  sig.reserve(pi.blocks.size());
  for (const auto& b : pi.blocks) {
    int lefts = static_cast<int>(
        std::count_if(b.begin(), b.end(), [m](int i) { return i < m; }));
    sig.emplace_back(lefts, static_cast<int>(b.size()) - lefts);
  }
  return sig;
}

}  // namespace

ExponentTable cumulants_to_moments(const ExponentTable& cumulants) {
  Family fam = family_for_kind(cumulants.kind);
  ExponentTable out(TableKind::moments, cumulants.max_degree);
  for (int m = 0; m <= cumulants.max_degree; ++m)
    for (int n = 0; m + n <= cumulants.max_degree; ++n) {
      if (m + n < 1) continue;
      Rational acc = 0;
      for (const auto& pi :
           enumerate_family(fam, ChiMap::pair_word(m, n))) {
        Rational term = 1;
        for (auto [bl, br] : block_signatures(pi, m)) {
          term *= cumulants.get(bl, br);
          if (term == 0) break;
        }
        acc += term;
      }
      out.set(m, n, acc);
    }
  return out;
}

ExponentTable moments_to_cumulants(const ExponentTable& moments, TableKind kind) {
  if (moments.kind != TableKind::moments)
    throw std::invalid_argument("moments_to_cumulants needs a moment table");
  Family fam = family_for_kind(kind);
  ExponentTable cum(kind, moments.max_degree);
  // induction on total degree: every non-maximal partition only involves
  // blocks of strictly smaller order
  for (int d = 1; d <= moments.max_degree; ++d)
    for (int m = 0; m <= d; ++m) {
      int n = d - m;
      Rational rest = 0;
      const Partition one = Partition::full(d);
      for (const auto& pi :
           enumerate_family(fam, ChiMap::pair_word(m, n))) {
        if (pi == one) continue;
        Rational term = 1;
        for (auto [bl, br] : block_signatures(pi, m)) {
          term *= cum.get(bl, br);
          if (term == 0) break;
        }
        rest += term;
      }
      cum.set(m, n, moments.get(m, n) - rest);
    }
  return cum;
}

Rational word_cumulant(const TwoFacedDistribution& dist, const Word& word,
                       WordCumulantKind kind) {
  if (word.empty()) throw std::invalid_argument("empty word");
  ChiMap chi = word_chi(word);
  int n = chi.size();
  const Partition one = Partition::full(n);
  Family fam = kind == WordCumulantKind::biboolean ? Family::BI : Family::BNC;
  Rational acc = 0;
  for (const auto& sigma : enumerate_family(fam, chi)) {
    Rational phi_sigma = dist.phi_partition(word, sigma);
    if (phi_sigma == 0) continue;
    acc += mobius(fam, chi, sigma, one) * phi_sigma;
  }
  return acc;
}

namespace {

Rational bifree_word_cumulant_memo(const TwoFacedDistribution& dist,
                                   const Word& word,
                                   std::map<Word, Rational>& memo) {
  auto it = memo.find(word);
  if (it != memo.end()) return it->second;
  Rational v = word_cumulant(dist, word, WordCumulantKind::bifree);
  memo.emplace(word, v);
  return v;
}

Rational c_blr_impl(const TwoFacedDistribution& phi_dist,
                    const TwoFacedDistribution& psi_dist, const Word& word,
                    std::map<Word, Rational>& kk_memo,
                    std::map<Word, Rational>& kappa_memo) {
  auto it = kk_memo.find(word);
  if (it != kk_memo.end()) return it->second;
  ChiMap chi = word_chi(word);
  int n = chi.size();
  const Partition one = Partition::full(n);
  Rational rest = 0;
  for (const auto& pi : enumerate_family(Family::BNC, chi)) {
    if (pi == one) continue;
    auto interior = interior_blocks(chi, pi);
    Rational term = 1;
    for (int b = 0; b < pi.num_blocks() && term != 0; ++b) {
      Word sub;
      for (int i : pi.blocks[b]) sub.push_back(word[i]);
      term *= interior[b]
                  ? bifree_word_cumulant_memo(psi_dist, sub, kappa_memo)
                  : c_blr_impl(phi_dist, psi_dist, sub, kk_memo, kappa_memo);
    }
    rest += term;
  }
  Rational v = phi_dist.phi(word) - rest;
  kk_memo.emplace(word, v);
  return v;
}

}  // namespace

Rational c_blr_cumulant(const TwoFacedDistribution& phi_dist,
                        const TwoFacedDistribution& psi_dist, const Word& word) {
  if (word.empty()) throw std::invalid_argument("empty word");
  std::map<Word, Rational> kk_memo, kappa_memo;
  return c_blr_impl(phi_dist, psi_dist, word, kk_memo, kappa_memo);
}

ExponentTable affine_shift_cumulants(const ExponentTable& t, Side side) {
  if (t.kind != TableKind::biboolean_cum)
    throw std::invalid_argument("affine shift needs a bi-Boolean cumulant table");
  ExponentTable out(t.kind, t.max_degree);
  auto src = [&](int m, int n) {
    return side == Side::left ? t.get(m, n) : t.get(n, m);
  };
  auto put = [&](int m, int n, Rational v) {
    if (side == Side::left)
      out.set(m, n, std::move(v));
    else
      out.set(n, m, std::move(v));
  };
  for (int m = 0; m <= t.max_degree; ++m)
    for (int n = 0; m + n <= t.max_degree; ++n) {
      if (m + n < 1) continue;
      if (m == 0) {
        put(m, n, src(m, n));
      } else if (n >= 1) {
        Rational acc = 0;
        for (int i = 0; i < m; ++i) acc += binomial(m - 1, i) * src(i + 1, n);
        put(m, n, acc);
      } else if (m == 1) {
        put(1, 0, src(1, 0) + 1);
      } else {
        Rational acc = 0;
        for (int i = 0; i + 2 <= m; ++i)
          acc += binomial(m - 2, i) * src(i + 2, 0);
        put(m, 0, acc);
      }
    }
  return out;
}

}  // namespace bibool
