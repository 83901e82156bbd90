#include "bibool/products.hpp"

#include <functional>
#include <stdexcept>

namespace bibool {

namespace {

// Merged alphabet plus the map from merged symbol to (component, local symbol).
struct Merged {
  Alphabet alphabet;
  std::map<Sym, std::pair<int, Sym>> origin;

  static Merged build(const std::vector<TwoFacedDistribution>& comps) {
    Merged m;
    for (int k = 0; k < static_cast<int>(comps.size()); ++k) {
      const Alphabet& a = comps[k].alphabet;
      for (size_t i = 0; i < a.left.size(); ++i) {
        Alphabet single{{a.left[i]}, {}};
        m.alphabet = Alphabet::merge(m.alphabet, single);
        m.origin[static_cast<Sym>(m.alphabet.left.size())] = {
            k, static_cast<Sym>(i + 1)};
      }
    }
    for (int k = 0; k < static_cast<int>(comps.size()); ++k) {
      const Alphabet& a = comps[k].alphabet;
      for (size_t i = 0; i < a.right.size(); ++i) {
        Alphabet single{{}, {a.right[i]}};
        m.alphabet = Alphabet::merge(m.alphabet, single);
        m.origin[-static_cast<Sym>(m.alphabet.right.size())] = {
            k, -static_cast<Sym>(i + 1)};
      }
    }
    return m;
  }
};

// Product of component moments over the blocks of pi; requires each block to
// be monochromatic in the component coloring.
Rational phi_blocks(const std::vector<TwoFacedDistribution>& comps,
                    const Merged& merged, const Word& w, const Partition& pi) {
  Rational acc = 1;
  for (const auto& block : pi.blocks) {
    int comp = merged.origin.at(w[block[0]]).first;
    Word local;
    local.reserve(block.size());
    for (int i : block) {
      auto [k, s] = merged.origin.at(w[i]);
      if (k != comp) throw std::logic_error("non-monochromatic block");
      local.push_back(s);
    }
    acc *= comps[comp].phi(local);
    if (acc == 0) return acc;
  }
  return acc;
}

void for_each_word(const Alphabet& a, int max_len,
                   const std::function<void(const Word&)>& fn) {
  std::vector<Sym> symbols;
  for (size_t i = 0; i < a.left.size(); ++i)
    symbols.push_back(static_cast<Sym>(i + 1));
  for (size_t i = 0; i < a.right.size(); ++i)
    symbols.push_back(-static_cast<Sym>(i + 1));
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (!w.empty()) fn(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (Sym s : symbols) {
      w.push_back(s);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

int common_degree(const std::vector<TwoFacedDistribution>& comps) {
  if (comps.empty()) throw std::invalid_argument("empty component list");
  int d = comps[0].max_degree;
  for (const auto& c : comps)
    if (c.max_degree != d)
      throw std::invalid_argument("components must share max_degree");
  return d;
}

std::vector<int> component_coloring(const Merged& merged, const Word& w) {
  std::vector<int> omega;
  omega.reserve(w.size());
  for (Sym s : w) omega.push_back(merged.origin.at(s).first);
  return omega;
}

}  // namespace

TwoFacedDistribution biboolean_product(
    const std::vector<TwoFacedDistribution>& comps) {
  int degree = common_degree(comps);
  Merged merged = Merged::build(comps);
  TwoFacedDistribution out;
  out.alphabet = merged.alphabet;
  out.max_degree = degree;
  for_each_word(merged.alphabet, degree, [&](const Word& w) {
    Partition pi = pi_omega_chi(word_chi(w), component_coloring(merged, w));
    Rational v = phi_blocks(comps, merged, w, pi);
    if (v != 0) out.set(w, v);
  });
  return out;
}

TwoFacedDistribution bifree_product(
    const std::vector<TwoFacedDistribution>& comps) {
  int degree = common_degree(comps);
  Merged merged = Merged::build(comps);
  TwoFacedDistribution out;
  out.alphabet = merged.alphabet;
  out.max_degree = degree;
  for_each_word(merged.alphabet, degree, [&](const Word& w) {
    ChiMap chi = word_chi(w);
    auto omega = component_coloring(merged, w);
    // partition of positions by component
    std::map<int, std::vector<int>> by_comp;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      by_comp[omega[i]].push_back(i);
    std::vector<std::vector<int>> comp_blocks;
    for (auto& [_, b] : by_comp) comp_blocks.push_back(std::move(b));
    Partition omega_part =
        Partition::from_blocks(chi.size(), std::move(comp_blocks));

    const auto& bnc = enumerate_family(Family::BNC, chi);
    Rational total = 0;
    for (const auto& pi : bnc) {
      if (!leq(pi, omega_part)) continue;
      Rational moment = phi_blocks(comps, merged, w, pi);
      if (moment == 0) continue;
      Rational coeff = 0;
      for (const auto& sigma : bnc)
        if (leq(pi, sigma) && leq(sigma, omega_part))
          coeff += mobius(Family::BNC, chi, pi, sigma);
      total += coeff * moment;
    }
    if (total != 0) out.set(w, total);
  });
  return out;
}

}  // namespace bibool
