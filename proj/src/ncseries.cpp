#include "bibool/ncseries.hpp"

#include <stdexcept>

namespace bibool {

Rational NcSeries::coeff_partition(const Word& w, const Partition& pi) const {
  Rational acc = 1;
  for (const auto& block : pi.blocks) {
    Word sub;
    sub.reserve(block.size());
    for (int i : block) sub.push_back(w[i]);
    acc *= get(sub);
    if (acc == 0) return acc;
  }
  return acc;
}

void for_each_alphabet_word(const Alphabet& a, int max_len,
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

NcSeries nc_moments_from_cumulants(const NcSeries& cum, Family fam) {
  NcSeries out;
  out.alphabet = cum.alphabet;
  out.max_degree = cum.max_degree;
  for_each_alphabet_word(cum.alphabet, cum.max_degree, [&](const Word& w) {
    Rational acc = 0;
    for (const auto& pi : enumerate_family(fam, word_chi(w)))
      acc += cum.coeff_partition(w, pi);
    if (acc != 0) out.set(w, acc);
  });
  return out;
}

NcSeries nc_cumulants_from_moments(const NcSeries& mom, Family fam) {
  NcSeries out;
  out.alphabet = mom.alphabet;
  out.max_degree = mom.max_degree;
  // increasing word length: non-maximal partitions only use shorter subwords
  for (int len = 1; len <= mom.max_degree; ++len)
    for_each_alphabet_word(mom.alphabet, len, [&](const Word& w) {
      if (static_cast<int>(w.size()) != len) return;
      const Partition one = Partition::full(len);
      Rational rest = 0;
      for (const auto& pi : enumerate_family(fam, word_chi(w))) {
        if (pi == one) continue;
        rest += out.coeff_partition(w, pi);
      }
      Rational v = mom.get(w) - rest;
      if (v != 0) out.set(w, v);
    });
  return out;
}

SeriesTriple SeriesTriple::from_moment_series(const NcSeries& m) {
  return SeriesTriple{m, nc_cumulants_from_moments(m, Family::BNC),
                      nc_cumulants_from_moments(m, Family::BI)};
}

SeriesTriple SeriesTriple::from_distribution(const TwoFacedDistribution& dist) {
  NcSeries m;
  m.alphabet = dist.alphabet;
  m.max_degree = dist.max_degree;
  for (const auto& [w, v] : dist.moments) m.set(w, v);
  return from_moment_series(m);
}

NcSeries twisted_star(const NcSeries& f, const NcSeries& g) {
  if (!(f.alphabet.left == g.alphabet.left &&
        f.alphabet.right == g.alphabet.right && f.max_degree == g.max_degree))
    throw std::invalid_argument("twisted_star: series shape mismatch");
  NcSeries out;
  out.alphabet = f.alphabet;
  out.max_degree = f.max_degree;
  for_each_alphabet_word(f.alphabet, f.max_degree, [&](const Word& w) {
    ChiMap chi = word_chi(w);
    Rational acc = 0;
    for (const auto& pi : enumerate_family(Family::BNC, chi)) {
      Rational cf = f.coeff_partition(w, pi);
      if (cf == 0) continue;
      acc += cf * g.coeff_partition(w, kreweras(chi, pi));
    }
    if (acc != 0) out.set(w, acc);
  });
  return out;
}

namespace {

NcSeries breta_direct(const NcSeries& f) {
  NcSeries out;
  out.alphabet = f.alphabet;
  out.max_degree = f.max_degree;
  for_each_alphabet_word(f.alphabet, f.max_degree, [&](const Word& w) {
    ChiMap chi = word_chi(w);
    const Partition one = Partition::full(chi.size());
    Rational acc = 0;
    for (const auto& pi : enumerate_family(Family::BNC, chi))
      if (lessless(chi, pi, one)) acc += f.coeff_partition(w, pi);
    if (acc != 0) out.set(w, acc);
  });
  return out;
}

NcSeries breta_inverse_direct(const NcSeries& g) {
  NcSeries out;
  out.alphabet = g.alphabet;
  out.max_degree = g.max_degree;
  for_each_alphabet_word(g.alphabet, g.max_degree, [&](const Word& w) {
    ChiMap chi = word_chi(w);
    const Partition one = Partition::full(chi.size());
    Rational acc = 0;
    for (const auto& pi : enumerate_family(Family::BNC, chi))
      if (lessless(chi, pi, one)) {
        Rational sign = (pi.num_blocks() % 2 == 1) ? 1 : -1;
        acc += sign * g.coeff_partition(w, pi);
      }
    if (acc != 0) out.set(w, acc);
  });
  return out;
}

}  // namespace

NcSeries breta(const NcSeries& f) {
  // composition route: R-coefficients -> moments -> eta-coefficients
  NcSeries composed =
      nc_cumulants_from_moments(nc_moments_from_cumulants(f, Family::BNC),
                                Family::BI);
  NcSeries direct = breta_direct(f);
  if (!(composed == direct))
    throw std::logic_error("breta: direct formula disagrees with composition");
  return composed;
}

NcSeries breta_inverse(const NcSeries& g) {
  NcSeries composed =
      nc_cumulants_from_moments(nc_moments_from_cumulants(g, Family::BI),
                                Family::BNC);
  NcSeries direct = breta_inverse_direct(g);
  if (!(composed == direct))
    throw std::logic_error(
        "breta_inverse: direct formula disagrees with composition");
  return composed;
}

}  // namespace bibool
