#pragma once

#include <map>
#include <string>
#include <vector>

#include "bibool/partition.hpp"
#include "bibool/rational.hpp"
#include "bibool/table.hpp"

namespace bibool {

// Symbols are nonzero integers: +k is the k-th left symbol (1-based index
// into Alphabet::left), -k the k-th right symbol. The side of every letter —
// hence the chi-map of every word — is read off the sign.
using Sym = int;
using Word = std::vector<Sym>;

struct Alphabet {
  std::vector<std::string> left, right;

  Sym symbol(const std::string& name) const;
  std::string name(Sym s) const;
  bool contains(const std::string& name) const;
  // Disjoint union; throws on a name clash.
  static Alphabet merge(const Alphabet& a, const Alphabet& b);
};

inline bool sym_is_left(Sym s) { return s > 0; }

ChiMap word_chi(const Word& w);

// Joint distribution of a two-faced family: a linear functional phi on words
// of length 1..max_degree; phi(empty) = 1, missing words are zero.
struct TwoFacedDistribution {
  Alphabet alphabet;
  int max_degree = 0;
  std::map<Word, Rational> moments;

  Rational phi(const Word& w) const {
    if (w.empty()) return Rational(1);
    if (static_cast<int>(w.size()) > max_degree)
      throw std::out_of_range("word longer than the distribution degree");
    auto it = moments.find(w);
    return it == moments.end() ? Rational(0) : it->second;
  }
  void set(const Word& w, Rational v) {
    if (w.empty() || static_cast<int>(w.size()) > max_degree)
      throw std::out_of_range("bad word length");
    if (v == 0)
      moments.erase(w);
    else
      moments[w] = std::move(v);
  }

  // phi_pi: product over blocks of phi of the subword in natural index order.
  Rational phi_partition(const Word& w, const Partition& pi) const;
};

// The commuting pair with the given moment table, on alphabet
// {left_name (left), right_name (right)}: phi(word) = M_{#lefts, #rights}.
TwoFacedDistribution pair_distribution(const ExponentTable& moments,
                                       const std::string& left_name,
                                       const std::string& right_name);

// Formal polynomial in alphabet symbols and the formal unit: a sum of
// Rational-weighted words (the empty word is the unit).
struct WordExpr {
  std::map<Word, Rational> terms;

  static WordExpr unit();
  static WordExpr symbol(Sym s);
  static WordExpr constant(const Rational& c);

  WordExpr operator+(const WordExpr& o) const;
  WordExpr operator*(const WordExpr& o) const;  // word concatenation
};

// Grammar: expr := term (('+'|'-') term)*; term := factor ('*'? factor)*;
// factor := rational-literal | identifier | '1' | '(' expr ')'.
WordExpr parse_word_expr(const std::string& text, const Alphabet& alphabet);

// Expectation of a word expression: unit letters are already erased by the
// WordExpr representation, so this is a weighted sum of phi values.
Rational phi_of_expr(const TwoFacedDistribution& dist, const WordExpr& e);

// M_{m,n} = phi(left^m right^n) for 1 <= m+n <= degree.
ExponentTable extract_pair(const TwoFacedDistribution& dist, const WordExpr& left,
                           const WordExpr& right, int degree);

}  // namespace bibool
