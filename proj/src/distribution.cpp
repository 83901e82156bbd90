#include "bibool/distribution.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bibool {

Sym Alphabet::symbol(const std::string& name) const {
  for (size_t i = 0; i < left.size(); ++i)
    if (left[i] == name) return static_cast<Sym>(i + 1);
  for (size_t i = 0; i < right.size(); ++i)
    if (right[i] == name) return -static_cast<Sym>(i + 1);
  throw std::invalid_argument("unknown symbol: " + name);
}

std::string Alphabet::name(Sym s) const {
  if (s > 0 && s <= static_cast<Sym>(left.size())) return left[s - 1];
  if (s < 0 && -s <= static_cast<Sym>(right.size())) return right[-s - 1];
  throw std::invalid_argument("symbol id out of range");
}

bool Alphabet::contains(const std::string& name) const {
  return std::find(left.begin(), left.end(), name) != left.end() ||
         std::find(right.begin(), right.end(), name) != right.end();
}

Alphabet Alphabet::merge(const Alphabet& a, const Alphabet& b) {
  Alphabet out = a;
  for (const auto& n : b.left) {
    if (out.contains(n)) throw std::invalid_argument("alphabet clash: " + n);
    out.left.push_back(n);
  }
  for (const auto& n : b.right) {
    if (out.contains(n)) throw std::invalid_argument("alphabet clash: " + n);
    out.right.push_back(n);
  }
  return out;
}

ChiMap word_chi(const Word& w) {
  ChiMap chi{""};
  chi.labels.reserve(w.size());
  for (Sym s : w) chi.labels.push_back(sym_is_left(s) ? 'l' : 'r');
  return chi;
}

Rational TwoFacedDistribution::phi_partition(const Word& w,
                                             const Partition& pi) const {
  Rational acc = 1;
  for (const auto& block : pi.blocks) {
    Word sub;
    sub.reserve(block.size());
    for (int i : block) sub.push_back(w[i]);
    acc *= phi(sub);
    if (acc == 0) return acc;
  }
  return acc;
}

TwoFacedDistribution pair_distribution(const ExponentTable& moments,
                                       const std::string& left_name,
                                       const std::string& right_name) {
  if (moments.kind != TableKind::moments)
    throw std::invalid_argument("pair_distribution needs a moment table");
  TwoFacedDistribution d;
  d.alphabet = Alphabet{{left_name}, {right_name}};
  d.max_degree = moments.max_degree;
  // commuting pair: every arrangement of m lefts and n rights has the same
  // moment M_{m,n}
  Word w;
  auto rec = [&](auto&& self, int len) -> void {
    if (!w.empty()) {
      int m = static_cast<int>(std::count(w.begin(), w.end(), 1));
      int n = static_cast<int>(w.size()) - m;
      Rational v = moments.get(m, n);
      if (v != 0) d.set(w, v);
    }
    if (len == d.max_degree) return;
    for (Sym s : {1, -1}) {
      w.push_back(s);
      self(self, len + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
  return d;
}

WordExpr WordExpr::unit() { return constant(Rational(1)); }

WordExpr WordExpr::symbol(Sym s) {
  WordExpr e;
  e.terms[{s}] = 1;
  return e;
}

WordExpr WordExpr::constant(const Rational& c) {
  WordExpr e;
  if (c != 0) e.terms[{}] = c;
  return e;
}

WordExpr WordExpr::operator+(const WordExpr& o) const {
  WordExpr out = *this;
  for (const auto& [w, c] : o.terms) {
    auto& slot = out.terms[w];
    slot += c;
    if (slot == 0) out.terms.erase(w);
  }
  return out;
}

WordExpr WordExpr::operator*(const WordExpr& o) const {
  WordExpr out;
  for (const auto& [wa, ca] : terms)
    for (const auto& [wb, cb] : o.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto& slot = out.terms[w];
      slot += ca * cb;
      if (slot == 0) out.terms.erase(w);
    }
  return out;
}

namespace {

struct Parser {
  const std::string& text;
  const Alphabet& alphabet;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  WordExpr parse_expr() {
    WordExpr acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos;
        acc = acc + WordExpr::constant(Rational(-1)) * parse_term();
      } else {
        return acc;
      }
    }
  }

  WordExpr parse_term() {
    WordExpr acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc = acc * parse_factor();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * parse_factor();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  WordExpr parse_factor() {
    char c = peek();
    if (c == '(') {
      ++pos;
      WordExpr e = parse_expr();
      if (peek() != ')') throw std::invalid_argument("expected ')'");
      ++pos;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      std::string lit = text.substr(start, pos - start);
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
        if (pos == dstart) throw std::invalid_argument("bad rational literal");
        lit += "/" + text.substr(dstart, pos - dstart);
      }
      return WordExpr::constant(parse_rational(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      return WordExpr::symbol(
          alphabet.symbol(text.substr(start, pos - start)));
    }
    throw std::invalid_argument("unexpected character in word expression at " +
                                std::to_string(pos));
  }
};

}  // namespace

WordExpr parse_word_expr(const std::string& text, const Alphabet& alphabet) {
  Parser p{text, alphabet};
  WordExpr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("trailing input in word expression");
  return e;
}

Rational phi_of_expr(const TwoFacedDistribution& dist, const WordExpr& e) {
  Rational acc = 0;
  for (const auto& [w, c] : e.terms) acc += c * dist.phi(w);
  return acc;
}

ExponentTable extract_pair(const TwoFacedDistribution& dist, const WordExpr& left,
                           const WordExpr& right, int degree) {
  ExponentTable t(TableKind::moments, degree);
  std::vector<WordExpr> lpow{WordExpr::unit()}, rpow{WordExpr::unit()};
  for (int k = 1; k <= degree; ++k) {
    lpow.push_back(lpow.back() * left);
    rpow.push_back(rpow.back() * right);
  }
  for (int m = 0; m <= degree; ++m)
    for (int n = 0; m + n <= degree; ++n) {
      if (m == 0 && n == 0) continue;
      t.set(m, n, phi_of_expr(dist, lpow[m] * rpow[n]));
    }
  return t;
}

}  // namespace bibool
