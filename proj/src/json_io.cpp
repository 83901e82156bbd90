#include "bibool/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace bibool {

Json measure_to_json(const AtomicMeasure2D& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms)
    atoms.push_back({{"x", rational_to_string(a.x)},
                     {"y", rational_to_string(a.y)},
                     {"w", rational_to_string(a.w)}});
  return Json{{"type", "atomic"}, {"atoms", atoms}};
}

AtomicMeasure2D measure_from_json(const Json& j) {
  if (j.value("type", "") != "atomic")
    throw std::invalid_argument("expected an atomic-measure document");
  AtomicMeasure2D mu;
  for (const auto& a : j.at("atoms"))
    mu.atoms.push_back({parse_rational(a.at("x").get<std::string>()),
                        parse_rational(a.at("y").get<std::string>()),
                        parse_rational(a.at("w").get<std::string>())});
  mu.normalize();
  return mu;
}

Json table_to_json(const ExponentTable& t) {
  Json entries = Json::object();
  for (const auto& [mn, v] : t.entries)
    entries[std::to_string(mn.first) + "," + std::to_string(mn.second)] =
        rational_to_string(v);
  return Json{{"type", "table"},
              {"kind", table_kind_name(t.kind)},
              {"degree", t.max_degree},
              {"entries", entries}};
}

ExponentTable table_from_json(const Json& j) {
  if (j.value("type", "") != "table")
    throw std::invalid_argument("expected a table document");
  ExponentTable t(table_kind_from_name(j.at("kind").get<std::string>()),
                  j.at("degree").get<int>());
  for (const auto& [key, val] : j.at("entries").items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("bad table entry key: " + key);
    int m = std::stoi(key.substr(0, comma));
    int n = std::stoi(key.substr(comma + 1));
    t.set(m, n, parse_rational(val.get<std::string>()));
  }
  return t;
}

ExponentTable moments_from_json(const Json& j, int degree) {
  std::string type = j.value("type", "");
  if (type == "atomic") return measure_moments(measure_from_json(j), degree);
  if (type == "table") {
    ExponentTable t = table_from_json(j);
    if (t.kind != TableKind::moments)
      throw std::invalid_argument("expected a moment table");
    if (t.max_degree < degree)
      throw std::invalid_argument("table degree smaller than requested degree");
    return t;
  }
  throw std::invalid_argument("expected an atomic measure or a moment table");
}

Json ncseries_to_json(const NcSeries& s) {
  Json coeffs = Json::object();
  for (const auto& [w, v] : s.coeffs) {
    std::ostringstream word;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) word << " ";
      word << s.alphabet.name(w[i]);
    }
    coeffs[word.str()] = rational_to_string(v);
  }
  return Json{{"type", "ncseries"},
              {"alphabet",
               {{"left", s.alphabet.left}, {"right", s.alphabet.right}}},
              {"degree", s.max_degree},
              {"coeffs", coeffs}};
}

NcSeries ncseries_from_json(const Json& j) {
  if (j.value("type", "") != "ncseries")
    throw std::invalid_argument("expected an ncseries document");
  NcSeries s;
  s.alphabet.left = j.at("alphabet").at("left").get<std::vector<std::string>>();
  s.alphabet.right = j.at("alphabet").at("right").get<std::vector<std::string>>();
  s.max_degree = j.at("degree").get<int>();
  for (const auto& [key, val] : j.at("coeffs").items()) {
    Word w;
    std::istringstream is(key);
    std::string name;
    while (is >> name) w.push_back(s.alphabet.symbol(name));
    s.set(w, parse_rational(val.get<std::string>()));
  }
  return s;
}

Json matrix_to_json(const MomentMatrix& m) {
  Json index = Json::array();
  for (const auto& [i1, i2] : m.index) index.push_back({i1, i2});
  Json rows = Json::array();
  for (const auto& row : m.rows) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_string(v));
    rows.push_back(r);
  }
  return Json{{"order", m.order}, {"index", index}, {"rows", rows}};
}

Json partition_to_json(const Partition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) {
    Json blk = Json::array();
    for (int i : b) blk.push_back(i + 1);
    blocks.push_back(blk);
  }
  return blocks;
}

Partition partition_from_json(const Json& j, int n) {
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : j) {
    std::vector<int> b;
    for (const auto& i : blk) b.push_back(i.get<int>() - 1);
    blocks.push_back(std::move(b));
  }
  return Partition::from_blocks(n, std::move(blocks));
}

ChiMap chi_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("chi must be nonempty");
  for (char c : s)
    if (c != 'l' && c != 'r')
      throw std::invalid_argument("chi must be a string over {l, r}");
  return ChiMap{s};
}

}  // namespace bibool
