// Command-line surface for the exact bi-Boolean cumulant toolkit: cumulant
// conversions, additive/multiplicative convolutions, partition enumeration,
// transform series, theorem verification, positivity probes, and pinned-value
// reproduction. Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bibool/convolutions.hpp"
#include "bibool/json_io.hpp"
#include "bibool/positivity.hpp"
#include "bibool/products.hpp"
#include "bibool/random_gen.hpp"
#include "bibool/transforms.hpp"

using namespace bibool;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json series_to_json(const TruncatedSeries2& s) {
  Json coeffs = Json::object();
  for (const auto& [mn, c] : s.coeffs)
    coeffs[std::to_string(mn.first) + "," + std::to_string(mn.second)] =
        rational_to_string(c);
  return Json{{"type", "series2"}, {"degree", s.max_degree}, {"coeffs", coeffs}};
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
}

Family family_from_name(const std::string& name) {
  if (name == "NC") return Family::NC;
  if (name == "INT") return Family::INT;
  if (name == "BNC") return Family::BNC;
  if (name == "BI") return Family::BI;
  if (name == "ABI") return Family::ABI;
  if (name == "BI_STAR") return Family::BI_STAR;
  throw UsageError("unknown family: " + name);
}

ExponentTable table_of_pair(const TwoFacedDistribution& d, int degree) {
  ExponentTable t(TableKind::moments, degree);
  for (int m = 0; m <= degree; ++m)
    for (int n = (m == 0 ? 1 : 0); m + n <= degree; ++n) {
      Word w;
      for (int i = 0; i < m; ++i) w.push_back(1);
      for (int j = 0; j < n; ++j) w.push_back(-1);
      t.set(m, n, d.phi(w));
    }
  return t;
}

AtomicMeasure2D cross_measure() {
  AtomicMeasure2D mu;
  mu.atoms = {{1, 0, Rational(1, 2)}, {0, 1, Rational(1, 2)}};
  return mu;
}

int check(bool ok, const std::string& label) {
  std::cout << (ok ? "ok:   " : "FAIL: ") << label << "\n";
  return ok ? 0 : 1;
}

int run_cumulants(const std::string& kind_name, int degree,
                  const std::string& input, const std::string& output,
                  const std::string& format) {
  TableKind kind = table_kind_from_name(kind_name);
  Json j = load_json(input);
  ExponentTable in_table =
      j.value("type", "") == "table" && j.value("kind", "") != "moments"
          ? table_from_json(j)
          : moments_from_json(j, degree);
  ExponentTable out = in_table.kind == TableKind::moments
                          ? moments_to_cumulants(in_table, kind)
                          : cumulants_to_moments(in_table);
  if (format == "text") {
    for (const auto& [mn, v] : out.entries)
      std::cout << table_kind_name(out.kind) << "[" << mn.first << ","
                << mn.second << "] = " << rational_to_string(v) << "\n";
    return 0;
  }
  emit(table_to_json(out), output);
  return 0;
}

int run_convolve(const std::string& op, int degree, const std::string& a_path,
                 const std::string& b_path, const std::string& output) {
  Json ja = load_json(a_path), jb = load_json(b_path);
  if (op == "twisted-mult") {
    TwoFacedDistribution mu =
        pair_distribution(moments_from_json(ja, degree), "a", "b");
    TwoFacedDistribution nu =
        pair_distribution(moments_from_json(jb, degree), "a", "b");
    emit(table_to_json(table_of_pair(twisted_mult_convolve(mu, nu), degree)),
         output);
    return 0;
  }
  if (op == "bulletbullet" && ja.value("type", "") == "atomic" &&
      jb.value("type", "") == "atomic") {
    emit(table_to_json(bifermi_convolve_via_shift(measure_from_json(ja),
                                                  measure_from_json(jb),
                                                  degree)),
         output);
    return 0;
  }
  ConvolutionKind kind;
  if (op == "uplusuplus")
    kind = ConvolutionKind::biboolean;
  else if (op == "boxplusboxplus")
    kind = ConvolutionKind::bifree;
  else if (op == "bulletbullet")
    kind = ConvolutionKind::bifermi;
  else
    throw UsageError("unknown convolution op: " + op);
  emit(table_to_json(additive_convolve(moments_from_json(ja, degree),
                                       moments_from_json(jb, degree), kind)),
       output);
  return 0;
}

int run_partitions(const std::string& family, const std::string& chi_str,
                   const std::string& omega_str, const std::string& output) {
  ChiMap chi = chi_from_string(chi_str);
  if (!omega_str.empty()) {
    if (static_cast<int>(omega_str.size()) != chi.size())
      throw UsageError("omega length must match chi");
    std::vector<int> omega;
    for (char c : omega_str) omega.push_back(c - '0');
    emit(partition_to_json(pi_omega_chi(chi, omega)), output);
    return 0;
  }
  Json arr = Json::array();
  for (const Partition& p : enumerate_family(family_from_name(family), chi))
    arr.push_back(partition_to_json(p));
  emit(arr, output);
  return 0;
}

int run_series(const std::string& transform, int degree,
               const std::string& input, const std::string& output,
               const std::string& format) {
  Json j = load_json(input);
  TruncatedSeries2 s;
  if (transform == "H") {
    if (j.value("type", "") != "atomic")
      throw UsageError("transform H needs an atomic measure input");
    s = bifermi_H_series(measure_from_json(j), degree);
  } else {
    ExponentTable mom = moments_from_json(j, degree);
    if (transform == "eta")
      s = eta_series(mom, degree);
    else if (transform == "E")
      s = self_energy_series(mom, degree);
    else if (transform == "M")
      s = moment_series(mom, degree);
    else
      throw UsageError("unknown transform: " + transform);
  }
  if (format == "text")
    std::cout << series_to_string(s) << "\n";
  else
    emit(series_to_json(s), output);
  return 0;
}

int run_verify(const std::string& theorem, int trials, uint64_t seed,
               int degree) {
  RandomGen gen(seed);
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    bool ok = true;
    std::string detail;
    if (theorem == "partial-eta") {
      ExponentTable mom = measure_moments(gen.measure(3), degree);
      TruncatedSeries2 res = verify_partial_eta(mom, degree);
      ok = res.is_zero();
      if (!ok) detail = series_to_string(res);
    } else if (theorem == "T" || theorem == "S" || theorem == "S2") {
      CombinationTheorem which = theorem == "T"   ? CombinationTheorem::T
                                 : theorem == "S" ? CombinationTheorem::S
                                                  : CombinationTheorem::S2;
      int n = std::min(degree, 3);
      ExponentTable m1 = measure_moments(gen.measure(2), 2 * n + 2);
      ExponentTable m2 = measure_moments(gen.measure(2), 2 * n + 2);
      TruncatedSeries2 res = check_mult_add_theorems(m1, m2, which, n);
      ok = res.is_zero();
      if (!ok) detail = series_to_string(res);
    } else if (theorem == "breta") {
      Alphabet ab{{"a"}, {"b"}};
      NcSeries f = gen.ncseries(ab, std::min(degree, 5));
      // breta itself cross-checks composition vs direct formula and throws
      // on disagreement; here also confirm the round trip
      ok = breta_inverse(breta(f)) == f;
    } else if (theorem == "star-homomorphism") {
      Alphabet ab{{"a"}, {"b"}};
      int d = std::min(degree, 4);
      NcSeries f = gen.ncseries(ab, d), g = gen.ncseries(ab, d);
      ok = breta(twisted_star(f, g)) == twisted_star(breta(f), breta(g));
    } else {
      throw UsageError("unknown theorem: " + theorem);
    }
    std::cout << "trial " << t << ": " << (ok ? "residual zero" : "FAILED")
              << (detail.empty() ? "" : " " + detail) << "\n";
    if (!ok) ++failures;
  }
  std::cout << theorem << ": " << (trials - failures) << "/" << trials
            << " trials passed\n";
  return failures == 0 ? 0 : 1;
}

int run_psd(int order, int degree, const std::string& input,
            const std::string& output) {
  ExponentTable mom = moments_from_json(load_json(input), degree);
  MomentMatrix x = moment_matrix(mom, order);
  Inertia in = inertia(x);
  Json j = matrix_to_json(x);
  j["det"] = rational_to_string(determinant(x));
  j["inertia"] = {{"plus", in.n_plus}, {"zero", in.n_zero}, {"minus", in.n_minus}};
  j["psd"] = in.is_psd();
  emit(j, output);
  return in.is_psd() ? 0 : 1;
}

int run_infdiv(int n, int order, int degree, const std::string& input,
               const std::string& output) {
  ExponentTable mom = moments_from_json(load_json(input), degree);
  InfdivReport rep = infdiv_probe(mom, n, order);
  Json j;
  j["n"] = n;
  j["order"] = order;
  j["moments"] = table_to_json(rep.moments);
  j["psd"] = rep.psd;
  if (rep.witness) j["witness"] = *rep.witness;
  emit(j, output);
  return rep.psd ? 0 : 1;
}

int golden_square_matrix() {
  ExponentTable mom = measure_moments(cross_measure(), 4);
  ExponentTable s = additive_convolve(mom, mom, ConvolutionKind::biboolean);
  MomentMatrix x1 = moment_matrix(s, 1);
  std::cout << matrix_to_json(x1).dump(2) << "\n";
  Rational det = determinant(x1);
  std::cout << "det = " << rational_to_string(det) << "\n";
  std::vector<std::vector<Rational>> pinned = {
      {1, 1, 1, Rational(1, 2)},
      {1, Rational(3, 2), Rational(1, 2), Rational(3, 4)},
      {1, Rational(1, 2), Rational(3, 2), Rational(3, 4)},
      {Rational(1, 2), Rational(3, 4), Rational(3, 4), Rational(9, 8)}};
  int bad = check(x1.rows == pinned, "X1 matches the pinned 4x4 matrix");
  bad += check(det == Rational(-1, 8), "det(X1) = -1/8");
  bad += check(!inertia(x1).is_psd(), "X1 is not positive semidefinite");
  return bad ? 1 : 0;
}

int golden_signed_table() {
  AtomicMeasure2D tau;
  tau.atoms = {{1, 1, 3}, {-1, 1, 3}, {1, -1, 3}};
  ExponentTable taum = measure_moments(tau, 4);
  ExponentTable b(TableKind::biboolean_cum, 4);
  for (const auto& [mn, v] : taum.entries) b.set(mn.first, mn.second, v);
  ExponentTable mom = cumulants_to_moments(b);
  std::cout << "zw*M coefficients (m,n) <= (2,2):\n";
  int bad = 0;
  const Rational pinned[3][3] = {{1, 3, 18}, {3, 6, 48}, {18, 48, 324}};
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      Rational got = mom.get(m, n);
      std::cout << "  z^" << m + 1 << " w^" << n + 1 << ": "
                << rational_to_string(got) << "\n";
      bad += got == pinned[m][n] ? 0 : 1;
    }
  bad += check(bad == 0, "coefficients (1,3,3,18,6,18,48,48,324)");
  MomentMatrix x1 = moment_matrix(mom, 1);
  Rational det = determinant(x1);
  std::cout << "det = " << rational_to_string(det) << "\n";
  bad += check(det == -864, "det of the (M_{m1+m2,n1+n2}) matrix = -864");
  return bad ? 1 : 0;
}

int golden_cross_measure() {
  ExponentTable mom = measure_moments(cross_measure(), 4);
  ExponentTable b = moments_to_cumulants(mom, TableKind::biboolean_cum);
  std::cout << table_to_json(b).dump(2) << "\n";
  int bad = 0;
  bad += check(b.get(1, 0) == Rational(1, 2) && b.get(0, 1) == Rational(1, 2),
               "B_{1,0} = B_{0,1} = 1/2");
  bad += check(b.get(2, 0) == Rational(1, 4) && b.get(0, 2) == Rational(1, 4),
               "B_{2,0} = B_{0,2} = 1/4");
  bad += check(b.get(1, 1) == Rational(-1, 4), "B_{1,1} = -1/4");
  bad += check(b.get(2, 1) == Rational(-1, 8) && b.get(1, 2) == Rational(-1, 8),
               "B_{2,1} = B_{1,2} = -1/8");
  bad += check(b.get(2, 2) == Rational(-1, 16), "B_{2,2} = -1/16");
  for (int n = 1; n <= 5; ++n) {
    Rational nn(n);
    Rational expect = Rational(-1, 16) / nn - Rational(1, 16) / (nn * nn) +
                      Rational(1, 16) / (nn * nn * nn) +
                      Rational(1, 16) / (nn * nn * nn * nn);
    InfdivReport rep = infdiv_probe(mom, n, 1);
    bad += check(rep.moments.get(2, 2) == expect,
                 "M_{2,2} of the 1/" + std::to_string(n) +
                     " cumulant scaling = " + rational_to_string(expect));
  }
  return bad ? 1 : 0;
}

int golden_poisson(ConvolutionKind kind) {
  using Poly = RationalFunction2::Poly;
  auto poly_mul = [](const Poly& p, const Poly& q) {
    Poly r;
    for (const auto& [e1, c1] : p)
      for (const auto& [e2, c2] : q) {
        auto key = std::make_pair(e1.first + e2.first, e1.second + e2.second);
        r[key] += c1 * c2;
        if (r[key] == 0) r.erase(key);
      }
    return r;
  };
  const Rational l = 2;
  AtomicMeasure2D d11 = AtomicMeasure2D::point_mass(1, 1);
  ExponentTable t = compound_poisson_table(l, d11, kind, 6);
  RationalFunction2 G =
      kind == ConvolutionKind::biboolean
          ? RationalFunction2::from_polys(
                {{{0, 0}, l + 1}, {{1, 1}, 1}, {{1, 0}, -1}, {{0, 1}, -1}},
                poly_mul({{{1, 1}, 1}},
                         poly_mul({{{1, 0}, 1}, {{0, 0}, -1 - l}},
                                  {{{0, 1}, 1}, {{0, 0}, -1 - l}})))
          : RationalFunction2::from_polys(
                {{{0, 0}, l + (1 + l) * (1 + l)},
                 {{1, 1}, 1},
                 {{1, 0}, -1 - l},
                 {{0, 1}, -1 - l}},
                poly_mul({{{2, 0}, 1}, {{1, 0}, -2 * l - 1}, {{0, 0}, l * l}},
                         {{{0, 2}, 1}, {{0, 1}, -2 * l - 1}, {{0, 0}, l * l}}));
  TruncatedSeries2 zwM = expand_rational(G, Substitution::reciprocal_zw, 8);
  std::cout << table_to_json(t).dump(2) << "\n";
  int bad = 0;
  for (int m = 0; m + 2 <= 8; ++m)
    for (int n = 0; m + n + 2 <= 8; ++n)
      if (zwM.get(m + 1, n + 1) != t.get(m, n)) ++bad;
  bad += check(bad == 0, "moment table matches the closed-form kernel, lambda = 2");
  return bad ? 1 : 0;
}

int golden_gaussian() {
  int bad = 0;
  for (const Rational& c : {Rational(0), Rational(1), Rational(-1, 2)}) {
    RationalFunction2 G = RationalFunction2::from_polys(
        {{{0, 0}, c}, {{1, 1}, 1}},
        {{{2, 2}, 1}, {{2, 0}, -1}, {{0, 2}, -1}, {{0, 0}, 1}});
    TruncatedSeries2 zwM = expand_rational(G, Substitution::reciprocal_zw, 10);
    ExponentTable mom(TableKind::moments, 8);
    for (int m = 0; m <= 8; ++m)
      for (int n = (m == 0 ? 1 : 0); m + n <= 8; ++n)
        mom.set(m, n, zwM.get(m + 1, n + 1));
    bad += check(verify_partial_eta(mom, 8).is_zero(),
                 "partial-eta residual zero, c = " + rational_to_string(c));
    TruncatedSeries2 E = self_energy_series(mom, 8);
    bad += check(E.get(2, 0) == 1 && E.get(0, 2) == 1 && E.get(1, 1) == c &&
                     E.coeffs.size() == (c == 0 ? 2u : 3u),
                 "E = u^2 + v^2 + c uv, c = " + rational_to_string(c));
    if (c == 0) {
      AtomicMeasure2D bern;
      for (int sx : {-1, 1})
        for (int sy : {-1, 1}) bern.atoms.push_back({sx, sy, Rational(1, 4)});
      bad += check(mom == measure_moments(bern, 8),
                   "c = 0 equals the Bernoulli product measure");
    }
  }
  return bad ? 1 : 0;
}

int run_golden(const std::string& which) {
  if (which == "square-matrix") return golden_square_matrix();
  if (which == "signed-table") return golden_signed_table();
  if (which == "cross-measure") return golden_cross_measure();
  if (which == "poisson-biboolean")
    return golden_poisson(ConvolutionKind::biboolean);
  if (which == "poisson-bifermi") return golden_poisson(ConvolutionKind::bifermi);
  if (which == "gaussian") return golden_gaussian();
  throw UsageError("unknown golden case: " + which);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bi-Boolean cumulant toolkit"};
  app.require_subcommand(1);

  std::string input, input_b, output, format = "json";
  int degree = 6;

  auto* cum = app.add_subcommand("cumulants", "moment/cumulant conversion");
  std::string kind = "biboolean_cum";
  cum->add_option("--kind", kind, "target cumulant kind");
  cum->add_option("--degree", degree);
  cum->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  cum->add_option("-o,--output", output);
  cum->add_option("input", input)->required();

  auto* conv = app.add_subcommand("convolve", "additive/multiplicative convolution");
  std::string op = "uplusuplus";
  conv->add_option("--op", op)
      ->check(CLI::IsMember(
          {"uplusuplus", "boxplusboxplus", "bulletbullet", "twisted-mult"}));
  conv->add_option("--degree", degree);
  conv->add_option("-o,--output", output);
  conv->add_option("a", input)->required();
  conv->add_option("b", input_b)->required();

  auto* parts = app.add_subcommand("partitions", "family enumeration");
  std::string family = "BI", chi_str, omega_str;
  parts->add_option("--family", family);
  parts->add_option("--chi", chi_str)->required();
  parts->add_option("--omega", omega_str);
  parts->add_option("-o,--output", output);

  auto* ser = app.add_subcommand("series", "transform series");
  std::string transform = "eta";
  ser->add_option("--transform", transform)
      ->check(CLI::IsMember({"eta", "E", "M", "H"}));
  ser->add_option("--degree", degree);
  ser->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  ser->add_option("-o,--output", output);
  ser->add_option("input", input)->required();

  auto* ver = app.add_subcommand("verify", "randomized theorem checks");
  std::string theorem = "partial-eta";
  int trials = 10;
  uint64_t seed = 1;
  ver->add_option("--theorem", theorem)
      ->check(CLI::IsMember(
          {"partial-eta", "T", "S", "S2", "breta", "star-homomorphism"}));
  ver->add_option("--trials", trials);
  ver->add_option("--seed", seed);
  ver->add_option("--degree", degree);

  auto* psd = app.add_subcommand("psd", "moment-matrix positivity");
  int order = 1;
  psd->add_option("--order", order);
  psd->add_option("--degree", degree);
  psd->add_option("-o,--output", output);
  psd->add_option("input", input)->required();

  auto* inf = app.add_subcommand("infdiv", "infinite-divisibility probe");
  int divisor = 2;
  inf->add_option("--n", divisor);
  inf->add_option("--order", order);
  inf->add_option("--degree", degree);
  inf->add_option("-o,--output", output);
  inf->add_option("input", input)->required();

  auto* gold = app.add_subcommand("golden", "reproduce pinned values");
  std::string gcase;
  gold->add_option("--case", gcase)
      ->required()
      ->check(CLI::IsMember({"square-matrix", "signed-table", "cross-measure",
                             "poisson-biboolean", "poisson-bifermi",
                             "gaussian"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cum->parsed()) return run_cumulants(kind, degree, input, output, format);
    if (conv->parsed()) return run_convolve(op, degree, input, input_b, output);
    if (parts->parsed()) return run_partitions(family, chi_str, omega_str, output);
    if (ser->parsed()) return run_series(transform, degree, input, output, format);
    if (ver->parsed()) return run_verify(theorem, trials, seed, degree);
    if (psd->parsed()) return run_psd(order, degree, input, output);
    if (inf->parsed()) return run_infdiv(divisor, order, degree, input, output);
    if (gold->parsed()) return run_golden(gcase);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
