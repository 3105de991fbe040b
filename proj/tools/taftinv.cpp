// taftinv: command-line front end.
//
// Exit codes: 0 ok, 1 domain error, 2 usage error, 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "taftinv/invariants.hpp"
#include "taftinv/series.hpp"
#include "taftinv/verify.hpp"

using namespace taftinv;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;
constexpr int kVerify = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecArgs {
  int n = 2;
  int k = 0;
  int family = 1;
  std::string sqrt = "principal";

  void add_to(CLI::App* app, bool with_k = true) {
    app->add_option("--n", n, "Taft parameter n (>= 2)")->required();
    if (with_k) app->add_option("--k", k, "Action parameter k (0 <= k < n)")->required();
    app->add_option("--case", family, "Family of the classification (1 or 2)")->check(CLI::IsMember({1, 2}));
    app->add_option("--sqrt", sqrt, "Square root choice: principal or alt")->check(CLI::IsMember({"principal", "alt", "alternate"}));
  }

  // Validates ranges, prints the realized order, and normalizes case 2.
  ActionSpec build(std::ostream& os) const {
    if (n < 2) throw UsageError("--n must be at least 2");
    if (k < 0 || k >= n) throw UsageError("--k must satisfy 0 <= k < n");
    const SqrtChoice c = *parse_sqrt_choice(sqrt);
    ActionSpec s = make_spec(n, k, family == 2 ? Family::Case2 : Family::Case1, c);
    if (s.family == Family::Case2) {
      os << "# note: case-2 action normalized to case 1 by the swap u <-> v\n";
      s = normalize_to_case1(s);
    }
    os << "# " << s.describe() << "\n";
    os << "# sqrt(omega) has order " << s.sqrt_order << (s.order_n() ? " (order-n regime)" : " (order-2n regime)") << "\n";
    return s;
  }
};

struct Output {
  std::string path;
  std::ofstream file;

  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw UsageError("cannot open output file " + path);
    }
    return file;
  }
};

json spec_json(const ActionSpec& s) {
  return {{"n", s.n},
          {"k", s.k},
          {"case", static_cast<int>(s.family)},
          {"sqrt", to_string(s.sqrt_choice)},
          {"sqrt_order", s.sqrt_order},
          {"alpha", s.alpha.to_string()},
          {"beta", s.beta.to_string()}};
}

int cmd_classify(int n, const std::string& format, std::ostream& os) {
  if (n < 2) throw UsageError("--n must be at least 2");
  const auto specs = classify_actions(n);
  if (format == "json") {
    json arr = json::array();
    for (const auto& s : specs) arr.push_back(spec_json(s));
    os << arr.dump(2) << "\n";
    return kOk;
  }
  if (format == "csv") {
    os << "n,k,case,sqrt,sqrt_order,alpha,beta\n";
    for (const auto& s : specs)
      os << s.n << "," << s.k << "," << static_cast<int>(s.family) << "," << to_string(s.sqrt_choice) << ","
         << s.sqrt_order << ",\"" << s.alpha.to_string() << "\",\"" << s.beta.to_string() << "\"\n";
    return kOk;
  }
  os << "# " << specs.size() << " actions for n = " << n << " (r = primitive " << 2 * n << "th root of unity)\n";
  for (const auto& s : specs) os << s.describe() << "\n";
  return kOk;
}

int cmd_act(const SpecArgs& a, const std::string& op, const std::string& element, int times, std::ostream& os) {
  if (times < 0) throw UsageError("--times must be nonnegative");
  const ActionSpec s = a.build(os);
  const DownUp alg(s);
  const TaftAction act(alg);
  PBWElement e = parse_element(element, alg);
  for (int t = 0; t < times; ++t) e = op == "g" ? act.act_g(e) : act.act_x(e);
  os << to_string(e) << "\n";
  return kOk;
}

int cmd_invariants(const SpecArgs& a, int max_degree, bool x_only, bool generators, const std::string& format,
                   std::ostream& os) {
  std::ostringstream header;
  const ActionSpec s = a.build(header);
  if (max_degree < 0) max_degree = 4 * s.n + 2;
  const Flavor f = x_only ? Flavor::XOnly : Flavor::Full;
  if (generators) {
    const GeneratorReport r = find_generators(s, max_degree, f);
    if (format == "json") {
      os << to_json(r) << "\n";
    } else {
      os << header.str();
      os << "# generators of " << (x_only ? "A^x" : "A^T") << " up to degree " << max_degree << "\n";
      for (const auto& [d, g] : r.generators) os << "deg " << d << ": " << to_string(g) << "\n";
      os << "# degree computed predicted\n";
      for (const auto& row : r.dimension_table) os << row.degree << " " << row.computed << " " << row.predicted << "\n";
      for (const auto& c : r.relation_checks)
        if (!c.passed) os << "FAILED: " << c.name << " " << c.detail << "\n";
    }
    return r.ok() ? kOk : kVerify;
  }
  const auto inv = InvariantEngine(s).invariants_up_to(max_degree, f);
  if (format == "json") {
    json j = spec_json(s);
    j["flavor"] = to_string(f);
    auto& arr = j["degrees"] = json::array();
    for (const auto& b : inv) {
      json basis = json::array();
      for (const auto& v : b.vectors) basis.push_back(to_string(v));
      arr.push_back({{"degree", b.degree}, {"dim", b.dim()}, {"basis", basis}});
    }
    os << j.dump(2) << "\n";
    return kOk;
  }
  os << header.str();
  for (const auto& b : inv) {
    os << "degree " << b.degree << ": dim " << b.dim() << "\n";
    for (const auto& v : b.vectors) os << "  " << to_string(v) << "\n";
  }
  return kOk;
}

int cmd_hilbert(const SpecArgs& a, bool closed_form, int terms, std::ostream& os) {
  const ActionSpec s = a.build(os);
  const QRatFn h = molien(s);
  os << "hilb A^T = " << format_ratfn(h) << "\n";
  os << "series:";
  for (const auto& c : h.series(static_cast<std::size_t>(terms))) os << " " << c.get_str();
  os << "\n";
  if (!closed_form) return kOk;
  const auto cf = known_hilbert_series(s);
  if (!cf) {
    os << "closed form: none known for these parameters\n";
    return kOk;
  }
  const bool same = cf->series == h;
  os << "closed form (" << cf->name << "): " << format_ratfn(cf->series) << "\n";
  os << "matches: " << (same ? "yes" : "no") << "\n";
  return same ? kOk : kVerify;
}

int cmd_gorenstein(const SpecArgs& a, std::ostream& os) {
  const ActionSpec s = a.build(os);
  const GorensteinVerdict v = stanley_test(molien(s));
  os << "gorenstein: " << (v.gorenstein ? "true" : "false");
  if (v.gorenstein) os << " (hilb(1/t) = " << (v.sign < 0 ? "-" : "+") << "t^" << v.m << " hilb(t))";
  os << "\n";
  os << "hdet_A(g) = " << hdet_a(s).to_string() << "\n";
  os << "hdet_A^x(g) = " << hdet_ax(s).to_string() << "\n";
  if (s.order_n()) {
    const ReflectionClass rc = reflection_classify(s.n, s.k);
    os << "reflections: case " << rc.kind << " (d = " << rc.d << ", e = " << rc.e << ")\n";
    os << "congruence: " << (gorenstein_congruence(s.n, s.k) ? "true" : "false") << "\n";
  } else {
    os << "sufficient condition: " << theorem_coverage(s.n, s.k) << "\n";
  }
  return kOk;
}

int cmd_table(int n_max, const std::string& format, std::ostream& os) {
  if (n_max < 2) throw UsageError("--n-max must be at least 2");
  const auto cells = gorenstein_table(n_max);
  os << (format == "csv" ? table_csv(cells) : table_grid(cells));
  return kOk;
}

int cmd_verify(const std::string& suite, std::ostream& os) {
  std::vector<int> ids;
  if (suite == "all") {
    for (int i = 1; i <= 9; ++i) ids.push_back(i);
  } else {
    ids = suites().at(suite);
  }
  bool all = true;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id);
    os << format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taft algebra actions on down-up algebras: invariants, Hilbert series, Gorenstein tests"};
  app.require_subcommand(1);
  Output out;
  app.add_option("-o,--output", out.path, "Write output to a file instead of stdout");

  int classify_n = 2;
  std::string classify_format = "plain";
  auto* classify = app.add_subcommand("classify", "List every action for a given n");
  classify->add_option("--n", classify_n, "Taft parameter n")->required();
  classify->add_option("--format", classify_format)->check(CLI::IsMember({"plain", "json", "csv"}));

  SpecArgs act_args;
  std::string op;
  std::string element;
  int times = 1;
  auto* act = app.add_subcommand("act", "Apply g or x to an element of A");
  act_args.add_to(act);
  act->add_option("--op", op, "g or x")->required()->check(CLI::IsMember({"g", "x"}));
  act->add_option("--element", element, "Element such as \"v^2 + (r)*u*z\"")->required();
  act->add_option("--times", times, "Number of applications");

  SpecArgs inv_args;
  int max_degree = -1;
  bool x_only = false;
  bool gens = false;
  std::string inv_format = "plain";
  auto* inv = app.add_subcommand("invariants", "Bases of A^T (or A^x) by degree");
  inv_args.add_to(inv);
  inv->add_option("--max-degree", max_degree, "Top degree (default 4n+2)");
  inv->add_flag("--x-only", x_only, "Invariants of x only");
  inv->add_flag("--generators", gens, "Find generators instead of listing bases");
  inv->add_option("--format", inv_format)->check(CLI::IsMember({"plain", "json"}));

  SpecArgs hilb_args;
  bool closed_form = false;
  int terms = 20;
  auto* hilb = app.add_subcommand("hilbert", "Hilbert series of A^T by Molien's theorem");
  hilb_args.add_to(hilb);
  hilb->add_flag("--closed-form", closed_form, "Compare with a known closed form");
  hilb->add_option("--terms", terms, "Number of series coefficients to print")->check(CLI::NonNegativeNumber);

  SpecArgs gor_args;
  auto* gor = app.add_subcommand("gorenstein", "Stanley verdict and homological determinants");
  gor_args.add_to(gor);

  int n_max = 16;
  std::string table_format = "grid";
  auto* table = app.add_subcommand("table", "Gorenstein verdicts for 2 <= n <= n-max (order-2n regime)");
  table->add_option("--n-max", n_max, "Largest n");
  table->add_option("--format", table_format)->check(CLI::IsMember({"grid", "csv"}));

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "identities", "presentations", "molien", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    std::ostream& os = out.stream();
    if (*classify) return cmd_classify(classify_n, classify_format, os);
    if (*act) return cmd_act(act_args, op, element, times, os);
    if (*inv) return cmd_invariants(inv_args, max_degree, x_only, gens, inv_format, os);
    if (*hilb) return cmd_hilbert(hilb_args, closed_form, terms, os);
    if (*gor) return cmd_gorenstein(gor_args, os);
    if (*table) return cmd_table(n_max, table_format, os);
    if (*verify) return cmd_verify(suite, os);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
