// tamaripop: enumeration, Pop dynamics, series and verification from the
// command line. JSON goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tamaripop/bounds.hpp"
#include "tamaripop/bracket_vector.hpp"
#include "tamaripop/json_io.hpp"
#include "tamaripop/permutation.hpp"
#include "tamaripop/pop.hpp"
#include "tamaripop/series.hpp"
#include "tamaripop/verify.hpp"

namespace tp = tamaripop;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(field, &used);
    } catch (const std::exception&) {
      throw UsageError("bad vector entry \"" + field + "\"");
    }
    if (used != field.size()) throw UsageError("bad vector entry \"" + field + "\"");
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("empty vector");
  return out;
}

void print(const tp::Json& j) { std::cout << j.dump() << '\n'; }

int cmd_enum(std::optional<int> n, std::optional<std::string> nu, bool force) {
  if (n.has_value() == nu.has_value()) throw UsageError("enum: give exactly one of --n and --nu");
  if (n && *n < 1) throw UsageError("enum: --n must be at least 1");
  const auto ctx = n ? tp::NuContext::make(tp::dyck_nu(*n)) : tp::NuContext::make(*nu);
  const tp::EnumOptions opts{force};
  for (const auto& mu : tp::enumerate_tam(*ctx, opts)) {
    tp::Json rec;
    rec["path"] = tp::to_json(mu);
    rec["vector"] = tp::to_json(tp::path_to_vector(mu, ctx));
    print(rec);
  }
  return 0;
}

int cmd_pop_vector(const std::string& csv, std::optional<std::string> nu, bool trace) {
  const auto entries = parse_csv(csv);
  tp::NuContextPtr ctx;
  if (nu) {
    ctx = tp::NuContext::make(*nu);
  } else {
    if (entries.size() % 2 != 0) throw UsageError("pop: --nu is required for odd-length vectors");
    ctx = tp::tamari_context(static_cast<int>(entries.size() / 2));
  }
  const auto traj = tp::pop_trajectory(tp::BracketVector::from_entries(ctx, entries));
  tp::Json out;
  out["trajectory"] = tp::to_json(traj);
  out["time"] = traj.sortability_time;
  if (trace) {
    tp::Json steps = tp::Json::array();
    for (std::size_t i = 0; i + 1 < traj.states.size(); ++i) {
      tp::Json s;
      s["from"] = traj.states[i].to_ints();
      s["descents"] = tp::delta_set(traj.states[i]);
      s["to"] = traj.states[i + 1].to_ints();
      steps.push_back(std::move(s));
    }
    out["steps"] = std::move(steps);
  }
  print(out);
  return 0;
}

int cmd_pop_perm(const std::string& word, bool trace) {
  auto p = tp::parse_permutation(word);
  tp::Json states = tp::Json::array();
  tp::Json steps = tp::Json::array();
  states.push_back(tp::to_json(p));
  const auto id = tp::Permutation::identity(p.size());
  int time = 0;
  while (p != id) {
    const auto popped = tp::pop_stack(p);
    auto next = tp::pop_tamari_perm(p);
    if (trace) {
      tp::Json s;
      s["from"] = tp::to_json(p);
      s["runs"] = tp::perm_stats(p).run_lengths;
      s["pop_stack"] = tp::to_json(popped);
      s["to"] = tp::to_json(next);
      steps.push_back(std::move(s));
    }
    p = std::move(next);
    states.push_back(tp::to_json(p));
    ++time;
  }
  tp::Json out;
  out["trajectory"] = std::move(states);
  out["time"] = time;
  if (trace) out["steps"] = std::move(steps);
  print(out);
  return 0;
}

int cmd_sortable(int n, int t, bool force) {
  if (t < 0) throw UsageError("sortable: --t must be nonnegative");
  tp::Json out;
  out["n"] = n;
  out["t"] = t;
  out["count"] = tp::count_t_sortable(n, t, {force});
  if (t >= 1) out["formula"] = tp::h_series(t, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)].str();
  print(out);
  return 0;
}

int cmd_series(int t, int terms) {
  if (t < 1) throw UsageError("series: --t must be at least 1");
  if (terms < 1) throw UsageError("series: --terms must be at least 1");
  const auto s = tp::h_series(t, static_cast<std::size_t>(terms));
  auto strings = tp::to_decimal_strings(s);
  strings.erase(strings.begin());  // constant term
  print(strings);
  return 0;
}

int cmd_image(int n, bool qpoly, bool force) {
  if (n < 1) throw UsageError("image: --n must be at least 1");
  const tp::EnumOptions opts{force};
  tp::Json out;
  if (qpoly) {
    const auto poly = tp::pop_polynomial(n, opts);
    out["size"] = poly.image_size();
    out["motzkin"] = tp::motzkin(static_cast<unsigned>(n - 1)).convert_to<std::uint64_t>();
    out["qpoly"] = tp::to_json(poly);
    tp::Json formula = tp::Json::object();
    const int m = n - 1;
    for (int k = 0; 2 * k <= m; ++k) formula[std::to_string(m - k)] = tp::a055151(m, k).convert_to<std::uint64_t>();
    out["formula"] = std::move(formula);
  } else {
    out["size"] = tp::pop_image(n, opts).size();
    out["motzkin"] = tp::motzkin(static_cast<unsigned>(n - 1)).convert_to<std::uint64_t>();
  }
  print(out);
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> max_n, std::optional<int> max_t, std::uint64_t seed,
               bool timings) {
  tp::VerifyOptions opts{max_n, max_t, seed, timings};
  const auto report = tp::run_suite(suite, opts);
  std::cout << tp::report_to_json(report, timings).dump(2) << '\n';
  for (const auto& c : report.checks)
    if (!c.passed) std::cerr << "FAIL " << c.name << ": " << c.detail << '\n';
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pop-stack dynamics on nu-Tamari lattices"};
  app.require_subcommand(1);

  std::optional<int> n_opt;
  std::optional<std::string> nu_opt;
  bool force = false;
  auto* en = app.add_subcommand("enum", "List Tam(nu) as JSON lines of paths and bracket vectors");
  en->add_option("--n", n_opt, "Use nu = (NE)^n");
  en->add_option("--nu", nu_opt, "Lattice path nu over {N,E}");
  en->add_flag("--force", force, "Ignore the enumeration bound");

  std::optional<std::string> vec_opt, perm_opt;
  bool trace = false;
  auto* pop = app.add_subcommand("pop", "Pop trajectory down to the minimum");
  pop->add_option("--vector", vec_opt, "Comma-separated bracket vector");
  pop->add_option("--nu", nu_opt, "Lattice path nu (default E(NE)^(n-1) for even lengths)");
  pop->add_option("--perm", perm_opt, "312-avoiding permutation, e.g. 321");
  pop->add_flag("--trace", trace, "Include per-step details");

  int n = 0, t = 0, terms = 10;
  auto* sortable = app.add_subcommand("sortable", "Count t-Pop-sortable elements of Tam_n");
  sortable->add_option("--n", n)->required();
  sortable->add_option("--t", t)->required();
  sortable->add_flag("--force", force);

  auto* series = app.add_subcommand("series", "Coefficients h_t(1..terms) as decimal strings");
  series->add_option("--t", t)->required();
  series->add_option("--terms", terms);

  bool qpoly = false;
  auto* image = app.add_subcommand("image", "Size of Pop(Tam_n) and its up-cover polynomial");
  image->add_option("--n", n)->required();
  image->add_flag("--qpoly", qpoly, "Add the exponent histogram and closed-form coefficients");
  image->add_flag("--force", force);

  std::string suite = "all";
  std::optional<int> max_n, max_t;
  std::uint64_t seed = 1;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run property suites and print a JSON report");
  verify->add_option("--suite", suite, "Suite name or all");
  verify->add_option("--max-n", max_n);
  verify->add_option("--max-t", max_t);
  verify->add_option("--seed", seed);
  verify->add_flag("--timings", timings, "Include wall time per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (en->parsed()) return cmd_enum(n_opt, nu_opt, force);
    if (pop->parsed()) {
      if (vec_opt.has_value() == perm_opt.has_value()) throw UsageError("pop: give exactly one of --vector and --perm");
      return vec_opt ? cmd_pop_vector(*vec_opt, nu_opt, trace) : cmd_pop_perm(*perm_opt, trace);
    }
    if (sortable->parsed()) return cmd_sortable(n, t, force);
    if (series->parsed()) return cmd_series(t, terms);
    if (image->parsed()) return cmd_image(n, qpoly, force);
    if (verify->parsed()) return cmd_verify(suite, max_n, max_t, seed, timings);
  } catch (const tp::BoundError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
