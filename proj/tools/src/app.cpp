#include "extremal_cli/app.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "extremal/dualspace.hpp"
#include "extremal/lorentz.hpp"
#include "extremal/polytope.hpp"
#include "extremal/vnorm.hpp"
#include "extremal_cli/json_io.hpp"
#include "extremal_cli/sampling.hpp"

namespace extremal::cli {

namespace {

struct Outcome {
  json outputs;
  bool ok = true;
};

// Caps the rough work estimate of a command when EXTREMAL_BUDGET is set.
void check_budget(double estimate, const std::string& what) {
  const char* env = std::getenv("EXTREMAL_BUDGET");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const double cap = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(cap > 0)) {
    throw std::invalid_argument(std::string("EXTREMAL_BUDGET must be a positive number, got \"") + env + "\"");
  }
  if (estimate > cap) {
    std::ostringstream msg;
    msg << what << " needs about " << std::setprecision(3) << estimate << " steps, above EXTREMAL_BUDGET=" << env;
    throw std::invalid_argument(msg.str());
  }
}

double factorial(int n) { return std::tgamma(n + 1.0); }

std::string verdict_name(const dual::ExtremeClass& c) { return std::string(dual::to_string(c.verdict)); }

json permutations_json(const std::vector<SignedPermutation>& list) {
  json out = json::array();
  for (const auto& t : list) out.push_back(to_json(t));
  return out;
}

void write_file(const std::string& path, const json& j) {
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write \"" + path + "\"");
  file << j.dump() << "\n";
}

struct Options {
  std::string report;

  std::string vector, functional, weights = "harmonic", v_weights, w_weights, y, x;
  std::string method = "dp", dual_method = "gauge", space = "v1", out_file, kind, set, theta, side;
  bool witness = false, extreme_only = false, count_only = false;
  int bound = 0, window = 0, n = 0, depth = 0, samples = 100, max_index = 12, max_support = 5;
  int duality_samples = 1000;
  int i = 0, j = 0, sign = 1;
  std::uint64_t seed = 1;
};

struct Leaf {
  CLI::App* app;
  std::string command;
  std::function<Outcome(json&)> action;
};

Outcome norm_v1(const Options& o, json& inputs) {
  const SparseVec x = sparse_vec_from_json(load_json_argument(o.vector));
  inputs = {{"vector", to_json(x)}, {"method", o.method}, {"witness", o.witness}};
  const bool brute = o.method != "dp" || o.witness;
  const bool dp = o.method != "brute";
  const double m = x.max_index() + 1;
  check_budget(brute ? std::pow(2.0, m) : std::pow(m, 4), "norm v1");
  json out;
  std::optional<v1::NormWitness> exhaustive;
  if (brute) exhaustive = v1::norm_bruteforce(x);
  std::optional<Rational> fast;
  if (dp) fast = v1::norm_dp(x);
  if (exhaustive && fast && exhaustive->value != *fast) {
    return {{{"norm_bruteforce", to_json(exhaustive->value)}, {"norm_dp", to_json(*fast)}, {"engines_agree", false}},
            false};
  }
  out["norm"] = to_json(o.method == "dp" && fast ? *fast : (exhaustive ? exhaustive->value : *fast));
  if (o.witness) out["witness"] = to_json(exhaustive->witness);
  return {out};
}

Outcome dual_classify(const Options& o, json& inputs) {
  const SparseVec f = sparse_vec_from_json(load_json_argument(o.functional));
  inputs = {{"functional", to_json(f)}};
  const auto c = dual::classify_extreme(f);
  json out{{"compatible", c.verdict != dual::Verdict::NotCompatible},
           {"extreme", c.is_extreme()},
           {"verdict", verdict_name(c)},
           {"reason", c.reason}};
  if (auto meta = dual::recognize(f)) {
    out["support"] = to_json(meta->support);
    out["last_abs"] = meta->last_abs;
    out["global_sign"] = meta->global_sign;
  }
  return {out};
}

Outcome dual_enumerate(const Options& o, json& inputs) {
  inputs = {{"bound", o.bound}, {"extreme_only", o.extreme_only}};
  check_budget(std::pow(2.0, o.bound), "dual enumerate");
  const auto list = o.extreme_only ? dual::enumerate_extreme(o.bound) : dual::enumerate_compatible(o.bound);
  json items = json::array();
  for (const auto& g : list) {
    json item = to_json(g.coords);
    item["verdict"] = verdict_name(dual::classify_extreme(g.coords));
    items.push_back(std::move(item));
  }
  return {{{"bound", o.bound}, {"count", list.size()}, {"functionals", std::move(items)}}};
}

Outcome dual_norm(const Options& o, json& inputs) {
  const SparseVec f = sparse_vec_from_json(load_json_argument(o.functional));
  inputs = {{"functional", to_json(f)}, {"bound", o.bound}, {"method", o.dual_method}};
  check_budget(std::pow(2.0, o.bound) * o.bound, "dual norm");
  std::optional<Rational> gauge, primal;
  if (o.dual_method != "primal") gauge = dual::dual_norm(f, o.bound);
  if (o.dual_method != "gauge") primal = dual::dual_norm_primal(f, o.bound);
  if (gauge && primal && *gauge != *primal) {
    return {{{"dual_norm_gauge", to_json(*gauge)}, {"dual_norm_primal", to_json(*primal)}, {"routes_agree", false}},
            false};
  }
  return {{{"dual_norm", to_json(gauge ? *gauge : *primal)}}};
}

Outcome oracle_compare(const Options& o, json& inputs) {
  inputs = {{"bound", o.bound}, {"window", o.window}};
  check_budget(std::pow(4.0, o.bound), "oracle compare");
  const auto report = polytope::compare_theorem_oracle(o.bound, o.window);
  json disagreements = json::array();
  for (const auto& d : report.disagreements) {
    disagreements.push_back({{"functional", to_json(d.functional)},
                             {"theorem_verdict", verdict_name(d.theorem_verdict)},
                             {"oracle_verdict", d.oracle_vertex ? "vertex" : "not_vertex"}});
  }
  json out{{"bound", report.bound},
           {"window", report.window},
           {"checked", report.checked},
           {"agreements", report.agreements},
           {"disagreements", std::move(disagreements)}};
  if (!o.out_file.empty()) write_file(o.out_file, out);
  return {out};
}

Outcome oracle_engines(const Options& o, json& inputs) {
  inputs = {{"samples", o.samples}, {"max_index", o.max_index}, {"seed", o.seed}};
  if (o.samples < 0) throw std::invalid_argument("--samples must be >= 0");
  if (o.max_index < 1 || o.max_index > v1::kBruteforceMaxIndex) {
    throw std::invalid_argument("--max-index must lie in [1, " + std::to_string(v1::kBruteforceMaxIndex) + "]");
  }
  check_budget(o.samples * std::pow(2.0, o.max_index + 1), "oracle engines");
  Rng rng(o.seed);
  json mismatches = json::array();
  for (int s = 0; s < o.samples; ++s) {
    const SparseVec x = random_vector(rng, 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(o.max_index))));
    const Rational brute = v1::norm_bruteforce(x).value;
    const Rational fast = v1::norm_dp(x);
    if (brute != fast) {
      mismatches.push_back({{"vector", to_json(x)}, {"norm_bruteforce", to_json(brute)}, {"norm_dp", to_json(fast)}});
    }
  }
  const bool ok = mismatches.empty();
  return {{{"samples", o.samples}, {"agreements", o.samples - static_cast<int>(mismatches.size())},
           {"mismatches", std::move(mismatches)}},
          ok};
}

Outcome oracle_norming(const Options& o, json& inputs) {
  inputs = {{"samples", o.samples}, {"max_index", o.max_index}, {"seed", o.seed}};
  if (o.samples < 0) throw std::invalid_argument("--samples must be >= 0");
  if (o.max_index < 1 || o.max_index > v1::kBruteforceMaxIndex) {
    throw std::invalid_argument("--max-index must lie in [1, " + std::to_string(v1::kBruteforceMaxIndex) + "]");
  }
  check_budget(o.samples * std::pow(2.0, o.max_index + 1), "oracle norming");
  Rng rng(o.seed);
  json mismatches = json::array();
  for (int s = 0; s < o.samples; ++s) {
    const SparseVec x = random_vector(rng, 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(o.max_index))));
    Rational best = 0;
    for (const auto& g : dual::enumerate_compatible(x.max_index() + 1)) {
      const Rational value = abs(dual::evaluate(g.coords, x));
      if (value > best) best = value;
    }
    const Rational nu_norm = v1::norm_bruteforce(x).value;
    if (best != nu_norm) {
      mismatches.push_back({{"vector", to_json(x)}, {"norming_max", to_json(best)}, {"norm", to_json(nu_norm)}});
    }
  }
  const bool ok = mismatches.empty();
  return {{{"samples", o.samples}, {"agreements", o.samples - static_cast<int>(mismatches.size())},
           {"mismatches", std::move(mismatches)}},
          ok};
}

Outcome isometry_scan(const Options& o, json& inputs) {
  inputs = {{"space", o.space}, {"n", o.n}};
  check_budget(std::pow(2.0, o.n) * factorial(o.n), "isometry scan");
  polytope::Space space = polytope::V1Space{};
  if (o.space == "lorentz") {
    const auto w = weights_argument(o.weights);
    inputs["weights"] = to_json(w);
    space = polytope::LorentzSpace{w};
  }
  const auto found = polytope::signed_perm_isometry_scan(space, o.n);
  return {{{"space", o.space}, {"n", o.n}, {"count", found.size()}, {"isometries", permutations_json(found)}}};
}

Outcome lorentz_norm(const Options& o, json& inputs) {
  const SparseVec x = sparse_vec_from_json(load_json_argument(o.vector));
  const auto w = weights_argument(o.weights);
  inputs = {{"vector", to_json(x)}, {"weights", to_json(w)}};
  return {{{"norm", to_json(lorentz::lorentz_norm(x, w))}, {"extreme", lorentz::lorentz_extreme_check(x, w)}}};
}

Outcome lorentz_predual(const Options& o, json& inputs) {
  const SparseVec x = sparse_vec_from_json(load_json_argument(o.vector));
  const auto w = weights_argument(o.weights);
  inputs = {{"vector", to_json(x)}, {"weights", to_json(w)}};
  return {{{"predual_norm", to_json(lorentz::predual_norm(x, w))}}};
}

Outcome lorentz_extremes(const Options& o, json& inputs) {
  const auto w = weights_argument(o.weights);
  inputs = {{"n", o.n}, {"weights", to_json(w)}, {"count_only", o.count_only}};
  check_budget(std::pow(3.0, o.n), "lorentz extremes");
  const auto list = lorentz::enumerate_lorentz_extremes(o.n, w);
  json out{{"count", list.size()}};
  if (!o.count_only) {
    json items = json::array();
    for (const auto& e : list) items.push_back(to_json(e));
    out["extremes"] = std::move(items);
  }
  return {out};
}

Outcome lorentz_proportional(const Options& o, json& inputs) {
  const auto v = weights_argument(o.v_weights);
  const auto w = weights_argument(o.w_weights);
  inputs = {{"v", to_json(v)}, {"w", to_json(w)}, {"depth", o.depth}};
  const auto lambda = lorentz::weights_proportional(v, w, o.depth);
  return {{{"proportional", lambda.has_value()}, {"lambda", lambda ? to_json(*lambda) : json(nullptr)}}};
}

Outcome lorentz_rigidity(const Options& o, json& inputs) {
  const auto v = weights_argument(o.v_weights);
  const auto w = weights_argument(o.w_weights);
  inputs = {{"v", to_json(v)}, {"w", to_json(w)}, {"n", o.n}};
  check_budget(std::pow(2.0, o.n) * factorial(o.n) * std::pow(3.0, o.n), "lorentz rigidity");
  const auto report = lorentz::rigidity_check(v, w, o.n);
  const bool consistent = report.isometries.empty() != report.proportional.has_value();
  return {{{"lambda", to_json(report.lambda)},
           {"proportional", report.proportional.has_value()},
           {"count", report.isometries.size()},
           {"isometries", permutations_json(report.isometries)},
           {"asymptotics_unverified", report.asymptotics_unverified},
           {"consistent", consistent}},
          consistent};
}

Outcome lorentz_pairing(const Options& o, json& inputs) {
  const SparseVec y = sparse_vec_from_json(load_json_argument(o.y));
  const SparseVec x = sparse_vec_from_json(load_json_argument(o.x));
  const auto w = weights_argument(o.weights);
  inputs = {{"y", to_json(y)}, {"x", to_json(x)}, {"weights", to_json(w)}};
  const auto check = lorentz::pairing_check(y, x, w);
  const Rational bound = lorentz::predual_norm(x, w) * lorentz::lorentz_norm(y, w);
  return {{{"pairing", to_json(check.pairing)}, {"bound", to_json(bound)}, {"bound_holds", check.bound_holds}},
          check.bound_holds};
}

Outcome lorentz_duality(const Options& o, json& inputs) {
  const auto w = weights_argument(o.weights);
  inputs = {{"samples", o.duality_samples}, {"seed", o.seed}, {"weights", to_json(w)}, {"max_support", o.max_support}};
  if (o.duality_samples < 0) throw std::invalid_argument("--samples must be >= 0");
  if (o.max_support < 1) throw std::invalid_argument("--max-support must be >= 1");
  check_budget(static_cast<double>(o.duality_samples) * o.max_support, "lorentz duality");
  constexpr int kWindow = 8;
  const int window = std::max(kWindow, o.max_support);
  Rng rng(o.seed);
  json pairing_failures = json::array();
  json attaining_failures = json::array();
  for (int s = 0; s < o.duality_samples; ++s) {
    const auto ys = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(o.max_support)));
    const auto xs = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(window)));
    const SparseVec y = random_vector_with_support(rng, window, ys);
    const SparseVec x = random_vector_with_support(rng, window, xs);
    if (!lorentz::pairing_check(y, x, w).bound_holds) {
      pairing_failures.push_back({{"y", to_json(y)}, {"x", to_json(x)}});
    }
    const SparseVec a = lorentz::attaining_predual_vector(y, w);
    if (dual::evaluate(y, a) != lorentz::lorentz_norm(y, w) || lorentz::predual_norm(a, w) != 1) {
      attaining_failures.push_back({{"y", to_json(y)}, {"attaining", to_json(a)}});
    }
  }
  const bool ok = pairing_failures.empty() && attaining_failures.empty();
  return {{{"samples", o.duality_samples},
           {"pairing_failures", std::move(pairing_failures)},
           {"attaining_failures", std::move(attaining_failures)}},
          ok};
}

Outcome fixtures_ball(const Options& o, json& inputs) {
  inputs = {{"kind", o.kind}, {"i", o.i}, {"j", o.j}, {"sign", o.sign}};
  const auto kind = v1::ball_fixture_from_name(o.kind);
  if (!kind) throw std::invalid_argument("unknown ball fixture \"" + o.kind + "\"");
  const SparseVec x = v1::ball_fixture(*kind, {o.i, o.j, o.sign});
  return {{{"vector", to_json(x)}, {"norm", to_json(v1::norm_dp(x))}}};
}

Outcome fixtures_ytheta(const Options& o, json& inputs) {
  const IndexSet f = index_set_from_json(load_json_argument(o.set));
  const json theta_json = load_json_argument(o.theta);
  if (!theta_json.is_array()) throw std::invalid_argument("--theta must be a JSON array of +1/-1");
  std::vector<int> theta;
  for (const auto& t : theta_json) {
    if (!t.is_number_integer()) throw std::invalid_argument("--theta entries must be integers");
    theta.push_back(t.get<int>());
  }
  inputs = {{"set", to_json(f)}, {"theta", theta}};
  const SparseVec y = v1::y_theta(f, theta);
  check_budget(std::pow(2.0, y.max_index() + 1), "fixtures ytheta");
  const auto best = v1::norm_bruteforce(y);
  return {{{"vector", to_json(y)}, {"norm", to_json(best.value)}, {"witness", to_json(best.witness)}}};
}

Outcome fixtures_extend(const Options& o, json& inputs) {
  const SparseVec x = sparse_vec_from_json(load_json_argument(o.vector));
  inputs = {{"vector", to_json(x)}, {"side", o.side}, {"j", o.j}};
  const SparseVec e = v1::extend_flat(x, o.side == "left" ? v1::Side::Left : v1::Side::Right, o.j);
  return {{{"vector", to_json(e)}, {"norm", to_json(v1::norm_dp(e))}, {"original_norm", to_json(v1::norm_dp(x))}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact norms, dual-ball extreme points and isometry scans for V1 and Lorentz sequence spaces",
               "extremal"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--report", o.report, "Also write a run report (command, inputs, outputs, elapsed_ms) to FILE");

  std::vector<Leaf> leaves;
  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                        Outcome (*action)(const Options&, json&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    leaves.push_back({sub, parent->get_name() + " " + name, [action, &o](json& in) { return action(o, in); }});
    return sub;
  };
  const auto vector_opt = [&](CLI::App* sub, std::string& target, const std::string& flag) {
    sub->add_option(flag, target, "SparseVec JSON, inline or a file path")->required();
  };
  const auto weights_opt = [&](CLI::App* sub, std::string& target, const std::string& flag, bool required) {
    auto* opt = sub->add_option(flag, target, "Weights JSON, inline or a file path, or \"harmonic\"");
    if (required) opt->required();
  };

  auto* norm = app.add_subcommand("norm", "James-Schreier norm");
  norm->require_subcommand(1);
  auto* norm_v1_cmd = leaf(norm, "v1", "Norm of a finitely supported vector", norm_v1);
  vector_opt(norm_v1_cmd, o.vector, "--vector");
  norm_v1_cmd->add_flag("--witness", o.witness, "Report the lexicographically smallest maximizing set");
  norm_v1_cmd->add_option("--method", o.method, "dp, brute or both")->check(CLI::IsMember({"dp", "brute", "both"}));

  auto* dual_cmd = app.add_subcommand("dual", "Compatible functionals and the dual ball");
  dual_cmd->require_subcommand(1);
  auto* classify = leaf(dual_cmd, "classify", "Classify a functional", dual_classify);
  vector_opt(classify, o.functional, "--functional");
  auto* enumerate = leaf(dual_cmd, "enumerate", "List compatible functionals supported in [1, bound]", dual_enumerate);
  enumerate->add_option("--bound", o.bound)->required()->check(CLI::Range(1, 64));
  enumerate->add_flag("--extreme-only", o.extreme_only);
  auto* dnorm = leaf(dual_cmd, "norm", "Dual norm of a functional on the (bound-1)-truncation", dual_norm);
  vector_opt(dnorm, o.functional, "--functional");
  dnorm->add_option("--bound", o.bound)->required()->check(CLI::Range(2, 64));
  dnorm->add_option("--method", o.dual_method, "gauge, primal or both")
      ->check(CLI::IsMember({"gauge", "primal", "both"}));

  auto* oracle = app.add_subcommand("oracle", "Independent verification runs");
  oracle->require_subcommand(1);
  auto* compare = leaf(oracle, "compare", "Extreme-point classification against the vertex oracle", oracle_compare);
  compare->add_option("--bound", o.bound)->required()->check(CLI::Range(1, 64));
  compare->add_option("--window", o.window)->required()->check(CLI::Range(1, 64));
  compare->add_option("--out", o.out_file, "Also write the report JSON to FILE");
  auto* engines = leaf(oracle, "engines", "norm_dp against norm_bruteforce on random vectors", oracle_engines);
  auto* norming = leaf(oracle, "norming", "max |f(x)| over compatible f against the norm", oracle_norming);
  for (auto* sub : {engines, norming}) {
    sub->add_option("--samples", o.samples);
    sub->add_option("--max-index", o.max_index);
    sub->add_option("--seed", o.seed);
  }

  auto* isometry = app.add_subcommand("isometry", "Signed-permutation isometries of truncations");
  isometry->require_subcommand(1);
  auto* scan = leaf(isometry, "scan", "Exhaustive scan of signed permutations of [1..n]", isometry_scan);
  scan->add_option("--space", o.space)->check(CLI::IsMember({"v1", "lorentz"}));
  scan->add_option("--n", o.n)->required()->check(CLI::Range(1, 64));
  weights_opt(scan, o.weights, "--weights", false);

  auto* lor = app.add_subcommand("lorentz", "Lorentz space d(w,1) and its predual");
  lor->require_subcommand(1);
  auto* lnorm = leaf(lor, "norm", "Lorentz norm", lorentz_norm);
  vector_opt(lnorm, o.vector, "--vector");
  weights_opt(lnorm, o.weights, "--weights", false);
  auto* lpredual = leaf(lor, "predual", "Predual norm", lorentz_predual);
  vector_opt(lpredual, o.vector, "--vector");
  weights_opt(lpredual, o.weights, "--weights", false);
  auto* lextremes = leaf(lor, "extremes", "Extreme points of the n-dimensional unit ball", lorentz_extremes);
  lextremes->add_option("--n", o.n)->required()->check(CLI::Range(1, 64));
  weights_opt(lextremes, o.weights, "--weights", false);
  lextremes->add_flag("--count-only", o.count_only);
  auto* lprop = leaf(lor, "proportional", "Whether v = lambda w on the first depth weights", lorentz_proportional);
  weights_opt(lprop, o.v_weights, "--v", true);
  weights_opt(lprop, o.w_weights, "--w", true);
  lprop->add_option("--depth", o.depth)->required();
  auto* lrig = leaf(lor, "rigidity", "lambda-scaled signed permutations between truncations", lorentz_rigidity);
  weights_opt(lrig, o.v_weights, "--v", true);
  weights_opt(lrig, o.w_weights, "--w", true);
  lrig->add_option("--n", o.n)->required();
  auto* lpair = leaf(lor, "pairing", "Check |<y,x>| <= ||x||_W ||y||_{w,1}", lorentz_pairing);
  vector_opt(lpair, o.y, "--y");
  vector_opt(lpair, o.x, "--x");
  weights_opt(lpair, o.weights, "--weights", false);
  auto* lduality = leaf(lor, "duality", "Random pairing and attaining-vector checks", lorentz_duality);
  lduality->add_option("--samples", o.duality_samples);
  lduality->add_option("--seed", o.seed);
  lduality->add_option("--max-support", o.max_support);
  weights_opt(lduality, o.weights, "--weights", false);

  auto* fixtures = app.add_subcommand("fixtures", "Named vectors");
  fixtures->require_subcommand(1);
  auto* ball = leaf(fixtures, "ball", "A vector from one of the unit-ball families", fixtures_ball);
  ball->add_option("--kind", o.kind, "e_i, half_e_i, e1_plus_half_ej, half_pair, chi, half_chi")->required();
  ball->add_option("--i", o.i);
  ball->add_option("--j", o.j);
  ball->add_option("--sign", o.sign);
  auto* ytheta = leaf(fixtures, "ytheta", "y_theta = sum theta_i e_{F_i} and its norm", fixtures_ytheta);
  ytheta->add_option("--set", o.set, "IndexSet JSON such as [4,6,9]")->required();
  ytheta->add_option("--theta", o.theta, "Sign list such as [1,1,-1]")->required();
  auto* extend = leaf(fixtures, "extend", "Flat extension of a vector", fixtures_extend);
  vector_opt(extend, o.vector, "--vector");
  extend->add_option("--side", o.side)->required()->check(CLI::IsMember({"left", "right"}));
  extend->add_option("--j", o.j)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalidInput;
  }

  const Leaf* chosen = nullptr;
  for (const auto& l : leaves) {
    if (l.app->parsed()) chosen = &l;
  }
  if (chosen == nullptr) {
    err << app.help();
    return kExitInvalidInput;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    json inputs = json::object();
    Outcome outcome = chosen->action(inputs);
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    out << outcome.outputs.dump() << "\n";
    if (!o.report.empty()) {
      json report{{"command", chosen->command},
                  {"inputs", inputs},
                  {"outputs", outcome.outputs},
                  {"elapsed_ms", elapsed}};
      for (const char* key : {"agreements", "disagreements"}) {
        if (outcome.outputs.contains(key)) report[key] = outcome.outputs[key];
      }
      write_file(o.report, report);
    }
    if (!outcome.ok) {
      err << "error: verification failed in " << chosen->command << "\n";
      return kExitFailure;
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace extremal::cli
