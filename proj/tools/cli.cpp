#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodfree/constructions.hpp"
#include "prodfree/density.hpp"
#include "prodfree/dfa.hpp"
#include "prodfree/layered_set.hpp"
#include "prodfree/productfree.hpp"
#include "prodfree/proofkit.hpp"
#include "prodfree/search.hpp"
#include "prodfree/words.hpp"

namespace prodfree::cli {

namespace {

using json = nlohmann::ordered_json;
using WordSet = std::variant<LayeredSet, Dfa>;

/// Failure while reading inputs or writing outputs (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string frac(const Rational& r) { return to_fraction_string(r); }

json window_json(const WindowSpec& w) { return json{{"m", w.first}, {"n", w.last}}; }

json estimate_json(const DensityEstimate& e) {
  json j{{"estimate", frac(e.estimate)},
         {"window", window_json(e.window)},
         {"exact", e.exact},
         {"value", frac(e.value)},
         {"horizon", e.horizon}};
  j["period"] = e.period.holds
                    ? json{{"preperiod", e.period.preperiod}, {"period", e.period.period}}
                    : json(nullptr);
  return j;
}

json words_json(std::span<const Word> words) {
  json arr = json::array();
  for (const auto& w : words) arr.push_back(w.str());
  return arr;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

WordSet load_set(const std::string& set_path, const std::string& dfa_path) {
  if (set_path.empty() == dfa_path.empty()) {
    throw UsageError("exactly one of --set or --dfa is required");
  }
  try {
    if (!dfa_path.empty()) {
      auto in = open_input(dfa_path);
      return read_dfa(in);
    }
    auto in = open_input(set_path);
    return from_word_list(read_word_list(in));
  } catch (const ParseError& e) {
    throw UsageError((dfa_path.empty() ? set_path : dfa_path) + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

std::string dfa_text(const Dfa& d) {
  std::ostringstream os;
  write_dfa(os, d);
  return os.str();
}

std::string set_text(const LayeredSet& s) {
  std::ostringstream os;
  write_word_list(os, to_word_list(s));
  return os.str();
}

std::size_t default_horizon(const WordSet& s) {
  if (auto* ls = std::get_if<LayeredSet>(&s)) return ls->horizon();
  return kDefaultRegularHorizon;
}

std::uint64_t parse_budget(const std::string& text) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !(v >= 1) || v > 1.8e19 || std::floor(v) != v) {
    throw UsageError("budget must be a positive integer (scientific notation allowed)");
  }
  return static_cast<std::uint64_t>(v);
}

std::vector<std::size_t> parse_ell_list(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument("bad");
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("--ell expects a comma-separated list of positive integers");
    }
  }
  return out;
}

struct Stats {
  std::string path;
  json data = json::object();
  void flush() const {
    if (path.empty()) return;
    write_text_file(path, data.dump(2) + "\n");
  }
};

template <class F>
decltype(auto) visit_set(const WordSet& s, F&& f) {
  return std::visit([&](const auto& v) -> decltype(auto) { return f(v); }, s);
}

// ---- subcommands ---------------------------------------------------------

struct InputOptions {
  std::string set_path;
  std::string dfa_path;

  void add(CLI::App* app) {
    app->add_option("--set", set_path, "word-list file");
    app->add_option("--dfa", dfa_path, "automaton file");
  }
  WordSet load() const { return load_set(set_path, dfa_path); }
};

int cmd_check(const InputOptions& input, const std::string& format, std::size_t state_cap,
              std::ostream& out) {
  WordSet s = input.load();
  std::optional<WitnessTriple> witness;
  if (auto* d = std::get_if<Dfa>(&s)) {
    witness = check_regular(*d, state_cap);
  } else {
    witness = check_explicit(std::get<LayeredSet>(s));
  }
  if (format == "json") {
    json j{{"product_free", !witness.has_value()}};
    if (witness) j["witness"] = {{"x", witness->x.str()}, {"y", witness->y.str()}, {"z", witness->z.str()}};
    out << j.dump(2) << '\n';
  } else if (witness) {
    out << witness->x << '\n' << witness->y << '\n' << witness->z << '\n';
  } else {
    out << "product-free\n";
  }
  return witness ? kExitFails : kExitOk;
}

int cmd_density(const InputOptions& input, std::optional<std::size_t> horizon_opt,
                std::size_t window, const std::string& format, std::ostream& out) {
  WordSet s = input.load();
  const std::size_t horizon = horizon_opt.value_or(default_horizon(s));
  DensityProfile p = visit_set(s, [&](const auto& v) { return profile(v, horizon); });
  const std::size_t w = std::min(window, horizon);
  if (format == "csv") {
    write_profile_csv(out, p);
    return kExitOk;
  }
  auto asym = upper_asymptotic(p);
  auto banach = upper_banach(p, w);
  Rational ball = visit_set(s, [&](const auto& v) { return ball_density(v, horizon); });
  if (format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < p.horizon(); ++i) {
      rows.push_back({{"n", p.counts[i].n},
                      {"count", p.counts[i].count.str()},
                      {"total", p.counts[i].total.str()},
                      {"density", frac(p.d[i])}});
    }
    json j{{"horizon", horizon},
           {"regular", p.regular},
           {"min_window", w},
           {"profile", rows},
           {"upper_asymptotic", estimate_json(asym)},
           {"upper_banach", estimate_json(banach)},
           {"ball_density", frac(ball)}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "n\tcount/total\tdensity\n";
  for (std::size_t i = 0; i < p.horizon(); ++i) {
    out << p.counts[i].n << '\t' << p.counts[i].count << '/' << p.counts[i].total << '\t'
        << frac(p.d[i]) << " ≈" << to_decimal_string(p.d[i]) << '\n';
  }
  auto line = [&](const char* name, const DensityEstimate& e) {
    out << name << ": " << frac(e.value) << " ≈" << to_decimal_string(e.value)
        << (e.exact ? " (exact, period " + std::to_string(e.period.period) + ")"
                    : " (estimate over [" + std::to_string(e.window.first) + "," +
                          std::to_string(e.window.last) + "])")
        << '\n';
  };
  line("upper asymptotic density", asym);
  line("upper Banach density", banach);
  out << "ball density at " << horizon << ": " << frac(ball) << " ≈" << to_decimal_string(ball)
      << '\n';
  return kExitOk;
}

int cmd_verify_prop(const InputOptions& input, const std::string& ell, std::size_t n,
                    std::ostream& out) {
  WordSet s = input.load();
  auto ls = parse_ell_list(ell);
  PropositionReport r = visit_set(s, [&](const auto& v) { return proposition_check(v, ls, n); });
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back(frac(t));
  json j{{"n", r.n}, {"ls", r.ls}, {"terms", terms}, {"lhs", frac(r.lhs)},
         {"mid", frac(r.mid)}, {"ok", r.ok}};
  out << j.dump(2) << '\n';
  return r.ok ? kExitOk : kExitFails;
}

struct CertifyOptions {
  std::string epsilon = "1/10";
  std::optional<std::size_t> horizon;
  std::size_t min_window = 16;
  std::string trace_path;
  bool extend = false;
};

int cmd_certify(const InputOptions& input, const CertifyOptions& opt, std::ostream& out) {
  WordSet s = input.load();
  const Rational eps = parse_rational(opt.epsilon);
  std::size_t horizon = opt.horizon.value_or(default_horizon(s));
  if (auto* ls = std::get_if<LayeredSet>(&s); ls && opt.extend && horizon > ls->horizon()) {
    s = ls->with_horizon(horizon);
  }
  WindowPolicy policy{opt.min_window};
  Extraction ex = visit_set(s, [&](const auto& v) {
    return extract_lsequence(v, eps, horizon, policy);
  });
  DensityProfile p = visit_set(s, [&](const auto& v) { return profile(v, horizon); });
  CertificateSweep sweep;
  if (!ex.sequence.empty()) sweep = sweep_window_certificates(p, ex.sequence, opt.min_window);

  if (!opt.trace_path.empty()) {
    std::ostringstream trace;
    for (const auto& rec : ex.trace) {
      json j{{"kind", "window"},
             {"stage", rec.stage},
             {"window", window_json(rec.window)},
             {"mean", frac(rec.mean)},
             {"dense", rec.dense},
             {"chosen", rec.chosen ? json(*rec.chosen) : json(nullptr)},
             {"proposition_ok", rec.proposition_ok ? json(*rec.proposition_ok) : json(nullptr)}};
      trace << j.dump() << '\n';
    }
    write_text_file(opt.trace_path, trace.str());
  }

  json terms = json::array(), cumulative = json::array();
  for (const auto& t : ex.sequence.terms) terms.push_back(frac(t));
  for (const auto& c : ex.sequence.cumulative) cumulative.push_back(frac(c));
  json violations = json::array();
  for (const auto& v : sweep.violations) {
    violations.push_back({{"window", window_json(v.window)}, {"mean", frac(v.mean)},
                          {"bound", frac(v.bound)}});
  }
  json prop_violations = json::array();
  for (const auto& v : ex.violations) {
    prop_violations.push_back({{"n", v.n}, {"lhs", frac(v.lhs)}, {"mid", frac(v.mid)}});
  }
  json j{{"epsilon", frac(eps)},
         {"horizon", horizon},
         {"window_policy", {{"order", "start ascending, lengths doubling"},
                            {"min_length", opt.min_window}}},
         {"status", to_string(ex.status)},
         {"ls", ex.sequence.ls},
         {"terms", terms},
         {"cumulative", cumulative},
         {"windows_inspected", ex.trace.size()},
         {"certificate_windows_checked", sweep.windows_checked},
         {"certificate_violations", violations},
         {"proposition_violations", prop_violations}};
  out << j.dump(2) << '\n';
  return sweep.violations.empty() && ex.violations.empty() ? kExitOk : kExitFails;
}

int cmd_phi_levelset(const InputOptions& input, std::optional<std::size_t> horizon_opt,
                     std::ostream& out) {
  WordSet s = input.load();
  const std::size_t horizon = horizon_opt.value_or(default_horizon(s));
  DensityProfile p = visit_set(s, [&](const auto& v) { return profile(v, horizon); });
  PhiLevelSet levels = phi_level_set(p);
  SimpleBoundReport bound = simple_bound_estimate(p);
  auto surd_json = [](const Surd5& x) {
    return json{{"rational", frac(x.rational_part())}, {"sqrt5", frac(x.radical_part())}};
  };
  json j{{"horizon", horizon},
         {"levels", levels.levels},
         {"sum_free", levels.sum_free},
         {"violation", levels.violation ? json(*levels.violation) : json(nullptr)},
         {"simple_bound",
          {{"raw_estimate", frac(bound.raw_estimate)},
           {"prefix_mean", frac(bound.prefix_mean)},
           {"level_count", bound.level_count},
           {"implied", surd_json(bound.implied)},
           {"sum_free_ceiling", surd_json(bound.sum_free_ceiling)},
           {"asymptotic", surd_json(bound.asymptotic)},
           {"consistent", bound.consistent}}}};
  out << j.dump(2) << '\n';
  return levels.sum_free ? kExitOk : kExitFails;
}

struct SearchOptions {
  std::string alphabet = "ab";
  std::size_t horizon = 2;
  std::string objective = "mean";
  std::string budget;
  std::string method = "auto";
  std::string witness_path;
};

int cmd_search(const SearchOptions& opt, Stats& stats, std::ostream& out) {
  std::string budget_text = opt.budget;
  if (budget_text.empty()) {
    const char* env = std::getenv("PRODFREE_BUDGET");
    budget_text = env ? env : "1e8";
  }
  const std::uint64_t budget = parse_budget(budget_text);
  SearchMethod method = SearchMethod::automatic;
  if (opt.method == "exhaustive") method = SearchMethod::exhaustive;
  else if (opt.method == "bnb") method = SearchMethod::branch_and_bound;
  else if (opt.method != "auto") throw UsageError("--method must be auto, exhaustive or bnb");

  auto start = std::chrono::steady_clock::now();
  SearchResult r = max_productfree(Alphabet(opt.alphabet), opt.horizon,
                                   parse_objective(opt.objective), budget, method);
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  stats.data["nodes"] = r.nodes;
  stats.data["seconds"] = elapsed;

  if (!opt.witness_path.empty()) write_text_file(opt.witness_path, set_text(r.best));
  auto words = r.best.words();
  json j{{"alphabet", opt.alphabet},
         {"horizon", r.horizon},
         {"objective_kind", to_string(r.objective)},
         {"objective", frac(r.value)},
         {"method", r.method == SearchMethod::exhaustive ? "exhaustive" : "bnb"},
         {"optimal", r.optimal},
         {"witness", words_json(words)}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

struct ConstructOptions {
  std::string alphabet = "ab";
  std::string gamma = "a";
  std::size_t c = 4;
  std::optional<std::size_t> horizon;
  std::size_t n = 4;
  std::string epsilon = "1/10";
  std::uint64_t seed = 1;
  std::string schedule = "uniform";
  std::string insert_probability = "1";
  std::string output;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

int cmd_construct_odd(const ConstructOptions& opt, std::ostream& out) {
  Alphabet a(opt.alphabet);
  emit(opt.output, dfa_text(odd_occurrence(GammaSpec(a, opt.gamma))), out);
  return kExitOk;
}

int cmd_construct_pathology(const ConstructOptions& opt, std::ostream& out) {
  Alphabet a(opt.alphabet);
  if (opt.c >= 32) throw UsageError("--c is too large");
  std::size_t horizon = opt.horizon.value_or((std::size_t{1} << opt.c) + opt.c);
  emit(opt.output, set_text(counting_pathology(a, opt.c, horizon)), out);
  return kExitOk;
}

int cmd_construct_asymmetric(const ConstructOptions& opt, std::ostream& out) {
  Alphabet a(opt.alphabet);
  Rational eps = parse_rational(opt.epsilon);
  AsymmetricTriple t = asymmetric_triple(a, opt.n, eps);
  const bool disjoint = dfa_is_empty(dfa_intersect(dfa_concat(t.x, t.y), t.z));
  if (!opt.output.empty()) {
    write_text_file(opt.output + ".W.words", set_text(t.w));
    write_text_file(opt.output + ".X.dfa", dfa_text(t.x));
    write_text_file(opt.output + ".Y.dfa", dfa_text(t.y));
    write_text_file(opt.output + ".Z.dfa", dfa_text(t.z));
  }
  json j{{"n", t.n},
         {"epsilon", frac(t.epsilon)},
         {"w_size", t.w.count(t.n)},
         {"w_density", frac(t.w_density)},
         {"within_gap", t.within_gap},
         {"states", {{"X", t.x.num_states()}, {"Y", t.y.num_states()}, {"Z", t.z.num_states()}}},
         {"xy_z_disjoint", disjoint}};
  if (opt.output.empty()) {
    j["X"] = dfa_text(t.x);
    j["Y"] = dfa_text(t.y);
    j["Z"] = dfa_text(t.z);
  }
  out << j.dump(2) << '\n';
  return disjoint ? kExitOk : kExitFails;
}

int cmd_construct_random(const ConstructOptions& opt, std::ostream& out) {
  Alphabet a(opt.alphabet);
  GreedySchedule schedule;
  if (opt.schedule == "odd-first") schedule.order = GreedyOrder::odd_lengths_first;
  else if (opt.schedule != "uniform") throw UsageError("--schedule must be uniform or odd-first");
  schedule.insert_probability = parse_rational(opt.insert_probability);
  std::size_t horizon = opt.horizon.value_or(8);
  emit(opt.output, set_text(greedy_random_productfree(a, horizon, opt.seed, schedule)), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of product-free sets in the free semigroup", "prodfree"};
  app.require_subcommand(1);
  app.fallthrough();
  Stats stats;
  app.add_option("--stats", stats.path, "write nondeterministic run statistics (JSON) here");

  InputOptions input;
  std::string format;
  std::size_t state_cap = kDefaultStateCap;
  std::optional<std::size_t> horizon;
  std::size_t window = kDefaultMinWindow;

  auto* check = app.add_subcommand("check", "decide product-freeness");
  input.add(check);
  format = "text";
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--state-cap", state_cap, "automaton state budget")->check(CLI::PositiveNumber);

  std::string density_format = "csv";
  auto* density = app.add_subcommand("density", "layer densities and density estimates");
  input.add(density);
  density->add_option("--horizon", horizon, "profile horizon H")->check(CLI::PositiveNumber);
  density->add_option("--window", window, "minimum Banach window")->check(CLI::PositiveNumber);
  density->add_option("--format", density_format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  std::string ell;
  std::size_t prop_n = 0;
  auto* verify = app.add_subcommand("verify-prop", "evaluate the chained prefix inequality");
  input.add(verify);
  verify->add_option("--ell", ell, "comma-separated increasing lengths l_1,...,l_k");
  verify->add_option("--n", prop_n, "target length n")->required()->check(CLI::PositiveNumber);

  CertifyOptions certify_opt;
  auto* certify = app.add_subcommand("certify", "extract an l-sequence and check window bounds");
  input.add(certify);
  certify->add_option("--eps", certify_opt.epsilon, "epsilon (rational, e.g. 1/10)");
  certify->add_option("--horizon", certify_opt.horizon, "horizon H")->check(CLI::PositiveNumber);
  certify->add_option("--min-window", certify_opt.min_window, "minimum window length")
      ->check(CLI::PositiveNumber);
  certify->add_option("--trace", certify_opt.trace_path, "JSON-lines trace file");
  certify->add_flag("--extend", certify_opt.extend,
                    "treat a word list as a finite set (empty beyond its horizon)");

  auto* phi_cmd = app.add_subcommand("phi-levelset", "levels with density above phi");
  input.add(phi_cmd);
  phi_cmd->add_option("--horizon", horizon, "horizon H")->check(CLI::PositiveNumber);

  SearchOptions search_opt;
  auto* search = app.add_subcommand("search", "exact maximum-density product-free subset of a ball");
  search->add_option("--alphabet", search_opt.alphabet, "alphabet symbols");
  search->add_option("--horizon", search_opt.horizon, "ball radius N")->check(CLI::PositiveNumber);
  search->add_option("--objective", search_opt.objective, "mean or total")
      ->check(CLI::IsMember({"mean", "total"}));
  search->add_option("--budget", search_opt.budget, "node budget (default $PRODFREE_BUDGET or 1e8)");
  search->add_option("--method", search_opt.method, "auto, exhaustive or bnb");
  search->add_option("--witness", search_opt.witness_path, "write the optimal set here");

  ConstructOptions cons;
  auto* construct = app.add_subcommand("construct", "build named sets");
  construct->require_subcommand(1);
  auto* odd = construct->add_subcommand("odd-occurrence", "odd-occurrence set automaton");
  odd->add_option("--alphabet", cons.alphabet);
  odd->add_option("--gamma", cons.gamma, "symbols counted for parity");
  odd->add_option("-o,--output", cons.output, "output file (default stdout)");
  auto* patho = construct->add_subcommand("pathology", "ball-density pathology set");
  patho->add_option("--alphabet", cons.alphabet);
  patho->add_option("--c", cons.c)->check(CLI::Range(2, 31));
  patho->add_option("--horizon", cons.horizon, "default 2^c + c")->check(CLI::PositiveNumber);
  patho->add_option("-o,--output", cons.output, "output file (default stdout)");
  auto* asym = construct->add_subcommand("asymmetric", "asymmetric X, Y, Z triple");
  asym->add_option("--alphabet", cons.alphabet);
  asym->add_option("--n", cons.n)->check(CLI::PositiveNumber);
  asym->add_option("--eps", cons.epsilon);
  asym->add_option("-o,--output", cons.output, "file prefix for W/X/Y/Z outputs");
  auto* random = construct->add_subcommand("random", "seeded greedy product-free set");
  random->add_option("--alphabet", cons.alphabet);
  random->add_option("--horizon", cons.horizon, "ball radius N (default 8)")->check(CLI::PositiveNumber);
  random->add_option("--seed", cons.seed);
  random->add_option("--schedule", cons.schedule, "uniform or odd-first");
  random->add_option("--insert-probability", cons.insert_probability, "rational in [0,1]");
  random->add_option("-o,--output", cons.output, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    int code = kExitOk;
    if (*check) code = cmd_check(input, format, state_cap, out);
    else if (*density) code = cmd_density(input, horizon, window, density_format, out);
    else if (*verify) code = cmd_verify_prop(input, ell, prop_n, out);
    else if (*certify) code = cmd_certify(input, certify_opt, out);
    else if (*phi_cmd) code = cmd_phi_levelset(input, horizon, out);
    else if (*search) code = cmd_search(search_opt, stats, out);
    else if (*odd) code = cmd_construct_odd(cons, out);
    else if (*patho) code = cmd_construct_pathology(cons, out);
    else if (*asym) code = cmd_construct_asymmetric(cons, out);
    else if (*random) code = cmd_construct_random(cons, out);
    stats.flush();
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace prodfree::cli
