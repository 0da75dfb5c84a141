// branchworlds: batch front end for the decision-calculus engine.
//
// Exit codes: 0 success, 2 parse error, 3 domain error, 4 resource bound.
// On failure a JSON object {"error": ..., "message": ...} goes to stderr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "branchworlds/axioms.hpp"
#include "branchworlds/error.hpp"
#include "branchworlds/fine_graining.hpp"
#include "branchworlds/game.hpp"
#include "branchworlds/literal_io.hpp"
#include "branchworlds/norm_consistency.hpp"
#include "branchworlds/sequential.hpp"
#include "branchworlds/world_tree.hpp"

namespace bw = branchworlds;
using bw::Json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;

struct RunConfig {
  std::string input;
  std::string format;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> bound;
  bool approximate = false;
  std::uint64_t max_denominator = 1'000'000;
  std::optional<std::string> p;

  bw::LiteralOptions literal_options() const { return {approximate, max_denominator}; }

  std::uint64_t enumeration_bound() const {
    if (bound) return *bound;
    if (const char* env = std::getenv("BRANCHWORLDS_BOUND")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw bw::Error(bw::ErrorCode::ParseError, "BRANCHWORLDS_BOUND is not an integer");
      }
    }
    return bw::kDefaultEnumerationBound;
  }

  std::optional<bw::Exponent> exponent() const {
    if (!p) return std::nullopt;
    return bw::exponent_from_string(*p);
  }
};

std::string read_input(const std::string& input) {
  if (input.empty()) throw bw::Error(bw::ErrorCode::ParseError, "no input literal or file given");
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) return input;
  if (input == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(input);
  if (!file) throw bw::Error(bw::ErrorCode::ParseError, "cannot read input file \"" + input + "\"");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::string label(const bw::Sequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out + ")";
}

Json rational_list(const std::vector<bw::Rational>& values) {
  Json exact = Json::array();
  for (const auto& v : values) exact.push_back(bw::to_string(v));
  return exact;
}

Json float_list(const std::vector<bw::Rational>& values) {
  Json floats = Json::array();
  for (const auto& v : values) floats.push_back(bw::to_double(v));
  return floats;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::size_t outcome_index(long outcome, const bw::BranchSpec& spec) {
  if (outcome < 1 || static_cast<std::size_t>(outcome) > spec.outcomes()) {
    throw bw::Error(bw::ErrorCode::IndexOutOfRange,
                    "--outcome must be in 1.." + std::to_string(spec.outcomes()));
  }
  return static_cast<std::size_t>(outcome - 1);
}

// ---------------------------------------------------------------------------

Json symmetrization_json(const bw::Symmetrization& s) {
  Json multiplicities = Json::array();
  for (const auto& a : s.trace.multiplicities) multiplicities.push_back(bw::to_string(a));
  return Json{{"common_denominator", bw::to_string(s.trace.common_denominator)},
              {"multiplicities", std::move(multiplicities)},
              {"rows", s.game.size()},
              {"trace", bw::trace_to_json(s.trace.steps)}};
}

int cmd_value(const RunConfig& cfg, bool with_trace, std::size_t max_rows) {
  const bw::Game game = bw::game_from_json(bw::parse_json(read_input(cfg.input)), cfg.exponent(),
                                           cfg.literal_options());
  const bw::Rational v = bw::value(game);
  const auto probabilities = bw::subjective_probabilities(game);
  Json out{{"p", game.exponent().to_string()},
           {"rule", game.exponent().is_max() ? "max_born" : "p_born"},
           {"value", bw::to_string(v)},
           {"value_float", bw::to_double(v)},
           {"probabilities", rational_list(probabilities)},
           {"probabilities_float", float_list(probabilities)}};
  if (with_trace) {
    out["symmetrization"] = symmetrization_json(bw::symmetrize(game, {max_rows}));
  }
  emit(out);
  return 0;
}

int cmd_symmetrize(const RunConfig& cfg, const std::string& replay_path, std::size_t max_rows) {
  const bw::Game game = bw::game_from_json(bw::parse_json(read_input(cfg.input)), cfg.exponent(),
                                           cfg.literal_options());
  if (!replay_path.empty()) {
    const auto steps = bw::trace_from_json(bw::parse_json(read_input(replay_path)));
    const bw::Game replayed = bw::replay(game, steps);
    emit(Json{{"game", bw::to_json(replayed)},
              {"symmetric", bw::is_symmetric(replayed)},
              {"value", bw::to_string(bw::value_p_born(replayed))}});
    return 0;
  }
  const bw::Symmetrization s = bw::symmetrize(game, {max_rows});
  const bw::Rational by_mean = bw::symmetric_value(s.game);
  const bw::Rational born = bw::value_p_born(game);
  Json out = symmetrization_json(s);
  out["symmetric_value"] = bw::to_string(by_mean);
  out["born_value"] = bw::to_string(born);
  out["agree"] = by_mean == born;
  out["game"] = bw::to_json(s.game);
  emit(out);
  return 0;
}

int cmd_obstruction(const RunConfig& cfg, std::size_t depth, std::size_t max_parts) {
  const bw::Game game = bw::game_from_json(bw::parse_json(read_input(cfg.input)),
                                           bw::Exponent::max(), cfg.literal_options());
  bw::ObstructionOptions options;
  options.depth = depth;
  options.max_parts = max_parts;
  const auto w = bw::max_norm_obstruction(game, options);
  emit(Json{{"depth", w.depth},
            {"refinements_explored", w.refinements_explored},
            {"symmetric_refinements", w.symmetric_refinements},
            {"class_rewards", rational_list(w.class_rewards)},
            {"class_max_magnitudes", rational_list(w.class_max_magnitudes)},
            {"invariant_held", w.invariant_held},
            {"obstruction_confirmed", w.obstruction_confirmed}});
  return 0;
}

int cmd_axioms(const RunConfig& cfg, std::size_t trials) {
  const bw::Exponent e = cfg.exponent().value_or(bw::Exponent::finite(2));
  const bw::ValueRule rule{e};
  Json reports = Json::array();
  for (auto axiom : {bw::Axiom::Constancy, bw::Axiom::Dominance, bw::Axiom::Additivity,
                     bw::Axiom::Indifference, bw::Axiom::Homogeneity, bw::Axiom::Continuity}) {
    const auto r = bw::check_axiom(axiom, rule, trials, cfg.seed);
    Json j{{"axiom", bw::axiom_name(axiom)}, {"trials", r.trials}, {"passed", r.passed}};
    if (r.counterexample) {
      Json games = Json::array();
      for (const auto& g : r.counterexample->games) games.push_back(bw::to_json(g));
      j["counterexample"] = Json{{"trial", r.counterexample->trial},
                                 {"detail", r.counterexample->detail},
                                 {"games", std::move(games)}};
    }
    reports.push_back(std::move(j));
  }
  emit(Json{{"rule", rule.name()}, {"seed", cfg.seed}, {"reports", std::move(reports)}});
  return 0;
}

// ---------------------------------------------------------------------------

struct WorldsArgs {
  std::string measures;
  std::size_t n = 0;
  std::string universe = "pnorm";
  long outcome = 1;
  std::string epsilon = "1/10";
  std::size_t runs = 1000;
};

bw::BranchSpec worlds_spec(const RunConfig& cfg, const WorldsArgs& args) {
  if (!cfg.input.empty()) return bw::branch_spec_from_json(bw::parse_json(read_input(cfg.input)));
  if (args.measures.empty() || args.n == 0) {
    throw bw::Error(bw::ErrorCode::ParseError, "give a spec literal or both --measures and --n");
  }
  std::vector<bw::Rational> measures;
  std::stringstream ss(args.measures);
  for (std::string item; std::getline(ss, item, ',');) measures.push_back(bw::parse_rational(item));
  const bw::Rational p = cfg.p ? bw::parse_rational(*cfg.p) : bw::Rational(2);
  return bw::BranchSpec(bw::UniverseKind::parse(args.universe, p), std::move(measures), args.n);
}

int cmd_worlds_enumerate(const RunConfig& cfg, const WorldsArgs& args) {
  const bw::BranchSpec spec = worlds_spec(cfg, args);
  const auto sequences = bw::enumerate_sequences(spec, cfg.enumeration_bound());
  const bw::Rational total = bw::pow(spec.total_trial_measure(), spec.trials);
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& sm : sequences) {
      bw::Rational share = sm.measure / total;
      share.canonicalize();
      rows.push_back(Json{{"sequence", label(sm.sequence)},
                          {"measure", bw::to_string(sm.measure)},
                          {"proportion", bw::to_string(share)},
                          {"proportion_float", bw::to_double(share)}});
    }
    emit(Json{{"spec", bw::to_json(spec)}, {"sequences", std::move(rows)}});
    return 0;
  }
  std::cout << "sequence,measure,proportion,proportion_float\n";
  for (const auto& sm : sequences) {
    bw::Rational share = sm.measure / total;
    share.canonicalize();
    std::cout << '"' << label(sm.sequence) << "\"," << bw::to_string(sm.measure) << ','
              << bw::to_string(share) << ',' << bw::format_double(bw::to_double(share)) << '\n';
  }
  return 0;
}

int cmd_worlds_freq(const RunConfig& cfg, const WorldsArgs& args) {
  const bw::BranchSpec spec = worlds_spec(cfg, args);
  const auto dist = bw::frequency_distribution(spec, outcome_index(args.outcome, spec),
                                               cfg.enumeration_bound());
  if (cfg.format == "json") {
    emit(bw::to_json(dist));
  } else {
    std::cout << bw::distribution_csv(dist);
  }
  return 0;
}

int cmd_worlds_hoeffding(const RunConfig& cfg, const WorldsArgs& args) {
  const bw::BranchSpec spec = worlds_spec(cfg, args);
  const auto report =
      bw::hoeffding_check(spec, outcome_index(args.outcome, spec), bw::parse_rational(args.epsilon));
  emit(bw::to_json(report));
  return 0;
}

int cmd_worlds_sample(const RunConfig& cfg, const WorldsArgs& args) {
  const bw::BranchSpec spec = worlds_spec(cfg, args);
  const auto hist = bw::sample_frequencies(spec, outcome_index(args.outcome, spec), args.runs, cfg.seed);
  if (cfg.format == "json") {
    emit(Json{{"N", hist.trials},
              {"outcome", hist.target_outcome + 1},
              {"runs", hist.runs},
              {"seed", cfg.seed},
              {"mean_frequency", hist.mean_frequency()},
              {"counts", hist.counts}});
    return 0;
  }
  std::cout << "k,k_over_N,count,fraction\n";
  for (std::size_t k = 0; k < hist.counts.size(); ++k) {
    bw::Rational f(static_cast<unsigned long>(k), static_cast<unsigned long>(hist.trials));
    f.canonicalize();
    std::cout << k << ',' << bw::to_string(f) << ',' << hist.counts[k] << ','
              << bw::format_double(static_cast<double>(hist.counts[k]) / static_cast<double>(hist.runs))
              << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

bw::UniverseKind universe_from(const RunConfig& cfg, const std::string& name) {
  return bw::UniverseKind::parse(name, cfg.p ? bw::parse_rational(*cfg.p) : bw::Rational(2));
}

int cmd_oncetwice(const RunConfig& cfg, const std::string& c1, const std::string& c2,
                  const std::string& universe_name) {
  const bw::UniverseKind universe = universe_from(cfg, universe_name);
  const auto result = bw::once_or_twice(bw::parse_rational(c1), bw::parse_rational(c2), universe);
  static const char* const kClasses[] = {"(1)", "(2,1)", "(2,2)"};
  if (cfg.format == "csv") {
    std::cout << "world_class,proportion_exact,proportion_float\n";
    for (std::size_t i = 0; i < 3; ++i) {
      std::cout << '"' << kClasses[i] << "\"," << bw::to_string(result.proportions[i]) << ','
                << bw::format_double(bw::to_double(result.proportions[i])) << '\n';
    }
    return 0;
  }
  Json classes = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    classes.push_back(Json{{"world_class", kClasses[i]},
                           {"proportion", bw::to_string(result.proportions[i])},
                           {"proportion_float", bw::to_double(result.proportions[i])}});
  }
  emit(Json{{"universe", universe.name()}, {"classes", std::move(classes)}});
  return 0;
}

int cmd_reduce(const RunConfig& cfg, const std::string& universe_name, bool coarse) {
  const bw::UniverseKind universe = universe_from(cfg, universe_name);
  const bw::SequentialGame g =
      bw::sequential_from_json(bw::parse_json(read_input(cfg.input)), cfg.literal_options());
  bw::ReductionOptions options;
  options.coarse = coarse;
  const bw::Game flat = bw::reduce_sequential(g, universe, options);
  const bw::Rational v = bw::value_p_born(flat);
  emit(Json{{"universe", universe.name()},
            {"game", bw::to_json(flat)},
            {"value", bw::to_string(v)},
            {"value_float", bw::to_double(v)}});
  return 0;
}

Json substitution_json(const bw::SubstitutionReport& r) {
  Json j{{"holds", r.holds},
         {"reduced_value", bw::to_string(r.reduced_value)},
         {"substitution_value", bw::to_string(r.substitution_value)}};
  if (r.substituted) j["substituted_game"] = bw::to_json(*r.substituted);
  return j;
}

int cmd_substitution(const RunConfig& cfg, const std::string& universe_name, std::size_t random_games) {
  const bw::UniverseKind universe = universe_from(cfg, universe_name);
  if (random_games > 0) {
    const auto sweep = bw::substitution_sweep(universe, random_games, cfg.seed);
    Json out{{"universe", universe.name()},
             {"seed", cfg.seed},
             {"games", sweep.games},
             {"holds", sweep.holds}};
    if (sweep.first_failure) {
      bw::SequentialSampler sampler;
      out["witness"] = Json{{"index", *sweep.first_failure},
                            {"game", bw::to_json(sampler.draw(cfg.seed, *sweep.first_failure))},
                            {"report", substitution_json(*sweep.failure_report)}};
    }
    emit(out);
    return 0;
  }
  const bw::SequentialGame g =
      bw::sequential_from_json(bw::parse_json(read_input(cfg.input)), cfg.literal_options());
  Json out = substitution_json(bw::check_substitution(g, universe));
  out["universe"] = universe.name();
  emit(out);
  return 0;
}

int cmd_dutchbook(const RunConfig& cfg, const std::string& c1, const std::string& c2,
                  const std::string& scale, bool coin) {
  const bw::DutchBookBets bets = bw::DutchBookBets{}.scaled(bw::parse_rational(scale));
  const bw::OutcomeLedger ledger =
      coin ? bw::coin_dutch_book(bets)
           : bw::dutch_book_demo(bw::parse_rational(c1), bw::parse_rational(c2), bets);
  if (cfg.format == "json") {
    emit(bw::to_json(ledger));
  } else {
    std::cout << bw::ledger_csv(ledger);
  }
  return 0;
}

Json composition_json(const bw::CompositionResult& r) {
  return Json{{"combined", r.combined}, {"composed", r.composed}, {"residual", r.residual}, {"passed", r.passed}};
}

Json norm_report_json(const bw::NormCheckReport& r) {
  Json out{{"norm", r.name},
           {"composition", Json{{"pairs", r.composition.pairs},
                                {"worst_relative", r.composition.worst_relative},
                                {"passed", r.composition.passed}}},
           {"symmetries", Json{{"permutation_invariant", r.symmetries.permutation_invariant},
                               {"homogeneous", r.symmetries.homogeneous},
                               {"worst_relative", r.symmetries.worst_relative}}},
           {"f_table", Json{{"f", std::vector<double>(r.f.direct.begin(), r.f.direct.begin() + 10)},
                            {"recursive_agrees", r.f.agree},
                            {"worst_relative_gap", r.f.worst_relative_gap}}},
           {"degenerate", r.degenerate},
           {"is_p_norm", r.is_p_norm}};
  if (r.documented_witness) out["witness"] = composition_json(*r.documented_witness);
  if (r.estimate) {
    out["estimate"] = Json{{"p", r.estimate->p},
                           {"spread", r.estimate->spread},
                           {"per_n", r.estimate->estimates},
                           {"multiplicative", r.estimate->multiplicative},
                           {"monotone", r.estimate->monotone},
                           {"passed", r.estimate->passed}};
  } else {
    out["estimate"] = Json{{"error", "DegenerateNorm"}};
  }
  if (r.rational_vectors) {
    out["rational_vectors"] = Json{{"vectors", r.rational_vectors->vectors},
                                   {"worst_relative", r.rational_vectors->worst_relative},
                                   {"worst_rational_step", r.rational_vectors->worst_rational_step},
                                   {"passed", r.rational_vectors->passed}};
  }
  return out;
}

int cmd_normcheck(const std::string& name) {
  if (name == "all") {
    Json reports = Json::array();
    for (const auto& n : bw::registered_norms()) {
      reports.push_back(norm_report_json(bw::run_norm_check(bw::norm_by_name(n))));
    }
    emit(reports);
    return 0;
  }
  emit(norm_report_json(bw::run_norm_check(bw::norm_by_name(name))));
  return 0;
}

int report_failure(const std::string& kind, const std::string& message, int code) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"branchworlds: value branching games, fine-grain them, and simulate world trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "branchworlds 0.1.0");

  RunConfig cfg;
  std::string p_text;
  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", cfg.input, "JSON literal, file path, or - for stdin");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--p", p_text, "Exponent p (a rational >= 1, or max)");
    sub->add_option("--seed", cfg.seed, "Seed for sampling (default 0)");
  };
  auto add_approx = [&](CLI::App* sub) {
    sub->add_flag("--approx", cfg.approximate, "Accept floats and rationalize them");
    sub->add_option("--max-den", cfg.max_denominator, "Denominator bound in approximate mode")
        ->check(CLI::PositiveNumber);
  };

  bool with_trace = false;
  std::size_t max_rows = 1'000'000;
  auto* value = app.add_subcommand("value", "Value a game and list its subjective probabilities");
  add_common(value, true);
  add_approx(value);
  value->add_flag("--trace", with_trace, "Include the symmetrization trace");
  value->add_option("--max-rows", max_rows, "Row bound for symmetrization");

  std::string replay_path;
  auto* symmetrize = app.add_subcommand("symmetrize", "Fine-grain a game into a symmetric game");
  add_common(symmetrize, true);
  add_approx(symmetrize);
  symmetrize->add_option("--max-rows", max_rows, "Row bound for the symmetric game");
  symmetrize->add_option("--replay", replay_path, "Replay a trace (literal or file) instead");

  std::size_t depth = 3;
  std::size_t max_parts = 2;
  auto* obstruction = app.add_subcommand("obstruction", "Search max-norm refinements for a symmetric game");
  add_common(obstruction, true);
  obstruction->add_option("--depth", depth, "Split steps to explore");
  obstruction->add_option("--parts", max_parts, "Maximum parts per split");

  std::size_t trials = 200;
  auto* axioms = app.add_subcommand("axioms", "Check the rationality axioms for a value rule");
  add_common(axioms, false);
  axioms->add_option("--trials", trials, "Sampled instances per axiom");

  WorldsArgs wargs;
  auto* worlds = app.add_subcommand("worlds", "Repeated branchings: sequences, frequencies, bounds");
  worlds->require_subcommand(1);
  auto add_worlds = [&](CLI::App* sub) {
    add_common(sub, true);
    sub->add_option("--measures", wargs.measures, "Comma-separated per-trial measures, e.g. 1,2");
    sub->add_option("--n,-N", wargs.n, "Number of repetitions");
    sub->add_option("--universe", wargs.universe, "kent, reverse-kent or pnorm");
    sub->add_option("--outcome", wargs.outcome, "Target outcome (1-based)");
    sub->add_option("--bound", cfg.bound, "Enumeration bound (overrides BRANCHWORLDS_BOUND)");
  };
  auto* w_enum = worlds->add_subcommand("enumerate", "List every outcome sequence with its measure");
  add_worlds(w_enum);
  auto* w_freq = worlds->add_subcommand("freq", "Frequency distribution of the target outcome");
  add_worlds(w_freq);
  auto* w_hoeff = worlds->add_subcommand("hoeffding", "Exact deviation mass against the Hoeffding bound");
  add_worlds(w_hoeff);
  w_hoeff->add_option("--epsilon", wargs.epsilon, "Deviation threshold (exact)");
  auto* w_sample = worlds->add_subcommand("sample", "Monte Carlo histogram of the frequency");
  add_worlds(w_sample);
  w_sample->add_option("--runs", wargs.runs, "Number of simulated histories");

  std::string c1, c2, universe_name = "kent";
  auto* oncetwice = app.add_subcommand("oncetwice", "Once-or-Twice world proportions");
  add_common(oncetwice, false);
  oncetwice->add_option("c1", c1, "First coefficient")->required();
  oncetwice->add_option("c2", c2, "Second coefficient")->required();
  oncetwice->add_option("--universe", universe_name, "kent, reverse-kent or pnorm");

  bool coarse = false;
  auto* reduce = app.add_subcommand("reduce", "Flatten a sequential game");
  add_common(reduce, true);
  add_approx(reduce);
  reduce->add_option("--universe", universe_name, "kent, reverse-kent or pnorm");
  reduce->add_flag("--coarse", coarse, "Keep sibling rows coarse-grained (pnorm)");

  std::size_t random_games = 0;
  auto* substitution = app.add_subcommand("substitution", "Compare reduction with substitution");
  add_common(substitution, true);
  add_approx(substitution);
  substitution->add_option("--universe", universe_name, "kent, reverse-kent or pnorm");
  substitution->add_option("--random", random_games, "Sweep this many seeded random games instead");

  std::string scale = "1";
  bool coin = false;
  auto* dutchbook = app.add_subcommand("dutchbook", "World-by-world ledger of the two-bet Dutch book");
  add_common(dutchbook, false);
  dutchbook->add_option("c1", c1, "First multiplicity");
  dutchbook->add_option("c2", c2, "Second multiplicity");
  dutchbook->add_option("--scale", scale, "Multiply every stake");
  dutchbook->add_flag("--coin", coin, "Single-world coin version");

  std::string norm_name;
  auto* normcheck = app.add_subcommand("normcheck", "Test a norm against the p-norm characterization");
  normcheck->add_option("--norm", norm_name, "p1, p1.5, p2, p3, max, weighted, p2-perturbed, or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }
  if (!p_text.empty()) cfg.p = p_text;

  try {
    if (*value) return cmd_value(cfg, with_trace, max_rows);
    if (*symmetrize) return cmd_symmetrize(cfg, replay_path, max_rows);
    if (*obstruction) return cmd_obstruction(cfg, depth, max_parts);
    if (*axioms) return cmd_axioms(cfg, trials);
    if (*w_enum) {
      if (cfg.format.empty()) cfg.format = "csv";
      return cmd_worlds_enumerate(cfg, wargs);
    }
    if (*w_freq) {
      if (cfg.format.empty()) cfg.format = "csv";
      return cmd_worlds_freq(cfg, wargs);
    }
    if (*w_hoeff) return cmd_worlds_hoeffding(cfg, wargs);
    if (*w_sample) {
      if (cfg.format.empty()) cfg.format = "csv";
      return cmd_worlds_sample(cfg, wargs);
    }
    if (*oncetwice) return cmd_oncetwice(cfg, c1, c2, universe_name);
    if (*reduce) return cmd_reduce(cfg, universe_name, coarse);
    if (*substitution) return cmd_substitution(cfg, universe_name, random_games);
    if (*dutchbook) {
      if (cfg.format.empty()) cfg.format = "csv";
      if (!coin && (c1.empty() || c2.empty())) {
        return report_failure("ParseError", "dutchbook needs c1 and c2 (or --coin)", kExitParse);
      }
      return cmd_dutchbook(cfg, c1, c2, scale, coin);
    }
    if (*normcheck) return cmd_normcheck(norm_name);
  } catch (const bw::Error& e) {
    const int code = e.category() == bw::ErrorCategory::Parse    ? kExitParse
                     : e.category() == bw::ErrorCategory::Resource ? kExitResource
                                                                   : kExitDomain;
    return report_failure(std::string(bw::error_name(e.code())), e.what(), code);
  }
  return 0;
}
