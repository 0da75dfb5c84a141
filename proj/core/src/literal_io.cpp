#include "branchworlds/literal_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "branchworlds/error.hpp"

namespace branchworlds {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    parse_fail(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return std::to_string(x);
  return std::string(buf, end);
}

Rational rational_from_json(const Json& j, const LiteralOptions& options) {
  Rational q;
  if (j.is_string()) {
    q = parse_rational(j.get<std::string>());
  } else if (j.is_number_integer()) {
    q = Rational(std::to_string(j.get<long long>()), 10);
  } else if (j.is_number_float() && options.approximate) {
    q = from_double(j.get<double>());
  } else {
    parse_fail("expected an exact number as a string, got " + j.dump());
  }
  if (options.approximate && q.get_den() > BigInt(std::to_string(options.max_denominator), 10)) {
    q = approximate(to_double(q), options.max_denominator);
  }
  return q;
}

Json to_json(const Rational& q) { return to_string(q); }

Exponent exponent_from_string(const std::string& text) {
  if (text == "max" || text == "inf") return Exponent::max();
  return Exponent::finite(parse_rational(text));
}

ExactCoefficient coefficient_from_json(const Json& j, const std::optional<Exponent>& exponent,
                                       const LiteralOptions& options) {
  if (!j.is_object()) parse_fail("coefficient must be an object");
  Rational phase = j.contains("phase") ? rational_from_json(j.at("phase")) : Rational(0);
  if (j.contains("magp")) return ExactCoefficient(rational_from_json(j.at("magp"), options), phase);
  if (j.contains("amp")) {
    if (!options.approximate) parse_fail("\"amp\" coefficients need approximate mode");
    const double amp = j.at("amp").is_string() ? to_double(parse_rational(j.at("amp").get<std::string>()))
                                               : j.at("amp").get<double>();
    const double p = (!exponent || exponent->is_max()) ? 1.0 : to_double(exponent->p());
    return ExactCoefficient(approximate(std::pow(std::fabs(amp), p), options.max_denominator), phase);
  }
  parse_fail("coefficient needs \"magp\"");
}

Json to_json(const ExactCoefficient& c) {
  return Json{{"magp", to_string(c.mag_p())}, {"phase", to_string(c.phase())}};
}

Game game_from_json(const Json& j, const std::optional<Exponent>& exponent_override,
                    const LiteralOptions& options) {
  try {
    std::optional<Exponent> exponent = exponent_override;
    if (!exponent) {
      const Json& p = field(j, "p");
      exponent = exponent_from_string(p.is_string() ? p.get<std::string>() : p.dump());
    }
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) parse_fail("\"rows\" must be an array");
    std::vector<GameRow> parsed;
    for (const auto& row : rows) {
      ExactCoefficient c = coefficient_from_json(row, exponent, options);
      parsed.push_back({std::move(c), rational_from_json(field(row, "reward"), options)});
    }
    return Game(std::move(parsed), *exponent);
  } catch (const Json::exception& e) {
    parse_fail(std::string("malformed game literal: ") + e.what());
  }
}

Json to_json(const Game& game) {
  Json rows = Json::array();
  for (const auto& row : game.rows()) {
    Json r = to_json(row.coefficient);
    r["reward"] = to_string(row.reward);
    rows.push_back(std::move(r));
  }
  return Json{{"p", game.exponent().to_string()}, {"rows", std::move(rows)}};
}

std::vector<FineGrainStep> trace_from_json(const Json& j) {
  try {
    const Json& list = (j.is_object() && j.contains("trace")) ? j.at("trace") : j;
    if (!list.is_array()) parse_fail("trace must be an array of steps");
    std::vector<FineGrainStep> steps;
    for (const auto& s : list) {
      FineGrainStep step;
      step.row_index = index_from_json(field(s, "row"), "\"row\"");
      for (const auto& part : field(s, "parts")) {
        step.parts.push_back(coefficient_from_json(part, std::nullopt));
      }
      steps.push_back(std::move(step));
    }
    return steps;
  } catch (const Json::exception& e) {
    parse_fail(std::string("malformed trace: ") + e.what());
  }
}

Json trace_to_json(const std::vector<FineGrainStep>& steps) {
  Json list = Json::array();
  for (const auto& step : steps) {
    Json parts = Json::array();
    for (const auto& part : step.parts) parts.push_back(to_json(part));
    list.push_back(Json{{"row", step.row_index}, {"parts", std::move(parts)}});
  }
  return list;
}

SequentialGame sequential_from_json(const Json& j, const LiteralOptions& options) {
  try {
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) parse_fail("\"rows\" must be an array");
    std::vector<SequentialRow> parsed;
    for (const auto& row : rows) {
      ExactCoefficient c = coefficient_from_json(field(row, "coeff"), std::nullopt, options);
      if (row.contains("terminal") == row.contains("subgame")) {
        parse_fail("each row needs exactly one of \"terminal\" or \"subgame\"");
      }
      if (row.contains("terminal")) {
        parsed.push_back(SequentialGame::terminal(std::move(c), rational_from_json(row.at("terminal"), options)));
      } else {
        parsed.push_back(SequentialGame::nested(std::move(c), sequential_from_json(row.at("subgame"), options)));
      }
    }
    return SequentialGame(std::move(parsed));
  } catch (const Json::exception& e) {
    parse_fail(std::string("malformed sequential game: ") + e.what());
  }
}

Json to_json(const SequentialGame& g) {
  Json rows = Json::array();
  for (const auto& row : g.rows()) {
    Json r{{"coeff", to_json(row.coefficient)}};
    if (row.is_terminal()) {
      r["terminal"] = to_string(row.reward());
    } else {
      r["subgame"] = to_json(row.subgame());
    }
    rows.push_back(std::move(r));
  }
  return Json{{"rows", std::move(rows)}};
}

BranchSpec branch_spec_from_json(const Json& j) {
  try {
    Rational p = 2;
    if (j.contains("p")) p = rational_from_json(j.at("p"));
    const UniverseKind universe =
        UniverseKind::parse(j.contains("universe") ? j.at("universe").get<std::string>() : "pnorm", p);
    std::vector<Rational> measures;
    for (const auto& m : field(j, "measures")) measures.push_back(rational_from_json(m));
    const std::size_t n = index_from_json(field(j, "N"), "\"N\"");
    return BranchSpec(universe, std::move(measures), n);
  } catch (const Json::exception& e) {
    parse_fail(std::string("malformed branch spec: ") + e.what());
  }
}

Json to_json(const BranchSpec& spec) {
  Json measures = Json::array();
  for (const auto& m : spec.trial_measures) measures.push_back(to_string(m));
  std::string universe = spec.universe.kind() == UniverseKind::Kind::PNorm ? "pnorm" : spec.universe.name();
  Json j{{"universe", universe}, {"measures", std::move(measures)}, {"N", spec.trials}};
  if (spec.universe.kind() == UniverseKind::Kind::PNorm) j["p"] = to_string(spec.universe.p());
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string distribution_csv(const FrequencyDistribution& dist) {
  std::ostringstream out;
  out << "k,k_over_N,mass_exact,mass_float\n";
  for (std::size_t k = 0; k < dist.masses.size(); ++k) {
    Rational f(static_cast<unsigned long>(k), static_cast<unsigned long>(dist.trials));
    f.canonicalize();
    out << k << ',' << to_string(f) << ',' << to_string(dist.masses[k]) << ','
        << format_double(to_double(dist.masses[k])) << '\n';
  }
  return out.str();
}

Json to_json(const FrequencyDistribution& dist) {
  Json masses = Json::array();
  for (std::size_t k = 0; k < dist.masses.size(); ++k) {
    masses.push_back(Json{{"k", k},
                          {"mass", to_string(dist.masses[k])},
                          {"mass_float", to_double(dist.masses[k])}});
  }
  return Json{{"N", dist.trials},
              {"outcome", dist.target_outcome + 1},
              {"verified_by_enumeration", dist.verified_by_enumeration},
              {"masses", std::move(masses)}};
}

Json to_json(const HoeffdingReport& report) {
  return Json{{"N", report.trials},
              {"epsilon", to_string(report.epsilon)},
              {"tail_mass", to_string(report.tail_mass)},
              {"bound", report.bound},
              {"holds", report.holds}};
}

std::string ledger_csv(const OutcomeLedger& ledger) {
  std::ostringstream out;
  out << "world_class,measure,payoff\n";
  for (const auto& e : ledger.entries) {
    out << '"' << e.world_class << "\"," << to_string(e.measure) << ',' << to_string(e.payoff) << '\n';
  }
  return out.str();
}

Json to_json(const OutcomeLedger& ledger) {
  Json entries = Json::array();
  for (const auto& e : ledger.entries) {
    entries.push_back(Json{{"world_class", e.world_class},
                           {"measure", to_string(e.measure)},
                           {"payoff", to_string(e.payoff)}});
  }
  return Json{{"entries", std::move(entries)},
              {"stage_one_expectation", to_string(ledger.stage_one_expectation)},
              {"stage_two_expectation", to_string(ledger.stage_two_expectation)},
              {"uniform_payoff", ledger.uniform_payoff()}};
}

}  // namespace branchworlds
