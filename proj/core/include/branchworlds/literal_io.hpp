#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "branchworlds/fine_graining.hpp"
#include "branchworlds/game.hpp"
#include "branchworlds/sequential.hpp"
#include "branchworlds/world_tree.hpp"

// JSON and CSV forms shared by the library and the command-line tool.
// Exact numbers are always strings ("a/b", "a", or a finite decimal);
// floats appear only as companion fields.
//
//   game:        {"p": "2" | "max", "rows": [{"magp": "1", "phase": "0", "reward": "3/2"}, ...]}
//   trace:       [{"row": 1, "parts": [{"magp": "2", "phase": "0"}, ...]}, ...]
//   sequential:  {"p": "2", "rows": [{"coeff": {"magp": "1"}, "terminal": "6"},
//                                    {"coeff": {"magp": "1"}, "subgame": {"rows": [...]}}]}
//   branch spec: {"universe": "kent" | "reverse-kent" | "pnorm", "p": "2",
//                 "measures": ["1", "2"], "N": 3}

namespace branchworlds {

using Json = nlohmann::json;

struct LiteralOptions {
  /// Accept JSON floats and {"amp": |alpha|} coefficients, and replace every
  /// magnitude and reward by its best rational approximation with
  /// denominator <= max_denominator.
  bool approximate = false;
  std::uint64_t max_denominator = 1'000'000;
};

/// Throws Error{ParseError} for anything that is not an exact number.
Rational rational_from_json(const Json& j, const LiteralOptions& options = {});
Json to_json(const Rational& q);

Exponent exponent_from_string(const std::string& text);

ExactCoefficient coefficient_from_json(const Json& j, const std::optional<Exponent>& exponent,
                                       const LiteralOptions& options = {});
Json to_json(const ExactCoefficient& c);

/// `exponent_override` replaces the literal's "p" (which is then optional).
Game game_from_json(const Json& j, const std::optional<Exponent>& exponent_override = std::nullopt,
                    const LiteralOptions& options = {});
Json to_json(const Game& game);

std::vector<FineGrainStep> trace_from_json(const Json& j);
Json trace_to_json(const std::vector<FineGrainStep>& steps);

SequentialGame sequential_from_json(const Json& j, const LiteralOptions& options = {});
Json to_json(const SequentialGame& g);

BranchSpec branch_spec_from_json(const Json& j);
Json to_json(const BranchSpec& spec);

/// Parses JSON text, mapping syntax errors to Error{ParseError}.
Json parse_json(const std::string& text);

/// Columns: k, k_over_N, mass_exact, mass_float.
std::string distribution_csv(const FrequencyDistribution& dist);
Json to_json(const FrequencyDistribution& dist);

/// {"N", "epsilon", "tail_mass", "bound", "holds"}.
Json to_json(const HoeffdingReport& report);

/// Columns: world_class, measure, payoff.
std::string ledger_csv(const OutcomeLedger& ledger);
Json to_json(const OutcomeLedger& ledger);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace branchworlds
