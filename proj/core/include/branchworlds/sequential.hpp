#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "branchworlds/game.hpp"
#include "branchworlds/universe.hpp"

namespace branchworlds {

class SequentialGame;

/// A row either pays out or continues into another branching.
struct SequentialRow {
  ExactCoefficient coefficient;
  std::variant<Rational, std::shared_ptr<const SequentialGame>> branch;

  bool is_terminal() const noexcept { return std::holds_alternative<Rational>(branch); }
  const Rational& reward() const { return std::get<Rational>(branch); }
  const SequentialGame& subgame() const {
    return *std::get<std::shared_ptr<const SequentialGame>>(branch);
  }
};

/// A finite tree of games. Immutable; subgames are shared, never mutated.
class SequentialGame {
 public:
  /// Throws Error{EmptyGame} for no rows or a null subgame, and
  /// Error{ZeroTotalMeasure} for a zero coefficient.
  explicit SequentialGame(std::vector<SequentialRow> rows);

  static SequentialRow terminal(ExactCoefficient c, Rational reward);
  static SequentialRow nested(ExactCoefficient c, SequentialGame subgame);

  const std::vector<SequentialRow>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  /// 1 for a simple game.
  std::size_t depth() const;
  bool is_simple() const;

 private:
  std::vector<SequentialRow> rows_;
};

enum class ReductionOrder { LeftToRight, RightToLeft };

struct ReductionOptions {
  ReductionOrder order = ReductionOrder::LeftToRight;
  /// PNorm only: when false, each sibling row is expanded against the
  /// subgame's coefficients (alpha_i beta_k); when true it stays one row
  /// with mag_p(alpha_i) * sum_k mag_p(beta_k). Both have the same value.
  bool coarse = false;
};

/// Flattens a sequential game into a simple game, innermost subgames first.
///  - Kent: (c_i, H) becomes rows (c_i d_j, s_j); other rows are untouched.
///  - ReverseKent: the same, and every other row is multiplied by sum_j d_j.
///  - PNorm: the same, and every other row (c, r) becomes rows (c d_k, r).
/// Kent variants need whole-number coefficients (Error{UniverseMismatch}).
/// The result has exponent 1 for Kent variants and p for PNorm.
Game reduce_sequential(const SequentialGame& g, const UniverseKind& universe,
                       const ReductionOptions& options = {});

/// Value of the flattened game under the universe's rule.
Rational sequential_value(const SequentialGame& g, const UniverseKind& universe);

struct SubstitutionReport {
  bool holds;
  Rational reduced_value;
  /// Value after replacing each top-level subgame by its own standalone value.
  Rational substitution_value;
  /// The simple game used for the substitution route.
  std::optional<Game> substituted;
};

SubstitutionReport check_substitution(const SequentialGame& g, const UniverseKind& universe);

// ---------------------------------------------------------------------------
// Once-or-Twice: measure (c1, c2); on outcome 2 measure again.

struct OnceOrTwice {
  /// Proportions of the world classes (1), (2,1), (2,2); sums to 1.
  std::vector<Rational> proportions;
};

/// c1, c2 are world multiplicities for the Kent variants and mag_p values
/// (|c|^p) for PNorm. Throws Error{NegativeMultiplicity}, Error{ZeroTotal},
/// or Error{UniverseMismatch} for fractional Kent multiplicities.
OnceOrTwice once_or_twice(const Rational& c1, const Rational& c2, const UniverseKind& universe);

/// The Once-or-Twice scenario as a sequential game with rewards e_(1),
/// e_(2,1), e_(2,2) selected by `which` (0, 1 or 2).
SequentialGame once_or_twice_game(const Rational& c1, const Rational& c2, std::size_t which);

// ---------------------------------------------------------------------------
// Dutch book in Kent's universe.

struct DutchBookBets {
  Rational stage_one_outcome_1 = 3;
  Rational stage_one_outcome_2 = -3;
  Rational stage_two_single = -4;   // world (1)
  Rational stage_two_others = 2;    // worlds (2,1), (2,2)

  DutchBookBets scaled(const Rational& factor) const;
};

struct LedgerEntry {
  std::string world_class;
  Rational measure;
  Rational payoff;
};

struct OutcomeLedger {
  std::vector<LedgerEntry> entries;
  /// Expected value of each bet under the credence the agent held when
  /// accepting it: 1/2 per first-stage world, then 1/3 per final world.
  Rational stage_one_expectation;
  Rational stage_two_expectation;

  bool uniform_payoff() const;
};

/// Builds the Once-or-Twice tree for c1 == c2 (else Error{AsymmetricInput})
/// and books both bets in every world class.
OutcomeLedger dutch_book_demo(const Rational& c1, const Rational& c2,
                              const DutchBookBets& bets = {});

/// Single-world coin version: a fair-coin bet followed by a 2/3-tails bet.
OutcomeLedger coin_dutch_book(const DutchBookBets& bets = {});

// ---------------------------------------------------------------------------
// Random sequential games for property sweeps.

struct SequentialSampler {
  std::size_t max_depth = 3;
  std::size_t min_rows = 1;
  std::size_t max_rows = 3;
  double subgame_rate = 0.4;
  /// Whole-number coefficients 1..max_integer (needed by the Kent variants);
  /// otherwise rationals with numerators and denominators up to 9.
  bool integral = true;
  long max_integer = 4;
  long reward_bound = 10;

  SequentialGame draw(std::uint64_t seed, std::uint64_t index) const;
};

struct SubstitutionSweep {
  std::size_t games = 0;
  std::size_t holds = 0;
  /// First failing game, if any.
  std::optional<std::uint64_t> first_failure;
  std::optional<SubstitutionReport> failure_report;
};

SubstitutionSweep substitution_sweep(const UniverseKind& universe, std::size_t games,
                                     std::uint64_t seed, const SequentialSampler& sampler = {});

}  // namespace branchworlds
