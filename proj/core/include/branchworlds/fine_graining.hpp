#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "branchworlds/game.hpp"

namespace branchworlds {

/// Replaces the coefficient of row `row_index` by `parts`, each inheriting
/// the row's reward. The parts must carry the same p-th power mass as the
/// replaced coefficient: sum(parts.mag_p) == row.mag_p exactly. A single
/// part is a trivial fine-graining (it may only change the phase).
struct FineGrainStep {
  std::size_t row_index = 0;
  std::vector<ExactCoefficient> parts;

  friend bool operator==(const FineGrainStep&, const FineGrainStep&) = default;
};

enum class SplitRule {
  /// Any nonnegative rational parts with the right mass.
  PNorm,
  /// Kent's universe: the parent and every part must be a whole number of
  /// worlds, and the game must have p = 1.
  KentIntegral,
};

/// Applies one step. Zero-mass parts are dropped (they create no worlds).
/// The result's other rows keep their relative order; the parts take the
/// parent's place. Throws Error{IndexOutOfRange}, Error{ConstraintViolated},
/// or Error{MaxNormUnsupported} for max-norm games (use the max-norm split
/// helpers instead).
Game apply_fine_grain(const Game& game, const FineGrainStep& step,
                      SplitRule rule = SplitRule::PNorm);

struct SymmetrizationTrace {
  std::vector<FineGrainStep> steps;
  /// Common denominator d: every output coefficient has mag_p = 1/d.
  BigInt common_denominator;
  /// a'_i: number of output rows carrying reward r_i.
  std::vector<BigInt> multiplicities;
};

struct SymmetrizeOptions {
  /// Largest symmetric game symmetrize() will materialise.
  std::size_t max_rows = 1'000'000;
};

struct Symmetrization {
  Game game;
  SymmetrizationTrace trace;
};

/// Constructively fine-grains `game` into a symmetric game. With
/// mag_p_i = a_i / b_i, d = lcm(b_i) and a'_i = d * mag_p_i, row i is split
/// into a'_i parts of mag_p 1/d and phase 0. Rows are processed left to
/// right, so replaying `trace.steps` on the input reproduces `game`
/// row for row. Throws Error{MaxNormUnsupported} or Error{SizeOverflow}.
Symmetrization symmetrize(const Game& game, const SymmetrizeOptions& options = {});

/// Replays trace steps in order.
Game replay(const Game& game, const std::vector<FineGrainStep>& steps,
            SplitRule rule = SplitRule::PNorm);

/// Value of a symmetric game: the arithmetic mean of its rewards. Throws
/// Error{ConstraintViolated} if the coefficients are not all equal.
Rational symmetric_value(const Game& symmetric_game);

/// Symmetrizes and then values the symmetric game by its reward mean.
Rational value_via_symmetrization(const Game& game, const SymmetrizeOptions& options = {});

// ---------------------------------------------------------------------------
// Max-norm obstruction.
//
// Under the max-norm a split of a row with magnitude m must produce parts
// with magnitudes <= m, at least one equal to m. Such splits never lower the
// largest magnitude attached to a reward, so a game whose reward classes
// have different top magnitudes can never be refined into a symmetric game.
// For max-norm games mag_p holds |alpha| itself.

struct ObstructionOptions {
  /// Maximum number of successive split steps explored.
  std::size_t depth = 3;
  /// Each split produces 2..max_parts parts.
  std::size_t max_parts = 2;
  /// Extra part magnitudes offered besides the parent's own and the game's
  /// existing magnitudes: parent * k / (grid + 1) for k = 1..grid.
  std::size_t grid = 1;
};

struct ObstructionWitness {
  std::size_t depth = 0;
  /// Distinct games (as multisets of (magnitude, reward class)) visited.
  std::size_t refinements_explored = 0;
  std::size_t symmetric_refinements = 0;
  /// For each reward class (indexed by first row carrying that reward in the
  /// input) the maximal magnitude; identical in every explored refinement.
  std::vector<Rational> class_rewards;
  std::vector<Rational> class_max_magnitudes;
  bool invariant_held = true;
  bool obstruction_confirmed = false;
};

/// Exhaustive breadth-first search over max-norm-preserving split trees up to
/// `options.depth` steps. Throws Error{NotMaxMode} or Error{SymmetricInput}.
ObstructionWitness max_norm_obstruction(const Game& game, const ObstructionOptions& options = {});

}  // namespace branchworlds
