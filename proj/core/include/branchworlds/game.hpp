#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "branchworlds/rational.hpp"

namespace branchworlds {

/// A branch coefficient alpha, stored as |alpha|^p for the game's ambient
/// exponent p together with its phase as a fraction of a full turn.
///
/// Storing the p-th power keeps every fine-graining constraint an exact
/// rational sum: (|a|^p + |b|^p)^(1/p) = |c| becomes mag_p(a) + mag_p(b) = mag_p(c).
class ExactCoefficient {
 public:
  /// Throws Error{InvalidCoefficient} if mag_p < 0. Phase is wrapped into [0,1).
  explicit ExactCoefficient(Rational mag_p, Rational phase = 0);

  const Rational& mag_p() const noexcept { return mag_p_; }
  const Rational& phase() const noexcept { return phase_; }

  /// Product of two coefficients: magnitudes multiply, phases add.
  ExactCoefficient operator*(const ExactCoefficient& other) const;

  friend bool operator==(const ExactCoefficient&, const ExactCoefficient&) = default;

 private:
  Rational mag_p_;
  Rational phase_;
};

/// The ambient exponent of a game: a rational p >= 1, or the max-norm.
class Exponent {
 public:
  /// Throws Error{InvalidExponent} unless p >= 1.
  static Exponent finite(Rational p);
  static Exponent max() { return Exponent(); }

  bool is_max() const noexcept { return is_max_; }
  /// Only meaningful when !is_max().
  const Rational& p() const noexcept { return p_; }

  std::string to_string() const;
  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent() : p_(0), is_max_(true) {}
  explicit Exponent(Rational p) : p_(std::move(p)), is_max_(false) {}

  Rational p_;
  bool is_max_;
};

struct GameRow {
  ExactCoefficient coefficient;
  Rational reward;

  friend bool operator==(const GameRow&, const GameRow&) = default;
};

/// The n x 2 matrix (c, r): one row per outcome.
///
/// Invariants, enforced on construction: at least one row and every
/// coefficient strictly positive. A zero coefficient means no worlds exist
/// for that outcome, so such rows are rejected rather than carried around.
class Game {
 public:
  /// Throws Error{EmptyGame} or Error{ZeroTotalMeasure}.
  Game(std::vector<GameRow> rows, Exponent exponent);

  const std::vector<GameRow>& rows() const noexcept { return rows_; }
  const Exponent& exponent() const noexcept { return exponent_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const GameRow& operator[](std::size_t i) const { return rows_[i]; }

  /// Sum of mag_p over all rows, i.e. ||alpha||_p^p.
  Rational total_measure() const;

  std::vector<Rational> rewards() const;

  /// Same coefficients, new reward vector (length must match).
  Game with_rewards(std::span<const Rational> rewards) const;
  Game with_exponent(Exponent exponent) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::vector<GameRow> rows_;
  Exponent exponent_;
};

/// Convenience: builds a game from magnitudes and rewards with zero phases.
Game make_game(std::span<const Rational> mag_p, std::span<const Rational> rewards,
               Exponent exponent);

/// p-Born value (sum_i mag_p_i r_i) / (sum_i mag_p_i). Phases play no role.
/// Throws Error{MaxNormUnsupported} for max-norm games.
Rational value_p_born(const Game& game);

/// max-Born value: the mean reward over the rows whose magnitude is maximal.
/// Ties are decided by exact equality of mag_p. Throws Error{NotMaxMode} for
/// finite-exponent games.
Rational value_max_born(const Game& game);

/// Dispatches on the game's exponent.
Rational value(const Game& game);

/// Values of the elementary games (c, e_i) for i = 1..n.
std::vector<Rational> subjective_probabilities(const Game& game);

/// Multiplies every mag_p by `factor` (> 0, else Error{NonpositiveFactor}).
Game scale_coefficients(const Game& game, const Rational& factor);

/// Floating-point p-Born evaluation on raw magnitudes; the regression
/// companion of value_p_born.
double value_p_born_double(std::span<const double> mag_p, std::span<const double> rewards);

/// True when all coefficients (magnitude and phase) are identical.
bool is_symmetric(const Game& game);

}  // namespace branchworlds
