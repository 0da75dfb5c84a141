#include "branchworlds/game.hpp"

#include <utility>

#include "branchworlds/error.hpp"

namespace branchworlds {

ExactCoefficient::ExactCoefficient(Rational mag_p, Rational phase)
    : mag_p_(std::move(mag_p)), phase_(wrap_unit(phase)) {
  mag_p_.canonicalize();
  if (sgn(mag_p_) < 0) {
    throw Error(ErrorCode::InvalidCoefficient, "coefficient magnitude must be nonnegative, got " +
                                                   to_string(mag_p_));
  }
}

ExactCoefficient ExactCoefficient::operator*(const ExactCoefficient& other) const {
  return ExactCoefficient(mag_p_ * other.mag_p_, phase_ + other.phase_);
}

Exponent Exponent::finite(Rational p) {
  p.canonicalize();
  if (p < 1) {
    throw Error(ErrorCode::InvalidExponent, "exponent p must be >= 1, got " + branchworlds::to_string(p));
  }
  return Exponent(std::move(p));
}

std::string Exponent::to_string() const {
  return is_max_ ? std::string("max") : branchworlds::to_string(p_);
}

Game::Game(std::vector<GameRow> rows, Exponent exponent)
    : rows_(std::move(rows)), exponent_(std::move(exponent)) {
  if (rows_.empty()) throw Error(ErrorCode::EmptyGame, "a game needs at least one row");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (sgn(rows_[i].coefficient.mag_p()) == 0) {
      throw Error(ErrorCode::ZeroTotalMeasure,
                  "row " + std::to_string(i) + " has a zero coefficient (no worlds exist)");
    }
  }
}

Rational Game::total_measure() const {
  Rational total = 0;
  for (const auto& row : rows_) total += row.coefficient.mag_p();
  return total;
}

std::vector<Rational> Game::rewards() const {
  std::vector<Rational> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.reward);
  return out;
}

Game Game::with_rewards(std::span<const Rational> rewards) const {
  if (rewards.size() != rows_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "reward vector length does not match the game");
  }
  std::vector<GameRow> rows = rows_;
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].reward = rewards[i];
  return Game(std::move(rows), exponent_);
}

Game Game::with_exponent(Exponent exponent) const { return Game(rows_, std::move(exponent)); }

Game make_game(std::span<const Rational> mag_p, std::span<const Rational> rewards,
               Exponent exponent) {
  if (mag_p.size() != rewards.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "coefficient and reward vectors differ in length");
  }
  std::vector<GameRow> rows;
  rows.reserve(mag_p.size());
  for (std::size_t i = 0; i < mag_p.size(); ++i) {
    rows.push_back({ExactCoefficient(mag_p[i]), rewards[i]});
  }
  return Game(std::move(rows), std::move(exponent));
}

Rational value_p_born(const Game& game) {
  if (game.exponent().is_max()) {
    throw Error(ErrorCode::MaxNormUnsupported, "p-Born value requested for a max-norm game");
  }
  Rational weighted = 0;
  Rational total = 0;
  for (const auto& row : game.rows()) {
    weighted += row.coefficient.mag_p() * row.reward;
    total += row.coefficient.mag_p();
  }
  if (total == 0) throw Error(ErrorCode::ZeroTotalMeasure, "all coefficients are zero");
  Rational v = weighted / total;
  v.canonicalize();
  return v;
}

Rational value_max_born(const Game& game) {
  if (!game.exponent().is_max()) {
    throw Error(ErrorCode::NotMaxMode, "max-Born value requested for a game with p = " +
                                           game.exponent().to_string());
  }
  const Rational* top = &game[0].coefficient.mag_p();
  for (const auto& row : game.rows()) {
    if (row.coefficient.mag_p() > *top) top = &row.coefficient.mag_p();
  }
  Rational sum = 0;
  long count = 0;
  for (const auto& row : game.rows()) {
    if (row.coefficient.mag_p() == *top) {
      sum += row.reward;
      ++count;
    }
  }
  Rational v = sum / Rational(count);
  v.canonicalize();
  return v;
}

Rational value(const Game& game) {
  return game.exponent().is_max() ? value_max_born(game) : value_p_born(game);
}

std::vector<Rational> subjective_probabilities(const Game& game) {
  std::vector<Rational> probabilities;
  probabilities.reserve(game.size());
  std::vector<Rational> elementary(game.size(), Rational(0));
  for (std::size_t i = 0; i < game.size(); ++i) {
    elementary[i] = 1;
    probabilities.push_back(value(game.with_rewards(elementary)));
    elementary[i] = 0;
  }
  return probabilities;
}

Game scale_coefficients(const Game& game, const Rational& factor) {
  if (sgn(factor) <= 0) {
    throw Error(ErrorCode::NonpositiveFactor, "scale factor must be positive, got " + to_string(factor));
  }
  std::vector<GameRow> rows;
  rows.reserve(game.size());
  for (const auto& row : game.rows()) {
    rows.push_back({ExactCoefficient(row.coefficient.mag_p() * factor, row.coefficient.phase()),
                    row.reward});
  }
  return Game(std::move(rows), game.exponent());
}

double value_p_born_double(std::span<const double> mag_p, std::span<const double> rewards) {
  if (mag_p.empty()) throw Error(ErrorCode::EmptyGame, "a game needs at least one row");
  if (mag_p.size() != rewards.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "coefficient and reward vectors differ in length");
  }
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < mag_p.size(); ++i) {
    weighted += mag_p[i] * rewards[i];
    total += mag_p[i];
  }
  if (total == 0.0) throw Error(ErrorCode::ZeroTotalMeasure, "all coefficients are zero");
  return weighted / total;
}

bool is_symmetric(const Game& game) {
  for (const auto& row : game.rows()) {
    if (!(row.coefficient == game[0].coefficient)) return false;
  }
  return true;
}

}  // namespace branchworlds
