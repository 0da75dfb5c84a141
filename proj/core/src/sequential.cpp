#include "branchworlds/sequential.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "branchworlds/error.hpp"
#include "branchworlds/rng.hpp"

namespace branchworlds {

SequentialGame::SequentialGame(std::vector<SequentialRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::EmptyGame, "a sequential game needs at least one row");
  for (const auto& row : rows_) {
    if (sgn(row.coefficient.mag_p()) == 0) {
      throw Error(ErrorCode::ZeroTotalMeasure, "sequential game row with a zero coefficient");
    }
    if (!row.is_terminal() && !std::get<std::shared_ptr<const SequentialGame>>(row.branch)) {
      throw Error(ErrorCode::EmptyGame, "null subgame");
    }
  }
}

SequentialRow SequentialGame::terminal(ExactCoefficient c, Rational reward) {
  return {std::move(c), std::move(reward)};
}

SequentialRow SequentialGame::nested(ExactCoefficient c, SequentialGame subgame) {
  return {std::move(c), std::make_shared<const SequentialGame>(std::move(subgame))};
}

std::size_t SequentialGame::depth() const {
  std::size_t deepest = 0;
  for (const auto& row : rows_) {
    if (!row.is_terminal()) deepest = std::max(deepest, row.subgame().depth());
  }
  return deepest + 1;
}

bool SequentialGame::is_simple() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SequentialRow& r) { return r.is_terminal(); });
}

namespace {

void require_whole_numbers(const SequentialGame& g, const UniverseKind& universe) {
  for (const auto& row : g.rows()) {
    if (!is_integer(row.coefficient.mag_p())) {
      throw Error(ErrorCode::UniverseMismatch,
                  universe.name() + " needs whole-number coefficients, got " +
                      to_string(row.coefficient.mag_p()));
    }
    if (!row.is_terminal()) require_whole_numbers(row.subgame(), universe);
  }
}

using Block = std::vector<GameRow>;

std::vector<GameRow> reduce_rows(const SequentialGame& g, const UniverseKind& universe,
                                 const ReductionOptions& options) {
  std::vector<Block> blocks;
  std::vector<std::size_t> subgame_rows;
  blocks.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& row = g.rows()[i];
    if (row.is_terminal()) {
      blocks.push_back({GameRow{row.coefficient, row.reward()}});
    } else {
      // Placeholder row: its coefficient collects sibling scaling until the
      // subgame itself is expanded.
      blocks.push_back({GameRow{row.coefficient, Rational(0)}});
      subgame_rows.push_back(i);
    }
  }
  if (options.order == ReductionOrder::RightToLeft) {
    std::reverse(subgame_rows.begin(), subgame_rows.end());
  }

  for (std::size_t i : subgame_rows) {
    const std::vector<GameRow> inner = reduce_rows(g.rows()[i].subgame(), universe, options);
    Rational inner_total = 0;
    for (const auto& r : inner) inner_total += r.coefficient.mag_p();

    Block expanded;
    expanded.reserve(blocks[i].size() * inner.size());
    for (const auto& prefix : blocks[i]) {
      for (const auto& r : inner) expanded.push_back({prefix.coefficient * r.coefficient, r.reward});
    }
    blocks[i] = std::move(expanded);

    const bool expand_siblings =
        universe.kind() == UniverseKind::Kind::PNorm && !options.coarse;
    const bool scale_siblings = universe.kind() == UniverseKind::Kind::ReverseKent ||
                                (universe.kind() == UniverseKind::Kind::PNorm && options.coarse);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (j == i) continue;
      if (scale_siblings) {
        for (auto& r : blocks[j]) {
          r.coefficient = ExactCoefficient(r.coefficient.mag_p() * inner_total, r.coefficient.phase());
        }
      } else if (expand_siblings) {
        Block grown;
        grown.reserve(blocks[j].size() * inner.size());
        for (const auto& r : blocks[j]) {
          for (const auto& beta : inner) grown.push_back({r.coefficient * beta.coefficient, r.reward});
        }
        blocks[j] = std::move(grown);
      }
    }
  }

  std::vector<GameRow> flat;
  for (auto& block : blocks) {
    for (auto& r : block) flat.push_back(std::move(r));
  }
  return flat;
}

Exponent exponent_for(const UniverseKind& universe) { return Exponent::finite(universe.p()); }

}  // namespace

Game reduce_sequential(const SequentialGame& g, const UniverseKind& universe,
                       const ReductionOptions& options) {
  if (universe.is_kent_family()) require_whole_numbers(g, universe);
  return Game(reduce_rows(g, universe, options), exponent_for(universe));
}

Rational sequential_value(const SequentialGame& g, const UniverseKind& universe) {
  return value_p_born(reduce_sequential(g, universe));
}

SubstitutionReport check_substitution(const SequentialGame& g, const UniverseKind& universe) {
  const Rational reduced = sequential_value(g, universe);
  std::vector<GameRow> rows;
  rows.reserve(g.size());
  for (const auto& row : g.rows()) {
    Rational reward = row.is_terminal() ? row.reward() : sequential_value(row.subgame(), universe);
    rows.push_back({row.coefficient, std::move(reward)});
  }
  Game substituted(std::move(rows), exponent_for(universe));
  Rational substitution = value_p_born(substituted);
  const bool holds = reduced == substitution;
  return {holds, reduced, std::move(substitution), std::move(substituted)};
}

// ---------------------------------------------------------------------------

OnceOrTwice once_or_twice(const Rational& c1, const Rational& c2, const UniverseKind& universe) {
  if (sgn(c1) < 0 || sgn(c2) < 0) {
    throw Error(ErrorCode::NegativeMultiplicity, "Once-or-Twice weights must be nonnegative");
  }
  if (sgn(c1) == 0 && sgn(c2) == 0) throw Error(ErrorCode::ZeroTotal, "c1 = c2 = 0");
  if (universe.is_kent_family() && (!is_integer(c1) || !is_integer(c2))) {
    throw Error(ErrorCode::UniverseMismatch, universe.name() + " needs whole-number multiplicities");
  }

  std::vector<Rational> weights;
  switch (universe.kind()) {
    case UniverseKind::Kind::Kent:
      // c1 + c1 c2 + c2^2 worlds in the end.
      weights = {c1, c2 * c1, c2 * c2};
      break;
    case UniverseKind::Kind::ReverseKent:
    case UniverseKind::Kind::PNorm: {
      // Measure is conserved: (c1 + c2)^2 in total.
      const Rational s = c1 + c2;
      weights = {c1 * s, c2 * c1, c2 * c2};
      break;
    }
  }
  const Rational total = weights[0] + weights[1] + weights[2];
  OnceOrTwice out;
  for (auto& w : weights) {
    Rational p = w / total;
    p.canonicalize();
    out.proportions.push_back(std::move(p));
  }
  return out;
}

SequentialGame once_or_twice_game(const Rational& c1, const Rational& c2, std::size_t which) {
  auto e = [which](std::size_t k) { return Rational(which == k ? 1 : 0); };
  SequentialGame second({SequentialGame::terminal(ExactCoefficient(c1), e(1)),
                         SequentialGame::terminal(ExactCoefficient(c2), e(2))});
  return SequentialGame({SequentialGame::terminal(ExactCoefficient(c1), e(0)),
                         SequentialGame::nested(ExactCoefficient(c2), std::move(second))});
}

DutchBookBets DutchBookBets::scaled(const Rational& factor) const {
  return {stage_one_outcome_1 * factor, stage_one_outcome_2 * factor,
          stage_two_single * factor, stage_two_others * factor};
}

bool OutcomeLedger::uniform_payoff() const {
  return std::all_of(entries.begin(), entries.end(),
                     [&](const LedgerEntry& e) { return e.payoff == entries.front().payoff; });
}

OutcomeLedger dutch_book_demo(const Rational& c1, const Rational& c2, const DutchBookBets& bets) {
  if (c1 != c2) {
    throw Error(ErrorCode::AsymmetricInput, "the Dutch book scenario needs c1 == c2");
  }
  if (sgn(c1) <= 0 || !is_integer(c1)) {
    throw Error(ErrorCode::NegativeMultiplicity, "multiplicities must be positive integers");
  }
  const OnceOrTwice kent = once_or_twice(c1, c2, UniverseKind::kent());

  OutcomeLedger ledger;
  ledger.entries = {
      {"(1)", c1, bets.stage_one_outcome_1 + bets.stage_two_single},
      {"(2,1)", c2 * c1, bets.stage_one_outcome_2 + bets.stage_two_others},
      {"(2,2)", c2 * c2, bets.stage_one_outcome_2 + bets.stage_two_others},
  };
  // Before the second branching the agent sees two equally weighted worlds.
  ledger.stage_one_expectation =
      Rational(1, 2) * bets.stage_one_outcome_1 + Rational(1, 2) * bets.stage_one_outcome_2;
  // Afterwards they count final worlds.
  ledger.stage_two_expectation = kent.proportions[0] * bets.stage_two_single +
                                 (kent.proportions[1] + kent.proportions[2]) * bets.stage_two_others;
  return ledger;
}

OutcomeLedger coin_dutch_book(const DutchBookBets& bets) {
  OutcomeLedger ledger;
  ledger.entries = {
      {"heads", Rational(1, 2), bets.stage_one_outcome_1 + bets.stage_two_single},
      {"tails", Rational(1, 2), bets.stage_one_outcome_2 + bets.stage_two_others},
  };
  ledger.stage_one_expectation =
      Rational(1, 2) * bets.stage_one_outcome_1 + Rational(1, 2) * bets.stage_one_outcome_2;
  ledger.stage_two_expectation =
      Rational(1, 3) * bets.stage_two_single + Rational(2, 3) * bets.stage_two_others;
  return ledger;
}

// ---------------------------------------------------------------------------

namespace {

SequentialGame draw_node(const SequentialSampler& s, SplitMix64& rng, std::size_t depth_left) {
  const auto n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(s.min_rows),
                                                      static_cast<std::int64_t>(s.max_rows)));
  std::vector<SequentialRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Rational mag = s.integral
                       ? Rational(rng.between(1, s.max_integer))
                       : Rational(rng.between(1, 9), rng.between(1, 9));
    mag.canonicalize();
    ExactCoefficient c(mag, Rational(rng.between(0, 7), 8));
    if (depth_left > 1 && rng.uniform() < s.subgame_rate) {
      rows.push_back(SequentialGame::nested(std::move(c), draw_node(s, rng, depth_left - 1)));
    } else {
      rows.push_back(SequentialGame::terminal(std::move(c), Rational(rng.between(-s.reward_bound, s.reward_bound))));
    }
  }
  return SequentialGame(std::move(rows));
}

}  // namespace

SequentialGame SequentialSampler::draw(std::uint64_t seed, std::uint64_t index) const {
  SplitMix64 rng = SplitMix64::stream(seed, index);
  return draw_node(*this, rng, std::max<std::size_t>(max_depth, 1));
}

SubstitutionSweep substitution_sweep(const UniverseKind& universe, std::size_t games,
                                     std::uint64_t seed, const SequentialSampler& sampler) {
  SubstitutionSweep sweep;
  for (std::size_t i = 0; i < games; ++i) {
    SubstitutionReport report = check_substitution(sampler.draw(seed, i), universe);
    ++sweep.games;
    if (report.holds) {
      ++sweep.holds;
    } else if (!sweep.first_failure) {
      sweep.first_failure = i;
      sweep.failure_report = std::move(report);
    }
  }
  return sweep;
}

}  // namespace branchworlds
