#include "branchworlds/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "branchworlds/error.hpp"

namespace branchworlds {
namespace {

Rational spread(std::span<const Rational> values) {
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

struct Instance {
  bool ok;
  std::vector<Game> games;
  std::string detail;
};

Instance pass() { return {true, {}, {}}; }

Instance check_constancy(const ValueRule& rule, const GameSampler& sampler, const Game& g,
                         SplitMix64& rng) {
  const Rational r = sampler.draw_reward(rng);
  std::vector<Rational> rewards(g.size(), r);
  Game constant = g.with_rewards(rewards);
  Rational v = rule(constant);
  if (v == r) return pass();
  return {false, {constant}, "V = " + to_string(v) + " but every reward is " + to_string(r)};
}

Instance check_dominance(const ValueRule& rule, const GameSampler& sampler, const Game& g,
                         SplitMix64& rng) {
  std::vector<Rational> lower = g.rewards();
  for (auto& r : lower) {
    if (rng.below(3) != 0) r -= abs(sampler.draw_reward(rng));
  }
  Game dominated = g.with_rewards(lower);
  Rational hi = rule(g);
  Rational lo = rule(dominated);
  if (hi >= lo) return pass();
  return {false, {g, dominated},
          "r >= r' but V(r) = " + to_string(hi) + " < V(r') = " + to_string(lo)};
}

Instance check_additivity(const ValueRule& rule, const GameSampler& sampler, const Game& g,
                          SplitMix64& rng) {
  std::vector<Rational> other = sampler.draw_rewards(rng, g.size());
  std::vector<Rational> sum = g.rewards();
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other[i];
  Game g2 = g.with_rewards(other);
  Game g_sum = g.with_rewards(sum);
  Rational lhs = rule(g_sum);
  Rational rhs = rule(g) + rule(g2);
  if (lhs == rhs) return pass();
  return {false, {g, g2, g_sum},
          "V(r + r') = " + to_string(lhs) + " but V(r) + V(r') = " + to_string(rhs)};
}

Instance check_indifference(const ValueRule& rule, const GameSampler&, const Game& g,
                            SplitMix64& rng) {
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  std::vector<GameRow> rows;
  rows.reserve(g.size());
  for (std::size_t i : perm) rows.push_back(g[i]);
  Game permuted(std::move(rows), g.exponent());
  Rational a = rule(g);
  Rational b = rule(permuted);
  if (a == b) return pass();
  return {false, {g, permuted}, "V(G) = " + to_string(a) + " but V(G_sigma) = " + to_string(b)};
}

Instance check_homogeneity(const ValueRule& rule, const GameSampler& sampler, const Game& g,
                           SplitMix64& rng) {
  const std::size_t i = rng.below(g.size());
  const Rational mu = sampler.draw_reward(rng);
  std::vector<Rational> unit(g.size(), Rational(0));
  unit[i] = 1;
  std::vector<Rational> scaled(g.size(), Rational(0));
  scaled[i] = mu;
  Rational lhs = rule(g.with_rewards(scaled));
  Rational rhs = mu * rule(g.with_rewards(unit));
  if (lhs == rhs) return pass();
  return {false, {g.with_rewards(scaled)},
          "V(c, mu e_i) = " + to_string(lhs) + " but mu V(c, e_i) = " + to_string(rhs)};
}

// Perturbation sequence around a limit game in which rows 0 and 1 tie at the
// maximal magnitude.
Instance check_continuity(const ValueRule& rule, const GameSampler& sampler, const Game& g,
                          SplitMix64& rng) {
  std::vector<GameRow> rows = g.rows();
  if (rows.size() < 2) {
    rows.push_back({rows[0].coefficient, sampler.draw_reward(rng)});
  }
  Rational top = rows[0].coefficient.mag_p();
  for (const auto& row : rows) top = std::max(top, row.coefficient.mag_p());
  rows[0].coefficient = ExactCoefficient(top, rows[0].coefficient.phase());
  rows[1].coefficient = ExactCoefficient(top, rows[1].coefficient.phase());
  if (rows[0].reward == rows[1].reward) rows[1].reward += 1;

  Game limit(rows, g.exponent());
  const Rational limit_value = rule(limit);
  const std::vector<Rational> rewards = limit.rewards();
  const Rational allowance = spread(rewards) / limit.total_measure();

  for (long k : {1L, 10L, 100L, 1000L, 1000000L}) {
    std::vector<GameRow> perturbed = rows;
    perturbed[0].coefficient =
        ExactCoefficient(top + Rational(1, k), perturbed[0].coefficient.phase());
    Game gk(std::move(perturbed), g.exponent());
    Rational deviation = abs(rule(gk) - limit_value);
    if (deviation > allowance / k) {
      return {false, {gk, limit},
              "k = " + std::to_string(k) + ": |V(G_k) - V(G)| = " + to_string(deviation) +
                  " exceeds " + to_string(Rational(allowance / k))};
    }
  }
  return pass();
}

}  // namespace

std::string_view axiom_name(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::Constancy: return "Constancy";
    case Axiom::Dominance: return "Dominance";
    case Axiom::Additivity: return "Additivity";
    case Axiom::Indifference: return "Indifference";
    case Axiom::Homogeneity: return "Homogeneity";
    case Axiom::Continuity: return "Continuity";
  }
  return "Unknown";
}

Rational ValueRule::operator()(const Game& game) const {
  if (game.exponent() == exponent) return value(game);
  return value(game.with_exponent(exponent));
}

std::string ValueRule::name() const {
  return exponent.is_max() ? std::string("max_born") : "p_born(" + exponent.to_string() + ")";
}

Rational GameSampler::draw_magnitude(SplitMix64& rng) const {
  Rational m(rng.between(1, max_numerator), rng.between(1, max_denominator));
  m.canonicalize();
  return m;
}

Rational GameSampler::draw_reward(SplitMix64& rng) const {
  Rational r(rng.between(-reward_bound, reward_bound), rng.between(1, reward_denominator));
  r.canonicalize();
  return r;
}

std::vector<Rational> GameSampler::draw_rewards(SplitMix64& rng, std::size_t n) const {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(draw_reward(rng));
  return out;
}

Game GameSampler::draw(const Exponent& exponent, std::uint64_t seed, std::uint64_t index) const {
  SplitMix64 rng = SplitMix64::stream(seed, index);
  const auto n = static_cast<std::size_t>(
      rng.between(static_cast<std::int64_t>(min_rows), static_cast<std::int64_t>(max_rows)));
  std::vector<GameRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mag = (i > 0 && rng.uniform() < tie_rate) ? rows[rng.below(i)].coefficient.mag_p()
                                                       : draw_magnitude(rng);
    Rational phase(rng.between(0, 11), 12);
    rows.push_back({ExactCoefficient(mag, phase), draw_reward(rng)});
  }
  return Game(std::move(rows), exponent);
}

AxiomReport check_axiom(Axiom axiom, const ValueRule& rule, std::size_t trials,
                        std::uint64_t seed, const GameSampler& sampler) {
  AxiomReport report{axiom, rule.name(), 0, true, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    const Game g = sampler.draw(rule.exponent, seed, t);
    // Independent substream for the axiom's auxiliary draws.
    SplitMix64 rng = SplitMix64::stream(seed ^ 0xA5A5A5A5A5A5A5A5ULL, t);
    Instance result;
    switch (axiom) {
      case Axiom::Constancy: result = check_constancy(rule, sampler, g, rng); break;
      case Axiom::Dominance: result = check_dominance(rule, sampler, g, rng); break;
      case Axiom::Additivity: result = check_additivity(rule, sampler, g, rng); break;
      case Axiom::Indifference: result = check_indifference(rule, sampler, g, rng); break;
      case Axiom::Homogeneity: result = check_homogeneity(rule, sampler, g, rng); break;
      case Axiom::Continuity: result = check_continuity(rule, sampler, g, rng); break;
    }
    ++report.trials;
    if (!result.ok) {
      report.passed = false;
      report.counterexample = AxiomCounterexample{t, std::move(result.games), std::move(result.detail)};
      break;
    }
  }
  return report;
}

ContinuityWitness continuity_witness(const ValueRule& rule, const Rational& r1, const Rational& r2,
                                     std::span<const long> ks) {
  ContinuityWitness w;
  const std::vector<Rational> limit_mags{Rational(1), Rational(1)};
  const std::vector<Rational> rewards{r1, r2};
  w.limit_value = rule(make_game(limit_mags, rewards, rule.exponent));
  const Rational gap = abs(r1 - r2);
  for (long k : ks) {
    if (k <= 0) throw Error(ErrorCode::IndexOutOfRange, "witness index k must be positive");
    const std::vector<Rational> mags{Rational(1), Rational(1) + Rational(1, k)};
    Rational v = rule(make_game(mags, rewards, rule.exponent));
    if (abs(v - w.limit_value) > gap / k) w.converges = false;
    w.ks.push_back(k);
    w.sequence_values.push_back(std::move(v));
  }
  return w;
}

}  // namespace branchworlds
