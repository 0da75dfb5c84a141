#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "branchworlds/game.hpp"
#include "branchworlds/rng.hpp"

namespace branchworlds {

enum class Axiom { Constancy, Dominance, Additivity, Indifference, Homogeneity, Continuity };

std::string_view axiom_name(Axiom axiom) noexcept;

/// A value function under test: p-Born at some rational p, or max-Born.
struct ValueRule {
  Exponent exponent;

  static ValueRule p_born(Rational p) { return {Exponent::finite(std::move(p))}; }
  static ValueRule max_born() { return {Exponent::max()}; }

  /// Values `game` as if its exponent were this rule's.
  Rational operator()(const Game& game) const;
  std::string name() const;
};

/// Shape of the random games drawn for axiom checks and property sweeps.
struct GameSampler {
  std::size_t min_rows = 1;
  std::size_t max_rows = 5;
  long max_numerator = 20;
  long max_denominator = 20;
  long reward_bound = 20;          // rewards are (-bound..bound) / (1..reward_denominator)
  long reward_denominator = 10;
  /// Probability in [0,1] that a row copies an earlier row's magnitude, so
  /// that max-Born ties actually occur in samples.
  double tie_rate = 0.3;

  /// Game number `index` of the stream `seed`; a pure function of its inputs.
  Game draw(const Exponent& exponent, std::uint64_t seed, std::uint64_t index) const;

  Rational draw_magnitude(SplitMix64& rng) const;
  Rational draw_reward(SplitMix64& rng) const;
  std::vector<Rational> draw_rewards(SplitMix64& rng, std::size_t n) const;
};

struct AxiomCounterexample {
  std::size_t trial;
  std::vector<Game> games;  // the instance: the sampled game(s) the check compared
  std::string detail;
};

struct AxiomReport {
  Axiom axiom;
  std::string rule;
  std::size_t trials = 0;
  bool passed = true;
  std::optional<AxiomCounterexample> counterexample;
};

/// Evaluates the axiom's defining relation exactly on `trials` sampled
/// instances and reports the first counterexample. Continuity, which has no
/// finite exact form, is checked through perturbation sequences: each
/// sampled game is turned into a limit game L whose two leading rows share
/// the maximal magnitude, and G_k raises the first of them by 1/k; the rule
/// passes when |V(G_k) - V(L)| <= spread(r) / (k * ||L||) for every k.
AxiomReport check_axiom(Axiom axiom, const ValueRule& rule, std::size_t trials,
                        std::uint64_t seed, const GameSampler& sampler = {});

/// Values along G_k = [(1, r1), (1 + 1/k, r2)] and at the limit [(1, r1), (1, r2)].
struct ContinuityWitness {
  std::vector<long> ks;
  std::vector<Rational> sequence_values;
  Rational limit_value;
  /// True when |V(G_k) - V(limit)| <= |r1 - r2| / k for every k.
  bool converges = true;
};

ContinuityWitness continuity_witness(const ValueRule& rule, const Rational& r1, const Rational& r2,
                                     std::span<const long> ks);

}  // namespace branchworlds
