#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "branchworlds/rational.hpp"
#include "branchworlds/universe.hpp"

namespace branchworlds {

/// Outcome sequences are 0-based outcome indices, one per trial.
using Sequence = std::vector<std::size_t>;

inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;

/// N independent repetitions of one branching with per-trial measures
/// Lambda_i. In Kent's universe the measures are world multiplicities and
/// must be integers.
struct BranchSpec {
  UniverseKind universe;
  std::vector<Rational> trial_measures;
  std::size_t trials;

  /// Throws Error{InvalidSpec} if no measure is positive, a measure is
  /// negative, trials == 0, or a Kent measure is fractional.
  BranchSpec(UniverseKind universe, std::vector<Rational> trial_measures, std::size_t trials);

  std::size_t outcomes() const noexcept { return trial_measures.size(); }
  Rational total_trial_measure() const;
  /// Lambda_outcome / sum_i Lambda_i.
  Rational single_trial_proportion(std::size_t outcome) const;
};

struct SequenceMeasure {
  Sequence sequence;
  Rational measure;
};

struct FrequencyDistribution {
  std::size_t trials;
  std::size_t target_outcome;
  /// masses[k] = proportion of worlds in which the target occurred k times.
  std::vector<Rational> masses;
  /// Whether the closed form was confirmed against explicit enumeration.
  bool verified_by_enumeration = false;
};

struct HoeffdingReport {
  std::size_t trials;
  Rational epsilon;
  Rational tail_mass;
  double bound;
  bool holds;
};

struct FrequencyHistogram {
  std::size_t trials;
  std::size_t target_outcome;
  std::size_t runs;
  /// counts[k] = number of runs in which the target occurred k times.
  std::vector<std::uint64_t> counts;

  double mean_frequency() const;
  /// Fraction of runs with |k/N - center| >= epsilon.
  double deviation_fraction(double center, double epsilon) const;
};

/// Number of Kent worlds carrying `s`: prod_i m_{s_i}. Throws
/// Error{WrongUniverse} outside Kent, Error{InvalidSequence} on bad input.
BigInt world_count(const BranchSpec& spec, const Sequence& s);

/// Lambda_s = prod_i Lambda_{s_i}.
Rational sequence_measure(const BranchSpec& spec, const Sequence& s);

/// Lambda_s / sum_{s'} Lambda_{s'}, with the normaliser in closed form
/// (sum_i Lambda_i)^N.
Rational proportion(const BranchSpec& spec, const Sequence& s);

/// Every outcome sequence in lexicographic order with its measure, built
/// trial by trial. Throws Error{EnumerationTooLarge} if n^N > bound.
std::vector<SequenceMeasure> enumerate_sequences(const BranchSpec& spec,
                                                 std::uint64_t bound = kDefaultEnumerationBound);

/// n^N, saturated at UINT64_MAX.
std::uint64_t sequence_count(const BranchSpec& spec);

/// Closed-form binomial lambda(k, N) = C(N,k) l^k (1-l)^(N-k) with
/// l = single_trial_proportion(outcome). When n^N <= bound the masses are
/// also recomputed by grouping enumerated sequences, and any disagreement
/// is a hard error (Error{ConstraintViolated}).
FrequencyDistribution frequency_distribution(const BranchSpec& spec, std::size_t outcome,
                                             std::uint64_t bound = kDefaultEnumerationBound);

/// Exact mass of |k/N - l| >= epsilon against 2 exp(-2 N epsilon^2).
HoeffdingReport hoeffding_check(const BranchSpec& spec, std::size_t outcome,
                                const Rational& epsilon);

/// Monte Carlo: `runs` independent N-trial histories, each drawn from its
/// own SplitMix64 substream of `seed`, so the histogram is schedule-free.
FrequencyHistogram sample_frequencies(const BranchSpec& spec, std::size_t outcome,
                                      std::size_t runs, std::uint64_t seed);

}  // namespace branchworlds
