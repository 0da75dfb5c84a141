#include "branchworlds/world_tree.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "branchworlds/error.hpp"
#include "branchworlds/rng.hpp"

namespace branchworlds {
namespace {

void validate_sequence(const BranchSpec& spec, const Sequence& s) {
  if (s.size() != spec.trials) {
    throw Error(ErrorCode::InvalidSequence, "sequence has length " + std::to_string(s.size()) +
                                                " but the spec has N = " +
                                                std::to_string(spec.trials));
  }
  for (std::size_t outcome : s) {
    if (outcome >= spec.outcomes()) {
      throw Error(ErrorCode::InvalidSequence,
                  "outcome " + std::to_string(outcome) + " outside 0.." +
                      std::to_string(spec.outcomes() - 1));
    }
  }
}

void validate_outcome(const BranchSpec& spec, std::size_t outcome) {
  if (outcome >= spec.outcomes()) {
    throw Error(ErrorCode::IndexOutOfRange, "target outcome " + std::to_string(outcome) +
                                                " outside 0.." +
                                                std::to_string(spec.outcomes() - 1));
  }
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

}  // namespace

BranchSpec::BranchSpec(UniverseKind universe_, std::vector<Rational> trial_measures_,
                       std::size_t trials_)
    : universe(std::move(universe_)), trial_measures(std::move(trial_measures_)), trials(trials_) {
  if (trials == 0) throw Error(ErrorCode::InvalidSpec, "need at least one repetition");
  bool any_positive = false;
  for (auto& m : trial_measures) {
    m.canonicalize();
    if (sgn(m) < 0) throw Error(ErrorCode::InvalidSpec, "negative trial measure " + to_string(m));
    if (universe.kind() == UniverseKind::Kind::Kent && !is_integer(m)) {
      throw Error(ErrorCode::InvalidSpec,
                  "Kent multiplicities must be integers, got " + to_string(m));
    }
    any_positive = any_positive || sgn(m) > 0;
  }
  if (!any_positive) throw Error(ErrorCode::InvalidSpec, "no outcome has positive measure");
}

Rational BranchSpec::total_trial_measure() const {
  Rational total = 0;
  for (const auto& m : trial_measures) total += m;
  return total;
}

Rational BranchSpec::single_trial_proportion(std::size_t outcome) const {
  validate_outcome(*this, outcome);
  Rational l = trial_measures[outcome] / total_trial_measure();
  l.canonicalize();
  return l;
}

double FrequencyHistogram::mean_frequency() const {
  double sum = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    sum += static_cast<double>(counts[k]) * static_cast<double>(k);
  }
  return sum / (static_cast<double>(runs) * static_cast<double>(trials));
}

double FrequencyHistogram::deviation_fraction(double center, double epsilon) const {
  std::uint64_t hits = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double f = static_cast<double>(k) / static_cast<double>(trials);
    if (std::fabs(f - center) >= epsilon) hits += counts[k];
  }
  return static_cast<double>(hits) / static_cast<double>(runs);
}

BigInt world_count(const BranchSpec& spec, const Sequence& s) {
  if (spec.universe.kind() != UniverseKind::Kind::Kent) {
    throw Error(ErrorCode::WrongUniverse,
                "world counts exist only in Kent's universe, not " + spec.universe.name());
  }
  validate_sequence(spec, s);
  BigInt count = 1;
  for (std::size_t outcome : s) count *= spec.trial_measures[outcome].get_num();
  return count;
}

Rational sequence_measure(const BranchSpec& spec, const Sequence& s) {
  validate_sequence(spec, s);
  Rational measure = 1;
  for (std::size_t outcome : s) measure *= spec.trial_measures[outcome];
  measure.canonicalize();
  return measure;
}

Rational proportion(const BranchSpec& spec, const Sequence& s) {
  Rational p = sequence_measure(spec, s) / pow(spec.total_trial_measure(), spec.trials);
  p.canonicalize();
  return p;
}

std::uint64_t sequence_count(const BranchSpec& spec) {
  const std::uint64_t n = spec.outcomes();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < spec.trials; ++i) {
    if (n != 0 && count > std::numeric_limits<std::uint64_t>::max() / n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= n;
  }
  return count;
}

std::vector<SequenceMeasure> enumerate_sequences(const BranchSpec& spec, std::uint64_t bound) {
  const std::uint64_t count = sequence_count(spec);
  if (count > bound) {
    throw Error(ErrorCode::EnumerationTooLarge,
                std::to_string(spec.outcomes()) + "^" + std::to_string(spec.trials) +
                    " sequences exceed the enumeration bound " + std::to_string(bound));
  }
  // Grow the tree one trial at a time; each child's measure is its parent's
  // times the branch measure.
  std::vector<SequenceMeasure> layer{{Sequence{}, Rational(1)}};
  for (std::size_t t = 0; t < spec.trials; ++t) {
    std::vector<SequenceMeasure> next;
    next.reserve(layer.size() * spec.outcomes());
    for (const auto& node : layer) {
      for (std::size_t i = 0; i < spec.outcomes(); ++i) {
        Sequence s = node.sequence;
        s.push_back(i);
        Rational m = node.measure * spec.trial_measures[i];
        next.push_back({std::move(s), std::move(m)});
      }
    }
    layer = std::move(next);
  }
  return layer;
}

FrequencyDistribution frequency_distribution(const BranchSpec& spec, std::size_t outcome,
                                             std::uint64_t bound) {
  const Rational l = spec.single_trial_proportion(outcome);
  const Rational complement = Rational(1) - l;
  const std::size_t n = spec.trials;

  FrequencyDistribution dist{n, outcome, {}, false};
  dist.masses.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational mass = Rational(binomial(n, k)) * pow(l, k) * pow(complement, n - k);
    mass.canonicalize();
    dist.masses.push_back(std::move(mass));
  }

  if (sequence_count(spec) <= bound) {
    std::vector<Rational> grouped(n + 1, Rational(0));
    Rational total = 0;
    for (const auto& sm : enumerate_sequences(spec, bound)) {
      std::size_t k = 0;
      for (std::size_t o : sm.sequence) k += (o == outcome);
      grouped[k] += sm.measure;
      total += sm.measure;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      Rational share = grouped[k] / total;
      share.canonicalize();
      if (share != dist.masses[k]) {
        throw Error(ErrorCode::ConstraintViolated,
                    "enumerated mass for k = " + std::to_string(k) + " is " + to_string(share) +
                        " but the binomial form gives " + to_string(dist.masses[k]));
      }
    }
    dist.verified_by_enumeration = true;
  }
  return dist;
}

HoeffdingReport hoeffding_check(const BranchSpec& spec, std::size_t outcome,
                                const Rational& epsilon) {
  if (sgn(epsilon) <= 0) {
    throw Error(ErrorCode::NonpositiveEpsilon, "epsilon must be positive, got " + to_string(epsilon));
  }
  const Rational l = spec.single_trial_proportion(outcome);
  const Rational complement = Rational(1) - l;
  const std::size_t n = spec.trials;

  Rational tail = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational deviation = abs(Rational(static_cast<unsigned long>(k), static_cast<unsigned long>(n)) - l);
    if (deviation >= epsilon) {
      tail += Rational(binomial(n, k)) * pow(l, k) * pow(complement, n - k);
    }
  }
  tail.canonicalize();

  const double eps = to_double(epsilon);
  const double bound = 2.0 * std::exp(-2.0 * static_cast<double>(n) * eps * eps);
  const bool holds = tail <= from_double(bound + 1e-15);
  return {n, epsilon, std::move(tail), bound, holds};
}

FrequencyHistogram sample_frequencies(const BranchSpec& spec, std::size_t outcome,
                                      std::size_t runs, std::uint64_t seed) {
  validate_outcome(spec, outcome);
  if (runs == 0) throw Error(ErrorCode::InvalidSpec, "need at least one run");

  // Integer weights w_i = Lambda_i * lcm(denominators). When their total fits
  // in 64 bits the draw is exact; otherwise fall back to double cumulative
  // probabilities.
  BigInt lcm = 1;
  for (const auto& m : spec.trial_measures) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.get_den_mpz_t());
  }
  std::vector<BigInt> weights;
  BigInt total = 0;
  for (const auto& m : spec.trial_measures) {
    weights.push_back(m.get_num() * (lcm / m.get_den()));
    total += weights.back();
  }
  const bool exact = mpz_sizeinbase(total.get_mpz_t(), 2) <= 63;
  std::vector<std::uint64_t> cumulative_int;
  std::vector<double> cumulative_real;
  if (exact) {
    std::uint64_t acc = 0;
    for (const auto& w : weights) {
      acc += mpz_get_ui(w.get_mpz_t());
      cumulative_int.push_back(acc);
    }
  } else {
    const Rational total_q(total);
    Rational acc = 0;
    for (const auto& w : weights) {
      acc += Rational(w) / total_q;
      cumulative_real.push_back(to_double(acc));
    }
  }
  const std::uint64_t total_int = exact ? cumulative_int.back() : 0;

  FrequencyHistogram hist{spec.trials, outcome, runs, std::vector<std::uint64_t>(spec.trials + 1, 0)};
  for (std::size_t run = 0; run < runs; ++run) {
    SplitMix64 rng = SplitMix64::stream(seed, run);
    std::size_t hits = 0;
    for (std::size_t t = 0; t < spec.trials; ++t) {
      std::size_t drawn = 0;
      if (exact) {
        const std::uint64_t x = rng.below(total_int);
        while (x >= cumulative_int[drawn]) ++drawn;
      } else {
        const double u = rng.uniform();
        while (drawn + 1 < cumulative_real.size() && u >= cumulative_real[drawn]) ++drawn;
      }
      hits += (drawn == outcome);
    }
    ++hist.counts[hits];
  }
  return hist;
}

}  // namespace branchworlds
