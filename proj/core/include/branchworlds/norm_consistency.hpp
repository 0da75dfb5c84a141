#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "branchworlds/rational.hpp"

namespace branchworlds {

/// A candidate norm on finite nonnegative vectors (magnitudes suffice: the
/// norms of interest are permutation-invariant and absolutely homogeneous).
struct NormUnderTest {
  std::string name;
  std::function<double(std::span<const double>)> evaluate;
  std::optional<Rational> declared_p;

  double operator()(std::span<const double> x) const { return evaluate(x); }
};

/// (sum |x_i|^p)^(1/p).
NormUnderTest p_norm(const Rational& p);
NormUnderTest max_norm();
/// |x1| + 2|x2| + |x3| + sum_{i>3} |x_i|: composes badly and is not
/// permutation-invariant.
NormUnderTest weighted_norm();
/// `base` multiplied by (1 + relative).
NormUnderTest perturbed(const NormUnderTest& base, double relative);

/// Registered names: p1, p1.5 (alias p3/2), p2, p3, max, weighted,
/// p2-perturbed (p2 times 1 + 1e-3). Throws Error{UnknownNorm}.
NormUnderTest norm_by_name(const std::string& name);
std::vector<std::string> registered_norms();

inline constexpr double kCompositionTolerance = 1e-10;
inline constexpr double kExponentSpreadTolerance = 1e-6;

struct CompositionResult {
  double combined;   // ||v + w||
  double composed;   // ||(||v||, ||w||)||
  double residual;   // |combined - composed|
  bool passed;       // residual <= 1e-10 * max(1, combined)
};

/// Throws Error{OverlappingSupport} if v and w share a nonzero index, or
/// Error{IndexOutOfRange} if their lengths differ.
CompositionResult check_disjoint_composition(const NormUnderTest& norm, std::span<const double> v,
                                             std::span<const double> w);

/// Composition over a fixed family of disjoint pairs (lengths 3..6).
struct CompositionSweep {
  std::size_t pairs = 0;
  double worst_relative = 0.0;
  bool passed = true;
};
CompositionSweep composition_sweep(const NormUnderTest& norm);

struct SymmetryCheck {
  bool permutation_invariant = true;
  bool homogeneous = true;
  double worst_relative = 0.0;
};
/// Samples permutations and positive scalings of a fixed vector family.
SymmetryCheck check_symmetries(const NormUnderTest& norm);

struct FTable {
  /// Index n - 1 holds f(n), n = 1..n_max.
  std::vector<double> recursive;  // f(1) = ||(1)||, f(n+1) = ||(1, f(n))||
  std::vector<double> direct;     // ||1^(n)||
  double worst_relative_gap = 0.0;
  bool agree = true;              // within 1e-10 relative
};

FTable f_table(const NormUnderTest& norm, std::size_t n_max);

struct ExponentEstimate {
  std::vector<std::size_t> sample_n;      // 2, 3, 5, 7, 10
  std::vector<double> estimates;          // log n / log f(n)
  double p = 0.0;                         // mean estimate
  double spread = 0.0;                    // max pairwise difference
  bool multiplicative = true;             // f(n^k) == f(n)^k, n in {2,3}, k in {2,3}
  bool monotone = true;                   // f nondecreasing on 1..64
  bool passed = false;                    // spread < 1e-6 and both checks
};

/// Throws Error{DegenerateNorm} when f(2) == 1 (then f(n) == 1 for all n).
ExponentEstimate estimate_p(const NormUnderTest& norm);

struct RationalVectorReport {
  std::size_t vectors = 0;
  double worst_relative = 0.0;
  /// ||(1, m/n)|| against (1 + (m/n)^p)^(1/p) over 1 <= m, n <= 6.
  double worst_rational_step = 0.0;
  bool passed = true;
};

/// Compares the norm with the p-norm formula on rational-magnitude vectors.
RationalVectorReport verify_rational_vectors(const NormUnderTest& norm, const Rational& p,
                                             std::span<const std::vector<Rational>> sample);

/// A default sample of rational vectors (lengths 1..5).
std::vector<std::vector<Rational>> default_rational_sample();

/// Everything above for one norm, as run by `normcheck`.
struct NormCheckReport {
  std::string name;
  CompositionSweep composition;
  std::optional<CompositionResult> documented_witness;  // only for `weighted`
  SymmetryCheck symmetries;
  FTable f;
  std::optional<ExponentEstimate> estimate;
  bool degenerate = false;
  std::optional<RationalVectorReport> rational_vectors;
  bool is_p_norm = false;
};

NormCheckReport run_norm_check(const NormUnderTest& norm);

}  // namespace branchworlds
