#include "branchworlds/norm_consistency.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "branchworlds/error.hpp"

namespace branchworlds {
namespace {

double relative_gap(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

double p_norm_formula(std::span<const double> x, double p) {
  double top = 0.0;
  for (double v : x) top = std::max(top, std::fabs(v));
  if (top == 0.0) return 0.0;
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::fabs(v);
    return s;
  }
  // Scale by the largest entry so that |x_i|^p cannot overflow.
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v) / top, p);
  return top * std::pow(s, 1.0 / p);
}

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

const double kEntryValues[] = {0.5, 1.0, 2.0, 3.0, 1.0 / 3.0, 7.0, 0.25};

}  // namespace

NormUnderTest p_norm(const Rational& p) {
  if (p < 1) throw Error(ErrorCode::InvalidExponent, "p-norm needs p >= 1");
  const double exponent = to_double(p);
  std::string label = is_integer(p) ? to_string(p) : std::to_string(exponent);
  label.erase(label.find_last_not_of('0') + 1);
  if (!label.empty() && label.back() == '.') label.pop_back();
  return {"p" + label,
          [exponent](std::span<const double> x) { return p_norm_formula(x, exponent); }, p};
}

NormUnderTest max_norm() {
  return {"max",
          [](std::span<const double> x) {
            double top = 0.0;
            for (double v : x) top = std::max(top, std::fabs(v));
            return top;
          },
          std::nullopt};
}

NormUnderTest weighted_norm() {
  return {"weighted",
          [](std::span<const double> x) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) s += (i == 1 ? 2.0 : 1.0) * std::fabs(x[i]);
            return s;
          },
          std::nullopt};
}

NormUnderTest perturbed(const NormUnderTest& base, double relative) {
  auto inner = base.evaluate;
  return {base.name + "-perturbed",
          [inner, relative](std::span<const double> x) { return inner(x) * (1.0 + relative); },
          std::nullopt};
}

NormUnderTest norm_by_name(const std::string& name) {
  if (name == "p1") return p_norm(Rational(1));
  if (name == "p1.5" || name == "p3/2") return p_norm(Rational(3, 2));
  if (name == "p2") return p_norm(Rational(2));
  if (name == "p3") return p_norm(Rational(3));
  if (name == "max") return max_norm();
  if (name == "weighted") return weighted_norm();
  if (name == "p2-perturbed") return perturbed(p_norm(Rational(2)), 1e-3);
  throw Error(ErrorCode::UnknownNorm, "unknown norm \"" + name + "\"");
}

std::vector<std::string> registered_norms() {
  return {"p1", "p1.5", "p2", "p3", "max", "weighted", "p2-perturbed"};
}

CompositionResult check_disjoint_composition(const NormUnderTest& norm, std::span<const double> v,
                                             std::span<const double> w) {
  if (v.size() != w.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "composition vectors must have equal length");
  }
  std::vector<double> sum(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0.0 && w[i] != 0.0) {
      throw Error(ErrorCode::OverlappingSupport,
                  "vectors share support at index " + std::to_string(i));
    }
    sum[i] = v[i] + w[i];
  }
  const double combined = norm(sum);
  const double pair[] = {norm(v), norm(w)};
  const double composed = norm(pair);
  const double residual = std::fabs(combined - composed);
  return {combined, composed, residual,
          residual <= kCompositionTolerance * std::max(1.0, std::fabs(combined))};
}

CompositionSweep composition_sweep(const NormUnderTest& norm) {
  CompositionSweep sweep;
  std::size_t seed = 0;
  for (std::size_t len = 3; len <= 6; ++len) {
    for (std::size_t split = 1; split < len; ++split) {
      std::vector<double> v(len, 0.0), w(len, 0.0);
      for (std::size_t i = 0; i < len; ++i) {
        const double x = kEntryValues[(seed++ * 5 + i) % std::size(kEntryValues)];
        (i < split ? v : w)[i] = x;
      }
      // Interleaved supports as well as contiguous ones.
      std::vector<double> vi(len, 0.0), wi(len, 0.0);
      for (std::size_t i = 0; i < len; ++i) (i % 2 == 0 ? vi : wi)[i] = v[i] + w[i];
      for (const auto& [a, b] : {std::pair{&v, &w}, std::pair{&vi, &wi}}) {
        const auto r = check_disjoint_composition(norm, *a, *b);
        ++sweep.pairs;
        sweep.worst_relative =
            std::max(sweep.worst_relative, r.residual / std::max(1.0, std::fabs(r.combined)));
        sweep.passed = sweep.passed && r.passed;
      }
    }
  }
  return sweep;
}

SymmetryCheck check_symmetries(const NormUnderTest& norm) {
  SymmetryCheck check;
  const std::vector<std::vector<double>> family = {
      {1.0, 2.0, 3.0}, {0.5, 0.0, 7.0, 1.0}, {1.0 / 3.0, 0.25, 2.0, 0.0}, {3.0, 1.0}};
  for (const auto& base : family) {
    const double reference = norm(base);
    std::vector<double> perm = base;
    std::sort(perm.begin(), perm.end());
    do {
      const double gap = relative_gap(norm(perm), reference);
      check.worst_relative = std::max(check.worst_relative, gap);
      if (gap > kCompositionTolerance) check.permutation_invariant = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (double mu : {0.5, 3.0, 10.0}) {
      std::vector<double> scaled = base;
      for (auto& x : scaled) x *= mu;
      const double gap = relative_gap(norm(scaled), mu * reference);
      check.worst_relative = std::max(check.worst_relative, gap);
      if (gap > kCompositionTolerance) check.homogeneous = false;
    }
  }
  return check;
}

FTable f_table(const NormUnderTest& norm, std::size_t n_max) {
  if (n_max < 2) throw Error(ErrorCode::IndexOutOfRange, "f_table needs n_max >= 2");
  FTable table;
  const double one[] = {1.0};
  double f = norm(one);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) {
      const double pair[] = {1.0, f};
      f = norm(pair);
    }
    table.recursive.push_back(f);
    table.direct.push_back(norm(ones(n)));
    const double gap = relative_gap(table.recursive.back(), table.direct.back());
    table.worst_relative_gap = std::max(table.worst_relative_gap, gap);
    if (gap > kCompositionTolerance) table.agree = false;
  }
  return table;
}

ExponentEstimate estimate_p(const NormUnderTest& norm) {
  auto f = [&](std::size_t n) { return norm(ones(n)); };
  const double f2 = f(2);
  if (std::fabs(f2 - 1.0) <= 1e-12) {
    throw Error(ErrorCode::DegenerateNorm,
                norm.name + ": ||(1,1)|| = 1, so f(n) = 1 for every n and no exponent exists");
  }

  ExponentEstimate e;
  e.sample_n = {2, 3, 5, 7, 10};
  for (std::size_t n : e.sample_n) {
    e.estimates.push_back(std::log(static_cast<double>(n)) / std::log(f(n)));
  }
  e.p = std::accumulate(e.estimates.begin(), e.estimates.end(), 0.0) /
        static_cast<double>(e.estimates.size());
  const auto [lo, hi] = std::minmax_element(e.estimates.begin(), e.estimates.end());
  e.spread = *hi - *lo;

  for (std::size_t n : {2u, 3u}) {
    std::size_t power = n;
    for (int k = 2; k <= 3; ++k) {
      power *= n;
      if (relative_gap(f(power), std::pow(f(n), k)) > kCompositionTolerance) e.multiplicative = false;
    }
  }
  double previous = f(1);
  for (std::size_t n = 2; n <= 64; ++n) {
    const double current = f(n);
    if (current < previous * (1.0 - 1e-12)) e.monotone = false;
    previous = current;
  }
  e.passed = e.spread < kExponentSpreadTolerance && e.multiplicative && e.monotone;
  return e;
}

RationalVectorReport verify_rational_vectors(const NormUnderTest& norm, const Rational& p,
                                             std::span<const std::vector<Rational>> sample) {
  RationalVectorReport report;
  const double exponent = to_double(p);
  for (const auto& vec : sample) {
    std::vector<double> x;
    x.reserve(vec.size());
    double power_sum = 0.0;
    for (const auto& q : vec) {
      x.push_back(std::fabs(to_double(q)));
      power_sum += std::pow(x.back(), exponent);
    }
    const double expected = std::pow(power_sum, 1.0 / exponent);
    report.worst_relative = std::max(report.worst_relative, relative_gap(norm(x), expected));
    ++report.vectors;
  }
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const double ratio = static_cast<double>(m) / n;
      const double pair[] = {1.0, ratio};
      const double expected = std::pow(1.0 + std::pow(ratio, exponent), 1.0 / exponent);
      report.worst_rational_step = std::max(report.worst_rational_step, relative_gap(norm(pair), expected));
    }
  }
  report.passed = report.worst_relative <= kCompositionTolerance &&
                  report.worst_rational_step <= kCompositionTolerance;
  return report;
}

std::vector<std::vector<Rational>> default_rational_sample() {
  std::vector<std::vector<Rational>> sample;
  for (std::size_t len = 1; len <= 5; ++len) {
    for (int shift = 0; shift < 4; ++shift) {
      std::vector<Rational> v;
      for (std::size_t i = 0; i < len; ++i) {
        Rational q(static_cast<long>((i * 3 + static_cast<std::size_t>(shift)) % 7 + 1),
                   static_cast<long>((i + static_cast<std::size_t>(shift)) % 5 + 1));
        q.canonicalize();
        v.push_back(q);
      }
      sample.push_back(std::move(v));
    }
  }
  return sample;
}

NormCheckReport run_norm_check(const NormUnderTest& norm) {
  NormCheckReport report;
  report.name = norm.name;
  report.composition = composition_sweep(norm);
  if (norm.name == "weighted") {
    const double v[] = {1.0, 0.0, 0.0};
    const double w[] = {0.0, 1.0, 0.0};
    report.documented_witness = check_disjoint_composition(norm, v, w);
  }
  report.symmetries = check_symmetries(norm);
  report.f = f_table(norm, 64);
  try {
    report.estimate = estimate_p(norm);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateNorm) throw;
    report.degenerate = true;
  }
  if (report.estimate && report.estimate->passed) {
    const Rational p = norm.declared_p ? *norm.declared_p : approximate(report.estimate->p, 1000);
    const auto sample = default_rational_sample();
    report.rational_vectors = verify_rational_vectors(norm, p, sample);
  }
  report.is_p_norm = report.composition.passed && report.symmetries.permutation_invariant &&
                     report.symmetries.homogeneous && report.estimate && report.estimate->passed &&
                     report.rational_vectors && report.rational_vectors->passed;
  return report;
}

}  // namespace branchworlds
