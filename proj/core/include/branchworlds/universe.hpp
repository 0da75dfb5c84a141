#pragma once

#include <string>
#include <string_view>

#include "branchworlds/rational.hpp"

namespace branchworlds {

/// Which many-worlds dynamics a branching follows.
///  - Kent: branching literally multiplies worlds; coefficients are world counts.
///  - ReverseKent: a fixed pool of worlds is partitioned; total count conserved.
///  - PNorm: worlds carry the measure |alpha|^p; total measure conserved.
class UniverseKind {
 public:
  enum class Kind { Kent, ReverseKent, PNorm };

  static UniverseKind kent() { return UniverseKind(Kind::Kent, Rational(1)); }
  static UniverseKind reverse_kent() { return UniverseKind(Kind::ReverseKent, Rational(1)); }
  /// Throws Error{InvalidExponent} unless p >= 1.
  static UniverseKind pnorm(Rational p);

  /// Accepts "kent", "reverse-kent" (or "reversekent"), "pnorm"; `p` is used
  /// only for pnorm. Throws Error{ParseError}.
  static UniverseKind parse(std::string_view name, const Rational& p = Rational(2));

  Kind kind() const noexcept { return kind_; }
  /// Exponent of the value rule: 1 for both Kent variants.
  const Rational& p() const noexcept { return p_; }
  bool is_kent_family() const noexcept { return kind_ != Kind::PNorm; }

  std::string name() const;
  friend bool operator==(const UniverseKind&, const UniverseKind&) = default;

 private:
  UniverseKind(Kind kind, Rational p) : kind_(kind), p_(std::move(p)) {}

  Kind kind_;
  Rational p_;
};

}  // namespace branchworlds
