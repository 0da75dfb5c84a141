#include "branchworlds/universe.hpp"

#include <string>

#include "branchworlds/error.hpp"

namespace branchworlds {

UniverseKind UniverseKind::pnorm(Rational p) {
  p.canonicalize();
  if (p < 1) throw Error(ErrorCode::InvalidExponent, "exponent p must be >= 1, got " + to_string(p));
  return UniverseKind(Kind::PNorm, std::move(p));
}

UniverseKind UniverseKind::parse(std::string_view name, const Rational& p) {
  if (name == "kent") return kent();
  if (name == "reverse-kent" || name == "reversekent" || name == "reverse_kent") return reverse_kent();
  if (name == "pnorm" || name == "p-norm") return pnorm(p);
  throw Error(ErrorCode::ParseError, "unknown universe \"" + std::string(name) +
                                         "\" (expected kent, reverse-kent or pnorm)");
}

std::string UniverseKind::name() const {
  switch (kind_) {
    case Kind::Kent: return "kent";
    case Kind::ReverseKent: return "reverse-kent";
    case Kind::PNorm: return "pnorm(" + to_string(p_) + ")";
  }
  return "unknown";
}

}  // namespace branchworlds
