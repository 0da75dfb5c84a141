#include "branchworlds/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "branchworlds/error.hpp"

namespace branchworlds {
namespace {

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not an exact number: \"" + std::string(text) + "\"");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// [+-]digits[.digits][e[+-]digits]
Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad_literal(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_literal(text);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      bad_literal(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) bad_literal(text);
    digits = std::string(s);
  }
  Rational result{BigInt(digits, 10)};
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    result *= scale;
  } else {
    result /= scale;
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_literal(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);

  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) bad_literal(text);
  BigInt d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  Rational result(BigInt(std::string(num), 10), d);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const BigInt& value) { return value.get_str(10); }

double to_double(const Rational& value) { return mpq_get_d(value.get_mpq_t()); }

Rational from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "non-finite floating-point value");
  }
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

Rational approximate(double value, std::uint64_t max_denominator) {
  if (max_denominator == 0) max_denominator = 1;
  const Rational x = from_double(value);
  const BigInt bound(std::to_string(max_denominator), 10);

  // Convergents h/k of the continued fraction of x.
  BigInt h_prev2 = 0, h_prev1 = 1, k_prev2 = 1, k_prev1 = 0;
  Rational rest = x;
  while (true) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    BigInt h = a * h_prev1 + h_prev2;
    BigInt k = a * k_prev1 + k_prev2;
    if (k > bound) {
      // Largest semiconvergent that fits, compared against the last convergent.
      BigInt t = (bound - k_prev2) / k_prev1;
      Rational semi(t * h_prev1 + h_prev2, t * k_prev1 + k_prev2);
      semi.canonicalize();
      Rational last(h_prev1, k_prev1);
      last.canonicalize();
      return abs(semi - x) < abs(last - x) ? semi : last;
    }
    h_prev2 = h_prev1;
    h_prev1 = h;
    k_prev2 = k_prev1;
    k_prev1 = k;
    Rational frac = rest - Rational(a);
    if (frac == 0) {
      Rational exact(h, k);
      exact.canonicalize();
      return exact;
    }
    rest = 1 / frac;
  }
}

Rational wrap_unit(const Rational& x) {
  BigInt floor;
  mpz_fdiv_q(floor.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(floor);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace branchworlds
