#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hfreg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  enum class Kind {
    parse,
    invalid_argument,
    zero_denominator,
    budget_exceeded,
    precondition,
    io,
  };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline Error parse_error(const std::string& msg) {
  return Error(Error::Kind::parse, msg);
}
inline Error invalid_argument_error(const std::string& msg) {
  return Error(Error::Kind::invalid_argument, msg);
}
inline Error zero_denominator_error(const std::string& msg) {
  return Error(Error::Kind::zero_denominator, msg);
}
inline Error budget_error(const std::string& msg) {
  return Error(Error::Kind::budget_exceeded, msg);
}
inline Error precondition_error(const std::string& msg) {
  return Error(Error::Kind::precondition, msg);
}

/// Parses "p", "p/q" or a decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form ("p" when q == 1).
std::string format_rational(const Rational& value);

/// An exact nonnegative real of the form coef * radicand^(1/root), with
/// coef, radicand rational and root in {1, 2, 4}.  Plain rationals are the
/// root == 1 case.  Comparisons against rationals are exact: both sides are
/// raised to the root-th power and cross-multiplied.
class Eps {
 public:
  static Eps exact(Rational value);
  /// scale * base^(1/2)
  static Eps sqrt_of(Rational base, Rational scale);
  /// scale * base^(1/4)
  static Eps quartic_of(Rational base, Rational scale);

  /// Sign of (q - *this): -1, 0, or +1.
  int cmp(const Rational& q) const;

  bool operator<(const Rational& q) const { return cmp(q) > 0; }
  bool operator<=(const Rational& q) const { return cmp(q) >= 0; }
  bool operator>(const Rational& q) const { return cmp(q) < 0; }
  bool operator>=(const Rational& q) const { return cmp(q) <= 0; }

  bool at_least_one() const { return cmp(Rational(1)) <= 0; }
  bool positive() const { return cmp(Rational(0)) < 0; }

  /// Exact rational value when root == 1 (or radicand is a perfect power is
  /// not attempted; callers that need a plain rational construct one).
  std::optional<Rational> as_rational() const;

  const Rational& coef() const { return coef_; }
  const Rational& radicand() const { return radicand_; }
  unsigned root() const { return root_; }

  /// Halves the value (exact; scales the coefficient).
  Eps half() const;

  std::string str() const;

 private:
  Eps(Rational coef, Rational radicand, unsigned root);

  Rational coef_;
  Rational radicand_;
  unsigned root_;
};

/// k^(2k) as an exact integer.
Int k_pow_2k(int k);

/// k! as an exact integer.
Int factorial(int k);

}  // namespace hfreg
