#include "rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>

namespace hfreg {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw parse_error("empty rational");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den == 0) throw parse_error("rational with zero denominator: " + text);
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      Int num(digits);
      Int den = 1;
      for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      return Rational(num, den);
    }
    return Rational(Int(s));
  } catch (const std::exception&) {
    throw parse_error("malformed rational: " + text);
  }
}

std::string format_rational(const Rational& value) {
  std::ostringstream os;
  os << numerator(value);
  if (denominator(value) != 1) os << '/' << denominator(value);
  return os.str();
}

Eps::Eps(Rational coef, Rational radicand, unsigned root)
    : coef_(std::move(coef)), radicand_(std::move(radicand)), root_(root) {
  if (coef_ < 0 || radicand_ < 0)
    throw invalid_argument_error("Eps requires nonnegative components");
}

Eps Eps::exact(Rational value) { return Eps(std::move(value), Rational(1), 1); }

Eps Eps::sqrt_of(Rational base, Rational scale) {
  return Eps(std::move(scale), std::move(base), 2);
}

Eps Eps::quartic_of(Rational base, Rational scale) {
  return Eps(std::move(scale), std::move(base), 4);
}

int Eps::cmp(const Rational& q) const {
  if (q < 0) return -1;  // value is always >= 0
  // Both sides nonnegative: compare q^root against coef^root * radicand.
  Rational lhs = q;
  Rational rhs = coef_;
  for (unsigned i = 1; i < root_; ++i) {
    lhs *= q;
    rhs *= coef_;
  }
  rhs *= radicand_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::optional<Rational> Eps::as_rational() const {
  if (root_ == 1) return coef_;
  if (coef_ == 0 || radicand_ == 0) return Rational(0);
  if (radicand_ == 1) return coef_;
  return std::nullopt;
}

Eps Eps::half() const { return Eps(coef_ / 2, radicand_, root_); }

std::string Eps::str() const {
  if (auto r = as_rational()) return format_rational(*r);
  std::ostringstream os;
  os << format_rational(coef_) << "*(" << format_rational(radicand_) << ")^(1/"
     << root_ << ')';
  return os.str();
}

Int k_pow_2k(int k) {
  Int r = 1;
  for (int i = 0; i < 2 * k; ++i) r *= k;
  return r;
}

Int factorial(int k) {
  Int r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace hfreg
