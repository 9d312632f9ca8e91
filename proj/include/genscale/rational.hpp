#pragma once

#include <string>

namespace genscale {

// Exact signed rational, always reduced, denominator > 0. Magnitudes stay at
// desk scale, so long long components suffice.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const = default;
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
  bool operator>(const Rational& o) const;
  bool operator>=(const Rational& o) const;

  long long floor() const;
  std::string str() const;  // "p/q"
};

// Accepts "p/q" or a bare integer "p" (optional leading minus).
Rational parse_rational(const std::string& text);

// A residue mod 1 in lowest terms: 0 <= num < den. The canonical
// representative of a point on the circle R/Z.
struct RationalPoint {
  long long num = 0;
  long long den = 1;

  RationalPoint() = default;
  RationalPoint(long long n, long long d);  // wraps into [0, 1)
  explicit RationalPoint(const Rational& r);

  Rational value() const { return Rational(num, den); }
  RationalPoint operator+(const RationalPoint& o) const;
  RationalPoint operator-(const RationalPoint& o) const;
  RationalPoint negated() const;  // -x mod 1

  bool operator==(const RationalPoint& o) const = default;
  bool operator<(const RationalPoint& o) const;

  std::string str() const;  // "p/q"
};

RationalPoint parse_rational_point(const std::string& text);

}  // namespace genscale
