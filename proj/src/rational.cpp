#include "genscale/rational.hpp"

#include <charconv>
#include <numeric>

#include "genscale/errors.hpp"

namespace genscale {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw PreconditionError("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

Rational Rational::operator-() const { return Rational(-num, den); }

bool Rational::operator<(const Rational& o) const { return num * o.den < o.num * den; }
bool Rational::operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
bool Rational::operator>(const Rational& o) const { return o < *this; }
bool Rational::operator>=(const Rational& o) const { return o <= *this; }

long long Rational::floor() const {
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
  auto parse_ll = [&](const std::string& part, bool allow_sign) -> long long {
    if (part.empty()) throw ParseError("rational: empty component in '" + text + "'");
    const char* begin = part.data();
    const char* end = part.data() + part.size();
    if (!allow_sign && part[0] == '-') {
      throw ParseError("rational: denominator must be positive in '" + text + "'");
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw ParseError("rational: malformed '" + text + "'");
    }
    return value;
  };

  const size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_ll(text, true), 1);
  const long long num = parse_ll(text.substr(0, slash), true);
  const long long den = parse_ll(text.substr(slash + 1), false);
  if (den == 0) throw ParseError("rational: zero denominator in '" + text + "'");
  return Rational(num, den);
}

RationalPoint::RationalPoint(long long n, long long d) {
  const Rational r(n, d);
  long long m = r.num % r.den;
  if (m < 0) m += r.den;
  if (m == 0) {
    num = 0;
    den = 1;
  } else {
    // gcd(num mod den, den) = gcd(num, den) = 1, so still reduced
    num = m;
    den = r.den;
  }
}

RationalPoint::RationalPoint(const Rational& r) : RationalPoint(r.num, r.den) {}

RationalPoint RationalPoint::operator+(const RationalPoint& o) const {
  return RationalPoint(num * o.den + o.num * den, den * o.den);
}

RationalPoint RationalPoint::operator-(const RationalPoint& o) const {
  return RationalPoint(num * o.den - o.num * den, den * o.den);
}

RationalPoint RationalPoint::negated() const { return RationalPoint(-num, den); }

bool RationalPoint::operator<(const RationalPoint& o) const {
  return num * o.den < o.num * den;
}

std::string RationalPoint::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

RationalPoint parse_rational_point(const std::string& text) {
  return RationalPoint(parse_rational(text));
}

}  // namespace genscale
