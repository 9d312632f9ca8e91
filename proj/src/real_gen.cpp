#include "genscale/real_gen.hpp"

#include <numeric>

#include "genscale/errors.hpp"

namespace genscale {

std::vector<long long> j_sequence(const Rational& alpha, int c, int d) {
  if (alpha.num < 0) throw PreconditionError("j_sequence: alpha must be >= 0");
  if (c < 1) throw PreconditionError("j_sequence: modulus must be >= 1");
  if (d < 1) throw PreconditionError("j_sequence: length must be >= 1");
  std::vector<long long> seq(d);
  for (long long k = 0; k < d; ++k) {
    // floor(k * alpha) exactly: both factors non-negative
    const long long fl = k * alpha.num / alpha.den;
    seq[k] = fl % c;
  }
  return seq;
}

Scale j_set(const Rational& alpha, int c, int d) {
  const std::vector<long long> seq = j_sequence(alpha, c, d);
  std::vector<int> values(seq.begin(), seq.end());
  return make_scale(c, std::move(values));
}

std::pair<Rational, Rational> alpha_stability_interval(const Rational& alpha, int c, int d) {
  if (alpha.num < 0) throw PreconditionError("alpha_stability_interval: alpha must be >= 0");
  if (c < 1) throw PreconditionError("alpha_stability_interval: modulus must be >= 1");
  if (d < 2) throw PreconditionError("alpha_stability_interval: length must be >= 2");
  // Term k keeps its floor while k*beta < floor(k*alpha) + 1; the first
  // breakpoint over k = 1..d-1 ends the interval.
  Rational end(0, 1);
  bool first = true;
  for (long long k = 1; k < d; ++k) {
    const long long fl = k * alpha.num / alpha.den;
    const Rational breakpoint(fl + 1, k);
    if (first || breakpoint < end) {
      end = breakpoint;
      first = false;
    }
  }
  return {alpha, end};
}

PSet p_set(const RationalPoint& x, int d) {
  if (d < 1) throw PreconditionError("p_set: length must be >= 1");
  std::set<RationalPoint> points;
  RationalPoint current(0, 1);
  for (int k = 0; k < d; ++k) {
    points.insert(current);
    current = current + x;
  }
  return PSet{x, d, std::vector<RationalPoint>(points.begin(), points.end())};
}

std::set<RationalPoint> p_generators_finite(const PSet& s) {
  const long long q = s.x.den;
  const int d = s.d;
  if (d < 2 || q <= 2LL * (d - 1)) {
    throw HypothesisError(
        "p_generators_finite: requires d >= 2 and denominator q > 2(d-1)");
  }
  // All points live on the /q grid; work with integer residues mod q.
  std::vector<char> target(q, 0);
  for (const RationalPoint& pt : s.points) {
    if (q % pt.den != 0) {
      throw PreconditionError("p_generators_finite: point off the /q grid");
    }
    target[pt.num * (q / pt.den)] = 1;
  }
  const int dsize = static_cast<int>(s.points.size());

  std::set<RationalPoint> out;
  std::vector<int> support;
  support.reserve(d);
  std::vector<char> mark(q, 0);
  for (long long y = 0; y < q; ++y) {
    support.clear();
    long long r = 0;
    for (int k = 0; k < d; ++k) {
      if (!mark[r]) {
        mark[r] = 1;
        support.push_back(static_cast<int>(r));
      }
      r += y;
      if (r >= q) r -= q;
    }
    for (int v : support) mark[v] = 0;
    if (static_cast<int>(support.size()) != dsize) continue;
    for (long long tau = 0; tau < q; ++tau) {
      bool match = true;
      for (int v : support) {
        long long shifted = v + tau;
        if (shifted >= q) shifted -= q;
        if (!target[shifted]) {
          match = false;
          break;
        }
      }
      if (match) {
        out.insert(RationalPoint(y, q));
        break;
      }
    }
  }
  return out;
}

std::set<RationalPoint> p_infinite_generators(const RationalPoint& x) {
  const long long b = x.den;
  std::set<RationalPoint> out;
  if (b == 1) {
    out.insert(RationalPoint(0, 1));
    return out;
  }
  for (long long k = 1; k < b; ++k) {
    if (std::gcd(k, b) == 1) out.insert(RationalPoint(k, b));
  }
  return out;
}

}  // namespace genscale
