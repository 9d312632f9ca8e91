#pragma once

#include <set>
#include <utility>
#include <vector>

#include "genscale/rational.hpp"
#include "genscale/scale.hpp"

namespace genscale {

// Scales generated by non-integer steps: floor sequences in Z_c and multiples
// of an exact rational on the circle R/Z. No floating point anywhere here;
// floor and mod-1 comparisons are discontinuous, so everything stays exact.

// Termwise sequence floor(k*alpha) mod c for k = 0..d-1. alpha must be a
// non-negative exact rational, d >= 1.
std::vector<long long> j_sequence(const Rational& alpha, int c, int d);

// Support of the sequence above.
Scale j_set(const Rational& alpha, int c, int d);

// The maximal half-open interval [alpha, alpha') on which every rational beta
// reproduces the J-sequence termwise: alpha' is the smallest floor breakpoint
// min over k=1..d-1 of (floor(k*alpha)+1)/k. Requires d >= 2. The interval is
// never degenerate. Right-maximality only; nothing is claimed to the left.
std::pair<Rational, Rational> alpha_stability_interval(const Rational& alpha, int c, int d);

// {k*x mod 1 : 0 <= k < d} as exact points on the circle.
struct PSet {
  RationalPoint x;
  int d = 1;
  std::vector<RationalPoint> points;  // sorted support
};

PSet p_set(const RationalPoint& x, int d);

// All grid points y = k/q (q the denominator of x) such that some translate
// of the d-term P_y set equals s, by brute force over the grid. Requires
// d >= 2 and q > 2(d-1) — below that bound distinct generators can collide,
// so HypothesisError is thrown. In generic position the answer is exactly
// {x, 1-x}.
std::set<RationalPoint> p_generators_finite(const PSet& s);

// Generators of the infinite scale {k*x mod 1 : k in Z} for rational x = a/b:
// the group is <1/b>, whose generators are the k/b with gcd(k, b) = 1. For
// b = 1 the trivial group reports {0}.
std::set<RationalPoint> p_infinite_generators(const RationalPoint& x);

}  // namespace genscale
