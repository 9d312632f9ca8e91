#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genscale/scale.hpp"

namespace genscale {

// Oriented interval content of a pc-set: v[k] counts ordered pairs
// (x, y) in A^2 with y - x = k (mod c). v[0] = |A|, sum v[k] = |A|^2,
// and v[k] = v[c-k].
struct IntervalVector {
  int c = 1;
  std::vector<int> v;
};

// Definitional pair count, any scale.
IntervalVector interval_vector(const Scale& s);

// Closed form for the chromatic cluster {0, ..., d-1}: d-k pairs while the
// interval fits inside the cluster, d-c+k once it wraps, 2d-c where the two
// regimes overlap, zero in between. Requires 1 < d < c-1.
IntervalVector cluster_vector(int c, int d);

// True iff A is a union of regular polygons all generated by f, i.e.
// V_A(f) = |A|, equivalently A + f = A. Both characterizations are evaluated
// and must agree. f must be nonzero mod c.
bool is_union_of_polygons(const Scale& s, int f);

// Smallest divisor f of c such that A is a single orbit of x -> x + f
// (so |A| = c/f); absent when A is not a regular polygon. Singletons are
// 1-gons and report f = c.
std::optional<int> is_regular_polygon(const Scale& s);

// Generator g (a divisor of c) of the subgroup spanned by all differences of
// elements of A: <A - A> = g Z_c. Returns c for singletons (trivial group).
int difference_group(const Scale& s);

// "[v0, v1, ...]", the usual bracketed notation.
std::string format_interval_vector(const IntervalVector& iv);

}  // namespace genscale
