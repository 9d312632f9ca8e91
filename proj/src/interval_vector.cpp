#include "genscale/interval_vector.hpp"

#include <algorithm>
#include <numeric>

#include "genscale/errors.hpp"

namespace genscale {

IntervalVector interval_vector(const Scale& s) {
  std::vector<int> v(s.c, 0);
  for (int x : s.pcs) {
    for (int y : s.pcs) {
      int k = y - x;
      if (k < 0) k += s.c;
      ++v[k];
    }
  }
  return IntervalVector{s.c, std::move(v)};
}

IntervalVector cluster_vector(int c, int d) {
  if (!(1 < d && d < c - 1)) {
    throw PreconditionError("cluster_vector: requires 1 < d < c-1");
  }
  std::vector<int> v(c, 0);
  v[0] = d;
  const int lo = std::min(d, c - d);
  const int hi = std::max(d, c - d);
  for (int k = 1; 2 * k <= c; ++k) {
    int count = 0;
    if (k <= lo) {
      count = d - k;
    } else if (c - d < k && k <= d) {
      count = 2 * d - c;
    } else if (k >= hi) {
      count = d - c + k;
    }
    v[k] = count;
    v[c - k] = count;
  }
  return IntervalVector{c, std::move(v)};
}

bool is_union_of_polygons(const Scale& s, int f) {
  if (s.empty()) throw PreconditionError("is_union_of_polygons: empty scale");
  const int step = mod_reduce(f, s.c);
  if (step == 0) throw PreconditionError("is_union_of_polygons: f must be nonzero mod c");
  const bool by_multiplicity = interval_vector(s).v[step] == s.size();
  const bool by_translation = translate(s, step) == s;
  if (by_multiplicity != by_translation) {
    throw Error("is_union_of_polygons: characterizations disagree");
  }
  return by_multiplicity;
}

std::optional<int> is_regular_polygon(const Scale& s) {
  if (s.empty()) throw PreconditionError("is_regular_polygon: empty scale");
  const int c = s.c;
  const int d = s.size();
  const IntervalVector iv = interval_vector(s);
  for (long long f = 1; f <= c; ++f) {
    if (c % f != 0) continue;
    if (c / f != d) continue;  // one orbit of x -> x+f has exactly c/f points
    if (iv.v[static_cast<int>(f % c)] != d) continue;
    int x = s.pcs[0];
    bool orbit = true;
    for (int k = 0; k < d; ++k) {
      if (!s.contains(x)) {
        orbit = false;
        break;
      }
      x = mod_reduce(x + f, c);
    }
    if (orbit) return static_cast<int>(f);
  }
  return std::nullopt;
}

int difference_group(const Scale& s) {
  if (s.empty()) throw PreconditionError("difference_group: empty scale");
  long long g = s.c;
  for (int x : s.pcs) g = std::gcd(g, static_cast<long long>(x - s.pcs[0]));
  return static_cast<int>(g);
}

std::string format_interval_vector(const IntervalVector& iv) {
  std::string out = "[";
  for (size_t i = 0; i < iv.v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(iv.v[i]);
  }
  out += "]";
  return out;
}

}  // namespace genscale
