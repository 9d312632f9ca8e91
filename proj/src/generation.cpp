#include "genscale/generation.hpp"

#include <algorithm>
#include <numeric>

#include "genscale/errors.hpp"
#include "genscale/interval_vector.hpp"
#include "genscale/numtheory.hpp"

namespace genscale {

std::set<int> GeneratorReport::steps() const {
  std::set<int> out;
  for (const auto& [step, starts] : generators) out.insert(step);
  return out;
}

const char* kind_name(ScaleKind kind) {
  switch (kind) {
    case ScaleKind::OneNote: return "OneNote";
    case ScaleKind::Tritone: return "Tritone";
    case ScaleKind::TwoGenerator: return "TwoGenerator";
    case ScaleKind::RegularPolygon: return "RegularPolygon";
    case ScaleKind::IncompletePolygon: return "IncompletePolygon";
    case ScaleKind::FullAggregate: return "FullAggregate";
    case ScaleKind::AlmostFull: return "AlmostFull";
    case ScaleKind::NotGenerated: return "NotGenerated";
  }
  return "Unknown";
}

Scale generate(const GenSpec& spec) {
  if (spec.c < 1) throw PreconditionError("generate: modulus must be >= 1");
  if (spec.length < 1 || spec.length > spec.c) {
    throw PreconditionError("generate: requires 1 <= length <= c");
  }
  const int c = spec.c;
  const int step = mod_reduce(spec.step, c);
  std::vector<int> values;
  values.reserve(spec.length);
  int x = mod_reduce(spec.start, c);
  for (int k = 0; k < spec.length; ++k) {
    values.push_back(x);
    x += step;
    if (x >= c) x -= c;
  }
  return make_scale(c, std::move(values));
}

GeneratorReport enumerate_generators(const Scale& s) {
  if (s.empty()) throw EmptyScaleError("enumerate_generators: empty scale");
  const int c = s.c;
  const int d = s.size();

  std::vector<char> member(c, 0);
  for (int pc : s.pcs) member[pc] = 1;

  // stamp array instead of clearing a visited set per (step, start) pair
  std::vector<int> visited(c, -1);
  int stamp = 0;

  GeneratorReport report;
  report.scale = s;
  for (int f = 0; f < c; ++f) {
    for (int a : s.pcs) {
      ++stamp;
      int x = a;
      bool ok = true;
      for (int k = 0; k < d; ++k) {
        if (!member[x] || visited[x] == stamp) {
          ok = false;
          break;
        }
        visited[x] = stamp;
        x += f;
        if (x >= c) x -= c;
      }
      // d distinct members of a d-element set: the support is the scale.
      if (ok) report.generators[f].push_back(a);
    }
  }
  report.count = static_cast<int>(report.generators.size());
  return report;
}

Classification classify(const Scale& s) {
  if (s.empty()) throw EmptyScaleError("classify: empty scale");
  const int c = s.c;
  const int d = s.size();

  if (d == 1) {
    // Convention: every step generates a one-note scale, so the predicted
    // count is c itself (excluded from the totient-count statements).
    return Classification{ScaleKind::OneNote, c, c};
  }
  if (d == c) {
    return Classification{ScaleKind::FullAggregate, 1, static_cast<int>(totient(c))};
  }
  if (d == 2 && 2 * (s.pcs[1] - s.pcs[0]) == c) {
    return Classification{ScaleKind::Tritone, c / 2, 1};
  }

  // <A - A> = g Z_c; every generator f has gcd(c, f) = g, so A lives in a
  // coset of the n-element subgroup, n = c/g.
  const int g = difference_group(s);
  const int n = c / g;

  if (d == n) {
    return Classification{ScaleKind::RegularPolygon, g, static_cast<int>(totient(d))};
  }
  if (d == n - 1) {
    return Classification{g == 1 ? ScaleKind::AlmostFull : ScaleKind::IncompletePolygon,
                          g, static_cast<int>(totient(d + 1))};
  }

  // 1 < d < n-1. Scaling the coset down by g leaves a set in Z_n whose
  // difference group is all of Z_n; it is generated iff some step coprime
  // with n walks through it. Candidate steps are exactly the intervals of
  // multiplicity d-1 (the cluster image argument), each verified by walking
  // from a head, i.e. an element with no predecessor inside the set.
  std::vector<int> reduced;
  reduced.reserve(d);
  for (int x : s.pcs) reduced.push_back((x - s.pcs[0]) / g);
  std::vector<char> member(n, 0);
  for (int x : reduced) member[x] = 1;

  const IntervalVector iv = interval_vector(Scale{n, reduced});
  for (int k = 1; k < n; ++k) {
    if (iv.v[k] != d - 1) continue;
    if (std::gcd(static_cast<long long>(k), static_cast<long long>(n)) != 1) continue;
    for (int head : reduced) {
      int before = head - k;
      if (before < 0) before += n;
      if (member[before]) continue;
      int x = head;
      bool covers = true;
      for (int i = 0; i < d; ++i) {
        if (!member[x]) {
          covers = false;
          break;
        }
        x += k;
        if (x >= n) x -= n;
      }
      if (covers) return Classification{ScaleKind::TwoGenerator, g, 2};
    }
  }
  return Classification{ScaleKind::NotGenerated, std::nullopt, 0};
}

Scale geometric_support(int c, int ratio, int seed, int length) {
  if (c < 1) throw PreconditionError("geometric_support: modulus must be >= 1");
  if (length < 1) throw PreconditionError("geometric_support: length must be >= 1");
  const long long r = mod_reduce(ratio, c);
  long long x = mod_reduce(seed, c);
  std::vector<int> values;
  values.reserve(length);
  for (int k = 0; k < length; ++k) {
    values.push_back(static_cast<int>(x));
    x = x * r % c;
  }
  return make_scale(c, std::move(values));
}

}  // namespace genscale
