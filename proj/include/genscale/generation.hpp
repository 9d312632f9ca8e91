#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "genscale/scale.hpp"

namespace genscale {

// One arithmetic presentation of a scale: the support of
// {start + k*step mod c : 0 <= k < length}.
struct GenSpec {
  int c = 1;
  int start = 0;
  int step = 0;
  int length = 1;
};

// Every generator of a scale, found by brute force. A pair (step, start) is
// listed iff the |A|-term sequence from start with that step visits |A|
// pairwise distinct residues and its support equals the scale. count is the
// number of distinct steps, not (step, start) pairs. For a one-note scale
// every step in 0..c-1 qualifies.
struct GeneratorReport {
  Scale scale;
  std::map<int, std::vector<int>> generators;  // step -> ascending starts
  int count = 0;

  std::set<int> steps() const;
};

enum class ScaleKind {
  OneNote,
  Tritone,
  TwoGenerator,
  RegularPolygon,
  IncompletePolygon,
  FullAggregate,
  AlmostFull,
  NotGenerated,
};

const char* kind_name(ScaleKind kind);

// Structural classification of a scale, decided without generator
// enumeration. witness_gcd is gcd(c, f) for any generator f (all generators
// of one scale share it); absent for NotGenerated. predicted_count is the
// generator count the structure implies.
struct Classification {
  ScaleKind kind = ScaleKind::NotGenerated;
  std::optional<int> witness_gcd;
  int predicted_count = 0;
};

// Support of the arithmetic sequence; collisions are allowed, so the result
// may have fewer than spec.length elements (callers needing injectivity
// compare sizes). Requires 1 <= length <= c.
Scale generate(const GenSpec& spec);

// Brute-force sweep over every (step, start) pair. Throws EmptyScaleError.
GeneratorReport enumerate_generators(const Scale& s);

// Classifies via difference-group reduction and interval-vector candidates;
// deliberately an independent code path from enumerate_generators (the two
// agreeing is the central cross-check). Throws EmptyScaleError.
Classification classify(const Scale& s);

// Support of {seed * ratio^k mod c : 0 <= k < length}.
Scale geometric_support(int c, int ratio, int seed, int length);

}  // namespace genscale
