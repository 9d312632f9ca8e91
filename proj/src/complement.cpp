#include "genscale/complement.hpp"

#include <algorithm>

#include "genscale/errors.hpp"
#include "genscale/generation.hpp"

namespace genscale {

const char* embed_direction_name(EmbedDirection dir) {
  return dir == EmbedDirection::AIntoB ? "a_into_b" : "b_into_a";
}

namespace {

bool subset_of(const Scale& small, const Scale& large) {
  for (int x : small.pcs) {
    if (!large.contains(x)) return false;
  }
  return true;
}

}  // namespace

ChopinReport chopin_check(const Scale& a) {
  const int c = a.c;
  const int da = a.size();
  if (da < 2 || da > c - 2) {
    throw TrivialScaleError("chopin_check: requires 2 <= |A| <= c-2");
  }
  const Scale b = complement(a);

  ChopinReport report;
  const GeneratorReport gen_a = enumerate_generators(a);
  const GeneratorReport gen_b = enumerate_generators(b);
  report.both_generated = gen_a.count > 0 && gen_b.count > 0;
  if (!report.both_generated) return report;

  const std::set<int> steps_a = gen_a.steps();
  const std::set<int> steps_b = gen_b.steps();
  std::set_intersection(steps_a.begin(), steps_a.end(), steps_b.begin(), steps_b.end(),
                        std::inserter(report.shared_steps, report.shared_steps.begin()));

  // Sizes force the direction; for equal halves a subset relation is equality,
  // so scanning A into B covers that branch too.
  const bool a_small = da <= b.size();
  const Scale& small = a_small ? a : b;
  const Scale& large = a_small ? b : a;
  for (int tau = 0; tau < c; ++tau) {
    if (subset_of(translate(small, tau), large)) {
      report.embedding = ChopinReport::Embedding{
          a_small ? EmbedDirection::AIntoB : EmbedDirection::BIntoA, tau};
      break;
    }
  }
  return report;
}

}  // namespace genscale
