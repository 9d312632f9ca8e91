#pragma once

#include <optional>
#include <set>

#include "genscale/scale.hpp"

namespace genscale {

enum class EmbedDirection { AIntoB, BIntoA };

const char* embed_direction_name(EmbedDirection dir);

// Result of checking a scale A against its complement B: whether both are
// generated, the generator steps they share, and a translation embedding the
// smaller one into the larger (equality when sizes match). shared_steps and
// embedding are only filled in when both sides are generated.
struct ChopinReport {
  struct Embedding {
    EmbedDirection direction;
    int tau;
  };

  bool both_generated = false;
  std::set<int> shared_steps;
  std::optional<Embedding> embedding;
};

// Requires 2 <= |A| <= c-2 (throws TrivialScaleError otherwise). The embedding
// scan reports the smallest valid translation.
ChopinReport chopin_check(const Scale& a);

}  // namespace genscale
