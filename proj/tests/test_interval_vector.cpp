#include <doctest.h>

#include <numeric>
#include <random>

#include "genscale/errors.hpp"
#include "genscale/interval_vector.hpp"
#include "genscale/scale.hpp"

using namespace genscale;

namespace {

// definitional oracle: count the ordered pairs one by one
std::vector<int> pair_count_oracle(const Scale& s) {
  std::vector<int> v(s.c, 0);
  for (int x : s.pcs) {
    for (int y : s.pcs) ++v[((y - x) % s.c + s.c) % s.c];
  }
  return v;
}

Scale cluster(int c, int d) {
  std::vector<int> values(d);
  std::iota(values.begin(), values.end(), 0);
  return make_scale(c, std::move(values));
}

Scale random_scale(std::mt19937& rng, int c) {
  std::vector<int> values;
  for (int x = 0; x < c; ++x) {
    if (rng() % 2) values.push_back(x);
  }
  return make_scale(c, std::move(values));
}

}  // namespace

TEST_CASE("interval vector of the 8-note cluster mod 12") {
  const auto iv = interval_vector(cluster(12, 8));
  CHECK(iv.v == std::vector<int>{8, 7, 6, 5, 4, 4, 4, 4, 4, 5, 6, 7});
  CHECK(format_interval_vector(iv) == "[8, 7, 6, 5, 4, 4, 4, 4, 4, 5, 6, 7]");
}

TEST_CASE("interval vector small cases") {
  const auto singleton = interval_vector(make_scale(9, {4}));
  CHECK(singleton.v == std::vector<int>{1, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto whole_tone = interval_vector(make_scale(12, {0, 2, 4, 6, 8, 10}));
  CHECK(whole_tone.v == std::vector<int>{6, 0, 6, 0, 6, 0, 6, 0, 6, 0, 6, 0});
}

TEST_CASE("interval vector invariants") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const int c = 2 + static_cast<int>(rng() % 23);
    const Scale s = random_scale(rng, c);
    const auto iv = interval_vector(s);
    CHECK(iv.v[0] == s.size());
    CHECK(std::accumulate(iv.v.begin(), iv.v.end(), 0) == s.size() * s.size());
    for (int k = 1; k < c; ++k) CHECK(iv.v[k] == iv.v[c - k]);
  }
}

TEST_CASE("cluster closed form examples") {
  CHECK(cluster_vector(12, 8).v == std::vector<int>{8, 7, 6, 5, 4, 4, 4, 4, 4, 5, 6, 7});
  CHECK(cluster_vector(12, 8).v == interval_vector(cluster(12, 8)).v);
  CHECK(cluster_vector(10, 4).v == std::vector<int>{4, 3, 2, 1, 0, 0, 0, 1, 2, 3});
}

TEST_CASE("cluster closed form equals the pair-count oracle up to c = 40") {
  for (int c = 4; c <= 40; ++c) {
    for (int d = 2; d < c - 1; ++d) {
      CHECK(cluster_vector(c, d).v == pair_count_oracle(cluster(c, d)));
    }
  }
}

TEST_CASE("cluster closed form rejects degenerate sizes") {
  CHECK_THROWS_AS(cluster_vector(12, 1), PreconditionError);
  CHECK_THROWS_AS(cluster_vector(12, 11), PreconditionError);
  CHECK_THROWS_AS(cluster_vector(12, 12), PreconditionError);
}

TEST_CASE("only the unit intervals reach multiplicity d-1 in a cluster") {
  for (int c = 4; c <= 30; ++c) {
    for (int d = 2; d < c - 1; ++d) {
      const auto iv = cluster_vector(c, d);
      for (int k = 1; k < c; ++k) {
        if (k == 1 || k == c - 1) {
          CHECK(iv.v[k] == d - 1);
        } else {
          CHECK(iv.v[k] < d - 1);
        }
      }
    }
  }
}

TEST_CASE("affine maps permute the interval vector") {
  std::mt19937 rng(29);
  for (int iter = 0; iter < 200; ++iter) {
    const int c = 2 + static_cast<int>(rng() % 19);
    const Scale s = random_scale(rng, c);
    const int lambda = 1 + static_cast<int>(rng() % c);
    if (!AffineMap{c, lambda, 0}.bijective()) continue;
    const int mu = static_cast<int>(rng() % c);
    const auto before = interval_vector(s);
    const auto after = interval_vector(apply_affine(s, AffineMap{c, lambda, mu}));
    for (int k = 0; k < c; ++k) {
      CHECK(after.v[static_cast<int>(static_cast<long long>(lambda) * k % c)] == before.v[k]);
    }
  }
}

TEST_CASE("union of polygons") {
  const Scale octatonic = make_scale(12, {0, 1, 3, 4, 6, 7, 9, 10});
  CHECK(is_union_of_polygons(octatonic, 3));
  CHECK_FALSE(is_union_of_polygons(octatonic, 2));
  // minor third with multiplicity 4 in 5 notes: one short of a polygon union
  const Scale liszt = make_scale(12, {2, 5, 8, 9, 11});
  CHECK(interval_vector(liszt).v[3] == 4);
  CHECK_FALSE(is_union_of_polygons(liszt, 3));
  CHECK_THROWS_AS(is_union_of_polygons(octatonic, 0), PreconditionError);
  CHECK_THROWS_AS(is_union_of_polygons(octatonic, 12), PreconditionError);
}

TEST_CASE("both polygon-union characterizations agree everywhere") {
  // exhaustive over every subset for small c; is_union_of_polygons itself
  // throws if the multiplicity and translation tests ever disagree
  for (int c = 2; c <= 10; ++c) {
    for (int bits = 1; bits < (1 << c); ++bits) {
      std::vector<int> values;
      for (int x = 0; x < c; ++x) {
        if (bits & (1 << x)) values.push_back(x);
      }
      const Scale s = make_scale(c, std::move(values));
      for (int f = 1; f < c; ++f) (void)is_union_of_polygons(s, f);
    }
  }
  std::mt19937 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    const int c = 11 + static_cast<int>(rng() % 14);
    const Scale s = random_scale(rng, c);
    if (s.empty()) continue;
    for (int f = 1; f < c; ++f) (void)is_union_of_polygons(s, f);
  }
}

TEST_CASE("regular polygon detection") {
  CHECK(is_regular_polygon(make_scale(12, {0, 2, 4, 6, 8, 10})) == 2);
  CHECK(is_regular_polygon(make_scale(12, {1, 5, 9})) == 4);
  CHECK(is_regular_polygon(make_scale(12, {0, 1, 3})) == std::nullopt);
  CHECK(is_regular_polygon(full_aggregate(7)) == 1);
  CHECK(is_regular_polygon(make_scale(12, {5})) == 12);  // 1-gon
  CHECK(is_regular_polygon(make_scale(12, {3, 9})) == 6);
}

TEST_CASE("difference group") {
  CHECK(difference_group(make_scale(14, {0, 2, 4, 6, 8, 10, 12})) == 2);
  CHECK(difference_group(make_scale(9, {4})) == 9);  // trivial group marker
  CHECK(difference_group(make_scale(12, {0, 2, 5, 7})) == 1);
  CHECK(difference_group(make_scale(12, {1, 5, 9})) == 4);
  CHECK_THROWS_AS(difference_group(Scale{5, {}}), PreconditionError);
}
