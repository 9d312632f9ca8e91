#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "genscale/errors.hpp"
#include "genscale/generation.hpp"
#include "genscale/numtheory.hpp"
#include "genscale/scale.hpp"

using namespace genscale;

namespace {

int order_of(int f, int c) { return static_cast<int>(c / std::gcd((long long)f, (long long)c)); }

Scale random_nonempty(std::mt19937& rng, int c) {
  std::vector<int> values;
  while (values.empty()) {
    values.clear();
    for (int x = 0; x < c; ++x) {
      if (rng() % 2) values.push_back(x);
    }
  }
  return make_scale(c, std::move(values));
}

void check_agreement(const Scale& s) {
  const auto report = enumerate_generators(s);
  const auto cls = classify(s);
  if (report.count == 0) {
    CHECK(cls.kind == ScaleKind::NotGenerated);
    CHECK(cls.predicted_count == 0);
    CHECK_FALSE(cls.witness_gcd.has_value());
  } else {
    CHECK(cls.kind != ScaleKind::NotGenerated);
    CHECK(cls.predicted_count == report.count);
    // equal-gcd lemma: every generator shares gcd(c, f) with the witness
    REQUIRE(cls.witness_gcd.has_value());
    for (const auto& [f, starts] : report.generators) {
      if (s.size() == 1) break;  // any step generates a one-note scale
      CHECK(std::gcd((long long)f, (long long)s.c) == *cls.witness_gcd);
    }
  }
}

}  // namespace

TEST_CASE("generate") {
  CHECK(generate(GenSpec{12, 0, 7, 7}) == make_scale(12, {0, 2, 4, 6, 7, 9, 11}));
  CHECK(generate(GenSpec{12, 5, 7, 7}) == make_scale(12, {0, 2, 4, 5, 7, 9, 11}));
  CHECK(generate(GenSpec{12, 0, 0, 5}) == make_scale(12, {0}));  // zero step collapses
  CHECK(generate(GenSpec{14, 0, 2, 7}) == make_scale(14, {0, 2, 4, 6, 8, 10, 12}));
  CHECK_THROWS_AS(generate(GenSpec{12, 0, 1, 0}), PreconditionError);
  CHECK_THROWS_AS(generate(GenSpec{12, 0, 1, 13}), PreconditionError);
}

TEST_CASE("C major has exactly the fifth and fourth as generators") {
  const auto report = enumerate_generators(parse_scale("12:0,2,4,5,7,9,11"));
  CHECK(report.steps() == std::set<int>{5, 7});
  CHECK(report.count == 2);
}

TEST_CASE("tritone has one generator") {
  const auto report = enumerate_generators(make_scale(12, {0, 6}));
  CHECK(report.steps() == std::set<int>{6});
  CHECK(report.count == 1);
}

TEST_CASE("incomplete polygon in Z_16: four generators, four starting points") {
  const auto report = enumerate_generators(make_scale(16, {0, 2, 4, 6, 8, 10, 12}));
  CHECK(report.count == 4);
  REQUIRE(report.steps() == std::set<int>{2, 6, 10, 14});
  CHECK(report.generators.at(2) == std::vector<int>{0});
  CHECK(report.generators.at(6) == std::vector<int>{4});
  CHECK(report.generators.at(10) == std::vector<int>{8});
  CHECK(report.generators.at(14) == std::vector<int>{12});
}

TEST_CASE("one-note scales accept every step") {
  const auto report = enumerate_generators(make_scale(14, {3}));
  CHECK(report.count == 14);  // 14 is a nontotient: the one-note case really is special
  for (const auto& [f, starts] : report.generators) CHECK(starts == std::vector<int>{3});
  CHECK(classify(make_scale(14, {3})).kind == ScaleKind::OneNote);
  CHECK(classify(make_scale(14, {3})).predicted_count == 14);
}

TEST_CASE("empty scales are rejected") {
  CHECK_THROWS_AS(enumerate_generators(Scale{12, {}}), EmptyScaleError);
  CHECK_THROWS_AS(classify(Scale{12, {}}), EmptyScaleError);
}

TEST_CASE("classification examples") {
  SUBCASE("whole tone scale is a regular hexagon") {
    const auto cls = classify(make_scale(12, {0, 2, 4, 6, 8, 10}));
    CHECK(cls.kind == ScaleKind::RegularPolygon);
    CHECK(cls.predicted_count == 2);  // phi(6)
    CHECK(cls.witness_gcd == 2);
  }
  SUBCASE("incomplete pentagon in Z_10") {
    const auto cls = classify(make_scale(10, {1, 3, 5, 7}));
    CHECK(cls.kind == ScaleKind::IncompletePolygon);
    CHECK(cls.predicted_count == 4);  // phi(5)
    CHECK(cls.witness_gcd == 2);
  }
  SUBCASE("a cluster plus a gap is not generated") {
    const auto cls = classify(make_scale(12, {0, 1, 3}));
    CHECK(cls.kind == ScaleKind::NotGenerated);
    CHECK(cls.predicted_count == 0);
  }
  SUBCASE("major scale is the two-generator case") {
    const auto cls = classify(parse_scale("12:0,2,4,5,7,9,11"));
    CHECK(cls.kind == ScaleKind::TwoGenerator);
    CHECK(cls.predicted_count == 2);
    CHECK(cls.witness_gcd == 1);
  }
  SUBCASE("tritone") {
    const auto cls = classify(make_scale(12, {2, 8}));
    CHECK(cls.kind == ScaleKind::Tritone);
    CHECK(cls.predicted_count == 1);
    CHECK(cls.witness_gcd == 6);
  }
  SUBCASE("full aggregate") {
    const auto cls = classify(full_aggregate(12));
    CHECK(cls.kind == ScaleKind::FullAggregate);
    CHECK(cls.predicted_count == 4);  // phi(12)
  }
  SUBCASE("almost full scale") {
    const auto cls = classify(complement(make_scale(12, {5})));
    CHECK(cls.kind == ScaleKind::AlmostFull);
    CHECK(cls.predicted_count == 4);  // phi(12)
    CHECK(cls.witness_gcd == 1);
  }
  SUBCASE("two non-coprime generators: enlarged major-like scale") {
    // the fifth-generated 7-note scale of Z_12, doubled into Z_24
    const auto cls = classify(make_scale(24, {0, 4, 8, 12, 14, 18, 22}));
    CHECK(cls.kind == ScaleKind::TwoGenerator);
    CHECK(cls.predicted_count == 2);
    CHECK(cls.witness_gcd == 2);
  }
}

TEST_CASE("classify agrees with brute force on every subset, small moduli") {
  for (int c = 1; c <= 12; ++c) {
    for (int bits = 1; bits < (1 << c); ++bits) {
      std::vector<int> values;
      for (int x = 0; x < c; ++x) {
        if (bits & (1 << x)) values.push_back(x);
      }
      check_agreement(make_scale(c, std::move(values)));
    }
  }
}

TEST_CASE("classify agrees with brute force on random larger scales") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 400; ++iter) {
    const int c = 13 + static_cast<int>(rng() % 10);
    check_agreement(random_nonempty(rng, c));
  }
}

TEST_CASE("generator sets are closed under negation") {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 200; ++iter) {
    const int c = 2 + static_cast<int>(rng() % 17);
    const Scale s = random_nonempty(rng, c);
    const auto steps = enumerate_generators(s).steps();
    for (int f : steps) CHECK(steps.count((c - f) % c) == 1);
  }
}

TEST_CASE("generator structure is translation invariant") {
  std::mt19937 rng(47);
  for (int iter = 0; iter < 150; ++iter) {
    const int c = 2 + static_cast<int>(rng() % 15);
    const Scale s = random_nonempty(rng, c);
    const int t = static_cast<int>(rng() % c);
    CHECK(enumerate_generators(s).steps() == enumerate_generators(translate(s, t)).steps());
  }
}

TEST_CASE("generated scales always have a totient number of generators") {
  // sweep every generated scale with start 0 up to c = 30
  for (int c = 2; c <= 30; ++c) {
    for (int f = 1; f < c; ++f) {
      for (int d = 2; d <= order_of(f, c); ++d) {
        const int count = enumerate_generators(generate(GenSpec{c, 0, f, d})).count;
        CHECK(count != 14);
        CHECK(is_totient_number(count));
      }
    }
  }
}

TEST_CASE("regular polygons have phi(d) generators, all of order d") {
  for (int c = 2; c <= 24; ++c) {
    for (long long m : divisors(c)) {
      const int d = static_cast<int>(c / m);
      if (d < 2) continue;
      const Scale polygon = generate(GenSpec{c, 1, static_cast<int>(m), d});
      REQUIRE(polygon.size() == d);
      const auto report = enumerate_generators(polygon);
      CHECK(report.count == totient(d));
      for (const auto& [f, starts] : report.generators) {
        CHECK(order_of(f, c) == d);
        CHECK(static_cast<int>(starts.size()) == d);  // any vertex starts the walk
      }
    }
  }
}

TEST_CASE("incomplete polygons pair each generator with its own starting point") {
  for (int c = 4; c <= 24; ++c) {
    for (long long m : divisors(c)) {
      if (m == 1 || m == c) continue;
      const int d = static_cast<int>(c / m) - 1;
      if (d < 2) continue;
      const Scale incomplete = generate(GenSpec{c, 0, static_cast<int>(m), d});
      REQUIRE(classify(incomplete).kind == ScaleKind::IncompletePolygon);
      const auto report = enumerate_generators(incomplete);
      std::set<int> seen_starts;
      for (const auto& [f, starts] : report.generators) {
        CHECK(starts.size() == 1);
        seen_starts.insert(starts.front());
      }
      CHECK(static_cast<int>(seen_starts.size()) == report.count);
    }
  }
}

TEST_CASE("geometric progressions mod 32 collapse onto one scale") {
  const Scale expected = make_scale(32, {1, 3, 9, 11, 17, 19, 25, 27});
  CHECK(geometric_support(32, 3, 1, 8) == expected);
  CHECK(geometric_support(32, 11, 1, 8) == expected);
  CHECK(geometric_support(32, 19, 1, 8) == expected);
  CHECK(geometric_support(32, 27, 1, 8) == expected);
  CHECK(geometric_support(10, 1, 1, 4) == make_scale(10, {1}));
}
