#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "genscale/errors.hpp"
#include "genscale/verify.hpp"

using namespace genscale;

namespace {

const VerifyRow* find_row(const VerifyReport& report, int c, int d, int f) {
  for (const auto& row : report.rows) {
    if (row.c == c && row.d == d && row.f == f) return &row;
  }
  return nullptr;
}

std::string serialized(const VerifyReport& report) {
  std::ostringstream out;
  write_jsonl(report, out);
  return out.str();
}

}  // namespace

TEST_CASE("totient sweep has no violations and carries the known rows") {
  const auto report = verify_totient_theorem(16);
  CHECK(report.violations == 0);
  CHECK(report.cases == static_cast<long long>(report.rows.size()));

  const VerifyRow* z16 = find_row(report, 16, 7, 2);
  REQUIRE(z16 != nullptr);
  CHECK(z16->actual == 4);  // phi(8)
  CHECK(z16->kind == "IncompletePolygon");
  CHECK(z16->ok);

  const VerifyRow* z14 = find_row(report, 14, 7, 2);
  REQUIRE(z14 != nullptr);
  CHECK(z14->actual == 6);  // the whole-tone scale of Z_14
  CHECK(z14->kind == "RegularPolygon");
}

TEST_CASE("totient sweep at the smallest modulus") {
  const auto report = verify_totient_theorem(2);
  CHECK(report.violations == 0);
  REQUIRE(report.rows.size() == 1);  // {0, 1} in Z_2 is the only case
  CHECK(report.rows[0].c == 2);
  CHECK(report.rows[0].d == 2);
  CHECK(report.rows[0].f == 1);
  CHECK(report.rows[0].actual == 1);  // phi(2)
  CHECK(report.rows[0].kind == "FullAggregate");
}

TEST_CASE("classification sweep agrees with brute force") {
  const auto report = verify_classification(12);
  CHECK(report.violations == 0);

  const VerifyRow* major = find_row(report, 12, 7, 5);
  REQUIRE(major != nullptr);
  CHECK(major->kind == "TwoGenerator");
  CHECK(major->predicted == 2);
  CHECK(major->actual == 2);

  const VerifyRow* almost_full = find_row(report, 12, 11, 1);
  REQUIRE(almost_full != nullptr);
  CHECK(almost_full->kind == "AlmostFull");
  CHECK(almost_full->actual == 4);  // phi(12)

  const auto z10 = verify_classification(10);
  const VerifyRow* incomplete = find_row(z10, 10, 4, 2);
  REQUIRE(incomplete != nullptr);
  CHECK(incomplete->kind == "IncompletePolygon");
  CHECK(incomplete->actual == 4);
}

TEST_CASE("chopin sweep has no violations") {
  const auto report = verify_chopin(12);
  CHECK(report.violations == 0);
  CHECK(report.cases > 0);
  // the CDFG tetrachord class appears as its start-0 representative (f=5, d=4)
  CHECK(find_row(report, 12, 4, 5) != nullptr);
  CHECK_THROWS_AS(verify_chopin(3), PreconditionError);
}

TEST_CASE("dft maximality sweep") {
  const auto report = verify_dft_maximality(8, 3);
  CHECK(report.violations == 0);
  CHECK(report.cases > 0);

  SUBCASE("almost-full edge: every subset ties") {
    const auto edge = verify_dft_maximality(6, 5);
    CHECK(edge.violations == 0);
    CHECK(edge.cases == 6);  // all C(6, 5) subsets are generated and tie
  }
  SUBCASE("hypothesis and size guards") {
    CHECK_THROWS_AS(verify_dft_maximality(12, 4), HypothesisError);   // gcd != 1
    CHECK_THROWS_AS(verify_dft_maximality(40, 19), SweepTooLargeError);
  }
}

TEST_CASE("reports serialize deterministically") {
  const auto once = serialized(verify_totient_theorem(8));
  const auto twice = serialized(verify_totient_theorem(8));
  CHECK(once == twice);
  CHECK(once.find("\"ok\":true") != std::string::npos);
  // trailer is the last line
  const auto tail = once.rfind("{\"cases\":");
  REQUIRE(tail != std::string::npos);
  CHECK(once.find("\"violations\":0", tail) != std::string::npos);
}

TEST_CASE("row json matches the documented schema") {
  const VerifyRow row{16, 7, 2, "IncompletePolygon", 4, 4, true};
  CHECK(row_json(row) ==
        "{\"c\":16,\"d\":7,\"f\":2,\"kind\":\"IncompletePolygon\","
        "\"predicted\":4,\"actual\":4,\"ok\":true}");
}
