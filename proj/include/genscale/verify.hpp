#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genscale {

// One JSON-lines row of a verification report. The same schema serves every
// verifier: (c, d, f) identifies the swept case, kind is the structural
// classification, predicted the count the theorems imply, actual the
// brute-force count, ok the per-verifier criterion.
struct VerifyRow {
  int c = 0;
  int d = 0;
  int f = 0;
  std::string kind;
  int predicted = 0;
  int actual = 0;
  bool ok = true;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  long long cases = 0;
  long long violations = 0;
};

// Every generated scale with start 0 (generator structure is translation
// invariant), c <= c_max, step f, length d <= order(f): the brute-force
// generator count must be a totient number, and in particular never 14.
VerifyReport verify_totient_theorem(int c_max);

// Same sweep: classify must agree with enumerate_generators on kind
// consistency and count, every generator must share gcd(c, f), and the
// coprime branch must show exactly 2 generators for 1 < d < c-1 and phi(c)
// for d in {c-1, c}.
VerifyReport verify_classification(int c_max);

// Every swept generated scale with a generated complement (both nontrivial)
// must share a generator step and admit a translation embedding.
VerifyReport verify_chopin(int c_max);

// Full sweep over all d-subsets of Z_c (gcd(c, d) = 1 required,
// C(c, d) <= 2e6 enforced): the seminorm maximum must be attained exactly on
// the scales generated by a step coprime with c, and on each of those the
// DFT recovery must reproduce the brute-force generator steps (recovery is
// checked when its hypotheses 1 < d < c-1 hold).
VerifyReport verify_dft_maximality(int c, int d);

std::string row_json(const VerifyRow& row);

// Rows, one JSON object per line, then a summary trailer
// {"cases":N,"violations":V}. Byte-stable for identical inputs.
void write_jsonl(const VerifyReport& report, std::ostream& out);

}  // namespace genscale
