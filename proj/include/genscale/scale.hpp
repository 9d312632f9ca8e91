#pragma once

#include <string>
#include <vector>

namespace genscale {

// A pc-set in Z_c: a modulus c >= 1 plus a strictly ascending list of residues
// in 0..c-1. Values are immutable once built; all operations return new sets.
struct Scale {
  int c = 1;
  std::vector<int> pcs;

  int size() const { return static_cast<int>(pcs.size()); }
  bool empty() const { return pcs.empty(); }
  bool contains(int pc) const;

  bool operator==(const Scale&) const = default;
};

// x -> mult*x + offset on Z_c; a bijection exactly when gcd(mult, c) = 1.
struct AffineMap {
  int c = 1;
  int mult = 1;
  int offset = 0;

  bool bijective() const;
};

// Reduce any integer into 0..c-1.
int mod_reduce(long long x, int c);

// Canonicalize arbitrary integers into a Scale (reduces mod c, sorts, dedupes).
Scale make_scale(int c, std::vector<int> values);

Scale full_aggregate(int c);
Scale translate(const Scale& s, int t);
Scale apply_affine(const Scale& s, const AffineMap& m);
Scale complement(const Scale& s);

// Canonical text encoding "c:p1,p2,...,pk" (ascending residues, empty set as
// "c:"). parse_scale rejects malformed text, residues >= c and duplicates;
// unsorted input is accepted and canonicalized.
Scale parse_scale(const std::string& text);
std::string format_scale(const Scale& s);

}  // namespace genscale
