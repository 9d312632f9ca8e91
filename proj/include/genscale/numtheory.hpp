#pragma once

#include <vector>

namespace genscale {

// Exact integer primitives shared by all higher modules. Everything here is
// pure and stateless.

// Non-negative greatest common divisor; gcd(0, 0) = 0.
long long gcd(long long a, long long b);

// x with a*x == 1 (mod c), 0 <= x < c. Throws NotInvertibleError when
// gcd(a, c) != 1. For c = 1 returns 0.
long long mod_inverse(long long a, long long c);

// Euler's totient, n >= 1; totient(1) = 1.
long long totient(long long n);

// All positive divisors of n, ascending, including 1 and n.
std::vector<long long> divisors(long long n);

// A ceiling certified to contain every preimage: phi(n) = m implies
// n < 2m^2 + 1.
long long totient_search_ceiling(long long m);

// True iff some n <= search_bound has totient(n) = m. A "false" answer is only
// returned when it is certain no preimage exists at all; if a witness lives
// above search_bound (but below the certified ceiling), BoundTooSmallError is
// thrown instead of a misleading false.
bool is_totient_number(long long m, long long search_bound);

// Same, with search_bound = totient_search_ceiling(m), so it always decides.
bool is_totient_number(long long m);

// Sieved table of phi(1..bound).
struct TotientTable {
  long long bound = 0;
  std::vector<long long> phi;  // phi[n] valid for 1 <= n <= bound

  static TotientTable build(long long bound);
  long long at(long long n) const;
};

}  // namespace genscale
