#include "genscale/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "genscale/errors.hpp"

namespace genscale {

long long gcd(long long a, long long b) { return std::gcd(a, b); }

long long mod_inverse(long long a, long long c) {
  if (c < 1) throw PreconditionError("mod_inverse: modulus must be >= 1");
  a %= c;
  if (a < 0) a += c;
  if (c == 1) return 0;
  // Extended Euclid, tracking only the Bezout coefficient of a.
  long long old_r = a, r = c;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw NotInvertibleError("mod_inverse: " + std::to_string(a) +
                             " is not invertible modulo " + std::to_string(c));
  }
  old_s %= c;
  if (old_s < 0) old_s += c;
  return old_s;
}

long long totient(long long n) {
  if (n < 1) throw PreconditionError("totient: argument must be >= 1");
  long long result = n;
  long long m = n;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long long> divisors(long long n) {
  if (n < 1) throw PreconditionError("divisors: argument must be >= 1");
  std::vector<long long> out;
  for (long long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i != n / i) out.push_back(n / i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long totient_search_ceiling(long long m) { return 2 * m * m + 1; }

bool is_totient_number(long long m, long long search_bound) {
  if (m < 1) throw PreconditionError("is_totient_number: m must be >= 1");
  if (search_bound < 1) {
    throw PreconditionError("is_totient_number: search_bound must be >= 1");
  }
  const long long ceiling = totient_search_ceiling(m);
  for (long long n = 1; n <= std::min(search_bound, ceiling); ++n) {
    if (totient(n) == m) return true;
  }
  // Nothing within the caller's bound: a sound "false" needs certainty that no
  // preimage hides between search_bound and the certified ceiling.
  for (long long n = search_bound + 1; n <= ceiling; ++n) {
    if (totient(n) == m) {
      throw BoundTooSmallError(
          "is_totient_number: witness " + std::to_string(n) +
          " lies beyond search_bound " + std::to_string(search_bound));
    }
  }
  return false;
}

bool is_totient_number(long long m) {
  return is_totient_number(m, totient_search_ceiling(m));
}

TotientTable TotientTable::build(long long bound) {
  if (bound < 1) throw PreconditionError("TotientTable: bound must be >= 1");
  TotientTable table;
  table.bound = bound;
  table.phi.resize(static_cast<size_t>(bound) + 1);
  std::iota(table.phi.begin(), table.phi.end(), 0LL);
  for (long long i = 2; i <= bound; ++i) {
    if (table.phi[i] == i) {  // i is prime
      for (long long j = i; j <= bound; j += i) table.phi[j] -= table.phi[j] / i;
    }
  }
  table.phi[1] = 1;
  return table;
}

long long TotientTable::at(long long n) const {
  if (n < 1 || n > bound) throw PreconditionError("TotientTable::at: out of range");
  return phi[n];
}

}  // namespace genscale
