#include "genscale/dft.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "genscale/errors.hpp"
#include "genscale/numtheory.hpp"

namespace genscale {

namespace {

// exp(-2*pi*i*r/c) with r already reduced mod c, for accuracy at large k*t.
std::complex<double> unit_root(long long r, int c) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(r) / c;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Spectrum dft(const Scale& s) {
  const int c = s.c;
  Spectrum sp;
  sp.c = c;
  sp.coeffs.resize(c);
  sp.magnitudes.resize(c);
  for (int t = 0; t < c; ++t) {
    std::complex<double> acc{0.0, 0.0};
    for (int k : s.pcs) acc += unit_root(static_cast<long long>(k) * t % c, c);
    sp.coeffs[t] = acc;
    sp.magnitudes[t] = std::abs(acc);
  }
  if (!sp.coeffs.empty()) {
    sp.coeffs[0] = {static_cast<double>(s.size()), 0.0};
    sp.magnitudes[0] = static_cast<double>(s.size());
  }
  return sp;
}

double closed_form_magnitude(int c, int f, int d, int t) {
  if (c < 1) throw PreconditionError("closed_form_magnitude: modulus must be >= 1");
  if (d < 1) throw PreconditionError("closed_form_magnitude: d must be >= 1");
  const long long fr = mod_reduce(f, c);
  const long long tr = mod_reduce(t, c);
  const long long tf = tr * fr % c;
  if (tf == 0) return static_cast<double>(d);
  // |sin(pi*x)| only depends on x mod 1, so reduce the integer numerators
  // mod c before dividing.
  const long long dtf = static_cast<long long>(d) * tf % c;
  const double num = std::abs(std::sin(std::numbers::pi * static_cast<double>(dtf) / c));
  const double den = std::abs(std::sin(std::numbers::pi * static_cast<double>(tf) / c));
  return num / den;
}

Seminorm seminorm(const Scale& s, double tolerance) {
  const int c = s.c;
  if (c < 2) throw PreconditionError("seminorm: modulus must be >= 2");
  std::vector<double> mags(c, -1.0);
  double best = 0.0;
  for (int t = 1; t < c; ++t) {
    if (std::gcd(static_cast<long long>(t), static_cast<long long>(c)) != 1) continue;
    std::complex<double> acc{0.0, 0.0};
    for (int k : s.pcs) acc += unit_root(static_cast<long long>(k) * t % c, c);
    mags[t] = std::abs(acc);
    best = std::max(best, mags[t]);
  }
  Seminorm result;
  result.value = best;
  const double cut = best - tolerance * s.size();
  for (int t = 1; t < c; ++t) {
    if (mags[t] >= cut && mags[t] >= 0.0) result.argmax.push_back(t);
  }
  return result;
}

std::set<int> recover_generators_via_dft(const Scale& s, double tolerance) {
  const int c = s.c;
  const int d = s.size();
  if (std::gcd(static_cast<long long>(c), static_cast<long long>(d)) != 1 ||
      !(1 < d && d < c - 1)) {
    throw HypothesisError(
        "recover_generators_via_dft: requires gcd(c, |A|) = 1 and 1 < |A| < c-1");
  }
  const Seminorm sn = seminorm(s, tolerance);
  std::set<int> out;
  for (int t : sn.argmax) {
    const int inv = static_cast<int>(mod_inverse(t, c));
    out.insert(inv);
    out.insert((c - inv) % c);
  }
  return out;
}

}  // namespace genscale
