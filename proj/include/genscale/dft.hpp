#pragma once

#include <complex>
#include <set>
#include <vector>

#include "genscale/scale.hpp"

namespace genscale {

// F_A(t) = sum over k in A of exp(-2*pi*i*k*t/c), evaluated directly at every
// t in 0..c-1. coeffs[0] is exactly |A|; coeffs[c-t] = conj(coeffs[t]).
struct Spectrum {
  int c = 1;
  std::vector<std::complex<double>> coeffs;
  std::vector<double> magnitudes;
};

inline constexpr double kDftTolerance = 1e-9;

Spectrum dft(const Scale& s);

// |F_A(t)| of a d-term scale generated by step f, in closed form:
// |sin(pi*d*t*f/c)| / |sin(pi*t*f/c)|, and exactly d on the degenerate branch
// t*f = 0 (mod c). The degenerate test is exact integer arithmetic. Valid for
// injective sequences (d at most the order of f).
double closed_form_magnitude(int c, int f, int d, int t);

// max |F_A(t)| over t coprime with c, plus every index within
// tolerance * |A| of the maximum (conjugate symmetry guarantees ties).
struct Seminorm {
  double value = 0.0;
  std::vector<int> argmax;
};

Seminorm seminorm(const Scale& s, double tolerance = kDftTolerance);

// Generator recovery from the seminorm argmax: { t^-1, -t^-1 } over argmax
// indices t. Only defined under the hypotheses gcd(c, |A|) = 1 and
// 1 < |A| < c-1; otherwise throws HypothesisError.
std::set<int> recover_generators_via_dft(const Scale& s, double tolerance = kDftTolerance);

}  // namespace genscale
