#include "genscale/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <set>

#include "genscale/complement.hpp"
#include "genscale/dft.hpp"
#include "genscale/errors.hpp"
#include "genscale/generation.hpp"
#include "genscale/numtheory.hpp"
#include "genscale/scale.hpp"

namespace genscale {

namespace {

int order_of(int f, int c) {
  return static_cast<int>(c / std::gcd(static_cast<long long>(f), static_cast<long long>(c)));
}

// Shared sweep: every generated scale with start 0, one visit per (c, d, f)
// in ascending order. The callback receives the scale built from the triple.
template <typename Fn>
void sweep_generated(int c_lo, int c_max, Fn&& fn) {
  for (int c = c_lo; c <= c_max; ++c) {
    for (int d = 2; d <= c; ++d) {
      for (int f = 1; f < c; ++f) {
        if (order_of(f, c) < d) continue;  // keep the d-term walk injective
        fn(c, d, f, generate(GenSpec{c, 0, f, d}));
      }
    }
  }
}

long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace

VerifyReport verify_totient_theorem(int c_max) {
  if (c_max < 2) throw PreconditionError("verify_totient_theorem: c_max must be >= 2");
  VerifyReport report;
  std::map<int, bool> totient_memo;
  auto totient_number = [&](int m) {
    auto it = totient_memo.find(m);
    if (it != totient_memo.end()) return it->second;
    const bool yes = is_totient_number(m);
    totient_memo.emplace(m, yes);
    return yes;
  };
  sweep_generated(2, c_max, [&](int c, int d, int f, const Scale& s) {
    const GeneratorReport gen = enumerate_generators(s);
    const Classification cls = classify(s);
    const bool ok = totient_number(gen.count) && gen.count != 14;
    report.rows.push_back(VerifyRow{c, d, f, kind_name(cls.kind),
                                    cls.predicted_count, gen.count, ok});
    ++report.cases;
    if (!ok) ++report.violations;
  });
  return report;
}

VerifyReport verify_classification(int c_max) {
  if (c_max < 2) throw PreconditionError("verify_classification: c_max must be >= 2");
  VerifyReport report;
  std::map<int, int> phi_memo;
  auto phi = [&](int n) {
    auto it = phi_memo.find(n);
    if (it != phi_memo.end()) return it->second;
    const int value = static_cast<int>(totient(n));
    phi_memo.emplace(n, value);
    return value;
  };
  sweep_generated(2, c_max, [&](int c, int d, int f, const Scale& s) {
    const GeneratorReport gen = enumerate_generators(s);
    const Classification cls = classify(s);
    const int g = static_cast<int>(std::gcd(static_cast<long long>(c), static_cast<long long>(f)));
    bool ok = cls.kind != ScaleKind::NotGenerated &&
              cls.predicted_count == gen.count &&
              cls.witness_gcd.has_value() && *cls.witness_gcd == g;
    // Coprime branch: two generators in the middle range, phi(c) at the top.
    if (g == 1) {
      if (1 < d && d < c - 1) ok = ok && gen.count == 2;
      if (d == c - 1 || d == c) ok = ok && gen.count == phi(c);
    }
    report.rows.push_back(VerifyRow{c, d, f, kind_name(cls.kind),
                                    cls.predicted_count, gen.count, ok});
    ++report.cases;
    if (!ok) ++report.violations;
  });
  return report;
}

VerifyReport verify_chopin(int c_max) {
  if (c_max < 4) throw PreconditionError("verify_chopin: c_max must be >= 4");
  VerifyReport report;
  std::set<std::vector<int>> seen;
  int current_c = 0;
  sweep_generated(4, c_max, [&](int c, int d, int f, const Scale& s) {
    if (d > c - 2) return;  // complement needs two notes as well
    if (c != current_c) {
      current_c = c;
      seen.clear();
    }
    if (!seen.insert(s.pcs).second) return;  // one check per support
    const ChopinReport chopin = chopin_check(s);
    if (!chopin.both_generated) return;  // the theorem claims nothing here
    const Classification cls = classify(s);
    const bool ok = !chopin.shared_steps.empty() && chopin.embedding.has_value();
    report.rows.push_back(VerifyRow{c, d, f, kind_name(cls.kind),
                                    1, ok ? 1 : 0, ok});
    ++report.cases;
    if (!ok) ++report.violations;
  });
  return report;
}

VerifyReport verify_dft_maximality(int c, int d) {
  if (c < 2 || d < 1 || d > c) {
    throw PreconditionError("verify_dft_maximality: requires 2 <= c and 1 <= d <= c");
  }
  if (std::gcd(static_cast<long long>(c), static_cast<long long>(d)) != 1) {
    throw HypothesisError("verify_dft_maximality: requires gcd(c, d) = 1");
  }
  constexpr long long kSweepBound = 2'000'000;
  if (binomial_capped(c, d, kSweepBound) > kSweepBound) {
    throw SweepTooLargeError("verify_dft_maximality: C(c, d) exceeds 2e6");
  }

  // Unit roots exp(-2*pi*i*r/c) and the coprime index list, computed once.
  std::vector<std::complex<double>> root(c);
  for (int r = 0; r < c; ++r) {
    const double angle = -2.0 * std::numbers::pi * r / c;
    root[r] = {std::cos(angle), std::sin(angle)};
  }
  std::vector<int> coprime;
  for (int t = 1; t < c; ++t) {
    if (std::gcd(static_cast<long long>(t), static_cast<long long>(c)) == 1) {
      coprime.push_back(t);
    }
  }
  auto seminorm_of = [&](const std::vector<int>& pcs) {
    double best = 0.0;
    for (int t : coprime) {
      std::complex<double> acc{0.0, 0.0};
      for (int k : pcs) acc += root[static_cast<long long>(k) * t % c];
      best = std::max(best, std::abs(acc));
    }
    return best;
  };

  // Pass 1: global maximum over all d-subsets.
  std::vector<int> idx(d);
  auto reset = [&] { std::iota(idx.begin(), idx.end(), 0); };
  auto advance = [&]() -> bool {
    int i = d - 1;
    while (i >= 0 && idx[i] == c - d + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  double max_value = 0.0;
  reset();
  do {
    max_value = std::max(max_value, seminorm_of(idx));
  } while (advance());

  // Pass 2: collect the maximizers.
  const double cut = max_value - kDftTolerance * d;
  std::set<std::vector<int>> maximizers;
  reset();
  do {
    if (seminorm_of(idx) >= cut) maximizers.insert(idx);
  } while (advance());

  // All scales generated by a coprime step, built directly.
  std::set<std::vector<int>> coprime_generated;
  for (int f : coprime) {
    for (int a = 0; a < c; ++a) {
      coprime_generated.insert(generate(GenSpec{c, a, f, d}).pcs);
    }
  }

  VerifyReport report;
  std::set<std::vector<int>> all_cases = maximizers;
  all_cases.insert(coprime_generated.begin(), coprime_generated.end());
  for (const std::vector<int>& pcs : all_cases) {
    const Scale s{c, pcs};
    const bool is_max = maximizers.count(pcs) > 0;
    const bool is_gen = coprime_generated.count(pcs) > 0;
    bool ok = is_max && is_gen;
    const GeneratorReport gen = enumerate_generators(s);
    const Classification cls = classify(s);
    if (ok && 1 < d && d < c - 1) {
      ok = recover_generators_via_dft(s) == gen.steps();
    }
    const int f_witness = gen.count > 0 ? gen.generators.begin()->first : 0;
    report.rows.push_back(VerifyRow{c, d, f_witness, kind_name(cls.kind),
                                    cls.predicted_count, gen.count, ok});
    ++report.cases;
    if (!ok) ++report.violations;
  }
  return report;
}

std::string row_json(const VerifyRow& row) {
  std::string out = "{\"c\":" + std::to_string(row.c);
  out += ",\"d\":" + std::to_string(row.d);
  out += ",\"f\":" + std::to_string(row.f);
  out += ",\"kind\":\"" + row.kind + "\"";
  out += ",\"predicted\":" + std::to_string(row.predicted);
  out += ",\"actual\":" + std::to_string(row.actual);
  out += ",\"ok\":";
  out += row.ok ? "true" : "false";
  out += "}";
  return out;
}

void write_jsonl(const VerifyReport& report, std::ostream& out) {
  for (const VerifyRow& row : report.rows) out << row_json(row) << "\n";
  out << "{\"cases\":" << report.cases << ",\"violations\":" << report.violations
      << "}\n";
}

}  // namespace genscale
