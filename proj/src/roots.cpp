#include "relcop/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relcop/parallel.hpp"

namespace relcop {

namespace {

using cld = std::complex<long double>;

long double to_ld(const BigInt& x) { return static_cast<long double>(mpz_get_d(x.get_mpz_t())); }

cld eval_ld(const std::vector<long double>& coeffs, cld z) {
  cld acc(0.0L, 0.0L);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

RootReport complex_roots(const CoeffPoly& p, double tol, double disk_tol) {
  if (p.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");

  RootReport rep;
  // deflate the root at the origin exactly
  int zero_mult = 0;
  while (zero_mult < static_cast<int>(p.c.size()) && p.c[zero_mult] == 0) ++zero_mult;
  std::vector<long double> coeffs;
  coeffs.reserve(p.c.size() - zero_mult);
  for (size_t i = zero_mult; i < p.c.size(); ++i) coeffs.push_back(to_ld(p.c[i]));
  const int d = static_cast<int>(coeffs.size()) - 1;

  for (int i = 0; i < zero_mult; ++i) rep.roots.emplace_back(0.0, 0.0);

  if (d > 0) {
    // Durand-Kerner from the standard (0.4 + 0.9i)^k spiral; deterministic.
    std::vector<cld> z(d);
    const cld seed(0.4L, 0.9L);
    cld cur = seed;
    for (int i = 0; i < d; ++i) {
      z[i] = cur;
      cur *= seed;
    }
    const long double lead = coeffs.back();
    const int cap = 10000;
    bool settled = false;
    for (int it = 0; it < cap && !settled; ++it) {
      long double worst = 0.0L;
      for (int i = 0; i < d; ++i) {
        cld denom(lead, 0.0L);
        for (int j = 0; j < d; ++j)
          if (j != i) denom *= (z[i] - z[j]);
        if (std::abs(denom) == 0.0L) {
          z[i] += cld(1e-6L, 1e-6L);  // nudge a collided pair apart
          worst = 1.0L;
          continue;
        }
        const cld delta = eval_ld(coeffs, z[i]) / denom;
        z[i] -= delta;
        worst = std::max(worst, std::abs(delta) / (1.0L + std::abs(z[i])));
      }
      settled = worst < 1e-16L;
    }

    // certify residuals against the exact coefficients
    long double max_res = 0.0L;
    for (int i = 0; i < d; ++i) {
      const long double scale = 1.0L + std::abs(lead) * std::pow(std::abs(z[i]), static_cast<long double>(d));
      max_res = std::max(max_res, std::abs(eval_ld(coeffs, z[i])) / scale);
    }
    rep.residual = static_cast<double>(max_res);
    rep.converged = max_res <= static_cast<long double>(tol);
    for (int i = 0; i < d; ++i)
      rep.roots.emplace_back(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
  }

  double maxdist = 0.0;
  int borderline = 0;
  for (const auto& r : rep.roots) {
    const double dist = std::abs(r - std::complex<double>(1.0, 0.0));
    maxdist = std::max(maxdist, dist);
    if (std::abs(dist - 1.0) <= disk_tol) ++borderline;
  }
  rep.max_dist_from_one = maxdist;
  rep.inside_disk = maxdist <= 1.0 + disk_tol;
  rep.borderline_count = borderline;
  return rep;
}

DiskScanSummary disk_scan(const GenSpec& spec, ReliabilityMeasure measure, double tol, double disk_tol,
                          int jobs) {
  const auto graphs = enumerate_class(spec);
  DiskScanSummary summary;
  summary.entries.resize(graphs.size());
  parallel_for(graphs.size(), jobs, [&](size_t i) {
    DiskScanEntry& e = summary.entries[i];
    e.graph6 = emit_graph6(graphs[i]);
    e.poly = reliability_poly(graphs[i], measure);
    if (e.poly.is_zero()) {
      // no operational state is ever accepted; no roots to report
      e.report = RootReport{};
      return;
    }
    e.report = complex_roots(e.poly, tol, disk_tol);
  });
  for (const auto& e : summary.entries) {
    summary.max_dist_from_one = std::max(summary.max_dist_from_one, e.report.max_dist_from_one);
    summary.all_inside = summary.all_inside && e.report.inside_disk;
    summary.all_converged = summary.all_converged && e.report.converged;
  }
  return summary;
}

}  // namespace relcop
