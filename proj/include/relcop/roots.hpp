#pragma once

#include <complex>
#include <string>
#include <vector>

#include "relcop/enumerate.hpp"
#include "relcop/graph.hpp"
#include "relcop/poly.hpp"
#include "relcop/relpoly.hpp"

namespace relcop {

// All complex roots of an integer polynomial. Roots at the origin are
// deflated exactly; the rest come from simultaneous (Durand-Kerner)
// iteration with residuals certified against the exact coefficients in
// extended precision.
struct RootReport {
  std::vector<std::complex<double>> roots;  // degree many, zeros included
  double residual = 0.0;                    // max scaled |p(z_i)|
  double max_dist_from_one = 0.0;
  bool inside_disk = true;   // max |z-1| <= 1 + disk_tol
  bool converged = true;     // false if the iteration cap was hit
  int borderline_count = 0;  // roots with ||z-1| - 1| <= disk_tol
};

inline constexpr double kRootTolDefault = 1e-12;
inline constexpr double kDiskTolDefault = 1e-9;

RootReport complex_roots(const CoeffPoly& p, double tol = kRootTolDefault,
                         double disk_tol = kDiskTolDefault);

struct DiskScanEntry {
  std::string graph6;
  CoeffPoly poly;
  RootReport report;
};

struct DiskScanSummary {
  std::vector<DiskScanEntry> entries;
  double max_dist_from_one = 0.0;
  bool all_inside = true;
  bool all_converged = true;
};

// Enumerates the (n, cyclomatic) class and root-scans the chosen reliability
// polynomial of every member.
DiskScanSummary disk_scan(const GenSpec& spec, ReliabilityMeasure measure,
                          double tol = kRootTolDefault, double disk_tol = kDiskTolDefault, int jobs = 1);

}  // namespace relcop
