#pragma once

#include <string>
#include <vector>

#include "fraclat/construction.hpp"
#include "fraclat/exact.hpp"

namespace fraclat {

inline constexpr unsigned kRootPrecisionBits = 256;

// Certified enclosure of an irrational value, from directed-rounding
// evaluation. lo <= value <= hi; both ends are exact decimal strings of the
// rounded MPFR values.
struct Interval {
  std::string lo;
  std::string hi;
  double lo_approx = 0.0;
  double hi_approx = 0.0;
};

// Enclosure of v^{1/n} for a nonnegative rational v.
Interval rat_root_interval(const Rat& v, unsigned long n,
                           unsigned prec = kRootPrecisionBits);

struct DeltaRecord {
  ConstructionParams params;
  Rat ratio;       // a/b
  Rat inner;       // (r s^n / k + a^n) / (r/k + b^n), exact
  Interval delta;  // ratio - inner^{1/n}
  Rat bound;       // 6 b^2 / n
  bool hypotheses_met = false;  // k, r <= b and s <= b^n
  bool bound_certified = false; // upper end of delta <= bound
};

DeltaRecord delta(const ConstructionParams& params);

struct ConvergenceRow {
  Rat x;
  bool degenerate = false;  // no n >= 1 with floor(x) >= b^n
  long long b = 0;
  long long m = 0;
  long long r = 0;
  long long n_m = 0;
  ConstructionParams params;
  DerivedTriple triple;
  Interval root;      // p^{1/n}, the certified lower bound on Theta_grp
  Interval gap;       // x - p^{1/n}
  Rat gap_bound;      // epsilon + 24/(n_m epsilon^2)
  Rat delta_bound;    // 6 b^2 / (n_m + 1)
};

// One row per x: m = floor(x), r = floor(b(x-m)), n_m = max{n : m >= b^n},
// params (n_m+1, 1, b, r, m - b^{n_m}), with b the largest integer in
// (1/epsilon, 2/epsilon].
std::vector<ConvergenceRow> convergence_table(const std::vector<Rat>& xs,
                                              const Rat& epsilon);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

struct ScanLimits {
  long n_max = 4;
  long k_max = 10;
  long b_max = 4;
  long s_max = 8;
};

struct ScanPoint {
  ConstructionParams params;
  DerivedTriple triple;
  Rat ratio;       // p/q
  Interval root;   // p^{1/n}
  std::string family_tags;  // comma-joined subset of purple,green,blue,yellow
  bool pareto = false;
};

// Enumerates all valid parameter tuples within the limits and keeps the
// points with p/q inside [lo, hi], sorted by ratio. The pareto flag marks,
// per ratio bucket of width 1e-3, the point with the largest root.
std::vector<ScanPoint> scan(const ScanLimits& limits, const Rat& lo,
                            const Rat& hi);
std::string scan_csv(const std::vector<ScanPoint>& points);

}  // namespace fraclat
