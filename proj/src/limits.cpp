#include "fraclat/limits.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <sstream>

namespace fraclat {

namespace {

std::string mpfr_decimal(mpfr_t x, int digits, mpfr_rnd_t rnd) {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.*R*g", digits, rnd, x);
  return buf;
}

// x := v^{1/n} with the given rounding direction.
void rat_root(mpfr_t out, const Rat& v, unsigned long n, mpfr_rnd_t rnd) {
  mpfr_set_q(out, v.get_mpq_t(), rnd);
  mpfr_rootn_ui(out, out, n, rnd);
}

}  // namespace

Interval rat_root_interval(const Rat& v, unsigned long n, unsigned prec) {
  if (v < 0) throw std::invalid_argument("root of negative value");
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  rat_root(lo, v, n, MPFR_RNDD);
  rat_root(hi, v, n, MPFR_RNDU);
  Interval iv;
  iv.lo = mpfr_decimal(lo, 50, MPFR_RNDD);
  iv.hi = mpfr_decimal(hi, 50, MPFR_RNDU);
  iv.lo_approx = mpfr_get_d(lo, MPFR_RNDD);
  iv.hi_approx = mpfr_get_d(hi, MPFR_RNDU);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return iv;
}

DeltaRecord delta(const ConstructionParams& params) {
  params.validate();
  DeltaRecord rec;
  rec.params = params;
  const unsigned long n = static_cast<unsigned long>(params.n);
  const Int k(params.k), b(params.b), r(params.r), s(params.s);
  const Int a = k * ipow(b, n) + s * b + r;

  rec.ratio = make_rat(a, b);
  // (r s^n / k + a^n) / (r/k + b^n) = (r s^n + k a^n) / (r + k b^n)
  rec.inner = make_rat(r * ipow(s, n) + k * ipow(a, n), r + k * ipow(b, n));
  rec.bound = make_rat(6 * b * b, Int(params.n));
  rec.hypotheses_met = (k <= b) && (r <= b) && (s <= ipow(b, n));

  // Delta = a/b - inner^{1/n}, enclosed by directed rounding.
  mpfr_t root_lo, root_hi, d_lo, d_hi;
  mpfr_init2(root_lo, kRootPrecisionBits);
  mpfr_init2(root_hi, kRootPrecisionBits);
  mpfr_init2(d_lo, kRootPrecisionBits);
  mpfr_init2(d_hi, kRootPrecisionBits);
  rat_root(root_lo, rec.inner, n, MPFR_RNDD);
  rat_root(root_hi, rec.inner, n, MPFR_RNDU);
  mpfr_set_q(d_lo, rec.ratio.get_mpq_t(), MPFR_RNDD);
  mpfr_sub(d_lo, d_lo, root_hi, MPFR_RNDD);
  mpfr_set_q(d_hi, rec.ratio.get_mpq_t(), MPFR_RNDU);
  mpfr_sub(d_hi, d_hi, root_lo, MPFR_RNDU);

  rec.delta.lo = mpfr_decimal(d_lo, 50, MPFR_RNDD);
  rec.delta.hi = mpfr_decimal(d_hi, 50, MPFR_RNDU);
  rec.delta.lo_approx = mpfr_get_d(d_lo, MPFR_RNDD);
  rec.delta.hi_approx = mpfr_get_d(d_hi, MPFR_RNDU);

  // Certified comparison: the interval's upper end against the exact bound.
  rec.bound_certified = mpfr_cmp_q(d_hi, rec.bound.get_mpq_t()) <= 0;

  mpfr_clear(root_lo);
  mpfr_clear(root_hi);
  mpfr_clear(d_lo);
  mpfr_clear(d_hi);
  return rec;
}

namespace {

// Largest integer b with 1/eps < b <= 2/eps (requires eps <= 1).
long long pick_b(const Rat& eps) {
  if (eps <= 0 || eps > 1) throw std::invalid_argument("epsilon in (0,1]");
  Int b;
  const Int two_den = 2 * eps.get_den();
  mpz_fdiv_q(b.get_mpz_t(), two_den.get_mpz_t(), eps.get_num().get_mpz_t());
  if (!(Rat(b) * eps > 1) || b < 2)
    throw std::invalid_argument("no integer b with 1/eps < b <= 2/eps");
  return b.get_si();
}

}  // namespace

std::vector<ConvergenceRow> convergence_table(const std::vector<Rat>& xs,
                                              const Rat& epsilon) {
  const long long b = pick_b(epsilon);
  std::vector<ConvergenceRow> rows;
  for (const Rat& x : xs) {
    ConvergenceRow row;
    row.x = x;
    row.b = b;
    if (x < 2) throw std::invalid_argument("x must be >= 2");
    Int m_z;
    mpz_fdiv_q(m_z.get_mpz_t(), x.get_num().get_mpz_t(),
               x.get_den().get_mpz_t());
    row.m = m_z.get_si();
    if (row.m < b) {
      // No n >= 1 with floor(x) >= b^n.
      row.degenerate = true;
      rows.push_back(std::move(row));
      continue;
    }
    // r = floor(b (x - m))
    Rat frac = x - Rat(m_z);
    Int r_z;
    const Int r_num = Int(static_cast<long>(b)) * frac.get_num();
    mpz_fdiv_q(r_z.get_mpz_t(), r_num.get_mpz_t(), frac.get_den().get_mpz_t());
    row.r = r_z.get_si();
    long long n_m = 0, power = 1;
    while (power <= row.m / b) {
      power *= b;
      ++n_m;
    }
    row.n_m = n_m;
    // Boundary flag: with n_m = 1 only the trivial first power satisfies
    // m >= b^n, so the schedule cannot improve the bound beyond n = 2.
    row.degenerate = (n_m <= 1);
    row.params = ConstructionParams{long(n_m + 1), 1, long(b), long(row.r),
                                    long(row.m - power)};
    row.triple = derive(row.params);
    row.root = rat_root_interval(Rat(row.triple.p),
                                 static_cast<unsigned long>(n_m + 1));

    // gap = x - p^{1/n}, certified enclosure
    mpfr_t lo, hi, tmp;
    mpfr_init2(lo, kRootPrecisionBits);
    mpfr_init2(hi, kRootPrecisionBits);
    mpfr_init2(tmp, kRootPrecisionBits);
    rat_root(tmp, Rat(row.triple.p), static_cast<unsigned long>(n_m + 1),
             MPFR_RNDU);
    mpfr_set_q(lo, x.get_mpq_t(), MPFR_RNDD);
    mpfr_sub(lo, lo, tmp, MPFR_RNDD);
    rat_root(tmp, Rat(row.triple.p), static_cast<unsigned long>(n_m + 1),
             MPFR_RNDD);
    mpfr_set_q(hi, x.get_mpq_t(), MPFR_RNDU);
    mpfr_sub(hi, hi, tmp, MPFR_RNDU);
    row.gap.lo = mpfr_decimal(lo, 50, MPFR_RNDD);
    row.gap.hi = mpfr_decimal(hi, 50, MPFR_RNDU);
    row.gap.lo_approx = mpfr_get_d(lo, MPFR_RNDD);
    row.gap.hi_approx = mpfr_get_d(hi, MPFR_RNDU);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(tmp);

    row.gap_bound = epsilon + make_rat(Int(24) * epsilon.get_den() *
                                           epsilon.get_den(),
                                       Int(static_cast<long>(n_m)) * epsilon.get_num() *
                                           epsilon.get_num());
    row.delta_bound = make_rat(Int(static_cast<long>(6 * b * b)), Int(static_cast<long>(n_m + 1)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "x,degenerate,b,m,r,n_m,n,k,s,a,p,q,root_lo,gap_hi,gap_bound,"
         "delta_bound\n";
  for (const auto& row : rows) {
    out << to_string(row.x) << "," << (row.degenerate ? 1 : 0) << "," << row.b
        << "," << row.m << "," << row.r << "," << row.n_m;
    if (row.n_m < 1) {
      out << ",,,,,,,,,\n";
      continue;
    }
    out << "," << row.params.n << "," << row.params.k << "," << row.params.s
        << "," << row.triple.a.get_str() << "," << row.triple.p.get_str()
        << "," << row.triple.q.get_str() << "," << row.root.lo << ","
        << row.gap.hi << "," << to_string(row.gap_bound) << ","
        << to_string(row.delta_bound) << "\n";
  }
  return out.str();
}

namespace {

std::string family_tags(const ConstructionParams& p) {
  std::vector<std::string> tags;
  if (p.s == 0 && p.b == 2 && p.r == 1) tags.push_back("purple");
  if (p.s == 1 && p.b == 2 && p.r == 1) tags.push_back("green");
  if (p.b == 1 && p.r == 1 && p.s == 1) tags.push_back("blue");
  if (p.s == 0) tags.push_back("yellow");
  std::string out;
  for (const auto& t : tags) {
    if (!out.empty()) out += "+";
    out += t;
  }
  return out;
}

}  // namespace

std::vector<ScanPoint> scan(const ScanLimits& limits, const Rat& lo,
                            const Rat& hi) {
  std::vector<ScanPoint> points;
  for (long n = 1; n <= limits.n_max; ++n)
    for (long k = 1; k <= limits.k_max; ++k)
      for (long b = 1; b <= limits.b_max; ++b)
        for (long r = 0; r <= b; ++r)
          for (long s = 0; s <= limits.s_max; ++s) {
            ConstructionParams params{n, k, b, r, s};
            DerivedTriple t = derive(params);
            Rat ratio = make_rat(t.p, t.q);
            if (ratio < lo || ratio > hi) continue;
            ScanPoint pt;
            pt.params = params;
            pt.triple = std::move(t);
            pt.ratio = std::move(ratio);
            pt.root = rat_root_interval(Rat(pt.triple.p),
                                        static_cast<unsigned long>(n));
            pt.family_tags = family_tags(params);
            points.push_back(std::move(pt));
          }
  std::sort(points.begin(), points.end(),
            [](const ScanPoint& a, const ScanPoint& b) {
              if (a.ratio != b.ratio) return a.ratio < b.ratio;
              return a.root.lo_approx > b.root.lo_approx;
            });

  // Pareto flag: per ratio bucket of width 1e-3, the largest certified root.
  std::map<long long, size_t> best_in_bucket;
  for (size_t i = 0; i < points.size(); ++i) {
    Rat scaled = points[i].ratio * 1000;
    Int bucket_z;
    mpz_fdiv_q(bucket_z.get_mpz_t(), scaled.get_num().get_mpz_t(),
               scaled.get_den().get_mpz_t());
    long long bucket = bucket_z.get_si();
    auto it = best_in_bucket.find(bucket);
    if (it == best_in_bucket.end() ||
        points[i].root.lo_approx > points[it->second].root.lo_approx) {
      best_in_bucket[bucket] = i;
    }
  }
  for (auto& [bucket, idx] : best_in_bucket) points[idx].pareto = true;
  return points;
}

std::string scan_csv(const std::vector<ScanPoint>& points) {
  std::ostringstream out;
  out << "ratio_num,ratio_den,n,k,b,r,s,a,p,q,bound_root,family_tags,pareto,"
         "upper_ref\n";
  for (const auto& pt : points) {
    mpfr_t root;
    mpfr_init2(root, kRootPrecisionBits);
    rat_root(root, Rat(pt.triple.p),
             static_cast<unsigned long>(pt.params.n), MPFR_RNDD);
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.12R*g", MPFR_RNDD, root);
    mpfr_clear(root);
    out << pt.ratio.get_num().get_str() << "," << pt.ratio.get_den().get_str()
        << "," << pt.params.n << "," << pt.params.k << "," << pt.params.b
        << "," << pt.params.r << "," << pt.params.s << ","
        << pt.triple.a.get_str() << "," << pt.triple.p.get_str() << ","
        << pt.triple.q.get_str() << "," << buf << "," << pt.family_tags << ","
        << (pt.pareto ? 1 : 0) << "," << to_string(pt.ratio) << "\n";
  }
  return out.str();
}

}  // namespace fraclat
