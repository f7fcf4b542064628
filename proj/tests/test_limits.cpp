#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "fraclat/limits.hpp"

using namespace fraclat;

TEST_CASE("certified root enclosures") {
  Interval iv = rat_root_interval(Rat(5), 2);
  CHECK(iv.lo_approx <= std::sqrt(5.0));
  CHECK(iv.hi_approx >= std::sqrt(5.0));
  CHECK(iv.hi_approx - iv.lo_approx < 1e-12);

  iv = rat_root_interval(Rat(32), 5);
  CHECK(iv.lo_approx <= 2.0);
  CHECK(iv.hi_approx >= 2.0);

  CHECK_THROWS(rat_root_interval(Rat(-1), 2));
}

TEST_CASE("delta evaluations") {
  // r = 0 collapses the inner fraction to (a/b)^n, so delta is exactly 0.
  DeltaRecord rec = delta({3, 2, 3, 0, 1});
  CHECK(rec.delta.lo_approx <= 0.0);
  CHECK(rec.delta.hi_approx >= 0.0);
  CHECK(rec.delta.hi_approx < 1e-30);

  rec = delta({2, 1, 2, 1, 0});
  // a = 5: delta = 5/2 - sqrt(5) ~ 0.2639.
  CHECK(rec.ratio == make_rat(Int(5), Int(2)));
  CHECK(rec.inner == 5);
  CHECK(rec.delta.lo_approx > 0.2639);
  CHECK(rec.delta.hi_approx < 0.2640);
  CHECK(rec.hypotheses_met);
  CHECK(rec.bound == 12);  // 6 b^2 / n = 24/2
  CHECK(rec.bound_certified);

  rec = delta({5, 1, 2, 0, 0});
  CHECK(rec.ratio == 16);  // a = 32, b = 2
  CHECK(rec.delta.hi_approx < 1e-30);

  // s > b^n violates the lemma hypotheses; the record says so.
  rec = delta({2, 1, 2, 1, 5});
  CHECK(!rec.hypotheses_met);
}

TEST_CASE("delta bound over the hypothesis region") {
  for (long n = 1; n <= 4; ++n)
    for (long b = 1; b <= 3; ++b)
      for (long k = 1; k <= b; ++k)
        for (long r = 0; r <= b; ++r)
          for (long s = 0; s <= 4; ++s) {
            DeltaRecord rec = delta({n, k, b, r, s});
            if (!rec.hypotheses_met) continue;
            CHECK(rec.bound_certified);
          }
}

TEST_CASE("convergence table") {
  // x = 16, eps = 1: b = 2, m = 16, n_m = 4, params (5,1,2,0,0).
  auto rows = convergence_table({Rat(16)}, Rat(1));
  REQUIRE(rows.size() == 1);
  CHECK(!rows[0].degenerate);
  CHECK(rows[0].b == 2);
  CHECK(rows[0].n_m == 4);
  CHECK(rows[0].params.n == 5);
  CHECK(rows[0].params.r == 0);
  CHECK(rows[0].params.s == 0);
  // Exact power: a = 32 and p = a^n / b^n = 32^5 / 2^5 = 16^5.
  CHECK(rows[0].triple.a == 32);
  CHECK(rows[0].triple.p == ipow(Int(16), 5));
  // The certified gap for an exact power is 0.
  CHECK(rows[0].gap.hi_approx < 1e-30);
  CHECK(rows[0].gap.lo_approx > -1e-30);

  // Ratios below 2 are outside the fraction-graph domain.
  CHECK_THROWS(convergence_table({make_rat(Int(3), Int(2))}, Rat(1)));
  CHECK_THROWS(convergence_table({Rat(1)}, Rat(1)));

  // x = 2, eps = 1 (b = 2): n_m = 1, so only the trivial first power fits;
  // the row is flagged degenerate but the n = 2 data is still exact.
  rows = convergence_table({Rat(2)}, Rat(1));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].degenerate);
  CHECK(rows[0].n_m == 1);
  CHECK(rows[0].triple.p == 4);
  CHECK(rows[0].triple.q == 2);
  CHECK(rows[0].gap.hi_approx < 1e-30);

  // x = 3, eps = 1/2 (b = 4): m = 3 < b, no usable power at all.
  rows = convergence_table({Rat(3)}, make_rat(Int(1), Int(2)));
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].degenerate);
  CHECK(rows[0].n_m == 0);

  // x = 1000.5 with eps = 1/2 (b in (2,4], so b = 4).
  rows = convergence_table({make_rat(Int(2001), Int(2))},
                           make_rat(Int(1), Int(2)));
  REQUIRE(rows.size() == 1);
  const auto& row = rows[0];
  CHECK(!row.degenerate);
  CHECK(row.b == 4);
  CHECK(row.m == 1000);
  CHECK(row.n_m == 4);  // 4^4 = 256 <= 1000 < 4^5
  CHECK(row.params.n == 5);
  CHECK(row.params.s == 1000 - 256);
  // Certified gap stays below the guaranteed bound eps + 24/(n_m eps^2).
  Rat bound = row.gap_bound;
  // eps + 24/(n_m eps^2) = 1/2 + 24/(4 * 1/4) = 49/2.
  CHECK(bound == make_rat(Int(49), Int(2)));
  CHECK(row.gap.hi_approx <
        bound.get_num().get_d() / bound.get_den().get_d());

  std::string csv = convergence_csv(rows);
  CHECK(csv.find("x,degenerate,b,m,r,n_m") == 0);
  CHECK(csv.find("2001/2") != std::string::npos);
}

TEST_CASE("parameter scan") {
  ScanLimits limits;
  limits.n_max = 3;
  limits.k_max = 5;
  limits.b_max = 3;
  limits.s_max = 4;
  auto points = scan(limits, Rat(2), Rat(7));

  bool found_shannon = false, found_green = false;
  for (const auto& pt : points) {
    CHECK(pt.ratio >= 2);
    CHECK(pt.ratio <= 7);
    // p/q <= a/b for every emitted point.
    CHECK(pt.triple.p * Int(pt.params.b) <= pt.triple.q * pt.triple.a);
    if (pt.params.n == 2 && pt.params.k == 1 && pt.params.b == 2 &&
        pt.params.r == 1 && pt.params.s == 0) {
      found_shannon = true;
      CHECK(pt.ratio == make_rat(Int(5), Int(2)));
      CHECK(pt.family_tags.find("purple") != std::string::npos);
      CHECK(pt.root.lo_approx > 2.23);
      CHECK(pt.root.hi_approx < 2.24);
    }
    if (pt.params.n == 2 && pt.params.k == 1 && pt.params.b == 2 &&
        pt.params.r == 1 && pt.params.s == 1) {
      found_green = true;
      CHECK(pt.ratio == make_rat(Int(10), Int(3)));
      CHECK(pt.family_tags.find("green") != std::string::npos);
    }
  }
  CHECK(found_shannon);
  CHECK(found_green);

  // Sorted by ratio.
  for (size_t i = 1; i < points.size(); ++i)
    CHECK(points[i - 1].ratio <= points[i].ratio);

  std::string csv = scan_csv(points);
  CHECK(csv.find("ratio_num,ratio_den,n,k,b,r,s,a,p,q,bound_root") == 0);

  // Degenerate limits produce an empty cloud.
  ScanLimits none;
  none.n_max = 0;
  CHECK(scan(none, Rat(2), Rat(7)).empty());
}
