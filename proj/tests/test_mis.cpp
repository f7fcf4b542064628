#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fraclat/graphs.hpp"
#include "fraclat/mis.hpp"

using namespace fraclat;

namespace {

ExplicitGraph cycle(int n) {
  ExplicitGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("alpha of small named graphs") {
  MisResult r = solve(cycle(5));
  CHECK(r.size == 2);
  CHECK(r.optimal);

  r = solve(cycle(6));
  CHECK(r.size == 3);

  // Complete graph and edgeless graph.
  ExplicitGraph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK(solve(k4).size == 1);

  ExplicitGraph empty(6);
  r = solve(empty);
  CHECK(r.size == 6);
  CHECK(r.witness == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("witness is always independent") {
  for (long long p = 4; p <= 12; ++p) {
    FractionGraphPower g{p, 3, 1};
    ExplicitGraph eg = materialize(g);
    MisResult r = solve(eg);
    for (size_t i = 0; i < r.witness.size(); ++i)
      for (size_t j = i + 1; j < r.witness.size(); ++j)
        CHECK(!eg.has_edge(r.witness[i], r.witness[j]));
  }
}

TEST_CASE("one-dimensional instances match the closed form") {
  CHECK(alpha_base(5, 2) == 2);
  CHECK(alpha_base(14, 3) == 4);
  CHECK(alpha_base(9, 1) == 9);
  CHECK_THROWS_AS((void)alpha_base(0, 1), std::invalid_argument);

  for (long long p = 2; p <= 30; ++p)
    for (long long q = 1; q <= p / 2; ++q) {
      ExplicitGraph eg = materialize(FractionGraphPower{p, q, 1});
      MisResult r = solve(eg);
      CHECK(r.optimal);
      CHECK(r.size == alpha_base(p, q));
    }
}

TEST_CASE("strong power instances") {
  MisResult r = solve(materialize(FractionGraphPower{5, 2, 2}));
  CHECK(r.size == 5);
  CHECK(r.optimal);

  r = solve(materialize(FractionGraphPower{8, 3, 2}));
  CHECK(r.size == 5);
  CHECK(r.optimal);
}

TEST_CASE("quotient instances") {
  CosetQuotient q = build_quotient(FractionGraphPower{17, 4, 3}, {{1, 2, 4}});
  MisResult r = solve(q.quotient);
  CHECK(r.size == 4);
  CHECK(r.optimal);
  LiftResult lift = lift_bound(q, r.witness);
  CHECK(lift.bound == 68);
}

TEST_CASE("budget handling") {
  // A tiny node budget cannot finish the 196-vertex quotient; the incumbent
  // from the greedy phase is still returned and verified.
  CosetQuotient q = build_quotient(FractionGraphPower{14, 3, 3}, {{1, 2, 3}});
  MisBudget tight;
  tight.max_nodes = 1;
  MisResult r = solve(q.quotient, tight);
  CHECK(!r.optimal);
  CHECK(r.budget_hit);
  CHECK(r.size >= 1);

  MisResult full = solve(q.quotient);
  CHECK(full.optimal);
  CHECK(full.size == 6);
  CHECK(full.size >= r.size);
}
