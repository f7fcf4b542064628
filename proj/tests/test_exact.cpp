#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "fraclat/exact.hpp"

using namespace fraclat;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(int(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j)
      m.at(int(i), int(j)) = Rat(rows[i][j]);
  return m;
}

// Independent determinant oracle: cofactor expansion along the first row.
Rat det_cofactor(const ExactMatrix& m) {
  const int n = m.order();
  if (n == 1) return m.at(0, 0);
  Rat sum = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    ExactMatrix minor(n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Rat term = m.at(0, j) * det_cofactor(minor);
    if (j % 2) term = -term;
    sum += term;
  }
  return sum;
}

std::mt19937 rng(20240901);

ExactMatrix random_int_matrix(int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(d(rng));
  return m;
}

ExactMatrix random_rat_matrix(int n) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = make_rat(Int(num(rng)), Int(den(rng)));
  return m;
}

// Gram matrix A^T A: positive semidefinite, hence all principal minors >= 0.
ExactMatrix random_p0_matrix(int n) {
  ExactMatrix a = random_int_matrix(n, -3, 3);
  ExactMatrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat sum = 0;
      for (int k = 0; k < n; ++k) sum += a.at(k, i) * a.at(k, j);
      g.at(i, j) = sum;
    }
  return g;
}

}  // namespace

TEST_CASE("scalar helpers") {
  CHECK(ipow(Int(0), 0) == 1);
  CHECK(ipow(Int(2), 10) == 1024);
  CHECK(ipow(Int(-3), 3) == -27);
  CHECK(rpow(make_rat(Int(1), Int(2)), 3) == make_rat(Int(1), Int(8)));
  CHECK(rpow(Rat(0), 0) == 1);

  CHECK(is_integer(Rat(7)));
  CHECK(!is_integer(make_rat(Int(1), Int(2))));

  CHECK(make_rat(Int(2), Int(-4)) == make_rat(Int(-1), Int(2)));
  CHECK(make_rat(Int(2), Int(-4)).get_den() == 2);
  CHECK_THROWS(make_rat(Int(1), Int(0)));

  CHECK(exact_div(Int(84), Int(14)) == 6);
  CHECK_THROWS(exact_div(Int(5), Int(2)));
}

TEST_CASE("determinant fixed values") {
  CHECK(det(ExactMatrix::identity(3)) == 1);
  CHECK(det(from_rows({{2, 1}, {-1, 2}})) == 5);
  CHECK(det(from_rows({{2, -1}, {1, 2}})) == 5);
  CHECK(det(from_rows({{4, -1, -2}, {2, 4, -1}, {1, 2, 4}})) == 81);
  ExactMatrix z(2);
  CHECK(det(z) == 0);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + int(rng() % 5);
    ExactMatrix m =
        (trial % 2) ? random_rat_matrix(n) : random_int_matrix(n, -5, 5);
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("determinant diagonal expansion identity") {
  // det(M + diag(d)) = sum over subsets S of det(M_S) * prod_{i not in S} d_i
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + int(rng() % 4);
    ExactMatrix m = random_int_matrix(n, -4, 4);
    std::vector<Rat> d(static_cast<size_t>(n));
    std::uniform_int_distribution<int> dv(-5, 5);
    for (auto& x : d) x = Rat(dv(rng));

    ExactMatrix md = m;
    for (int i = 0; i < n; ++i) md.at(i, i) += d[size_t(i)];

    Rat sum = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      Rat prod = 1;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i))
          subset.push_back(i);
        else
          prod *= d[size_t(i)];
      }
      sum += principal_minor(m, subset) * prod;
    }
    CHECK(det(md) == sum);
  }
}

TEST_CASE("principal minors") {
  ExactMatrix m = from_rows({{4, -1, -2}, {2, 4, -1}, {1, 2, 4}});
  CHECK(principal_minor(m, {}) == 1);
  CHECK(principal_minor(m, {0}) == 4);
  CHECK(principal_minor(m, {0, 1, 2}) == det(m));
  CHECK(principal_minor(m, {1, 2}) == Rat(4 * 4 + 2));
  CHECK_THROWS(principal_minor(m, {3}));
}

TEST_CASE("is_p0 verdicts and witnesses") {
  ExactMatrix neg(1);
  neg.at(0, 0) = Rat(-1);
  P0Result r = is_p0(neg);
  CHECK(!r.is_p0);
  CHECK(r.witness == std::vector<int>{0});

  // All diagonal minors fine; the 2x2 determinant is negative.
  ExactMatrix swap2 = from_rows({{0, 1}, {1, 0}});
  r = is_p0(swap2);
  CHECK(!r.is_p0);
  CHECK(r.witness == std::vector<int>{0, 1});

  CHECK(is_p0(ExactMatrix::identity(4)).is_p0);

  ExactMatrix big(kDefaultP0Cap + 1);
  CHECK_THROWS_AS((void)is_p0(big), capacity_error);
}

TEST_CASE("is_p0 closure and permutation invariance") {
  std::uniform_int_distribution<int> nd(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = nd(rng);
    ExactMatrix m = random_p0_matrix(n);
    REQUIRE(is_p0(m).is_p0);

    // Every principal submatrix of a P0 matrix is P0.
    unsigned mask = rng() % (1u << n);
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    if (!subset.empty()) CHECK(is_p0(m.submatrix(subset)).is_p0);

    // Simultaneous row/column permutation preserves the P0 property.
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ExactMatrix pm(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        pm.at(i, j) = m.at(perm[size_t(i)], perm[size_t(j)]);
    CHECK(is_p0(pm).is_p0);
  }
}

TEST_CASE("inverse") {
  ExactMatrix id = ExactMatrix::identity(3);
  CHECK(inverse(id) == id);

  ExactMatrix b = from_rows({{2, -1}, {1, 2}});
  ExactMatrix binv = inverse(b);
  CHECK(binv.at(0, 0) == make_rat(Int(2), Int(5)));
  CHECK(binv.at(0, 1) == make_rat(Int(1), Int(5)));
  CHECK(binv.at(1, 0) == make_rat(Int(-1), Int(5)));
  CHECK(binv.at(1, 1) == make_rat(Int(2), Int(5)));
  CHECK((b * binv).is_scalar_multiple_of_identity(Rat(1)));

  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + int(rng() % 4);
    ExactMatrix m = random_rat_matrix(n);
    if (det(m) == 0) continue;
    CHECK((m * inverse(m)).is_scalar_multiple_of_identity(Rat(1)));
    CHECK(det(inverse(m)) * det(m) == 1);
  }

  ExactMatrix sing(2);
  CHECK_THROWS_AS((void)inverse(sing), singular_matrix_error);
}

TEST_CASE("matrix text format round trip") {
  ExactMatrix m(2);
  m.at(0, 0) = Rat(2);
  m.at(0, 1) = make_rat(Int(-1), Int(3));
  m.at(1, 0) = Rat(0);
  m.at(1, 1) = Rat(5);
  std::istringstream in(format_matrix(m));
  CHECK(parse_matrix(in) == m);

  std::istringstream bad("2\n1 2\n3");
  CHECK_THROWS_AS((void)parse_matrix(bad), parse_error);
  std::istringstream bad2("0\n");
  CHECK_THROWS_AS((void)parse_matrix(bad2), parse_error);
}

TEST_CASE("matrix arithmetic basics") {
  ExactMatrix a = from_rows({{1, 2}, {3, 4}});
  ExactMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK((a + b) == from_rows({{1, 3}, {4, 4}}));
  CHECK((a - b) == from_rows({{1, 1}, {2, 4}}));
  CHECK((a * b) == from_rows({{2, 1}, {4, 3}}));
  CHECK((a * Rat(2)) == from_rows({{2, 4}, {6, 8}}));
  CHECK(a.is_integer());
  CHECK(!(a * make_rat(Int(1), Int(3))).is_integer());
  CHECK(ExactMatrix::identity(3).is_scalar_multiple_of_identity(Rat(1)));
  CHECK(!a.is_scalar_multiple_of_identity(Rat(1)));
}
