#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraclat {

// Arbitrary-precision integers and rationals. All arithmetic in the library
// is exact; no floating point appears on any verification path.
using Int = mpz_class;
using Rat = mpq_class;

// Reduced rational with positive denominator.
Rat make_rat(const Int& num, const Int& den);

// base^e with the convention 0^0 = 1.
Int ipow(const Int& base, unsigned long e);
Rat rpow(const Rat& base, unsigned long e);

bool is_integer(const Rat& x);

// Exact division; throws if the division leaves a remainder.
Int exact_div(const Int& num, const Int& den);

class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

class singular_matrix_error : public std::runtime_error {
 public:
  explicit singular_matrix_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense square matrix over exact rationals. Indices are 0-based.
class ExactMatrix {
 public:
  ExactMatrix() : n_(1), e_(1) {}  // 1x1 zero matrix
  explicit ExactMatrix(int order) : n_(order), e_(static_cast<size_t>(order) * order) {
    if (order < 1) throw std::invalid_argument("matrix order must be >= 1");
  }

  static ExactMatrix identity(int order);
  static ExactMatrix diagonal(const std::vector<Rat>& d);

  int order() const { return n_; }

  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  bool operator==(const ExactMatrix& o) const {
    return n_ == o.n_ && e_ == o.e_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator*(const Rat& c) const;

  bool is_integer() const;
  bool is_scalar_multiple_of_identity(const Rat& c) const;

  ExactMatrix submatrix(const std::vector<int>& rows_cols) const;

 private:
  int n_;
  std::vector<Rat> e_;
};

// Exact determinant. Integer matrices go through fraction-free Bareiss
// elimination, general rational matrices through exact Gaussian elimination;
// the two agree wherever both apply.
Rat det(const ExactMatrix& m);

// det of the principal submatrix indexed by `subset` (0-based, strictly
// increasing). det of the empty submatrix is 1.
Rat principal_minor(const ExactMatrix& m, const std::vector<int>& subset);

struct P0Result {
  bool is_p0 = false;
  // On failure: the lexicographically least index subset with a negative
  // principal minor (0-based).
  std::vector<int> witness;
};

inline constexpr int kDefaultP0Cap = 20;

// Tests whether every principal minor of m is nonnegative, enumerating
// subsets in lexicographic order with early exit. Throws capacity_error when
// order() exceeds the cap.
P0Result is_p0(const ExactMatrix& m, int order_cap = kDefaultP0Cap);

// Exact inverse; throws singular_matrix_error when det = 0.
ExactMatrix inverse(const ExactMatrix& m);

// Text format: first line the order n, then n whitespace-separated rows;
// entries are integers or "a/b" rationals.
ExactMatrix parse_matrix(std::istream& in);
ExactMatrix parse_matrix_file(const std::string& path);
std::string format_matrix(const ExactMatrix& m);

std::string to_string(const Rat& x);

}  // namespace fraclat
