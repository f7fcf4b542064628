#include "fraclat/exact.hpp"

#include <fstream>
#include <sstream>

namespace fraclat {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rat rpow(const Rat& base, unsigned long e) {
  return make_rat(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int exact_div(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw std::runtime_error("exact_div: " + num.get_str() +
                             " is not divisible by " + den.get_str());
  }
  return q;
}

ExactMatrix ExactMatrix::identity(int order) {
  ExactMatrix m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rat>& d) {
  ExactMatrix m(int(d.size()));
  for (int i = 0; i < m.order(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix r(n_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  ExactMatrix r(n_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  ExactMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::operator*(const Rat& c) const {
  ExactMatrix r(n_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

bool ExactMatrix::is_integer() const {
  for (const Rat& x : e_)
    if (x.get_den() != 1) return false;
  return true;
}

bool ExactMatrix::is_scalar_multiple_of_identity(const Rat& c) const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? c : Rat(0))) return false;
  return true;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& rows_cols) const {
  const int m = int(rows_cols.size());
  ExactMatrix r(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r.at(i, j) = at(rows_cols[i], rows_cols[j]);
  return r;
}

namespace {

// Fraction-free Bareiss elimination; entries must be integers.
Rat det_bareiss(const ExactMatrix& m) {
  const int n = m.order();
  std::vector<Int> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j).get_num();

  auto e = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (e(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (e(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Rat(0);
      for (int j = k; j < n; ++j) std::swap(e(k, j), e(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        e(i, j) = exact_div(e(i, j) * e(k, k) - e(i, k) * e(k, j), prev);
    prev = e(k, k);
  }
  return Rat(sign * e(n - 1, n - 1));
}

// Exact rational Gaussian elimination.
Rat det_gauss(const ExactMatrix& m) {
  const int n = m.order();
  ExactMatrix a = m;
  Rat result = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      result = -result;
    }
    result *= a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) / a.at(k, k);
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return result;
}

}  // namespace

Rat det(const ExactMatrix& m) {
  if (m.is_integer()) return det_bareiss(m);
  return det_gauss(m);
}

Rat principal_minor(const ExactMatrix& m, const std::vector<int>& subset) {
  if (subset.empty()) return Rat(1);
  for (int i : subset)
    if (i < 0 || i >= m.order())
      throw std::out_of_range("principal_minor: index out of range");
  return det(m.submatrix(subset));
}

namespace {

// DFS over index subsets in lexicographic order ({0}, {0,1}, {0,1,2}, ...,
// {0,2}, ..., {1}, ...). First violation found is the lexicographically
// least one.
bool p0_scan(const ExactMatrix& m, std::vector<int>& subset, int next,
             std::vector<int>& witness) {
  for (int i = next; i < m.order(); ++i) {
    subset.push_back(i);
    if (principal_minor(m, subset) < 0) {
      witness = subset;
      subset.pop_back();
      return false;
    }
    if (!p0_scan(m, subset, i + 1, witness)) {
      subset.pop_back();
      return false;
    }
    subset.pop_back();
  }
  return true;
}

}  // namespace

P0Result is_p0(const ExactMatrix& m, int order_cap) {
  if (m.order() > order_cap) {
    throw capacity_error("is_p0: order " + std::to_string(m.order()) +
                         " exceeds cap " + std::to_string(order_cap));
  }
  P0Result r;
  std::vector<int> subset;
  r.is_p0 = p0_scan(m, subset, 0, r.witness);
  return r;
}

ExactMatrix inverse(const ExactMatrix& m) {
  const int n = m.order();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw singular_matrix_error("matrix is singular");
    if (piv != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(piv, j));
        std::swap(inv.at(k, j), inv.at(piv, j));
      }
    }
    Rat d = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) /= d;
      inv.at(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

namespace {

Rat parse_rat(const std::string& tok, int line) {
  try {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rat(Int(tok));
    Int num(tok.substr(0, slash));
    Int den(tok.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw parse_error("line " + std::to_string(line) + ": bad entry '" + tok +
                      "'");
  }
}

}  // namespace

ExactMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("line 1: missing order");
  int n = 0;
  try {
    n = std::stoi(line);
  } catch (...) {
    throw parse_error("line 1: bad order '" + line + "'");
  }
  if (n < 1) throw parse_error("line 1: order must be >= 1");
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw parse_error("line " + std::to_string(i + 2) + ": missing row");
    std::istringstream row(line);
    std::string tok;
    for (int j = 0; j < n; ++j) {
      if (!(row >> tok))
        throw parse_error("line " + std::to_string(i + 2) + ": expected " +
                          std::to_string(n) + " entries");
      m.at(i, j) = parse_rat(tok, i + 2);
    }
    if (row >> tok)
      throw parse_error("line " + std::to_string(i + 2) + ": trailing '" +
                        tok + "'");
  }
  return m;
}

ExactMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return parse_matrix(in);
}

std::string format_matrix(const ExactMatrix& m) {
  std::ostringstream out;
  out << m.order() << "\n";
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      if (j) out << ' ';
      out << to_string(m.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace fraclat
