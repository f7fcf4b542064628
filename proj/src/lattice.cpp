#include "fraclat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <nlohmann/json.hpp>

#include "fraclat/graphs.hpp"

namespace fraclat {

bool SubgroupSet::contains(const std::vector<long long>& v) const {
  return std::binary_search(elements.begin(), elements.end(), v);
}

SubgroupSet close_generators(long long modulus, int dim,
                             const std::vector<std::vector<long long>>& gens,
                             long long cap) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  SubgroupSet s;
  s.modulus = modulus;
  s.dim = dim;
  s.generators = gens;

  std::vector<std::vector<long long>> reduced;
  for (const auto& g : gens) {
    if (int(g.size()) != dim)
      throw std::invalid_argument("generator dimension mismatch");
    std::vector<long long> h(g);
    for (auto& x : h) x = ((x % modulus) + modulus) % modulus;
    reduced.push_back(std::move(h));
  }

  std::set<std::vector<long long>> seen;
  std::deque<std::vector<long long>> frontier;
  std::vector<long long> zero(static_cast<size_t>(dim), 0);
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    auto v = frontier.front();
    frontier.pop_front();
    for (const auto& g : reduced) {
      std::vector<long long> w(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i) {
        w[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] + g[static_cast<size_t>(i)];
        if (w[static_cast<size_t>(i)] >= modulus) w[static_cast<size_t>(i)] -= modulus;
      }
      if (seen.insert(w).second) {
        if (static_cast<long long>(seen.size()) > cap)
          throw capacity_error("subgroup closure exceeds enumeration cap " +
                               std::to_string(cap));
        frontier.push_back(std::move(w));
      }
    }
  }
  s.elements.assign(seen.begin(), seen.end());
  return s;
}

SubgroupSet reduce_mod_p(const ExactMatrix& a, const Int& p, long long cap) {
  if (!a.is_integer())
    throw std::invalid_argument("reduce_mod_p: basis must be integral");
  if (p < 1) throw std::invalid_argument("reduce_mod_p: p must be >= 1");
  if (!p.fits_slong_p())
    throw capacity_error("reduce_mod_p: modulus too large to enumerate");
  const long long pp = p.get_si();
  const int n = a.order();
  std::vector<std::vector<long long>> cols;
  for (int j = 0; j < n; ++j) {
    std::vector<long long> col(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      Int e = a.at(i, j).get_num() % p;
      if (e < 0) e += p;
      col[static_cast<size_t>(i)] = e.get_si();
    }
    cols.push_back(std::move(col));
  }
  return close_generators(pp, n, cols, cap);
}

PAryLattice::PAryLattice(ExactMatrix basis_, Int p_)
    : basis(std::move(basis_)), p(std::move(p_)) {
  if (!basis.is_integer())
    throw std::invalid_argument("p-ary lattice basis must be integral");
  if (p < 1) throw std::invalid_argument("modulus must be >= 1");
}

long long centered_rep(long long x, long long p) {
  long long c = ((x % p) + p) % p;
  if (2 * c > p) c -= p;
  return c;
}

Int lambda_inf(const PAryLattice& lat, long long cap) {
  SubgroupSet s = reduce_mod_p(lat.basis, lat.p, cap);
  const long long p = s.modulus;
  // p e_i is the shortest nonzero vector of the zero coset.
  long long best = p;
  for (const auto& v : s.elements) {
    long long norm = 0;
    for (long long x : v) norm = std::max(norm, std::llabs(centered_rep(x, p)));
    if (norm > 0 && norm < best) best = norm;
  }
  return Int(static_cast<long>(best));
}

BoundCertificate certify(const ExactMatrix& a, const ExactMatrix& b,
                         const Int& p, const Int& q, long long cap) {
  BoundCertificate cert;
  cert.n = a.order();
  cert.p = p;
  cert.q = q;

  auto fail = [&](const std::string& what) -> BoundCertificate& {
    cert.valid = false;
    cert.failed_check = what;
    return cert;
  };

  if (b.order() != a.order()) return fail("order mismatch");
  if (!a.is_integer() || !b.is_integer()) return fail("non-integer matrix");
  if (!(a * b).is_scalar_multiple_of_identity(Rat(p)))
    return fail("AB != pI");

  cert.det_b = abs(det(b).get_num());

  PAryLattice lat(a, p);
  cert.lambda = lambda_inf(lat, cap);
  if (cert.lambda < q) return fail("lambda_inf < q");

  cert.subgroup = reduce_mod_p(a, p, cap);
  if (Int(long(cert.subgroup.elements.size())) != cert.det_b)
    return fail("subgroup size != |det B|");

  FractionGraphPower g{p.get_si(), q.get_si(), a.order()};
  cert.independent = is_independent(g, cert.subgroup);
  if (!cert.independent) return fail("subgroup not independent");

  cert.valid = true;
  return cert;
}

nlohmann::json BoundCertificate::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["p"] = p.get_str();
  j["q"] = q.get_str();
  j["detB"] = det_b.get_str();
  j["lambda_inf"] = lambda.get_str();
  j["independent"] = independent;
  j["verdict"] = valid ? "VALID" : "INVALID";
  if (!valid) j["failed_check"] = failed_check;
  return j;
}

}  // namespace fraclat
