#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "fraclat/exact.hpp"

namespace fraclat {

inline constexpr long long kDefaultEnumCap = 10'000'000;

// A subgroup of (Z/modulus)^dim, elements stored as canonical
// representatives in [0, modulus)^dim, sorted lexicographically.
struct SubgroupSet {
  long long modulus = 1;
  int dim = 1;
  std::vector<std::vector<long long>> elements;
  std::vector<std::vector<long long>> generators;

  bool contains(const std::vector<long long>& v) const;
};

// Closure of a set of generator vectors under addition mod p.
SubgroupSet close_generators(long long modulus, int dim,
                             const std::vector<std::vector<long long>>& gens,
                             long long cap = kDefaultEnumCap);

// The subgroup of (Z/p)^n generated by the columns of A mod p.
// A must have integer entries and p must fit in a machine word.
SubgroupSet reduce_mod_p(const ExactMatrix& a, const Int& p,
                         long long cap = kDefaultEnumCap);

// Lattice Lambda with p Z^n <= Lambda <= Z^n, given by an integer basis.
struct PAryLattice {
  ExactMatrix basis;
  Int p;

  PAryLattice(ExactMatrix basis_, Int p_);
  int dim() const { return basis.order(); }
};

// Reduce each coordinate of v to the interval (-p/2, p/2].
long long centered_rep(long long x, long long p);

// Exact l-infinity minimum distance, by exhaustive scan over the cosets of
// p Z^n in the lattice. The zero coset contributes p.
Int lambda_inf(const PAryLattice& lat, long long cap = kDefaultEnumCap);

// A verified record backing a claimed bound alpha_grp(E_{p/q}^boxtimes n) >= |det B|.
struct BoundCertificate {
  int n = 0;
  Int p, q;
  Int det_b;
  Int lambda;
  bool independent = false;
  bool valid = false;
  std::string failed_check;  // empty when valid
  SubgroupSet subgroup;

  nlohmann::json to_json() const;
};

// Full matrix-to-lattice certificate: checks AB = pI exactly, lambda_inf >= q,
// computes |det B|, enumerates the subgroup and re-verifies that it is an
// independent set of E_{p/q}^boxtimes n.
BoundCertificate certify(const ExactMatrix& a, const ExactMatrix& b,
                         const Int& p, const Int& q,
                         long long cap = kDefaultEnumCap);

}  // namespace fraclat
