#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fraclat/exact.hpp"
#include "fraclat/lattice.hpp"

namespace fraclat {

// Circular distance between residues x, y mod p.
long long circ_dist(long long x, long long y, long long p);

// Symbolic description of E_{p/q}^boxtimes n: vertex set (Z/p)^n, distinct
// u, v adjacent iff every coordinate pair is at circular distance < q
// (equal coordinates count as distance 0).
struct FractionGraphPower {
  long long p = 1;
  long long q = 1;
  int n = 1;

  bool adjacent(const std::vector<long long>& u,
                const std::vector<long long>& v) const;
};

// Independence of a subgroup via the difference criterion: every nonzero
// element must have some coordinate at circular distance >= q from 0.
bool is_independent(const FractionGraphPower& g, const SubgroupSet& s);

// All-pairs independence check for arbitrary vertex lists.
bool is_independent_list(const FractionGraphPower& g,
                         const std::vector<std::vector<long long>>& vs);

// Cohomomorphism up-map: multiplies each coordinate by p, sending a subgroup
// independent set of E_{a/b}^boxtimes n to one of equal size in
// E_{ap/aq}^boxtimes n. Requires 2 <= a/b <= p/q. Independence is
// re-verified on the image.
SubgroupSet map_up(const SubgroupSet& s, long long a, long long b,
                   long long p, long long q);

// Parameters of the fraction graph induced on the order-N cyclic subgroup of
// the circle graph E_x^o: (N, ceil(N/x)).
std::pair<long long, long long> round_to_fraction(long long big_n,
                                                  const Rat& x);

// Dense graph with bitset adjacency rows.
class ExplicitGraph {
 public:
  explicit ExplicitGraph(int n);

  int order() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return (adj_[static_cast<size_t>(u)][static_cast<size_t>(v) >> 6] >> (v & 63)) & 1;
  }
  int degree(int v) const;
  size_t edge_count() const;
  const std::vector<uint64_t>& row(int v) const { return adj_[static_cast<size_t>(v)]; }
  int words() const { return words_; }

  // DIMACS-like edge list: "p edges n m" header, then "e u v" lines (1-based).
  std::string to_dimacs() const;
  static ExplicitGraph from_dimacs(std::istream& in);

 private:
  int n_;
  int words_;
  std::vector<std::vector<uint64_t>> adj_;
};

inline constexpr long long kDefaultMaterializeCap = 100'000;

// Materialize E_{p/q}^boxtimes n as an explicit graph (vertex index in
// mixed-radix order, coordinate 0 least significant).
ExplicitGraph materialize(const FractionGraphPower& g,
                          long long cap = kDefaultMaterializeCap);

std::vector<long long> vertex_from_index(long long idx, long long p, int n);
long long index_from_vertex(const std::vector<long long>& v, long long p);

// Quotient of G by an independent subgroup H; vertices are cosets with
// lexicographically least representatives, cosets adjacent iff some pair of
// representatives is adjacent in G.
struct CosetQuotient {
  FractionGraphPower base;
  SubgroupSet subgroup;
  std::vector<std::vector<long long>> reps;
  ExplicitGraph quotient;
};

CosetQuotient build_quotient(const FractionGraphPower& g,
                             const std::vector<std::vector<long long>>& gens,
                             long long cap = kDefaultMaterializeCap);

struct LiftResult {
  Int bound;  // |H| * number of chosen cosets
  std::vector<std::vector<long long>> lifted;
};

// alpha(G) >= |H| * alpha(G/H): materializes the union of the chosen cosets
// and re-verifies its independence in G directly. Throws if that check
// fails (it would indicate a quotient-construction bug).
LiftResult lift_bound(const CosetQuotient& q,
                      const std::vector<int>& coset_witness);

inline constexpr long long kDefaultAlphaGrpCap = 10'000;

// Maximum size of an independent subgroup of E_{p/q}^boxtimes n, by
// enumerating closures of generator subsets (joins of up to max_gens cyclic
// subgroups).
long long alpha_grp_exhaustive(long long p, long long q, int n,
                               long long cap = kDefaultAlphaGrpCap,
                               int max_gens = 2);

}  // namespace fraclat
