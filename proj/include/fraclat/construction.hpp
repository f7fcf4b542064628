#pragma once

#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "fraclat/exact.hpp"
#include "fraclat/lattice.hpp"

namespace fraclat {

// Integer parameter tuple driving the lattice family.
struct ConstructionParams {
  long n = 1;  // power
  long k = 1;
  long b = 1;
  long r = 0;
  long s = 0;

  // Requires n, k, b >= 1; r, s >= 0; r <= b. Throws std::invalid_argument
  // naming the violated constraint.
  void validate() const;
};

struct DerivedTriple {
  Int a, p, q;
};

// a = k b^n + s b + r, p = (s^n r + k a^n)/(r + k b^n),
// q = (s^{n-1} r + k b a^{n-1})/(r + k b^n). Integrality and the identities
// p = qs + k a^{n-1}, pb = qa - r s^{n-1}, p/q <= a/b are checked at
// construction time.
DerivedTriple derive(const ConstructionParams& params);

// (M_alpha)_{ij} = alpha if i<j, -1 if i>j, 0 on the diagonal.
ExactMatrix build_m_alpha(int n, const Rat& alpha);
// (R_alpha)_{1,n} = -alpha, subdiagonal 1, zero elsewhere.
ExactMatrix build_r_alpha(int n, const Rat& alpha);
// diag(1, beta, ..., beta^{n-1}).
ExactMatrix build_d(int n, const Rat& beta);

// det(x R_alpha + y I) = (-x)^n alpha + y^n, evaluated exactly on both sides.
bool check_det_identity(int n, const Rat& x, const Rat& y, const Rat& alpha);

// X, Y from the explicit polynomial entry formulas (0^0 = 1, so s = 0 is
// valid); integer matrices for integer parameters.
std::pair<ExactMatrix, ExactMatrix> build_xy(const ConstructionParams& params);

// A = qI + X, B = ((a-r)/b) I + Y.
std::pair<ExactMatrix, ExactMatrix> build_ab(const ConstructionParams& params);

enum class CheckStatus { kPass, kFail, kSkipped };

struct CheckResult {
  CheckStatus status = CheckStatus::kSkipped;
  // "direct", "implied", or a failure/skip note.
  std::string detail;

  bool passed() const { return status == CheckStatus::kPass; }
};

struct VerifyOptions {
  int p0_cap = kDefaultP0Cap;
  // Cosets are enumerated for the direct lambda_inf / independence checks
  // only when |det B| is at most this bound; larger instances carry the
  // P0-implied verdict instead.
  long long direct_scan_cap = kDefaultEnumCap;
};

struct VerificationReport {
  ConstructionParams params;
  DerivedTriple triple;
  CheckResult p0;            // X is a P0-matrix
  CheckResult product;       // AB = pI
  CheckResult det_b;         // det B = p
  CheckResult lambda;        // lambda_inf(L(A)) >= q
  CheckResult independence;  // subgroup independent in E_{p/q}^boxtimes n
  Int lambda_value = 0;      // 0 when not directly computed

  bool valid() const;
  nlohmann::json to_json() const;
};

// Runs the P0 certificate and, when the subgroup is small enough to
// enumerate, the direct lambda_inf and independence checks as an independent
// second route. If the P0 enumeration exceeds its cap the check is marked
// SKIPPED and the direct scan is mandatory.
VerificationReport verify_family(const ConstructionParams& params,
                                 const VerifyOptions& opts = {});

// Bohman's two-parameter family, perturbed into the lattice framework.
struct Perturbation {
  int d = 0;
  long ell = 0;
  Int m;
  Int p_prime;
  Rat q_prime;  // 2 p'/m; integral for d >= 3
  ExactMatrix b_prime;
  ExactMatrix a_prime;  // p' B'^{-1}
};

// m = ell 2^d + 2^{d-1} + 1, p' = ell m^{d-1} + m^{d-2}(m-1)/2,
// q' = 2p'/m; B from params (d, ell, 2, 1, 2^{d-2}),
// B' = B + 2^{d-2} C~ (I - C)^{-1}, A' = p' B'^{-1}.
Perturbation bohman_perturbation(int d, long ell);

struct PerturbationReport {
  Perturbation pert;
  CheckResult q_integral;  // q' is an integer
  CheckResult product;     // A'B' = p'I
  CheckResult det_b;       // det B' = p'
  CheckResult a_integral;  // A' has integer entries
  CheckResult p0;          // A' - q'I is a P0-matrix

  bool all_pass() const;
  nlohmann::json to_json() const;
};

PerturbationReport verify_perturbation(int d, long ell,
                                       int p0_cap = kDefaultP0Cap);

}  // namespace fraclat
