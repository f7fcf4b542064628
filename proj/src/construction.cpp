#include "fraclat/construction.hpp"

#include <nlohmann/json.hpp>

#include "fraclat/graphs.hpp"

namespace fraclat {

void ConstructionParams::validate() const {
  if (n < 1) throw std::invalid_argument("params: n >= 1 required");
  if (k < 1) throw std::invalid_argument("params: k >= 1 required");
  if (b < 1) throw std::invalid_argument("params: b >= 1 required");
  if (r < 0) throw std::invalid_argument("params: r >= 0 required");
  if (s < 0) throw std::invalid_argument("params: s >= 0 required");
  if (r > b) throw std::invalid_argument("params: r <= b required");
}

DerivedTriple derive(const ConstructionParams& params) {
  params.validate();
  const unsigned long n = static_cast<unsigned long>(params.n);
  const Int k(params.k), b(params.b), r(params.r), s(params.s);

  DerivedTriple t;
  t.a = k * ipow(b, n) + s * b + r;
  const Int denom = r + k * ipow(b, n);
  // p and q are polynomials in the parameters, so these divisions are exact;
  // a remainder would indicate an implementation bug.
  t.p = exact_div(ipow(s, n) * r + k * ipow(t.a, n), denom);
  t.q = exact_div(ipow(s, n - 1) * r + k * b * ipow(t.a, n - 1), denom);

  if (t.q < 1) throw std::runtime_error("derive: q < 1");
  if (t.p != t.q * s + k * ipow(t.a, n - 1))
    throw std::runtime_error("derive: p = qs + k a^{n-1} failed");
  if (t.p * b != t.q * t.a - r * ipow(s, n - 1))
    throw std::runtime_error("derive: pb = qa - r s^{n-1} failed");
  if (t.p * b > t.q * t.a) throw std::runtime_error("derive: p/q > a/b");
  return t;
}

ExactMatrix build_m_alpha(int n, const Rat& alpha) {
  ExactMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j)
        m.at(i, j) = alpha;
      else if (i > j)
        m.at(i, j) = -1;
    }
  return m;
}

ExactMatrix build_r_alpha(int n, const Rat& alpha) {
  ExactMatrix m(n);
  m.at(0, n - 1) = -alpha;
  for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  return m;
}

ExactMatrix build_d(int n, const Rat& beta) {
  std::vector<Rat> d(static_cast<size_t>(n));
  d[0] = 1;
  for (int i = 1; i < n; ++i) d[static_cast<size_t>(i)] = d[static_cast<size_t>(i) - 1] * beta;
  return ExactMatrix::diagonal(d);
}

bool check_det_identity(int n, const Rat& x, const Rat& y, const Rat& alpha) {
  ExactMatrix m = build_r_alpha(n, alpha) * x + ExactMatrix::identity(n) * y;
  Rat lhs = det(m);
  Rat rhs = rpow(-x, static_cast<unsigned long>(n)) * alpha +
            rpow(y, static_cast<unsigned long>(n));
  return lhs == rhs;
}

std::pair<ExactMatrix, ExactMatrix> build_xy(const ConstructionParams& params) {
  params.validate();
  const int n = static_cast<int>(params.n);
  const Int k(params.k), b(params.b), r(params.r), s(params.s), a =
      derive(params).a;

  auto up = [](int e) { return static_cast<unsigned long>(e); };
  ExactMatrix x(n), y(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) {
        x.at(i, j) = Rat(r * ipow(a, up(j - i - 1)) * ipow(s, up(n - (j - i + 1))));
        y.at(i, j) = Rat(-r * ipow(b, up(j - i - 1)));
      } else if (i > j) {
        x.at(i, j) = Rat(-k * ipow(a, up(n - (i - j + 1))) * ipow(s, up(i - j - 1)));
        y.at(i, j) = Rat(k * ipow(b, up(n - (i - j + 1))));
      }
    }
  return {std::move(x), std::move(y)};
}

std::pair<ExactMatrix, ExactMatrix> build_ab(const ConstructionParams& params) {
  DerivedTriple t = derive(params);
  auto [x, y] = build_xy(params);
  const int n = static_cast<int>(params.n);
  // (a - r)/b = k b^{n-1} + s, always integral.
  Int diag_b = exact_div(t.a - params.r, Int(params.b));
  ExactMatrix a = ExactMatrix::identity(n) * Rat(t.q) + x;
  ExactMatrix b = ExactMatrix::identity(n) * Rat(diag_b) + y;
  return {std::move(a), std::move(b)};
}

bool VerificationReport::valid() const {
  if (!product.passed() || !det_b.passed()) return false;
  if (!lambda.passed() || !independence.passed()) return false;
  // A skipped P0 check is tolerable only when the direct scan ran.
  if (p0.status == CheckStatus::kFail) return false;
  if (p0.status == CheckStatus::kSkipped && lambda.detail != "direct")
    return false;
  return true;
}

VerificationReport verify_family(const ConstructionParams& params,
                                 const VerifyOptions& opts) {
  VerificationReport rep;
  rep.params = params;
  rep.triple = derive(params);
  auto [x, y] = build_xy(params);
  auto [a, b] = build_ab(params);
  const int n = static_cast<int>(params.n);

  // Guard from the P0 lemma's hypotheses: (r s^n)/(k a^n) must lie in [0,1].
  Rat alpha = make_rat(Int(params.r) * ipow(Int(params.s), unsigned(n)),
                       Int(params.k) * ipow(rep.triple.a, unsigned(n)));
  if (alpha < 0 || alpha > 1)
    throw std::runtime_error("verify_family: (r s^n)/(k a^n) outside [0,1]");

  try {
    P0Result p0 = is_p0(x, opts.p0_cap);
    rep.p0.status = p0.is_p0 ? CheckStatus::kPass : CheckStatus::kFail;
    rep.p0.detail = p0.is_p0 ? "direct" : "violating principal minor found";
  } catch (const capacity_error&) {
    rep.p0.status = CheckStatus::kSkipped;
    rep.p0.detail = "order exceeds P0 cap";
  }

  bool product_ok = (a * b).is_scalar_multiple_of_identity(Rat(rep.triple.p));
  rep.product.status = product_ok ? CheckStatus::kPass : CheckStatus::kFail;
  rep.product.detail = "direct";

  bool det_ok = det(b) == Rat(rep.triple.p);
  rep.det_b.status = det_ok ? CheckStatus::kPass : CheckStatus::kFail;
  rep.det_b.detail = "direct";

  // The subgroup has |det B| = p elements; scan it directly when small
  // enough, otherwise fall back on the P0 certificate (which implies both
  // lambda_inf >= q and independence).
  bool scannable = rep.triple.p.fits_slong_p() &&
                   rep.triple.p.get_si() <= opts.direct_scan_cap;
  if (scannable) {
    PAryLattice lat(a, rep.triple.p);
    rep.lambda_value = lambda_inf(lat, opts.direct_scan_cap);
    bool ok = rep.lambda_value >= rep.triple.q;
    rep.lambda.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
    rep.lambda.detail = "direct";

    SubgroupSet s = reduce_mod_p(a, rep.triple.p, opts.direct_scan_cap);
    FractionGraphPower g{rep.triple.p.get_si(), rep.triple.q.get_si(), n};
    bool ind = is_independent(g, s) &&
               Int(static_cast<long>(s.elements.size())) == rep.triple.p;
    rep.independence.status = ind ? CheckStatus::kPass : CheckStatus::kFail;
    rep.independence.detail = "direct";
  } else if (rep.p0.passed()) {
    rep.lambda.status = CheckStatus::kPass;
    rep.lambda.detail = "implied";
    rep.independence.status = CheckStatus::kPass;
    rep.independence.detail = "implied";
  } else {
    rep.lambda.status = CheckStatus::kSkipped;
    rep.lambda.detail = "subgroup too large to scan and no P0 certificate";
    rep.independence.status = CheckStatus::kSkipped;
    rep.independence.detail = rep.lambda.detail;
  }
  return rep;
}

namespace {

nlohmann::json check_json(const CheckResult& c) {
  const char* s = c.status == CheckStatus::kPass     ? "pass"
                  : c.status == CheckStatus::kFail   ? "fail"
                                                     : "skipped";
  return nlohmann::json{{"status", s}, {"detail", c.detail}};
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["params"] = {{"n", params.n}, {"k", params.k}, {"b", params.b},
                 {"r", params.r}, {"s", params.s}};
  j["a"] = triple.a.get_str();
  j["p"] = triple.p.get_str();
  j["q"] = triple.q.get_str();
  j["checks"] = {{"p0", check_json(p0)},
                 {"product", check_json(product)},
                 {"det", check_json(det_b)},
                 {"lambda_inf", check_json(lambda)},
                 {"independence", check_json(independence)}};
  if (lambda_value != 0) j["lambda_inf_value"] = lambda_value.get_str();
  j["verdict"] = valid() ? "VALID" : "INVALID";
  return j;
}

Perturbation bohman_perturbation(int d, long ell) {
  if (d < 2) throw std::invalid_argument("bohman: d >= 2 required");
  if (ell < 1) throw std::invalid_argument("bohman: ell >= 1 required");

  Perturbation pert;
  pert.d = d;
  pert.ell = ell;
  const unsigned long du = static_cast<unsigned long>(d);
  pert.m = Int(ell) * ipow(Int(2), du) + ipow(Int(2), du - 1) + 1;
  // m is odd, so m^{d-2}(m-1)/2 is an integer for d >= 2.
  pert.p_prime = Int(ell) * ipow(pert.m, du - 1) +
                 exact_div(ipow(pert.m, du - 2) * (pert.m - 1), Int(2));
  pert.q_prime = make_rat(2 * pert.p_prime, pert.m);

  const long s = (d == 2) ? 1 : (1L << (d - 2));
  ConstructionParams params{d, ell, 2, 1, s};
  auto [a_unused, b] = build_ab(params);
  (void)a_unused;

  ExactMatrix c(d);
  for (int i = 1; i < d; ++i) c.at(i, i - 1) = make_rat(1, 2);
  ExactMatrix c_tilde = c;
  c_tilde.at(d - 1, d - 2) = 0;

  ExactMatrix correction =
      (c_tilde * inverse(ExactMatrix::identity(d) - c)) * Rat(s);
  pert.b_prime = b + correction;
  pert.a_prime = inverse(pert.b_prime) * Rat(pert.p_prime);
  return pert;
}

bool PerturbationReport::all_pass() const {
  return q_integral.passed() && product.passed() && det_b.passed() &&
         a_integral.passed() && p0.passed();
}

PerturbationReport verify_perturbation(int d, long ell, int p0_cap) {
  PerturbationReport rep;
  rep.pert = bohman_perturbation(d, ell);
  const Perturbation& pt = rep.pert;

  bool qi = is_integer(pt.q_prime);
  rep.q_integral.status = qi ? CheckStatus::kPass : CheckStatus::kFail;
  rep.q_integral.detail = qi ? "direct" : "q' = " + to_string(pt.q_prime);

  bool prod = (pt.a_prime * pt.b_prime)
                  .is_scalar_multiple_of_identity(Rat(pt.p_prime));
  rep.product.status = prod ? CheckStatus::kPass : CheckStatus::kFail;
  rep.product.detail = "direct";

  bool det_ok = det(pt.b_prime) == Rat(pt.p_prime);
  rep.det_b.status = det_ok ? CheckStatus::kPass : CheckStatus::kFail;
  rep.det_b.detail = "direct";

  bool ai = pt.a_prime.is_integer();
  rep.a_integral.status = ai ? CheckStatus::kPass : CheckStatus::kFail;
  rep.a_integral.detail = "direct";

  try {
    ExactMatrix shifted =
        pt.a_prime - ExactMatrix::identity(d) * pt.q_prime;
    P0Result p0 = is_p0(shifted, p0_cap);
    rep.p0.status = p0.is_p0 ? CheckStatus::kPass : CheckStatus::kFail;
    rep.p0.detail = p0.is_p0 ? "direct" : "violating principal minor found";
  } catch (const capacity_error&) {
    rep.p0.status = CheckStatus::kSkipped;
    rep.p0.detail = "order exceeds P0 cap";
  }
  return rep;
}

nlohmann::json PerturbationReport::to_json() const {
  nlohmann::json j;
  j["d"] = pert.d;
  j["ell"] = pert.ell;
  j["m"] = pert.m.get_str();
  j["p_prime"] = pert.p_prime.get_str();
  j["q_prime"] = to_string(pert.q_prime);
  j["checks"] = {{"q_integral", check_json(q_integral)},
                 {"product", check_json(product)},
                 {"det", check_json(det_b)},
                 {"a_integral", check_json(a_integral)},
                 {"p0", check_json(p0)}};
  j["verdict"] = all_pass() ? "PASS" : "FAIL";
  return j;
}

}  // namespace fraclat
