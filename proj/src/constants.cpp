#include "vitali/constants.hpp"

#include <limits>
#include <mutex>
#include <sstream>

namespace vitali {

namespace {

// log g(L) for L = 1, 2, ...; shared by every scan. Entry L-1 holds log g(L).
const Real& cached_log_g(long L) {
  static std::mutex mutex;
  static std::vector<Real> table;
  std::lock_guard lock(mutex);
  while (static_cast<long>(table.size()) < L) {
    table.push_back(log_g(Real(static_cast<long>(table.size()) + 1)));
  }
  return table[static_cast<std::size_t>(L - 1)];
}

Real ln2() {
  static const Real value = log(Real(2));
  return value;
}

Real pow_real(const Real& base, int e) { return pow(base, Real(e)); }

}  // namespace

long L_search_bound(int d) {
  if (d < 1) throw std::domain_error("L_search_bound: d must be >= 1");
  Real four_d(4 * d);
  return floor(four_d * log(four_d) + Real(1)).convert_to<long>();
}

LOptimum optimize_L(int d) {
  if (d < 1) throw std::domain_error("optimize_L: d must be >= 1");
  const long bound = L_search_bound(d);
  const Real dd(d);
  long best_L = 0;
  Real best_log_h;
  for (long L = 1; L <= bound; ++L) {
    Real log_h = log(Real(L + 2)) + dd * cached_log_g(L);
    if (best_L == 0 || log_h < best_log_h) {
      best_L = L;
      best_log_h = log_h;
    }
  }
  Real log_m = best_log_h + dd * ln2();
  return {best_L, exp(best_log_h), exp(log_m), log_m};
}

LambdaOptimum optimal_lambda(long J) {
  if (J < 2) throw std::domain_error("optimal_lambda: J must be >= 2");
  if (J == 2) return {Real(1), Real(3)};
  Real lambda_star = pow(Real(2 * (J - 2)), Real(1) / Real(J - 1));
  return {lambda_star, lambda_star * Real(J - 1) / Real(J - 2)};
}

Real bdj_lambda(int d) {
  if (d < 1) throw std::domain_error("bdj_lambda: d must be >= 1");
  const Real dd(d);
  const Real three_d = pow_real(Real(3), d);
  auto f = [&](const Real& lambda) {
    return three_d - pow(pow(lambda, Real(1) / dd) - Real(2), dd) / Real(2) - lambda;
  };
  Real lo = pow(Real(5) / Real(2), dd);
  Real hi = three_d;
  Real f_lo = f(lo), f_hi = f(hi);
  if (!(f_lo > 0 && f_hi < 0))
    throw std::logic_error("bdj_lambda: no sign change on [(5/2)^d, 3^d] for d = " +
                           std::to_string(d));

  // The defining function should decrease across the bracket.
  constexpr int kSamples = 64;
  Real previous = f_lo;
  for (int k = 1; k <= kSamples; ++k) {
    Real x = lo + (hi - lo) * Real(k) / Real(kSamples);
    Real fx = f(x);
    if (!(fx < previous))
      throw std::logic_error("bdj_lambda: defining function not decreasing for d = " +
                             std::to_string(d));
    previous = fx;
  }

  const Real tolerance = hi * std::numeric_limits<Real>::epsilon() * Real(16);
  for (int iter = 0; iter < 1000 && hi - lo > tolerance; ++iter) {
    Real mid = (lo + hi) / Real(2);
    if (mid == lo || mid == hi) break;
    if (f(mid) > 0) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / Real(2);
}

BoundsRow bounds_row(int d) {
  auto opt = optimize_L(d);
  Real three_d = pow_real(Real(3), d);
  BoundsRow row{d, opt.L, opt.m, opt.m / three_d, Real(1) / three_d, Real(), Real(), Real()};
  row.rado = Real(1) / (three_d - pow_real(Real(7), -d));
  row.bdj = Real(1) / bdj_lambda(d);
  row.ours = pow_real(Real(2), -d) / opt.h_min;
  return row;
}

std::vector<BoundsRow> bounds_table(int d_max) {
  if (d_max < 1) throw std::domain_error("bounds_table: d_max must be >= 1");
  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<std::size_t>(d_max));
  for (int d = 1; d <= d_max; ++d) rows.push_back(bounds_row(d));
  return rows;
}

FrontierCertificate improvement_frontier() {
  const Real one(1);
  const Real three_halves = Real(3) / Real(2);
  FrontierCertificate cert;
  cert.dimension = 14;
  for (int d = 1; d <= 13; ++d) {
    auto opt = optimize_L(d);
    Real ratio = opt.m / pow_real(Real(3), d);
    if (ratio < one)
      throw std::logic_error("frontier: m_d/3^d < 1 already at d = " + std::to_string(d));
    cert.below.push_back(ratio);
  }
  auto opt = optimize_L(14);
  cert.L = opt.L;
  cert.m_over_3d = opt.m / pow_real(Real(3), 14);
  if (!(cert.m_over_3d < one))
    throw std::logic_error("frontier: m_14/3^14 = " + format_real(cert.m_over_3d, 6) + " is not < 1");

  cert.g8 = g_eval(Real(8));
  cert.g9 = g_eval(Real(9));
  if (!(cert.g9 < three_halves && three_halves < cert.g8))
    throw std::logic_error("frontier: g(9) < 3/2 < g(8) fails");
  if (cert.L < 9) throw std::logic_error("frontier: L_14 < 9");

  cert.g_at_L = g_eval(Real(cert.L));
  if (!(cert.g_at_L <= three_halves)) throw std::logic_error("frontier: g(L_14) > 3/2");
  cert.induction_factor = Real(2) / Real(3) * cert.g_at_L;
  if (!(cert.induction_factor < one))
    throw std::logic_error("frontier: (2/3) g(L_14) is not < 1");
  return cert;
}

bool AsymptoticReport::ok() const {
  for (const auto& r : rows)
    if (!(r.rho_in_range && r.residual_bounded && r.log2_envelope)) return false;
  return !rows.empty();
}

AsymptoticReport asymptotic_check(std::span<const int> dims) {
  AsymptoticReport report;
  for (int d : dims) {
    if (d < 50) throw std::domain_error("asymptotic_check: every d must be >= 50");
    auto opt = optimize_L(d);
    Real dd(d);
    Real log_d = log(dd);
    Real scale = dd * log_d * exp(Real(1) + log(log_d) / log_d);
    AsymptoticRow row;
    row.d = d;
    row.L = opt.L;
    row.rho = opt.h_min / scale;
    row.rho_residual = abs(row.rho - Real(1)) * log_d;
    row.log_m_over_d = opt.log_m / dd;
    row.log2_deviation = abs(row.log_m_over_d - ln2());
    row.rho_in_range = row.rho >= Real(2) / 5 && row.rho <= Real(5) / 2;
    row.residual_bounded = row.rho_residual <= Real(5);
    row.log2_envelope = row.log2_deviation <= Real(3) * log_d / dd;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_real(const Real& x, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << x;
  return out.str();
}

}  // namespace vitali
