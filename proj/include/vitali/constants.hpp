#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vitali {

/// Working float for the covering constants: 50 significant digits.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                           boost::multiprecision::et_off>;

/// g(x) = (2x)^(1/(x+1)) (1 + 1/x), x > 0.
template <typename T>
T g_eval(const T& x) {
  using std::pow;
  if (!(x > 0)) throw std::domain_error("g_eval: x must be positive");
  T one(1);
  return pow(T(2) * x, one / (x + one)) * (one + one / x);
}

/// log g(x), evaluated without forming g.
template <typename T>
T log_g(const T& x) {
  using std::log;
  if (!(x > 0)) throw std::domain_error("log_g: x must be positive");
  T one(1);
  return log(T(2) * x) / (x + one) + log(one + one / x);
}

/// h_d(x) = (x + 2) g(x)^d.
template <typename T>
T h_eval(int d, const T& x) {
  using std::pow;
  if (d < 1) throw std::domain_error("h_eval: d must be >= 1");
  return (x + T(2)) * pow(g_eval(x), T(d));
}

/// h_d'(x) / h_d(x) = 1/(x+2) - d log(2x) / (x+1)^2.
template <typename T>
T log_deriv_h(int d, const T& x) {
  using std::log;
  if (d < 1) throw std::domain_error("log_deriv_h: d must be >= 1");
  if (!(x > 0)) throw std::domain_error("log_deriv_h: x must be positive");
  T one(1);
  return one / (x + T(2)) - T(d) * log(T(2) * x) / ((x + one) * (x + one));
}

/// floor(4d log(4d) + 1): no integer minimizer of h_d lies beyond it.
long L_search_bound(int d);

struct LOptimum {
  long L;      // minimal integer argmin of h_d
  Real h_min;  // h_d(L)
  Real m;      // 2^d h_d(L)
  Real log_m;  // log(m), usable when m overflows anything printable
};

/// Exhaustive scan of h_d over 1 <= L <= L_search_bound(d).
LOptimum optimize_L(int d);

struct LambdaOptimum {
  Real lambda_star;
  Real min_value;  // min over lambda >= 1 of lambda (1 + 2 lambda^(1-J))
};

/// Closed-form minimizer of lambda (1 + 2 lambda^(1-J)) over lambda >= 1.
LambdaOptimum optimal_lambda(long J);

/// Unique root in [(5/2)^d, 3^d] of 3^d - (lambda^(1/d) - 2)^d / 2 = lambda,
/// found by bisection to working precision.
Real bdj_lambda(int d);

struct BoundsRow {
  int d;
  long L;
  Real m;          // 2^d h_d(L_d)
  Real m_over_3d;  // m / 3^d; below 1 means the residue-class bound beats 3^-d
  Real vitali;     // 3^-d
  Real rado;       // (3^d - 7^-d)^-1
  Real bdj;        // 1 / lambda_d
  Real ours;       // 2^-d h_d(L_d)^-1
};

BoundsRow bounds_row(int d);
std::vector<BoundsRow> bounds_table(int d_max);

struct FrontierCertificate {
  int dimension;               // 14
  long L;                      // L_14
  Real m_over_3d;              // m_14 / 3^14
  Real g_at_L;                 // g(L_14)
  Real induction_factor;       // (2/3) g(L_14)
  Real g8, g9;                 // g(9) < 3/2 < g(8)
  std::vector<Real> below;     // m_d / 3^d for d = 1..13, all >= 1
};

/// Verifies the d >= 14 improvement argument; throws std::logic_error naming
/// the first failed check.
FrontierCertificate improvement_frontier();

struct AsymptoticRow {
  int d;
  long L;
  Real rho;               // h_d(L_d) / (d log d e^(1 + log log d / log d))
  Real rho_residual;      // |rho - 1| log d
  Real log_m_over_d;      // log(m_d) / d
  Real log2_deviation;    // |log(m_d)/d - log 2|
  bool rho_in_range;      // rho in [0.4, 2.5]
  bool residual_bounded;  // rho_residual <= 5
  bool log2_envelope;     // deviation <= 3 log(d) / d
};

struct AsymptoticReport {
  std::vector<AsymptoticRow> rows;
  bool ok() const;
};

/// Evaluates the high-dimensional envelope for each d (all d >= 50).
AsymptoticReport asymptotic_check(std::span<const int> dims);

/// Fixed-point rendering with `digits` decimals.
std::string format_real(const Real& x, int digits);

}  // namespace vitali
