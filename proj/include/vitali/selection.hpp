#pragma once

#include "vitali/geometry.hpp"
#include "vitali/oracle.hpp"

#include <cstddef>
#include <vector>

namespace vitali {

/// How congruent families are handled.
///  sweep: lexicographic-sweep greedy, certified at 3^-d.
///  exact: optimal sub-collection from the oracle, certified at 2^-d (the
///         congruent-cube constant gamma_d = 2^-d; the optimum attains it).
enum class UnitSelector { sweep, exact };

struct SelectorOptions {
  UnitSelector unit = UnitSelector::sweep;
  std::size_t oracle_cap = kOracleCap;
};

/// Radius interval [lo, hi] with 0 < lo <= hi.
struct Window {
  Window(Scalar lo, Scalar hi);

  Scalar lo;
  Scalar hi;

  bool contains(const Scalar& r) const { return lo <= r && r <= hi; }
};

/// Windows separated by gaps of factor >= lambda, each of ratio <= mu.
struct LacunaryStructure {
  LacunaryStructure(std::vector<Window> windows, Scalar lambda, Scalar mu);

  std::vector<Window> windows;
  Scalar lambda;
  Scalar mu;

  /// r_1 = first_lo, s_j = mu * r_j, r_{j+1} = lambda * s_j.
  static LacunaryStructure geometric(const Scalar& first_lo, const Scalar& lambda,
                                     const Scalar& mu, std::size_t count);
};

struct PipelineParams {
  PipelineParams(long J, Scalar lambda, UnitSelector unit);

  long J;
  Scalar lambda;
  UnitSelector unit;
};

/// Certificate of the congruent subroutine in dimension d.
Scalar unit_guarantee(UnitSelector unit, std::size_t d);

/// Largest cube first (lowest index on ties), discard everything it meets,
/// repeat. Certified at 3^-d.
Selection greedy_vitali(const Collection& c);

/// Every input cube lies inside scale(s, 3) for some selected s.
bool vitali_covering_holds(const Collection& c, const Selection& s);

/// Selection among equal-radius cubes.
Selection congruent_select(const Collection& c, const SelectorOptions& opts = {});

/// Inflates every cube to the largest radius present, selects among the
/// inflated congruent family, and returns the originals. Certified at
/// (r_max / w.lo)^-d times the congruent certificate.
Selection window_select(const Collection& c, const Window& w, const SelectorOptions& opts = {});

/// Top-down pruning over lacunary windows followed by window selection on each
/// inflated window. Certified at mu^-d (1 + 2/lambda)^-d times the congruent
/// certificate.
Selection lacunary_select(const Collection& c, const LacunaryStructure& ls,
                          const SelectorOptions& opts = {});

/// Integer m with lambda^m <= r < lambda^(m+1), computed exactly.
long radius_exponent(const Scalar& r, const Scalar& lambda);

/// Residue-class pipeline: split radii into J classes of lambda-adic bands,
/// keep the class with the largest union, and run lacunary selection on it.
/// Certified at J^-1 (lambda (1 + 2 lambda^(1-J)))^-d times the congruent
/// certificate.
Selection pipeline_select(const Collection& c, const PipelineParams& p, std::size_t oracle_cap = kOracleCap);

/// Parameters tuned for dimension d: J = L_d + 2, lambda a rational within
/// 1e-6 of the optimal lambda for that J.
PipelineParams auto_params(std::size_t d, UnitSelector unit = UnitSelector::sweep);

/// J^-1 (lambda (1 + 2 lambda^(1-J)))^-d * gamma, exactly.
Scalar certified_bound(std::size_t d, long J, const Scalar& lambda, const Scalar& gamma);

}  // namespace vitali
