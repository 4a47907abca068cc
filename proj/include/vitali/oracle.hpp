#pragma once

#include "vitali/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vitali {

inline constexpr std::size_t kOracleCap = 30;

/// Intersection graph of a collection: one vertex per cube weighted by its
/// volume, an edge for every intersecting pair. Disjoint sub-collections are
/// exactly its independent sets.
struct IntersectionGraph {
  explicit IntersectionGraph(const Collection& c);

  std::size_t size() const { return weights.size(); }

  std::vector<Scalar> weights;
  std::vector<std::vector<bool>> adjacent;
};

struct PhiResult {
  Scalar phi;
  Selection witness;  // certified_bound == phi: the witness is optimal
};

/// Exact Phi(C): the largest fraction of the union volume that a disjoint
/// sub-collection can occupy. Throws CapExceeded when c.size() > cap.
PhiResult phi_exact(const Collection& c, std::size_t cap = kOracleCap);

struct GuaranteeReport {
  bool disjoint = false;
  bool in_range = false;
  bool ratio_matches = false;  // stored achieved_ratio equals the recomputed one
  bool certificate_holds = false;
  std::optional<bool> below_optimum;  // empty when the oracle cap was exceeded
  Scalar achieved;
  std::optional<Scalar> phi;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Re-checks a selector's output: disjointness, recomputed achieved ratio,
/// certified_bound <= achieved <= Phi (the last one only within `cap`).
GuaranteeReport verify_guarantee(const Collection& c, const Selection& s,
                                 std::size_t cap = kOracleCap);

}  // namespace vitali
