#include "vitali/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace vitali {

IntersectionGraph::IntersectionGraph(const Collection& c)
    : weights(c.size()), adjacent(c.size(), std::vector<bool>(c.size(), false)) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    weights[i] = c[i].volume();
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      bool hit = intersects(c[i], c[j]);
      adjacent[i][j] = adjacent[j][i] = hit;
    }
  }
}

namespace {

using Mask = std::uint64_t;

// Branch and bound for maximum-weight independent set over bitmasks.
// Weights are rescaled to integers by the common denominator so the inner
// loop stays in integer arithmetic.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const IntersectionGraph& g) : n_(g.size()), closed_(n_), weight_(n_) {
    Integer common = 1;
    for (const auto& w : g.weights) {
      Integer den = boost::multiprecision::denominator(w);
      common = common / boost::multiprecision::gcd(common, den) * den;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      weight_[v] = boost::multiprecision::numerator(g.weights[v]) *
                   (common / boost::multiprecision::denominator(g.weights[v]));
      closed_[v] = Mask{1} << v;
      for (std::size_t u = 0; u < n_; ++u)
        if (g.adjacent[v][u]) closed_[v] |= Mask{1} << u;
    }
  }

  Mask run() {
    seed_with_greedy();
    Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    search(all, 0, Integer(0));
    return best_set_;
  }

 private:
  Integer mask_weight(Mask m) const {
    Integer total = 0;
    while (m != 0) {
      total += weight_[static_cast<std::size_t>(std::countr_zero(m))];
      m &= m - 1;
    }
    return total;
  }

  void seed_with_greedy() {
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weight_[a] > weight_[b]; });
    Mask taken = 0, blocked = 0;
    for (auto v : order) {
      if (blocked & (Mask{1} << v)) continue;
      taken |= Mask{1} << v;
      blocked |= closed_[v];
    }
    best_set_ = taken;
    best_weight_ = mask_weight(taken);
  }

  void search(Mask candidates, Mask chosen, const Integer& weight) {
    Integer remaining = mask_weight(candidates);
    if (weight + remaining <= best_weight_) return;

    // Highest residual degree first; lowest index on ties.
    std::size_t pivot = n_;
    int pivot_degree = -1;
    for (Mask m = candidates; m != 0; m &= m - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(m));
      int degree = std::popcount(closed_[v] & candidates) - 1;
      if (degree > pivot_degree) {
        pivot = v;
        pivot_degree = degree;
      }
    }
    if (pivot_degree <= 0) {
      // Every remaining candidate is isolated (or none is left): take them all.
      best_weight_ = weight + remaining;
      best_set_ = chosen | candidates;
      return;
    }
    Mask bit = Mask{1} << pivot;
    search(candidates & ~closed_[pivot], chosen | bit, weight + weight_[pivot]);
    search(candidates & ~bit, chosen, weight);
  }

  std::size_t n_;
  std::vector<Mask> closed_;  // closed neighbourhoods
  std::vector<Integer> weight_;
  Mask best_set_ = 0;
  Integer best_weight_ = 0;
};

}  // namespace

PhiResult phi_exact(const Collection& c, std::size_t cap) {
  if (c.empty()) throw std::invalid_argument("phi_exact: empty collection");
  if (c.size() > cap || c.size() > 64)
    throw CapExceeded("oracle cap exceeded: " + std::to_string(c.size()) + " cubes > " +
                      std::to_string(std::min<std::size_t>(cap, 64)));

  IntersectionGraph graph(c);
  Mask best = IndependentSetSearch(graph).run();

  Selection witness;
  Scalar selected = 0;
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (best & (Mask{1} << v)) {
      witness.indices.push_back(v);
      selected += graph.weights[v];
    }
  }
  Scalar phi = selected / union_volume(c);
  witness.achieved_ratio = phi;
  witness.certified_bound = phi;
  return {phi, std::move(witness)};
}

GuaranteeReport verify_guarantee(const Collection& c, const Selection& s, std::size_t cap) {
  GuaranteeReport report;
  report.in_range = !s.indices.empty() &&
                    std::all_of(s.indices.begin(), s.indices.end(),
                                [&](std::size_t i) { return i < c.size(); });
  if (!report.in_range) {
    report.failures.push_back("selection indices empty or out of range");
    return report;
  }
  report.disjoint = is_disjoint(c, s.indices);
  if (!report.disjoint) {
    report.failures.push_back("disjointness: selected cubes intersect");
    return report;
  }
  report.achieved = ratio(s.indices, c);
  report.ratio_matches = report.achieved == s.achieved_ratio;
  if (!report.ratio_matches)
    report.failures.push_back("achieved_ratio: stored " + to_string(s.achieved_ratio) +
                              " != recomputed " + to_string(report.achieved));
  report.certificate_holds = s.certified_bound > 0 && s.certified_bound <= report.achieved;
  if (!report.certificate_holds)
    report.failures.push_back("certificate: certified_bound " + to_string(s.certified_bound) +
                              " <= achieved_ratio " + to_string(report.achieved) + " violated");
  if (c.size() <= cap) {
    auto phi = phi_exact(c, cap).phi;
    report.phi = phi;
    report.below_optimum = report.achieved <= phi;
    if (!*report.below_optimum)
      report.failures.push_back("optimality: achieved_ratio " + to_string(report.achieved) +
                                " <= phi " + to_string(phi) + " violated");
  }
  return report;
}

}  // namespace vitali
