#include "vitali/selection.hpp"

#include "vitali/constants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace vitali {

Window::Window(Scalar lo_, Scalar hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo > 0 && lo <= hi)) throw std::invalid_argument("window needs 0 < lo <= hi");
}

LacunaryStructure::LacunaryStructure(std::vector<Window> windows_, Scalar lambda_, Scalar mu_)
    : windows(std::move(windows_)), lambda(std::move(lambda_)), mu(std::move(mu_)) {
  if (!(lambda > 1)) throw std::invalid_argument("lacunary structure needs lambda > 1");
  if (!(mu >= 1)) throw std::invalid_argument("lacunary structure needs mu >= 1");
  if (windows.empty()) throw std::invalid_argument("lacunary structure needs a window");
  for (std::size_t j = 0; j < windows.size(); ++j) {
    if (windows[j].hi > mu * windows[j].lo)
      throw std::invalid_argument("lacunarity violated: window " + std::to_string(j) +
                                  " has hi > mu * lo");
    if (j + 1 < windows.size() && windows[j + 1].lo < lambda * windows[j].hi)
      throw std::invalid_argument("lacunarity violated: gap after window " + std::to_string(j) +
                                  " is below lambda");
  }
}

LacunaryStructure LacunaryStructure::geometric(const Scalar& first_lo, const Scalar& lambda,
                                               const Scalar& mu, std::size_t count) {
  std::vector<Window> windows;
  Scalar lo = first_lo;
  for (std::size_t j = 0; j < count; ++j) {
    Scalar hi = lo * mu;
    windows.emplace_back(lo, hi);
    lo = hi * lambda;
  }
  return {std::move(windows), lambda, mu};
}

PipelineParams::PipelineParams(long J_, Scalar lambda_, UnitSelector unit_)
    : J(J_), lambda(std::move(lambda_)), unit(unit_) {
  if (J < 3) throw std::invalid_argument("pipeline needs J >= 3");
  if (!(lambda > 1)) throw std::invalid_argument("pipeline needs lambda > 1");
}

Scalar unit_guarantee(UnitSelector unit, std::size_t d) {
  long base = unit == UnitSelector::exact ? 2 : 3;
  return pow_int(Scalar(base), -static_cast<long>(d));
}

namespace {

void require_nonempty(const Collection& c, const char* who) {
  if (c.empty()) throw std::invalid_argument(std::string(who) + ": empty collection");
}

Selection finish(const Collection& c, std::vector<std::size_t> indices, Scalar certified) {
  std::sort(indices.begin(), indices.end());
  Selection s;
  s.achieved_ratio = ratio(indices, c);
  s.indices = std::move(indices);
  s.certified_bound = std::move(certified);
  return s;
}

std::vector<std::size_t> congruent_indices(const Collection& c, const SelectorOptions& opts) {
  if (opts.unit == UnitSelector::exact) return phi_exact(c, opts.oracle_cap).witness.indices;

  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c[a].center() < c[b].center();
  });
  std::vector<bool> removed(c.size(), false);
  std::vector<std::size_t> picked;
  for (auto i : order) {
    if (removed[i]) continue;
    picked.push_back(i);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!removed[j] && intersects(c[i], c[j])) removed[j] = true;
  }
  return picked;
}

Scalar max_radius(const Collection& c) {
  Scalar r = c[0].radius();
  for (const auto& cube : c) r = std::max(r, cube.radius());
  return r;
}

std::vector<std::size_t> window_indices(const Collection& c, const SelectorOptions& opts) {
  Scalar target = max_radius(c);
  Collection inflated(c.dim());
  for (const auto& cube : c) inflated.push_back(with_radius(cube, target));
  return congruent_indices(inflated, opts);
}

Scalar window_certificate(const Collection& c, const Window& w, const SelectorOptions& opts) {
  return pow_int(w.lo / max_radius(c), static_cast<long>(c.dim())) *
         unit_guarantee(opts.unit, c.dim());
}

Scalar lacunary_certificate(std::size_t d, const LacunaryStructure& ls, UnitSelector unit) {
  Scalar inflation = 1 + Scalar(2) / ls.lambda;
  return pow_int(ls.mu * inflation, -static_cast<long>(d)) * unit_guarantee(unit, d);
}

std::vector<std::size_t> lacunary_indices(const Collection& c, const LacunaryStructure& ls,
                                          const SelectorOptions& opts) {
  const std::size_t m = ls.windows.size();
  std::vector<std::vector<std::size_t>> bucket(m);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Scalar& r = c[k].radius();
    auto it = std::find_if(ls.windows.begin(), ls.windows.end(),
                           [&](const Window& w) { return w.contains(r); });
    if (it == ls.windows.end())
      throw std::invalid_argument("lacunary_select: radius " + to_string(r) + " lies in no window");
    bucket[static_cast<std::size_t>(it - ls.windows.begin())].push_back(k);
  }

  // Top-down pruning: a cube survives when it meets no survivor of a higher window.
  std::vector<std::vector<std::size_t>> kept(m);
  std::vector<std::size_t> higher;
  bool pruned_any = false;
  for (std::size_t j = m; j-- > 0;) {
    for (auto k : bucket[j]) {
      bool blocked = std::any_of(higher.begin(), higher.end(),
                                 [&](std::size_t h) { return intersects(c[k], c[h]); });
      if (blocked) pruned_any = true;
      else kept[j].push_back(k);
    }
    higher.insert(higher.end(), kept[j].begin(), kept[j].end());
  }

  // Pruned cubes sit inside the (1 + 2/lambda)-inflation of a survivor; with
  // nothing pruned the survivors already cover the union.
  const Scalar inflation = pruned_any ? Scalar(1 + Scalar(2) / ls.lambda) : Scalar(1);
  std::vector<std::size_t> picked;
  for (std::size_t j = 0; j < m; ++j) {
    if (kept[j].empty()) continue;
    Collection inflated(c.dim());
    for (auto k : kept[j]) inflated.push_back(scale(c[k], inflation));
    for (auto local : window_indices(inflated, opts)) picked.push_back(kept[j][local]);
  }
  return picked;
}

}  // namespace

Selection greedy_vitali(const Collection& c) {
  require_nonempty(c, "greedy_vitali");
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c[a].radius() > c[b].radius();
  });
  std::vector<bool> removed(c.size(), false);
  std::vector<std::size_t> picked;
  for (auto i : order) {
    if (removed[i]) continue;
    picked.push_back(i);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!removed[j] && intersects(c[i], c[j])) removed[j] = true;
  }
  return finish(c, std::move(picked), pow_int(Scalar(3), -static_cast<long>(c.dim())));
}

bool vitali_covering_holds(const Collection& c, const Selection& s) {
  return std::all_of(c.begin(), c.end(), [&](const Cube& cube) {
    return std::any_of(s.indices.begin(), s.indices.end(),
                       [&](std::size_t i) { return contains(scale(c[i], 3), cube); });
  });
}

Selection congruent_select(const Collection& c, const SelectorOptions& opts) {
  require_nonempty(c, "congruent_select");
  for (const auto& cube : c)
    if (cube.radius() != c[0].radius())
      throw std::invalid_argument("congruent_select: radii are not all equal");
  return finish(c, congruent_indices(c, opts), unit_guarantee(opts.unit, c.dim()));
}

Selection window_select(const Collection& c, const Window& w, const SelectorOptions& opts) {
  require_nonempty(c, "window_select");
  for (const auto& cube : c)
    if (!w.contains(cube.radius()))
      throw std::invalid_argument("window_select: radius " + to_string(cube.radius()) +
                                  " outside [" + to_string(w.lo) + ", " + to_string(w.hi) + "]");
  return finish(c, window_indices(c, opts), window_certificate(c, w, opts));
}

Selection lacunary_select(const Collection& c, const LacunaryStructure& ls,
                          const SelectorOptions& opts) {
  require_nonempty(c, "lacunary_select");
  return finish(c, lacunary_indices(c, ls, opts), lacunary_certificate(c.dim(), ls, opts.unit));
}

long radius_exponent(const Scalar& r, const Scalar& lambda) {
  if (!(r > 0)) throw std::invalid_argument("radius_exponent: radius must be positive");
  if (!(lambda > 1)) throw std::invalid_argument("radius_exponent: lambda must be > 1");
  double estimate = std::floor(std::log(to_double(r)) / std::log(to_double(lambda)));
  long m = std::isfinite(estimate) ? static_cast<long>(estimate) : 0;
  while (pow_int(lambda, m) > r) --m;
  while (pow_int(lambda, m + 1) <= r) ++m;
  return m;
}

Selection pipeline_select(const Collection& c, const PipelineParams& p, std::size_t oracle_cap) {
  require_nonempty(c, "pipeline_select");
  const long J = p.J;

  std::vector<long> exponent(c.size());
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(J));
  for (std::size_t k = 0; k < c.size(); ++k) {
    exponent[k] = radius_exponent(c[k].radius(), p.lambda);
    long cls = ((exponent[k] % J) + J) % J;
    members[static_cast<std::size_t>(cls)].push_back(k);
  }

  std::size_t best = 0;
  Scalar best_volume = -1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].empty()) continue;
    Scalar v = union_volume(c.subset(members[i]));
    if (v > best_volume) {
      best = i;
      best_volume = v;
    }
  }
  Scalar total = union_volume(c);
  if (best_volume * J < total)
    throw std::logic_error("pipeline_select: pigeonhole class holds less than 1/J of the union");

  const auto& chosen = members[best];
  std::map<long, bool> occupied;
  for (auto k : chosen) occupied[exponent[k]] = true;
  std::vector<Window> windows;
  for (const auto& [m, _] : occupied)
    windows.emplace_back(pow_int(p.lambda, m), pow_int(p.lambda, m + 1));
  LacunaryStructure ls(std::move(windows), pow_int(p.lambda, J - 1), p.lambda);

  Collection sub = c.subset(chosen);
  SelectorOptions opts{p.unit, oracle_cap};
  std::vector<std::size_t> picked;
  for (auto local : lacunary_indices(sub, ls, opts)) picked.push_back(chosen[local]);
  return finish(c, std::move(picked),
                certified_bound(c.dim(), J, p.lambda, unit_guarantee(p.unit, c.dim())));
}

PipelineParams auto_params(std::size_t d, UnitSelector unit) {
  if (d < 2) throw std::invalid_argument("auto_params: d must be >= 2");
  long J = optimize_L(static_cast<int>(d)).L + 2;
  Real star = optimal_lambda(J).lambda_star;
  constexpr long kDen = 10'000'000;
  long num = round(star * Real(kDen)).convert_to<long>();
  if (num <= kDen) num = kDen + 1;
  return {J, make_scalar(num, kDen), unit};
}

Scalar certified_bound(std::size_t d, long J, const Scalar& lambda, const Scalar& gamma) {
  if (d < 1) throw std::invalid_argument("certified_bound: d must be >= 1");
  if (J < 2) throw std::invalid_argument("certified_bound: J must be >= 2");
  if (lambda < 1) throw std::invalid_argument("certified_bound: lambda must be >= 1");
  if (!(gamma > 0 && gamma <= 1)) throw std::invalid_argument("certified_bound: gamma must be in (0, 1]");
  Scalar factor = lambda * (1 + 2 * pow_int(lambda, 1 - J));
  return gamma / (Scalar(J) * pow_int(factor, static_cast<long>(d)));
}

}  // namespace vitali
