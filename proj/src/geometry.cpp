#include "vitali/geometry.hpp"

#include <algorithm>
#include <string>

namespace vitali {

Cube::Cube(std::vector<Scalar> center, Scalar radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (center_.empty()) throw std::invalid_argument("cube dimension must be >= 1");
  if (radius_ <= 0) throw std::invalid_argument("cube radius must be positive");
}

Scalar Cube::volume() const { return pow_int(side(), static_cast<long>(dim())); }

Cube Cube::from_corner(std::vector<Scalar> corner, const Scalar& side) {
  Scalar r = side / 2;
  for (auto& x : corner) x += r;
  return Cube(std::move(corner), r);
}

Collection::Collection(std::size_t dim) : dim_(dim) {
  if (dim_ == 0) throw std::invalid_argument("collection dimension must be >= 1");
}

Collection::Collection(std::size_t dim, std::vector<Cube> cubes) : Collection(dim) {
  cubes_.reserve(cubes.size());
  for (auto& c : cubes) push_back(std::move(c));
}

void Collection::push_back(Cube cube) {
  if (cube.dim() != dim_)
    throw std::invalid_argument("cube of dimension " + std::to_string(cube.dim()) +
                                " in a collection of dimension " + std::to_string(dim_));
  cubes_.push_back(std::move(cube));
}

Collection Collection::subset(std::span<const std::size_t> indices) const {
  Collection out(dim_);
  for (auto i : indices) out.push_back(cubes_.at(i));
  return out;
}

bool intersects(const Cube& a, const Cube& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("intersects: dimension mismatch");
  Scalar reach = a.radius() + b.radius();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (abs(a.center()[i] - b.center()[i]) > reach) return false;
  }
  return true;
}

bool contains(const Cube& outer, const Cube& inner) {
  if (outer.dim() != inner.dim()) throw std::invalid_argument("contains: dimension mismatch");
  if (inner.radius() > outer.radius()) return false;
  Scalar slack = outer.radius() - inner.radius();
  for (std::size_t i = 0; i < outer.dim(); ++i) {
    if (abs(outer.center()[i] - inner.center()[i]) > slack) return false;
  }
  return true;
}

Cube scale(const Cube& a, const Scalar& lam) {
  if (lam <= 0) throw std::invalid_argument("scale factor must be positive");
  return Cube(a.center(), a.radius() * lam);
}

Cube with_radius(const Cube& a, const Scalar& radius) { return Cube(a.center(), radius); }

Collection dilate(const Collection& c, const Scalar& t) {
  if (t <= 0) throw std::invalid_argument("dilation factor must be positive");
  Collection out(c.dim());
  for (const auto& cube : c) {
    std::vector<Scalar> center = cube.center();
    for (auto& x : center) x *= t;
    out.push_back(Cube(std::move(center), cube.radius() * t));
  }
  return out;
}

namespace {

// Coordinate-compressed grid. cells[axis] holds the sorted distinct
// coordinates; span[cube][axis] the half-open range of cells the cube covers.
struct CompressedGrid {
  std::vector<std::vector<Scalar>> coords;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> span;
};

CompressedGrid compress(const Collection& c) {
  const std::size_t d = c.dim();
  CompressedGrid g;
  g.coords.resize(d);
  for (std::size_t axis = 0; axis < d; ++axis) {
    auto& xs = g.coords[axis];
    xs.reserve(2 * c.size());
    for (const auto& cube : c) {
      xs.push_back(cube.lo(axis));
      xs.push_back(cube.hi(axis));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  }
  g.span.resize(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    g.span[k].resize(d);
    for (std::size_t axis = 0; axis < d; ++axis) {
      const auto& xs = g.coords[axis];
      auto first = std::lower_bound(xs.begin(), xs.end(), c[k].lo(axis)) - xs.begin();
      auto last = std::lower_bound(xs.begin(), xs.end(), c[k].hi(axis)) - xs.begin();
      g.span[k][axis] = {static_cast<std::size_t>(first), static_cast<std::size_t>(last)};
    }
  }
  return g;
}

// Measure of the union of `active` restricted to axes >= axis.
Scalar slab_volume(const CompressedGrid& g, std::size_t axis, const std::vector<std::size_t>& active) {
  if (active.empty()) return 0;
  if (axis == g.coords.size()) return 1;
  const auto& xs = g.coords[axis];
  Scalar total = 0;
  std::vector<std::size_t> next;
  next.reserve(active.size());
  for (std::size_t cell = 0; cell + 1 < xs.size(); ++cell) {
    next.clear();
    for (auto k : active) {
      auto [first, last] = g.span[k][axis];
      if (first <= cell && cell < last) next.push_back(k);
    }
    if (next.empty()) continue;
    total += (xs[cell + 1] - xs[cell]) * slab_volume(g, axis + 1, next);
  }
  return total;
}

Scalar compression_volume(const Collection& c) {
  auto grid = compress(c);
  std::vector<std::size_t> all(c.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return slab_volume(grid, 0, all);
}

struct Box {
  std::vector<Scalar> lo, hi;
};

// Signed sum over all supersets of the current index prefix. A subset with an
// empty (or null) intersection contributes zero along with all its supersets.
void inclusion_exclusion(const Collection& c, std::size_t start, const Box& box, int sign,
                         Scalar& total) {
  const std::size_t d = c.dim();
  Box next{std::vector<Scalar>(d), std::vector<Scalar>(d)};
  for (std::size_t k = start; k < c.size(); ++k) {
    bool degenerate = false;
    Scalar vol = 1;
    for (std::size_t axis = 0; axis < d && !degenerate; ++axis) {
      next.lo[axis] = std::max(box.lo[axis], c[k].lo(axis));
      next.hi[axis] = std::min(box.hi[axis], c[k].hi(axis));
      if (next.hi[axis] <= next.lo[axis]) degenerate = true;
      else vol *= next.hi[axis] - next.lo[axis];
    }
    if (degenerate) continue;
    if (sign > 0) total += vol;
    else total -= vol;
    inclusion_exclusion(c, k + 1, next, -sign, total);
  }
}

Scalar inclusion_exclusion_volume(const Collection& c) {
  const std::size_t d = c.dim();
  Scalar total = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Box box{std::vector<Scalar>(d), std::vector<Scalar>(d)};
    for (std::size_t axis = 0; axis < d; ++axis) {
      box.lo[axis] = c[k].lo(axis);
      box.hi[axis] = c[k].hi(axis);
    }
    total += c[k].volume();
    inclusion_exclusion(c, k + 1, box, -1, total);
  }
  return total;
}

}  // namespace

Scalar union_volume(const Collection& c, VolumeMethod method, std::size_t ie_cap) {
  if (c.empty()) throw std::invalid_argument("union_volume: empty collection");
  switch (method) {
    case VolumeMethod::compression:
      return compression_volume(c);
    case VolumeMethod::inclusion_exclusion:
      if (c.size() > ie_cap)
        throw CapExceeded("inclusion-exclusion cap exceeded: " + std::to_string(c.size()) +
                          " cubes > " + std::to_string(ie_cap));
      return inclusion_exclusion_volume(c);
  }
  throw std::invalid_argument("unknown volume method");
}

bool is_disjoint(const Collection& c, std::span<const std::size_t> indices) {
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      if (indices[a] == indices[b] || intersects(c[indices[a]], c[indices[b]])) return false;
    }
  }
  return true;
}

Scalar ratio(std::span<const std::size_t> indices, const Collection& c) {
  for (auto i : indices) {
    if (i >= c.size())
      throw std::invalid_argument("selection index " + std::to_string(i) + " out of range");
  }
  if (indices.empty()) throw std::invalid_argument("empty selection");
  if (!is_disjoint(c, indices)) throw std::invalid_argument("selection is not disjoint");
  Scalar selected = 0;
  for (auto i : indices) selected += c[i].volume();
  return selected / union_volume(c);
}

Scalar ratio(const Selection& s, const Collection& c) { return ratio(s.indices, c); }

}  // namespace vitali
