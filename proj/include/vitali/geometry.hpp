#pragma once

#include "vitali/scalar.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace vitali {

/// Closed axis-parallel cube, stored as an l-infinity ball: every point x with
/// max_i |x_i - center_i| <= radius.
class Cube {
 public:
  Cube(std::vector<Scalar> center, Scalar radius);

  std::size_t dim() const { return center_.size(); }
  const std::vector<Scalar>& center() const { return center_; }
  const Scalar& radius() const { return radius_; }

  Scalar lo(std::size_t axis) const { return center_[axis] - radius_; }
  Scalar hi(std::size_t axis) const { return center_[axis] + radius_; }
  Scalar side() const { return radius_ * 2; }
  Scalar volume() const;

  /// Cube with min-corner `corner` and side length `side`.
  static Cube from_corner(std::vector<Scalar> corner, const Scalar& side);

  friend bool operator==(const Cube&, const Cube&) = default;

 private:
  std::vector<Scalar> center_;
  Scalar radius_;
};

/// Ordered, indexable list of cubes sharing one dimension.
class Collection {
 public:
  explicit Collection(std::size_t dim);
  Collection(std::size_t dim, std::vector<Cube> cubes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return cubes_.size(); }
  bool empty() const { return cubes_.empty(); }
  const Cube& operator[](std::size_t i) const { return cubes_.at(i); }
  const std::vector<Cube>& cubes() const { return cubes_; }

  auto begin() const { return cubes_.begin(); }
  auto end() const { return cubes_.end(); }

  void push_back(Cube cube);

  /// Sub-collection made of the given indices, in the given order.
  Collection subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const Collection&, const Collection&) = default;

 private:
  std::size_t dim_;
  std::vector<Cube> cubes_;
};

/// Disjoint sub-collection plus the ratio it achieves and the ratio its
/// selector can prove.
struct Selection {
  std::vector<std::size_t> indices;  // sorted, unique
  Scalar achieved_ratio;
  Scalar certified_bound;
};

/// Closed-set intersection: touching boundaries count.
bool intersects(const Cube& a, const Cube& b);

/// True iff `inner` is a subset of `outer`.
bool contains(const Cube& outer, const Cube& inner);

/// Same center, radius multiplied by lam (> 0).
Cube scale(const Cube& a, const Scalar& lam);

/// Concentric cube with the given radius.
Cube with_radius(const Cube& a, const Scalar& radius);

/// Every cube of `c` scaled about the origin by t: centers and radii times t.
Collection dilate(const Collection& c, const Scalar& t);

enum class VolumeMethod { compression, inclusion_exclusion };

inline constexpr std::size_t kInclusionExclusionCap = 20;

/// Exact Lebesgue measure of the union. Throws std::invalid_argument on an
/// empty collection and CapExceeded when inclusion-exclusion is asked for more
/// than `ie_cap` cubes.
Scalar union_volume(const Collection& c, VolumeMethod method = VolumeMethod::compression,
                    std::size_t ie_cap = kInclusionExclusionCap);

/// Pairwise disjointness of the indexed cubes; indices must be in range.
bool is_disjoint(const Collection& c, std::span<const std::size_t> indices);

/// |union of selected| / |union of c|. The selection must be disjoint and in
/// range, otherwise std::invalid_argument.
Scalar ratio(std::span<const std::size_t> indices, const Collection& c);
Scalar ratio(const Selection& s, const Collection& c);

/// Raised when an exact method is asked to run beyond its size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vitali
