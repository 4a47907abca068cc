#pragma once

#include "vitali/geometry.hpp"
#include "vitali/selection.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace vitali {

/// Random coordinates live on the grid 2^-kGridBits Z.
inline constexpr int kGridBits = 20;

/// The 2^d unit cubes with min-corners in {0,1}^d. They pairwise intersect.
Collection gen_cell(std::size_t d);

/// The cube [0, 2^levels]^d and all of its dyadic descendants down to side 1,
/// parents before children.
Collection gen_dyadic(std::size_t d, std::size_t levels);

struct RadiusLaw {
  enum class Kind { uniform, loguniform };
  Kind kind = Kind::uniform;
  Scalar a = 1;
  Scalar b = 1;
};

/// n cubes, centers uniform on the grid in [0, 10]^d, radii drawn from `law`
/// and snapped to the grid inside [a, b]. Bit-for-bit reproducible per seed.
Collection gen_random(std::size_t d, std::size_t n, const RadiusLaw& law, std::uint64_t seed);

/// per_window cubes for every window of `ls`, radii uniform on the grid inside
/// the window, centers as in gen_random.
Collection gen_lacunary(std::size_t d, const LacunaryStructure& ls, std::size_t per_window,
                        std::uint64_t seed);

/// Everything needed to regenerate an instance.
struct GenSpec {
  enum class Kind { cell, dyadic, random, lacunary };
  Kind kind = Kind::cell;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::size_t levels = 1;                   // dyadic
  std::size_t count = 10;                   // random
  RadiusLaw law;                            // random
  std::optional<LacunaryStructure> lacunary;  // lacunary
  std::size_t per_window = 4;               // lacunary
};

Collection generate(const GenSpec& spec);

std::string to_string(GenSpec::Kind kind);
GenSpec::Kind parse_gen_kind(const std::string& text);

}  // namespace vitali
