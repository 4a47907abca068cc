#include "vitali/generators.hpp"

#include <cmath>
#include <random>

namespace vitali {

namespace {

const Integer& grid_scale() {
  static const Integer scale = Integer(1) << kGridBits;
  return scale;
}

Scalar on_grid(const Integer& k) { return Scalar(k, grid_scale()); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// mt19937_64 output is fixed by the standard; the std distributions are not,
// so draws are mapped by hand.
class GridSampler {
 public:
  explicit GridSampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, span].
  std::uint64_t below_or_equal(std::uint64_t span) {
    if (span == ~std::uint64_t{0}) return engine_();
    std::uint64_t range = span + 1;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % range;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  Scalar coordinate() {
    return on_grid(Integer(below_or_equal(10ULL << kGridBits)));
  }

  Scalar radius(const RadiusLaw& law) {
    if (law.a == law.b) return law.a;
    Integer lo = -floor_div(-boost::multiprecision::numerator(law.a) * grid_scale(),
                            boost::multiprecision::denominator(law.a));
    Integer hi = floor_div(boost::multiprecision::numerator(law.b) * grid_scale(),
                           boost::multiprecision::denominator(law.b));
    if (lo > hi) return law.a;
    Integer k;
    if (law.kind == RadiusLaw::Kind::uniform) {
      k = lo + Integer(below_or_equal((hi - lo).convert_to<std::uint64_t>()));
    } else {
      double a = to_double(law.a), b = to_double(law.b);
      double x = a * std::pow(b / a, unit());
      k = Integer(static_cast<long long>(std::llround(std::ldexp(x, kGridBits))));
      if (k < lo) k = lo;
      if (k > hi) k = hi;
    }
    return on_grid(k);
  }

  Cube cube(std::size_t d, Scalar radius) {
    std::vector<Scalar> center(d);
    for (auto& x : center) x = coordinate();
    return Cube(std::move(center), std::move(radius));
  }

 private:
  std::mt19937_64 engine_;
};

void validate_law(const RadiusLaw& law) {
  if (!(law.a > 0 && law.a <= law.b)) throw std::invalid_argument("radius law needs 0 < a <= b");
}

}  // namespace

Collection gen_cell(std::size_t d) {
  if (d < 1) throw std::invalid_argument("gen_cell: d must be >= 1");
  if (d > 20) throw std::invalid_argument("gen_cell: d too large");
  Collection c(d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<Scalar> corner(d);
    // First axis varies slowest so the order is lexicographic in the corner.
    for (std::size_t axis = 0; axis < d; ++axis) corner[axis] = (mask >> (d - 1 - axis)) & 1U;
    c.push_back(Cube::from_corner(std::move(corner), Scalar(1)));
  }
  return c;
}

Collection gen_dyadic(std::size_t d, std::size_t levels) {
  if (d < 1) throw std::invalid_argument("gen_dyadic: d must be >= 1");
  if (levels < 1) throw std::invalid_argument("gen_dyadic: levels must be >= 1");
  if (d * levels > 20) throw std::invalid_argument("gen_dyadic: instance too large");
  Collection c(d);
  for (std::size_t k = 0; k <= levels; ++k) {
    std::size_t per_axis = std::size_t{1} << k;
    Scalar side = pow_int(Scalar(2), static_cast<long>(levels - k));
    std::size_t count = std::size_t{1} << (k * d);
    for (std::size_t t = 0; t < count; ++t) {
      std::vector<Scalar> corner(d);
      std::size_t rest = t;
      for (std::size_t axis = d; axis-- > 0;) {
        corner[axis] = side * Scalar(rest % per_axis);
        rest /= per_axis;
      }
      c.push_back(Cube::from_corner(std::move(corner), side));
    }
  }
  return c;
}

Collection gen_random(std::size_t d, std::size_t n, const RadiusLaw& law, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("gen_random: d must be >= 1");
  if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
  validate_law(law);
  GridSampler sampler(seed);
  Collection c(d);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar r = sampler.radius(law);
    c.push_back(sampler.cube(d, std::move(r)));
  }
  return c;
}

Collection gen_lacunary(std::size_t d, const LacunaryStructure& ls, std::size_t per_window,
                        std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("gen_lacunary: d must be >= 1");
  if (per_window < 1) throw std::invalid_argument("gen_lacunary: per_window must be >= 1");
  GridSampler sampler(seed);
  Collection c(d);
  for (const auto& w : ls.windows) {
    RadiusLaw law{RadiusLaw::Kind::uniform, w.lo, w.hi};
    for (std::size_t k = 0; k < per_window; ++k) {
      Scalar r = sampler.radius(law);
      c.push_back(sampler.cube(d, std::move(r)));
    }
  }
  return c;
}

Collection generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenSpec::Kind::cell:
      return gen_cell(spec.dim);
    case GenSpec::Kind::dyadic:
      return gen_dyadic(spec.dim, spec.levels);
    case GenSpec::Kind::random:
      return gen_random(spec.dim, spec.count, spec.law, spec.seed);
    case GenSpec::Kind::lacunary:
      if (!spec.lacunary) throw std::invalid_argument("lacunary generator needs a structure");
      return gen_lacunary(spec.dim, *spec.lacunary, spec.per_window, spec.seed);
  }
  throw std::invalid_argument("unknown generator kind");
}

std::string to_string(GenSpec::Kind kind) {
  switch (kind) {
    case GenSpec::Kind::cell: return "cell";
    case GenSpec::Kind::dyadic: return "dyadic";
    case GenSpec::Kind::random: return "random";
    case GenSpec::Kind::lacunary: return "lacunary";
  }
  return "?";
}

GenSpec::Kind parse_gen_kind(const std::string& text) {
  if (text == "cell") return GenSpec::Kind::cell;
  if (text == "dyadic") return GenSpec::Kind::dyadic;
  if (text == "random") return GenSpec::Kind::random;
  if (text == "lacunary") return GenSpec::Kind::lacunary;
  throw std::invalid_argument("unknown generator kind '" + text + "'");
}

}  // namespace vitali
