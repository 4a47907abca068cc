#include "support/brute_force.hpp"
#include "vitali/generators.hpp"
#include "vitali/oracle.hpp"
#include "vitali/selection.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace vitali;

namespace {
Scalar q(std::int64_t p, std::int64_t d = 1) { return make_scalar(p, d); }
}  // namespace

TEST_CASE("phi of the cell configuration is 2^-d") {
  for (std::size_t d = 1; d <= 4; ++d) {
    auto result = phi_exact(gen_cell(d));
    CHECK(result.phi == pow_int(q(2), -static_cast<long>(d)));
    CHECK(result.witness.indices.size() == 1);
  }
}

TEST_CASE("phi of disjoint cubes is 1 with everything selected") {
  Collection c(2);
  for (int k = 0; k < 6; ++k) c.push_back(Cube::from_corner({q(3 * k), q(k % 2)}, q(2)));
  auto result = phi_exact(c);
  CHECK(result.phi == 1);
  CHECK(result.witness.indices == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("phi of a dyadic family is 1") {
  CHECK(phi_exact(gen_dyadic(2, 1)).phi == 1);
  CHECK(phi_exact(gen_dyadic(1, 3)).phi == 1);
}

TEST_CASE("branch and bound agrees with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t d = 1 + seed % 3;
    auto c = gen_random(d, 12, {RadiusLaw::Kind::loguniform, q(1, 3), q(3)}, seed);
    auto [best_weight, mask] = testing::brute_force_best_weight(c);
    auto result = phi_exact(c);
    CHECK(result.phi == best_weight / union_volume(c));
    // Witness weight equals the union volume of the witness (disjointness).
    Scalar weight = 0;
    for (auto i : result.witness.indices) weight += c[i].volume();
    CHECK(weight == union_volume(c.subset(result.witness.indices)));
    CHECK(is_disjoint(c, result.witness.indices));
  }
}

TEST_CASE("phi is invariant under permutation and dilation") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto c = gen_random(2, 14, {RadiusLaw::Kind::uniform, q(1, 2), q(2)}, 100 + seed);
    Scalar phi = phi_exact(c).phi;
    std::vector<std::size_t> perm(c.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(phi_exact(c.subset(perm)).phi == phi);
    CHECK(phi_exact(dilate(c, q(7, 3))).phi == phi);
  }
}

TEST_CASE("phi errors") {
  CHECK_THROWS_AS(phi_exact(Collection(2)), std::invalid_argument);
  auto c = gen_random(2, 31, {RadiusLaw::Kind::uniform, q(1), q(1)}, 3);
  CHECK_THROWS_AS(phi_exact(c), CapExceeded);
  CHECK_THROWS_AS(phi_exact(gen_cell(2), 3), CapExceeded);
}

TEST_CASE("phi at the default cap finishes") {
  auto c = gen_random(2, 30, {RadiusLaw::Kind::loguniform, q(1, 4), q(2)}, 77);
  auto result = phi_exact(c);
  CHECK(result.phi > 0);
  CHECK(result.phi <= 1);
  CHECK(is_disjoint(c, result.witness.indices));
}

TEST_CASE("verify_guarantee") {
  SUBCASE("greedy on the cell configuration passes") {
    auto c = gen_cell(2);
    auto s = greedy_vitali(c);
    auto report = verify_guarantee(c, s);
    CHECK(report.ok());
    CHECK(report.achieved == q(1, 4));
    REQUIRE(report.phi);
    CHECK(*report.phi == q(1, 4));
  }
  SUBCASE("pipeline on a seeded random instance passes") {
    auto c = gen_random(2, 15, {RadiusLaw::Kind::loguniform, q(1, 4), q(4)}, 6);
    auto s = pipeline_select(c, auto_params(2));
    auto report = verify_guarantee(c, s);
    CHECK(report.ok());
    CHECK(report.disjoint);
    CHECK(report.certificate_holds);
    CHECK(report.below_optimum == true);
  }
  SUBCASE("intersecting indices are reported") {
    auto c = gen_cell(2);
    Selection bad{{0, 1}, q(1, 2), q(1, 9)};
    auto report = verify_guarantee(c, bad);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.disjoint);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].find("disjoint") != std::string::npos);
  }
  SUBCASE("overclaimed certificate is reported") {
    auto c = gen_cell(2);
    Selection s{{0}, q(1, 4), q(1, 2)};
    auto report = verify_guarantee(c, s);
    CHECK_FALSE(report.certificate_holds);
    CHECK_FALSE(report.ok());
  }
  SUBCASE("tampered achieved ratio is reported") {
    auto c = gen_cell(2);
    Selection s{{0}, q(1, 3), q(1, 9)};
    CHECK_FALSE(verify_guarantee(c, s).ratio_matches);
  }
  SUBCASE("beyond cap skips the optimum check") {
    auto c = gen_random(1, 35, {RadiusLaw::Kind::uniform, q(1, 8), q(1, 4)}, 9);
    auto report = verify_guarantee(c, greedy_vitali(c));
    CHECK(report.ok());
    CHECK_FALSE(report.phi.has_value());
  }
}
