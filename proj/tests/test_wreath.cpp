#include <catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace wreathkit;

namespace {
  Field const Q = Field::rational();
}

TEST_CASE("identity wreath reproduces the monoid", "[wreath]") {
  auto const a  = linearize(cyclic_group(3), Q, "A").monoid;
  auto const wd = identity_wreath(a);
  CHECK(check_wreath(wd).passed());
  auto const p = wreath_product(wd);
  CHECK(p.mul == a.mul);
  CHECK(p.unit == a.unit);
}

TEST_CASE("distributive law by the symmetry", "[wreath]") {
  auto const f5 = Field::prime(5);
  auto const s  = linearize(cyclic_group(2), f5, "S").monoid;
  auto const a  = linearize(cyclic_group(3), f5, "A").monoid;
  auto const wd = from_distributive_law(s, a, braid(f5, a.carrier, s.carrier));
  auto const r  = check_wreath(wd);
  CHECK(r.passed());
  CHECK(r.entries().size() == 7);
  auto const p = wreath_product(wd);
  CHECK(p.mul == tensor_monoid(s, a).mul);
  CHECK(p.unit == tensor_monoid(s, a).unit);
}

TEST_CASE("a non-natural lambda fails and blocks the product", "[wreath]") {
  auto const s = linearize(cyclic_group(2), Q, "S").monoid;
  auto const a = linearize(oracle::s3(), Q, "A").monoid;
  // λ(a, 1) = (1, a⁻¹) reverses products on S3
  std::vector<std::size_t> twist(12);
  auto const g = oracle::s3();
  for (std::size_t ai = 0; ai < 6; ++ai) {
    std::size_t inv = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      if (g.table[ai][k] == g.unit) {
        inv = k;
      }
    }
    for (std::size_t x = 0; x < 2; ++x) {
      // (a, x) ↦ (x, a⁻¹) when x = 1
      twist[ai * 2 + x] = x * 6 + (x ? inv : ai);
    }
  }
  auto const lam = function_matrix(Q, a.carrier * s.carrier, s.carrier * a.carrier, twist);
  auto const wd  = from_distributive_law(s, a, lam);
  auto const r   = check_wreath(wd);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("1")->passed);
  CHECK(r.find("1")->witness.has_value());
  CHECK_THROWS_AS(wreath_product(wd), ValidationError);
  CHECK_NOTHROW(wreath_product(wd, false));
}

TEST_CASE("shape errors are raised before checking", "[wreath]") {
  auto const a  = linearize(cyclic_group(2), Q, "A").monoid;
  auto       wd = identity_wreath(a);
  wd.lambda     = identity(Q, a.carrier * a.carrier);
  CHECK_THROWS_AS(check_wreath(wd), ShapeError);
}

TEST_CASE("corpus wreaths", "[wreath]") {
  auto const b = parse_bundle(oracle::corpus("z4_extension.json"));
  CHECK(check_wreath(resolve_wreath(b, "w1")).passed());
  auto const bad = check_wreath(resolve_wreath(b, "w1_bad"));
  CHECK_FALSE(bad.passed());
  auto const f5 = parse_bundle(oracle::corpus("distributive_f5.json"));
  auto const dl = resolve_wreath(f5, "dl");
  CHECK(check_wreath(dl).passed());
  CHECK(wreath_product(dl).mul
        == tensor_monoid(resolve_monoid(f5, "kS"), resolve_monoid(f5, "kA")).mul);
}
