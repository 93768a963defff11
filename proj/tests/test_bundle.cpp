#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "corpus_index.hpp"

using namespace wreathkit;

namespace {
  std::string slurp(std::string const& path) {
    std::ifstream     in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
}  // namespace

TEST_CASE("minimal bundle", "[bundle]") {
  auto const b = parse_bundle_text(R"({"field": "rational", "objects": []})");
  CHECK(b.field == Field::rational());
  CHECK(b.objects.empty());
  CHECK(b.morphisms.empty());
  CHECK(b.structures.empty());
}

TEST_CASE("shape errors name the morphism and both shapes", "[bundle]") {
  try {
    (void)parse_bundle(oracle::corpus("bad_shape.json"));
    FAIL("parsed");
  } catch (ShapeError const& e) {
    std::string const what = e.what();
    CHECK(what.find("'bad'") != std::string::npos);
    CHECK(what.find("2x2") != std::string::npos);
    CHECK(what.find("2x3") != std::string::npos);
  }
}

TEST_CASE("malformed input is an InputError", "[bundle]") {
  CHECK_THROWS_AS(parse_bundle_text("{"), InputError);
  CHECK_THROWS_AS(parse_bundle_text("[]"), InputError);
  CHECK_THROWS_AS(parse_bundle_text(R"({"colour": 1})"), InputError);
  CHECK_THROWS_AS(parse_bundle_text(R"({"field": {"prime": 4}})"), InputError);
  CHECK_THROWS_AS(parse_bundle_text(R"({"objects": {"B": 0}})"), InputError);
  CHECK_THROWS_AS(parse_bundle_text(
                      R"({"objects": {"B": 1},
                          "morphisms": {"m": {"dom": ["C"], "cod": ["B"], "entries": [["1"]]}}})"),
                  InputError);
  CHECK_THROWS_AS(parse_bundle_text(
                      R"({"structures": {"w": {"type": "wreath", "monoid": "nope"}}})"),
                  InputError);
  CHECK_THROWS_AS(parse_bundle_text(
                      R"({"objects": {"B": 1},
                          "morphisms": {"m": {"dom": ["B"], "cod": ["B"], "entries": [["x"]]}}})"),
                  InputError);
  CHECK_THROWS_AS(parse_bundle("/nonexistent/bundle.json"), InputError);
}

TEST_CASE("scalars are canonicalized on parse", "[bundle]") {
  auto const b = parse_bundle_text(
      R"({"field": {"prime": 7}, "objects": {"B": 1},
          "morphisms": {"m": {"dom": ["B"], "cod": ["B"], "entries": [[-1]]}}})");
  CHECK(b.morphisms.at("m").at(0, 0).to_string() == "6");
  auto const q = parse_bundle_text(
      R"({"objects": {"B": 1},
          "morphisms": {"m": {"dom": ["B"], "cod": ["B"], "entries": [["4/6"]]}}})");
  CHECK(q.morphisms.at("m").at(0, 0).to_string() == "2/3");
  CHECK(serialize_bundle(q).find("\"2/3\"") != std::string::npos);
}

TEST_CASE("corpus files are canonical and round trip", "[bundle]") {
  for (auto const& path : oracle::corpus_files()) {
    INFO(path);
    auto const text = slurp(path);
    auto const b    = parse_bundle_text(text);
    auto const out  = serialize_bundle(b);
    CHECK(out == text);
    CHECK(serialize_bundle(parse_bundle_text(out)) == out);
  }
}

TEST_CASE("stored structures resolve to the same data", "[bundle]") {
  auto const src = parse_bundle(oracle::corpus("z4_extension.json"));
  auto const wd  = resolve_wreath(src, "w1");
  auto const ed  = resolve_extension(src, "ext");
  auto const mo  = heisenberg_data(linearize(cyclic_group(2), Field::rational(), "B"));

  Bundle b;
  store_wreath(b, "w", wd);
  store_extension(b, "e", ed);
  store_opwreath(b, "o", mo);
  store_monoid(b, "p", wreath_product(wd));
  auto const back = parse_bundle_text(serialize_bundle(b));
  auto const wd2  = resolve_wreath(back, "w");
  CHECK(wd2.nu == wd.nu);
  CHECK(wd2.lambda == wd.lambda);
  CHECK(wd2.sigma0 == wd.sigma0);
  CHECK(wd2.monoid.mul == wd.monoid.mul);
  auto const ed2 = resolve_extension(back, "e");
  CHECK(ed2.rho == ed.rho);
  CHECK(ed2.alpha == ed.alpha);
  CHECK(ed2.m == ed.m);
  auto const mo2 = resolve_opwreath(back, "o");
  CHECK(mo2.z == mo.z);
  CHECK(mo2.d == mo.d);
  CHECK(mo2.w == mo.w);
  CHECK(resolve_monoid(back, "p").mul == wreath_product(wd).mul);
  CHECK(structure_type(back, "w") == "wreath");
}

TEST_CASE("resolvers reject wrong types", "[bundle]") {
  auto const b = parse_bundle(oracle::corpus("z4_extension.json"));
  CHECK_THROWS_AS(resolve_wreath(b, "ext"), InputError);
  CHECK_THROWS_AS(resolve_monoid(b, "missing"), InputError);
  auto const rep = to_json(check_wreath(resolve_wreath(b, "w1_bad")));
  CHECK(rep.contains("entries"));
}
