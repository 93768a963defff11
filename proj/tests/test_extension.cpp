#include <catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace wreathkit;

namespace {
  Field const Q = Field::rational();

  Table trivial_alpha(std::size_t na, std::size_t nm) {
    Table t(na, std::vector<std::size_t>(nm));
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t x = 0; x < nm; ++x) {
        t[a][x] = a;
      }
    }
    return t;
  }

  ExtensionData z2_by_z2(std::size_t r) {
    return {cyclic_group(2), cyclic_group(2), trivial_alpha(2, 2), {{0, 0}, {0, r}}};
  }

  FibrationData z4_fibration() {
    return {cyclic_group(4), cyclic_group(2), {0, 1, 0, 1}, {0, 1}};
  }
}  // namespace

TEST_CASE("Z/4 over Z/2", "[extension]") {
  auto const fa = analyze_fibration(z4_fibration());
  REQUIRE(fa.ext.a.size() == 2);
  CHECK(fa.kernel == ElementMap{0, 2});
  CHECK(fa.ext.alpha == trivial_alpha(2, 2));
  CHECK(fa.kernel[fa.ext.rho[1][1]] == 2);
  CHECK(fa.ext.rho[0][0] == 0);
  CHECK(fa.ext.rho[0][1] == 0);
  CHECK(fa.ext.rho[1][0] == 0);
  CHECK(verify_extension_data(fa.ext).passed());
  auto const e = reconstruct(fa.ext);
  CHECK(e.table == oracle::extension_table(fa.ext));
  CHECK(check_isomorphism(e, cyclic_group(4), fa.h).passed());
}

TEST_CASE("identity and split fibrations", "[extension]") {
  auto const z3 = cyclic_group(3);
  auto const id = analyze_fibration({z3, z3, {0, 1, 2}, {0, 1, 2}});
  CHECK(id.ext.a.size() == 1);
  for (auto const& row : id.ext.rho) {
    for (auto v : row) {
      CHECK(v == 0);
    }
  }

  auto const e = direct_product(cyclic_group(2), z3);
  auto const sp = analyze_fibration({e, cyclic_group(2), {0, 0, 0, 1, 1, 1}, {0, 3}});
  CHECK(sp.ext.a.size() == 3);
  CHECK(sp.ext.alpha == trivial_alpha(3, 2));
  CHECK(sp.ext.rho == Table{{0, 0}, {0, 0}});
  CHECK(check_isomorphism(reconstruct(sp.ext), e, sp.h).passed());
}

TEST_CASE("non-fibrations are rejected with element names", "[extension]") {
  auto fd = z4_fibration();
  fd.j    = {1, 1};
  CHECK_THROWS_AS(analyze_fibration(fd), InputError);
  fd   = z4_fibration();
  fd.p = {0, 1, 1, 0};
  CHECK_THROWS_AS(analyze_fibration(fd), InputError);
}

TEST_CASE("rho-normalized failure is witnessed at (1, x)", "[extension]") {
  ExtensionData ed{cyclic_group(2), cyclic_group(2), trivial_alpha(2, 2), {{0, 1}, {0, 0}}};
  auto const r = verify_extension_data(ed);
  auto const* e = r.find("rho-normalized");
  REQUIRE(e != nullptr);
  CHECK_FALSE(e->passed);
  REQUIRE(e->witness);
  CHECK(e->witness->index == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(reconstruct(ed), ValidationError);
}

TEST_CASE("trivial rho with a genuine action", "[extension]") {
  // Z/2 acting on Z/3 by negation
  Table alpha{{0, 0}, {1, 2}, {2, 1}};
  ExtensionData ed{cyclic_group(2), cyclic_group(3), alpha, {{0, 0}, {0, 0}}};
  CHECK(verify_extension_data(ed).passed());
  auto const s = reconstruct(ed);
  CHECK(s.table == oracle::extension_table(ed));
  CHECK_FALSE(is_commutative(s));  // the dihedral group of order 6
}

TEST_CASE("Z/2 by Z/2 with rho(x,x) = a is Z/4", "[extension]") {
  auto const s = reconstruct(z2_by_z2(1));
  std::size_t g = 1 * 2 + 0, p = g;
  std::size_t order = 1;
  while (p != s.unit) {
    p = s.mul(p, g);
    ++order;
  }
  CHECK(order == 4);
  std::vector<std::size_t> iso(4);
  for (std::size_t k = 0; k < 4; ++k) {
    iso[k] = (k % 2) * 2 + k / 2;
  }
  CHECK(check_isomorphism(cyclic_group(4), s, iso).passed());
  CHECK(reconstruct(z2_by_z2(0)) .table
        == direct_product(cyclic_group(2), cyclic_group(2)).table);
}

TEST_CASE("extension wreaths", "[extension]") {
  auto const ed = analyze_fibration(z4_fibration()).ext;
  auto const wd = extension_to_wreath(ed, Q);
  CHECK(check_wreath(wd).passed());
  auto const prod = wreath_product(wd);
  CHECK(prod.mul.entries()
        == oracle::table_matrix(Q, prod.carrier, reconstruct(ed).table).entries());

  auto const z3 = cyclic_group(3);
  auto const id = analyze_fibration({z3, z3, {0, 1, 2}, {0, 1, 2}}).ext;
  auto const iw = extension_to_wreath(id, Q);
  CHECK(check_wreath(iw).passed());
  CHECK(iw.lambda == braid(Q, iw.monoid.carrier, iw.s));
}

TEST_CASE("cocycle enumeration", "[extension]") {
  auto const one = cyclic_group(1);
  CHECK(enumerate_cocycles(one, cyclic_group(2), trivial_alpha(2, 1)).size() == 1);

  auto const z2 = enumerate_cocycles(cyclic_group(2), cyclic_group(2), trivial_alpha(2, 2));
  REQUIRE(z2.size() == 2);
  CHECK(z2[0] == Table{{0, 0}, {0, 0}});
  CHECK(z2[1] == Table{{0, 0}, {0, 1}});

  // 0 + r = r + 0 at (1,1,1), so every r is a normalized cocycle here
  auto const z3 = enumerate_cocycles(cyclic_group(2), cyclic_group(3), trivial_alpha(3, 2));
  CHECK(z3.size() == 3);

  CHECK_THROWS_AS(enumerate_cocycles(cyclic_group(4), cyclic_group(3),
                                     trivial_alpha(3, 4), 100),
                  InputError);
  CHECK_THROWS_AS(enumerate_cocycles(cyclic_group(2), cyclic_group(3),
                                     Table{{0, 0}, {0, 2}, {0, 1}}),
                  ValidationError);
}

TEST_CASE("enumeration agrees with a direct filter", "[extension]") {
  // Z/3 acting on Z/3 trivially: brute force all normalized tables
  auto const m = cyclic_group(3), a = cyclic_group(3);
  auto const alpha = trivial_alpha(3, 3);
  std::vector<Table> expected;
  for (std::size_t code = 0; code < 81; ++code) {
    Table rho(3, std::vector<std::size_t>(3, 0));
    auto c = code;
    for (std::size_t x = 1; x < 3; ++x) {
      for (std::size_t y = 1; y < 3; ++y) {
        rho[x][y] = c % 3;
        c /= 3;
      }
    }
    if (verify_extension_data({m, a, alpha, rho}).passed()) {
      expected.push_back(rho);
    }
  }
  auto got = enumerate_cocycles(m, a, alpha);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
  CHECK(got.size() == 9);
}
