#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <set>

#include "doctest.h"
#include "tropenum/catalog.hpp"
#include "tropenum/lattice.hpp"

using namespace tropenum;

namespace {

// All valid (a,b[,c,d]) for a family with parameters bounded by `limit`.
std::vector<FamilyParams> valid_params(int family_id, std::int64_t limit) {
  std::vector<FamilyParams> out;
  auto try_add = [&](FamilyParams p) {
    try {
      instantiate(family_id, p);
      out.push_back(p);
    } catch (const std::invalid_argument&) {
    }
  };
  if (family_id == 1 || family_id == 9) {
    out.push_back({});
    return out;
  }
  if (family_id == 21) {
    for (std::int64_t a = 1; a <= limit; ++a)
      for (std::int64_t b = 1; b <= limit; ++b)
        for (std::int64_t c = 1; c <= limit; ++c)
          for (std::int64_t d = 1; d <= limit; ++d)
            try_add({a, b, c, d});
    return out;
  }
  for (std::int64_t a = 0; a <= limit; ++a)
    for (std::int64_t b = 0; b <= limit; ++b) try_add({a, b, 0, 0});
  return out;
}

Int sum(const std::vector<Int>& v) {
  return std::accumulate(v.begin(), v.end(), Int(0));
}

}  // namespace

TEST_CASE("instantiation constraints") {
  CHECK_NOTHROW(instantiate(10, {3, 1, 0, 0}));
  CHECK_THROWS_WITH_AS(instantiate(10, {2, 4, 0, 0}),
                       doctest::Contains("0 < b <= a"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(instantiate(10, {4, 2, 0, 0}),
                       doctest::Contains("gcd"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(instantiate(8, {4, 2, 0, 0}), doctest::Contains("gcd"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(instantiate(8, {6, 3, 0, 0}), doctest::Contains("gcd"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(instantiate(20, {2, 0, 0, 0}),
                       doctest::Contains("a >= 3"), std::invalid_argument);
  // c > a fails for (1,1,1,2)
  CHECK_THROWS_WITH_AS(instantiate(21, {1, 1, 1, 2}),
                       doctest::Contains("c > a"), std::invalid_argument);
  CHECK_NOTHROW(instantiate(21, {1, 1, 2, 3}));
  CHECK_THROWS_AS(instantiate(2, {1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("binodality status") {
  for (const int id : {1, 9, 15, 16, 17}) {
    CAPTURE(id);
    for (const auto& p : valid_params(id, 4))
      CHECK(instantiate(id, p).status == Binodality::NotBinodal);
  }
  CHECK(instantiate(10, {1, 1, 0, 0}).status == Binodality::NotBinodal);
  CHECK(instantiate(10, {2, 1, 0, 0}).status == Binodality::NotBinodal);
  CHECK(instantiate(10, {3, 1, 0, 0}).status == Binodality::Binodal);
  for (const int id : {13, 14}) {
    CHECK(instantiate(id, {2, 1, 0, 0}).status == Binodality::NotBinodal);
    CHECK(instantiate(id, {3, 1, 0, 0}).status == Binodality::NotBinodal);
    CHECK(instantiate(id, {4, 1, 0, 0}).status == Binodality::Binodal);
  }
  CHECK(instantiate(20, {3, 0, 0, 0}).status == Binodality::NotBinodal);
  CHECK(instantiate(20, {4, 0, 0, 0}).status == Binodality::Binodal);
  CHECK(instantiate(8, {3, 1, 0, 0}).status == Binodality::Binodal);
  CHECK(instantiate(21, {1, 1, 2, 3}).status == Binodality::Binodal);
}

TEST_CASE("every instance has 6 lattice points and width 1") {
  for (const int id : catalog_family_ids()) {
    CAPTURE(id);
    const std::int64_t limit = (id == 21) ? 6 : 8;
    for (const auto& p : valid_params(id, limit)) {
      CAPTURE(p.a);
      CAPTURE(p.b);
      CAPTURE(p.c);
      CAPTURE(p.d);
      const auto inst = instantiate(id, p);
      CHECK(inst.lattice_point_count == 6);
      CHECK(inst.width == 1);
    }
  }
}

TEST_CASE("degree formulas") {
  CHECK(binodal_degree(instantiate(10, {3, 1, 0, 0})) == 6);
  CHECK(binodal_degree(instantiate(20, {4, 0, 0, 0})) == 6);
  CHECK(binodal_degree(instantiate(14, {5, 2, 0, 0})) == 24);
  CHECK(binodal_degree(instantiate(21, {1, 1, 2, 3})) == 7);
  CHECK_THROWS_AS(binodal_degree(instantiate(8, {3, 1, 0, 0})),
                  NoFormulaError);
  CHECK_THROWS_AS(binodal_degree(instantiate(20, {3, 0, 0, 0})),
                  std::invalid_argument);  // not binodal
}

TEST_CASE("path multiplicity rows") {
  CHECK(path_multiplicities(instantiate(10, {3, 1, 0, 0})) ==
        std::vector<Int>{1, 3, 1, 1});
  CHECK(path_multiplicities(instantiate(21, {1, 1, 2, 3})) ==
        std::vector<Int>{1, 2, 1, 2, 1});
  CHECK(path_multiplicities(instantiate(20, {5, 0, 0, 0})) ==
        std::vector<Int>{2, 2, 2, 2, 6});
}

TEST_CASE("degree identity: multiplicities sum to the degree") {
  for (const int id : {10, 13, 14, 20, 21}) {
    CAPTURE(id);
    const std::int64_t limit = (id == 21) ? 8 : 12;
    for (const auto& p : valid_params(id, limit)) {
      const auto inst = instantiate(id, p);
      if (inst.status != Binodality::Binodal) continue;
      CAPTURE(p.a);
      CAPTURE(p.b);
      CAPTURE(p.c);
      CAPTURE(p.d);
      const auto mults = path_multiplicities(inst);
      for (const auto& m : mults) CHECK(m >= 0);
      CHECK(sum(mults) == binodal_degree(inst));
    }
  }
}

TEST_CASE("family-8 fixture table") {
  const auto e31 = family8_fixture(3, 1);
  REQUIRE(e31.has_value());
  CHECK(e31->degree == 8);
  CHECK(e31->split == std::vector<Int>{3, 5});
  const auto e76 = family8_fixture(7, 6);
  REQUIRE(e76.has_value());
  CHECK(e76->degree == 80);
  CHECK(e76->split == std::vector<Int>{15, 40, 25});
  CHECK_FALSE(family8_fixture(4, 2).has_value());
  CHECK_FALSE(family8_fixture(9, 1).has_value());

  // Every populated cell is consistent: the split sums to the degree.
  int populated = 0;
  for (std::int64_t a = 1; a <= 8; ++a)
    for (std::int64_t b = 1; b < a; ++b)
      if (const auto e = family8_fixture(a, b)) {
        ++populated;
        CHECK(sum(e->split) == e->degree);
      }
  CHECK(populated == 16);
}

TEST_CASE("placements: thresholds and small-degree counts") {
  CHECK(placements(20, 4).empty());
  const auto p20 = placements(20, 5);
  REQUIRE(p20.size() == 1);
  CHECK(p20[0].f == 4);
  CHECK(p20[0].y == 0);
  CHECK(p20[0].a == 4);
  CHECK(p20[0].multiplicity == 1);
  CHECK(p20[0].path.size() == 4);

  const auto p10 = placements(10, 5);
  REQUIRE(p10.size() == 1);
  CHECK(p10[0].variant == 1);
  CHECK(p10[0].a == 3);
  CHECK(p10[0].multiplicity == 1);

  CHECK(placements(13, 6).empty());
  CHECK_FALSE(placements(13, 7).empty());
  CHECK_THROWS_AS(placements(21, 8), std::invalid_argument);
}

TEST_CASE("placement polytopes are equivalent to canonical instances") {
  // Families 10/13 place the b=1 member; family 20 the parameter-a member.
  for (const int id : {10, 13, 20}) {
    for (const std::int64_t d : {5, 6, 7}) {
      for (const auto& pl : placements(id, d)) {
        CAPTURE(id);
        CAPTURE(d);
        CAPTURE(pl.variant);
        CAPTURE(pl.a);
        const FamilyParams params = (id == 20)
                                        ? FamilyParams{pl.a, 0, 0, 0}
                                        : FamilyParams{pl.a, 1, 0, 0};
        const auto canonical = instantiate(id, params);
        const auto witness = iua_equivalent(pl.polytope, canonical.polytope);
        CHECK(witness.has_value());
        CHECK(pl.polytope.lattice_points().size() == 6);
      }
    }
  }
}

TEST_CASE("placement path points are lattice points of the placement") {
  for (const auto& pl : placements(20, 7)) {
    const auto& pts = pl.polytope.lattice_points();
    for (const auto& q : pl.path)
      CHECK(std::find(pts.begin(), pts.end(), q) != pts.end());
  }
}
