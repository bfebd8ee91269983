#include "doctest.h"
#include "oracles.hpp"
#include "wlpole/diagram.hpp"
#include "wlpole/positroid.hpp"

using namespace wlpole;

static std::vector<int> vec(ColumnSet s) { return elements(s); }

TEST_CASE("Gale order") {
  CHECK_FALSE(gale_leq(make_set({2, 5}), make_set({3, 4}), 1, 6));
  CHECK_FALSE(gale_leq(make_set({3, 4}), make_set({2, 5}), 1, 6));
  CHECK(gale_leq(make_set({1, 2}), make_set({3, 4}), 1, 6));
  // Shifted: under <_3, 3 < 4 < 5 < 6 < 1 < 2.
  CHECK(gale_leq(make_set({3, 1}), make_set({4, 2}), 3, 6));
  CHECK(gale_leq(make_set({6, 1}), make_set({2, 5}), 6, 6));
  CHECK_THROWS_AS(gale_leq(make_set({1}), make_set({1, 2}), 1, 4), InputError);
}

TEST_CASE("Grassmann necklaces of the worked examples") {
  auto v1 = Matroid::transversal(6, {make_set({1, 2, 4, 5}), make_set({1, 2, 3, 4})});
  CHECK(necklace_string(necklace(v1)) == "{12,23,34,45,51,12}");

  auto ex = Matroid::transversal(6, {make_set({1, 2, 5, 6}), make_set({1, 2, 3, 4})});
  CHECK(necklace_string(necklace(ex)) == "{12,23,35,45,51,61}");

  auto uni = Matroid::transversal(5, {full_set(5)});
  auto rev = reverse_necklace(uni);
  for (int j = 1; j <= 5; ++j) CHECK(rev.sets[j - 1] == bit(cyc(j - 1, 5)));
  CHECK_THROWS_AS(necklace(Matroid::transversal(3, {})), StructuralError);
}

TEST_CASE("property: necklaces are the Gale extreme bases") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 6}, {2, 7}, {3, 8}}) {
    for (auto& w : enumerate(k, n)) {
      auto m = Matroid::transversal(n, w.set_system());
      std::vector<std::vector<int>> bases;
      for (auto b : m.bases()) bases.push_back(vec(b));
      auto fw = necklace(m);
      auto bw = reverse_necklace(m);
      for (int a = 1; a <= n; ++a) {
        CHECK(vec(fw.sets[a - 1]) == oracle::gale_extreme(bases, a, n, false));
        CHECK(vec(bw.sets[a - 1]) == oracle::gale_extreme(bases, a, n, true));
      }
      // I_{a+1} contains I_a minus a.
      for (int a = 1; a <= n; ++a) {
        ColumnSet ia = fw.sets[a - 1], next = fw.sets[cyc(a + 1, n) - 1];
        CHECK(((ia & ~bit(a)) & ~next) == 0);
      }
    }
  }
}

TEST_CASE("minimal representations") {
  for (auto& w : enumerate(2, 7)) {
    auto rep = is_minimal(7, w.set_system());
    CHECK(rep.status == MinimalityStatus::Minimal);
    CHECK(rep.dimension == 6);
  }
  auto bad = is_minimal(6, {make_set({1, 2, 5}), make_set({1, 2, 5, 6})});
  CHECK(bad.status == MinimalityStatus::NotMinimal);
  CHECK(bad.bound == 5);
  CHECK(bad.violating_family == 3);
  CHECK_FALSE(bad.dimension);

  CHECK(is_minimal(4, {make_set({1}), make_set({1})}).status == MinimalityStatus::RankDeficient);
  CHECK(is_minimal(4, {full_set(4), make_set({2, 4})}).status == MinimalityStatus::NotPositroid);
}

TEST_CASE("property: minimality agrees with the Jacobian dimension probe") {
  for (auto& w : enumerate(2, 6)) {
    auto pm = SymbolicMatrix(6, w.set_system()).poly();
    CHECK(parameterization_dimension(pm, 17) == 6);
  }
  auto pm = SymbolicMatrix(6, {make_set({1, 2, 5}), make_set({1, 2, 5, 6})}).poly();
  CHECK(parameterization_dimension(pm, 17) < 5);
  auto k1 = SymbolicMatrix(6, {make_set({2, 3, 4, 5})}).poly();
  CHECK(parameterization_dimension(k1, 17) == 3);
}

TEST_CASE("boundary relation") {
  auto cell = Matroid::transversal(6, {make_set({1, 2, 5, 6}), make_set({1, 2, 3, 4})});
  auto bd = Matroid::transversal(6, {make_set({1, 2}), full_set(6)});
  auto rel = is_boundary_of(bd, cell);
  CHECK(rel.is_boundary());
  CHECK(rel.differing_index == 3);
  CHECK(rel.boundary_entry == make_set({3, 1}));
  CHECK(rel.cell_entry == make_set({3, 5}));
  CHECK_FALSE(is_boundary_of(cell, cell).proper);
  CHECK_THROWS_AS(is_boundary_of(Matroid::transversal(6, {full_set(6)}), cell), InputError);
}

TEST_CASE("cell descriptor") {
  auto cd = describe_cell(6, {make_set({1, 2, 4, 5}), make_set({1, 2, 3, 4})});
  CHECK(cd.k == 2);
  CHECK(cd.dimension == 6);
  CHECK(necklace_string(cd.forward) == "{12,23,34,45,51,12}");
}
