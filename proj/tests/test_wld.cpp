#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wlpole/diagram.hpp"

using namespace wlpole;

static Diagram D(int n, std::vector<std::pair<int, int>> ps) {
  std::vector<Propagator> props;
  for (auto [a, b] : ps) props.push_back(make_propagator(a, b, n));
  return Diagram(n, props);
}

TEST_CASE("propagator construction") {
  CHECK(make_propagator(5, 2, 8) == Propagator{2, 5});
  CHECK_THROWS_AS(make_propagator(3, 3, 8), InputError);
  CHECK_THROWS_AS(make_propagator(0, 3, 8), InputError);
  CHECK_THROWS_AS(make_propagator(2, 9, 8), InputError);
  CHECK(vertex_support({2, 4}, 6) == make_set({2, 3, 4, 5}));
  CHECK(vertex_support({1, 5}, 6) == make_set({1, 2, 5, 6}));
  CHECK(vertex_support({3, 6}, 6) == make_set({3, 4, 6, 1}));
}

TEST_CASE("admissibility verdicts") {
  auto w = D(8, {{3, 5}, {2, 5}, {1, 7}});
  CHECK(validate(w).admissible());

  auto crossing = D(8, {{1, 3}, {2, 4}});
  auto v = validate(crossing);
  CHECK_FALSE(v.non_crossing);
  CHECK_FALSE(v.admissible());

  auto dup = D(8, {{8, 1}, {8, 1}});
  CHECK(dup.k() == 2);
  CHECK_FALSE(validate(dup).local_density);

  // Adjacent edges give a support of three vertices.
  auto w_bad = D(8, {{6, 7}, {8, 1}});
  CHECK_FALSE(validate(w_bad).admissible());
  CHECK_FALSE(validate(w_bad).local_density);

  auto dense = D(5, {{1, 3}, {3, 5}});
  CHECK_FALSE(validate(dense).global_density);
}

TEST_CASE("edge order") {
  auto w = D(8, {{3, 5}, {2, 5}, {1, 7}});
  auto order = edge_order(w, 5);
  REQUIRE(order.size() == 2);
  CHECK(w.prop(order[0]) == Propagator{3, 5});
  CHECK(w.prop(order[1]) == Propagator{2, 5});
  CHECK(edge_order(w, 4).empty());
  CHECK_THROWS_AS(edge_order(D(8, {{1, 3}, {2, 4}}), 3), StructuralError);
  CHECK_THROWS_AS(edge_order(w, 9), InputError);
}

TEST_CASE("propagator flats and Prop") {
  auto w = D(6, {{1, 5}, {1, 3}});
  // F(P) with P = {(1,3)}: complement of V_(1,5) = {3,4}.
  PropSet q = 0;
  for (int i = 0; i < w.k(); ++i)
    if (w.prop(i) == Propagator{1, 3}) q |= PropSet{1} << i;
  CHECK(propagator_flat(w, q) == make_set({3, 4}));
  CHECK(props_meeting(w, make_set({3, 4})) == q);
  CHECK(propagator_flat(w, 3) == full_set(6));
}

TEST_CASE("enumeration matches the generate-and-filter oracle") {
  CHECK(enumerate(1, 4).empty());
  CHECK(enumerate(1, 5).size() == 5);
  auto empty = enumerate(0, 7);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].k() == 0);
  // Counts from oracle::all_admissible.
  const std::vector<std::tuple<int, int, size_t>> frozen = {
      {1, 6, 9}, {1, 7, 14}, {1, 8, 20}, {2, 6, 21}, {2, 7, 56}, {2, 8, 120}, {3, 7, 84}, {3, 8, 300}};
  for (auto [k, n, c] : frozen) {
    auto ws = enumerate(k, n);
    CHECK(ws.size() == c);
    CHECK(std::is_sorted(ws.begin(), ws.end()));
  }
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 7}, {3, 7}, {2, 9}}) {
    auto ref = oracle::all_admissible(k, n);
    auto ws = enumerate(k, n);
    REQUIRE(ws.size() == ref.size());
    std::vector<std::vector<oracle::Chord>> got;
    for (auto& w : ws) {
      std::vector<oracle::Chord> cs;
      for (auto& p : w.props()) cs.push_back({p.e1, p.e2});
      got.push_back(cs);
    }
    std::sort(got.begin(), got.end());
    std::sort(ref.begin(), ref.end());
    CHECK(got == ref);
  }
}

TEST_CASE("property: enumeration is closed under rotation and supports have four vertices") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 7}, {2, 7}, {2, 8}, {3, 8}}) {
    auto ws = enumerate(k, n);
    for (auto& w : ws) {
      for (auto& p : w.props()) CHECK(card(vertex_support(p, n)) == 4);
      for (int s = 1; s < n; ++s) CHECK(std::binary_search(ws.begin(), ws.end(), w.rotate(s)));
    }
  }
}

TEST_CASE("property: validate agrees with the oracle on random diagrams") {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 6 + static_cast<int>(eng() % 4);
    int k = 1 + static_cast<int>(eng() % 3);
    std::vector<Propagator> ps;
    std::vector<oracle::Chord> cs;
    while (static_cast<int>(ps.size()) < k) {
      int a = 1 + static_cast<int>(eng() % n), b = 1 + static_cast<int>(eng() % n);
      if (a == b) continue;
      auto p = make_propagator(a, b, n);
      ps.push_back(p);
      cs.push_back({p.e1, p.e2});
    }
    CHECK(validate(Diagram(n, ps)).admissible() == oracle::admissible(n, cs));
  }
}
