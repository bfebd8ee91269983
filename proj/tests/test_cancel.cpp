#include <map>
#include <set>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "wlpole/cancel.hpp"
#include "wlpole/poles.hpp"

using namespace wlpole;

namespace {

Factor X(int r, int c) { return Factor::variable({r, c}); }

oracle::QMat rows_of(const TwistorData& z, const std::vector<int>& verts, int replaced) {
  oracle::QMat m;
  for (int v : verts) {
    oracle::QRow r;
    for (int c = 0; c < 4; ++c) r.push_back(v == replaced ? z.z0[c] : z.z.at(v - 1, c));
    m.push_back(r);
  }
  return m;
}

}  // namespace

TEST_CASE("positive twistors") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto z = positive_twistors(7, 2, seed);
    CHECK(z.z.rows() == 7);
    CHECK(z.z.cols() == 6);
    CHECK(has_positive_minors(z.z));
    oracle::QMat m;
    for (int a = 0; a < 6; ++a) {
      oracle::QRow r;
      for (int c = 0; c < 6; ++c) r.push_back(z.z.at(a, c));
      m.push_back(r);
    }
    CHECK(oracle::det_permutation(m) > 0);
  }
  CHECK_FALSE(has_positive_minors(QMatrix(5, 5)));
  CHECK_THROWS_AS(positive_twistors(5, 2, 1), InputError);
  CHECK(positive_twistors(6, 1, 9).z0 == positive_twistors(6, 1, 9).z0);
}

TEST_CASE("localization matches a cofactor oracle") {
  auto z = positive_twistors(5, 1, 3);
  for (auto& w : enumerate(1, 5)) {
    auto a = localize(w, z);
    const auto& p = w.prop(0);
    std::vector<int> verts{p.e1, cyc(p.e1 + 1, 5), p.e2, cyc(p.e2 + 1, 5)};
    CHECK(a.at(VarId{1, 0}) == oracle::det_permutation(rows_of(z, verts, 0)));
    for (int v : verts) CHECK(a.at(VarId{1, v}) == oracle::det_permutation(rows_of(z, verts, v)));
  }
}

TEST_CASE("zero gauge row localizes every support variable to zero") {
  auto z = positive_twistors(6, 1, 2);
  for (auto& c : z.z0) c = 0;
  Diagram w(6, {{1, 4}});
  auto a = localize(w, z);
  CHECK(a.at(VarId{1, 0}) != 0);
  for (int v : {1, 2, 4, 5}) CHECK(a.at(VarId{1, v}) == 0);
}

TEST_CASE("degenerate twistors are rejected") {
  auto z = positive_twistors(6, 1, 2);
  for (int c = 0; c < 5; ++c) z.z.at(1, c) = z.z.at(0, c);
  CHECK_THROWS_AS(localize(Diagram(6, {{1, 4}}), z), StructuralError);
  CHECK_THROWS_AS(localize(Diagram(7, {{1, 4}}), z), InputError);
}

TEST_CASE("moving a propagator end negates the localized variable") {
  const int n = 8;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto z = positive_twistors(n, 1, seed);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {2, 6}, {3, 6}}) {
      Diagram wp(n, {{i, j}}), wq(n, {{i, j + 1}});
      CHECK(localize(wp, z).at(VarId{1, j}) == -localize(wq, z).at(VarId{1, j + 2}));
    }
  }
}

TEST_CASE("property: swapping adjacent twistors alternates the localization") {
  const int n = 7;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto z = positive_twistors(n, 1, seed);
    for (auto& w : enumerate(1, n)) {
      const auto& p = w.prop(0);
      const int i = p.e1, i1 = p.e1 + 1;
      auto sw = z;
      for (int c = 0; c < sw.z.cols(); ++c) std::swap(sw.z.at(i - 1, c), sw.z.at(i1 - 1, c));
      auto a = localize(w, z), b = localize(w, sw);
      CHECK(b.at(VarId{1, 0}) == -a.at(VarId{1, 0}));
      CHECK(b.at(VarId{1, i}) == -a.at(VarId{1, i1}));
      CHECK(b.at(VarId{1, i1}) == -a.at(VarId{1, i}));
      for (int v : {p.e2, cyc(p.e2 + 1, n)}) CHECK(b.at(VarId{1, v}) == -a.at(VarId{1, v}));
    }
  }
}

TEST_CASE("classification of degree-one factors") {
  auto c1 = classify(Diagram(7, {{1, 4}}), X(1, 1));
  CHECK(c1.tag == CaseTag::Case1);
  REQUIRE(c1.partner);
  CHECK(*c1.partner == Propagator{2, 4});
  CHECK(c1.partner_vertex == 3);

  auto c1a = classify(Diagram(7, {{1, 4}, {2, 4}}), X(1, 1));
  CHECK(c1a.tag == CaseTag::Case1a);
  CHECK(is_codim_two(c1a.tag));

  CHECK(classify(Diagram(6, {{1, 3}}), X(1, 1)).tag == CaseTag::Case2);
  auto c2 = classify(Diagram(6, {{1, 3}}), X(1, 4));
  CHECK(c2.tag == CaseTag::Case2);
  CHECK(*c2.partner == Propagator{2, 6});

  // (6,2) would cross (1,5).
  Diagram blocked(7, {{1, 3}, {1, 5}});
  const int r = blocked.index_of({1, 3}) + 1;
  CHECK(classify(blocked, X(r, 4)).tag == CaseTag::Case2a);

  CHECK_THROWS_AS(classify(Diagram(7, {{1, 4}}), X(1, 3)), InputError);
}

TEST_CASE("classification of 2x2 factors") {
  auto quad = [](const Diagram& w, Propagator a, Propagator b, int e) {
    return Factor::minor2(w.index_of(a) + 1, w.index_of(b) + 1, e, cyc(e + 1, w.n()));
  };
  Diagram narrow(7, {{1, 4}, {1, 5}});
  auto cb = classify(narrow, quad(narrow, {1, 4}, {1, 5}, 1));
  CHECK(cb.tag == CaseTag::Case3b);
  CHECK(cb.shared_edge == 1);
  CHECK(cb.far_j == 4);
  CHECK(cb.far_k == 5);

  Diagram wide(8, {{1, 3}, {1, 6}});
  auto c3 = classify(wide, quad(wide, {1, 3}, {1, 6}, 1));
  CHECK(c3.tag == CaseTag::Case3);
  CHECK(c3.far_j == 3);
  CHECK(c3.far_k == 6);

  Diagram tri(8, {{1, 3}, {1, 6}, {3, 6}});
  auto c3a = classify(tri, quad(tri, {1, 3}, {1, 6}, 1));
  CHECK(c3a.tag == CaseTag::Case3a);
  CHECK_THROWS_AS(partners(tri, quad(tri, {1, 3}, {1, 6}, 1)), StructuralError);
}

TEST_CASE("case 1 pair") {
  Diagram w(7, {{1, 4}});
  auto g = partners(w, X(1, 1));
  CHECK(g.kind == "pair");
  REQUIRE(g.members.size() == 2);
  std::set<std::pair<Diagram, Factor>> ids;
  for (auto& m : g.members) ids.insert({m.w, m.f});
  CHECK(ids.count({w, X(1, 1)}));
  CHECK(ids.count({Diagram(7, {{2, 4}}), X(1, 3)}));
  auto chk = verify_group(g, 11, 10);
  CHECK(chk.ok());
  CHECK(chk.boundary.dimension == 2);
}

TEST_CASE("wide and narrow triples") {
  Diagram wide(8, {{1, 3}, {1, 6}});
  auto gw = partners(wide, Factor::minor2(1, 2, 1, 2));
  CHECK(gw.kind == "wide_triple");
  REQUIRE(gw.members.size() == 3);
  CHECK(gw.members[0].w == wide);
  CHECK(gw.members[1].w == Diagram(8, {{1, 3}, {3, 6}}));
  CHECK(gw.members[2].w == Diagram(8, {{1, 6}, {3, 6}}));
  auto cw = verify_group(gw, 4, 10);
  CHECK(cw.ok());
  CHECK(cw.boundary.dimension == 5);

  Diagram narrow(7, {{1, 4}, {1, 5}});
  auto gn = partners(narrow, Factor::minor2(1, 2, 1, 2));
  CHECK(gn.kind == "narrow_triple");
  REQUIRE(gn.members.size() == 3);
  CHECK(gn.members[1].w == Diagram(7, {{1, 4}, {4, 6}}));
  CHECK(gn.members[1].f == X(2, 7));
  CHECK(gn.members[2].w == Diagram(7, {{1, 5}, {3, 5}}));
  CHECK(gn.members[2].f == X(2, 3));
  CHECK(verify_group(gn, 4, 10).ok());
}

TEST_CASE("a wrong partner fails verification") {
  Diagram w(7, {{1, 4}});
  auto g = partners(w, X(1, 1));
  auto bad = g;
  for (auto& m : bad.members)
    if (m.w != w) m.f = X(1, m.f.var.col == 2 ? 5 : 2);
  CHECK_FALSE(verify_group(bad, 1, 3).ok());

  Diagram wide(8, {{1, 3}, {1, 6}});
  auto gw = partners(wide, Factor::minor2(1, 2, 1, 2));
  gw.members[2].f = r_poly_edge(gw.members[2].w).factors.front();
  CHECK_FALSE(verify_group(gw, 1, 3).ok());
}

TEST_CASE("weight sum identity") {
  for (int a = -5; a <= 5; ++a) {
    Rational e = Rational(a) / 7;
    CHECK(1 + e / (1 - e) - 1 / (1 - e) == 0);
  }
}

TEST_CASE("property: pairing is symmetric") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 5}, {1, 6}, {1, 7}, {2, 6}, {2, 7}}) {
    for (auto& w : enumerate(k, n)) {
      for (auto& f : r_poly_edge(w).factors) {
        auto c = classify(w, f);
        if (is_codim_two(c.tag)) {
          CHECK(factor_codim(w, f).codim == Codim::AtLeastTwo);
          continue;
        }
        auto g = partners(w, f);
        CHECK((g.members.size() == 2 || g.members.size() == 3));
        bool self = false;
        for (auto& m : g.members) {
          self = self || (m.w == w && m.f == f);
          CHECK(partners(m.w, m.f).key() == g.key());
        }
        CHECK(self);
      }
    }
  }
}

TEST_CASE("amplitude report partitions the codim-1 factors") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 5}, {2, 6}}) {
    auto rep = amplitude_report(k, n, 7, 5, 2);
    CHECK(rep.complete());
    size_t members = 0;
    std::set<std::pair<Diagram, Factor>> seen;
    for (auto& g : rep.groups)
      for (auto& m : g.members) {
        ++members;
        CHECK(seen.insert({m.w, m.f}).second);
      }
    CHECK(members == static_cast<size_t>(rep.codim_one_factors));
    for (auto& c : rep.checks) CHECK(c.ok());
  }
  auto r15 = amplitude_report(1, 5, 1, 3, 1);
  CHECK(r15.diagrams == 5);
  CHECK(r15.groups.size() == 10);
  for (auto& g : r15.groups) CHECK(g.kind == "pair");

  auto r26 = amplitude_report(2, 6, 7, 3, 1);
  std::map<std::string, int> kinds;
  for (auto& g : r26.groups) kinds[g.kind]++;
  CHECK(kinds["pair"] == 42);
  CHECK(kinds["wide_triple"] == 2);
  CHECK(kinds["narrow_triple"] == 12);
  CHECK(r26.excluded.size() == 24);

  auto empty = amplitude_report(0, 5, 1);
  CHECK(empty.complete());
  CHECK(empty.groups.empty());
}

TEST_CASE("amplitude report is deterministic across thread counts") {
  auto a = amplitude_report(2, 6, 3, 4, 1);
  auto b = amplitude_report(2, 6, 3, 4, 4);
  REQUIRE(a.groups.size() == b.groups.size());
  for (size_t i = 0; i < a.groups.size(); ++i) {
    CHECK(a.groups[i].key() == b.groups[i].key());
    CHECK(a.checks[i].detail == b.checks[i].detail);
    CHECK(a.checks[i].boundary.dimension == b.checks[i].boundary.dimension);
  }
}
