#include "wlpole/cancel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "wlpole/matroid.hpp"
#include "wlpole/poles.hpp"

namespace wlpole {

namespace {

Propagator prop_between(int a, int b, int n) { return make_propagator(cyc(a, n), cyc(b, n), n); }

// Vertices of p in the order i, i+1, j, j+1.
std::vector<int> ordered_support(const Propagator& p, int n) {
  return {p.e1, cyc(p.e1 + 1, n), p.e2, cyc(p.e2 + 1, n)};
}

// Edge pairs (a, b) with s = {a, a+1, b, b+1} and a, b not adjacent.
std::vector<Propagator> decompositions(ColumnSet s, int n) {
  std::set<Propagator> out;
  if (card(s) != 4) return {};
  for (int a : elements(s)) {
    const int a1 = cyc(a + 1, n);
    if (!has(s, a1)) continue;
    auto rest = elements(s & ~bit(a) & ~bit(a1));
    for (int t = 0; t < 2; ++t) {
      int b = rest[t], c = rest[1 - t];
      if (cyc(b + 1, n) != c) continue;
      if (b == a || cyc(b + 1, n) == a || cyc(a + 1, n) == b) continue;
      out.insert(prop_between(a, b, n));
    }
  }
  return {out.begin(), out.end()};
}

// Start of the run when V_p is four cyclically consecutive vertices, else 0.
int consecutive_start(const Propagator& p, int n) {
  const ColumnSet s = vertex_support(p, n);
  for (int a : elements(s)) {
    bool run = true;
    for (int d = 1; d < 4; ++d) run = run && has(s, cyc(a + d, n));
    if (run) return a;
  }
  return 0;
}

int other_end(const Propagator& p, int e) { return p.e1 == e ? p.e2 : p.e1; }

int row_label(const Diagram& w, const Propagator& p) {
  int idx = w.index_of(p);
  if (idx < 0) throw StructuralError(to_string(p) + " missing from " + to_string(w));
  return idx + 1;
}

Factor quad_on_edge(const Diagram& w, const Propagator& a, const Propagator& b, int e) {
  return Factor::minor2(row_label(w, a), row_label(w, b), e, cyc(e + 1, w.n()));
}

struct Move {
  Propagator q;
  int vertex = 0;
};

// Replace vertex v of V_p by the unique vertex that gives another propagator support.
Move move_vertex(const Propagator& p, int v, int n) {
  const ColumnSet base = vertex_support(p, n) & ~bit(v);
  std::vector<Move> found;
  for (int u = 1; u <= n; ++u) {
    if (u == v || has(base, u)) continue;
    for (const auto& q : decompositions(base | bit(u), n)) found.push_back({q, u});
  }
  if (found.size() != 1)
    throw StructuralError("no unique partner support for x[" + to_string(p) + "," + std::to_string(v) + "]");
  return found.front();
}

void require_factor(const Diagram& w, const Factor& f) {
  if (!r_poly_edge(w).contains(f)) throw InputError(f.to_string() + " is not a factor of R for " + to_string(w));
}

GroupMember member(const Diagram& w, const Factor& f, std::string role, std::string weight) {
  if (!is_admissible(w)) throw StructuralError("partner diagram " + to_string(w) + " is not admissible");
  require_factor(w, f);
  return {w, f, std::move(role), std::move(weight)};
}

const char* kWeightP2 = "e/(1-e)";
const char* kWeightP3 = "-1/(1-e)";

std::vector<Propagator> without(const Diagram& w, std::initializer_list<Propagator> drop) {
  std::vector<Propagator> out;
  for (const auto& r : w.props())
    if (std::find(drop.begin(), drop.end(), r) == drop.end()) out.push_back(r);
  return out;
}

Diagram with_pair(std::vector<Propagator> props, int n, const Propagator& x, const Propagator& y) {
  props.push_back(x);
  props.push_back(y);
  return Diagram(n, std::move(props));
}

// Edges e1 < e2 < e3: P1 meets at e1, P2 at e2, P3 at e3.
CancellationGroup wide_triple(const std::vector<Propagator>& rest, int n, std::array<int, 3> e) {
  std::sort(e.begin(), e.end());
  const Propagator p12 = prop_between(e[0], e[1], n), p13 = prop_between(e[0], e[2], n),
                   p23 = prop_between(e[1], e[2], n);
  Diagram d1 = with_pair(rest, n, p12, p13), d2 = with_pair(rest, n, p12, p23), d3 = with_pair(rest, n, p23, p13);
  CancellationGroup g;
  g.kind = "wide_triple";
  g.members.push_back(member(d1, quad_on_edge(d1, p12, p13, e[0]), "P1", "+1"));
  g.members.push_back(member(d2, quad_on_edge(d2, p12, p23, e[1]), "P2", kWeightP2));
  g.members.push_back(member(d3, quad_on_edge(d3, p23, p13, e[2]), "P3", kWeightP3));
  return g;
}

// Members P4 = R + {(i,j), (i,j+1)}, P5 = R + {(i,j), (j,j+2)}, P6 = R + {(i,j+1), (j-1,j+1)}.
CancellationGroup narrow_triple(const std::vector<Propagator>& rest, int n, int i, int j) {
  const Propagator pij = prop_between(i, j, n), pij1 = prop_between(i, j + 1, n);
  const Propagator r = prop_between(j, j + 2, n), s = prop_between(j - 1, j + 1, n);
  Diagram d4 = with_pair(rest, n, pij, pij1), d5 = with_pair(rest, n, pij, r), d6 = with_pair(rest, n, pij1, s);
  CancellationGroup g;
  g.kind = "narrow_triple";
  g.members.push_back(member(d4, quad_on_edge(d4, pij, pij1, i), "P4", "+1"));
  g.members.push_back(member(d5, Factor::variable({row_label(d5, r), cyc(j + 3, n)}), "P5", kWeightP2));
  g.members.push_back(member(d6, Factor::variable({row_label(d6, s), cyc(j - 1, n)}), "P6", kWeightP3));
  return g;
}

}  // namespace

bool has_positive_minors(const QMatrix& z) {
  const int n = z.rows(), m = z.cols();
  if (m > n) return false;
  std::vector<int> idx(m);
  for (int a = 0; a < m; ++a) idx[a] = a;
  while (true) {
    QMatrix sub(m, m);
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c) sub.at(a, c) = z.at(idx[a], c);
    if (sgn(determinant(sub)) <= 0) return false;
    int a = m - 1;
    while (a >= 0 && idx[a] == n - m + a) --a;
    if (a < 0) return true;
    ++idx[a];
    for (int b = a + 1; b < m; ++b) idx[b] = idx[b - 1] + 1;
  }
}

TwistorData positive_twistors(int n, int k, std::uint64_t seed) {
  if (k < 0 || n < k + 4) throw InputError("positive twistors need n >= k + 4");
  Sampler smp(seed);
  TwistorData d;
  d.n = n;
  d.k = k;
  const int m = k + 4;
  d.z = QMatrix(n, m);
  // Points on the moment curve at increasing positive parameters.
  Rational t = 0;
  for (int a = 0; a < n; ++a) {
    t += smp.positive(10);
    Rational pw = 1;
    for (int c = 0; c < m; ++c) {
      d.z.at(a, c) = pw;
      pw *= t;
    }
  }
  for (int c = 0; c < m; ++c) d.z0.push_back(smp.nonzero());
  if (!has_positive_minors(d.z)) throw StructuralError("moment curve sample lost positivity");
  return d;
}

Assignment localize(const Diagram& w, const TwistorData& z) {
  const int n = w.n();
  if (z.n != n || z.z.rows() != n || z.z.cols() < 4 || z.z0.size() < 4)
    throw InputError("twistor data does not match the diagram");
  auto det4 = [&](const std::vector<int>& rows, int replaced) {
    QMatrix m(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) m.at(a, c) = rows[a] == replaced ? z.z0[c] : z.z.at(rows[a] - 1, c);
    return determinant(m);
  };
  Assignment out;
  for (int r = 0; r < w.k(); ++r) {
    const auto rows = ordered_support(w.prop(r), n);
    Rational x0 = det4(rows, 0);
    if (x0 == 0) throw StructuralError("degenerate twistors for " + to_string(w.prop(r)));
    out[VarId{r + 1, 0}] = x0;
    for (int v : rows) out[VarId{r + 1, v}] = det4(rows, v);
  }
  return out;
}

std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Case1: return "1";
    case CaseTag::Case1a: return "1a";
    case CaseTag::Case2: return "2";
    case CaseTag::Case2a: return "2a";
    case CaseTag::Case3: return "3";
    case CaseTag::Case3a: return "3a";
    case CaseTag::Case3b: return "3b";
  }
  return "?";
}

Classification classify(const Diagram& w, const Factor& f) {
  require_factor(w, f);
  const int n = w.n();
  Classification c;
  if (f.kind == Factor::Kind::Variable) {
    const Propagator p = w.prop(f.var.row - 1);
    const int v = f.var.col;
    const Move mv = move_vertex(p, v, n);
    c.partner = mv.q;
    c.partner_vertex = mv.vertex;
    const int a = consecutive_start(p, n);
    if (w.contains(mv.q)) {
      c.tag = CaseTag::Case1a;
      c.note = "partner propagator already present";
    } else if (is_admissible(w.replace(p, mv.q))) {
      c.tag = a ? CaseTag::Case2 : CaseTag::Case1;
    } else if (a && (v == a || v == cyc(a + 3, n))) {
      c.tag = CaseTag::Case2a;
      c.note = "partner blocked by a propagator on edge " + std::to_string(v == a ? cyc(a + 2, n) : a);
    } else {
      throw StructuralError("partner " + to_string(mv.q) + " for " + f.to_string() + " is not admissible");
    }
    return c;
  }
  const int e = factor_edge(w, f);
  const int fa = other_end(w.prop(f.rows[0] - 1), e);
  const int fb = other_end(w.prop(f.rows[1] - 1), e);
  auto dist = [&](int x) { return ((x - e) % n + n) % n; };
  c.shared_edge = e;
  c.far_j = dist(fa) < dist(fb) ? fa : fb;
  c.far_k = dist(fa) < dist(fb) ? fb : fa;
  if (cyc(c.far_j + 1, n) == c.far_k) c.tag = CaseTag::Case3b;
  else if (w.contains(prop_between(c.far_j, c.far_k, n))) c.tag = CaseTag::Case3a;
  else c.tag = CaseTag::Case3;
  return c;
}

std::vector<std::pair<Diagram, Factor>> CancellationGroup::key() const {
  std::vector<std::pair<Diagram, Factor>> k;
  for (const auto& m : members) k.emplace_back(m.w, m.f);
  std::sort(k.begin(), k.end());
  return k;
}

CancellationGroup partners(const Diagram& w, const Factor& f) {
  const Classification c = classify(w, f);
  const int n = w.n();
  switch (c.tag) {
    case CaseTag::Case1a:
    case CaseTag::Case3a:
      throw StructuralError("factor " + f.to_string() + " has codimension at least two");
    case CaseTag::Case1:
    case CaseTag::Case2: {
      const Propagator p = w.prop(f.var.row - 1);
      const Diagram w2 = w.replace(p, *c.partner);
      GroupMember a{w, f, "", "+1"};
      GroupMember b = member(w2, Factor::variable({row_label(w2, *c.partner), c.partner_vertex}), "", "-1");
      if (b < a) std::swap(a, b);
      a.role = "A";
      b.role = "B";
      a.weight = "+1";
      b.weight = "-1";
      CancellationGroup g;
      g.kind = "pair";
      g.members = {a, b};
      return g;
    }
    case CaseTag::Case2a: {
      const Propagator r = w.prop(f.var.row - 1);
      const int a = consecutive_start(r, n);
      if (f.var.col == cyc(a + 3, n)) {
        // r = (j, j+2) blocked on edge j by its neighbour (i, j).
        const int j = a;
        auto order = edge_order(w, j);
        if (order.size() < 2 || w.prop(order.back()) != r) throw StructuralError("unexpected order on edge " + std::to_string(j));
        const Propagator p = w.prop(order[order.size() - 2]);
        return narrow_triple(without(w, {p, r}), n, other_end(p, j), j);
      }
      // s = (j-1, j+1) blocked on edge j+1 by its neighbour (i, j+1).
      const int j = cyc(a + 1, n);
      auto order = edge_order(w, cyc(j + 1, n));
      if (order.size() < 2 || w.prop(order.front()) != r) throw StructuralError("unexpected order on edge " + std::to_string(j + 1));
      const Propagator q = w.prop(order[1]);
      return narrow_triple(without(w, {q, r}), n, other_end(q, cyc(j + 1, n)), j);
    }
    case CaseTag::Case3: {
      const Propagator p = w.prop(f.rows[0] - 1), q = w.prop(f.rows[1] - 1);
      return wide_triple(without(w, {p, q}), n, {c.shared_edge, c.far_j, c.far_k});
    }
    case CaseTag::Case3b: {
      const int i = c.shared_edge, j = c.far_j;
      return narrow_triple(without(w, {prop_between(i, j, n), prop_between(i, j + 1, n)}), n, i, j);
    }
  }
  throw StructuralError("unhandled case");
}

namespace {

// Evaluated k x (n+1) matrix; rows follow the diagram's propagator order.
struct RowBuilder {
  int n;
  std::map<Propagator, std::vector<Rational>> rows;

  std::vector<Rational>& row(const Propagator& p) {
    auto [it, fresh] = rows.try_emplace(p, std::vector<Rational>(n + 1));
    return it->second;
  }
  // Entries (x, y) on the two columns of edge e.
  void put(const Propagator& p, int e, const Rational& x, const Rational& y) {
    auto& r = row(p);
    r[0] = 1;
    r[e] += x;
    r[cyc(e + 1, n)] += y;
  }
  QMatrix matrix(const Diagram& w) const {
    QMatrix m(w.k(), n + 1);
    for (int a = 0; a < w.k(); ++a) {
      const auto& r = rows.at(w.prop(a));
      for (int c = 0; c <= n; ++c) m.at(a, c) = r[c];
    }
    return m;
  }
};

bool same_row_space(const QMatrix& a, const QMatrix& b) {
  const int ra = rank(a);
  return ra == rank(b) && rank(a.stack(b)) == ra;
}

// The evaluated matrix lies on the limit locus: zero pattern inside the supports and the factor vanishes.
bool on_locus(const Diagram& w, const Factor& f, const QMatrix& m) {
  const auto sets = w.set_system();
  Assignment at;
  for (int a = 0; a < w.k(); ++a)
    for (int c = 1; c <= w.n(); ++c) {
      if (m.at(a, c) != 0 && !has(sets[a], c)) return false;
      at[VarId{a + 1, c}] = m.at(a, c);
    }
  return f.polynomial().evaluate(at) == 0;
}

void fill_rest(RowBuilder& rb, const std::vector<Propagator>& rest, Sampler& smp) {
  for (const auto& p : rest) {
    auto& r = rb.row(p);
    r[0] = 1;
    for (int v : ordered_support(p, rb.n)) r[v] = smp.nonzero();
  }
}

std::vector<Propagator> shared_rest(const CancellationGroup& g) {
  std::vector<Propagator> out;
  for (const auto& p : g.members[0].w.props()) {
    bool all = true;
    for (const auto& m : g.members) all = all && m.w.contains(p);
    if (all) out.push_back(p);
  }
  return out;
}

Rational nonunit(Sampler& smp) {
  Rational x = smp.nonzero();
  while (x == 1 || x == 0) x = smp.nonzero();
  return x;
}

bool weight_identity(const Rational& e) { return e != 1 && 1 + e / (1 - e) - 1 / (1 - e) == 0; }

bool weight_identity_symbolic() {
  const Polynomial e = Polynomial::variable(aux(1));
  const Polynomial one(Rational(1));
  // (1 - e) * (1 + e/(1-e) - 1/(1-e))
  return ((one - e) + e - one).is_zero();
}

struct TripleTrial {
  bool row_space = true;
  bool on_locus = true;
  bool weight = true;
};

TripleTrial wide_trial(const CancellationGroup& g, Sampler& smp) {
  const auto& d1 = g.members[0].w;
  const auto& d2 = g.members[1].w;
  const auto& d3 = g.members[2].w;
  const int n = d1.n();
  const int e1 = factor_edge(d1, g.members[0].f), e2 = factor_edge(d2, g.members[1].f),
            e3 = factor_edge(d3, g.members[2].f);
  const Propagator p12 = prop_between(e1, e2, n), p13 = prop_between(e1, e3, n), p23 = prop_between(e2, e3, n);
  const auto rest = shared_rest(g);
  TripleTrial out;

  auto p1_matrix = [&](RowBuilder rb, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                       const Rational& e, const Rational& gg, const Rational& h) {
    rb.rows.erase(p12);
    rb.rows.erase(p13);
    rb.put(p13, e1, a, b);
    rb.put(p13, e3, c, d);
    rb.put(p12, e1, a * e, b * e);
    rb.put(p12, e2, gg, h);
    return rb.matrix(d1);
  };

  RowBuilder base{n, {}};
  fill_rest(base, rest, smp);

  {  // P2 -> P1
    const Rational a2 = smp.nonzero(), b2 = smp.nonzero(), c2 = smp.nonzero(), d2v = smp.nonzero();
    const Rational e2v = nonunit(smp), g2 = smp.nonzero(), h2 = smp.nonzero();
    RowBuilder rb = base;
    rb.put(p12, e1, a2, b2);
    rb.put(p12, e2, c2, d2v);
    rb.put(p23, e2, c2 * e2v, d2v * e2v);
    rb.put(p23, e3, g2, h2);
    const QMatrix m2 = rb.matrix(d2);
    const Rational s = 1 - e2v;
    const Rational e = (e2v - 1) / e2v;
    const QMatrix m1 = p1_matrix(base, -e2v * a2 / s, -e2v * b2 / s, g2 / s, h2 / s, e, c2, d2v);
    out.row_space = out.row_space && same_row_space(m1, m2);
    out.on_locus = out.on_locus && on_locus(d1, g.members[0].f, m1) && on_locus(d2, g.members[1].f, m2);
    out.weight = out.weight && weight_identity(e);
  }
  {  // P3 -> P1
    const Rational a3 = smp.nonzero(), b3 = smp.nonzero(), c3 = smp.nonzero(), d3v = smp.nonzero();
    const Rational e3v = smp.nonzero(), f3 = smp.nonzero(), g3 = nonunit(smp);
    RowBuilder rb = base;
    rb.put(p23, e2, a3, b3);
    rb.put(p23, e3, c3, d3v);
    rb.put(p13, e1, e3v, f3);
    rb.put(p13, e3, c3 * g3, d3v * g3);
    const QMatrix m3 = rb.matrix(d3);
    const Rational s = 1 - g3;
    const Rational e = 1 / s;
    const QMatrix m1 = p1_matrix(base, e3v, f3, c3 * g3, d3v * g3, e, -g3 * a3 / s, -g3 * b3 / s);
    out.row_space = out.row_space && same_row_space(m1, m3);
    out.on_locus = out.on_locus && on_locus(d1, g.members[0].f, m1) && on_locus(d3, g.members[2].f, m3);
    out.weight = out.weight && weight_identity(e);
  }
  return out;
}

TripleTrial narrow_trial(const CancellationGroup& g, Sampler& smp) {
  const auto& d4 = g.members[0].w;
  const auto& d5 = g.members[1].w;
  const auto& d6 = g.members[2].w;
  const int n = d4.n();
  const Classification c = classify(d4, g.members[0].f);
  const int i = c.shared_edge, j = c.far_j;
  const Propagator pij = prop_between(i, j, n), pij1 = prop_between(i, j + 1, n);
  const Propagator r = prop_between(j, j + 2, n), s = prop_between(j - 1, j + 1, n);
  const int j1 = cyc(j + 1, n), j2 = cyc(j + 2, n), jm = cyc(j - 1, n);
  const auto rest = shared_rest(g);
  TripleTrial out;

  auto p4_matrix = [&](RowBuilder rb, const Rational& a, const Rational& b, const Rational& cc, const Rational& d,
                       const Rational& e, const Rational& gg, const Rational& h) {
    rb.rows.erase(r);
    rb.rows.erase(s);
    rb.put(pij, i, a, b);
    rb.put(pij, j, cc, d);
    rb.put(pij1, i, a * e, b * e);
    rb.put(pij1, j1, gg, h);
    return rb.matrix(d4);
  };

  RowBuilder base{n, {}};
  fill_rest(base, rest, smp);

  {  // P5 -> P4, with x[r, j+3] = 0
    const Rational a5 = smp.nonzero(), b5 = smp.nonzero(), c5 = smp.nonzero(), d5v = smp.nonzero();
    const Rational e5 = nonunit(smp), f5 = smp.nonzero(), g5 = smp.nonzero();
    RowBuilder rb = base;
    rb.put(pij, i, a5, b5);
    rb.put(pij, j, c5, d5v);
    rb.put(r, j, c5 * e5, d5v * e5 + f5);
    rb.put(r, j2, g5, 0);
    const QMatrix m5 = rb.matrix(d5);
    const Rational sc = 1 - e5;
    const Rational e = -e5 / sc;
    const QMatrix m4 = p4_matrix(base, a5, b5, c5, d5v, e, f5 / sc, g5 / sc);
    out.row_space = out.row_space && same_row_space(m4, m5);
    out.on_locus = out.on_locus && on_locus(d4, g.members[0].f, m4) && on_locus(d5, g.members[1].f, m5);
    out.weight = out.weight && weight_identity(e);
  }
  {  // P6 -> P4, with x[s, j-1] = 0
    Rational b6, c6, d6v, e6, f6, g6, h6, den;
    do {
      b6 = smp.nonzero(), c6 = smp.nonzero(), d6v = smp.nonzero();
      e6 = smp.nonzero(), f6 = smp.nonzero(), g6 = smp.nonzero(), h6 = smp.nonzero();
      den = d6v - d6v * g6 - h6;
    } while (den == 0);
    RowBuilder rb = base;
    rb.put(s, jm, 0, b6);
    rb.put(s, j1, c6, d6v);
    rb.put(pij1, i, e6, f6);
    rb.put(pij1, j1, c6 * g6, d6v * g6 + h6);
    const QMatrix m6 = rb.matrix(d6);
    const Rational beta = d6v / den;
    const Rational alpha = 1 - beta;
    const Rational e = 1 / beta;
    const QMatrix m4 =
        p4_matrix(base, beta * e6, beta * f6, alpha * b6, alpha * c6 + beta * c6 * g6, e, c6 * g6, d6v * g6 + h6);
    out.row_space = out.row_space && same_row_space(m4, m6);
    out.on_locus = out.on_locus && on_locus(d4, g.members[0].f, m4) && on_locus(d6, g.members[2].f, m6);
    out.weight = out.weight && weight_identity(e);
  }
  return out;
}

// Both members of a pair share one limit: row p on V_p - v equals row q on V_q - v'.
bool pair_trial(const CancellationGroup& g, Sampler& smp) {
  const auto& a = g.members[0];
  const auto& b = g.members[1];
  const int n = a.w.n();
  const Propagator pa = a.w.prop(a.f.var.row - 1), pb = b.w.prop(b.f.var.row - 1);
  RowBuilder rb{n, {}};
  fill_rest(rb, a.w.props(), smp);
  rb.row(pa)[a.f.var.col] = 0;
  RowBuilder rb2 = rb;
  rb2.rows[pb] = rb.rows[pa];
  rb2.rows.erase(pa);
  const QMatrix ma = rb.matrix(a.w), mb = rb2.matrix(b.w);
  return same_row_space(ma, mb) && on_locus(a.w, a.f, ma) && on_locus(b.w, b.f, mb);
}

}  // namespace

GroupCheck verify_group(const CancellationGroup& g, std::uint64_t seed, int trials) {
  GroupCheck out;
  if (g.members.empty()) throw InputError("empty cancellation group");
  const int n = g.members[0].w.n();
  const int k = g.members[0].w.k();
  std::ostringstream detail;

  // Boundary: every member's limit has the same matroid and necklaces.
  std::vector<Matroid> mats;
  std::vector<PolyMatrix> lims;
  for (const auto& m : g.members) {
    lims.push_back(limit_matrix(SymbolicMatrix(n, m.w.set_system()), m.f));
    mats.push_back(Matroid::of_matrix(lims.back()));
  }
  out.boundary_match = std::all_of(mats.begin(), mats.end(), [&](const Matroid& m) { return m == mats[0]; });
  if (!mats[0].rank_deficient() && mats[0].rank() == k) {
    out.boundary.k = k;
    out.boundary.n = n;
    out.boundary.forward = necklace(mats[0]);
    out.boundary.reverse = reverse_necklace(mats[0]);
    out.boundary.dimension = parameterization_dimension(lims[0], seed);
    for (const auto& m : g.members)
      if (m.f.kind == Factor::Kind::Variable) {
        out.boundary.rows = m.w.set_system();
        out.boundary.rows[m.f.var.row - 1] &= ~bit(m.f.var.col);
        break;
      }
    out.necklace_match = true;
    for (size_t a = 1; a < mats.size(); ++a)
      out.necklace_match = out.necklace_match && mats[a].rank() == k &&
                           necklace(mats[a]) == out.boundary.forward &&
                           reverse_necklace(mats[a]) == out.boundary.reverse;
  } else {
    detail << "boundary matroid has rank below k; ";
  }
  if (!out.boundary_match) detail << "member limits have different matroids; ";

  Sampler smp(seed);
  if (g.kind == "pair") {
    out.weight_sum = true;
    out.row_space = true;
    for (int t = 0; t < trials; ++t) out.row_space = out.row_space && pair_trial(g, smp);
    // Sign: x[p,v] = -x[q,v'] at positive twistors.
    out.sign = true;
    const auto& a = g.members[0];
    const auto& b = g.members[1];
    for (int t = 0; t < std::max(3, trials); ++t) {
      const TwistorData z = positive_twistors(n, k, smp.next());
      const Rational xa = localize(a.w, z).at(a.f.var);
      const Rational xb = localize(b.w, z).at(b.f.var);
      if (xa != -xb) {
        out.sign = false;
        detail << "sign fails: " << a.f.to_string() << " = " << to_string(xa) << ", " << b.f.to_string() << " = "
               << to_string(xb) << "; ";
        break;
      }
    }
  } else {
    out.weight_sum = weight_identity_symbolic();
    out.row_space = true;
    bool locus = true;
    try {
      for (int t = 0; t < trials; ++t) {
        TripleTrial tt = g.kind == "wide_triple" ? wide_trial(g, smp) : narrow_trial(g, smp);
        out.row_space = out.row_space && tt.row_space && tt.on_locus;
        out.weight_sum = out.weight_sum && tt.weight;
        locus = locus && tt.on_locus;
      }
    } catch (const std::exception& e) {
      out.row_space = false;
      detail << "members do not fit the triple template (" << e.what() << "); ";
    }
    if (!locus) detail << "reparameterized point leaves a limit locus; ";
    out.sign = true;
  }
  if (!out.row_space) detail << "row spaces differ; ";
  if (!out.weight_sum) detail << "weights do not sum to zero; ";
  out.detail = detail.str();
  if (!out.detail.empty()) out.detail.resize(out.detail.size() - 2);
  return out;
}

AmplitudeReport amplitude_report(int k, int n, std::uint64_t seed, int trials, unsigned threads) {
  AmplitudeReport rep;
  rep.k = k;
  rep.n = n;
  rep.seed = seed;
  rep.trials = trials;
  const auto diagrams = enumerate(k, n);
  rep.diagrams = static_cast<int>(diagrams.size());

  using Key = std::vector<std::pair<Diagram, Factor>>;
  std::map<Key, CancellationGroup> groups;
  std::map<std::pair<Diagram, Factor>, Key> assigned;
  std::set<std::pair<Diagram, Factor>> codim_one;

  for (const auto& w : diagrams) {
    for (const auto& f : r_poly_edge(w).factors) {
      const std::string where = f.to_string() + " in " + to_string(w);
      const CodimVerdict cv = factor_codim(w, f, seed);
      if (!cv.consistent) rep.findings.push_back("inconsistent codimension verdicts for " + where);
      Classification c;
      try {
        c = classify(w, f);
      } catch (const StructuralError& e) {
        rep.findings.push_back(std::string("unclassified ") + where + ": " + e.what());
        continue;
      }
      if (is_codim_two(c.tag)) {
        rep.excluded.push_back({w, f, c.tag});
        if (cv.codim != Codim::AtLeastTwo)
          rep.findings.push_back("case " + to_string(c.tag) + " factor has codimension one: " + where);
        continue;
      }
      if (cv.codim != Codim::One) {
        rep.findings.push_back("case " + to_string(c.tag) + " factor has codimension two: " + where);
        continue;
      }
      ++rep.codim_one_factors;
      codim_one.insert({w, f});
      try {
        CancellationGroup g = partners(w, f);
        Key key = g.key();
        assigned[{w, f}] = key;
        groups.try_emplace(key, std::move(g));
      } catch (const StructuralError& e) {
        rep.findings.push_back(std::string("no partners for ") + where + ": " + e.what());
      }
    }
  }

  // Symmetry: each member of a group must be a codim-1 factor that maps back to the same group.
  for (const auto& [key, g] : groups) {
    for (const auto& m : g.members) {
      const std::pair<Diagram, Factor> id{m.w, m.f};
      if (!codim_one.count(id)) {
        rep.findings.push_back("group member " + m.f.to_string() + " in " + to_string(m.w) +
                               " is not a codim-1 factor of the enumeration");
        continue;
      }
      auto it = assigned.find(id);
      if (it != assigned.end() && it->second != key)
        rep.findings.push_back("factor " + m.f.to_string() + " in " + to_string(m.w) + " lies in two groups");
    }
  }

  for (auto& [key, g] : groups) rep.groups.push_back(std::move(g));
  rep.checks.resize(rep.groups.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<size_t>(1, rep.groups.size()));
  std::atomic<size_t> next{0};
  std::vector<std::string> errors(rep.groups.size());
  auto work = [&] {
    for (size_t a = next++; a < rep.groups.size(); a = next++) {
      try {
        rep.checks[a] = verify_group(rep.groups[a], seed * 0x9e3779b97f4a7c15ULL + a + 1, trials);
      } catch (const std::exception& e) {
        errors[a] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (size_t a = 0; a < rep.groups.size(); ++a) {
    const auto& g = rep.groups[a];
    std::string label = g.kind + " at " + to_string(g.members[0].w);
    if (!errors[a].empty()) rep.findings.push_back("verification error for " + label + ": " + errors[a]);
    else if (!rep.checks[a].ok()) rep.findings.push_back("unverified " + label + ": " + rep.checks[a].detail);
  }
  return rep;
}

}  // namespace wlpole
