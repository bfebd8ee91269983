#include "wlpole/poles.hpp"

#include <algorithm>
#include <set>

namespace wlpole {

Polynomial RPolynomial::product() const {
  Polynomial p(1);
  for (const auto& f : factors) p *= f.polynomial();
  return p;
}

bool RPolynomial::contains(const Factor& f) const {
  return std::binary_search(factors.begin(), factors.end(), f);
}

namespace {

RPolynomial from_set(const std::set<Factor>& s) { return RPolynomial{{s.begin(), s.end()}}; }

void require_admissible(const Diagram& w) {
  auto v = validate(w);
  if (!v.admissible()) throw InputError("inadmissible diagram " + to_string(w) + ": " + v.reason);
}

RPolynomial from_minors(int n, const std::vector<ColumnSet>& sets, bool reverse) {
  auto m = Matroid::transversal(n, sets);
  if (m.rank_deficient()) throw StructuralError("set system is rank deficient");
  auto nk = reverse ? reverse_necklace(m) : necklace(m);
  auto pm = matrix_from_sets(n, sets).poly();
  std::set<Factor> out;
  int a = 1;
  for (const auto& minor : necklace_minors(pm, nk)) {
    auto fz = structured_factorize(minor);
    if (!fz.structured)
      throw StructuralError("unstructured residual in necklace minor " + std::to_string(a) + ": " +
                            fz.residual.to_string());
    for (auto& [f, _] : fz.parts) out.insert(f);
    ++a;
  }
  return from_set(out);
}

int far_end(const Propagator& p, int e) { return p.e1 == e ? p.e2 : p.e1; }

bool adjacent_edges(int a, int b, int n) { return cyc(a + 1, n) == b || cyc(b + 1, n) == a; }

}  // namespace

RPolynomial r_poly_edge(const Diagram& w) {
  require_admissible(w);
  const int n = w.n();
  std::set<Factor> out;
  for (int e = 1; e <= n; ++e) {
    auto q = edge_order(w, e);
    if (q.empty()) continue;
    const int e1 = cyc(e + 1, n);
    out.insert(Factor::variable({q.front() + 1, e1}));
    for (size_t r = 0; r + 1 < q.size(); ++r) out.insert(Factor::minor2(q[r] + 1, q[r + 1] + 1, e, e1));
    out.insert(Factor::variable({q.back() + 1, e}));
  }
  return from_set(out);
}

RPolynomial r_poly_necklace(int n, const std::vector<ColumnSet>& sets) { return from_minors(n, sets, false); }
RPolynomial r_poly_reverse(int n, const std::vector<ColumnSet>& sets) { return from_minors(n, sets, true); }

REqualityReport check_r_equalities(const Diagram& w) {
  REqualityReport rep;
  rep.edge = r_poly_edge(w);
  rep.forward = r_poly_necklace(w.n(), w.set_system());
  rep.reverse = r_poly_reverse(w.n(), w.set_system());
  return rep;
}

int factor_edge(const Diagram& w, const Factor& f) {
  const int n = w.n();
  if (f.kind == Factor::Kind::Variable) {
    if (f.var.row < 1 || f.var.row > w.k()) return 0;
    const auto& p = w.prop(f.var.row - 1);
    for (int e : {p.e1, p.e2})
      if (f.var.col == e || f.var.col == cyc(e + 1, n)) return e;
    return 0;
  }
  int e = 0;
  if (cyc(f.cols[0] + 1, n) == f.cols[1]) e = f.cols[0];
  else if (cyc(f.cols[1] + 1, n) == f.cols[0]) e = f.cols[1];
  if (e == 0) return 0;
  for (int r : f.rows) {
    if (r < 1 || r > w.k()) return 0;
    const auto& p = w.prop(r - 1);
    if (p.e1 != e && p.e2 != e) return 0;
  }
  return e;
}

PolyMatrix limit_matrix(const SymbolicMatrix& m, const Factor& f) {
  PolyMatrix pm = m.poly();
  if (f.kind == Factor::Kind::Variable) {
    int r = m.row_of_label(f.var.row);
    if (r < 0 || f.var.col > m.n()) throw InputError("factor outside the matrix");
    pm.entries[r][f.var.col] = Polynomial();
    return pm;
  }
  int ra = m.row_of_label(f.rows[0]);
  int rb = m.row_of_label(f.rows[1]);
  if (ra < 0 || rb < 0) throw InputError("factor outside the matrix");
  const Polynomial t = Polynomial::variable(aux(1));
  for (int c : f.cols) pm.entries[rb][c] = t * pm.entries[ra][c];
  return pm;
}

SpanGrowth span_growth(const PolyMatrix& m, std::uint64_t seed) {
  const int k = m.rows();
  Sampler smp(seed);
  auto span_dim = [&](std::uint64_t rows) {
    if (rows == 0) return 0;
    std::vector<Polynomial> comb(m.n + 1);
    for (int i = 0; i < k; ++i) {
      if (!((rows >> i) & 1U)) continue;
      const Polynomial c = Polynomial::variable(aux(1000 + i));
      for (int col = 0; col <= m.n; ++col) comb[col] += c * m.entries[i][col];
    }
    std::set<VarId> vs;
    for (auto& p : comb) {
      auto v = p.variables();
      vs.insert(v.begin(), v.end());
    }
    std::vector<VarId> vars(vs.begin(), vs.end());
    int best = 0;
    for (int d = 0; d < 2; ++d) {
      Assignment a = random_assignment(vars, smp);
      QMatrix j(m.n + 1, static_cast<int>(vars.size()));
      for (int col = 0; col <= m.n; ++col)
        for (size_t v = 0; v < vars.size(); ++v) j.at(col, static_cast<int>(v)) = comb[col].derivative(vars[v]).evaluate(a);
      best = std::max(best, rank(j));
    }
    return best;
  };
  const std::uint64_t all = (std::uint64_t{1} << k) - 1;
  std::vector<int> dims(all + 1, -1);
  auto dim = [&](std::uint64_t s) {
    if (dims[s] < 0) dims[s] = span_dim(s);
    return dims[s];
  };
  SpanGrowth g;
  for (std::uint64_t s = 0; s < all; ++s)
    for (int j = 0; j < k; ++j) {
      if ((s >> j) & 1U) continue;
      if (dim(s | (std::uint64_t{1} << j)) <= dim(s)) {
        g.holds = false;
        g.subset = s;
        g.added_row = j;
        return g;
      }
    }
  return g;
}

std::string to_string(Codim c) { return c == Codim::One ? "1" : ">=2"; }

CodimVerdict factor_codim(const Diagram& w, const Factor& f, std::uint64_t seed) {
  auto r = r_poly_edge(w);
  if (!r.contains(f)) throw InputError(f.to_string() + " is not a factor of R for " + to_string(w));
  const int n = w.n();
  const int k = w.k();
  auto sets = w.set_system();
  SymbolicMatrix sm(n, sets);
  PolyMatrix lim = limit_matrix(sm, f);
  CodimVerdict v;
  v.cell_dimension = 3 * k;
  v.numeric_dimension = parameterization_dimension(lim, seed);
  if (f.kind == Factor::Kind::Variable) {
    auto reduced = sets;
    reduced[f.var.row - 1] &= ~bit(f.var.col);
    v.combinatorial_one = is_minimal(n, reduced).status == MinimalityStatus::Minimal;
  } else {
    const int e = factor_edge(w, f);
    const int j = far_end(w.prop(f.rows[0] - 1), e);
    const int kk = far_end(w.prop(f.rows[1] - 1), e);
    bool third = j != kk && !adjacent_edges(j, kk, n) && w.contains(make_propagator(j, kk, n));
    v.combinatorial_one = !third;
    v.span_growth = span_growth(lim, seed ^ 0x5bd1e995ULL).holds;
  }
  v.codim = v.combinatorial_one ? Codim::One : Codim::AtLeastTwo;
  const bool numeric_one = v.numeric_dimension == v.cell_dimension - 1;
  // Span growth implies codim 1. The converse fails for k >= 3 when a row lies in the
  // column span of two others.
  const bool span_ok = f.kind == Factor::Kind::Variable || !v.span_growth || v.combinatorial_one;
  v.consistent = numeric_one == v.combinatorial_one && span_ok;
  return v;
}

VanishingWitness vanish_on_boundary_witness(const SymbolicMatrix& m, const Factor& f, std::uint64_t seed) {
  Sampler smp(seed);
  VanishingWitness wit;
  wit.point = random_assignment(m.variables(), smp);
  if (f.kind == Factor::Kind::Variable) {
    if (!wit.point.count(f.var)) throw InputError("factor variable not in matrix");
    wit.point[f.var] = 0;
  } else {
    const Rational lambda = smp.positive();
    for (int c : f.cols) {
      VarId a{f.rows[0], c}, b{f.rows[1], c};
      if (!wit.point.count(a) || !wit.point.count(b)) throw InputError("factor entries not in matrix");
      wit.point[b] = lambda * wit.point[a];
    }
  }
  auto mat = Matroid::transversal(m.n(), m.supports());
  auto nk = necklace(mat);
  auto minors = necklace_minors(m.poly(), nk);
  for (size_t a = 0; a < minors.size(); ++a)
    if (minors[a].evaluate(wit.point) == 0) wit.vanishing.push_back(static_cast<int>(a) + 1);
  return wit;
}

VanishingWitness vanish_on_boundary_witness(const Diagram& w, const Factor& f, std::uint64_t seed) {
  return vanish_on_boundary_witness(SymbolicMatrix(w.n(), w.set_system()), f, seed);
}

std::string describe(const Diagram& w, const Factor& f) {
  auto p = [&](int row) { return row >= 1 && row <= w.k() ? to_string(w.prop(row - 1)) : std::to_string(row); };
  auto x = [&](int row, int c) { return "x[" + p(row) + "," + std::to_string(c) + "]"; };
  if (f.kind == Factor::Kind::Variable) return x(f.var.row, f.var.col);
  return "(" + x(f.rows[0], f.cols[0]) + "*" + x(f.rows[1], f.cols[1]) + " - " + x(f.rows[0], f.cols[1]) + "*" +
         x(f.rows[1], f.cols[0]) + ")";
}

}  // namespace wlpole
