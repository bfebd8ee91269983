#include "wlpole/factor.hpp"

#include <algorithm>

#include "wlpole/common.hpp"

namespace wlpole {

Factor Factor::variable(VarId v) {
  Factor f;
  f.kind = Kind::Variable;
  f.var = v;
  return f;
}

Factor Factor::minor2(int a, int b, int i, int j) {
  if (a == b || i == j) throw InputError("2x2 factor needs two rows and two columns");
  Factor f;
  f.kind = Kind::Minor2;
  f.rows = {std::min(a, b), std::max(a, b)};
  f.cols = {std::min(i, j), std::max(i, j)};
  return f;
}

Polynomial Factor::polynomial() const {
  if (kind == Kind::Variable) return Polynomial::variable(var);
  auto x = [](int r, int c) { return Polynomial::variable(VarId{r, c}); };
  return x(rows[0], cols[0]) * x(rows[1], cols[1]) - x(rows[0], cols[1]) * x(rows[1], cols[0]);
}

std::string Factor::to_string() const {
  if (kind == Kind::Variable) return wlpole::to_string(var);
  auto x = [](int r, int c) { return wlpole::to_string(VarId{r, c}); };
  return "(" + x(rows[0], cols[0]) + "*" + x(rows[1], cols[1]) + " - " + x(rows[0], cols[1]) + "*" +
         x(rows[1], cols[0]) + ")";
}

namespace {

Polynomial divide_monomial(const Polynomial& p, const Monomial& m) {
  Polynomial r;
  for (auto& [t, c] : p.terms()) r += Polynomial::term(t / m, c);
  return r;
}

}  // namespace

Factorization structured_factorize(const Polynomial& f) {
  Factorization fz;
  if (f.is_zero()) {
    fz.residual = f;
    return fz;
  }
  Polynomial g = f;
  for (const VarId& v : f.variables()) {
    int e = -1;
    for (auto& [m, _] : g.terms()) {
      int x = m.exponent(v);
      e = e < 0 ? x : std::min(e, x);
    }
    if (e > 0) {
      fz.parts.emplace_back(Factor::variable(v), e);
      g = divide_monomial(g, Monomial(v, e));
    }
  }
  const auto vars = g.variables();
  std::vector<VarId> vs(vars.begin(), vars.end());
  for (size_t x = 0; x < vs.size() && !g.is_constant(); ++x) {
    for (size_t y = x + 1; y < vs.size(); ++y) {
      const VarId ai = vs[x], bj = vs[y];
      if (ai.row >= bj.row || ai.col >= bj.col) continue;
      if (!vars.count({ai.row, bj.col}) || !vars.count({bj.row, ai.col})) continue;
      Factor d = Factor::minor2(ai.row, bj.row, ai.col, bj.col);
      const Polynomial dp = d.polynomial();
      int mult = 0;
      while (auto q = g.divide_exact(dp)) {
        g = *q;
        ++mult;
      }
      if (mult) fz.parts.emplace_back(d, mult);
    }
  }
  std::sort(fz.parts.begin(), fz.parts.end());
  fz.residual = g;
  fz.structured = g.is_constant();
  return fz;
}

Polynomial recompose(const Factorization& fz) {
  Polynomial p = fz.residual;
  for (auto& [f, e] : fz.parts)
    for (int i = 0; i < e; ++i) p *= f.polynomial();
  return p;
}

}  // namespace wlpole
