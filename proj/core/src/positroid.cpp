#include "wlpole/positroid.hpp"

#include <algorithm>
#include <numeric>

namespace wlpole {

namespace {

std::vector<int> shifted_order(ColumnSet s, int a, int n) {
  auto el = elements(s);
  std::sort(el.begin(), el.end(), [&](int x, int y) { return ((x - a) % n + n) % n < ((y - a) % n + n) % n; });
  return el;
}

}  // namespace

bool gale_leq(ColumnSet a_set, ColumnSet b_set, int a, int n) {
  if (card(a_set) != card(b_set)) throw InputError("Gale order compares sets of equal size");
  auto x = shifted_order(a_set, a, n);
  auto y = shifted_order(b_set, a, n);
  for (size_t i = 0; i < x.size(); ++i)
    if (((x[i] - a) % n + n) % n > ((y[i] - a) % n + n) % n) return false;
  return true;
}

GrassmannNecklace necklace(const Matroid& m) {
  if (m.rank() == 0) throw StructuralError("necklace of a rank 0 matroid");
  GrassmannNecklace nk{m.n(), m.rank(), {}};
  for (int a = 1; a <= m.n(); ++a) {
    ColumnSet s = 0;
    int r = 0;
    for (int t = 0; t < m.n() && r < m.rank(); ++t) {
      int c = cyc(a + t, m.n());
      if (m.rank(s | bit(c)) > r) {
        s |= bit(c);
        ++r;
      }
    }
    nk.sets.push_back(s);
  }
  return nk;
}

GrassmannNecklace reverse_necklace(const Matroid& m) {
  if (m.rank() == 0) throw StructuralError("necklace of a rank 0 matroid");
  GrassmannNecklace nk{m.n(), m.rank(), {}};
  for (int j = 1; j <= m.n(); ++j) {
    ColumnSet s = 0;
    int r = 0;
    for (int t = 1; t <= m.n() && r < m.rank(); ++t) {
      int c = cyc(j - t, m.n());
      if (m.rank(s | bit(c)) > r) {
        s |= bit(c);
        ++r;
      }
    }
    nk.sets.push_back(s);
  }
  return nk;
}

std::string necklace_string(const GrassmannNecklace& nk) {
  std::string out = "{";
  for (int a = 1; a <= static_cast<int>(nk.sets.size()); ++a) {
    if (a > 1) out += ",";
    auto el = shifted_order(nk.sets[a - 1], a, nk.n);
    if (nk.n < 10) {
      for (int x : el) out += std::to_string(x);
    } else {
      out += set_string(nk.sets[a - 1]);
    }
  }
  return out + "}";
}

std::vector<Polynomial> necklace_minors(const PolyMatrix& m, const GrassmannNecklace& nk) {
  std::vector<Polynomial> out;
  for (ColumnSet s : nk.sets) out.push_back(m.maximal_minor(s));
  return out;
}

std::string to_string(MinimalityStatus s) {
  switch (s) {
    case MinimalityStatus::Minimal: return "minimal";
    case MinimalityStatus::NotMinimal: return "not_minimal";
    case MinimalityStatus::NotPositroid: return "not_positroid";
    case MinimalityStatus::RankDeficient: return "rank_deficient";
  }
  return "?";
}

MinimalityReport is_minimal(int n, const std::vector<ColumnSet>& sets) {
  if (sets.empty()) throw InputError("empty set system");
  MinimalityReport rep;
  rep.k = static_cast<int>(sets.size());
  for (auto s : sets) rep.entries += card(s);
  rep.bound = rep.entries - rep.k;
  auto m = Matroid::transversal(n, sets);
  if (m.rank_deficient()) {
    rep.status = MinimalityStatus::RankDeficient;
    return rep;
  }
  if (!is_positroid(m).positroid) {
    rep.status = MinimalityStatus::NotPositroid;
    return rep;
  }
  const std::uint64_t all = (std::uint64_t{1} << rep.k) - 1;
  for (std::uint64_t t = 1; t <= all; ++t) {
    ColumnSet u = 0;
    int mx = 0;
    for (int i = 0; i < rep.k; ++i)
      if ((t >> i) & 1U) {
        u |= sets[i];
        mx = std::max(mx, card(sets[i]));
      }
    if (card(u) < mx + std::popcount(t) - 1) {
      rep.status = MinimalityStatus::NotMinimal;
      rep.violating_family = t;
      return rep;
    }
  }
  rep.dimension = rep.bound;
  return rep;
}

int parameterization_dimension(const PolyMatrix& m, std::uint64_t seed, int draws) {
  const auto vars = m.variables();
  const int k = m.rows();
  std::vector<std::vector<Polynomial>> grads;
  auto cols = elements(full_set(m.n));
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  const int nc = static_cast<int>(cols.size());
  if (k > nc) return -1;
  while (true) {
    ColumnSet s = 0;
    for (int i : idx) s |= bit(cols[i]);
    Polynomial p = m.maximal_minor(s);
    if (!p.is_zero()) {
      std::vector<Polynomial> g;
      for (const auto& v : vars) g.push_back(p.derivative(v));
      grads.push_back(std::move(g));
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == nc - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (grads.empty()) return -1;
  Sampler smp(seed);
  int best = 0;
  for (int d = 0; d < draws; ++d) {
    Assignment a = random_assignment(vars, smp);
    QMatrix j(static_cast<int>(grads.size()), static_cast<int>(vars.size()));
    for (size_t r = 0; r < grads.size(); ++r)
      for (size_t c = 0; c < vars.size(); ++c) j.at(static_cast<int>(r), static_cast<int>(c)) = grads[r][c].evaluate(a);
    best = std::max(best, rank(j));
  }
  return best - 1;
}

CellDescriptor describe_cell(int n, const std::vector<ColumnSet>& sets) {
  CellDescriptor cd;
  cd.n = n;
  cd.k = static_cast<int>(sets.size());
  cd.rows = sets;
  auto m = Matroid::transversal(n, sets);
  cd.forward = necklace(m);
  cd.reverse = reverse_necklace(m);
  cd.dimension = is_minimal(n, sets).dimension;
  return cd;
}

BoundaryRelation is_boundary_of(const Matroid& boundary, const Matroid& cell) {
  if (boundary.rank() != cell.rank() || boundary.n() != cell.n())
    throw InputError("boundary test needs matroids of equal rank on the same ground set");
  BoundaryRelation rel;
  rel.bases_contained = std::includes(cell.bases().begin(), cell.bases().end(), boundary.bases().begin(),
                                      boundary.bases().end());
  rel.proper = boundary.bases().size() < cell.bases().size();
  if (boundary.rank() > 0) {
    auto nb = necklace(boundary);
    auto nc = necklace(cell);
    for (int a = 1; a <= cell.n(); ++a)
      if (nb.sets[a - 1] != nc.sets[a - 1]) {
        rel.differing_index = a;
        rel.boundary_entry = nb.sets[a - 1];
        rel.cell_entry = nc.sets[a - 1];
        break;
      }
  }
  return rel;
}

}  // namespace wlpole
