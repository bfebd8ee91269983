#include "wlpole/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace wlpole {

namespace {

// Visit every subset of `s` of size r.
template <class F>
void for_each_subset_of_size(ColumnSet s, int r, F&& f) {
  auto el = elements(s);
  const int m = static_cast<int>(el.size());
  if (r > m || r < 0) return;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    ColumnSet t = 0;
    for (int i : idx) t |= bit(el[i]);
    f(t);
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Proper nonempty submasks of f that contain its lowest element.
bool splits(const Matroid& m, ColumnSet f, ColumnSet base) {
  if (card(f) <= 1) return false;
  const ColumnSet low = f & (~f + 1);
  const ColumnSet rest = f & ~low;
  const int rf = m.rank(f | base) - m.rank(base);
  for (ColumnSet sub = rest;; sub = (sub - 1) & rest) {
    ColumnSet s = sub | low;
    if (s != f) {
      int rs = m.rank(s | base) - m.rank(base);
      int rt = m.rank((f & ~s) | base) - m.rank(base);
      if (rs + rt == rf) return true;
    }
    if (sub == 0) break;
  }
  return false;
}

FlatReport structure_on(const Matroid& m, ColumnSet ground) {
  FlatReport rep;
  const ColumnSet g = ground;
  for (ColumnSet sub = g;; sub = (sub - 1) & g) {
    const ColumnSet f = sub;
    const int rf = m.rank(f);
    bool flat = true;
    for (int x : elements(g & ~f))
      if (m.rank(f | bit(x)) == rf) {
        flat = false;
        break;
      }
    if (flat) {
      rep.flats_by_rank[rf].push_back(f);
      if (is_cyclic_set(m, f)) rep.cyclic_flats.push_back(f);
    }
    if (sub == 0) break;
  }
  for (auto& [_, v] : rep.flats_by_rank) std::sort(v.begin(), v.end());
  std::sort(rep.cyclic_flats.begin(), rep.cyclic_flats.end());
  for (ColumnSet f : rep.cyclic_flats) {
    if (f == 0 || f == g) continue;
    if (!splits(m, f, 0) && !splits(m, g & ~f, f)) rep.flacets.push_back(f);
  }
  rep.connected = !splits(m, g, 0);
  return rep;
}

}  // namespace

Matroid Matroid::transversal(int n, std::vector<ColumnSet> rows) {
  if (n < 1 || n > kMaxColumns) throw InputError("n out of range");
  for (auto r : rows)
    if (r & ~full_set(n)) throw InputError("row support outside [1," + std::to_string(n) + "]");
  Matroid m;
  m.n_ = n;
  m.rows_ = std::move(rows);
  m.rank_ = m.matching_rank(full_set(n));
  for_each_subset_of_size(full_set(n), m.rank_, [&](ColumnSet s) {
    if (m.matching_rank(s) == m.rank_) m.bases_.push_back(s);
  });
  std::sort(m.bases_.begin(), m.bases_.end());
  return m;
}

Matroid Matroid::from_bases(int n, std::vector<ColumnSet> bases) {
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  Matroid m;
  m.n_ = n;
  m.rank_ = card(bases[0]);
  for (auto b : bases) {
    if (card(b) != m.rank_) throw InputError("bases of different sizes");
    if (b & ~full_set(n)) throw InputError("basis outside ground set");
  }
  m.bases_ = std::move(bases);
  return m;
}

Matroid Matroid::of_matrix(const PolyMatrix& pm) {
  std::vector<ColumnSet> bases;
  for_each_subset_of_size(full_set(pm.n), pm.rows(), [&](ColumnSet s) {
    if (!pm.maximal_minor(s).is_zero()) bases.push_back(s);
  });
  if (bases.empty()) throw StructuralError("matrix does not have full row rank");
  return from_bases(pm.n, std::move(bases));
}

int Matroid::matching_rank(ColumnSet s) const {
  const int r = static_cast<int>(rows_.size());
  std::vector<int> row_match(r, -1);
  int matched = 0;
  for (int c : elements(s)) {
    std::vector<char> seen(r, 0);
    // Kuhn augmenting path from column c.
    auto augment = [&](auto&& self, int col) -> bool {
      for (int i = 0; i < r; ++i) {
        if (!has(rows_[i], col) || seen[i]) continue;
        seen[i] = 1;
        if (row_match[i] < 0 || self(self, row_match[i])) {
          row_match[i] = col;
          return true;
        }
      }
      return false;
    };
    if (augment(augment, c)) ++matched;
  }
  return matched;
}

int Matroid::rank(ColumnSet s) const {
  s &= ground();
  if (!rows_.empty() || bases_.empty()) return matching_rank(s);
  int best = 0;
  for (auto b : bases_) best = std::max(best, card(b & s));
  return best;
}

bool Matroid::is_basis(ColumnSet s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

ColumnSet Matroid::closure(ColumnSet s) const {
  const int r = rank(s);
  ColumnSet c = s;
  for (int x : elements(ground() & ~s))
    if (rank(s | bit(x)) == r) c |= bit(x);
  return c;
}

std::vector<ColumnSet> Matroid::circuits() const {
  std::vector<ColumnSet> out;
  for (int size = 1; size <= rank_ + 1; ++size) {
    for_each_subset_of_size(ground(), size, [&](ColumnSet s) {
      if (rank(s) != size - 1) return;
      for (int x : elements(s))
        if (rank(s & ~bit(x)) != size - 1) return;
      out.push_back(s);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Matroid::restriction_connected(ColumnSet f) const { return !splits(*this, f & ground(), 0); }

bool Matroid::contraction_connected(ColumnSet f) const {
  return !splits(*this, ground() & ~f, f & ground());
}

std::vector<ColumnSet> Matroid::components() const {
  std::vector<int> parent(n_ + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ColumnSet c : circuits()) {
    auto el = elements(c);
    for (size_t i = 1; i < el.size(); ++i) parent[find(el[i])] = find(el[0]);
  }
  std::vector<ColumnSet> comp(n_ + 1, 0);
  for (int x = 1; x <= n_; ++x) comp[find(x)] |= bit(x);
  std::vector<ColumnSet> out;
  for (auto c : comp)
    if (c) out.push_back(c);
  std::sort(out.begin(), out.end(), [](ColumnSet a, ColumnSet b) { return (a & (~a + 1)) < (b & (~b + 1)); });
  return out;
}

FlatReport structure(const Matroid& m) { return structure_on(m, m.ground()); }

bool is_cyclic_set(const Matroid& m, ColumnSet s) {
  const int r = m.rank(s);
  for (int x : elements(s))
    if (m.rank(s & ~bit(x)) != r) return false;
  return true;
}

bool is_cyclic_interval(ColumnSet s, ColumnSet within, int n) {
  (void)n;
  if (s & ~within) return false;
  auto el = elements(within);
  const size_t m = el.size();
  int exits = 0;
  for (size_t i = 0; i < m; ++i)
    if (has(s, el[i]) && !has(s, el[(i + 1) % m])) ++exits;
  return exits <= 1;
}

PositroidVerdict is_positroid(const Matroid& m) {
  PositroidVerdict v;
  auto comps = m.components();
  for (size_t a = 0; a < comps.size(); ++a)
    for (size_t b = a + 1; b < comps.size(); ++b) {
      // Cyclic sequence of labels restricted to the two blocks; more than two runs is a crossing.
      const ColumnSet both = comps[a] | comps[b];
      if (!is_cyclic_interval(comps[a], both, m.n())) {
        v.positroid = false;
        v.witness = "components " + set_string(comps[a]) + " and " + set_string(comps[b]) + " cross";
        return v;
      }
    }
  for (ColumnSet c : comps) {
    if (card(c) < 2) continue;
    auto rep = structure_on(m, c);
    for (ColumnSet f : rep.flacets)
      if (!is_cyclic_interval(f, c, m.n())) {
        v.positroid = false;
        v.witness = "flacet " + set_string(f) + " is not a cyclic interval";
        return v;
      }
  }
  return v;
}

}  // namespace wlpole
