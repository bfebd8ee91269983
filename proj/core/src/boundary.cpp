#include "wlpole/boundary.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "wlpole/factor.hpp"

namespace wlpole {

namespace {

// First element of a proper cyclic interval in its cyclic order.
int interval_start(ColumnSet s, int n) {
  for (int x : elements(s))
    if (!has(s, cyc(x - 1, n))) return x;
  return elements(s).front();
}

// Elements of s walking forward from `from`.
std::vector<int> walk(ColumnSet s, int from, int n) {
  std::vector<int> out;
  for (int t = 0; t < n; ++t) {
    int x = cyc(from + t, n);
    if (has(s, x)) out.push_back(x);
  }
  return out;
}

std::set<Factor> factor_set(const Polynomial& p, bool& ok) {
  std::set<Factor> out;
  auto fz = structured_factorize(p);
  if (!fz.structured || p.is_zero()) ok = false;
  for (auto& [f, _] : fz.parts) out.insert(f);
  return out;
}

std::optional<std::vector<ColumnSet>> build_boundary(const std::vector<ColumnSet>& rows, ColumnSet v, ColumnSet w,
                                                     int n) {
  std::vector<ColumnSet> out = rows;
  int removed = 0;
  for (auto& r : out)
    if (r & w) {
      removed += card(r & w);
      r &= ~w;
    }
  const ColumnSet u = v | w;
  int available = 0;
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i] & v) available += card(u & ~out[i]);
  if (available < removed || removed == 0) return std::nullopt;
  const auto order = walk(u, interval_start(u, n), n);
  int left = removed;
  for (size_t i = 0; i < rows.size() && left > 0; ++i) {
    if (!(rows[i] & v)) continue;
    for (int c : order) {
      if (left == 0) break;
      if (!has(out[i], c)) {
        out[i] |= bit(c);
        --left;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<NoPoleCertificate> boundary_without_pole(int n, const std::vector<ColumnSet>& sets) {
  auto m = Matroid::transversal(n, sets);
  if (m.rank_deficient()) throw StructuralError("set system is rank deficient");
  const int k = m.rank();
  const auto rep = structure(m);
  const auto nk = necklace(m);
  const auto pm = matrix_from_sets(n, sets).poly();
  const auto circuits = m.circuits();

  std::map<std::vector<ColumnSet>, NoPoleCertificate> found;
  for (ColumnSet v : rep.cyclic_flats)
    for (ColumnSet w : rep.cyclic_flats) {
      if (v == w) continue;
      if (m.rank(v) >= k || m.rank(w) >= k) continue;
      if ((v & ~w) == 0 || (w & ~v) == 0) continue;
      if (!is_cyclic_interval(v, n) || !is_cyclic_interval(w, n) || !is_cyclic_interval(v | w, n)) continue;
      if (m.rank(v & ~w) < m.rank(w & ~v)) continue;

      auto rows = build_boundary(sets, v, w, n);
      if (!rows) continue;
      NoPoleCertificate cert;
      cert.flat_v = v;
      cert.flat_w = w;
      cert.boundary_rows = *rows;
      auto mb = Matroid::transversal(n, *rows);
      cert.rank_preserved = mb.rank() == k;
      if (!cert.rank_preserved) continue;
      cert.circuits_preserved = true;
      for (ColumnSet c : circuits)
        if (((c & ~v) == 0 || (c & ~w) == 0) && mb.is_independent(c)) cert.circuits_preserved = false;
      if (!cert.circuits_preserved) continue;
      cert.relation = is_boundary_of(mb, m);

      const ColumnSet u = v | w;
      const bool whole = u == full_set(n);
      const int start = whole ? interval_start(v, n) : interval_start(u, n);
      const ColumnSet first = has(v, start) ? v : w;
      const ColumnSet second = first == v ? w : v;
      auto non_loop = [&](ColumnSet s, int from) {
        for (int x : walk(s, from, n))
          if (m.rank(bit(x)) > 0) return x;
        return 0;
      };
      cert.v = non_loop(first, start);
      cert.w = non_loop(second, interval_start(second, n));
      if (cert.v && cert.w) {
        const auto nkb = necklace(mb);
        cert.i_v = nk.sets[cert.v - 1];
        cert.i_v_boundary = nkb.sets[cert.v - 1];
        cert.i_w = nk.sets[cert.w - 1];
        bool ok = true;
        auto target = factor_set(pm.maximal_minor(cert.i_v), ok);
        auto left = factor_set(pm.maximal_minor(cert.i_v_boundary), ok);
        auto right = factor_set(pm.maximal_minor(cert.i_w), ok);
        for (const auto& f : target)
          if (!left.count(f) && !right.count(f)) ok = false;
        ok = ok && !mb.is_basis(cert.i_v) && mb.is_basis(cert.i_v_boundary) && mb.is_basis(cert.i_w);
        cert.implication = ok;
      }

      auto key = *rows;
      std::sort(key.begin(), key.end());
      auto it = found.find(key);
      if (it == found.end() || (!it->second.certified() && cert.certified())) found[key] = cert;
    }
  std::vector<NoPoleCertificate> out;
  for (auto& [_, c] : found) out.push_back(c);
  return out;
}

std::vector<NoPoleCertificate> boundary_without_pole(const Diagram& w) {
  auto v = validate(w);
  if (!v.admissible()) throw InputError("inadmissible diagram: " + v.reason);
  if (w.k() == 0) return {};
  return boundary_without_pole(w.n(), w.set_system());
}

}  // namespace wlpole
