#include "wlpole/diagram.hpp"

#include <algorithm>

namespace wlpole {

Propagator make_propagator(int a, int b, int n) {
  if (n < 1 || n > kMaxColumns) throw InputError("n out of range: " + std::to_string(n));
  if (a < 1 || a > n || b < 1 || b > n)
    throw InputError("propagator edge outside [1," + std::to_string(n) + "]");
  if (a == b) throw InputError("propagator with both ends on edge " + std::to_string(a));
  return a < b ? Propagator{a, b} : Propagator{b, a};
}

ColumnSet vertex_support(const Propagator& p, int n) {
  return bit(cyc(p.e1, n)) | bit(cyc(p.e1 + 1, n)) | bit(cyc(p.e2, n)) | bit(cyc(p.e2 + 1, n));
}

bool crosses(const Propagator& p, const Propagator& q) {
  return (p.e1 < q.e1 && q.e1 < p.e2 && p.e2 < q.e2) ||
         (q.e1 < p.e1 && p.e1 < q.e2 && q.e2 < p.e2);
}

std::string to_string(const Propagator& p) {
  return "(" + std::to_string(p.e1) + "," + std::to_string(p.e2) + ")";
}

Diagram::Diagram(int n, std::vector<Propagator> props) : n_(n), props_(std::move(props)) {
  if (n < 1 || n > kMaxColumns) throw InputError("n out of range: " + std::to_string(n));
  if (props_.size() > 62) throw InputError("too many propagators");
  for (auto& p : props_) p = make_propagator(p.e1, p.e2, n);
  std::sort(props_.begin(), props_.end());
}

int Diagram::index_of(const Propagator& p) const {
  auto it = std::lower_bound(props_.begin(), props_.end(), p);
  if (it == props_.end() || *it != p) return -1;
  return static_cast<int>(it - props_.begin());
}

Diagram Diagram::replace(const Propagator& out, const Propagator& in) const {
  std::vector<Propagator> next;
  bool removed = false;
  for (const auto& p : props_) {
    if (!removed && p == out) {
      removed = true;
      continue;
    }
    next.push_back(p);
  }
  if (!removed) throw InputError("propagator " + to_string(out) + " not in diagram");
  next.push_back(in);
  return Diagram(n_, std::move(next));
}

Diagram Diagram::rotate(int shift) const {
  std::vector<Propagator> next;
  for (const auto& p : props_) next.push_back(make_propagator(cyc(p.e1 + shift, n_), cyc(p.e2 + shift, n_), n_));
  return Diagram(n_, std::move(next));
}

std::vector<ColumnSet> Diagram::set_system() const {
  std::vector<ColumnSet> out;
  for (const auto& p : props_) out.push_back(vertex_support(p, n_));
  return out;
}

std::string to_string(const Diagram& w) {
  std::string s = "n=" + std::to_string(w.n()) + " {";
  for (int i = 0; i < w.k(); ++i) {
    if (i) s += ",";
    s += to_string(w.prop(i));
  }
  return s + "}";
}

AdmissibilityVerdict validate(const Diagram& w) {
  AdmissibilityVerdict v;
  const auto& ps = w.props();
  for (size_t a = 0; a < ps.size() && v.non_crossing; ++a)
    for (size_t b = a + 1; b < ps.size(); ++b)
      if (crosses(ps[a], ps[b])) {
        v.non_crossing = false;
        v.reason = to_string(ps[a]) + " crosses " + to_string(ps[b]);
        break;
      }
  const int k = w.k();
  for (PropSet s = 1; k > 0 && s < (PropSet{1} << k); ++s) {
    if (card(support_of(w, s)) < card(s) + 3) {
      v.local_density = false;
      if (v.reason.empty()) v.reason = "support of propagator subset " + set_string(s << 1) + " too small";
      break;
    }
  }
  if (w.n() < k + 4) {
    v.global_density = false;
    if (v.reason.empty()) v.reason = "n < k + 4";
  }
  return v;
}

ColumnSet support_of(const Diagram& w, PropSet subset) {
  ColumnSet s = 0;
  for (int i = 0; i < w.k(); ++i)
    if ((subset >> i) & 1U) s |= vertex_support(w.prop(i), w.n());
  return s;
}

ColumnSet propagator_flat(const Diagram& w, PropSet subset) {
  PropSet all = w.k() == 0 ? 0 : (PropSet{1} << w.k()) - 1;
  return full_set(w.n()) & ~support_of(w, all & ~subset);
}

PropSet props_meeting(const Diagram& w, ColumnSet s) {
  PropSet out = 0;
  for (int i = 0; i < w.k(); ++i)
    if (vertex_support(w.prop(i), w.n()) & s) out |= PropSet{1} << i;
  return out;
}

std::vector<int> edge_order(const Diagram& w, int e) {
  const int n = w.n();
  if (e < 1 || e > n) throw InputError("edge out of range: " + std::to_string(e));
  if (!validate(w).non_crossing) throw StructuralError("edge order needs a non-crossing diagram");
  std::vector<std::pair<int, int>> keyed;
  for (int i = 0; i < w.k(); ++i) {
    const auto& p = w.prop(i);
    int far = 0;
    if (p.e1 == e) far = p.e2;
    else if (p.e2 == e) far = p.e1;
    else continue;
    // Chords reaching far edges just behind vertex e sit closest to it.
    int dist = ((far - (e + 1)) % n + n) % n;
    keyed.emplace_back(-dist, i);
  }
  std::stable_sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto& [_, i] : keyed) out.push_back(i);
  return out;
}

std::vector<Diagram> enumerate(int k, int n) {
  if (k < 0 || n < 1 || n > kMaxColumns) throw InputError("bad (k, n)");
  std::vector<Diagram> out;
  if (n < k + 4) return out;
  std::vector<Propagator> cand;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      if (!(a == 1 && b == n)) cand.push_back({a, b});
  const int m = static_cast<int>(cand.size());
  if (k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Propagator> ps;
    for (int i : idx) ps.push_back(cand[i]);
    Diagram w(n, std::move(ps));
    if (is_admissible(w)) out.push_back(std::move(w));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace wlpole
