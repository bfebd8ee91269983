#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wlpole/common.hpp"

namespace wlpole {

// A propagator joins edges e1 < e2 of the n-gon. Edge i runs from vertex i to vertex i+1.
struct Propagator {
  int e1 = 0;
  int e2 = 0;
  auto operator<=>(const Propagator&) const = default;
};

// Canonical propagator between edges a and b; throws InputError if a == b or out of range.
Propagator make_propagator(int a, int b, int n);

// V_p = {i, i+1, j, j+1} reduced mod n.
ColumnSet vertex_support(const Propagator& p, int n);

// True when the two chords strictly interleave. Chords sharing an edge never cross.
bool crosses(const Propagator& p, const Propagator& q);

std::string to_string(const Propagator& p);

class Diagram {
 public:
  Diagram() = default;
  // Propagators are sorted; duplicates are kept so validation can reject them.
  Diagram(int n, std::vector<Propagator> props);

  int n() const { return n_; }
  int k() const { return static_cast<int>(props_.size()); }
  const std::vector<Propagator>& props() const { return props_; }
  const Propagator& prop(int idx) const { return props_.at(idx); }

  // Index in the sorted list, -1 if absent. Row labels in matrices are index + 1.
  int index_of(const Propagator& p) const;
  bool contains(const Propagator& p) const { return index_of(p) >= 0; }

  Diagram replace(const Propagator& out, const Propagator& in) const;
  Diagram rotate(int shift) const;

  // Vertex supports of all propagators, in row order.
  std::vector<ColumnSet> set_system() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.props_ <=> b.props_;
  }

 private:
  int n_ = 0;
  std::vector<Propagator> props_;
};

std::string to_string(const Diagram& w);

struct AdmissibilityVerdict {
  bool non_crossing = true;
  bool local_density = true;
  bool global_density = true;
  std::string reason;
  bool admissible() const { return non_crossing && local_density && global_density; }
};

AdmissibilityVerdict validate(const Diagram& w);
inline bool is_admissible(const Diagram& w) { return validate(w).admissible(); }

// Subsets of propagators are bitmasks over row indices.
using PropSet = std::uint64_t;

ColumnSet support_of(const Diagram& w, PropSet subset);
// F(P) = [n] minus V_{P^c}.
ColumnSet propagator_flat(const Diagram& w, PropSet subset);
// Propagators whose support meets s.
PropSet props_meeting(const Diagram& w, ColumnSet s);

// Indices of propagators with an end on edge e, ordered from vertex e towards vertex e+1.
std::vector<int> edge_order(const Diagram& w, int e);

// All admissible diagrams with k propagators on n edges, sorted.
std::vector<Diagram> enumerate(int k, int n);

}  // namespace wlpole
