#pragma once

#include <map>
#include <string>
#include <vector>

#include "wlpole/common.hpp"
#include "wlpole/matrix.hpp"

namespace wlpole {

// Matroid on the ground set {1..n}. Built either as the transversal matroid of a set
// system (rank = maximum matching) or from an explicit list of bases.
class Matroid {
 public:
  static Matroid transversal(int n, std::vector<ColumnSet> rows);
  static Matroid from_bases(int n, std::vector<ColumnSet> bases);
  // Bases read off the nonvanishing maximal minors of a polynomial matrix.
  static Matroid of_matrix(const PolyMatrix& m);

  int n() const { return n_; }
  ColumnSet ground() const { return full_set(n_); }
  int rank() const { return rank_; }
  int rank(ColumnSet s) const;
  // Transversal matroids only: fewer independent columns than rows.
  bool rank_deficient() const { return !rows_.empty() && rank_ < static_cast<int>(rows_.size()); }
  const std::vector<ColumnSet>& rows() const { return rows_; }

  const std::vector<ColumnSet>& bases() const { return bases_; }
  bool is_basis(ColumnSet s) const;
  bool is_independent(ColumnSet s) const { return rank(s) == card(s); }
  ColumnSet closure(ColumnSet s) const;
  bool is_flat(ColumnSet s) const { return closure(s) == s; }
  std::vector<ColumnSet> circuits() const;

  bool is_connected() const { return restriction_connected(ground()); }
  bool restriction_connected(ColumnSet f) const;
  bool contraction_connected(ColumnSet f) const;
  // Connected components, ordered by smallest element.
  std::vector<ColumnSet> components() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid() = default;
  int matching_rank(ColumnSet s) const;

  int n_ = 0;
  int rank_ = 0;
  std::vector<ColumnSet> rows_;
  std::vector<ColumnSet> bases_;
};

struct FlatReport {
  std::map<int, std::vector<ColumnSet>> flats_by_rank;
  std::vector<ColumnSet> cyclic_flats;
  // Proper nonempty flats F with M|F and M/F connected.
  std::vector<ColumnSet> flacets;
  bool connected = false;
};

FlatReport structure(const Matroid& m);

// Union of circuits, equivalently no coloops in the restriction.
bool is_cyclic_set(const Matroid& m, ColumnSet s);

// True when s is a cyclic interval of the cyclically ordered set `within`.
bool is_cyclic_interval(ColumnSet s, ColumnSet within, int n);
inline bool is_cyclic_interval(ColumnSet s, int n) { return is_cyclic_interval(s, full_set(n), n); }

struct PositroidVerdict {
  bool positroid = true;
  std::string witness;
};

// Components must form a non-crossing partition and every flacet of every component
// must be a cyclic interval in the induced cyclic order.
PositroidVerdict is_positroid(const Matroid& m);

}  // namespace wlpole
