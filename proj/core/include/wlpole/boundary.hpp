#pragma once

#include <string>
#include <vector>

#include "wlpole/diagram.hpp"
#include "wlpole/positroid.hpp"

namespace wlpole {

struct NoPoleCertificate {
  // Cyclic flats with V carrying at least the rank of W outside their intersection.
  ColumnSet flat_v = 0;
  ColumnSet flat_w = 0;
  std::vector<ColumnSet> boundary_rows;

  bool rank_preserved = false;
  bool circuits_preserved = false;
  BoundaryRelation relation;

  // Necklace argument: Delta_{I'_v} and Delta_{I_w} nonzero force Delta_{I_v} nonzero.
  int v = 0;
  int w = 0;
  ColumnSet i_v = 0;
  ColumnSet i_v_boundary = 0;
  ColumnSet i_w = 0;
  bool implication = false;

  bool certified() const {
    return rank_preserved && circuits_preserved && relation.is_boundary() && implication;
  }
  std::string status() const { return certified() ? "certified" : "inconclusive"; }
};

// Candidates that fail the construction are dropped; the rest are deduplicated by the
// boundary set system up to row order.
std::vector<NoPoleCertificate> boundary_without_pole(int n, const std::vector<ColumnSet>& sets);
std::vector<NoPoleCertificate> boundary_without_pole(const Diagram& w);

}  // namespace wlpole
