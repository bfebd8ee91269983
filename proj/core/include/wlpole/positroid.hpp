#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlpole/matrix.hpp"
#include "wlpole/matroid.hpp"

namespace wlpole {

// Gale order after rotating so that a is smallest.
bool gale_leq(ColumnSet a_set, ColumnSet b_set, int a, int n);

struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<ColumnSet> sets;  // sets[a-1] = I_a
  friend bool operator==(const GrassmannNecklace&, const GrassmannNecklace&) = default;
};

// I_a: the basis minimal in the a-shifted Gale order. Throws StructuralError at rank 0.
GrassmannNecklace necklace(const Matroid& m);
// I*_j: the basis maximal in the j-shifted Gale order.
GrassmannNecklace reverse_necklace(const Matroid& m);

std::string necklace_string(const GrassmannNecklace& nk);

// Maximal minors Delta_{I_a}, one per necklace entry.
std::vector<Polynomial> necklace_minors(const PolyMatrix& m, const GrassmannNecklace& nk);

enum class MinimalityStatus { Minimal, NotMinimal, NotPositroid, RankDeficient };
std::string to_string(MinimalityStatus s);

struct MinimalityReport {
  MinimalityStatus status = MinimalityStatus::Minimal;
  int entries = 0;              // m = total support size
  int k = 0;
  int bound = 0;                // m - k
  std::optional<int> dimension;  // set only when minimal
  // First subfamily violating |union T| >= max|T| + |T| - 1, as a row bitmask.
  std::uint64_t violating_family = 0;
};

MinimalityReport is_minimal(int n, const std::vector<ColumnSet>& sets);

// Dimension of the image in Gr(k,n) of a polynomial parameterization: generic rank of
// the Pluecker Jacobian minus one. Best of `draws` random points.
int parameterization_dimension(const PolyMatrix& m, std::uint64_t seed, int draws = 2);

struct CellDescriptor {
  int k = 0;
  int n = 0;
  std::vector<ColumnSet> rows;
  GrassmannNecklace forward;
  GrassmannNecklace reverse;
  std::optional<int> dimension;
};

CellDescriptor describe_cell(int n, const std::vector<ColumnSet>& sets);

struct BoundaryRelation {
  bool bases_contained = false;
  bool proper = false;
  int differing_index = 0;  // a with I_a(boundary) != I_a(cell); 0 if none
  ColumnSet boundary_entry = 0;
  ColumnSet cell_entry = 0;
  bool is_boundary() const { return bases_contained && proper; }
};

// Throws InputError when the ranks differ.
BoundaryRelation is_boundary_of(const Matroid& boundary, const Matroid& cell);

}  // namespace wlpole
