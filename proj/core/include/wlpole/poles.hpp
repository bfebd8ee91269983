#pragma once

#include <map>
#include <string>
#include <vector>

#include "wlpole/diagram.hpp"
#include "wlpole/factor.hpp"
#include "wlpole/matrix.hpp"
#include "wlpole/positroid.hpp"

namespace wlpole {

// Distinct irreducible factors of R, sorted. Rows refer to the matrix row labels
// (propagator index + 1 for diagrams).
struct RPolynomial {
  std::vector<Factor> factors;
  Polynomial product() const;
  bool contains(const Factor& f) const;
  friend bool operator==(const RPolynomial& a, const RPolynomial& b) { return a.factors == b.factors; }
};

// Product over edges of x[q1,e+1] * prod (x[qr,e] x[qr+1,e+1] - x[qr,e+1] x[qr+1,e]) * x[qs,e].
RPolynomial r_poly_edge(const Diagram& w);
// Distinct structured factors of the necklace minors. Throws StructuralError if a
// minor has an unstructured residual.
RPolynomial r_poly_necklace(int n, const std::vector<ColumnSet>& sets);
RPolynomial r_poly_reverse(int n, const std::vector<ColumnSet>& sets);

struct REqualityReport {
  RPolynomial edge;
  RPolynomial forward;
  RPolynomial reverse;
  bool ok() const { return edge == forward && forward == reverse; }
};

REqualityReport check_r_equalities(const Diagram& w);

// Edge on which the factor sits: its columns lie on {e, e+1} and its row ends on e.
int factor_edge(const Diagram& w, const Factor& f);

// Limit of the matrix along a factor: the variable is set to zero, or the second row
// of a 2x2 factor becomes t[1] times the first on the factor's columns.
PolyMatrix limit_matrix(const SymbolicMatrix& m, const Factor& f);

// Generic dimension of the span of every proper row subfamily grows when a row is added.
struct SpanGrowth {
  bool holds = true;
  std::uint64_t subset = 0;  // first failing I as a row bitmask
  int added_row = -1;
};
SpanGrowth span_growth(const PolyMatrix& m, std::uint64_t seed);

enum class Codim { One, AtLeastTwo };
std::string to_string(Codim c);

struct CodimVerdict {
  Codim codim = Codim::One;
  bool combinatorial_one = false;  // minimality of the reduced system or (j,k) not in P
  int numeric_dimension = 0;       // dimension of the limit family
  int cell_dimension = 0;          // 3k
  bool span_growth = true;         // only meaningful for 2x2 factors
  bool consistent = true;
};

// Throws InputError if f is not a factor of R(w).
CodimVerdict factor_codim(const Diagram& w, const Factor& f, std::uint64_t seed = 1);

struct VanishingWitness {
  Assignment point;
  std::vector<int> vanishing;  // necklace positions a whose minor is zero at the point
  bool ok() const { return !vanishing.empty(); }
};

VanishingWitness vanish_on_boundary_witness(const SymbolicMatrix& m, const Factor& f,
                                            std::uint64_t seed);
VanishingWitness vanish_on_boundary_witness(const Diagram& w, const Factor& f, std::uint64_t seed);

std::string describe(const Diagram& w, const Factor& f);

}  // namespace wlpole
