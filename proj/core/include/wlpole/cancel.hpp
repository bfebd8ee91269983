#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wlpole/diagram.hpp"
#include "wlpole/factor.hpp"
#include "wlpole/matrix.hpp"
#include "wlpole/positroid.hpp"

namespace wlpole {

// Rows Z_1..Z_n of length k+4 with positive ordered maximal minors, plus the
// reference twistor Z_0.
struct TwistorData {
  int n = 0;
  int k = 0;
  QMatrix z;
  std::vector<Rational> z0;
};

TwistorData positive_twistors(int n, int k, std::uint64_t seed);
bool has_positive_minors(const QMatrix& z);

// x[p,0] = <Z_i Z_i+1 Z_j Z_j+1> on the first four coordinates; x[p,m] replaces Z_m by Z_0.
Assignment localize(const Diagram& w, const TwistorData& z);

enum class CaseTag { Case1, Case1a, Case2, Case2a, Case3, Case3a, Case3b };
std::string to_string(CaseTag t);
inline bool is_codim_two(CaseTag t) { return t == CaseTag::Case1a || t == CaseTag::Case3a; }

struct Classification {
  CaseTag tag = CaseTag::Case1;
  // Degree-1 factors: the propagator obtained by moving one support vertex.
  std::optional<Propagator> partner;
  int partner_vertex = 0;
  // 2x2 factors: far edges j, k in forward order from the shared edge i.
  int shared_edge = 0;
  int far_j = 0;
  int far_k = 0;
  std::string note;
};

Classification classify(const Diagram& w, const Factor& f);

struct GroupMember {
  Diagram w;
  Factor f;
  std::string role;    // P1..P6 for triples, A/B for pairs
  std::string weight;  // "+1", "-1", or the triple weight in the parameter e
  auto operator<=>(const GroupMember& o) const {
    if (auto c = w <=> o.w; c != 0) return c;
    return f <=> o.f;
  }
  bool operator==(const GroupMember& o) const { return w == o.w && f == o.f; }
};

struct CancellationGroup {
  std::string kind;  // "pair", "wide_triple", "narrow_triple"
  std::vector<GroupMember> members;
  // Sorted member identities; equal keys mean the same group.
  std::vector<std::pair<Diagram, Factor>> key() const;
};

// The group a codim-1 factor cancels in. Throws StructuralError when the partner
// diagrams cannot be formed.
CancellationGroup partners(const Diagram& w, const Factor& f);

struct GroupCheck {
  bool boundary_match = false;
  bool necklace_match = false;
  bool weight_sum = false;
  bool row_space = false;
  bool sign = false;
  CellDescriptor boundary;
  std::string detail;
  bool ok() const { return boundary_match && necklace_match && weight_sum && row_space && sign; }
};

GroupCheck verify_group(const CancellationGroup& g, std::uint64_t seed, int trials);

struct ExcludedFactor {
  Diagram w;
  Factor f;
  CaseTag tag;
};

struct AmplitudeReport {
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int diagrams = 0;
  int codim_one_factors = 0;
  std::vector<CancellationGroup> groups;
  std::vector<GroupCheck> checks;
  std::vector<ExcludedFactor> excluded;
  std::vector<std::string> findings;
  bool complete() const { return findings.empty(); }
};

AmplitudeReport amplitude_report(int k, int n, std::uint64_t seed, int trials = 10,
                                 unsigned threads = 0);

}  // namespace wlpole
