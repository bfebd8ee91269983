#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wlpole/boundary.hpp"
#include "wlpole/cancel.hpp"
#include "wlpole/diagram.hpp"
#include "wlpole/factor.hpp"
#include "wlpole/matroid.hpp"
#include "wlpole/poles.hpp"
#include "wlpole/positroid.hpp"

namespace wlpole {

// Keys keep insertion order so emitted documents are stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Throws InputError on malformed text.
Json parse_json(const std::string& text);

Json to_json(ColumnSet s);
ColumnSet column_set_from_json(const Json& j, int n);

// {"n": int, "props": [[e1, e2], ...]}; props may arrive in any order.
Json to_json(const Diagram& w);
Diagram diagram_from_json(const Json& j);

struct SetSystem {
  int n = 0;
  std::vector<ColumnSet> rows;
};
// {"n": int, "rows": [[c, ...], ...]}
Json to_json(const SetSystem& s);
SetSystem set_system_from_json(const Json& j);

// {"kind": "var", "row", "col"} or {"kind": "quad", "rows": [p, q], "cols": [a, b]}
Json to_json(const Factor& f);
Factor factor_from_json(const Json& j);

Json to_json(const RPolynomial& r, const std::string& provenance);
Json to_json(const GrassmannNecklace& nk);
Json to_json(const CellDescriptor& c);
Json to_json(const FlatReport& f);
Json to_json(const AdmissibilityVerdict& v);
Json to_json(const MinimalityReport& m);
Json to_json(const CodimVerdict& v);
Json to_json(const Classification& c);
Json to_json(const VanishingWitness& w);
Json to_json(const NoPoleCertificate& c);
Json to_json(const CancellationGroup& g, const GroupCheck& check);
Json to_json(const AmplitudeReport& r);

// {"r,c": "num/den", ...}; auxiliary variables use row -1.
Json to_json(const Assignment& a);
Assignment assignment_from_json(const Json& j);

}  // namespace wlpole
