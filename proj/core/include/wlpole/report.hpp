#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wlpole/json_io.hpp"

namespace wlpole {

// Admissibility, cell, flats, the three R constructions and one entry per factor.
// Inadmissible diagrams yield only the verdict with "status": "inadmissible".
Json analyze_diagram(const Diagram& w, std::uint64_t seed);

// Raw set-system mode: minimality, positroid test, cell, flats and both necklace R's.
Json analyze_set_system(const SetSystem& s, std::uint64_t seed);

Json boundary_report(const Diagram& w);
Json boundary_report(const SetSystem& s);

Json enumerate_report(int k, int n, const std::vector<Diagram>& ds);

// CSV with a header row; cells are integers, words or fraction strings.
std::string enumerate_csv(const std::vector<Diagram>& ds);
std::string analysis_csv(const Json& analysis);
std::string boundary_csv(const Json& report);
std::string amplitude_csv(const AmplitudeReport& r);

// Indented key: value rendering of any report.
std::string to_text(const Json& j);

}  // namespace wlpole
