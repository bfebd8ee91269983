#include "wlpole/report.hpp"

#include <algorithm>
#include <sstream>

namespace wlpole {

namespace {

Json header(std::uint64_t seed) { return {{"schema", kSchemaVersion}, {"seed", seed}}; }

// Runs f and stores its value under key, or {"error": message} on a structural failure.
template <class F>
void guarded(Json& out, const char* key, F&& f) {
  try {
    out[key] = f();
  } catch (const StructuralError& e) {
    out[key] = Json{{"error", e.what()}};
  }
}

void add_matroid_data(Json& out, int n, const std::vector<ColumnSet>& sets) {
  guarded(out, "cell", [&] { return to_json(describe_cell(n, sets)); });
  guarded(out, "flats", [&] { return to_json(structure(Matroid::transversal(n, sets))); });
  guarded(out, "positroid", [&] {
    auto v = is_positroid(Matroid::transversal(n, sets));
    return Json{{"positroid", v.positroid}, {"witness", v.witness}};
  });
}

std::string csv_set(ColumnSet s) {
  std::string out;
  for (int c : elements(s)) out += std::to_string(c) + " ";
  if (!out.empty()) out.pop_back();
  return out;
}

void render(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    for (const auto& x : v)
      if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) {
                                  return y.is_primitive();
                                })))
        return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || (v.is_array() && flat(v) && v.dump().size() < 100)) {
        os << pad << k << ": " << (v.is_primitive() ? scalar(v) : v.dump()) << "\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || (v.is_array() && flat(v))) {
        os << pad << "- " << (v.is_primitive() ? scalar(v) : v.dump()) << "\n";
      } else {
        os << pad << "-\n";
        render(os, v, depth + 1);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

Json analyze_diagram(const Diagram& w, std::uint64_t seed) {
  Json out = header(seed);
  out["diagram"] = to_json(w);
  const auto verdict = validate(w);
  out["admissibility"] = to_json(verdict);
  if (!verdict.admissible()) {
    out["status"] = "inadmissible";
    return out;
  }
  const auto sets = w.set_system();
  out["set_system"] = to_json(SetSystem{w.n(), sets});
  add_matroid_data(out, w.n(), sets);
  const auto eq = check_r_equalities(w);
  out["r"] = {{"edge", to_json(eq.edge, "edge")},
              {"necklace", to_json(eq.forward, "necklace")},
              {"reverse_necklace", to_json(eq.reverse, "reverse_necklace")},
              {"equal", eq.ok()},
              {"product", eq.edge.product().to_string()}};
  Json factors = Json::array();
  for (const auto& f : eq.edge.factors) {
    Json e{{"factor", to_json(f)}, {"text", f.to_string()}, {"description", describe(w, f)}};
    e["codim"] = to_json(factor_codim(w, f, seed));
    guarded(e, "classification", [&] { return to_json(classify(w, f)); });
    e["witness"] = to_json(vanish_on_boundary_witness(w, f, seed));
    factors.push_back(e);
  }
  out["factors"] = factors;
  out["status"] = eq.ok() ? "ok" : "r_mismatch";
  return out;
}

Json analyze_set_system(const SetSystem& s, std::uint64_t seed) {
  Json out = header(seed);
  out["set_system"] = to_json(s);
  out["minimality"] = to_json(is_minimal(s.n, s.rows));
  add_matroid_data(out, s.n, s.rows);
  Json r = Json::object();
  guarded(r, "necklace", [&] { return to_json(r_poly_necklace(s.n, s.rows), "necklace"); });
  guarded(r, "reverse_necklace", [&] { return to_json(r_poly_reverse(s.n, s.rows), "reverse_necklace"); });
  if (!r["necklace"].contains("error") && !r["reverse_necklace"].contains("error")) {
    r["equal"] = r["necklace"]["factors"] == r["reverse_necklace"]["factors"];
    r["product"] = r_poly_necklace(s.n, s.rows).product().to_string();
  }
  out["r"] = r;
  out["status"] = "ok";
  return out;
}

namespace {

Json certificates(int n, const std::vector<ColumnSet>& sets) {
  Json certs = Json::array();
  int certified = 0;
  for (const auto& c : boundary_without_pole(n, sets)) {
    certs.push_back(to_json(c));
    certified += c.certified();
  }
  return {{"certificates", certs}, {"certified", certified}};
}

}  // namespace

Json boundary_report(const Diagram& w) {
  Json out{{"schema", kSchemaVersion}, {"diagram", to_json(w)}};
  out.update(certificates(w.n(), w.set_system()));
  return out;
}

Json boundary_report(const SetSystem& s) {
  Json out{{"schema", kSchemaVersion}, {"set_system", to_json(s)}};
  out.update(certificates(s.n, s.rows));
  return out;
}

Json enumerate_report(int k, int n, const std::vector<Diagram>& ds) {
  Json list = Json::array();
  for (const auto& d : ds) list.push_back(to_json(d));
  return {{"schema", kSchemaVersion}, {"k", k}, {"n", n}, {"count", ds.size()}, {"diagrams", list}};
}

std::string enumerate_csv(const std::vector<Diagram>& ds) {
  std::ostringstream os;
  os << "diagram,propagator,e1,e2\n";
  for (size_t d = 0; d < ds.size(); ++d)
    for (int p = 0; p < ds[d].k(); ++p)
      os << d + 1 << "," << p + 1 << "," << ds[d].prop(p).e1 << "," << ds[d].prop(p).e2 << "\n";
  return os.str();
}

std::string analysis_csv(const Json& analysis) {
  std::ostringstream os;
  os << "factor,kind,row_a,row_b,col_a,col_b,codim,case,numeric_dimension,witness\n";
  if (!analysis.contains("factors")) return os.str();
  int idx = 0;
  for (const auto& e : analysis["factors"]) {
    const auto& f = e["factor"];
    const bool var = f["kind"] == "var";
    os << ++idx << "," << f["kind"].get<std::string>() << ",";
    if (var) os << f["row"] << ",," << f["col"] << ",";
    else os << f["rows"][0] << "," << f["rows"][1] << "," << f["cols"][0] << "," << f["cols"][1];
    const auto& cl = e["classification"];
    os << "," << e["codim"]["codim"].get<std::string>() << ","
       << (cl.contains("case") ? cl["case"].get<std::string>() : std::string("none")) << ","
       << e["codim"]["numeric_dimension"] << "," << (e["witness"]["ok"].get<bool>() ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string boundary_csv(const Json& report) {
  std::ostringstream os;
  os << "certificate,status,v,w,flat_v,flat_w\n";
  int idx = 0;
  for (const auto& c : report["certificates"]) {
    ColumnSet fv = 0, fw = 0;
    for (const auto& x : c["flat_v"]) fv |= bit(x.get<int>());
    for (const auto& x : c["flat_w"]) fw |= bit(x.get<int>());
    os << ++idx << "," << c["status"].get<std::string>() << "," << c["implication"]["v"] << ","
       << c["implication"]["w"] << "," << csv_set(fv) << "," << csv_set(fw) << "\n";
  }
  return os.str();
}

std::string amplitude_csv(const AmplitudeReport& r) {
  std::ostringstream os;
  os << "group,kind,size,boundary_match,necklace_match,weight_sum,row_space,sign,verified,dimension,seed,trials\n";
  for (size_t a = 0; a < r.groups.size(); ++a) {
    const auto& c = r.checks.at(a);
    os << a + 1 << "," << r.groups[a].kind << "," << r.groups[a].members.size() << "," << c.boundary_match << ","
       << c.necklace_match << "," << c.weight_sum << "," << c.row_space << "," << c.sign << "," << c.ok() << ","
       << (c.boundary.dimension ? std::to_string(*c.boundary.dimension) : std::string()) << "," << r.seed << ","
       << r.trials << "\n";
  }
  return os.str();
}

std::string to_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace wlpole
