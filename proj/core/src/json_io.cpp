#include "wlpole/json_io.hpp"

#include <algorithm>

namespace wlpole {

namespace {

int get_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw InputError(std::string("expected integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

const Json& get_array(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw InputError(std::string("expected array field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j) {
  if (!j.is_number_integer()) throw InputError("expected an integer, got " + j.dump());
  return j.get<int>();
}

Json set_list(const std::vector<ColumnSet>& sets) {
  Json out = Json::array();
  for (auto s : sets) out.push_back(to_json(s));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(ColumnSet s) { return Json(elements(s)); }

ColumnSet column_set_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InputError("expected a list of columns");
  ColumnSet s = 0;
  for (const auto& c : j) {
    int v = as_int(c);
    if (v < 1 || v > n) throw InputError("column " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (has(s, v)) throw InputError("repeated column " + std::to_string(v));
    s |= bit(v);
  }
  return s;
}

Json to_json(const Diagram& w) {
  Json props = Json::array();
  for (const auto& p : w.props()) props.push_back({p.e1, p.e2});
  return {{"n", w.n()}, {"props", props}};
}

Diagram diagram_from_json(const Json& j) {
  const int n = get_int(j, "n");
  if (n < 1 || n > kMaxColumns) throw InputError("n out of range");
  std::vector<Propagator> props;
  for (const auto& p : get_array(j, "props")) {
    if (!p.is_array() || p.size() != 2) throw InputError("a propagator is a pair of edges");
    props.push_back(make_propagator(as_int(p[0]), as_int(p[1]), n));
  }
  return Diagram(n, std::move(props));
}

Json to_json(const SetSystem& s) { return {{"n", s.n}, {"rows", set_list(s.rows)}}; }

SetSystem set_system_from_json(const Json& j) {
  SetSystem s;
  s.n = get_int(j, "n");
  if (s.n < 1 || s.n > kMaxColumns) throw InputError("n out of range");
  for (const auto& r : get_array(j, "rows")) {
    ColumnSet c = column_set_from_json(r, s.n);
    if (c == 0) throw InputError("empty row");
    s.rows.push_back(c);
  }
  if (s.rows.empty()) throw InputError("set system has no rows");
  return s;
}

Json to_json(const Factor& f) {
  if (f.kind == Factor::Kind::Variable) return {{"kind", "var"}, {"row", f.var.row}, {"col", f.var.col}};
  return {{"kind", "quad"}, {"rows", {f.rows[0], f.rows[1]}}, {"cols", {f.cols[0], f.cols[1]}}};
}

Factor factor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) throw InputError("factor needs a kind");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "var") return Factor::variable({get_int(j, "row"), get_int(j, "col")});
  if (kind == "quad") {
    const auto& rows = get_array(j, "rows");
    const auto& cols = get_array(j, "cols");
    if (rows.size() != 2 || cols.size() != 2) throw InputError("quad factor needs two rows and two columns");
    return Factor::minor2(as_int(rows[0]), as_int(rows[1]), as_int(cols[0]), as_int(cols[1]));
  }
  throw InputError("unknown factor kind " + kind);
}

Json to_json(const RPolynomial& r, const std::string& provenance) {
  Json fs = Json::array();
  for (const auto& f : r.factors) fs.push_back(to_json(f));
  return {{"factors", fs}, {"provenance", provenance}};
}

Json to_json(const GrassmannNecklace& nk) { return set_list(nk.sets); }

Json to_json(const CellDescriptor& c) {
  Json out{{"k", c.k},
           {"n", c.n},
           {"rows", set_list(c.rows)},
           {"necklace", to_json(c.forward)},
           {"reverse_necklace", to_json(c.reverse)}};
  out["dimension"] = c.dimension ? Json(*c.dimension) : Json(nullptr);
  return out;
}

Json to_json(const FlatReport& f) {
  Json by_rank = Json::object();
  for (const auto& [r, flats] : f.flats_by_rank) by_rank[std::to_string(r)] = set_list(flats);
  return {{"flats_by_rank", by_rank},
          {"cyclic_flats", set_list(f.cyclic_flats)},
          {"flacets", set_list(f.flacets)},
          {"connected", f.connected}};
}

Json to_json(const AdmissibilityVerdict& v) {
  return {{"admissible", v.admissible()},
          {"non_crossing", v.non_crossing},
          {"local_density", v.local_density},
          {"global_density", v.global_density},
          {"reason", v.reason}};
}

Json to_json(const MinimalityReport& m) {
  Json out{{"status", to_string(m.status)}, {"entries", m.entries}, {"k", m.k}, {"bound", m.bound}};
  out["dimension"] = m.dimension ? Json(*m.dimension) : Json(nullptr);
  Json fam = Json::array();
  for (int r = 0; r < 64; ++r)
    if ((m.violating_family >> r) & 1U) fam.push_back(r + 1);
  out["violating_rows"] = fam;
  return out;
}

Json to_json(const CodimVerdict& v) {
  return {{"codim", to_string(v.codim)},
          {"combinatorial_one", v.combinatorial_one},
          {"numeric_dimension", v.numeric_dimension},
          {"cell_dimension", v.cell_dimension},
          {"span_growth", v.span_growth},
          {"consistent", v.consistent}};
}

Json to_json(const Classification& c) {
  Json out{{"case", to_string(c.tag)}};
  if (c.partner) {
    out["partner"] = {c.partner->e1, c.partner->e2};
    out["partner_vertex"] = c.partner_vertex;
  }
  if (c.shared_edge) {
    out["shared_edge"] = c.shared_edge;
    out["far_edges"] = {c.far_j, c.far_k};
  }
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const VanishingWitness& w) {
  return {{"ok", w.ok()}, {"vanishing", w.vanishing}, {"point", to_json(w.point)}};
}

Json to_json(const NoPoleCertificate& c) {
  return {{"status", c.status()},
          {"flat_v", to_json(c.flat_v)},
          {"flat_w", to_json(c.flat_w)},
          {"boundary_rows", set_list(c.boundary_rows)},
          {"rank_preserved", c.rank_preserved},
          {"circuits_preserved", c.circuits_preserved},
          {"boundary_relation",
           {{"bases_contained", c.relation.bases_contained},
            {"proper", c.relation.proper},
            {"differing_index", c.relation.differing_index},
            {"boundary_entry", to_json(c.relation.boundary_entry)},
            {"cell_entry", to_json(c.relation.cell_entry)}}},
          {"implication",
           {{"v", c.v},
            {"w", c.w},
            {"i_v", to_json(c.i_v)},
            {"i_v_boundary", to_json(c.i_v_boundary)},
            {"i_w", to_json(c.i_w)},
            {"holds", c.implication}}}};
}

Json to_json(const CancellationGroup& g, const GroupCheck& check) {
  Json members = Json::array();
  for (const auto& m : g.members)
    members.push_back({{"diagram", to_json(m.w)}, {"factor", to_json(m.f)}, {"role", m.role}, {"weight", m.weight}});
  return {{"kind", g.kind},
          {"members", members},
          {"boundary", to_json(check.boundary)},
          {"checks",
           {{"boundary_match", check.boundary_match},
            {"necklace_match", check.necklace_match},
            {"weight_sum", check.weight_sum},
            {"row_space", check.row_space},
            {"sign", check.sign},
            {"verified", check.ok()},
            {"detail", check.detail}}}};
}

Json to_json(const AmplitudeReport& r) {
  Json groups = Json::array();
  for (size_t a = 0; a < r.groups.size(); ++a) groups.push_back(to_json(r.groups[a], r.checks.at(a)));
  Json excluded = Json::array();
  for (const auto& e : r.excluded)
    excluded.push_back({{"diagram", to_json(e.w)}, {"factor", to_json(e.f)}, {"case", to_string(e.tag)}});
  return {{"schema", kSchemaVersion},
          {"k", r.k},
          {"n", r.n},
          {"seed", r.seed},
          {"trials", r.trials},
          {"diagrams", r.diagrams},
          {"codim_one_factors", r.codim_one_factors},
          {"groups", groups},
          {"excluded", excluded},
          {"findings", r.findings},
          {"status", r.complete() ? "complete" : "incomplete"}};
}

Json to_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [v, q] : a) out[std::to_string(v.row) + "," + std::to_string(v.col)] = to_string(q);
  return out;
}

Assignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("assignment must be an object");
  Assignment a;
  for (const auto& [key, val] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw InputError("bad variable key " + key);
    VarId v;
    try {
      size_t used = 0;
      v.row = std::stoi(key.substr(0, comma), &used);
      if (used != comma) throw InputError("bad variable key " + key);
      const std::string rest = key.substr(comma + 1);
      v.col = std::stoi(rest, &used);
      if (used != rest.size()) throw InputError("bad variable key " + key);
    } catch (const std::logic_error&) {
      throw InputError("bad variable key " + key);
    }
    if (!val.is_string()) throw InputError("values are rational strings");
    a[v] = parse_rational(val.get<std::string>());
  }
  return a;
}

}  // namespace wlpole
