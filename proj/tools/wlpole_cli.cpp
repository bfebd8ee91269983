#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wlpole/report.hpp"

namespace {

using wlpole::Json;

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kInputError = 2;
constexpr int kDefaultCap = 12;

struct Options {
  int k = -1;
  int n = -1;
  std::uint64_t seed = 1;
  int trials = 10;
  unsigned threads = 0;
  std::string out;
  std::string format = "json";
  bool force = false;
  std::string input;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw wlpole::InputError("cannot write " + o.out);
  f << text;
}

std::string render(const Options& o, const Json& j, const std::string& csv) {
  if (o.format == "csv") return csv;
  if (o.format == "text") return wlpole::to_text(j);
  return j.dump(2) + "\n";
}

void check_bounds(const Options& o) {
  if (o.k < 0 || o.n < 1) throw wlpole::InputError("-k and -n are required");
  if (o.n > kDefaultCap && !o.force)
    throw wlpole::InputError("n > " + std::to_string(kDefaultCap) + " needs --force");
}

Json read_input(const Options& o) {
  std::stringstream buf;
  if (o.input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(o.input);
    if (!f) throw wlpole::InputError("cannot read " + o.input);
    buf << f.rdbuf();
  }
  return wlpole::parse_json(buf.str());
}

bool is_set_system(const Json& j) { return j.is_object() && j.contains("rows"); }

int cmd_enumerate(const Options& o) {
  check_bounds(o);
  const auto ds = wlpole::enumerate(o.k, o.n);
  emit(o, render(o, wlpole::enumerate_report(o.k, o.n, ds), wlpole::enumerate_csv(ds)));
  return kOk;
}

int cmd_analyze(const Options& o) {
  const Json in = read_input(o);
  if (is_set_system(in)) {
    const Json rep = wlpole::analyze_set_system(wlpole::set_system_from_json(in), o.seed);
    emit(o, render(o, rep, wlpole::analysis_csv(rep)));
    return kOk;
  }
  const Json rep = wlpole::analyze_diagram(wlpole::diagram_from_json(in), o.seed);
  emit(o, render(o, rep, wlpole::analysis_csv(rep)));
  if (rep["status"] == "inadmissible") return kInputError;
  bool consistent = rep["status"] == "ok";
  for (const auto& f : rep["factors"])
    consistent = consistent && f["codim"]["consistent"].get<bool>() && f["witness"]["ok"].get<bool>();
  return consistent ? kOk : kFinding;
}

int cmd_boundary(const Options& o) {
  const Json in = read_input(o);
  Json rep;
  if (is_set_system(in)) {
    rep = wlpole::boundary_report(wlpole::set_system_from_json(in));
  } else {
    const auto w = wlpole::diagram_from_json(in);
    if (!wlpole::is_admissible(w)) {
      emit(o, render(o, {{"diagram", wlpole::to_json(w)}, {"admissibility", wlpole::to_json(wlpole::validate(w))}},
                     ""));
      return kInputError;
    }
    rep = wlpole::boundary_report(w);
  }
  emit(o, render(o, rep, wlpole::boundary_csv(rep)));
  return kOk;
}

int cmd_cancel(const Options& o) {
  check_bounds(o);
  if (o.trials < 1) throw wlpole::InputError("--trials must be positive");
  const auto rep = wlpole::amplitude_report(o.k, o.n, o.seed, o.trials, o.threads);
  emit(o, render(o, wlpole::to_json(rep), wlpole::amplitude_csv(rep)));
  return rep.complete() ? kOk : kFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wilson loop diagram positroids, spurious poles and their cancellation"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_kn = [&](CLI::App* sub) {
    sub->add_option("-k", o.k, "Number of propagators")->required();
    sub->add_option("-n", o.n, "Number of edges")->required();
    sub->add_flag("--force", o.force, "Allow n above the default cap");
  };

  auto* en = app.add_subcommand("enumerate", "List admissible diagrams");
  add_kn(en);
  add_format(en);

  auto* an = app.add_subcommand("analyze", "Cell, flats, R and pole data for a diagram or set system");
  an->add_option("input", o.input, "JSON file, or - for stdin")->required();
  an->add_option("--seed", o.seed, "Random seed");
  add_format(an);

  auto* bd = app.add_subcommand("boundary", "Codimension-one boundaries that avoid every pole");
  bd->add_option("input", o.input, "JSON file, or - for stdin")->required();
  add_format(bd);

  auto* ca = app.add_subcommand("cancel", "Partition codim-1 poles into verified cancellation groups");
  add_kn(ca);
  ca->add_option("--seed", o.seed, "Random seed");
  ca->add_option("--trials", o.trials, "Random trials per group");
  ca->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
  add_format(ca);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (en->parsed()) return cmd_enumerate(o);
    if (an->parsed()) return cmd_analyze(o);
    if (bd->parsed()) return cmd_boundary(o);
    if (ca->parsed()) return cmd_cancel(o);
  } catch (const wlpole::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const wlpole::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
