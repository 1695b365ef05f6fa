// Command-line surface: analyze signed-graph files, run verification
// sweeps, build and inspect the extremal catalog.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sg/families.hpp"
#include "sg/io.hpp"
#include "sg/verify.hpp"

using nlohmann::json;

namespace {

int hard_vertex_cap() {
  if (const char* env = std::getenv("SG_MAX_N")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (...) {
      std::cerr << "warning: ignoring unparsable SG_MAX_N\n";
    }
  }
  return 9;
}

std::pair<int, int> parse_girth_range(const std::string& text) {
  size_t dots = text.find("..");
  if (dots == std::string::npos) {
    int g = std::stoi(text);
    return {g, g};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

json tag_json(const std::optional<sg::FamilyTag>& tag) {
  if (!tag) return nullptr;
  json params = json::object();
  for (const auto& [key, value] : tag->params) params[key] = value;
  return json{{"theorem", tag->theorem}, {"family", tag->family}, {"params", params}};
}

json analyze_record(const sg::SignedGraph& g) {
  json record;
  record["n"] = g.order();
  record["m"] = g.size();
  bool connected = sg::is_connected(g);
  record["connected"] = connected;
  std::optional<sg::ShortestCycle> cycle = sg::girth(g);
  if (cycle) {
    record["girth"] = cycle->length;
    record["shortest_cycle"] = cycle->vertices;
  } else {
    record["girth"] = "acyclic";
  }
  record["balanced"] = sg::is_balanced(g);
  sg::Inertia inertia = sg::inertia_exact(g);
  record["inertia"] = {{"pos", inertia.pos}, {"neg", inertia.neg}, {"nul", inertia.nul}};
  record["det"] = sg::determinant_exact(g).get_str();
  if (!connected) {
    record["note"] = "disconnected: the girth theorems assume connectivity; no tags emitted";
  } else if (!cycle) {
    record["note"] = "acyclic: girth undefined; no cycle-theorem tags";
  } else {
    const int ceil_half = (cycle->length + 1) / 2;
    sg::InertiaClassification neg = sg::classify_negative_inertia(g);
    sg::InertiaClassification pos = sg::classify_positive_inertia(g);
    sg::NullityClassification nul = sg::classify_nullity(g);
    record["negative_inertia"] = {{"relation", sg::to_string(neg.relation)},
                                  {"ceil_half_girth", ceil_half},
                                  {"tag", tag_json(neg.tag)},
                                  {"consistent", neg.consistent}};
    record["positive_inertia"] = {{"relation", sg::to_string(pos.relation)},
                                  {"ceil_half_girth", ceil_half},
                                  {"tag", tag_json(pos.tag)},
                                  {"consistent", pos.consistent}};
    record["nullity"] = {{"relation", sg::to_string(nul.relation)},
                         {"upper_bound", g.order() - cycle->length + 2},
                         {"tag", tag_json(nul.tag)},
                         {"consistent", nul.consistent}};
  }
  return record;
}

json report_json(const sg::VerificationReport& report) {
  json record;
  record["theorem"] = report.theorem;
  record["instances"] = report.instances_checked;
  record["equality"] = report.equality_matches;
  record["counterexamples"] = report.counterexamples.size();
  record["wall_seconds"] = report.wall_seconds;
  return record;
}

void write_report(const sg::VerificationReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << report_json(report).dump() << "\n";
  for (const sg::Counterexample& cex : report.counterexamples) {
    out << json{{"counterexample", cex.detail}, {"graph", cex.graph}}.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact signed-graph inertia, girth and extremal-family toolkit"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_path;
  std::string analyze_output;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one signed-graph file");
  analyze->add_option("file", analyze_path, "input file (sg format)")->required();
  analyze->add_option("--output", analyze_output, "write the record here instead of stdout");

  // verify
  std::string verify_id;
  int verify_max_n = 5;
  std::optional<int> verify_max_girth;
  std::string verify_girth;
  int verify_jobs = 1;
  std::string verify_output;
  bool verify_table = false;
  CLI::App* verify = app.add_subcommand("verify", "run a theorem verification sweep");
  verify->add_option("id", verify_id, "theorem id (3.1..5.3) or 'lemmas'")->required();
  verify->add_option("--max-n", verify_max_n, "exhaustive sweep order bound (default 5)");
  verify->add_option("--max-girth", verify_max_girth,
                     "constructive pendant-star sweep bound (3.2/4.2/5.2)");
  verify->add_option("--girth", verify_girth, "restrict to girth g or a..b");
  verify->add_option("--jobs", verify_jobs, "worker threads");
  verify->add_option("--output", verify_output, "write line-delimited report records here");
  verify->add_flag("--table", verify_table, "print the girth x index count matrix");

  // catalog
  CLI::App* catalog = app.add_subcommand("catalog", "extremal catalog");
  catalog->require_subcommand(1);
  std::string build_girth = "5";
  int build_max_n = 8;
  int build_cyclomatic = 2;
  std::string build_output = "sg_catalog.txt";
  CLI::App* build = catalog->add_subcommand("build", "derive and store the catalog");
  build->add_option("--girth", build_girth, "girth g or a..b (>= 4)");
  build->add_option("--max-n", build_max_n, "order bound (<= 9)");
  build->add_option("--cyclomatic", build_cyclomatic, "cyclomatic number cap (<= 2)");
  build->add_option("--output", build_output, "catalog file");
  std::string show_path = "sg_catalog.txt";
  CLI::App* show = catalog->add_subcommand("show", "list catalog entries");
  show->add_option("file", show_path, "catalog file");

  CLI11_PARSE(app, argc, argv);
  const int cap = hard_vertex_cap();

  try {
    if (*analyze) {
      sg::SignedGraph g = sg::load_signed_graph(analyze_path);
      json record = analyze_record(g);
      if (analyze_output.empty()) {
        std::cout << record.dump() << "\n";
      } else {
        std::ofstream out(analyze_output);
        if (!out) throw std::runtime_error("cannot open " + analyze_output);
        out << record.dump() << "\n";
      }
      return 0;
    }
    if (*verify) {
      if (verify_max_n > cap) {
        std::cerr << "error: --max-n " << verify_max_n << " exceeds the SG_MAX_N cap of " << cap
                  << "\n";
        return 2;
      }
      sg::EnumerationSpec spec;
      spec.max_n = verify_max_n;
      spec.jobs = verify_jobs;
      spec.max_girth = verify_max_girth;
      if (!verify_girth.empty()) spec.girth_range = parse_girth_range(verify_girth);
      sg::VerificationReport report = verify_id == "lemmas"
                                          ? sg::verify_structure_lemmas(spec)
                                          : sg::verify_theorem(verify_id, spec);
      std::cout << report.summary_line() << "\n";
      if (verify_table) std::cout << report.table();
      for (const sg::Counterexample& cex : report.counterexamples) {
        std::cout << "counterexample: " << cex.detail << "\n" << cex.graph;
      }
      if (!verify_output.empty()) write_report(report, verify_output);
      return report.passed() ? 0 : 1;
    }
    if (*build) {
      if (build_max_n > cap) {
        std::cerr << "error: --max-n " << build_max_n << " exceeds the SG_MAX_N cap of " << cap
                  << "\n";
        return 2;
      }
      auto [glo, ghi] = parse_girth_range(build_girth);
      sg::EnumerationSpec spec;
      spec.max_n = build_max_n;
      spec.cyclomatic_cap = build_cyclomatic;
      sg::ExtremalCatalog result = sg::derive_catalog(glo, ghi, spec);
      std::ofstream out(build_output);
      if (!out) throw std::runtime_error("cannot open " + build_output);
      out << result.serialize();
      std::cout << "catalog: " << result.size() << " entries -> " << build_output << "\n";
      return 0;
    }
    if (*show) {
      std::ifstream in(show_path);
      if (!in) {
        std::cout << "catalog: 0 entries\n";
        return 0;
      }
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      sg::ExtremalCatalog result = sg::ExtremalCatalog::parse(text);
      std::cout << "catalog: " << result.size() << " entries\n";
      for (const sg::CatalogEntry& e : result.entries()) {
        std::cout << e.cls.underlying << " "
                  << (e.cls.cotree_signs.empty() ? "=" : e.cls.cotree_signs)
                  << " girth=" << e.girth << " inertia=" << sg::to_string(e.inertia)
                  << " n=" << e.order << " branch=" << e.branch;
        if (!e.anchor.empty()) std::cout << " anchor=" << e.anchor;
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
