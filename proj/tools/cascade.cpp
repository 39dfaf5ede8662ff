// Batch front end: genus evaluation, criticality classification, and the
// cascade census, with a persistent genus cache and JSON reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "cascade/canonical.hpp"
#include "cascade/criticality.hpp"
#include "cascade/enumerate.hpp"
#include "cascade/genus.hpp"
#include "cascade/io.hpp"
#include "cascade/kgraph.hpp"
#include "cascade/minor.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cascade;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitVerification = 3;

struct Config {
  int timeout_s = 60;
  int workers = 1;
  std::string cache_path;
  std::string out_path;
  std::string verify = "spot";
  std::string obstructions;
  bool emit_witness = false;
  bool bases_only = false;
};

std::vector<LabeledGraph> load_inputs(const std::string& path) {
  fs::path p(path);
  if (p.extension() == ".g6") return read_graph6_file(path);
  if (p.extension() == ".tsv") return read_terminal_tsv_file(path);
  return {read_edge_list_file(path)};
}

json graph_json(const LabeledGraph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v});
  if (g.has_terminals()) j["terminals"] = {g.terminal_x(), g.terminal_y()};
  j["graph6"] = to_graph6(g.underlying());
  return j;
}

json embedding_json(const Embedding& emb) {
  json j;
  j["rotation"] = emb.rotation;
  json neg = json::array();
  for (int v = 0; v < emb.vertex_count(); ++v) {
    VertexSet m = emb.negative[v];
    while (m) {
      int u = lowest_vertex(m);
      m &= m - 1;
      if (u > v) neg.push_back({v, u});
    }
  }
  j["negative_edges"] = neg;
  return j;
}

void write_report(const Config& cfg, const json& report) {
  if (cfg.out_path.empty() || cfg.out_path == "-") return;
  fs::path out(cfg.out_path);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  std::ofstream of(out);
  of << report.dump(2) << "\n";
}

json kgraph_json(const KGraphWitness& w) {
  json j;
  j["kind"] = w.kind == KGraphWitness::K4 ? "K4" : "K2,3";
  j["branch_vertices"] = w.branch_vertices;
  j["branches"] = w.branches;
  j["boundary"] = w.boundary;
  j["principal_attachments"] = w.principal_attachments;
  return j;
}

GenusCache* open_cache(const Config& cfg, GenusCache& storage) {
  if (cfg.cache_path.empty()) return &storage;
  fs::path p(cfg.cache_path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  storage.open(cfg.cache_path);
  return &storage;
}

int cmd_genus(const Config& cfg, const std::vector<std::string>& files) {
  GenusCache cache;
  GenusOptions opt;
  opt.cache = open_cache(cfg, cache);
  opt.timeout_ms = cfg.timeout_s * 1000;
  opt.want_witness = cfg.emit_witness;
  json report = json::array();
  bool any_timeout = false;
  for (const std::string& file : files) {
    std::vector<LabeledGraph> graphs;
    try {
      graphs = load_inputs(file);
    } catch (const ParseError& e) {
      std::cerr << file << ": " << e.what() << "\n";
      return kExitUsage;
    }
    for (size_t i = 0; i < graphs.size(); ++i) {
      const LabeledGraph& g = graphs[i];
      json row;
      row["file"] = file;
      row["index"] = i;
      row["graph"] = graph_json(g);
      try {
        GenusResult r = euler_genus(g.underlying(), opt);
        row["genus"] = r.genus;
        row["bound"] = r.lower_bound_trace;
        if (cfg.emit_witness && r.witness)
          row["witness"] = embedding_json(*r.witness);
        std::cout << file << "[" << i << "]\tgenus=" << r.genus;
        if (g.has_terminals()) {
          GenusResult rp = euler_genus_plus(g, opt);
          row["genus_plus"] = rp.genus;
          std::cout << "\tgenus+=" << rp.genus;
        }
        std::cout << "\n";
      } catch (const TimeoutError&) {
        row["error"] = "timeout";
        any_timeout = true;
        std::cout << file << "[" << i << "]\ttimeout\n";
      }
      report.push_back(std::move(row));
    }
  }
  write_report(cfg, report);
  return any_timeout ? kExitTimeout : kExitOk;
}

json classify_json(const CriticalityReport& rep) {
  json j;
  j["genus"] = rep.genus;
  if (rep.genus_plus >= 0) j["genus_plus"] = rep.genus_plus;
  json ops = json::array();
  for (const OpRecord& rec : rep.ops) {
    json o;
    o["op"] = to_string(rec.op);
    o["genus"] = rec.genus;
    if (rec.genus_plus >= 0) o["genus_plus"] = rec.genus_plus;
    o["decreases_genus"] = rec.dec_genus;
    o["decreases_genus_plus"] = rec.dec_genus_plus;
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  j["classes"] = {{"cascade", rep.is_cascade},
                  {"s1", rep.in_s1},
                  {"genus_minor_minimal", rep.in_e_k},
                  {"genus_deletion_minimal", rep.in_e_star_k},
                  {"plus_critical", rep.in_c_circ_plus}};
  json w;
  if (rep.c2_witness) w["keeps_genus"] = to_string(*rep.c2_witness);
  if (rep.c3_witness) w["keeps_genus_plus"] = to_string(*rep.c3_witness);
  json viol = json::array();
  for (const MinorOp& op : rep.c1_violations) viol.push_back(to_string(op));
  w["condition_violations"] = viol;
  j["witnesses"] = std::move(w);
  return j;
}

int cmd_classify(const Config& cfg, const std::vector<std::string>& files) {
  GenusCache cache;
  ClassifyOptions opt;
  opt.cache = open_cache(cfg, cache);
  opt.timeout_ms = cfg.timeout_s * 1000;
  opt.workers = cfg.workers;
  json report = json::array();
  bool any_timeout = false;
  for (const std::string& file : files) {
    std::vector<LabeledGraph> graphs;
    try {
      graphs = load_inputs(file);
    } catch (const ParseError& e) {
      std::cerr << file << ": " << e.what() << "\n";
      return kExitUsage;
    }
    for (size_t i = 0; i < graphs.size(); ++i) {
      json row;
      row["file"] = file;
      row["index"] = i;
      row["graph"] = graph_json(graphs[i]);
      try {
        CriticalityReport rep = classify(graphs[i], opt);
        row.update(classify_json(rep));
        std::cout << file << "[" << i << "]\tgenus=" << rep.genus;
        if (rep.genus_plus >= 0) std::cout << " genus+=" << rep.genus_plus;
        if (graphs[i].has_terminals())
          std::cout << " cascade=" << (rep.is_cascade ? "yes" : "no")
                    << " s1=" << (rep.in_s1 ? "yes" : "no");
        std::cout << "\n";
      } catch (const TimeoutError&) {
        row["error"] = "timeout";
        any_timeout = true;
        std::cout << file << "[" << i << "]\ttimeout\n";
      }
      report.push_back(std::move(row));
    }
  }
  write_report(cfg, report);
  return any_timeout ? kExitTimeout : kExitOk;
}

int cmd_census(const Config& cfg) {
  GenusCache cache;
  CensusOptions opt;
  opt.cache = open_cache(cfg, cache);
  opt.workers = cfg.workers;
  opt.timeout_ms = cfg.timeout_s * 1000;

  fs::path outdir =
      cfg.out_path.empty() ? fs::path("census_out") : fs::path(cfg.out_path);
  fs::create_directories(outdir);

  json manifest;
  manifest["complete"] = false;
  int exit_code = kExitOk;
  try {
    CensusResult res;
    if (cfg.bases_only) {
      BaseCatalog cat = build_bases();
      std::set<std::string> seen;
      for (size_t bi = 0; bi < cat.bases_star.size(); ++bi)
        for (const LabeledGraph& g :
             enumerate_extensions(cat.bases_star[bi], opt)) {
          ClassifyOptions copt;
          copt.cache = opt.cache;
          copt.workers = opt.workers;
          CriticalityReport rep = classify(g, copt);
          if (!rep.in_s1) continue;
          std::string code = code_hex(canonical_form(g));
          if (!seen.insert(code).second) continue;
          res.members.push_back({g, "extension", std::to_string(bi), code});
        }
    } else {
      res = census_s1(opt);
    }

    manifest["count"] = res.members.size();
    manifest["candidates_generated"] = res.candidates_generated;
    manifest["candidates_unique"] = res.candidates_after_dedupe;
    manifest["value_filter_survivors"] = res.survivors_value_filter;
    json prov = json::object();
    for (auto& [gen, counts] : res.provenance)
      prov[gen] = {{"candidates", counts.first}, {"members", counts.second}};
    manifest["provenance"] = std::move(prov);

    if (!cfg.obstructions.empty()) {
      VerifyLevel level =
          cfg.verify == "full" ? VerifyLevel::Full : VerifyLevel::Spot;
      ObstructionDataset ds =
          load_obstructions(cfg.obstructions, level, opt.cache);
      std::vector<LabeledGraph> planar_critical =
          derive_planar_c1plus(ds, opt.cache);
      manifest["planar_critical_count"] = planar_critical.size();
      json contains = json::array();
      for (const CensusEntry& m : res.members) {
        bool any = false;
        for (const LabeledGraph& h : planar_critical)
          if (is_minor(h, m.graph)) any = true;
        contains.push_back(any);
        if (!any) exit_code = kExitVerification;
      }
      manifest["members_contain_planar_critical_minor"] = std::move(contains);
    }

    json members = json::array();
    for (size_t i = 0; i < res.members.size(); ++i) {
      const CensusEntry& m = res.members[i];
      char name[32];
      std::snprintf(name, sizeof(name), "member_%02zu.edges", i);
      std::ofstream of(outdir / name);
      of << write_edge_list(m.graph);
      json row;
      row["file"] = name;
      row["generator"] = m.generator;
      if (!m.base.empty()) row["base"] = m.base;
      row["code"] = m.code_hex;
      row["n"] = m.graph.vertex_count();
      row["m"] = m.graph.edge_count();
      if (auto pair = disjoint_xy_k_graphs(m.graph)) {
        row["k_graphs"] = {{"x_side", kgraph_json(pair->first)},
                           {"y_side", kgraph_json(pair->second)}};
      }
      members.push_back(std::move(row));
    }
    manifest["members"] = std::move(members);
    manifest["complete"] = true;
    std::cout << "census members: " << res.members.size() << "\n";
  } catch (const TimeoutError&) {
    manifest["error"] = "budget-exceeded";
    exit_code = kExitTimeout;
  } catch (const DatasetError& e) {
    manifest["error"] = e.what();
    exit_code = kExitVerification;
  }
  std::ofstream of(outdir / "manifest.json");
  of << manifest.dump(2) << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler genus and two-terminal criticality toolkit"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--timeout", cfg.timeout_s, "Per-graph budget in seconds")
      ->envname("CASCADE_TIMEOUT");
  app.add_option("--workers", cfg.workers, "Worker thread count")
      ->envname("CASCADE_WORKERS");
  app.add_option("--cache", cfg.cache_path, "Genus cache file (TSV)")
      ->envname("CASCADE_CACHE");
  app.add_option("--out", cfg.out_path, "Report or output directory path")
      ->envname("CASCADE_OUT");
  app.add_option("--verify", cfg.verify, "Verification level: spot or full")
      ->check(CLI::IsMember({"spot", "full"}))
      ->envname("CASCADE_VERIFY");
  app.add_option("--obstructions", cfg.obstructions,
                 "Obstruction dataset for cross-checks")
      ->envname("CASCADE_OBSTRUCTIONS");

  std::vector<std::string> genus_files, classify_files;
  CLI::App* genus = app.add_subcommand("genus", "Exact Euler genus per graph");
  genus->add_option("files", genus_files, "Input graphs")->required();
  genus->add_flag("--emit-witness", cfg.emit_witness,
                  "Include witness embeddings in the report");

  CLI::App* cls = app.add_subcommand("classify", "Criticality classification");
  cls->add_option("files", classify_files, "Input graphs")->required();

  CLI::App* census =
      app.add_subcommand("census", "Generate and verify the cascade census");
  census->add_flag("--bases-only", cfg.bases_only,
                   "Only the extension-derived members");

  CLI11_PARSE(app, argc, argv);
  if (cfg.timeout_s <= 0 || cfg.workers < 1) {
    std::cerr << "timeout must be positive and workers at least one\n";
    return kExitUsage;
  }
  try {
    if (genus->parsed()) return cmd_genus(cfg, genus_files);
    if (cls->parsed()) return cmd_classify(cfg, classify_files);
    if (census->parsed()) return cmd_census(cfg);
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
