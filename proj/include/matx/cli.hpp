// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matx/catalog.hpp"
#include "matx/conjectures.hpp"
#include "matx/io.hpp"

namespace matx {

// Exit-code contract: 0 = check passed / answer produced, 1 = check failed
// with a counterexample, 2 = usage or parse error, 3 = cap exceeded.
inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::syntax_error:
    case Errc::invalid_argument:
      return 2;
    case Errc::cap_exceeded:
    case Errc::vertex_cap_exceeded:
    case Errc::fiber_cap_exceeded:
    case Errc::ground_set_too_large:
      return 3;
    default:
      return 1;
  }
}

namespace cli_detail {

struct Common {
  std::string file;
  bool json = false;
  bool timing = false;
  std::size_t cap = 1'000'000;
  int workers = 1;
  std::chrono::steady_clock::time_point start;
};

inline void apply_env_defaults(Common& c, bool cap_set, bool workers_set) {
  if (!cap_set) {
    if (const char* env = std::getenv("MATX_CAP"))
      c.cap = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  }
  if (!workers_set) {
    if (const char* env = std::getenv("MATX_WORKERS"))
      c.workers = static_cast<int>(std::strtol(env, nullptr, 10));
  }
  if (c.workers < 1) c.workers = 1;
}

struct LoadedMatroid {
  Matroid matroid;
  std::string file;
  std::string hash;
};

inline LoadedMatroid load_matroid(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in)
    fail(Errc::invalid_argument, "cannot open file '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return LoadedMatroid{parse_matroid(text), file, content_hash(text)};
}

inline Json base_report(const std::string& command,
                        const LoadedMatroid* input) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["params"] = Json::object();
  j["result"] = Json::object();
  j["witnesses"] = Json::object();
  j["skipped"] = Json::array();
  if (input) {
    j["input"]["file"] = input->file;
    j["input"]["hash"] = input->hash;
    j["input"]["matroid"] = {{"n", input->matroid.ground_size},
                             {"r", input->matroid.rank},
                             {"bases", input->matroid.bases.size()}};
  }
  return j;
}

// Canonical JSON carries no timing so identical runs are byte-identical;
// --timing opts into a non-canonical timing_ms field.
inline void emit(Json& report, const Common& common, const std::string& text,
                 std::ostream& out) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - common.start)
                           .count();
  if (common.json) {
    if (common.timing) report["timing_ms"] = elapsed;
    out << report.dump(2) << "\n";
  } else {
    out << text;
    if (common.timing) out << "time: " << elapsed << " ms\n";
  }
}

inline Json error_json(const Error& e) {
  Json j;
  j["error"]["code"] = errc_name(e.code());
  j["error"]["message"] = e.what();
  if (e.set_a) j["error"]["set_a"] = set_to_json(e.set_a);
  if (e.set_b) j["error"]["set_b"] = set_to_json(e.set_b);
  if (e.element >= 0) j["error"]["element"] = e.element + 1;
  return j;
}

}  // namespace cli_detail

// All subcommands, callable in-process. Output goes to `out`, diagnostics to
// `err`; the return value is the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::Common;
  CLI::App app{"matroid exchange computations"};
  app.require_subcommand(1);

  Common common;
  bool cap_set = false, workers_set = false;

  auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
    if (needs_file)
      cmd->add_option("--file", common.file, "matroid file")->required();
    cmd->add_flag("--json", common.json, "canonical JSON report");
    cmd->add_flag("--timing", common.timing,
                  "append a non-canonical timing field");
    cmd->add_option("--cap", common.cap, "vertex/fiber cap")
        ->each([&](const std::string&) { cap_set = true; });
    cmd->add_option("--workers", common.workers, "worker threads")
        ->each([&](const std::string&) { workers_set = true; });
  };

  // validate
  CLI::App* c_validate = app.add_subcommand("validate", "check a matroid file");
  add_common(c_validate);

  // rank
  std::string set_arg;
  CLI::App* c_rank = app.add_subcommand("rank", "rank of a subset");
  add_common(c_rank);
  c_rank->add_option("--set", set_arg, "subset, e.g. '1,3'")->required();

  // kpart
  int k_arg = 2;
  CLI::App* c_kpart = app.add_subcommand("kpart", "partition into k bases");
  add_common(c_kpart);
  c_kpart->add_option("-k,--k", k_arg, "number of blocks")->required();

  // complementary
  CLI::App* c_comp =
      app.add_subcommand("complementary", "is a basis complementary");
  add_common(c_comp);
  c_comp->add_option("--set", set_arg, "basis")->required();
  c_comp->add_option("-k,--k", k_arg, "k")->required();

  // graph
  std::string kind_arg = "basis";
  bool allow_k2 = false;
  CLI::App* c_graph = app.add_subcommand("graph", "build an exchange graph");
  add_common(c_graph);
  c_graph
      ->add_option("--kind", kind_arg,
                   "basis|complementary|kbase|kbase-modified")
      ->required();
  c_graph->add_option("-k,--k", k_arg, "k (non-basis kinds)");
  c_graph->add_flag("--allow-k2", allow_k2, "allow the flagged k=2 k-base graph");

  // fibers
  int d_arg = 2;
  std::string variant_arg = "w2";
  bool strict_w3 = false;
  CLI::App* c_fibers =
      app.add_subcommand("fibers", "fiber connectivity at a degree");
  add_common(c_fibers);
  c_fibers->add_option("-d,--degree", d_arg, "degree")->required();
  c_fibers->add_option("--variant", variant_arg, "w1|w2|w3");
  c_fibers->add_flag("--strict-w3", strict_w3, "single order after W3 moves");

  // path
  std::string from_arg, to_arg;
  CLI::App* c_path = app.add_subcommand("path", "move sequence between states");
  add_common(c_path);
  c_path->add_option("--variant", variant_arg, "w1|w2|w3");
  c_path->add_option("--from", from_arg, "state, e.g. '1 2|3 4'")->required();
  c_path->add_option("--to", to_arg, "state")->required();
  c_path->add_flag("--strict-w3", strict_w3, "single order after W3 moves");

  // conjecture
  std::string check_arg;
  std::string bases_arg;
  int x_arg = 0, y_arg = 0;
  CLI::App* c_conj = app.add_subcommand("conjecture", "run a conjecture check");
  add_common(c_conj);
  c_conj->add_option("--check", check_arg, "c25|c26|t32|blowup|saturation")
      ->required();
  c_conj->add_option("-k,--k", k_arg, "k");
  c_conj->add_option("-x", x_arg, "element x (c26)");
  c_conj->add_option("-y", y_arg, "element y (c26)");
  c_conj->add_option("--bases", bases_arg, "disjoint bases, e.g. '1 2|3 4'");
  c_conj->add_option("--set", set_arg, "set argument (F, or basis B)");
  c_conj->add_option("--from", from_arg, "state s1 (saturation)");
  c_conj->add_option("--to", to_arg, "state s2 (saturation)");

  // scan
  std::string mode_arg = "exhaustive";
  int r_arg = 2, nmax_arg = 5;
  std::string kset_arg = "2,3", dset_arg = "2";
  CLI::App* c_scan = app.add_subcommand("scan", "catalog-wide conjecture scan");
  add_common(c_scan, false);
  c_scan->add_option("--mode", mode_arg, "exhaustive|constructed");
  c_scan->add_option("-r,--rank", r_arg, "rank")->required();
  c_scan->add_option("--n-max", nmax_arg, "ground size limit");
  c_scan->add_option("-k,--k", kset_arg, "k values, e.g. '2,3'");
  c_scan->add_option("-d,--degree", dset_arg, "degrees, e.g. '2'");

  // catalog
  std::string out_dir;
  bool dedup_iso = false;
  CLI::App* c_catalog = app.add_subcommand("catalog", "generate a catalog");
  add_common(c_catalog, false);
  c_catalog->add_option("--mode", mode_arg, "exhaustive|constructed");
  c_catalog->add_option("-r,--rank", r_arg, "rank")->required();
  c_catalog->add_option("--n-max", nmax_arg, "ground size limit");
  c_catalog->add_option("--out", out_dir, "write .mat files to a directory");
  c_catalog->add_flag("--dedup-iso", dedup_iso,
                      "drop isomorphic duplicates (n <= 8)");

  std::vector<const char*> argv;
  argv.push_back("matx");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  cli_detail::apply_env_defaults(common, cap_set, workers_set);
  common.start = std::chrono::steady_clock::now();

  auto parse_variant = [&](const std::string& v) {
    if (v == "w1") return MoveVariant::W1;
    if (v == "w2") return MoveVariant::W2;
    if (v == "w3") return MoveVariant::W3;
    fail(Errc::invalid_argument, "unknown variant '" + v + "'");
  };
  auto parse_mode = [&](const std::string& v) {
    if (v == "exhaustive") return CatalogMode::exhaustive;
    if (v == "constructed") return CatalogMode::constructed;
    fail(Errc::invalid_argument, "unknown catalog mode '" + v + "'");
  };
  auto parse_int_list = [&](const std::string& text) {
    std::vector<int> vals;
    std::string normalized = text;
    for (char& ch : normalized)
      if (ch == ',') ch = ' ';
    std::istringstream in(normalized);
    int v;
    while (in >> v) vals.push_back(v);
    if (vals.empty())
      fail(Errc::invalid_argument, "empty integer list '" + text + "'");
    return vals;
  };

  try {
    if (c_validate->parsed()) {
      Json report = cli_detail::base_report("validate", nullptr);
      try {
        const auto loaded = cli_detail::load_matroid(common.file);
        report = cli_detail::base_report("validate", &loaded);
        report["result"]["valid"] = true;
        std::ostringstream text;
        text << "matroid: n=" << loaded.matroid.ground_size
             << " r=" << loaded.matroid.rank
             << " bases=" << loaded.matroid.bases.size() << "\n";
        cli_detail::emit(report, common, text.str(), out);
        return 0;
      } catch (const Error& e) {
        if (e.code() == Errc::syntax_error ||
            e.code() == Errc::invalid_argument)
          throw;
        report["result"]["valid"] = false;
        report["witnesses"] = cli_detail::error_json(e);
        cli_detail::emit(report, common,
                         std::string("invalid: ") + e.what() + "\n", out);
        return exit_code_for(e.code());
      }
    }

    if (c_rank->parsed()) {
      const auto loaded = cli_detail::load_matroid(common.file);
      const ElemSet a = parse_set_arg(set_arg, loaded.matroid.ground_size);
      const int rk = rank(loaded.matroid, a);
      Json report = cli_detail::base_report("rank", &loaded);
      report["params"]["set"] = set_to_json(a);
      report["result"]["rank"] = rk;
      cli_detail::emit(report, common,
                       "rank(" + format_set(a) + ") = " + std::to_string(rk) +
                           "\n",
                       out);
      return 0;
    }

    if (c_kpart->parsed()) {
      const auto loaded = cli_detail::load_matroid(common.file);
      const Matroid& m = loaded.matroid;
      Json report = cli_detail::base_report("kpart", &loaded);
      report["params"]["k"] = k_arg;
      const auto part = partition_into_bases(m, k_arg);
      if (part) {
        report["result"]["partitioned"] = true;
        report["witnesses"]["partition"] = blocks_to_json(part->blocks);
        std::ostringstream text;
        text << "partition into " << k_arg << " bases:";
        for (Basis b : part->blocks) text << " " << format_set(b);
        text << "\n";
        cli_detail::emit(report, common, text.str(), out);
        return 0;
      }
      report["result"]["partitioned"] = false;
      std::ostringstream text;
      text << "no partition into " << k_arg << " bases";
      if (m.ground_size <= 20) {
        const auto viol = violating_set(m, k_arg);
        if (viol) {
          report["witnesses"]["violating_set"] = set_to_json(viol->set);
          report["witnesses"]["violating_rank"] = viol->rank;
          text << "; violating set " << format_set(viol->set) << " with rank "
               << viol->rank;
        } else {
          report["witnesses"]["size_mismatch"] = true;
          text << "; k*r != n";
        }
      } else {
        report["skipped"].push_back("violating-set search (n > 20)");
      }
      text << "\n";
      cli_detail::emit(report, common, text.str(), out);
      return 1;
    }

    if (c_comp->parsed()) {
      const auto loaded = cli_detail::load_matroid(common.file);
      const ElemSet b = parse_set_arg(set_arg, loaded.matroid.ground_size);
      const bool comp = is_complementary(loaded.matroid, b, k_arg);
      Json report = cli_detail::base_report("complementary", &loaded);
      report["params"]["set"] = set_to_json(b);
      report["params"]["k"] = k_arg;
      report["result"]["complementary"] = comp;
      cli_detail::emit(report, common,
                       format_set(b) + (comp ? " is complementary\n"
                                             : " is not complementary\n"),
                       out);
      return comp ? 0 : 1;
    }

    if (c_graph->parsed()) {
      const auto loaded = cli_detail::load_matroid(common.file);
      const Matroid& m = loaded.matroid;
      ExchangeGraph g;
      if (kind_arg == "basis") {
        g = basis_graph(m, common.cap);
      } else if (kind_arg == "complementary") {
        g = complementary_basis_graph(m, k_arg, false);
      } else if (kind_arg == "kbase-modified") {
        g = complementary_basis_graph(m, 2, true);
      } else if (kind_arg == "kbase") {
        g = k_base_graph(m, k_arg, allow_k2, common.cap);
      } else {
        fail(Errc::invalid_argument, "unknown graph kind '" + kind_arg + "'");
      }
      const GraphAnalysis a = analyze(g);
      Json report = cli_detail::base_report("graph", &loaded);
      report["params"]["kind"] = kind_arg;
      if (kind_arg != "basis") report["params"]["k"] = k_arg;
      report["result"]["vertices"] = g.vertex_count();
      report["result"]["edges"] = g.edges.size();
      report["result"]["connected"] = a.is_connected;
      report["result"]["components"] = a.component_count;
      report["result"]["component_sizes"] = a.component_sizes;
      if (a.diameter_skipped)
        report["skipped"].push_back("diameter (component above threshold)");
      else if (a.diameter_of_largest)
        report["result"]["diameter_of_largest"] = *a.diameter_of_largest;
      // Adjacency export for desk-size graphs.
      if (g.vertex_count() <= 4096) {
        Json verts = Json::array();
        if (g.kind == GraphKind::kbase) {
          for (const auto& p : g.partition_vertices)
            verts.push_back(blocks_to_json(p));
        } else {
          for (Basis b : g.basis_vertices) verts.push_back(set_to_json(b));
        }
        Json edges = Json::array();
        for (const auto& [i, j] : g.edges)
          edges.push_back(Json::array({i, j}));
        report["result"]["graph"]["vertices"] = std::move(verts);
        report["result"]["graph"]["adjacency"] = std::move(edges);
      } else {
        report["skipped"].push_back("adjacency export (graph too large)");
      }
      std::ostringstream text;
      text << graph_kind_name(g.kind) << " graph: " << g.vertex_count()
           << " vertices, " << g.edges.size() << " edges, "
           << a.component_count << " component(s)";
      if (a.diameter_of_largest)
        text << ", diameter " << *a.diameter_of_largest;
      text << "\n";
      cli_detail::emit(report, common, text.str(), out);
      return a.is_connected ? 0 : 1;
    }

    if (c_fibers->parsed()) {
      const auto loaded = cli_detail::load_matroid(common.file);
      const MoveVariant variant = parse_variant(variant_arg);
      const FiberReport fr = check_white_degree(
          loaded.matroid, d_arg, variant, common.cap, common.workers,
          strict_w3);
      Json report = cli_detail::base_report("fibers", &loaded);
      report["params"]["d"] = d_arg;
      report["params"]["variant"] = variant_arg;
      report["params"]["strict_w3"] = strict_w3;
      report["result"]["fibers_total"] = fr.fibers_total;
      report["result"]["fibers_connected"] = fr.fibers_connected;
      Json ces = Json::array();
      for (const auto& ce : fr.counterexamples) {
        Json c;
        c["u"] = ce.u;
        c["s1"] = state_to_json(ce.s1);
        c["s2"] = state_to_json(ce.s2);
        ces.push_back(std::move(c));
      }
      report["witnesses"]["counterexamples"] = std::move(ces);
      if (!fr.counterexamples.empty())
        report["witnesses"]["matroid_file"] = emit_matroid(loaded.matroid);
      std::ostringstream text;
      text << "degree " << d_arg << " " << variant_arg << ": "
           << fr.fibers_connected << "/" << fr.fibers_total
           << " fibers connected\n";
      for (const auto& ce : fr.counterexamples) {
        text << "  disconnected fiber, u=(";
        for (std::size_t i = 0; i < ce.u.size(); ++i)
          text << (i ? "," : "") << ce.u[i];
        text << ")\n";
      }
      cli_detail::emit(report, common, text.str(), out);
      return fr.all_connected() ? 0 : 1;
    }

    if (c_path->parsed()) {
      const auto loaded = cli_detail::load_matroid(common.file);
      const MoveVariant variant = parse_variant(variant_arg);
      const State s1 = parse_state_arg(from_arg, loaded.matroid.ground_size);
      const State s2 = parse_state_arg(to_arg, loaded.matroid.ground_size);
      const auto path = generation_path(loaded.matroid, s1, s2, variant,
                                        common.cap, strict_w3);
      Json report = cli_detail::base_report("path", &loaded);
      report["params"]["from"] = state_to_json(s1);
      report["params"]["to"] = state_to_json(s2);
      report["params"]["variant"] = variant_arg;
      report["result"]["found"] = path.has_value();
      if (path) {
        report["result"]["length"] = path->size();
        report["witnesses"]["moves"] = path_to_json(*path);
        cli_detail::emit(report, common,
                         "path of length " + std::to_string(path->size()) +
                             "\n",
                         out);
        return 0;
      }
      cli_detail::emit(report, common, "states are not connected\n", out);
      return 1;
    }

    if (c_conj->parsed()) {
      const auto loaded = cli_detail::load_matroid(common.file);
      const Matroid& m = loaded.matroid;
      Json report = cli_detail::base_report("conjecture", &loaded);
      report["params"]["check"] = check_arg;

      if (check_arg == "c25") {
        report["params"]["k"] = k_arg;
        const ConnectivityReport res = check_complementary_connected(m, k_arg);
        report["result"]["connected"] = res.connected;
        report["result"]["vertices"] = res.graph.vertex_count();
        report["result"]["components"] = res.analysis.component_count;
        if (!res.connected) {
          // Persist one basis per component as the counterexample seed.
          detail::UnionFind uf(static_cast<int>(res.graph.vertex_count()));
          for (const auto& [a, b] : res.graph.edges) uf.merge(a, b);
          std::map<int, Basis> firsts;
          for (int i = 0; i < static_cast<int>(res.graph.vertex_count()); ++i)
            firsts.emplace(uf.find(i),
                           res.graph.basis_vertices[static_cast<std::size_t>(i)]);
          Json comps = Json::array();
          for (const auto& [root, b] : firsts) {
            (void)root;
            comps.push_back(set_to_json(b));
          }
          report["witnesses"]["component_bases"] = std::move(comps);
        }
        cli_detail::emit(report, common,
                         std::string("complementary graph is ") +
                             (res.connected ? "connected\n" : "DISCONNECTED\n"),
                         out);
        return res.connected ? 0 : 1;
      }

      if (check_arg == "c26") {
        report["params"]["k"] = k_arg;
        report["params"]["x"] = x_arg;
        report["params"]["y"] = y_arg;
        const Kr1Result res =
            check_kr_plus_1(m, k_arg, x_arg - 1, y_arg - 1, common.cap);
        if (res.status == Kr1Status::not_applicable) {
          report["result"]["status"] = "not-applicable";
          cli_detail::emit(report, common, "not applicable\n", out);
          return 0;
        }
        report["result"]["status"] =
            res.status == Kr1Status::holds ? "holds" : "fails";
        if (res.witness) {
          report["witnesses"]["partition_x"] =
              blocks_to_json(res.witness->partition_x);
          report["witnesses"]["partition_y"] =
              blocks_to_json(res.witness->partition_y);
          report["witnesses"]["shared"] = set_to_json(res.witness->shared);
        }
        cli_detail::emit(report, common,
                         res.status == Kr1Status::holds
                             ? "partitions share a basis\n"
                             : "NO partitions share a basis\n",
                         out);
        return res.status == Kr1Status::holds ? 0 : 1;
      }

      if (check_arg == "t32") {
        report["params"]["k"] = k_arg;
        const std::vector<Basis> d = parse_state_arg(bases_arg, m.ground_size);
        const int s = k_arg - static_cast<int>(d.size());
        const BoundAudit audit = audit_noncomplementary_bound(m, k_arg, s, d);
        report["params"]["s"] = s;
        report["params"]["bases"] = blocks_to_json(d);
        report["result"]["count"] = audit.count;
        report["result"]["bound"] = audit.bound;
        report["result"]["ok"] = audit.ok;
        std::ostringstream text;
        text << audit.count << " not complementary <= bound " << audit.bound
             << (audit.ok ? " (ok)\n" : " (VIOLATED: bug)\n");
        cli_detail::emit(report, common, text.str(), out);
        return audit.ok ? 0 : 1;
      }

      if (check_arg == "blowup") {
        const std::vector<Basis> bs = parse_state_arg(bases_arg, m.ground_size);
        const ElemSet f =
            set_arg.empty() ? 0 : parse_set_arg(set_arg, m.ground_size);
        report["params"]["bases"] = blocks_to_json(bs);
        report["params"]["F"] = set_to_json(f);
        const auto lab = detect_blowup_containment(m, bs, f);
        report["result"]["found"] = lab.has_value();
        if (lab) {
          Json classes = Json::array();
          for (int lb = 0; lb < m.rank; ++lb) {
            ElemSet cls = 0;
            for (int e = 0; e < m.ground_size; ++e)
              if (lab->label[static_cast<std::size_t>(e)] == lb)
                cls |= elem_bit(e);
            classes.push_back(set_to_json(cls));
          }
          report["witnesses"]["label_classes"] = std::move(classes);
          cli_detail::emit(report, common, "blow-up labeling found\n",
                           out);
          return 0;
        }
        cli_detail::emit(report, common, "no blow-up labeling\n", out);
        return 1;
      }

      if (check_arg == "saturation") {
        const State s1 = parse_state_arg(from_arg, m.ground_size);
        const State s2 = parse_state_arg(to_arg, m.ground_size);
        const Basis b = parse_set_arg(set_arg, m.ground_size);
        report["params"]["s1"] = state_to_json(s1);
        report["params"]["s2"] = state_to_json(s2);
        report["params"]["basis"] = set_to_json(b);
        const bool ok = saturation_check(m, s1, s2, b, common.cap);
        report["result"]["saturated"] = ok;
        cli_detail::emit(report, common,
                         ok ? "padded states are connected\n"
                            : "padded states are NOT connected\n",
                         out);
        return ok ? 0 : 1;
      }

      fail(Errc::invalid_argument, "unknown check '" + check_arg + "'");
    }

    if (c_scan->parsed()) {
      const auto catalog =
          catalog_generate(parse_mode(mode_arg), r_arg, nmax_arg);
      const ScanReport sr =
          corollary_scan(catalog, r_arg, parse_int_list(kset_arg),
                         parse_int_list(dset_arg), common.cap, common.workers);
      Json report = cli_detail::base_report("scan", nullptr);
      report["params"]["mode"] = mode_arg;
      report["params"]["r"] = r_arg;
      report["params"]["n_max"] = nmax_arg;
      report["params"]["k"] = parse_int_list(kset_arg);
      report["params"]["d"] = parse_int_list(dset_arg);
      report["result"]["pass"] = sr.pass;
      report["result"]["fail"] = sr.fail;
      report["result"]["skipped"] = sr.skipped;
      report["result"]["not_applicable"] = sr.not_applicable;
      report["result"]["note"] = sr.note;
      Json items = Json::array();
      for (const ScanItem& item : sr.items) {
        Json j;
        j["matroid"] = item.matroid;
        j["check"] = item.check;
        j["status"] = scan_status_name(item.status);
        j["detail"] = item.detail;
        items.push_back(std::move(j));
      }
      report["result"]["items"] = std::move(items);
      if (sr.fail > 0) {
        Json dumps = Json::object();
        for (const ScanItem& item : sr.items) {
          if (item.status != ScanStatus::fail) continue;
          for (const CatalogEntry& e : catalog)
            if (e.name == item.matroid)
              dumps[e.name] = emit_matroid(e.matroid);
        }
        report["witnesses"]["counterexample_matroids"] = std::move(dumps);
      }
      std::ostringstream text;
      text << "scan: " << sr.pass << " pass, " << sr.fail << " fail, "
           << sr.skipped << " skipped, " << sr.not_applicable
           << " not applicable\n";
      for (const ScanItem& item : sr.items)
        if (item.status == ScanStatus::fail)
          text << "  FAIL " << item.matroid << " " << item.check << ": "
               << item.detail << "\n";
      cli_detail::emit(report, common, text.str(), out);
      return sr.fail == 0 ? 0 : 1;
    }

    if (c_catalog->parsed()) {
      auto catalog = catalog_generate(parse_mode(mode_arg), r_arg, nmax_arg);
      if (dedup_iso) {
        std::map<std::pair<int, std::vector<Basis>>, bool> seen;
        std::vector<CatalogEntry> unique;
        for (CatalogEntry& e : catalog) {
          const Matroid canon = canonical_relabel(e.matroid);
          if (seen.emplace(std::make_pair(canon.ground_size, canon.bases), true)
                  .second)
            unique.push_back(std::move(e));
        }
        catalog = std::move(unique);
      }
      Json report = cli_detail::base_report("catalog", nullptr);
      report["params"]["mode"] = mode_arg;
      report["params"]["r"] = r_arg;
      report["params"]["n_max"] = nmax_arg;
      Json items = Json::array();
      std::ostringstream text;
      for (const CatalogEntry& e : catalog) {
        Json j;
        j["name"] = e.name;
        j["n"] = e.matroid.ground_size;
        j["r"] = e.matroid.rank;
        j["bases"] = e.matroid.bases.size();
        items.push_back(std::move(j));
        text << e.name << ": n=" << e.matroid.ground_size
             << " r=" << e.matroid.rank << " bases=" << e.matroid.bases.size()
             << "\n";
      }
      report["result"]["count"] = catalog.size();
      report["result"]["entries"] = std::move(items);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const CatalogEntry& e : catalog) {
          std::ofstream f(out_dir + "/" + e.name + ".mat", std::ios::binary);
          f << emit_matroid(e.matroid);
        }
        report["result"]["written_to"] = out_dir;
      }
      cli_detail::emit(report, common, text.str(), out);
      return 0;
    }

    err << "error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    if (common.json)
      out << cli_detail::error_json(e).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace matx
