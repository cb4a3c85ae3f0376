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

#include "matx/cli.hpp"
#include "matx/io.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "matx/catalog.hpp"
#include "test_support.hpp"

using namespace matx;
using matx_test::S;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "matx_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return CliResult{code, out.str(), err.str()};
}

const char* kU24 =
    "matroid v1\nkind bases\nn 4\nr 2\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

}  // namespace

TEST_CASE("parse_matroid on the three kinds") {
  SECTION("bases body gives U_{2,4}") {
    CHECK(parse_matroid(kU24) == uniform(2, 4));
  }
  SECTION("header line is optional") {
    CHECK(parse_matroid("kind bases\nn 4\nr 2\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n") ==
          uniform(2, 4));
  }
  SECTION("graph body gives the K4 graphic matroid") {
    const Matroid m = parse_matroid(
        "kind graph\nvertices 4\nedges 1-2 1-3 1-4 2-3 2-4 3-4\n");
    CHECK(m.rank == 3);
    CHECK(m.bases.size() == 16);
  }
  SECTION("matrix body gives U_{2,3} over GF(2)") {
    const Matroid m = parse_matroid(
        "kind matrix\np 2\nrows 2\ncols 3\n1 0 1\n0 1 1\n");
    CHECK(m == uniform(2, 3));
  }
  SECTION("validation failures carry the witness") {
    try {
      parse_matroid("kind bases\nn 4\nr 2\n1 2\n3 4\n");
      FAIL("expected ExchangeAxiomFailure");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::exchange_axiom_failure);
      CHECK(e.set_a == S({1, 2}));
      CHECK(e.set_b == S({3, 4}));
      CHECK(e.element == 0);
    }
  }
  SECTION("syntax errors carry line and column") {
    try {
      parse_matroid("kind bases\nn 4\nr 2\n1 x\n");
      FAIL("expected SyntaxError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::syntax_error);
      CHECK(e.line == 4);
      CHECK(e.column == 3);
    }
  }
}

TEST_CASE("emit/parse round-trips catalog matroids bit-exactly") {
  for (const auto& e : catalog_generate(CatalogMode::exhaustive, 2, 5)) {
    const std::string text = emit_matroid(e.matroid);
    CHECK(parse_matroid(text) == e.matroid);
    CHECK(emit_matroid(parse_matroid(text)) == text);
  }
  for (const auto& e : catalog_generate(CatalogMode::constructed, 3, 9)) {
    const std::string text = emit_matroid(e.matroid);
    CHECK(parse_matroid(text) == e.matroid);
  }
}

TEST_CASE("rank-0 matroids round-trip through the '-' form") {
  const Matroid m = make_matroid(2, {0});
  const std::string text = emit_matroid(m);
  CHECK(text.find("-\n") != std::string::npos);
  CHECK(parse_matroid(text) == m);
}

TEST_CASE("cli validate") {
  const auto good = write_temp("u24.mat", kU24);
  const auto res = cli({"validate", "--file", good.string()});
  CHECK(res.code == 0);
  CHECK(res.out == "matroid: n=4 r=2 bases=6\n");

  const auto bad = write_temp("bad.mat", "kind bases\nn 4\nr 2\n1 2\n3 4\n");
  const auto res_bad = cli({"validate", "--file", bad.string()});
  CHECK(res_bad.code == 1);
  CHECK(res_bad.out.find("ExchangeAxiomFailure") != std::string::npos);

  const auto syn = write_temp("syn.mat", "kind bases\nn 4\nr 2\n1 x\n");
  CHECK(cli({"validate", "--file", syn.string()}).code == 2);

  CHECK(cli({"validate", "--file", "/nonexistent/file.mat"}).code == 2);
}

TEST_CASE("cli rank and kpart") {
  const auto u24 = write_temp("u24.mat", kU24);
  const auto res = cli({"rank", "--file", u24.string(), "--set", "1,2,3"});
  CHECK(res.code == 0);
  CHECK(res.out == "rank({1,2,3}) = 2\n");

  const auto part = cli({"kpart", "--file", u24.string(), "-k", "2"});
  CHECK(part.code == 0);
  CHECK(part.out.find("{1,2}") != std::string::npos);

  const auto three = write_temp(
      "three.mat", "kind bases\nn 4\nr 2\n1 4\n2 4\n3 4\n");
  const auto fail_part = cli({"kpart", "--file", three.string(), "-k", "2",
                              "--json"});
  CHECK(fail_part.code == 1);
  const Json j = Json::parse(fail_part.out);
  CHECK(j["witnesses"]["violating_set"] == Json::array({1, 2, 3}));
}

TEST_CASE("cli fibers on U_{2,4}") {
  const auto u24 = write_temp("u24.mat", kU24);
  const auto res = cli({"fibers", "--file", u24.string(), "-d", "2",
                        "--variant", "w2", "--json"});
  CHECK(res.code == 0);
  const Json j = Json::parse(res.out);
  CHECK(j["result"]["fibers_total"].get<long>() >= 1);
  CHECK(j["result"]["fibers_total"] == j["result"]["fibers_connected"]);
  CHECK(j["schema"] == 1);
}

TEST_CASE("cli path replays") {
  const auto u24 = write_temp("u24.mat", kU24);
  const auto res = cli({"path", "--file", u24.string(), "--variant", "w2",
                        "--from", "1 2|3 4", "--to", "1 3|2 4", "--json"});
  CHECK(res.code == 0);
  const Json j = Json::parse(res.out);
  CHECK(j["result"]["length"] == 1);
  // Replay the witness against the input.
  const Json mv = j["witnesses"]["moves"][0];
  State s = canonical_multiset({S({1, 2}), S({3, 4})});
  Move move;
  move.variant = MoveVariant::W2;
  move.i = mv["positions"][0].get<int>();
  move.j = mv["positions"][1].get<int>();
  ElemSet d1 = 0, d2 = 0;
  for (const auto& e : mv["replacement"][0]) d1 |= elem_bit(e.get<int>() - 1);
  for (const auto& e : mv["replacement"][1]) d2 |= elem_bit(e.get<int>() - 1);
  move.d1 = d1;
  move.d2 = d2;
  CHECK(apply_move(s, move, MoveVariant::W2) ==
        canonical_multiset({S({1, 3}), S({2, 4})}));
}

TEST_CASE("cli conjecture checks") {
  const auto u24 = write_temp("u24.mat", kU24);
  CHECK(cli({"conjecture", "--file", u24.string(), "--check", "c25", "-k",
             "2"})
            .code == 0);
  const auto u25 = write_temp("u25.mat", emit_matroid(uniform(2, 5)));
  const auto c26 = cli({"conjecture", "--file", u25.string(), "--check",
                        "c26", "-k", "2", "-x", "5", "-y", "4", "--json"});
  CHECK(c26.code == 0);
  const Json j = Json::parse(c26.out);
  CHECK(j["result"]["status"] == "holds");

  const auto t32 = cli({"conjecture", "--file", u24.string(), "--check",
                        "t32", "-k", "2", "--bases", "1 3|2 4"});
  CHECK(t32.code == 0);

  const auto u26 = write_temp("u26.mat", emit_matroid(uniform(2, 6)));
  CHECK(cli({"conjecture", "--file", u26.string(), "--check", "blowup",
             "--bases", "1 2|3 4|5 6"})
            .code == 0);

  CHECK(cli({"conjecture", "--file", u24.string(), "--check", "saturation",
             "--from", "1 2|3 4", "--to", "1 3|2 4", "--set", "1 2"})
            .code == 0);
}

TEST_CASE("cli graph kinds and exit codes") {
  const auto u24 = write_temp("u24.mat", kU24);
  CHECK(cli({"graph", "--file", u24.string(), "--kind", "basis"}).code == 0);
  CHECK(cli({"graph", "--file", u24.string(), "--kind", "complementary",
             "-k", "2"})
            .code == 0);
  CHECK(cli({"graph", "--file", u24.string(), "--kind", "kbase-modified"})
            .code == 0);
  // k=2 k-base graph requires the flag.
  CHECK(cli({"graph", "--file", u24.string(), "--kind", "kbase", "-k", "2"})
            .code == 2);
  const auto flagged = cli({"graph", "--file", u24.string(), "--kind",
                            "kbase", "-k", "2", "--allow-k2"});
  CHECK(flagged.code == 1);  // three isolated matchings
  // Cap exceeded.
  CHECK(cli({"graph", "--file", u24.string(), "--kind", "basis", "--cap",
             "2"})
            .code == 3);
}

TEST_CASE("cli scan is deterministic across worker counts") {
  const auto run = [&](const std::string& workers) {
    return cli({"scan", "--mode", "exhaustive", "-r", "2", "--n-max", "4",
                "-k", "2,3", "-d", "2", "--workers", workers, "--json"});
  };
  const auto one = run("1");
  const auto four = run("4");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  const Json j = Json::parse(one.out);
  CHECK(j["result"]["fail"] == 0);
}

TEST_CASE("cli catalog writes parseable files") {
  const auto dir = std::filesystem::temp_directory_path() / "matx_catalog";
  std::filesystem::remove_all(dir);
  const auto res = cli({"catalog", "--mode", "exhaustive", "-r", "1",
                        "--n-max", "3", "--out", dir.string()});
  CHECK(res.code == 0);
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK_NOTHROW(parse_matroid(buf.str()));
    ++count;
  }
  CHECK(count == 6);  // 1 + 2 + 3 matroids for n = 1, 2, 3
}

TEST_CASE("json reports are canonical") {
  const auto u24 = write_temp("u24.mat", kU24);
  const auto a = cli({"fibers", "--file", u24.string(), "-d", "2",
                      "--variant", "w2", "--json"});
  const auto b = cli({"fibers", "--file", u24.string(), "-d", "2",
                      "--variant", "w2", "--json"});
  CHECK(a.out == b.out);
  SECTION("--timing adds a non-canonical field") {
    const auto timed = cli({"fibers", "--file", u24.string(), "-d", "2",
                            "--variant", "w2", "--json", "--timing"});
    const Json j = Json::parse(timed.out);
    CHECK(j.contains("timing_ms"));
    CHECK_FALSE(Json::parse(a.out).contains("timing_ms"));
  }
}

TEST_CASE("MATX_CAP and MATX_WORKERS env fallbacks") {
  const auto u24 = write_temp("u24.mat", kU24);
  setenv("MATX_CAP", "2", 1);
  CHECK(cli({"graph", "--file", u24.string(), "--kind", "basis"}).code == 3);
  unsetenv("MATX_CAP");
  setenv("MATX_WORKERS", "4", 1);
  CHECK(cli({"fibers", "--file", u24.string(), "-d", "2", "--variant", "w2"})
            .code == 0);
  unsetenv("MATX_WORKERS");
  // An explicit flag beats the environment.
  setenv("MATX_CAP", "2", 1);
  CHECK(cli({"graph", "--file", u24.string(), "--kind", "basis", "--cap",
             "100"})
            .code == 0);
  unsetenv("MATX_CAP");
}

TEST_CASE("catalog isomorphism dedup") {
  // The constructed rank-2 catalog names U_{2,4} and its GF(2)-linear twin
  // separately; --dedup-iso keeps one copy per isomorphism class.
  const auto plain = cli({"catalog", "--mode", "constructed", "-r", "2",
                          "--n-max", "5", "--json"});
  const auto dedup = cli({"catalog", "--mode", "constructed", "-r", "2",
                          "--n-max", "5", "--json", "--dedup-iso"});
  CHECK(plain.code == 0);
  CHECK(dedup.code == 0);
  const auto count_plain = Json::parse(plain.out)["result"]["count"].get<int>();
  const auto count_dedup = Json::parse(dedup.out)["result"]["count"].get<int>();
  CHECK(count_dedup < count_plain);
  CHECK(count_dedup > 0);
}
