/*
 * Copyright 2026 The cpl authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "cpl/json_io.hpp"

#ifndef CPL_CLI_PATH
#error "CPL_CLI_PATH must point at the cpl binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CPL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

// One gallery materialization shared by the whole binary.
const std::string& gallery_dir() {
  static std::string dir = [] {
    std::string d =
        (fs::temp_directory_path() / "cpl_cli_gallery").string();
    fs::remove_all(d);
    RunResult r = run("examples --out " + d);
    REQUIRE(r.exit_code == 0);
    return d;
  }();
  return dir;
}

std::string gal(const std::string& name) {
  return gallery_dir() + "/" + name + ".json";
}

}  // namespace

TEST_CASE("examples materializes a parsable gallery") {
  const std::string& dir = gallery_dir();
  CHECK(fs::exists(dir + "/manifest.json"));
  cpl::Json manifest = cpl::load_json(dir + "/manifest.json");
  CHECK(manifest.size() >= 18);
  for (const auto& entry : manifest) {
    cpl::Json j = cpl::load_json(dir + "/" + entry.at("file").get<std::string>());
    switch (cpl::detect_kind(j)) {
      case cpl::FileKind::kripke:
        (void)cpl::model_from_json(j);
        break;
      case cpl::FileKind::simplicial:
        (void)cpl::simplicial_from_json(j);
        break;
      case cpl::FileKind::pattern:
        (void)cpl::pattern_from_json(j);
        break;
    }
  }
}

TEST_CASE("check evaluates boxes through bound patterns") {
  RunResult r = run("check --model " + gal("byz_base") +
                    " --world w1 --formula \"[byz;{(a,b)}] K{b} p_a\""
                    " --pattern byz=" + gal("byz"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");

  r = run("check --model " + gal("byz_base") +
          " --world w1 --formula \"[byz;I] K{b} p_a\" --pattern byz=" +
          gal("byz"));
  CHECK(r.exit_code == 1);
  CHECK(r.out == "false\n");

  r = run("check --model " + gal("byz_base") +
          " --world w1 --formula \"[byz;Rab] K{b} p_a\" --pattern byz=" +
          gal("byz") + " --graph \"Rab=(a,b)\"");
  CHECK(r.exit_code == 0);
}

TEST_CASE("check works on simplicial inputs") {
  RunResult r = run("check --model " + gal("simp_cbisim_cp") +
                    " --facet {a1,b1,cl} --formula \"D{a,b} p_c\"");
  CHECK(r.exit_code == 0);
  r = run("check --model " + gal("simp_cbisim_c") +
          " --facet {c1,va,vb} --formula \"D{a,b} p_c\"");
  CHECK(r.exit_code == 1);
}

TEST_CASE("update writes the expected complex") {
  RunResult r = run("update --model " + gal("tri_shared_a") +
                    " --pattern " + gal("public3"));
  CHECK(r.exit_code == 0);
  cpl::Json j = cpl::Json::parse(r.out);
  cpl::SimplicialModel c = cpl::simplicial_from_json(j);
  CHECK(c.facet_count() == 2);
  CHECK(c.vertex_count() == 6);
}

TEST_CASE("bisim exit codes and certificates") {
  RunResult r = run("bisim --left " + gal("cbisim_m") + ":w --right " +
                    gal("cbisim_mp") + ":w1 --collective");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("not-related") != std::string::npos);
  CHECK(r.out.find("D{a,b} p_c") != std::string::npos);

  r = run("bisim --left " + gal("cbisim_m") + ":w --right " +
          gal("cbisim_mp") + ":w1 --standard");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("related") == 0);

  // Mixed kinds translate before comparing.
  r = run("bisim --left " + gal("cbisim_m") + ":w --right " +
          gal("simp_cbisim_c") + ":{c1,va,vb}");
  CHECK(r.exit_code == 0);
}

TEST_CASE("convert maps points along the translation") {
  std::string out =
      (fs::temp_directory_path() / "cpl_cli_convert.json").string();
  RunResult r = run("convert --model " + gal("duo_a") +
                    " --to simplicial --world u -o " + out);
  CHECK(r.exit_code == 0);
  cpl::Json j = cpl::load_json(out);
  CHECK(j.contains("point"));
  cpl::SimplicialModel c = cpl::simplicial_from_json(j);
  CHECK(c.facet_by_name(j.at("point").get<std::string>()) >= 0);
  CHECK(c.facet_count() == 2);
}

TEST_CASE("reduce prints the box-free form") {
  RunResult r = run("reduce --agents a,b --atoms p_a,p_b"
                    " --formula \"[byz;Rab] D{b} p_a\""
                    " --pattern byz=" + gal("byz") +
                    " --graph \"Rab=(a,b)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "D{a,b} p_a\n");

  r = run("reduce --agents a,b --atoms p_a,p_b"
          " --formula \"[byz;I](p_a & ~p_b)\" --pattern byz=" + gal("byz"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "p_a & ~p_b\n");
}

TEST_CASE("gen-pattern emits the named families") {
  RunResult r = run("gen-pattern --family immediate_snapshot --agents a,b,c");
  CHECK(r.exit_code == 0);
  CHECK(cpl::pattern_from_json(cpl::Json::parse(r.out)).size() == 13);

  r = run("gen-pattern --family gossip --agents a,b,c,d"
          " --param mode=pushpull");
  CHECK(cpl::pattern_from_json(cpl::Json::parse(r.out)).size() == 6);
}

TEST_CASE("falsify finds the control counterexample") {
  RunResult r = run("falsify --agents a,b --atoms p_a,p_b"
                    " --formula \"K{a} p_b | K{a} ~p_b\" --bounds 3,2,1,0");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("counterexample at world") != std::string::npos);

  r = run("falsify --agents a,b --atoms p_a,p_b"
          " --formula \"K{a} p_a | K{a} ~p_a\" --bounds 3,2,1,50");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("none-found") != std::string::npos);
}

TEST_CASE("identical inputs give byte-identical output") {
  std::string cmd = "falsify --agents a,b --atoms p_a,p_b --seed 9"
                    " --formula \"D{a} p_b <-> p_b\" --format json";
  RunResult r1 = run(cmd);
  RunResult r2 = run(cmd);
  CHECK(r1.exit_code == 1);
  CHECK(r1.out == r2.out);

  RunResult u1 = run("update --model " + gal("cbisim_mp") + " --pattern " +
                     gal("imsnap3"));
  RunResult u2 = run("update --model " + gal("cbisim_mp") + " --pattern " +
                     gal("imsnap3"));
  CHECK(u1.out == u2.out);
  // And the written model re-parses to the same canonical form.
  cpl::Json j = cpl::Json::parse(u1.out);
  CHECK(cpl::model_to_json(cpl::model_from_json(j)) == j);
}

TEST_CASE("exit codes distinguish usage, parse and validation errors") {
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("check --model " + gal("byz_base") + " --world w1"
            " --formula \"p_a &\"").exit_code == 2);
  CHECK(run("check --model " + gal("byz_base") + " --world nope"
            " --formula p_a").exit_code == 3);

  RunResult r = run("--error-json check --model " + gal("byz_base") +
                    " --world nope --formula p_a");
  CHECK(r.exit_code == 3);
  cpl::Json j = cpl::Json::parse(r.out);
  CHECK(j.at("error").at("kind") == "UnknownWorld");
}

TEST_CASE("axioms subcommand prints the sweep table") {
  RunResult r = run("axioms --exhaustive-only");
  CHECK(r.exit_code == 0);
  for (const char* name :
       {"P", "L", "K^D", "T^D", "4^D", "5^D", "W", "C1", "C2", "C3", "C4",
        "N^D", "N(.)", "RE", "control:K_a p_b", "control:D_B phi"})
    CHECK(r.out.find(name) != std::string::npos);
  CHECK(r.out.find("UNEXPECTED") == std::string::npos);
}
