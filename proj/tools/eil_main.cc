// Copyright 2026 The eil Authors.
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

// eil: edge ideal regularity toolkit.
//
//   eil graph <file> invariants|classify
//   eil ideal <file> [--power r|--symbolic r] [--colon m]
//   eil reg <file> [--power r|--symbolic r] [--char p|--rational] [--betti]
//   eil verify <suite> [--corpus spec.json] [--rmax N] [--seed S] [--out report.json]
//   eil corpus <spec.json> --out dir/
//
// Exit codes: 0 pass, 1 fail, 2 usage, 3 caps or timeouts hit.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eil/certificates.h"
#include "eil/checks.h"
#include "eil/constructions.h"
#include "eil/corpus.h"
#include "eil/error.h"
#include "eil/graph_io.h"
#include "eil/invariants.h"
#include "eil/monomial_ideal.h"
#include "eil/regularity.h"
#include "eil/report.h"
#include "eil/resolution.h"

namespace {

using eil::Json;

// A graph file, or an H_T spec ({"base": ..., "attachments": ...}).
eil::Graph LoadGraph(const std::string& path) {
  const std::string text = eil::ReadFile(path);
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw eil::InvalidArgument(std::string("invalid JSON: ") + e.what());
    }
    if (j.contains("base")) return eil::AttachHT(eil::HTSpecFromJson(j)).graph;
    return eil::GraphFromJson(j);
  }
  return eil::ParseGraphText(text);
}

Json Invariants(const eil::Graph& g) {
  Json j;
  j["n"] = g.n();
  j["edges"] = g.NumEdges();
  const auto nu = eil::InducedMatchingNumber(g);
  const auto mat = eil::MatchingNumber(g);
  j["nu"] = nu.count;
  j["nu_certificate"] = eil::ToJson(nu.certificate);
  j["mat"] = mat.count;
  eil::CochordOptions opts;
  opts.lower_bound_hint = nu.count;
  const auto cc = eil::CochordalCoverNumber(g, opts);
  j["cochord"] = {{"lower", cc.lower}, {"upper", cc.upper}, {"exact", cc.exact}};
  if (cc.cover) j["cochord_cover"] = eil::ToJson(*cc.cover);
  j["minimal_vertex_covers"] = eil::MinimalVertexCovers(g).covers.size();
  return j;
}

Json Classify(const eil::Graph& g) {
  Json j;
  const auto chordal = eil::IsChordal(g);
  const auto bip = eil::IsBipartite(g);
  const int components = static_cast<int>(eil::ConnectedComponents(g).size());
  j["connected"] = eil::IsConnected(g);
  j["components"] = components;
  j["bipartite"] = bip.bipartite;
  j["chordal"] = chordal.chordal;
  j["cochordal"] = eil::IsCochordal(g);
  j["weakly_chordal"] = eil::IsWeaklyChordal(g);
  j["cameron_walker"] = eil::IsCameronWalker(g);
  j["forest"] = g.NumEdges() == g.n() - components;
  j["unicyclic"] = j["connected"].get<bool>() && g.NumEdges() == g.n();
  if (!bip.bipartite) j["odd_girth"] = eil::OddGirth(g);
  if (!chordal.chordal) j["induced_cycle"] = chordal.induced_cycle;
  return j;
}

struct PowerFlags {
  int power = 0;
  int symbolic = 0;

  eil::PowerSpec Spec() const {
    if (power > 0 && symbolic > 0) throw eil::InvalidArgument("--power and --symbolic are exclusive");
    if (power > 0) return eil::PowerSpec::Ordinary(power);
    if (symbolic > 0) return eil::PowerSpec::Symbolic(symbolic);
    return eil::PowerSpec::Plain();
  }
};

void AddPowerFlags(CLI::App* cmd, PowerFlags* f) {
  cmd->add_option("--power", f->power, "Ordinary power I^r")->check(CLI::PositiveNumber);
  cmd->add_option("--symbolic", f->symbolic, "Symbolic power I^(r)")->check(CLI::PositiveNumber);
}

void Print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of powers and symbolic powers of edge ideals"};
  app.require_subcommand(1);

  std::string file;
  std::string what;
  auto* graph_cmd = app.add_subcommand("graph", "Graph invariants and classes");
  graph_cmd->add_option("file", file, "Graph file (text or JSON) or H_T spec")->required();
  graph_cmd->add_option("what", what, "invariants | classify")
      ->required()
      ->check(CLI::IsMember({"invariants", "classify"}));

  PowerFlags ideal_flags;
  std::string colon;
  auto* ideal_cmd = app.add_subcommand("ideal", "Generators of I(G), its powers or a colon");
  ideal_cmd->add_option("file", file, "Graph file or H_T spec")->required();
  AddPowerFlags(ideal_cmd, &ideal_flags);
  ideal_cmd->add_option("--colon", colon, "Monomial f; prints (J : f)");

  PowerFlags reg_flags;
  int64_t characteristic = 0;
  bool rational = false;
  bool betti = false;
  auto* reg_cmd = app.add_subcommand("reg", "reg(S/J) for J = I(G), I(G)^r or I(G)^(r)");
  reg_cmd->add_option("file", file, "Graph file or H_T spec")->required();
  AddPowerFlags(reg_cmd, &reg_flags);
  auto* char_opt = reg_cmd->add_option("--char", characteristic, "Prime characteristic");
  reg_cmd->add_flag("--rational", rational, "Work over the rationals")->excludes(char_opt);
  reg_cmd->add_flag("--betti", betti, "Also print the graded Betti table");

  std::string suite;
  std::string corpus_file;
  std::string out;
  int rmax = 0;
  uint64_t seed = 0;
  bool skips_ok = false;
  bool no_timing = false;
  double timeout = 120;
  int64_t verify_char = 0;
  bool verify_rational = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")->required();
  verify_cmd->add_option("--corpus", corpus_file, "Corpus spec JSON replacing the defaults");
  auto* rmax_opt = verify_cmd->add_option("--rmax", rmax, "Largest power")->check(CLI::PositiveNumber);
  auto* seed_opt = verify_cmd->add_option("--seed", seed, "Seed for random corpora");
  verify_cmd->add_option("--out", out, "Write the JSON report here");
  verify_cmd->add_flag("--skips-ok", skips_ok, "Exit 0 instead of 3 when caps were hit");
  verify_cmd->add_flag("--no-timing", no_timing, "Omit timings so reports compare byte for byte");
  verify_cmd->add_option("--timeout", timeout, "Per-check timeout in seconds")->check(CLI::PositiveNumber);
  auto* vchar = verify_cmd->add_option("--char", verify_char, "Prime characteristic");
  verify_cmd->add_flag("--rational", verify_rational, "Work over the rationals")->excludes(vchar);
  verify_cmd->footer("Suites:\n" + eil::SuiteDescriptions());

  std::string spec_file;
  auto* corpus_cmd = app.add_subcommand("corpus", "Write a corpus to a directory");
  corpus_cmd->add_option("spec", spec_file, "Corpus spec JSON")->required();
  corpus_cmd->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : eil::kExitUsage;
  }

  auto field_of = [](int64_t p, bool q) {
    if (q) return eil::Field::Rational();
    return p > 0 ? eil::Field::Prime(p) : eil::Field{};
  };

  try {
    if (*graph_cmd) {
      const eil::Graph g = LoadGraph(file);
      Print(what == "invariants" ? Invariants(g) : Classify(g));
      return eil::kExitPass;
    }
    if (*ideal_cmd) {
      const eil::Graph g = LoadGraph(file);
      const eil::PowerSpec spec = ideal_flags.Spec();
      eil::MonomialIdeal ideal = eil::GraphIdeal(g, spec);
      Json j;
      j["ideal"] = spec.ToString();
      if (!colon.empty()) {
        const eil::Monomial f = eil::ParseMonomial(colon, g.n());
        ideal = eil::Colon(ideal, f);
        j["colon"] = f.ToString();
      }
      j["generators"] = ideal.NumGens();
      j["text"] = ideal.ToString();
      j["json"] = eil::IdealToJson(ideal);
      Print(j);
      return eil::kExitPass;
    }
    if (*reg_cmd) {
      const eil::Graph g = LoadGraph(file);
      const eil::PowerSpec spec = reg_flags.Spec();
      eil::RegularityOptions opts;
      opts.field = field_of(characteristic, rational);
      const eil::MonomialIdeal ideal = eil::GraphIdeal(g, spec);
      Json j;
      j["ideal"] = spec.ToString();
      j["field"] = opts.field.ToString();
      j["reg"] = eil::RegularityQuotient(ideal, opts).ToJson();
      if (betti && !ideal.IsZero() && !ideal.IsUnit()) {
        eil::BettiOptions b;
        b.field = opts.field;
        b.source = eil::CandidateSource::kSchreyerFrame;
        const Json table = eil::ComputeBettiTable(ideal, b).ToJson();
        j["betti"] = table["coarse"];
      }
      Print(j);
      return eil::kExitPass;
    }
    if (*verify_cmd) {
      eil::SuiteOptions opts;
      opts.checks.field = field_of(verify_char, verify_rational);
      opts.checks.timeout = std::chrono::milliseconds(static_cast<int64_t>(timeout * 1000));
      if (!corpus_file.empty()) opts.corpus = eil::CorpusSpec::FromJson(Json::parse(eil::ReadFile(corpus_file)));
      if (*rmax_opt) opts.r_max = rmax;
      if (*seed_opt) opts.seed = seed;
      opts.threads = eil::ThreadsFromEnvironment();
      opts.timing = !no_timing;
      const eil::SuiteReport report = eil::RunSuite(suite, opts);
      if (!out.empty()) eil::WriteFile(out, report.ToJson(opts.timing).dump(2) + "\n");
      for (const eil::TheoremCheck& c : report.checks) {
        if (c.verdict != eil::Verdict::kFail) continue;
        std::cout << "FAIL " << c.id << ": " << c.reason << "\n";
      }
      std::cout << report.suite << ": " << report.checks.size() << " checks, "
                << report.Count(eil::Verdict::kPass) << " pass, "
                << report.Count(eil::Verdict::kFail) << " fail, "
                << report.Count(eil::Verdict::kSkipped) << " skipped"
                << (report.AnyCapHit() ? " (caps hit)" : "") << "\n";
      return report.ExitCode(skips_ok);
    }
    if (*corpus_cmd) {
      const eil::CorpusSpec spec = eil::CorpusSpec::FromJson(Json::parse(eil::ReadFile(spec_file)));
      const auto instances = eil::GenerateCorpus(spec);
      std::filesystem::create_directories(out);
      Json index;
      index["spec"] = spec.ToJson();
      index["instances"] = Json::array();
      for (const auto& inst : instances) {
        std::string name = inst.id;
        for (char& ch : name)
          if (ch == '/') ch = '_';
        eil::WriteFile((std::filesystem::path(out) / (name + ".json")).string(),
                       eil::CorpusInstanceToJson(inst).dump(2) + "\n");
        index["instances"].push_back(name + ".json");
      }
      eil::WriteFile((std::filesystem::path(out) / "index.json").string(), index.dump(2) + "\n");
      std::cout << instances.size() << " instances written to " << out << "\n";
      return eil::kExitPass;
    }
  } catch (const eil::InvalidArgument& e) {
    std::cerr << "eil: " << e.what() << "\n";
    return eil::kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "eil: " << e.what() << "\n";
    return eil::kExitUsage;
  } catch (const eil::CapExceeded& e) {
    std::cerr << "eil: cap exceeded: " << e.what() << "\n";
    return eil::kExitSkips;
  } catch (const eil::DeadlineExceeded& e) {
    std::cerr << "eil: " << e.what() << "\n";
    return eil::kExitSkips;
  } catch (const std::exception& e) {
    std::cerr << "eil: " << e.what() << "\n";
    return eil::kExitFail;
  }
  return eil::kExitUsage;
}
