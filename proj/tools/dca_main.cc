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

// dca: command-line front end for the checkers.
//
// Exit codes: 0 pass, 1 axiom failure, 2 input error, 3 resource cap.
// Reports go to stdout as JSON; a one-line summary goes to stderr.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dca/axioms.h"
#include "dca/core.h"
#include "dca/duality.h"
#include "dca/family.h"
#include "dca/generators.h"
#include "dca/json_io.h"
#include "dca/suite.h"

namespace dca {
namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

double ParseDouble(const std::string& s) {
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw DcaError(ErrorCode::kParse, "not a number: '" + s + "'");
  }
  return v;
}

std::vector<double> ParseDoubles(const std::string& text) {
  std::vector<double> out;
  for (const std::string& s : SplitCommas(text)) out.push_back(ParseDouble(s));
  return out;
}

SubsetMask ParseSet(const std::string& text, const GroundSet& ground) {
  SubsetMask out;
  for (const std::string& s : SplitCommas(text)) {
    const double v = ParseDouble(s);
    const int e = static_cast<int>(v);
    if (e != v || e < 1 || e > ground.n()) {
      throw DcaError(ErrorCode::kInvalidArgument,
                     "element '" + s + "' is not in the ground set");
    }
    out = out.Plus(e);
  }
  return out;
}

void Emit(const Json& j, const std::string& out_path = "") {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw DcaError(ErrorCode::kIo, "cannot write " + out_path);
  out << j.dump(2) << "\n";
}

struct Common {
  int threads = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
  int multi_cap = 16;

  CheckOptions check() const { return {threads, multi_cap}; }
};

int RunCheck(const std::string& file, std::vector<std::string> names,
             const Common& common) {
  const SetFunction f = SetFunctionFromJson(LoadJsonFile(file));
  std::vector<AxiomId> ids;
  if (names.empty()) {
    ids.assign(AllAxioms().begin(), AllAxioms().end());
  }
  for (const std::string& name : names) {
    const auto id = ParseAxiomId(name);
    if (!id) throw DcaError(ErrorCode::kInvalidArgument, "unknown axiom " + name);
    ids.push_back(*id);
  }
  Json reports = Json::array();
  bool passed = true;
  for (AxiomId id : ids) {
    const CheckReport r = CheckAxiom(f, id, common.check());
    passed = passed && r.passed;
    reports.push_back(ToJson(r));
    std::cerr << Name(id) << ": " << (r.passed ? "pass" : "FAIL") << "\n";
  }
  Emit({{"passed", passed}, {"reports", std::move(reports)}});
  return passed ? kExitPass : kExitFail;
}

int RunFamilyCheck(const std::string& file, std::vector<std::string> names,
                   const Common& common) {
  const SetFamily family = SetFamilyFromJson(LoadJsonFile(file));
  std::vector<FamilyAxiomId> ids;
  if (names.empty()) {
    ids.assign(AllFamilyAxioms().begin(), AllFamilyAxioms().end());
  }
  for (const std::string& name : names) {
    const auto id = ParseFamilyAxiomId(name);
    if (!id) throw DcaError(ErrorCode::kInvalidArgument, "unknown axiom " + name);
    ids.push_back(*id);
  }
  Json reports = Json::array();
  bool passed = true;
  for (FamilyAxiomId id : ids) {
    const CheckReport r = CheckFamily(family, id, common.check());
    passed = passed && r.passed;
    reports.push_back(ToJson(r));
    std::cerr << Name(id) << ": " << (r.passed ? "pass" : "FAIL") << "\n";
  }
  Emit({{"passed", passed}, {"reports", std::move(reports)}});
  return passed ? kExitPass : kExitFail;
}

CorpusSpec MakeSpec(int n, bool exhaustive, std::uint64_t random_count,
                    std::uint64_t seed, const std::string& grid) {
  CorpusSpec spec;
  spec.n = n;
  if (!grid.empty()) {
    spec.grid.clear();
    for (double v : ParseDoubles(grid)) spec.grid.emplace_back(v);
  }
  if (exhaustive == (random_count > 0)) {
    throw DcaError(ErrorCode::kInvalidArgument,
                   "pass exactly one of --exhaustive and --random COUNT");
  }
  spec.mode = exhaustive ? CorpusMode::kExhaustive : CorpusMode::kRandom;
  spec.count = random_count;
  spec.seed = seed;
  return spec;
}

int RunSuiteCommand(const CorpusSpec& spec, const Common& common) {
  const Corpus corpus(spec);
  const SuiteSummary summary =
      RunSuite(corpus, SuiteOptions{common.threads, common.multi_cap});
  Emit(ToJson(summary));
  std::cerr << "instances: " << summary.instances
            << ", witnesses verified: " << summary.witnesses_verified << "\n";
  for (const SuiteResult& r : summary.results) {
    std::cerr << Name(r.id) << ": " << (r.passed() ? "pass" : "FAIL") << " ("
              << r.instances_checked << " checked, " << r.positives << "+/"
              << r.negatives << "-)\n";
  }
  return summary.passed() ? kExitPass : kExitFail;
}

int RunLift(const std::string& file, int s) {
  const SetFunction f = SetFunctionFromJson(LoadJsonFile(file));
  const LiftedFunction lifted = Lift(f, s);
  Json out = ToJson(lifted.function);
  out["r"] = lifted.spec.r;
  out["r_min"] = lifted.spec.r_min;
  out["s"] = lifted.spec.s;
  out["aux"] = lifted.spec.aux.Elements();
  Emit(out);
  std::cerr << "lifted to n = " << lifted.function.n() << "\n";
  return kExitPass;
}

int RunConjugate(const std::string& file, const std::string& p_text) {
  const SetFunction f = SetFunctionFromJson(LoadJsonFile(file));
  const ConjugateValue g = Conjugate(f, PriceVector(ParseDoubles(p_text)));
  Emit({{"value", g.value.value()}, {"maximizer", g.maximizer.Elements()}});
  std::cerr << "g(p) = " << g.value << "\n";
  return kExitPass;
}

struct DualityFlags {
  std::string x, y, removed;
  int samples = 200;
  int pairs = 500;
  std::uint64_t seed = 42;
};

int RunDuality(const std::string& file, const DualityFlags& flags,
               const Common& common) {
  const SetFunction f = SetFunctionFromJson(LoadJsonFile(file));
  const ExchangeContext ctx(f.ground(), ParseSet(flags.x, f.ground()),
                            ParseSet(flags.y, f.ground()),
                            ParseSet(flags.removed, f.ground()));
  DualityConfig config;
  config.q_samples = flags.samples;
  config.pair_samples = flags.pairs;
  config.seed = flags.seed;
  config.threads = common.threads;
  const LemmaReport lemma = VerifyConjugateLemma(f, ctx, config);
  const SubmodularityReport sub = CheckConjugateSubmodular(f, config);
  const bool passed = lemma.passed && sub.passed;
  Emit({{"passed", passed},
        {"lemma", ToJson(lemma)},
        {"submodularity", ToJson(sub)}});
  std::cerr << "min slack " << lemma.min_slack << ", lemma "
            << (lemma.passed ? "pass" : "FAIL") << ", submodularity "
            << (sub.passed ? "pass" : "FAIL") << "\n";
  return passed ? kExitPass : kExitFail;
}

struct GenerateFlags {
  std::string kind;
  std::string out;
  int n = 3;
  int r = 1;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  std::string weights;
  std::string phi;
  std::string grid;
};

int RunGenerate(const GenerateFlags& flags) {
  auto weights = [&] {
    std::vector<double> w = ParseDoubles(flags.weights);
    if (w.empty()) w.assign(flags.n, 0.0);
    return PriceVector(std::move(w));
  };
  Json out;
  if (flags.kind == "corpus") {
    const Corpus corpus(MakeSpec(flags.n, false, flags.count, flags.seed,
                                 flags.grid));
    out = Json::array();
    for (std::uint64_t k = 0; k < corpus.size(); ++k) {
      out.push_back(ToJson(corpus.At(k)));
    }
  } else if (flags.kind == "weighted-matroid") {
    out = ToJson(
        WeightedMatroidValuation(UniformMatroidBases(flags.r, flags.n), weights()));
  } else if (flags.kind == "cardinality") {
    out = ToJson(
        ConcaveCardinalityValuation(flags.n, ParseDoubles(flags.phi), weights()));
  } else {
    throw DcaError(ErrorCode::kInvalidArgument, "unknown kind " + flags.kind);
  }
  Emit(out, flags.out);
  std::cerr << "generated " << flags.kind << "\n";
  return kExitPass;
}

int Main(int argc, char** argv) {
  CLI::App app{"Exhaustive exchange-axiom checker for set functions"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--multi-cap", common.multi_cap,
                 "Largest n for multiple-exchange axioms");

  std::string file;
  std::vector<std::string> names;
  int rc = kExitPass;

  auto* check = app.add_subcommand("check", "Check function axioms");
  check->add_option("file", file, "Set-function JSON")->required();
  check->add_option("axioms", names, "Axiom ids (default: all)");
  check->callback([&] { rc = RunCheck(file, names, common); });

  auto* fam = app.add_subcommand("family-check", "Check family axioms");
  fam->add_option("file", file, "Set-family JSON")->required();
  fam->add_option("axioms", names, "Axiom ids (default: all)");
  fam->callback([&] { rc = RunFamilyCheck(file, names, common); });

  int n = 3;
  bool exhaustive = false;
  std::uint64_t random_count = 0;
  std::uint64_t seed = 0;
  std::string grid;
  auto* suite = app.add_subcommand("suite", "Validate the theorem suite");
  suite->add_option("--n", n, "Ground-set size");
  suite->add_flag("--exhaustive", exhaustive, "Every grid-valued table");
  suite->add_option("--random", random_count, "Number of random instances");
  suite->add_option("--seed", seed, "Random corpus seed");
  suite->add_option("--grid", grid, "Comma-separated values, -inf allowed");
  suite->callback([&] {
    rc = RunSuiteCommand(MakeSpec(n, exhaustive, random_count, seed, grid),
                         common);
  });

  int s = 0;
  auto* lift = app.add_subcommand("lift", "Equi-cardinal lift");
  lift->add_option("file", file, "Set-function JSON")->required();
  lift->add_option("--s", s, "Auxiliary elements")->required();
  lift->callback([&] { rc = RunLift(file, s); });

  std::string p_text;
  auto* conj = app.add_subcommand("conjugate", "Evaluate g(p)");
  conj->add_option("file", file, "Set-function JSON")->required();
  conj->add_option("--p", p_text, "Comma-separated prices")->required();
  conj->callback([&] { rc = RunConjugate(file, p_text); });

  DualityFlags dual;
  auto* duality = app.add_subcommand("duality", "Sampled duality bounds");
  duality->add_option("file", file, "Set-function JSON")->required();
  duality->add_option("--X", dual.x, "Comma-separated elements of X");
  duality->add_option("--Y", dual.y, "Comma-separated elements of Y");
  duality->add_option("--I", dual.removed, "Comma-separated elements of I");
  duality->add_option("--samples", dual.samples, "q samples");
  duality->add_option("--pairs", dual.pairs, "Price pairs");
  duality->add_option("--seed", dual.seed, "Sampling seed");
  duality->callback([&] { rc = RunDuality(file, dual, common); });

  GenerateFlags gen;
  auto* generate = app.add_subcommand("generate", "Write instances");
  generate->add_option("--kind", gen.kind,
                       "corpus | weighted-matroid | cardinality")
      ->required();
  generate->add_option("--out", gen.out, "Output file (default stdout)");
  generate->add_option("--n", gen.n, "Ground-set size");
  generate->add_option("--r", gen.r, "Matroid rank");
  generate->add_option("--count", gen.count, "Corpus size");
  generate->add_option("--seed", gen.seed, "Corpus seed");
  generate->add_option("--weights", gen.weights, "Comma-separated weights");
  generate->add_option("--phi", gen.phi, "Comma-separated concave sequence");
  generate->add_option("--grid", gen.grid, "Corpus value grid");
  generate->callback([&] { rc = RunGenerate(gen); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const DcaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool cap = e.code() == ErrorCode::kCapExceeded ||
                     e.code() == ErrorCode::kCorpusTooLarge;
    return cap ? kExitCap : kExitInput;
  }
  return rc;
}

}  // namespace
}  // namespace dca

int main(int argc, char** argv) { return dca::Main(argc, argv); }
