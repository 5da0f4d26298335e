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


// matext: command-line front end. Exit codes: 0 property holds or result
// computed, 2 refuted with certificate, 3 inconclusive, 1 usage or data error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matext/ak.h"
#include "matext/catalog.h"
#include "matext/dl.h"
#include "matext/extension.h"
#include "matext/lp.h"
#include "matext/lp_io.h"
#include "matext/psm.h"
#include "matext/secret_sharing.h"
#include "matext/sequence_io.h"
#include "report.h"

namespace matext::cli {
namespace {

constexpr int kExitHolds = 0;
constexpr int kExitError = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitInconclusive = 3;

struct Global {
  std::vector<std::string> catalogs;
  std::string output;
  std::string cert_dir = "certificates";
  int threads = 1;
  std::int64_t budget = 0;  // 0: the command's default
  std::uint64_t seed = 0;
};

int ExitFor(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return kExitHolds;
    case Verdict::kFalse:
      return kExitRefuted;
    case Verdict::kInconclusive:
      return kExitInconclusive;
  }
  return kExitError;
}

Catalog LoadCatalog(const Global& g) {
  Catalog c = Catalog::WithBuiltins();
  for (const std::string& f : g.catalogs) c.LoadFile(f);
  return c;
}

ordered_json BaseReport(const std::string& command, const Global& g,
                        ordered_json config) {
  ordered_json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  config["catalogs"] = g.catalogs;
  config["threads"] = g.threads;
  config["seed"] = g.seed;
  r["config"] = std::move(config);
  return r;
}

ordered_json MatroidJson(const std::string& name, const Matroid& m) {
  return {{"name", name},
          {"points", m.size()},
          {"rank", m.rank()},
          {"catalog", FormatCatalogEntry(name, m)}};
}

Matroid MatroidFromReport(const ordered_json& report) {
  std::istringstream in(report.at("matroid").at("catalog").get<std::string>());
  auto entries = ParseCatalog(in);
  if (entries.size() != 1) throw std::invalid_argument("report holds no matroid");
  return entries[0].matroid;
}

std::int64_t BudgetOr(const Global& g, std::int64_t fallback) {
  return g.budget > 0 ? g.budget : fallback;
}

// ---- check-dl ----

struct DlArgs {
  std::string matroid;
  int depth = 1;
  bool no_filters = false;
  bool all_pairs = false;
};

ordered_json DlPairJson(const Matroid& m, const DLPairReport& p) {
  ordered_json j;
  j["x"] = SetJson(p.x);
  j["y"] = SetJson(p.y);
  j["status"] = ToString(p.status);
  if (p.tag) j["tag"] = ToString(*p.tag);
  if (p.status == DLPairReport::Status::kWitnessInGround ||
      p.status == DLPairReport::Status::kWitnessByExtension) {
    j["witness"] = SetJson(p.witness);
  }
  if (!p.cut_generators.empty()) {
    j["cut_generators"] = SetsJson(p.cut_generators);
    j["extension"] =
        FormatCatalogEntry("extension", ChainExtend(m, {p.cut_generators}));
  }
  j["depth"] = p.depth_used;
  return j;
}

int RunCheckDl(const Global& g, const DlArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const Matroid m = LoadCatalog(g).Get(a.matroid);
  DLOptions o;
  o.budget = BudgetOr(g, o.budget);
  o.use_filters = !a.no_filters;
  o.report_all_pairs = a.all_pairs;
  const DLResult res = IsKDL(m, a.depth, o);
  ordered_json r = BaseReport("check-dl", g,
                              {{"matroid", a.matroid},
                               {"depth", a.depth},
                               {"budget", o.budget},
                               {"filters", o.use_filters}});
  r["matroid"] = MatroidJson(a.matroid, m);
  r["verdict"] = ToString(res.verdict);
  ordered_json pairs = ordered_json::array();
  for (const auto& p : res.pairs) pairs.push_back(DlPairJson(m, p));
  r["pairs"] = pairs;
  if (res.refuting_pair) {
    r["refuting_pair"] = DlPairJson(m, *res.refuting_pair);
    r["witness_check"] = "matext witness <this report>";
  }
  WriteReport(r, g.output, start);
  return ExitFor(res.verdict);
}

// ---- check-ak / check-ci ----

struct AkArgs {
  std::string matroid;
  int depth = 1;
  std::string sequence;
  std::string filters = "on";
  std::string ge = "off";
  bool all_pairs = false;
};

ordered_json SequenceJson(const AKSequence& seq, int n) {
  return ordered_json::parse(SequenceToJson(seq, n));
}

int RunCheckSequence(const Global& g, const AkArgs& a, StepKind kind,
                     const std::string& command) {
  const auto start = std::chrono::steady_clock::now();
  const Matroid m = LoadCatalog(g).Get(a.matroid);
  ordered_json file = ordered_json::parse(ReadFile(a.sequence));
  if (kind == StepKind::kCi) {
    ordered_json& steps = file.is_array() ? file : file.at("steps");
    for (auto& s : steps) {
      if (!s.contains("kind")) s["kind"] = "CI";
    }
  }
  const AKSequence seq = SequenceFromJson(file.dump(), m);
  const SequenceReport rep = CheckSequence(m, seq);
  ordered_json r = BaseReport(command, g,
                              {{"matroid", a.matroid}, {"sequence", a.sequence}});
  r["matroid"] = MatroidJson(a.matroid, m);
  r["sequence"] = SequenceJson(seq, m.size());
  r["lp"] = {{"points", m.size() + static_cast<int>(seq.size())},
             {"shannon_rows", rep.shannon_rows},
             {"pin_rows", rep.pin_rows},
             {"closure_rows", rep.closure_rows},
             {"rows_per_step", rep.rows_per_step},
             {"iterations", rep.outcome.stats.iterations},
             {"method", rep.outcome.stats.method}};
  r["status"] = ToString(rep.outcome.status);
  const bool refuted = rep.outcome.status == LPStatus::kInfeasible;
  r["verdict"] = refuted ? "false" : "true";
  r["certificate"] =
      SaveCertificate(BuildSequenceLP(m, seq), rep.outcome, g.cert_dir);
  WriteReport(r, g.output, start);
  return refuted ? kExitRefuted : kExitHolds;
}

int RunCheckAk(const Global& g, const AkArgs& a, StepKind kind,
               const std::string& command) {
  if (!a.sequence.empty()) return RunCheckSequence(g, a, kind, command);
  const auto start = std::chrono::steady_clock::now();
  const Matroid m = LoadCatalog(g).Get(a.matroid);
  AKOptions o;
  o.budget = BudgetOr(g, o.budget);
  o.threads = g.threads;
  o.kind = kind;
  o.use_filters = a.filters == "on";
  o.use_ge = a.ge == "on";
  o.scan_all_pairs = a.all_pairs;
  const AKResult res = IsKAk(m, a.depth, o);
  ordered_json r = BaseReport(command, g,
                              {{"matroid", a.matroid},
                               {"depth", a.depth},
                               {"budget", o.budget},
                               {"filters", a.filters},
                               {"ge", a.ge}});
  r["matroid"] = MatroidJson(a.matroid, m);
  r["verdict"] = ToString(res.verdict);
  r["lps_solved"] = res.lps_solved;
  r["truncated"] = res.truncated;
  ordered_json pairs = ordered_json::array();
  for (const AKPairReport& p : res.pairs) {
    ordered_json j = {{"x", SetJson(p.x)},
                      {"y", SetJson(p.y)},
                      {"status", ToString(p.status)}};
    if (p.tag) j["tag"] = ToString(*p.tag);
    pairs.push_back(j);
  }
  r["pairs"] = pairs;
  if (res.refutation) {
    r["refutation"] = SequenceJson(*res.refutation, m.size());
    r["certificate"] = SaveCertificate(BuildSequenceLP(m, *res.refutation),
                                       res.certificate, g.cert_dir);
  }
  WriteReport(r, g.output, start);
  return ExitFor(res.verdict);
}

// ---- check-psm ----

struct PsmArgs {
  std::string matroid;
  int depth = 1;
};

ordered_json TripleJson(const PseudoTriple& t) {
  return {{"x", SetJson(t.x)},
          {"y", SetJson(t.y)},
          {"z", SetJson(t.z)},
          {"a", SetJson(t.a)}};
}

int RunCheckPsm(const Global& g, const PsmArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const Matroid m = LoadCatalog(g).Get(a.matroid);
  PsmOptions o;
  o.budget = BudgetOr(g, o.budget);
  const PsmResult res = RecursivePsm(m, a.depth, o);
  ordered_json r = BaseReport(
      "check-psm", g,
      {{"matroid", a.matroid}, {"depth", a.depth}, {"budget", o.budget}});
  r["matroid"] = MatroidJson(a.matroid, m);
  r["verdict"] = ToString(res.verdict);
  r["triples_checked"] = res.triples_checked;
  r["extensions_tried"] = res.extensions_tried;
  r["truncated"] = res.truncated;
  if (res.refuting_triple) {
    r["refuting_triple"] = TripleJson(*res.refuting_triple);
    ordered_json branches = ordered_json::array();
    for (const PsmBranch& b : res.branches) {
      ordered_json j = {
          {"cut_generators", SetsJson(b.cut_generators)},
          {"extension",
           FormatCatalogEntry("extension", ChainExtend(m, {b.cut_generators}))}};
      if (b.failing_triple) j["failing_triple"] = TripleJson(*b.failing_triple);
      branches.push_back(j);
    }
    r["extension_chains"] = branches;
    r["witness_check"] = "matext witness <this report>";
  }
  WriteReport(r, g.output, start);
  return ExitFor(res.verdict);
}

// ---- witness ----

int RunWitness(const Global& g, const std::string& path) {
  const auto start = std::chrono::steady_clock::now();
  const ordered_json in = ordered_json::parse(ReadFile(path));
  const std::string command = in.at("command");
  const Matroid m = MatroidFromReport(in);
  const int depth = in.at("config").at("depth");
  const std::int64_t budget = in.at("config").at("budget");
  ordered_json r = BaseReport("witness", g, {{"report", path}});
  r["checked_command"] = command;
  bool confirmed = false;
  if (command == "check-dl" && in.contains("refuting_pair")) {
    const auto& p = in["refuting_pair"];
    DLOptions o;
    o.budget = budget;
    const Mask x = FromPoints(SetFromJson(p.at("x")));
    const Mask y = FromPoints(SetFromJson(p.at("y")));
    const DLPairReport rep = CheckDLPair(m, x, y, depth, o);
    r["pair_status"] = ToString(rep.status);
    confirmed = rep.status == DLPairReport::Status::kRefuted;
  } else if (command == "check-psm" && in.contains("refuting_triple")) {
    const auto& t = in["refuting_triple"];
    PseudoTriple triple{FromPoints(SetFromJson(t.at("x"))),
                        FromPoints(SetFromJson(t.at("y"))),
                        FromPoints(SetFromJson(t.at("z"))),
                        FromPoints(SetFromJson(t.at("a")))};
    PsmOptions o;
    o.budget = budget;
    const Verdict v = CheckPsmTriple(m, triple, depth, o);
    r["triple_verdict"] = ToString(v);
    confirmed = v == Verdict::kFalse;
  } else {
    throw std::invalid_argument(
        "report holds no DL or PSM refutation; use 'lp verify' for LP "
        "certificates");
  }
  r["confirmed"] = confirmed;
  WriteReport(r, g.output, start);
  return confirmed ? kExitHolds : kExitError;
}

// ---- ss-bound ----

struct SsArgs {
  std::string matroid;
  int dealer = -1;
  std::string access;
  std::string steps;
  std::int64_t advisor = 0;
};

int RunSsBound(const Global& g, const SsArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  AccessStructure access;
  std::optional<PortSpec> spec;
  if (!a.access.empty()) {
    access = AccessFromJson(ReadFile(a.access));
  } else {
    if (a.matroid.empty() || a.dealer < 0) {
      throw std::invalid_argument("give --matroid and --dealer, or --access");
    }
    spec = Port(LoadCatalog(g).Get(a.matroid), a.dealer);
    access = spec->access;
  }
  AKSequence steps;
  if (!a.steps.empty()) steps = SequenceFromJson(ReadFile(a.steps), access.n_points);
  const BoundResult res = SsBound(access, steps);
  ordered_json r = BaseReport("ss-bound", g,
                              {{"matroid", a.matroid},
                               {"dealer", a.dealer},
                               {"access", a.access},
                               {"ak_steps", a.steps},
                               {"advisor", a.advisor}});
  if (spec) r["matroid"] = MatroidJson(a.matroid, spec->matroid);
  r["structure"] = {{"points", access.n_points},
                    {"dealer", access.dealer},
                    {"participants", SetJson(access.participants)},
                    {"min_authorized", SetsJson(access.min_authorized)},
                    {"maximal_forbidden", SetsJson(MaximalForbidden(access))}};
  r["ak_steps"] = SequenceJson(steps, access.n_points);
  r["lp"] = {{"points", res.lp.n_points()},
             {"rows", res.lp.num_rows()},
             {"explicit_rows", res.lp.explicit_rows().size()},
             {"variables", res.lp.var_limit() - 1},
             {"method", res.certificate.stats.method},
             {"iterations", res.certificate.stats.iterations}};
  r["optimum"] = ToString(res.sigma_lower);
  r["optimum_decimal"] = res.sigma_lower.get_d();
  r["certificate"] = SaveCertificate(res.lp, res.certificate, g.cert_dir);
  if (a.advisor > 0) {
    if (!spec) throw std::invalid_argument("--advisor needs a matroid port");
    ordered_json adv = ordered_json::array();
    for (const AdvisorEntry& e : AkSetAdvisor(*spec, a.advisor)) {
      adv.push_back({{"x", SetJson(e.x)},
                     {"y", SetJson(e.y)},
                     {"bound", ToString(e.bound)}});
    }
    r["advisor"] = adv;
  }
  WriteReport(r, g.output, start);
  return kExitHolds;
}

// ---- lp ----

int RunLpSolve(const Global& g, const std::string& path, bool exact) {
  const auto start = std::chrono::steady_clock::now();
  const PolymatroidLP lp = LPFromJson(ReadFile(path));
  SolveOptions o;
  o.exact_only = exact;
  const LPOutcome out = Solve(lp, o);
  ordered_json r = BaseReport("lp solve", g, {{"lp", path}, {"exact", exact}});
  r["status"] = ToString(out.status);
  if (out.status == LPStatus::kOptimal) r["value"] = ToString(out.value);
  r["method"] = out.stats.method;
  r["iterations"] = out.stats.iterations;
  r["certificate"] = SaveCertificate(lp, out, g.cert_dir);
  WriteReport(r, g.output, start);
  return kExitHolds;
}

int RunLpVerify(const Global& g, const std::string& lp_path,
                const std::string& cert_path) {
  const auto start = std::chrono::steady_clock::now();
  const PolymatroidLP lp = LPFromJson(ReadFile(lp_path));
  const LPOutcome out = OutcomeFromJson(ReadFile(cert_path));
  std::string why;
  const bool ok = CheckCertificate(lp, out, &why);
  ordered_json r = BaseReport("lp verify", g,
                              {{"lp", lp_path}, {"certificate", cert_path}});
  r["status"] = ToString(out.status);
  r["valid"] = ok;
  if (!ok) r["reason"] = why;
  WriteReport(r, g.output, start);
  return ok ? kExitHolds : kExitError;
}

// ---- catalog ----

int RunCatalogList(const Global& g) {
  const auto start = std::chrono::steady_clock::now();
  const Catalog c = LoadCatalog(g);
  ordered_json r = BaseReport("catalog list", g, ordered_json::object());
  ordered_json list = ordered_json::array();
  for (const std::string& name : c.Names()) {
    const Matroid m = c.Get(name);
    list.push_back({{"name", name}, {"points", m.size()}, {"rank", m.rank()}});
  }
  r["matroids"] = list;
  WriteReport(r, g.output, start);
  return kExitHolds;
}

int RunCatalogExport(const Global& g, std::vector<std::string> names) {
  const Catalog c = LoadCatalog(g);
  if (names.empty()) names = c.Names();
  std::string text;
  for (const std::string& n : names) text += FormatCatalogEntry(n, c.Get(n));
  if (g.output.empty()) {
    std::cout << text;
  } else {
    WriteFile(g.output, text);
  }
  return kExitHolds;
}

int RunCatalogImport(const Global& g, const std::string& path) {
  const auto start = std::chrono::steady_clock::now();
  std::istringstream in(ReadFile(path));
  const auto entries = ParseCatalog(in);
  ordered_json r = BaseReport("catalog import", g, {{"file", path}});
  ordered_json list = ordered_json::array();
  bool all_ok = true;
  for (const CatalogEntry& e : entries) {
    const AxiomReport ax = VerifyMatroidAxioms(e.matroid);
    all_ok = all_ok && ax.ok;
    ordered_json j = {{"name", e.name},
                      {"points", e.matroid.size()},
                      {"rank", e.matroid.rank()},
                      {"axioms_ok", ax.ok}};
    if (!ax.ok) j["violation"] = ax.violation;
    list.push_back(j);
  }
  r["matroids"] = list;
  WriteReport(r, g.output, start);
  return all_ok ? kExitHolds : kExitError;
}

int RunCatalogVerify(const Global& g, const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  const Matroid m = LoadCatalog(g).Get(name);
  const AxiomReport ax = VerifyMatroidAxioms(m);
  ordered_json r = BaseReport("catalog verify", g, {{"matroid", name}});
  r["matroid"] = MatroidJson(name, m);
  r["axioms_ok"] = ax.ok;
  if (!ax.ok) r["violation"] = ax.violation;
  WriteReport(r, g.output, start);
  return ax.ok ? kExitHolds : kExitError;
}

int Main(int argc, char** argv) {
  CLI::App app{"Matroid extension-property checks: DL, AK/CI, pseudomodularity, "
               "secret-sharing bounds and exact LP certificates."};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--catalog", g.catalogs, "Catalog file to load (repeatable)");
  app.add_option("-o,--out,--output", g.output, "Report path (default stdout)");
  app.add_option("--cert-dir", g.cert_dir, "Directory for LP and certificate files")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for LP batches")
      ->envname("MATEXT_THREADS")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget,
                 "Work budget: cut generations (check-dl, check-psm) or LP "
                 "solves (check-ak, check-ci); 0 uses the command default")
      ->envname("MATEXT_BUDGET")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed recorded in the report");

  int code = kExitError;

  DlArgs dl;
  auto* cdl = app.add_subcommand("check-dl", "Check the k-DL property");
  cdl->add_option("matroid", dl.matroid, "Matroid name")->required();
  cdl->add_option("--depth", dl.depth, "Depth k")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cdl->add_flag("--no-filters", dl.no_filters, "Disable guarantee filters");
  cdl->add_flag("--all-pairs", dl.all_pairs, "Report every pair");
  cdl->callback([&] { code = RunCheckDl(g, dl); });

  AkArgs ak;
  auto add_ak = [&](const std::string& name, const std::string& help,
                    StepKind kind) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("matroid", ak.matroid, "Matroid name")->required();
    c->add_option("--depth", ak.depth, "Maximum sequence length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c->add_option("--sequence", ak.sequence, "Sequence file to check instead");
    c->add_option("--filters", ak.filters, "Guarantee filters")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    c->add_option("--ge", ak.ge, "GE surrogate filter")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    c->add_flag("--all-pairs", ak.all_pairs,
                "Solve every depth-one pair instead of stopping at a refutation");
    c->callback([&, name, kind] { code = RunCheckAk(g, ak, kind, name); });
  };
  add_ak("check-ak", "Check the k-AK property or one AK sequence", StepKind::kAk);
  add_ak("check-ci", "Check the k-CI property or one CI sequence", StepKind::kCi);

  PsmArgs psm;
  auto* cpsm = app.add_subcommand("check-psm", "Check k-pseudomodularity");
  cpsm->add_option("matroid", psm.matroid, "Matroid name")->required();
  cpsm->add_option("--depth", psm.depth, "Depth k")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cpsm->callback([&] { code = RunCheckPsm(g, psm); });

  std::string witness_path;
  auto* cw = app.add_subcommand("witness", "Confirm a DL or PSM refutation report");
  cw->add_option("report", witness_path, "Report file")->required();
  cw->callback([&] { code = RunWitness(g, witness_path); });

  SsArgs ss;
  auto* css = app.add_subcommand("ss-bound", "Lower bound on the information ratio");
  css->add_option("--matroid", ss.matroid, "Matroid whose port is used");
  css->add_option("--dealer", ss.dealer, "Dealer point of the port");
  css->add_option("--access", ss.access, "Access structure file instead of a port");
  css->add_option("--ak-steps", ss.steps, "AK step file");
  css->add_option("--advisor", ss.advisor,
                  "Also rank up to N single-step AK pairs");
  css->callback([&] { code = RunSsBound(g, ss); });

  auto* clp = app.add_subcommand("lp", "Solve or verify serialized LPs");
  clp->require_subcommand(1);
  std::string lp_file, cert_file;
  bool exact = false;
  auto* lsolve = clp->add_subcommand("solve", "Solve an LP file");
  lsolve->add_option("file", lp_file, "LP file")->required();
  lsolve->add_flag("--exact", exact, "Use the exact dense simplex only");
  lsolve->callback([&] { code = RunLpSolve(g, lp_file, exact); });
  auto* lverify = clp->add_subcommand("verify", "Check a certificate against an LP");
  lverify->add_option("file", lp_file, "LP file")->required();
  lverify->add_option("certificate", cert_file, "Certificate file")->required();
  lverify->callback([&] { code = RunLpVerify(g, lp_file, cert_file); });

  auto* ccat = app.add_subcommand("catalog", "Matroid catalog operations");
  ccat->require_subcommand(1);
  ccat->add_subcommand("list", "List known matroids")->callback([&] {
    code = RunCatalogList(g);
  });
  std::vector<std::string> export_names;
  auto* cexp = ccat->add_subcommand("export", "Write matroids in catalog format");
  cexp->add_option("names", export_names, "Matroids (default: all)");
  cexp->callback([&] { code = RunCatalogExport(g, export_names); });
  std::string import_file;
  auto* cimp = ccat->add_subcommand("import", "Parse and verify a catalog file");
  cimp->add_option("file", import_file, "Catalog file")->required();
  cimp->callback([&] { code = RunCatalogImport(g, import_file); });
  std::string verify_name;
  auto* cver = ccat->add_subcommand("verify", "Check the matroid axioms");
  cver->add_option("matroid", verify_name, "Matroid name")->required();
  cver->callback([&] { code = RunCatalogVerify(g, verify_name); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitHolds : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return code;
}

}  // namespace
}  // namespace matext::cli

int main(int argc, char** argv) { return matext::cli::Main(argc, argv); }
