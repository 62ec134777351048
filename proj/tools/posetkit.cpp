#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posetkit/acceptance.hpp"
#include "posetkit/closure.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/corpus.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/io.hpp"
#include "posetkit/lattice.hpp"
#include "posetkit/properties.hpp"
#include "posetkit/residuation.hpp"

using namespace posetkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string name;
  std::string text;
  bool greechie = false;
};

// A path on disk, or else the name of a bundled corpus entry.
Input load_input(const std::string& ref) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(ref)) {
    std::ifstream in(ref, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    Input i{ref, buf.str(), fs::path(ref).extension() == ".greechie"};
    return i;
  }
  for (const auto& e : corpus_entries())
    if (e.name == ref) return {ref, std::string(e.text), e.kind == CorpusKind::greechie};
  throw UsageError("no such file or corpus entry: " + ref);
}

FinitePoset poset_of(const Input& in) {
  if (in.greechie) return greechie_to_omp(parse_greechie(in.text));
  return parse_poset(in.text);
}

std::vector<std::pair<std::string, bool>> expectations_of(const Input& in) {
  if (in.greechie) return {};
  return parse_document(in.text).expect;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string describe(const CheckReport& r) {
  std::string line = r.property + ": " + (r.holds ? "pass" : "fail");
  if (!r.holds && !r.witness.empty()) {
    line += " witness (";
    for (std::size_t i = 0; i < r.witness.size(); ++i) line += (i ? ", " : "") + r.witness[i];
    line += ")";
  }
  if (!r.details.empty()) line += "  " + r.details;
  return line;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Common {
  std::size_t max_closed_sets = kDefaultMaxClosedSets;
  bool serial = false;
  bool json = false;
  bool no_timings = false;
  std::string report_path;

  CompletionOptions completion() const { return {max_closed_sets, serial ? Exec::serial : Exec::parallel}; }
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-closed-sets", c.max_closed_sets, "cap on completion size")->check(CLI::PositiveNumber);
  cmd->add_flag("--serial", c.serial, "use the serial kernels");
  cmd->add_flag("--json", c.json, "print the JSON report instead of text");
  cmd->add_flag("--no-timings", c.no_timings, "omit timings from the JSON report");
  cmd->add_option("--report", c.report_path, "also write the JSON report to this file");
}

int finish(const RunReport& report, const Common& c) {
  const std::string json = render_report(report, !c.no_timings);
  if (!c.report_path.empty()) write_output(c.report_path, json);
  if (c.json) {
    std::cout << json;
  } else {
    for (const auto& r : report.checks) std::cout << describe(r) << "\n";
    for (const auto& r : report.verdicts) std::cout << describe(r) << "\n";
    for (const auto& [k, v] : report.summary) std::cout << k << ": " << v << "\n";
  }
  return report.all_passed() ? kExitOk : kExitFailed;
}

// --- subcommands ----------------------------------------------------------------

int cmd_check(const std::string& ref, std::vector<std::string> properties, bool all, const Common& c) {
  if (all == !properties.empty()) throw UsageError("give --all or at least one --property");
  for (const auto& p : properties)
    if (!is_property_name(p)) throw UsageError("unknown property '" + p + "'");
  const auto in = load_input(ref);
  PropertyContext ctx(poset_of(in), c.completion());
  if (all) properties = property_names();

  RunReport report;
  report.command = all ? "check --all" : "check";
  report.input_name = in.name;
  report.input_digest = sha256_hex(in.text);

  // independent properties run concurrently; results are collected in order
  std::vector<std::future<std::pair<CheckReport, double>>> jobs;
  for (const auto& name : properties)
    jobs.push_back(std::async(std::launch::async, [&ctx, name] {
      const auto t0 = std::chrono::steady_clock::now();
      auto r = run_property(name, ctx);
      return std::make_pair(std::move(r), ms_since(t0));
    }));
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [r, ms] = jobs[i].get();
    report.checks.push_back(std::move(r));
    report.timings_ms.emplace_back(properties[i], ms);
  }
  if (all) {
    report.verdicts = expectation_verdicts(report.checks, expectations_of(in));
    for (auto& v : theorem_cross_checks(report.checks)) report.verdicts.push_back(std::move(v));
    if (report.verdicts.empty()) report.verdicts.push_back(passed("no-expectations", "nothing to compare against"));
  }
  return finish(report, c);
}

int cmd_complete(const std::string& ref, const std::string& output, const Common& c) {
  const auto in = load_input(ref);
  const auto p = poset_of(in);
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = complete(p, c.completion());
  const double ms = ms_since(t0);
  const auto dp = d.as_poset(c.exec());
  std::size_t embedded = 0;
  for (std::size_t i = 0; i < d.size(); ++i) embedded += d.embedded_element(i).has_value();
  write_output(output, serialize_poset(dp, {{"source", "completion of " + in.name}}));
  std::cerr << "closed sets: " << d.size() << "\nembedded elements: " << embedded
            << "\nnew elements: " << d.size() - embedded << "\ninvolution: " << (d.has_involution() ? "yes" : "no")
            << "\n";
  if (!c.no_timings) std::cerr << "time: " << ms << " ms\n";
  return kExitOk;
}

int cmd_residuate(const std::string& ref, const std::string& kind_text, bool on_completion, const Common& c) {
  const auto kind = parse_operator_kind(kind_text);
  if (!kind || *kind == OperatorKind::custom) throw UsageError("--kind must be boolean, relpseudo or pseudo_om");
  const auto in = load_input(ref);
  const auto p = poset_of(in);
  RunReport report;
  report.command = "residuate --kind " + to_string(*kind) + (on_completion ? " --on-completion" : "");
  report.input_name = in.name;
  report.input_digest = sha256_hex(in.text);

  const auto t0 = std::chrono::steady_clock::now();
  try {
    report.checks.push_back(verify_operator_left_residuation(p, operator_pair(p, *kind, c.exec()), c.exec()));
  } catch (const Error& e) {
    report.checks.push_back(failed("operator-left-residuation", std::string("precondition: ") + e.what()));
  }
  report.timings_ms.emplace_back("operator-left-residuation", ms_since(t0));

  if (on_completion) {
    const auto t1 = std::chrono::steady_clock::now();
    try {
      const auto d = complete(p, c.completion());
      LatticeView l(d.as_poset(c.exec()), c.exec());
      const auto v = verify_left_residuated_lattice(l, bdm_transform(d, *kind, c.exec()), c.exec());
      report.checks.push_back(v.left_residuated);
      report.summary["commutative"] = v.commutative.holds ? "yes" : "no";
      report.summary["associative"] = v.associative.holds ? "yes" : "no";
      if (v.left_residuated.holds)
        report.summary["completion"] = v.commutative.holds ? "residuated (commutative)" : "left residuated (not commutative)";
      else
        report.summary["completion"] = "not left residuated";
    } catch (const SizeLimitExceeded&) {
      throw;
    } catch (const Error& e) {
      report.checks.push_back(failed("left-residuated", std::string("precondition: ") + e.what()));
    }
    report.timings_ms.emplace_back("left-residuated", ms_since(t1));
  }
  return finish(report, c);
}

int cmd_greechie(const std::string& ref, const std::string& output, bool dot, const Common& c) {
  const auto in = load_input(ref);
  const auto g = parse_greechie(in.text);
  const auto v = validate_greechie(g);
  std::cerr << describe(v.report) << "\n";
  std::cerr << "atoms: " << g.atoms.size() << ", blocks: " << g.blocks.size() << "\n";
  if (!v.report.holds) return kExitFailed;
  if (auto k = v.min_loop_order_from_4())
    std::cerr << "shortest loop of order >= 4: " << *k << " (not a lattice)\n";
  else
    std::cerr << "no loops of order >= 4 (a lattice)\n";
  const auto p = greechie_to_omp(g);
  std::cerr << "elements: " << p.size() << "\n";
  write_output(output, dot ? export_dot(p, in.name) : serialize_poset(p, {{"source", "pasting of " + in.name}}));
  (void)c;
  return kExitOk;
}

int cmd_hsum(const std::vector<std::string>& refs, const std::string& output) {
  std::vector<FinitePoset> parts;
  for (const auto& r : refs) parts.push_back(poset_of(load_input(r)));
  const auto s = horizontal_sum(parts);
  write_output(output, serialize_poset(s));
  return kExitOk;
}

int cmd_export(const std::string& ref, bool of_completion, const std::string& output, const Common& c) {
  const auto in = load_input(ref);
  const auto p = poset_of(in);
  if (of_completion)
    write_output(output, export_dot(complete(p, c.completion()), "DM(" + in.name + ")"));
  else
    write_output(output, export_dot(p, in.name));
  return kExitOk;
}

int cmd_corpus(bool list, std::vector<int> ids, std::uint64_t seed, bool serial) {
  if (list) {
    for (const auto& e : corpus_entries())
      std::cout << e.name << "  " << (e.kind == CorpusKind::greechie ? "greechie" : "poset") << "  "
                << sha256_hex(e.text) << "\n";
    return kExitOk;
  }
  AcceptanceOptions o;
  o.seed = seed;
  o.exec = serial ? Exec::serial : Exec::parallel;
  if (ids.empty())
    for (int i = 1; i <= 11; ++i) ids.push_back(i);
  bool ok = true;
  for (int id : ids) {
    if (id < 1 || id > 11) throw UsageError("criteria are numbered 1..11");
    const auto r = run_criterion(id, o);
    std::cout << format_criterion(r) << "\n" << std::flush;
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posetkit: finite posets, their Dedekind-MacNeille completions and orthomodularity checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common common;
  std::string input, output, kind = "boolean";
  std::vector<std::string> properties, inputs;
  bool all = false, on_completion = false, dot = false, of_completion = false, list = false;
  std::vector<int> criteria;
  std::uint64_t seed = AcceptanceOptions{}.seed;

  auto* check = app.add_subcommand("check", "run property checkers");
  check->add_option("input", input, "poset file, .greechie file or corpus name")->required();
  check->add_option("--property,-p", properties, "property to check (repeatable): " + [] {
    std::string s;
    for (const auto& n : property_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  check->add_flag("--all", all, "run every checker and compare with the document's expect: lines");
  add_common(check, common);

  auto* comp = app.add_subcommand("complete", "write the Dedekind-MacNeille completion as a poset document");
  comp->add_option("input", input)->required();
  comp->add_option("--output,-o", output, "output file (default stdout)");
  add_common(comp, common);

  auto* res = app.add_subcommand("residuate", "build an operator pair and verify its axioms");
  res->add_option("input", input)->required();
  res->add_option("--kind", kind, "boolean, relpseudo or pseudo_om");
  res->add_flag("--on-completion", on_completion, "also check the transformed lattice operations");
  add_common(res, common);

  auto* gre = app.add_subcommand("greechie", "validate a Greechie diagram and paste its blocks");
  gre->add_option("input", input)->required();
  gre->add_option("--output,-o", output);
  gre->add_flag("--dot", dot, "emit DOT instead of a poset document");

  auto* hs = app.add_subcommand("hsum", "horizontal sum of bounded posets");
  hs->add_option("inputs", inputs)->required()->expected(1, -1);
  hs->add_option("--output,-o", output);

  auto* corp = app.add_subcommand("corpus", "run the acceptance suite over the bundled corpus");
  corp->add_flag("--list", list, "list bundled entries with their SHA-256");
  corp->add_option("--criterion,-c", criteria, "run only these criteria (1..11)");
  corp->add_option("--seed", seed, "seed for the random populations");
  corp->add_flag("--serial", common.serial, "use the serial kernels");

  auto* exp = app.add_subcommand("export", "Hasse diagram as DOT");
  exp->add_option("input", input)->required();
  exp->add_flag("--completion", of_completion, "export the completion instead");
  exp->add_option("--output,-o", output);
  add_common(exp, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return cmd_check(input, properties, all, common);
    if (*comp) return cmd_complete(input, output, common);
    if (*res) return cmd_residuate(input, kind, on_completion, common);
    if (*gre) return cmd_greechie(input, output, dot, common);
    if (*hs) return cmd_hsum(inputs, output);
    if (*corp) return cmd_corpus(list, criteria, seed, common.serial);
    if (*exp) return cmd_export(input, of_completion, output, common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
