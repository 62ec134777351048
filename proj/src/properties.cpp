#include "posetkit/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "posetkit/errors.hpp"
#include "posetkit/lattice.hpp"
#include "posetkit/structure.hpp"

namespace posetkit {

PropertyContext::PropertyContext(FinitePoset p, CompletionOptions options)
    : poset_(std::move(p)), options_(options) {}

const DMLattice& PropertyContext::completion() const {
  std::call_once(once_, [&] { completion_ = std::make_unique<DMLattice>(complete(poset_, options_)); });
  return *completion_;
}

namespace {

using Runner = std::function<CheckReport(const PropertyContext&)>;

CheckReport completion_distributive(const PropertyContext& ctx) {
  auto r = is_distributive_poset(ctx.completion().as_poset(ctx.options().exec), ctx.options().exec);
  r.property = "completion-distributive";
  return r;
}

CheckReport completion_modular(const PropertyContext& ctx) {
  const auto& d = ctx.completion();
  LatticeView l(d.as_poset(ctx.options().exec), ctx.options().exec);
  auto bad = find_modular_violation(l, ctx.options().exec);
  if (!bad) return passed("completion-modular");
  auto r = failed("completion-modular", "x v (y ^ z) != (x v y) ^ z with x <= z");
  r.witness_ids = {(*bad)[0], (*bad)[1], (*bad)[2]};
  for (auto i : r.witness_ids) r.witness.push_back(d.label(i));
  return r;
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"antitone-involution", [](const PropertyContext& c) { return is_antitone_involution(c.poset()); }},
      {"complementation", [](const PropertyContext& c) { return is_complementation(c.poset()); }},
      {"lattice", [](const PropertyContext& c) { return is_lattice(c.poset()); }},
      {"atomic", [](const PropertyContext& c) { return is_atomic(c.poset()); }},
      {"atomistic", [](const PropertyContext& c) { return is_atomistic(c.poset()); }},
      {"orthocomplete", [](const PropertyContext& c) { return is_orthocomplete(c.poset()); }},
      {"distributive",
       [](const PropertyContext& c) { return is_distributive_poset(c.poset(), c.options().exec); }},
      {"boolean", [](const PropertyContext& c) { return is_boolean_poset(c.poset(), c.options().exec); }},
      {"orthomodular-poset",
       [](const PropertyContext& c) { return is_orthomodular_poset(c.poset(), c.options().exec); }},
      {"orthomodular-lattice",
       [](const PropertyContext& c) { return is_orthomodular_lattice(c.poset(), c.options().exec); }},
      {"pseudo-orthomodular",
       [](const PropertyContext& c) { return is_pseudo_orthomodular(c.poset(), c.options().exec); }},
      {"strongly-d-continuous",
       [](const PropertyContext& c) {
         return is_strongly_d_continuous(c.poset(), c.completion(), c.options().exec);
       }},
      {"finch", [](const PropertyContext& c) { return finch_criterion(c.poset(), c.completion()); }},
      {"join-meet-density",
       [](const PropertyContext& c) { return check_join_meet_density(c.poset(), c.completion()); }},
      {"completion-orthomodular",
       [](const PropertyContext& c) {
         auto r = is_orthomodular_lattice(c.completion(), c.options().exec);
         r.property = "completion-orthomodular";
         return r;
       }},
      {"completion-distributive", completion_distributive},
      {"completion-modular", completion_modular},
  };
  return r;
}

const CheckReport* find_result(const std::vector<CheckReport>& results, std::string_view name) {
  for (const auto& r : results)
    if (r.property == name) return &r;
  return nullptr;
}

bool is_precondition_failure(const CheckReport& r) { return r.details.rfind("precondition:", 0) == 0; }

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_property_name(std::string_view name) {
  const auto& names = property_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckReport run_property(std::string_view name, const PropertyContext& ctx) {
  for (const auto& [n, run] : registry()) {
    if (n != name) continue;
    try {
      auto r = run(ctx);
      r.property = n;
      return r;
    } catch (const SizeLimitExceeded&) {
      throw;
    } catch (const Error& e) {
      return failed(n, std::string("precondition: ") + e.what());
    }
  }
  throw Error("unknown property '" + std::string(name) + "'");
}

std::vector<CheckReport> expectation_verdicts(const std::vector<CheckReport>& results,
                                              const std::vector<std::pair<std::string, bool>>& expect) {
  std::vector<CheckReport> out;
  for (const auto& [name, want] : expect) {
    const std::string prop = "expect:" + name;
    const auto* r = find_result(results, name);
    if (!r) {
      out.push_back(failed(prop, "no result for this property"));
      continue;
    }
    const std::string observed = r->holds ? "pass" : "fail";
    const std::string wanted = want ? "pass" : "fail";
    if (r->holds == want)
      out.push_back(passed(prop, "observed " + observed));
    else
      out.push_back(failed(prop, "expected " + wanted + ", observed " + observed));
  }
  return out;
}

std::vector<CheckReport> theorem_cross_checks(const std::vector<CheckReport>& results) {
  std::vector<CheckReport> out;
  const auto* comp = find_result(results, "complementation");
  if (!comp || !comp->holds) return out;
  const auto* sdc = find_result(results, "strongly-d-continuous");
  const auto* pom = find_result(results, "pseudo-orthomodular");
  const auto* finch = find_result(results, "finch");
  const auto* oml = find_result(results, "completion-orthomodular");
  if (!oml || is_precondition_failure(*oml)) return out;
  auto verdict = [&](const std::string& name, bool lhs) {
    if (lhs == oml->holds)
      out.push_back(passed(name));
    else
      out.push_back(failed(name, std::string("left side ") + (lhs ? "holds" : "fails") +
                                     " but completion-orthomodular " + (oml->holds ? "holds" : "fails")));
  };
  if (sdc && pom) verdict("theorem:sdc-and-pom-iff-completion-oml", sdc->holds && pom->holds);
  if (finch) verdict("theorem:finch-iff-completion-oml", finch->holds);
  return out;
}

}  // namespace posetkit
