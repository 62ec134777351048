#include "posetkit/acceptance.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "posetkit/closure.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/corpus.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/lattice.hpp"
#include "posetkit/residuation.hpp"
#include "posetkit/structure.hpp"

namespace posetkit {

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void fail(std::string note) {
    ++failures;
    if (notes.size() < 5) notes.push_back(std::move(note));
  }
  void expect(bool ok, const std::string& note) {
    ++cases;
    if (!ok) fail(note);
  }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream out;
    out << cases << " checks, " << failures << " failures";
    if (!extra.empty()) out << "; " << extra;
    for (const auto& n : notes) out << "; " << n;
    return out.str();
  }
};

FinitePoset boolean4(const std::string& atom) {
  return build_poset({"0", atom, atom + "'", "1"}, {{"0", atom}, {"0", atom + "'"}, {atom, "1"}, {atom + "'", "1"}},
                     RelationMode::covers, std::vector<NamePair>{{"0", "1"}, {"1", "0"}, {atom, atom + "'"}, {atom + "'", atom}});
}

bool residuated_on_completion(const DMLattice& d, OperatorKind kind, Exec exec, bool need_commutative,
                              std::string& why) {
  LatticeView l(d.as_poset(exec), exec);
  auto ops = bdm_transform(d, kind, exec);
  auto v = verify_left_residuated_lattice(l, ops, exec);
  if (!v.left_residuated) {
    why = to_string(kind) + " transform not left residuated: " + v.left_residuated.details;
    return false;
  }
  if (need_commutative && !v.commutative) {
    why = to_string(kind) + " transform not commutative";
    return false;
  }
  return true;
}

// --- populations ------------------------------------------------------------

std::vector<FinitePoset> complemented_population(const AcceptanceOptions& o) {
  std::vector<FinitePoset> pop;
  for (std::size_t n = 2; n <= o.exhaustive_max_size; ++n)
    for (auto& p : generate_exhaustive(n, GenConstraint::complemented)) pop.push_back(std::move(p));
  GenerateRequest req;
  req.n = o.random_max_size;
  req.constraint = GenConstraint::complemented;
  req.exhaustive = false;
  req.seed = o.seed;
  req.count = o.random_complemented;
  for (auto& p : generate_small(req)) pop.push_back(std::move(p));
  return pop;
}

std::vector<std::string> poset_corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : corpus_entries()) out.emplace_back(e.name);
  return out;
}

bool is_complemented(const FinitePoset& p) { return p.has_involution() && is_complementation(p).holds; }

bool is_pom(const FinitePoset& p, Exec exec) { return is_complemented(p) && is_pseudo_orthomodular(p, exec).holds; }

// --- criteria -----------------------------------------------------------------

CriterionResult c1(const AcceptanceOptions& o) {
  Tally t;
  for (const char* name : {"fig1a", "fig1b"}) {
    const auto p = corpus_poset(name);
    const std::string n = name;
    t.expect(is_boolean_poset(p, o.exec).holds, n + ": not a Boolean poset");
    t.expect(!is_lattice(p).holds, n + ": unexpectedly a lattice");
    const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
    t.expect(is_orthomodular_lattice(d, o.exec).holds, n + ": completion not orthomodular");
    t.expect(is_distributive_poset(d.as_poset(o.exec), o.exec).holds, n + ": completion not distributive");
    auto pair = operator_pair(p, OperatorKind::boolean, o.exec);
    auto ax = verify_operator_left_residuation(p, pair, o.exec);
    t.expect(ax.holds, n + ": boolean operator axioms: " + ax.details);
    std::string why;
    t.expect(residuated_on_completion(d, OperatorKind::boolean, o.exec, true, why), n + ": " + why);
  }
  return {1, "fig1a/fig1b: Boolean posets with Boolean-algebra completions", t.failures == 0, t.summary()};
}

CriterionResult c2(const AcceptanceOptions& o) {
  Tally t;
  const auto p = corpus_poset("fig2");
  const std::vector<FinitePoset> parts{corpus_poset("fig1b"), boolean4("f")};
  t.expect(same_labeled_structure(horizontal_sum(parts), p), "corpus fig2 differs from horizontal_sum(fig1b, {0,f,f',1})");
  t.expect(is_pseudo_orthomodular(p, o.exec).holds, "fig2 not pseudo-orthomodular");
  const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
  t.expect(is_orthomodular_lattice(d, o.exec).holds, "completion not orthomodular");
  LatticeView l(d.as_poset(o.exec), o.exec);
  auto bad = find_modular_violation(l, o.exec);
  std::string extra;
  t.expect(bad.has_value(), "completion is modular");
  if (bad) extra = "modular law fails at (" + d.label((*bad)[0]) + ", " + d.label((*bad)[1]) + ", " + d.label((*bad)[2]) + ")";
  std::string why;
  t.expect(residuated_on_completion(d, OperatorKind::pseudo_om, o.exec, false, why), why);
  return {2, "fig2: pseudo-orthomodular, nonmodular orthomodular completion", t.failures == 0,
          t.summary(extra + ", " + std::to_string(d.size()) + " closed sets")};
}

CriterionResult c3(const AcceptanceOptions& o) {
  Tally t;
  const auto p = corpus_poset("fig3");
  t.expect(p.size() == 18, "fig3 pastes to " + std::to_string(p.size()) + " elements");
  t.expect(is_orthomodular_poset(p, o.exec).holds, "fig3 not an orthomodular poset");
  t.expect(!is_lattice(p).holds, "fig3 is a lattice");
  auto pom = is_pseudo_orthomodular(p, o.exec);
  t.expect(!pom.holds, "fig3 pseudo-orthomodular");
  std::string extra;
  if (!pom.holds) extra = "first witness (" + pom.witness.at(0) + ", " + pom.witness.at(1) + ")";

  const ElementId s1 = p.id("s'"), x1 = p.id("x'"), x = p.id("x");
  const ElementSet low = p.lower_cone({s1, x1});
  t.expect((low & atoms(p)) == p.set_of_names({"v", "z"}), "L(s',x') atoms = " + p.format(low & atoms(p)));
  ElementSet with_x = low;
  with_x.insert(x);
  t.expect(p.upper_cone(with_x) == p.set_of_names({"1"}), "U(L(s',x'),x) = " + p.format(p.upper_cone(with_x)));
  // the identity L(U(L(s',x'),x),x') = L(s',x') fails at (s', x')
  t.expect(!(p.lower_cone(p.upper_cone(with_x) | p.set_of({x1})) == low), "identity holds at (s',x')");

  const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
  t.expect(!is_orthomodular_lattice(d, o.exec).holds, "completion orthomodular");
  return {3, "fig3: Greechie logic, not pseudo-orthomodular", t.failures == 0, t.summary(extra)};
}

CriterionResult c4(const AcceptanceOptions& o) {
  Tally t;
  for (const auto& p : complemented_population(o)) {
    const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
    const bool lhs = is_strongly_d_continuous(p, d, o.exec).holds && is_pseudo_orthomodular(p, o.exec).holds;
    const bool rhs = is_orthomodular_lattice(d, o.exec).holds;
    t.expect(lhs == rhs, "discrepancy on " + canonical_form(p));
  }
  return {4, "SDC and pseudo-orthomodular iff orthomodular completion", t.failures == 0, t.summary()};
}

CriterionResult c5(const AcceptanceOptions& o) {
  Tally t;
  for (const auto& p : complemented_population(o)) {
    const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
    t.expect(finch_criterion(p, d).holds == is_orthomodular_lattice(d, o.exec).holds,
             "discrepancy on " + canonical_form(p));
  }
  return {5, "Finch criterion iff orthomodular completion", t.failures == 0, t.summary()};
}

CriterionResult c6(const AcceptanceOptions& o) {
  Tally t;
  for (std::size_t n = 2; n <= o.exhaustive_max_size; ++n)
    for (const auto& p : generate_exhaustive(n, GenConstraint::complemented)) {
      const bool reduced = is_strongly_d_continuous(p, {kDefaultMaxClosedSets, o.exec}).holds;
      const bool naive = is_strongly_d_continuous_naive(p).holds;
      t.expect(reduced == naive, "reduced and naive SDC disagree on " + canonical_form(p));
    }
  return {6, "Reduced SDC agrees with the all-pairs form", t.failures == 0, t.summary()};
}

CriterionResult c7(const AcceptanceOptions& o) {
  Tally t;
  std::size_t members = 0;
  for (const auto& p : complemented_population(o)) {
    if (!is_pseudo_orthomodular(p, o.exec).holds) continue;
    ++members;
    try {
      const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
      t.expect(is_orthomodular_lattice(d, o.exec).holds, "completion not orthomodular: " + canonical_form(p));
      std::string why;
      t.expect(residuated_on_completion(d, OperatorKind::pseudo_om, o.exec, false, why), why);
    } catch (const std::exception& e) {
      t.fail(std::string("exception: ") + e.what());
    }
  }
  return {7, "Finite pseudo-orthomodular posets have orthomodular completions", t.failures == 0 && members > 0,
          t.summary(std::to_string(members) + " pseudo-orthomodular posets")};
}

CriterionResult c8(const AcceptanceOptions& o) {
  Tally t;
  std::size_t subsets = 0;
  for (const char* name : {"chain2", "b2", "b3", "b4", "mo2", "mo3", "twoblock"}) {
    const auto l = corpus_poset(name);
    t.expect(l.size() <= 16 && is_orthomodular_lattice(l, o.exec).holds, std::string(name) + " is not an OML");
    std::vector<ElementId> orbit;
    for (ElementId x = 0; x < l.size(); ++x)
      if (x != l.zero() && x != l.one() && x < l.prime(x)) orbit.push_back(x);
    for (std::size_t mask = 0; mask < (std::size_t{1} << orbit.size()); ++mask) {
      ElementSet xs = l.set_of({l.zero(), l.one()});
      for (std::size_t i = 0; i < orbit.size(); ++i)
        if (mask >> i & 1) {
          xs.insert(orbit[i]);
          xs.insert(l.prime(orbit[i]));
        }
      if (!is_complement_closed_doubly_dense(l, xs).holds) continue;
      ++subsets;
      try {
        auto sub = induced_subposet(l, xs);
        t.expect(is_pseudo_orthomodular(sub, o.exec).holds, std::string(name) + ": " + l.format(xs) + " not pseudo-orthomodular");
      } catch (const std::exception& e) {
        t.fail(std::string(name) + ": exception " + e.what());
      }
    }
  }
  std::size_t converse = 0;
  for (const auto& name : poset_corpus_names()) {
    const auto p = corpus_poset(name);
    if (!is_pom(p, o.exec)) continue;
    ++converse;
    try {
      const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
      const auto lp = d.as_poset(o.exec);
      ElementSet image(lp.size());
      for (ElementId x = 0; x < p.size(); ++x) image.insert(d.embed(x));
      t.expect(is_complement_closed_doubly_dense(lp, image).holds, name + " not doubly dense in its completion");
    } catch (const std::exception& e) {
      t.fail(name + ": exception " + e.what());
    }
  }
  return {8, "Complement-closed doubly dense subsets of finite OMLs", t.failures == 0 && converse > 0,
          t.summary(std::to_string(subsets) + " subsets, " + std::to_string(converse) + " corpus posets")};
}

// Explicit map DM(sum of parts) -> sum of DM(parts), checked edge for edge.
bool verify_sum_isomorphism(const std::vector<FinitePoset>& parts, Exec exec, std::string& why) {
  const auto sum = horizontal_sum(parts);
  const auto layout = horizontal_sum_layout(parts);
  const auto d = complete(sum, {kDefaultMaxClosedSets, exec});

  std::vector<DMLattice> dms;
  std::vector<FinitePoset> dm_posets;
  for (const auto& part : parts) {
    dms.push_back(complete(part, {kDefaultMaxClosedSets, exec}));
    dm_posets.push_back(dms.back().as_poset(exec));
  }
  const auto h = horizontal_sum(dm_posets);
  const auto h_layout = horizontal_sum_layout(dm_posets);
  if (d.size() != h.size()) {
    why = "sizes differ: " + std::to_string(d.size()) + " vs " + std::to_string(h.size());
    return false;
  }

  std::vector<ElementId> phi(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const ElementSet& z = d.closed_set(i);
    if (i == d.bottom()) {
      phi[i] = 0;
      continue;
    }
    if (z.is_full()) {
      phi[i] = h.size() - 1;
      continue;
    }
    bool found = false;
    for (std::size_t k = 0; k < parts.size() && !found; ++k) {
      ElementSet local(parts[k].size());
      ElementSet image(sum.size());
      for (ElementId x = 0; x < parts[k].size(); ++x) {
        image.insert(layout[k][x]);
        if (z.contains(layout[k][x])) local.insert(x);
      }
      if (!z.is_subset_of(image)) continue;
      auto idx = dms[k].index_of(local);
      if (!idx) {
        why = "closed set " + d.label(i) + " does not restrict to a closed set of part " + std::to_string(k + 1);
        return false;
      }
      phi[i] = h_layout[k][*idx];
      found = true;
    }
    if (!found) {
      why = "closed set " + d.label(i) + " spans several parts";
      return false;
    }
  }
  std::set<ElementId> distinct(phi.begin(), phi.end());
  if (distinct.size() != phi.size()) {
    why = "map is not injective";
    return false;
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d.includes(i, j) != h.leq(phi[i], phi[j])) {
        why = "order differs at (" + d.label(i) + ", " + d.label(j) + ")";
        return false;
      }
  std::set<std::pair<ElementId, ElementId>> mapped, target;
  for (auto [a, b] : d.as_poset(exec).covers()) mapped.emplace(phi[a], phi[b]);
  for (auto e : h.covers()) target.insert(e);
  if (mapped != target) {
    why = "cover relations differ";
    return false;
  }
  if (d.has_involution() && h.has_involution())
    for (std::size_t i = 0; i < d.size(); ++i)
      if (phi[d.star(i)] != h.prime(phi[i])) {
        why = "involution not preserved at " + d.label(i);
        return false;
      }
  return true;
}

CriterionResult c9(const AcceptanceOptions& o) {
  Tally t;
  std::vector<std::vector<FinitePoset>> combos;
  combos.push_back({corpus_poset("fig1b"), boolean4("f")});
  RandomPosetGenerator gen(o.seed + 9);
  std::mt19937_64 rng(o.seed + 10);
  for (std::size_t c = 0; c < o.random_sum_combinations; ++c) {
    const std::size_t count = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
    std::vector<FinitePoset> parts;
    for (std::size_t k = 0; k < count; ++k)
      parts.push_back(gen.next(std::uniform_int_distribution<std::size_t>(3, 7)(rng), GenConstraint::any));
    combos.push_back(std::move(parts));
  }
  for (std::size_t c = 0; c < combos.size(); ++c) {
    std::string why;
    bool ok = false;
    try {
      ok = verify_sum_isomorphism(combos[c], o.exec, why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    t.expect(ok, "combination " + std::to_string(c) + ": " + why);
  }
  return {9, "Completion of a horizontal sum is the sum of completions", t.failures == 0, t.summary()};
}

CriterionResult c10(const AcceptanceOptions& o) {
  Tally t;
  std::size_t nb = 0, nr = 0, np = 0;
  for (const auto& name : poset_corpus_names()) {
    const auto p = corpus_poset(name);
    if (!p.is_bounded()) continue;
    if (p.has_involution() && is_boolean_poset(p, o.exec).holds) {
      ++nb;
      auto r = verify_operator_left_residuation(p, operator_pair(p, OperatorKind::boolean, o.exec), o.exec);
      t.expect(r.holds, name + " boolean: " + r.details);
    }
    bool rpc = true;
    for (ElementId a = 0; a < p.size() && rpc; ++a)
      for (ElementId b = 0; b < p.size() && rpc; ++b) rpc = relative_pseudocomplement(p, a, b).has_value();
    if (rpc) {
      ++nr;
      auto r = verify_operator_left_residuation(p, operator_pair(p, OperatorKind::relpseudo, o.exec), o.exec);
      t.expect(r.holds, name + " relpseudo: " + r.details);
      const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
      const auto star = star_on_dm(d, o.exec);
      for (ElementId a = 0; a < p.size(); ++a)
        for (ElementId b = 0; b < p.size(); ++b)
          t.expect(star[d.embed(a) * d.size() + d.embed(b)] == d.embed(*relative_pseudocomplement(p, a, b)),
                   name + ": L(a) (*) L(b) != L(a*b) at (" + p.name(a) + ", " + p.name(b) + ")");
    }
    if (is_pom(p, o.exec)) {
      ++np;
      auto r = verify_operator_left_residuation(p, operator_pair(p, OperatorKind::pseudo_om, o.exec), o.exec);
      t.expect(r.holds, name + " pseudo_om: " + r.details);
    }
  }
  return {10, "Operator left residuation on corpus posets", t.failures == 0 && nb && nr && np,
          t.summary(std::to_string(nb) + " boolean, " + std::to_string(nr) + " relpseudo, " + std::to_string(np) +
                    " pseudo-orthomodular")};
}

CriterionResult c11(const AcceptanceOptions& o) {
  Tally t;
  std::vector<std::pair<std::string, FinitePoset>> small;
  for (const auto& name : poset_corpus_names()) {
    auto p = corpus_poset(name);
    if (p.size() <= o.exhaustive_max_size) small.emplace_back(name, std::move(p));
  }
  for (std::size_t n = 2; n <= o.exhaustive_max_size; ++n)
    for (auto& p : generate_exhaustive(n, GenConstraint::any)) small.emplace_back(canonical_form(p), std::move(p));

  for (const auto& [name, p] : small) {
    const std::size_t n = p.size();
    std::vector<ElementSet> subsets;
    std::vector<ElementSet> closures;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      ElementSet s(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.insert(i);
      subsets.push_back(s);
      closures.push_back(closure(p, s));
    }
    bool laws = true;
    std::set<std::size_t> closed_masks;
    // lectic rank: the smallest element is the most significant bit
    auto mask_of = [&](const ElementSet& s) {
      std::size_t m = 0;
      s.for_each([&](ElementId i) { m |= std::size_t{1} << (n - 1 - i); });
      return m;
    };
    for (std::size_t a = 0; a < subsets.size(); ++a) {
      laws = laws && subsets[a].is_subset_of(closures[a]) && closure(p, closures[a]) == closures[a];
      closed_masks.insert(mask_of(closures[a]));
      for (std::size_t b = 0; b < subsets.size() && laws; ++b)
        if ((a & b) == a) laws = closures[a].is_subset_of(closures[b]);
    }
    t.expect(laws, name + ": closure laws fail");
    const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
    std::vector<std::size_t> enumerated;
    for (const auto& s : d.closed_sets()) enumerated.push_back(mask_of(s));
    t.expect(std::vector<std::size_t>(closed_masks.begin(), closed_masks.end()) == enumerated,
             name + ": lectic enumeration differs from brute force");
  }

  for (const auto& name : poset_corpus_names()) {
    const auto p = corpus_poset(name);
    const auto d = complete(p, {kDefaultMaxClosedSets, o.exec});
    if (!d.has_involution()) continue;
    for (std::size_t i = 0; i < d.size(); ++i) {
      t.expect(d.star(d.star(i)) == i, name + ": induced involution not involutive");
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d.includes(i, j)) t.expect(d.includes(d.star(j), d.star(i)), name + ": induced involution not antitone");
    }
    for (ElementId x = 0; x < p.size(); ++x)
      t.expect(d.star(d.embed(x)) == d.embed(p.prime(x)), name + ": induced involution does not extend '");
  }
  return {11, "Closure engine self-tests", t.failures == 0, t.summary(std::to_string(small.size()) + " small posets")};
}

const std::vector<std::function<CriterionResult(const AcceptanceOptions&)>>& criteria() {
  static const std::vector<std::function<CriterionResult(const AcceptanceOptions&)>> all = {
      c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11};
  return all;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > static_cast<int>(criteria().size())) {
    r.details = "no such criterion";
    return r;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    r = criteria()[id - 1](options);
  } catch (const std::exception& e) {
    r.id = id;
    r.passed = false;
    r.details = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(criteria().size()); ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_criterion(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.title << "  (" << r.details << ")";
  return out.str();
}

}  // namespace posetkit
