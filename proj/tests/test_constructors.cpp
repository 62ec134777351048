#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/corpus.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/structure.hpp"

using namespace posetkit;

namespace {

FinitePoset permuted(const FinitePoset& p, const std::vector<ElementId>& perm) {
  // element perm[i] of the result is element i of p, names kept
  const std::size_t n = p.size();
  std::vector<std::string> names(n);
  for (ElementId i = 0; i < n; ++i) names[perm[i]] = p.name(i);
  std::vector<NamePair> rel;
  for (auto [x, y] : p.covers()) rel.emplace_back(p.name(x), p.name(y));
  std::optional<std::vector<NamePair>> inv;
  if (p.has_involution()) {
    inv.emplace();
    for (ElementId i = 0; i < n; ++i) inv->emplace_back(p.name(i), p.name(p.prime(i)));
  }
  return build_poset(names, rel, RelationMode::covers, inv);
}

// Independent count of bounded posets with antitone involution on n points
// up to isomorphism: all transitive relations on the inner elements, every
// involution, deduplicated by brute-force minimal encoding over all n!
// relabellings.
std::size_t brute_force_class_count(std::size_t n, bool complemented_only) {
  const std::size_t m = n - 2;  // inner elements 1..m
  std::vector<std::pair<int, int>> slots;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) slots.emplace_back(int(i + 1), int(j + 1));
  std::set<std::vector<int>> classes;
  std::vector<std::vector<int>> involutions;
  // all involutions on the inner elements
  std::vector<int> inv(n);
  std::function<void(std::size_t)> make_inv = [&](std::size_t i) {
    if (i == n - 1) {
      involutions.push_back(inv);
      return;
    }
    if (inv[i] != -1) return make_inv(i + 1);
    inv[i] = int(i);
    make_inv(i + 1);
    for (std::size_t j = i + 1; j < n - 1; ++j)
      if (inv[j] == -1) {
        inv[i] = int(j);
        inv[j] = int(i);
        make_inv(i + 1);
        inv[j] = -1;
      }
    inv[i] = -1;
  };
  std::fill(inv.begin(), inv.end(), -1);
  inv[0] = int(n - 1);
  inv[n - 1] = 0;
  make_inv(1);

  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      le[i][i] = true;
      le[0][i] = true;
      le[i][n - 1] = true;
    }
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (bits >> s & 1) le[slots[s].first][slots[s].second] = true;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && le[a][b] && le[b][a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c)
          if (le[a][b] && le[b][c] && !le[a][c]) ok = false;
      }
    if (!ok) continue;
    for (const auto& iv : involutions) {
      bool antitone = true;
      for (std::size_t a = 0; a < n && antitone; ++a)
        for (std::size_t b = 0; b < n && antitone; ++b)
          if (le[a][b] && !le[iv[b]][iv[a]]) antitone = false;
      if (!antitone) continue;
      oracle::Order o;
      o.n = n;
      o.le = le;
      o.inv.assign(iv.begin(), iv.end());
      if (complemented_only && !o.is_complementation()) continue;
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<int> best;
      do {
        std::vector<int> code;
        std::vector<int> where(n);
        for (std::size_t i = 0; i < n; ++i) where[perm[i]] = int(i);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) code.push_back(le[where[a]][where[b]]);
        for (std::size_t a = 0; a < n; ++a) code.push_back(perm[iv[where[a]]]);
        if (best.empty() || code < best) best = code;
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    }
  }
  return classes.size();
}

}  // namespace

TEST_CASE("horizontal sum reproduces fig2") {
  auto fig1b = corpus_poset("fig1b");
  auto four = build_poset({"0", "f", "f'", "1"}, {{"0", "f"}, {"0", "f'"}, {"f", "1"}, {"f'", "1"}},
                          RelationMode::covers, std::vector<NamePair>{{"0", "1"}, {"1", "0"}, {"f", "f'"}, {"f'", "f"}});
  std::vector<FinitePoset> parts{fig1b, four};
  auto sum = horizontal_sum(parts);
  CHECK(sum.size() == fig1b.size() + 2);
  CHECK(same_labeled_structure(sum, corpus_poset("fig2")));
  auto layout = horizontal_sum_layout(parts);
  REQUIRE(layout.size() == 2);
  CHECK(layout[0][fig1b.zero()] == sum.zero());
  CHECK(layout[1][four.one()] == sum.one());
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (ElementId x = 0; x < parts[k].size(); ++x)
      for (ElementId y = 0; y < parts[k].size(); ++y)
        CHECK(parts[k].leq(x, y) == sum.leq(layout[k][x], layout[k][y]));
  CHECK_FALSE(sum.leq(sum.id("f"), sum.id("a'")));
}

TEST_CASE("horizontal sum name clashes and errors") {
  auto b2 = corpus_poset("b2");
  std::vector<FinitePoset> parts{b2, b2};
  auto sum = horizontal_sum(parts);
  CHECK(sum.size() == 6);
  CHECK(sum.find("a_2").has_value());
  CHECK(is_complementation(sum).holds);
  std::vector<FinitePoset> mixed{b2, corpus_poset("m3")};
  CHECK_THROWS_AS(horizontal_sum(mixed), Error);
  auto unbounded = build_poset({"a", "b"}, {});
  std::vector<FinitePoset> bad{unbounded, unbounded};
  CHECK_THROWS_AS(horizontal_sum(bad), UnboundedPart);
}

TEST_CASE("Greechie diagrams") {
  GreechieDiagram single{{"a", "b", "c"}, {{0, 1, 2}}};
  auto s = greechie_to_omp(single);
  CHECK(s.size() == 8);
  CHECK(is_boolean_poset(s).holds);

  GreechieDiagram triangle{{"a", "b", "c", "d", "e", "f"}, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}};
  auto v = validate_greechie(triangle);
  CHECK_FALSE(v.report.holds);
  CHECK(v.loop_orders.count(3) == 1);
  CHECK_THROWS_AS(greechie_to_omp(triangle), InvalidDiagram);

  auto two = corpus_greechie("twoblock");
  auto t = greechie_to_omp(two);
  CHECK(t.size() == 12);
  CHECK(is_lattice(t).holds);
  CHECK(is_orthomodular_lattice(t).holds);
  CHECK_FALSE(validate_greechie(two).min_loop_order_from_4().has_value());

  GreechieDiagram pair{{"a", "b"}, {{0, 1}}};
  CHECK(greechie_to_omp(pair).size() == 4);

  auto f3 = corpus_greechie("fig3");
  auto vf = validate_greechie(f3);
  CHECK(vf.report.holds);
  CHECK(vf.min_loop_order_from_4() == 4u);
  auto p = greechie_to_omp(f3);
  CHECK(p.size() == 18);
  CHECK(is_orthomodular_poset(p).holds);
  CHECK_FALSE(is_lattice(p).holds);
  CHECK(p.find("s'").has_value());

  GreechieDiagram overlap{{"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1, 3}}};
  CHECK_FALSE(validate_greechie(overlap).report.holds);
}

TEST_CASE("induced subposet") {
  auto b3 = corpus_poset("b3");
  auto x = b3.set_of({b3.zero(), b3.one()});
  auto sub = induced_subposet(b3, x);
  CHECK(sub.size() == 2);
  CHECK(is_complementation(sub).holds);
  auto bad = b3.set_of({b3.zero(), b3.one(), 1});
  CHECK_THROWS_AS(induced_subposet(b3, bad), NotComplementClosed);
  CHECK_NOTHROW(induced_subposet(b3, bad, false));
  CHECK_THROWS_AS(induced_subposet(b3, b3.empty_set()), Error);
}

TEST_CASE("exhaustive generator counts match an independent enumeration") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(generate_exhaustive(n, GenConstraint::any).size() == brute_force_class_count(n, false));
    CHECK(generate_exhaustive(n, GenConstraint::complemented).size() == brute_force_class_count(n, true));
  }
}

TEST_CASE("exhaustive generator output is distinct and well formed") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (auto c : {GenConstraint::any, GenConstraint::complemented, GenConstraint::pseudo_om}) {
      auto all = generate_exhaustive(n, c);
      std::set<std::string> forms;
      for (const auto& p : all) {
        CHECK(p.size() == n);
        CHECK(p.is_bounded());
        CHECK(is_antitone_involution(p).holds);
        if (c != GenConstraint::any) CHECK(is_complementation(p).holds);
        if (c == GenConstraint::pseudo_om) CHECK(is_pseudo_orthomodular(p).holds);
        forms.insert(canonical_form(p));
      }
      CHECK(forms.size() == all.size());
    }
  }
  CHECK_THROWS_AS(generate_exhaustive(9, GenConstraint::any), SizeLimitExceeded);
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(17);
  for (const auto& e : corpus_entries()) {
    auto p = corpus_poset(e.name);
    std::vector<ElementId> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int round = 0; round < 5; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(permuted(p, perm)) == canonical_form(p));
    }
  }
  CHECK(canonical_form(corpus_poset("mo2")) != canonical_form(corpus_poset("benzene")));
}

TEST_CASE("random generator") {
  RandomPosetGenerator g1(42), g2(42);
  for (int i = 0; i < 20; ++i) {
    auto a = g1.next(8, GenConstraint::complemented);
    auto b = g2.next(8, GenConstraint::complemented);
    CHECK(a == b);
    CHECK(a.size() == 8);
    CHECK(is_complementation(a).holds);
  }
  RandomPosetGenerator g(7);
  for (int i = 0; i < 20; ++i) {
    auto p = g.next(9, GenConstraint::any);
    CHECK(p.size() == 9);
    CHECK(is_antitone_involution(p).holds);
    auto q = g.next(6, GenConstraint::pseudo_om);
    CHECK(is_pseudo_orthomodular(q).holds);
  }

  GenerateRequest req;
  req.n = 10;
  req.constraint = GenConstraint::complemented;
  req.exhaustive = false;
  req.seed = 3;
  req.count = 15;
  auto batch = generate_small(req);
  CHECK(batch.size() == 15);
  for (const auto& p : batch) {
    CHECK(p.size() % 2 == 0);
    CHECK(p.size() >= 4);
    CHECK(p.size() <= 10);
  }
  CHECK(parse_gen_constraint("pseudo_om") == GenConstraint::pseudo_om);
  CHECK(parse_gen_constraint(to_string(GenConstraint::complemented)) == GenConstraint::complemented);
}
