#include "doctest.h"
#include "oracle.hpp"
#include "posetkit/closure.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/corpus.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/lattice.hpp"
#include "posetkit/structure.hpp"

using namespace posetkit;

namespace {

// the defining SDC condition evaluated directly at (B, C)
bool sdc_holds_at(const FinitePoset& p, const ElementSet& b, const ElementSet& c) {
  const bool meet_zero = p.lower_cone(c | p.prime_image(b)) == p.set_of({p.zero()});
  const auto lc = p.lower_cone(c), ub = p.upper_cone(b);
  bool below = true;
  lc.for_each([&](ElementId x) {
    ub.for_each([&](ElementId y) { below = below && p.leq(x, y); });
  });
  return meet_zero == below;
}

FinitePoset b2() { return corpus_poset("b2"); }

}  // namespace

TEST_CASE("distributive poset") {
  CHECK(is_distributive_poset(corpus_poset("fig1b")).holds);
  CHECK(is_distributive_poset(corpus_poset("chain2")).holds);
  auto m3 = corpus_poset("m3");
  auto r = is_distributive_poset(m3);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness_ids.size() == 3);
  const auto x = r.witness_ids[0], y = r.witness_ids[1], z = r.witness_ids[2];
  CHECK(m3.lower_cone(m3.upper_cone({x, y}) | m3.set_of({z})) !=
        closure(m3, m3.lower_cone({x, z}) | m3.lower_cone({y, z})));
  CHECK_FALSE(is_distributive_poset(corpus_poset("n5")).holds);

  for (const auto& e : corpus_entries()) {
    auto p = corpus_poset(e.name);
    CAPTURE(e.name);
    CHECK(is_distributive_poset(p).holds == oracle::Order::of(p).is_distributive());
  }
}

TEST_CASE("Boolean poset") {
  CHECK(is_boolean_poset(corpus_poset("fig1a")).holds);
  CHECK(is_boolean_poset(corpus_poset("fig1b")).holds);
  CHECK(is_boolean_poset(b2()).holds);
  auto r = is_boolean_poset(corpus_poset("fig3"));
  CHECK_FALSE(r.holds);
  CHECK_THROWS_AS(is_boolean_poset(corpus_poset("m3")), MissingInvolution);
}

TEST_CASE("orthomodular poset") {
  CHECK(is_orthomodular_poset(corpus_poset("fig3")).holds);
  // a <= d' in fig1a but a, d have no join
  auto f1 = corpus_poset("fig1a");
  auto r1 = is_orthomodular_poset(f1);
  CHECK_FALSE(r1.holds);
  CHECK(r1.witness == std::vector<std::string>{"a", "d"});
  auto o1 = oracle::Order::of(f1);
  CHECK(o1.le[f1.id("a")][f1.id("d'")]);
  CHECK_FALSE(o1.join(oracle::bit(f1.id("a")) | oracle::bit(f1.id("d"))).has_value());
  CHECK(is_orthomodular_poset(corpus_poset("b3")).holds);
  CHECK(is_orthomodular_poset(b2()).holds);
  auto bz = corpus_poset("benzene");
  auto r = is_orthomodular_poset(bz);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness_ids.size() == 2);
  CHECK(bz.name(r.witness_ids[0]) == "a");
  CHECK(bz.name(r.witness_ids[1]) == "b");
  CHECK_THROWS_AS(is_orthomodular_poset(corpus_poset("chain3")), NotComplemented);
}

TEST_CASE("orthomodular lattice") {
  auto f2 = corpus_poset("fig2");
  CHECK(is_orthomodular_lattice(complete(f2)).holds);
  auto f3 = corpus_poset("fig3");
  auto d3 = complete(f3);
  auto r = is_orthomodular_lattice(d3);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness_ids.size() == 2);
  const auto x = r.witness_ids[0], y = r.witness_ids[1];
  CHECK(d3.join(x, y) != d3.join(d3.meet(d3.join(x, y), d3.star(y)), y));
  CHECK(is_orthomodular_lattice(b2()).holds);
  CHECK(is_orthomodular_lattice(corpus_poset("mo3")).holds);
  CHECK_FALSE(is_orthomodular_lattice(corpus_poset("benzene")).holds);
  CHECK_THROWS_AS(is_orthomodular_lattice(f2), NotALattice);

  for (const auto& name : {"fig1a", "fig1b", "fig2", "fig3", "benzene", "mo2", "mo3", "b3", "twoblock"}) {
    CAPTURE(name);
    auto p = corpus_poset(name);
    auto c = oracle::complete(oracle::Order::of(p));
    CHECK(is_orthomodular_lattice(complete(p)).holds == c.order.is_orthomodular_lattice());
  }
}

TEST_CASE("pseudo-orthomodular") {
  CHECK(is_pseudo_orthomodular(corpus_poset("fig2")).holds);
  auto f3 = corpus_poset("fig3");
  auto r = is_pseudo_orthomodular(f3);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness_ids.size() == 2);
  CHECK(f3.name(r.witness_ids[0]) == "s'");
  CHECK(f3.name(r.witness_ids[1]) == "x'");
  for (const auto& name : {"fig1a", "fig1b", "b2", "b3", "b4"}) CHECK(is_pseudo_orthomodular(corpus_poset(name)).holds);
  for (const auto& e : corpus_entries()) {
    auto p = corpus_poset(e.name);
    if (!p.has_involution() || !is_complementation(p).holds) continue;
    CAPTURE(e.name);
    CHECK(is_pseudo_orthomodular(p).holds == oracle::Order::of(p).is_pseudo_orthomodular());
  }
}

TEST_CASE("strongly D-continuous") {
  CHECK(is_strongly_d_continuous(corpus_poset("fig2")).holds);
  CHECK(is_strongly_d_continuous(corpus_poset("chain2")).holds);
  auto f3 = corpus_poset("fig3");
  auto r = is_strongly_d_continuous(f3);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness_sets.size() == 2);
  const auto& b = r.witness_sets[0];
  const auto& c = r.witness_sets[1];
  b.for_each([&](ElementId x) { c.for_each([&](ElementId y) { CHECK(f3.leq(x, y)); }); });
  CHECK_FALSE(sdc_holds_at(f3, b, c));
  CHECK_THROWS_AS(is_strongly_d_continuous(corpus_poset("chain3")), NotComplemented);
}

TEST_CASE("SDC reduced loop agrees with the naive loop") {
  for (std::size_t n = 2; n <= 6; n += 2)
    for (const auto& p : generate_exhaustive(n, GenConstraint::complemented)) {
      CHECK(is_strongly_d_continuous(p).holds == is_strongly_d_continuous_naive(p).holds);
    }
  auto b3 = corpus_poset("b3");
  for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
    ElementSet x(8);
    for (ElementId i = 0; i < 8; ++i)
      if (mask >> i & 1) x.insert(i);
    if (!x.contains(b3.zero()) || !x.contains(b3.one()) || b3.prime_image(x) != x) continue;
    auto p = induced_subposet(b3, x);
    if (!is_complementation(p).holds) continue;
    CHECK(is_strongly_d_continuous(p).holds == is_strongly_d_continuous_naive(p).holds);
  }
  for (const auto& name : {"mo2", "mo3", "benzene", "b3"}) {
    auto p = corpus_poset(name);
    CHECK(is_strongly_d_continuous(p).holds == is_strongly_d_continuous_naive(p).holds);
  }
}

TEST_CASE("Finch criterion") {
  CHECK(finch_criterion(corpus_poset("fig2")).holds);
  CHECK(finch_criterion(b2()).holds);
  auto f3 = corpus_poset("fig3");
  auto d = complete(f3);
  auto r = finch_criterion(f3, d);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness_sets.size() == 2);
  const auto& z = r.witness_sets[0];
  const auto& s = r.witness_sets[1];
  CHECK(closure(f3, z) == z);
  CHECK(s.is_subset_of(z));
  CHECK(is_orthogonal(f3, s));
  CHECK(closure(f3, s) != z);
}

TEST_CASE("complement-closed doubly dense subsets") {
  auto b = b2();
  CHECK(is_complement_closed_doubly_dense(b, b.all()).holds);
  auto r = is_complement_closed_doubly_dense(b, b.set_of({b.zero(), b.one()}));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness_ids.size() == 1);
  CHECK(b.name(r.witness_ids[0]) == "a");

  auto f2 = corpus_poset("fig2");
  auto d = complete(f2);
  auto l = d.as_poset();
  ElementSet image(d.size());
  for (ElementId x = 0; x < f2.size(); ++x) image.insert(d.embed(x));
  CHECK(is_complement_closed_doubly_dense(l, image).holds);
  CHECK_THROWS_AS(is_complement_closed_doubly_dense(f2, f2.all()), NotALattice);
}

TEST_CASE("modular violation search") {
  CHECK(find_modular_violation(LatticeView(corpus_poset("n5"))).has_value());
  CHECK_FALSE(find_modular_violation(LatticeView(corpus_poset("m3"))).has_value());
  CHECK_FALSE(find_modular_violation(LatticeView(corpus_poset("b3"))).has_value());
  auto l = complete(corpus_poset("fig2")).as_poset();
  auto v = find_modular_violation(LatticeView(l));
  REQUIRE(v.has_value());
  LatticeView lv(l);
  const auto [x, y, z] = *v;
  CHECK(lv.leq(x, z));
  CHECK(lv.join(x, lv.meet(y, z)) != lv.meet(lv.join(x, y), z));
}

TEST_CASE("maximal orthogonal subsets match brute force") {
  for (const auto& name : {"fig3", "fig1a", "twoblock"}) {
    auto p = corpus_poset(name);
    auto o = oracle::Order::of(p);
    ElementSet pool = p.all();
    std::set<oracle::Mask> got;
    for_each_maximal_orthogonal_subset(p, pool, [&](const ElementSet& s) {
      got.insert(oracle::to_mask(s));
      return true;
    });
    const oracle::Mask inner = o.all() & ~oracle::bit(p.zero());
    std::set<oracle::Mask> want;
    for (oracle::Mask s = inner;; s = (s - 1) & inner) {
      if (o.orthogonal(s)) {
        bool maximal = true;
        for (std::size_t x = 0; x < p.size(); ++x)
          if ((inner & oracle::bit(x)) && !(s & oracle::bit(x)) && o.orthogonal(s | oracle::bit(x))) maximal = false;
        if (maximal) want.insert(s);
      }
      if (s == 0) break;
    }
    CAPTURE(name);
    CHECK(got == want);
  }
}
