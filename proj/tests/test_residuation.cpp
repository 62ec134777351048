#include "doctest.h"
#include "oracle.hpp"
#include "posetkit/closure.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/corpus.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/lattice.hpp"
#include "posetkit/residuation.hpp"
#include "posetkit/structure.hpp"

using namespace posetkit;

namespace {

// greatest c with L(a,c) <= L(b), by scanning every candidate
std::optional<ElementId> rpc_scan(const FinitePoset& p, ElementId a, ElementId b) {
  auto o = oracle::Order::of(p);
  oracle::Mask good = 0;
  for (ElementId c = 0; c < p.size(); ++c)
    if ((o.L(oracle::bit(a) | oracle::bit(c)) & ~o.L(oracle::bit(b))) == 0) good |= oracle::bit(c);
  return o.greatest(good);
}

}  // namespace

TEST_CASE("operator pair examples") {
  auto c = corpus_poset("chain2");
  auto bp = operator_pair(c, OperatorKind::boolean);
  CHECK(bp.m(c.one(), c.one()) == c.all());
  CHECK(bp.r(c.one(), c.zero()) == c.set_of({c.zero()}));

  auto f3 = corpus_poset("fig3");
  auto pom = operator_pair(f3, OperatorKind::pseudo_om);
  for (ElementId x = 0; x < f3.size(); ++x) CHECK(pom.r(x, f3.zero()) == f3.down_set(f3.prime(x)));

  auto b = corpus_poset("b2");
  auto rp = operator_pair(b, OperatorKind::relpseudo);
  const auto a = b.id("a");
  CHECK(rp.r(a, b.zero()) == b.down_set(b.prime(a)));

  CHECK_THROWS_AS(operator_pair(corpus_poset("m3"), OperatorKind::boolean), MissingInvolution);
  CHECK_THROWS_AS(operator_pair(corpus_poset("m3"), OperatorKind::relpseudo), NoRelativePseudocomplement);
}

TEST_CASE("operator pairs produce lower sets") {
  for (const auto& name : {"fig1a", "fig2", "fig3", "mo3"}) {
    auto p = corpus_poset(name);
    for (auto kind : {OperatorKind::boolean, OperatorKind::pseudo_om}) {
      auto pair = operator_pair(p, kind);
      for (const auto& s : pair.multiply) CHECK(p.lower_cone(p.upper_cone(s)) == s);
      for (const auto& s : pair.residuum) CHECK(p.lower_cone(p.upper_cone(s)) == s);
    }
  }
}

TEST_CASE("relative pseudocomplement") {
  for (const auto& name : {"b2", "b3", "m3", "n5", "chain3", "fig1a"}) {
    CAPTURE(name);
    auto p = corpus_poset(name);
    for (ElementId a = 0; a < p.size(); ++a) {
      CHECK(relative_pseudocomplement(p, a, a) == p.top());
      for (ElementId b = 0; b < p.size(); ++b) CHECK(relative_pseudocomplement(p, a, b) == rpc_scan(p, a, b));
    }
  }
  auto b = corpus_poset("b2");
  CHECK(relative_pseudocomplement(b, b.id("a"), b.zero()) == b.id("b"));
  auto m3 = corpus_poset("m3");
  CHECK_FALSE(relative_pseudocomplement(m3, m3.id("a"), m3.id("b")).has_value());
}

TEST_CASE("operator left residuation") {
  auto f1 = corpus_poset("fig1a");
  CHECK(verify_operator_left_residuation(f1, operator_pair(f1, OperatorKind::boolean)).holds);
  // fig3 is not pseudo-orthomodular and the adjunction breaks at (s, x', 0)
  auto f3 = corpus_poset("fig3");
  auto pom3 = operator_pair(f3, OperatorKind::pseudo_om);
  auto r3 = verify_operator_left_residuation(f3, pom3);
  CHECK_FALSE(r3.holds);
  REQUIRE(r3.witness_ids.size() == 3);
  CHECK(r3.witness == std::vector<std::string>{"s", "x'", "0"});
  const auto wx = r3.witness_ids[0], wy = r3.witness_ids[1], wz = r3.witness_ids[2];
  CHECK(pom3.m(wx, wy).is_subset_of(f3.down_set(wz)) != f3.down_set(wx).is_subset_of(pom3.r(wy, wz)));
  CHECK(verify_operator_left_residuation(corpus_poset("fig2"),
                                         operator_pair(corpus_poset("fig2"), OperatorKind::pseudo_om))
            .holds);

  auto broken = custom_operator_pair(
      f1, [&](ElementId x, ElementId y) { return f1.lower_cone({x, y}); },
      [&](ElementId, ElementId) { return f1.set_of({f1.zero()}); });
  auto r = verify_operator_left_residuation(f1, broken);
  CHECK_FALSE(r.holds);
  CHECK(r.details.find("R(x,0)") != std::string::npos);

  for (const auto& name : {"b2", "b3", "chain2"}) {
    auto p = corpus_poset(name);
    for (auto kind : {OperatorKind::boolean, OperatorKind::relpseudo, OperatorKind::pseudo_om}) {
      auto pair = operator_pair(p, kind);
      CHECK(verify_operator_left_residuation(p, pair).holds);
      for (ElementId x = 0; x < p.size(); ++x)
        for (ElementId y = 0; y < p.size(); ++y) CHECK((pair.r(x, y) == p.all()) == p.leq(x, y));
    }
  }
}

TEST_CASE("pseudo_om operators on pseudo-orthomodular posets") {
  for (std::size_t n = 2; n <= 8; n += 2)
    for (const auto& p : generate_exhaustive(n, GenConstraint::pseudo_om))
      CHECK(verify_operator_left_residuation(p, operator_pair(p, OperatorKind::pseudo_om)).holds);
  RandomPosetGenerator g(5);
  for (int i = 0; i < 30; ++i) {
    auto p = g.next(10, GenConstraint::pseudo_om);
    CHECK(verify_operator_left_residuation(p, operator_pair(p, OperatorKind::pseudo_om)).holds);
  }
}

TEST_CASE("star on completion") {
  auto b = corpus_poset("b3");
  auto d = complete(b);
  auto t = star_on_dm(d);
  const auto n = d.size();
  REQUIRE(t.size() == n * n);
  for (ElementId x = 0; x < b.size(); ++x)
    for (ElementId y = 0; y < b.size(); ++y)
      CHECK(t[d.embed(x) * n + d.embed(y)] == d.embed(*relative_pseudocomplement(b, x, y)));
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(t[i * n + i] == d.top());
    CHECK(t[d.top() * n + i] == i);
  }
  auto l = d.as_poset();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) CHECK(t[i * n + j] == *relative_pseudocomplement(l, i, j));

  auto c3 = corpus_poset("chain3");
  auto dc = complete(c3);
  auto tc = star_on_dm(dc);
  for (ElementId x = 0; x < c3.size(); ++x)
    for (ElementId y = 0; y < c3.size(); ++y)
      CHECK(tc[dc.embed(x) * dc.size() + dc.embed(y)] == dc.embed(*relative_pseudocomplement(c3, x, y)));

  // fig1a lacks d'*a
  CHECK_THROWS_AS(star_on_dm(complete(corpus_poset("fig1a"))), NoRelativePseudocomplement);
}

TEST_CASE("bdm transform") {
  auto f1 = corpus_poset("fig1a");
  auto d1 = complete(f1);
  auto ops = bdm_transform(d1, OperatorKind::boolean);
  for (std::size_t x = 0; x < d1.size(); ++x) {
    CHECK(ops.mul(x, d1.top()) == x);
    CHECK(ops.imp(x, d1.bottom()) == d1.star(x));
  }
  auto l1 = LatticeView(d1.as_poset());
  auto v1 = verify_left_residuated_lattice(l1, ops);
  CHECK(v1.left_residuated.holds);
  CHECK(v1.commutative.holds);
  auto pom1 = bdm_transform(d1, OperatorKind::pseudo_om);
  CHECK(pom1.odot == ops.odot);

  auto f2 = corpus_poset("fig2");
  auto d2 = complete(f2);
  auto p2 = bdm_transform(d2, OperatorKind::pseudo_om);
  for (std::size_t y = 0; y < d2.size(); ++y) CHECK(p2.mul(d2.top(), y) == y);
  auto l2 = LatticeView(d2.as_poset());
  auto v2 = verify_left_residuated_lattice(l2, p2);
  CHECK(v2.left_residuated.holds);
  CHECK_FALSE(v2.commutative.holds);
  REQUIRE(v2.commutative.witness_ids.size() == 2);
  CHECK(p2.mul(v2.commutative.witness_ids[0], v2.commutative.witness_ids[1]) !=
        p2.mul(v2.commutative.witness_ids[1], v2.commutative.witness_ids[0]));

  auto f3 = corpus_poset("fig3");
  auto d3 = complete(f3);
  auto p3 = bdm_transform(d3, OperatorKind::pseudo_om);
  auto v3 = verify_left_residuated_lattice(LatticeView(d3.as_poset()), p3);
  CHECK_FALSE(v3.left_residuated.holds);
  REQUIRE(v3.left_residuated.witness_ids.size() == 3);
  const auto x = v3.left_residuated.witness_ids[0], y = v3.left_residuated.witness_ids[1],
             z = v3.left_residuated.witness_ids[2];
  CHECK(d3.includes(p3.mul(x, y), z) != d3.includes(x, p3.imp(y, z)));

  CHECK_THROWS_AS(bdm_transform(complete(corpus_poset("n5")), OperatorKind::boolean), MissingInvolution);
}

TEST_CASE("orthomodular lattices are left residuated under the pseudo_om terms") {
  for (const auto& name : {"mo2", "mo3", "b2", "b3", "b4", "twoblock"}) {
    CAPTURE(name);
    LatticeView l(corpus_poset(name));
    auto v = verify_left_residuated_lattice(l, lattice_transform(l, OperatorKind::pseudo_om));
    CHECK(v.left_residuated.holds);
  }
  LatticeView bz(corpus_poset("benzene"));
  CHECK_FALSE(verify_left_residuated_lattice(bz, lattice_transform(bz, OperatorKind::pseudo_om)).left_residuated.holds);
  for (const auto& name : {"b2", "b3", "b4"}) {
    LatticeView l(corpus_poset(name));
    CHECK(lattice_transform(l, OperatorKind::boolean).odot == lattice_transform(l, OperatorKind::pseudo_om).odot);
  }
}

TEST_CASE("operator kind names") {
  CHECK(parse_operator_kind("pseudo-om") == OperatorKind::pseudo_om);
  CHECK(parse_operator_kind("pseudo_om") == OperatorKind::pseudo_om);
  CHECK(parse_operator_kind("relpseudo") == OperatorKind::relpseudo);
  CHECK_FALSE(parse_operator_kind("bogus").has_value());
  CHECK(to_string(OperatorKind::boolean) == "boolean");
}
