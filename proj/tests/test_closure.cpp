#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "posetkit/closure.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/corpus.hpp"
#include "posetkit/errors.hpp"

using namespace posetkit;

namespace {

std::vector<FinitePoset> small_posets() {
  std::vector<FinitePoset> out;
  for (const auto& e : corpus_entries()) {
    auto p = corpus_poset(e.name);
    if (p.size() <= 16) out.push_back(p);
  }
  for (std::size_t n = 2; n <= 7; ++n)
    for (auto& p : generate_exhaustive(n, GenConstraint::any)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("closure examples") {
  auto c = corpus_poset("chain2");
  CHECK(closure(c, c.empty_set()) == c.set_of({c.zero()}));
  auto p = corpus_poset("fig3");
  for (ElementId x = 0; x < p.size(); ++x) CHECK(closure(p, p.set_of({x})) == p.down_set(x));
  CHECK(closure(p, p.set_of_names({"v", "z"})) == p.set_of_names({"0", "v", "z"}));
}

TEST_CASE("closure is a closure operator") {
  std::mt19937_64 rng(3);
  for (const auto& p : small_posets()) {
    auto o = oracle::Order::of(p);
    for (int round = 0; round < 20; ++round) {
      const oracle::Mask s = rng() & o.all();
      const oracle::Mask t = s | (rng() & o.all());
      const auto S = oracle::to_set(p.size(), s), T = oracle::to_set(p.size(), t);
      const auto cs = closure(p, S);
      CHECK(oracle::to_mask(cs) == o.LU(s));
      CHECK(S.is_subset_of(cs));
      CHECK(closure(p, cs) == cs);
      CHECK(cs.is_subset_of(closure(p, T)));
    }
  }
}

TEST_CASE("complete: closed sets match brute force") {
  for (const auto& p : small_posets()) {
    auto o = oracle::Order::of(p);
    auto d = complete(p);
    std::set<oracle::Mask> got;
    for (const auto& s : d.closed_sets()) got.insert(oracle::to_mask(s));
    CHECK(got.size() == d.size());
    CHECK(got == o.closed_sets());
    CHECK(d.closed_set(d.bottom()) == closure(p, p.empty_set()));
    CHECK(d.closed_set(d.top()) == p.all());
    CHECK(d.bottom() == 0);
    CHECK(d.top() == d.size() - 1);
    for (ElementId x = 0; x < p.size(); ++x) {
      CHECK(d.closed_set(d.embed(x)) == p.down_set(x));
      CHECK(d.embedded_element(d.embed(x)) == x);
      for (ElementId y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == d.includes(d.embed(x), d.embed(y)));
    }
  }
}

TEST_CASE("complete: lectic order") {
  for (const auto& name : {"fig1a", "fig3", "m3", "n5"}) {
    auto d = complete(corpus_poset(name));
    const std::size_t n = d.base().size();
    auto key = [&](const ElementSet& s) {
      oracle::Mask m = 0;
      s.for_each([&](ElementId i) { m |= oracle::bit(n - 1 - i); });
      return m;
    };
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(key(d.closed_set(i - 1)) < key(d.closed_set(i)));
  }
}

TEST_CASE("complete examples") {
  auto c = corpus_poset("chain2");
  auto dc = complete(c);
  CHECK(dc.size() == 2);
  CHECK(dc.embed(c.zero()) != dc.embed(c.one()));

  auto f3 = corpus_poset("fig3");
  auto d3 = complete(f3);
  CHECK(d3.size() > 18);
  CHECK(d3.index_of(f3.set_of_names({"0", "v", "z"})).has_value());

  CHECK_THROWS_AS(complete(f3, CompletionOptions{5, Exec::parallel}), SizeLimitExceeded);
  CHECK_NOTHROW(complete(f3, CompletionOptions{d3.size(), Exec::parallel}));
}

TEST_CASE("dm_join and dm_meet") {
  auto p = corpus_poset("fig3");
  auto d = complete(p);
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId y = 0; y < p.size(); ++y) {
      CHECK(dm_meet(d, p.down_set(x), p.down_set(y)) == p.lower_cone({x, y}));
      CHECK(*d.index_of(p.lower_cone({x, y})) == d.meet(d.embed(x), d.embed(y)));
    }
  for (ElementId x = 0; x < p.size(); ++x)
    CHECK(dm_join(d, p.down_set(x), p.set_of({p.zero()})) == p.down_set(x));
  const auto vz = dm_join(d, p.down_set(p.id("v")), p.down_set(p.id("z")));
  CHECK(vz == p.set_of_names({"0", "v", "z"}));
  CHECK(vz == closure(p, p.set_of_names({"v", "z"})));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      CHECK(d.closed_set(d.join(i, j)) == dm_join(d, d.closed_set(i), d.closed_set(j)));
}

TEST_CASE("embedding preserves existing joins and meets") {
  std::mt19937_64 rng(5);
  for (const auto& p : small_posets()) {
    auto d = complete(p);
    auto o = oracle::Order::of(p);
    for (int round = 0; round < 20; ++round) {
      const auto s = oracle::to_set(p.size(), rng() & o.all());
      std::size_t jj = d.bottom(), mm = d.top();
      s.for_each([&](ElementId x) {
        jj = d.join(jj, d.embed(x));
        mm = d.meet(mm, d.embed(x));
      });
      if (auto j = join_of(p, s)) CHECK(jj == d.embed(*j));
      if (auto m = meet_of(p, s)) CHECK(mm == d.embed(*m));
    }
  }
}

TEST_CASE("join of B equals meet of C criterion") {
  std::mt19937_64 rng(9);
  for (const auto& p : small_posets()) {
    auto o = oracle::Order::of(p);
    for (int round = 0; round < 40; ++round) {
      const oracle::Mask c = rng() & rng() & o.all();
      const oracle::Mask b = o.L(c) & rng();
      const auto lc = o.L(c), ub = o.U(b);
      bool below = true;
      for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
          if ((lc & oracle::bit(x)) && (ub & oracle::bit(y)) && !p.leq(x, y)) below = false;
      const auto B = oracle::to_set(p.size(), b), C = oracle::to_set(p.size(), c);
      CHECK((closure(p, B) == p.lower_cone(C)) == below);
    }
  }
}

TEST_CASE("induced involution") {
  for (const auto& name : {"fig1a", "fig2", "fig3", "benzene", "chain3", "mo3"}) {
    CAPTURE(name);
    auto p = corpus_poset(name);
    auto d = complete(p);
    REQUIRE(d.has_involution());
    auto star = induced_involution(d);
    CHECK(star == *d.involution());
    for (ElementId x = 0; x < p.size(); ++x) CHECK(star[d.embed(x)] == d.embed(p.prime(x)));
    CHECK(star[d.top()] == d.bottom());
    CHECK(star[d.bottom()] == d.top());
    const bool complemented = is_complementation(p).holds;
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(d.closed_set(star[i]) == p.lower_cone(p.prime_image(d.closed_set(i))));
      CHECK(star[star[i]] == i);
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d.includes(i, j)) CHECK(d.includes(star[j], star[i]));
      if (complemented) {
        CHECK(d.meet(i, star[i]) == d.bottom());
        CHECK(d.join(i, star[i]) == d.top());
      }
    }
  }
  auto p = corpus_poset("fig3");
  auto d = complete(p);
  const auto vz = *d.index_of(p.set_of_names({"0", "v", "z"}));
  CHECK(d.closed_set(d.star(vz)) == p.lower_cone(p.set_of_names({"v'", "z'"})));
  CHECK(d.star(d.star(vz)) == vz);

  CHECK_THROWS_AS(induced_involution(complete(corpus_poset("m3"))), MissingInvolution);
}

TEST_CASE("join-meet density") {
  for (const auto& p : small_posets()) CHECK(check_join_meet_density(p, complete(p)).holds);
  for (const auto& name : {"fig2", "fig3"}) {
    auto p = corpus_poset(name);
    CHECK(check_join_meet_density(p, complete(p)).holds);
  }
}

TEST_CASE("as_poset is the inclusion order") {
  auto d = complete(corpus_poset("fig3"));
  auto q = d.as_poset();
  REQUIRE(q.size() == d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) CHECK(q.leq(i, j) == d.includes(i, j));
  CHECK(q.has_involution());
  CHECK(q == d.as_poset(Exec::serial));
}
