#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "posetkit/constructors.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/structure.hpp"

namespace posetkit {

std::string to_string(GenConstraint c) {
  switch (c) {
    case GenConstraint::any: return "any";
    case GenConstraint::complemented: return "complemented";
    case GenConstraint::pseudo_om: return "pseudo_om";
  }
  return "any";
}

std::optional<GenConstraint> parse_gen_constraint(std::string_view text) {
  if (text == "any") return GenConstraint::any;
  if (text == "complemented") return GenConstraint::complemented;
  if (text == "pseudo_om" || text == "pseudo-om") return GenConstraint::pseudo_om;
  return std::nullopt;
}

namespace {

std::string letter(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

// Middle elements 0..m-1: pairs (2i, 2i+1) swapped by the involution, the
// rest fixed. Globally 0 is the bottom, m+1 the top.
std::vector<ElementId> middle_partner(std::size_t m, std::size_t pairs) {
  std::vector<ElementId> partner(m);
  for (std::size_t x = 0; x < m; ++x) partner[x] = x < 2 * pairs ? (x ^ 1) : x;
  return partner;
}

std::vector<std::string> middle_names(std::size_t m, std::size_t pairs) {
  std::vector<std::string> names{"0"};
  for (std::size_t x = 0; x < m; ++x) {
    if (x < 2 * pairs)
      names.push_back(letter(x / 2) + (x % 2 ? "'" : ""));
    else
      names.push_back(letter(pairs + (x - 2 * pairs)));
  }
  names.push_back("1");
  return names;
}

// strict[x][y] over middle elements -> bounded poset with involution
FinitePoset assemble(const std::vector<std::vector<bool>>& strict, std::size_t pairs) {
  const std::size_t m = strict.size();
  const std::size_t n = m + 2;
  std::vector<ElementSet> rows(n, ElementSet(n));
  rows[0] = ElementSet::full(n);
  for (std::size_t x = 0; x < m; ++x) {
    rows[x + 1].insert(x + 1);
    rows[x + 1].insert(n - 1);
    for (std::size_t y = 0; y < m; ++y)
      if (strict[x][y]) rows[x + 1].insert(y + 1);
  }
  rows[n - 1].insert(n - 1);
  const auto partner = middle_partner(m, pairs);
  std::vector<ElementId> inv(n);
  inv[0] = n - 1;
  inv[n - 1] = 0;
  for (std::size_t x = 0; x < m; ++x) inv[x + 1] = partner[x] + 1;
  return FinitePoset::from_relation(middle_names(m, pairs), std::move(rows), std::move(inv));
}

bool satisfies(const FinitePoset& p, GenConstraint c) {
  switch (c) {
    case GenConstraint::any: return true;
    case GenConstraint::complemented: return static_cast<bool>(is_complementation(p));
    case GenConstraint::pseudo_om:
      return static_cast<bool>(is_complementation(p)) && static_cast<bool>(is_pseudo_orthomodular(p, Exec::serial));
  }
  return false;
}

bool transitive(const std::vector<std::vector<bool>>& s) {
  const std::size_t m = s.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (s[a][b])
        for (std::size_t c = 0; c < m; ++c)
          if (s[b][c] && !s[a][c]) return false;
  return true;
}

}  // namespace

std::vector<FinitePoset> generate_exhaustive(std::size_t n, GenConstraint constraint, const GenerateOptions& options) {
  if (n < 2) throw Error("generated posets need at least 2 elements");
  if (n > options.exhaustive_cap)
    throw SizeLimitExceeded("exhaustive generation is capped at " + std::to_string(options.exhaustive_cap) +
                            " elements");
  const std::size_t m = n - 2;
  std::vector<FinitePoset> out;
  std::unordered_set<std::string> seen;

  for (std::size_t pairs = 0; 2 * pairs <= m; ++pairs) {
    if (constraint != GenConstraint::any && 2 * pairs != m) continue;
    const auto partner = middle_partner(m, pairs);
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) vars.emplace_back(i, j);

    // state per unordered pair: -1 unset, 0 incomparable, 1 i<j, 2 j<i
    std::vector<std::vector<int>> state(m, std::vector<int>(m, -1));
    auto get = [&](std::size_t a, std::size_t b) -> int {
      if (a < b) return state[a][b];
      const int s = state[b][a];
      return s <= 0 ? s : 3 - s;
    };
    auto put = [&](std::size_t a, std::size_t b, int v) {
      if (a < b)
        state[a][b] = v;
      else
        state[b][a] = v <= 0 ? v : 3 - v;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == vars.size()) {
        std::vector<std::vector<bool>> strict(m, std::vector<bool>(m, false));
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            if (i != j && get(i, j) == 1) strict[i][j] = true;
        if (!transitive(strict)) return;
        auto p = assemble(strict, pairs);
        if (!satisfies(p, constraint)) return;
        if (seen.insert(canonical_form(p)).second) out.push_back(std::move(p));
        return;
      }
      const auto [i, j] = vars[k];
      if (state[i][j] != -1) {
        rec(k + 1);
        return;
      }
      // i<j forces j'<i'
      const std::size_t a = partner[j], b = partner[i];
      for (int v = 0; v <= 2; ++v) {
        const int mirrored = v;  // relation of (a, b) in the same encoding
        const int prev = get(a, b);
        if (a == j && b == i) {
          if (v != 0) continue;  // both fixed: x<y would force y<x
        } else if (!(a == i && b == j)) {
          if (prev != -1 && prev != mirrored) continue;
        }
        state[i][j] = v;
        const bool set_mirror = !(a == i && b == j) && !(a == j && b == i) && prev == -1;
        if (set_mirror) put(a, b, mirrored);
        rec(k + 1);
        if (set_mirror) put(a, b, -1);
        state[i][j] = -1;
      }
    };
    rec(0);
  }
  return out;
}

namespace {

GreechieDiagram single_block(std::size_t k) {
  GreechieDiagram g;
  std::vector<std::size_t> blk;
  for (std::size_t i = 0; i < k; ++i) {
    g.atoms.push_back(letter(i));
    blk.push_back(i);
  }
  g.blocks.push_back(blk);
  return g;
}

// blocks {a_i, b_i, a_(i+1)} around a cycle of length k
GreechieDiagram block_loop(std::size_t k) {
  GreechieDiagram g;
  for (std::size_t i = 0; i < k; ++i) {
    g.atoms.push_back("a" + std::to_string(i));
    g.atoms.push_back("b" + std::to_string(i));
  }
  for (std::size_t i = 0; i < k; ++i) g.blocks.push_back({2 * i, 2 * i + 1, (2 * i + 2) % (2 * k)});
  return g;
}

}  // namespace

RandomPosetGenerator::RandomPosetGenerator(std::uint64_t seed, GenerateOptions options)
    : rng_(seed), options_(options) {
  for (const auto& g : {single_block(3), single_block(4), block_loop(4), block_loop(5)})
    hosts_.push_back(greechie_to_omp(g));
}

std::optional<FinitePoset> RandomPosetGenerator::host_subset(std::size_t n) {
  const auto& host = hosts_[std::uniform_int_distribution<std::size_t>(0, hosts_.size() - 1)(rng_)];
  std::vector<ElementId> orbit;
  for (ElementId x = 0; x < host.size(); ++x)
    if (x != host.zero() && x != host.one() && x < host.prime(x)) orbit.push_back(x);
  const std::size_t want = (n - 2) / 2;
  if (orbit.size() < want) return std::nullopt;
  std::shuffle(orbit.begin(), orbit.end(), rng_);
  ElementSet xs = host.set_of({host.zero(), host.one()});
  for (std::size_t i = 0; i < want; ++i) {
    xs.insert(orbit[i]);
    xs.insert(host.prime(orbit[i]));
  }
  return induced_subposet(host, xs);
}

FinitePoset RandomPosetGenerator::candidate(std::size_t n, bool fixed_points_allowed) {
  const std::size_t m = n - 2;
  std::size_t pairs = m / 2;
  if (fixed_points_allowed) pairs = std::uniform_int_distribution<std::size_t>(0, m / 2)(rng_);
  std::vector<int> h(m, 0);
  std::uniform_int_distribution<int> height(1, 3);
  std::bernoulli_distribution sign(0.5);
  for (std::size_t i = 0; i < pairs; ++i) {
    const int v = height(rng_) * (sign(rng_) ? 1 : -1);
    h[2 * i] = v;
    h[2 * i + 1] = -v;
  }
  const auto partner = middle_partner(m, pairs);
  const double density = std::uniform_real_distribution<double>(0.15, 0.6)(rng_);
  std::bernoulli_distribution edge(density);
  std::vector<std::vector<bool>> strict(m, std::vector<bool>(m, false));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (h[x] < h[y] && edge(rng_)) {
        strict[x][y] = true;
        strict[partner[y]][partner[x]] = true;
      }
  // heights strictly increase along edges, so the closure stays acyclic
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t x = 0; x < m; ++x)
      if (strict[x][k])
        for (std::size_t y = 0; y < m; ++y)
          if (strict[k][y]) strict[x][y] = true;
  return assemble(strict, pairs);
}

FinitePoset RandomPosetGenerator::next(std::size_t n, GenConstraint constraint) {
  if (n < 2) throw Error("generated posets need at least 2 elements");
  if (n > options_.random_cap)
    throw SizeLimitExceeded("random generation is capped at " + std::to_string(options_.random_cap) + " elements");
  const bool complemented = constraint != GenConstraint::any;
  if (complemented && n % 2) throw Error("complemented posets have an even number of elements");
  std::bernoulli_distribution from_host(0.5);
  for (int attempt = 0; attempt < 200000; ++attempt) {
    if (complemented && from_host(rng_)) {
      auto p = host_subset(n);
      if (p && satisfies(*p, constraint)) return std::move(*p);
      continue;
    }
    auto p = candidate(n, !complemented);
    if (satisfies(p, constraint)) return p;
  }
  throw Error("no poset satisfying the constraint was drawn");
}

std::vector<FinitePoset> generate_small(const GenerateRequest& request, const GenerateOptions& options) {
  if (request.exhaustive) return generate_exhaustive(request.n, request.constraint, options);
  RandomPosetGenerator gen(request.seed, options);
  const bool complemented = request.constraint != GenConstraint::any;
  std::vector<std::size_t> sizes;
  for (std::size_t s = complemented ? 4 : 3; s <= request.n; ++s)
    if (!complemented || s % 2 == 0) sizes.push_back(s);
  if (sizes.empty()) throw Error("no admissible size up to " + std::to_string(request.n));
  std::mt19937_64 pick(request.seed ^ 0x5bd1e995u);
  std::uniform_int_distribution<std::size_t> which(0, sizes.size() - 1);
  std::vector<FinitePoset> out;
  for (std::size_t i = 0; i < request.count; ++i) out.push_back(gen.next(sizes[which(pick)], request.constraint));
  return out;
}

// --- canonical form ---------------------------------------------------------

std::string canonical_form(const FinitePoset& p) {
  const std::size_t n = p.size();
  const bool inv = p.has_involution();

  std::vector<std::size_t> color(n);
  {
    std::map<std::tuple<std::size_t, std::size_t, bool>, std::size_t> rank;
    std::vector<std::tuple<std::size_t, std::size_t, bool>> sig(n);
    for (ElementId x = 0; x < n; ++x) {
      sig[x] = {p.down_set(x).count(), p.up_set(x).count(), inv && p.prime(x) == x};
      rank[sig[x]] = 0;
    }
    std::size_t r = 0;
    for (auto& [k, v] : rank) v = r++;
    for (ElementId x = 0; x < n; ++x) color[x] = rank[sig[x]];
  }
  for (;;) {
    using Sig = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>, std::size_t>;
    std::vector<Sig> sig(n);
    std::map<Sig, std::size_t> rank;
    for (ElementId x = 0; x < n; ++x) {
      std::vector<std::size_t> down, up;
      p.down_set(x).for_each([&](ElementId y) {
        if (y != x) down.push_back(color[y]);
      });
      p.up_set(x).for_each([&](ElementId y) {
        if (y != x) up.push_back(color[y]);
      });
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
      sig[x] = {color[x], std::move(down), std::move(up), inv ? color[p.prime(x)] : 0};
      rank[sig[x]] = 0;
    }
    std::size_t r = 0;
    for (auto& [k, v] : rank) v = r++;
    const std::size_t before = *std::max_element(color.begin(), color.end()) + 1;
    for (ElementId x = 0; x < n; ++x) color[x] = rank[sig[x]];
    if (r == before) break;
  }

  // positions are filled cell by cell in colour order
  std::vector<std::size_t> cell_of_pos;
  std::vector<std::vector<ElementId>> cells(*std::max_element(color.begin(), color.end()) + 1);
  for (ElementId x = 0; x < n; ++x) cells[color[x]].push_back(x);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::size_t i = 0; i < cells[c].size(); ++i) cell_of_pos.push_back(c);

  std::string best;
  bool have_best = false;
  std::string code;
  std::vector<ElementId> perm;
  std::vector<std::size_t> pos(n, n);
  std::vector<bool> used(n, false);

  std::function<void(std::size_t, bool)> rec = [&](std::size_t k, bool smaller) {
    if (k == n) {
      std::string full = code;
      if (inv)
        for (std::size_t i = 0; i < n; ++i) full.push_back(static_cast<char>(pos[p.prime(perm[i])]));
      if (!have_best || full < best) {
        best = std::move(full);
        have_best = true;
      }
      return;
    }
    for (ElementId x : cells[cell_of_pos[k]]) {
      if (used[x]) continue;
      const std::size_t mark = code.size();
      for (std::size_t a = 0; a < k; ++a) {
        code.push_back(p.leq(perm[a], x) ? '1' : '0');
        code.push_back(p.leq(x, perm[a]) ? '1' : '0');
      }
      bool now_smaller = smaller;
      if (have_best && !smaller) {
        const int cmp = code.compare(0, code.size(), best, 0, code.size());
        if (cmp > 0) {
          code.resize(mark);
          continue;
        }
        now_smaller = cmp < 0;
      }
      used[x] = true;
      pos[x] = k;
      perm.push_back(x);
      rec(k + 1, now_smaller);
      perm.pop_back();
      pos[x] = n;
      used[x] = false;
      code.resize(mark);
    }
  };
  rec(0, false);

  std::string out = std::to_string(n) + (inv ? "i:" : ":");
  for (char c : best) out += c < 32 ? static_cast<char>('A' + c) : c;
  return out;
}

}  // namespace posetkit
