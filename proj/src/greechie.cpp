#include <algorithm>
#include <map>
#include <numeric>

#include "posetkit/constructors.hpp"
#include "posetkit/errors.hpp"

namespace posetkit {

namespace {

using Block = std::vector<std::size_t>;

std::vector<std::size_t> shared_atoms(const Block& a, const Block& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Simple cycles of blocks with distinct connecting atoms. Each cycle is
// rooted at its smallest block index.
void collect_loops(const std::vector<Block>& blocks, std::set<std::size_t>& orders) {
  const std::size_t m = blocks.size();
  std::vector<std::vector<std::vector<std::size_t>>> shared(m, std::vector<std::vector<std::size_t>>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) shared[i][j] = shared_atoms(blocks[i], blocks[j]);

  std::vector<bool> on_path(m, false);
  std::set<std::size_t> used_atoms;
  std::size_t start = 0;
  auto dfs = [&](auto&& self, std::size_t cur, std::size_t len) -> void {
    for (std::size_t nb = start; nb < m; ++nb) {
      if (nb == cur) continue;
      for (auto a : shared[cur][nb]) {
        if (used_atoms.count(a)) continue;
        if (nb == start) {
          if (len >= 2) orders.insert(len);
          continue;
        }
        if (on_path[nb]) continue;
        on_path[nb] = true;
        used_atoms.insert(a);
        self(self, nb, len + 1);
        used_atoms.erase(a);
        on_path[nb] = false;
      }
    }
  };
  for (start = 0; start < m; ++start) {
    on_path.assign(m, false);
    on_path[start] = true;
    dfs(dfs, start, 1);
  }
}

std::string block_text(const GreechieDiagram& g, const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + g.atoms[b[i]];
  return s + "}";
}

}  // namespace

std::optional<std::size_t> GreechieValidation::min_loop_order_from_4() const {
  auto it = loop_orders.lower_bound(4);
  if (it == loop_orders.end()) return std::nullopt;
  return *it;
}

GreechieValidation validate_greechie(const GreechieDiagram& g) {
  GreechieValidation v;
  v.report.property = "greechie_diagram";
  auto fail = [&](std::string why, std::vector<std::string> witness) {
    v.report.holds = false;
    v.report.details = std::move(why);
    v.report.witness = std::move(witness);
    return v;
  };
  if (g.atoms.empty()) return fail("no atoms", {});
  {
    std::set<std::string> seen;
    for (const auto& a : g.atoms)
      if (!seen.insert(a).second) return fail("duplicate atom name", {a});
  }

  std::vector<Block> blocks;
  for (const auto& raw : g.blocks) {
    Block b = raw;
    std::sort(b.begin(), b.end());
    if (b.empty()) return fail("empty block", {});
    for (auto a : b)
      if (a >= g.atoms.size()) return fail("block refers to an unknown atom", {});
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) return fail("atom repeated in a block", {block_text(g, b)});
    blocks.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (blocks[i] == blocks[j]) return fail("duplicate block", {block_text(g, blocks[i])});

  // (1) every atom lies in some block
  for (std::size_t a = 0; a < g.atoms.size(); ++a) {
    bool found = false;
    for (const auto& b : blocks) found = found || std::binary_search(b.begin(), b.end(), a);
    if (!found) return fail("atom lies in no block", {g.atoms[a]});
  }
  // (2) blocks have at least two atoms when there are at least two atoms
  if (g.atoms.size() >= 2)
    for (const auto& b : blocks)
      if (b.size() < 2) return fail("block with fewer than two atoms", {block_text(g, b)});
  // (3) a block meeting another block has at least three atoms
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (i != j && !shared_atoms(blocks[i], blocks[j]).empty() && blocks[i].size() < 3)
        return fail("block meeting another block has fewer than three atoms", {block_text(g, blocks[i])});
  // (4) two blocks share at most one atom
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (shared_atoms(blocks[i], blocks[j]).size() > 1)
        return fail("two blocks share more than one atom", {block_text(g, blocks[i]), block_text(g, blocks[j])});

  collect_loops(blocks, v.loop_orders);
  // (5) no loop of order 3
  if (v.loop_orders.count(3)) return fail("loop of order 3", {});
  if (auto k = v.min_loop_order_from_4())
    v.report.details = "valid; shortest loop has order " + std::to_string(*k);
  else
    v.report.details = "valid; no loops";
  return v;
}

FinitePoset greechie_to_omp(const GreechieDiagram& g) {
  auto v = validate_greechie(g);
  if (!v.report.holds) throw InvalidDiagram(v.report.details);

  std::vector<Block> blocks;
  for (auto b : g.blocks) {
    std::sort(b.begin(), b.end());
    if (b.size() > 20) throw SizeLimitExceeded("block with more than 20 atoms");
    blocks.push_back(std::move(b));
  }

  // nodes (block, mask); offsets into a flat index
  std::vector<std::size_t> offset(blocks.size() + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) offset[b + 1] = offset[b] + (std::size_t{1} << blocks[b].size());
  const std::size_t nodes = offset.back();
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  auto atoms_of = [&](std::size_t b, std::size_t mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < blocks[b].size(); ++i)
      if (mask >> i & 1) s.push_back(blocks[b][i]);
    return s;
  };
  std::map<std::vector<std::size_t>, std::size_t> by_set, by_complement;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t full = (std::size_t{1} << blocks[b].size()) - 1;
    for (std::size_t mask = 0; mask <= full; ++mask) {
      const std::size_t node = offset[b] + mask;
      auto [it1, fresh1] = by_set.emplace(atoms_of(b, mask), node);
      if (!fresh1) unite(node, it1->second);
      auto [it2, fresh2] = by_complement.emplace(atoms_of(b, full & ~mask), node);
      if (!fresh2) unite(node, it2->second);
    }
  }

  // classify each class and pick its name and sort key
  struct Info {
    int category = 2;
    std::size_t key1 = 0, key2 = 0, key3 = 0;
    std::string name;
    bool named = false;
  };
  std::map<std::size_t, Info> info;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t k = blocks[b].size();
    const std::size_t full = (std::size_t{1} << k) - 1;
    for (std::size_t mask = 0; mask <= full; ++mask) {
      const std::size_t root = find(offset[b] + mask);
      const int pc = std::popcount(mask);
      Info cand;
      if (mask == 0) {
        cand = {0, 0, 0, 0, "0", true};
      } else if (mask == full) {
        cand = {4, 0, 0, 0, "1", true};
      } else if (pc == 1) {
        const auto a = blocks[b][std::countr_zero(mask)];
        cand = {1, a, 0, 0, g.atoms[a], true};
      } else if (pc + 1 == static_cast<int>(k)) {
        const auto a = blocks[b][std::countr_zero(full & ~mask)];
        cand = {3, a, 0, 0, g.atoms[a] + "'", true};
      } else {
        std::string nm;
        for (auto a : atoms_of(b, mask)) nm += (nm.empty() ? "" : "+") + g.atoms[a];
        cand = {2, b, static_cast<std::size_t>(pc), mask, nm, true};
      }
      auto it = info.find(root);
      if (it == info.end() || cand.category < it->second.category ||
          (cand.category == it->second.category &&
           std::tie(cand.key1, cand.key2, cand.key3) < std::tie(it->second.key1, it->second.key2, it->second.key3)))
        info[root] = cand;
    }
  }
  // an atom class is named by the atom even when it is also a coatom
  std::vector<std::size_t> roots;
  for (const auto& [r, _] : info) roots.push_back(r);
  std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = info[a];
    const auto& y = info[b];
    return std::tie(x.category, x.key1, x.key2, x.key3) < std::tie(y.category, y.key1, y.key2, y.key3);
  });
  std::map<std::size_t, ElementId> id_of;
  std::vector<std::string> names;
  for (auto r : roots) {
    id_of[r] = names.size();
    names.push_back(info[r].name);
  }
  const std::size_t n = names.size();
  std::vector<ElementSet> rows(n, ElementSet(n));
  std::vector<ElementId> inv(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t full = (std::size_t{1} << blocks[b].size()) - 1;
    for (std::size_t m1 = 0; m1 <= full; ++m1) {
      const ElementId x = id_of[find(offset[b] + m1)];
      inv[x] = id_of[find(offset[b] + (full & ~m1))];
      // supersets of m1
      for (std::size_t m2 = m1;; m2 = (m2 + 1) | m1) {
        rows[x].insert(id_of[find(offset[b] + m2)]);
        if (m2 == full) break;
      }
    }
  }
  auto closed = transitive_closure(rows);
  if (closed != rows) throw InvalidDiagram("block order is not transitive after pasting");
  try {
    return FinitePoset::from_relation(std::move(names), std::move(rows), std::move(inv));
  } catch (const CycleError& e) {
    throw InvalidDiagram(std::string("pasting is not antisymmetric: ") + e.what());
  }
}

}  // namespace posetkit
