#include "posetkit/constructors.hpp"

#include <unordered_set>

#include "posetkit/errors.hpp"

namespace posetkit {

FinitePoset horizontal_sum(std::span<const FinitePoset> parts) {
  if (parts.empty()) throw Error("horizontal sum of no parts");
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!parts[k].is_bounded() || parts[k].size() < 2)
      throw UnboundedPart("part " + std::to_string(k + 1) + " is not a bounded poset with 0 != 1");
    if (parts[k].has_involution() != parts[0].has_involution())
      throw Error("involutions must be present on all parts or on none");
  }
  if (parts.size() == 1) return parts[0];

  std::vector<std::string> names;
  std::unordered_set<std::string> used;
  auto add_name = [&](std::string nm, std::size_t part) {
    while (used.count(nm)) nm += "_" + std::to_string(part + 1);
    used.insert(nm);
    names.push_back(nm);
  };
  add_name(parts[0].name(parts[0].zero()), 0);

  // global id of each part element
  std::vector<std::vector<ElementId>> global(parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& part = parts[k];
    global[k].assign(part.size(), 0);
    for (ElementId x = 0; x < part.size(); ++x) {
      if (x == part.zero() || x == part.one()) continue;
      global[k][x] = names.size();
      add_name(part.name(x), k);
    }
  }
  const ElementId top = names.size();
  add_name(parts[0].name(parts[0].one()), 0);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    global[k][parts[k].zero()] = 0;
    global[k][parts[k].one()] = top;
  }

  const std::size_t n = names.size();
  std::vector<ElementSet> rows(n, ElementSet(n));
  rows[0] = ElementSet::full(n);
  rows[top].insert(top);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (ElementId x = 0; x < parts[k].size(); ++x)
      parts[k].up_set(x).for_each([&](ElementId y) { rows[global[k][x]].insert(global[k][y]); });

  std::optional<std::vector<ElementId>> inv;
  if (parts[0].has_involution()) {
    std::vector<ElementId> m(n);
    for (std::size_t k = 0; k < parts.size(); ++k)
      for (ElementId x = 0; x < parts[k].size(); ++x) m[global[k][x]] = global[k][parts[k].prime(x)];
    inv = std::move(m);
  }
  return FinitePoset::from_relation(std::move(names), std::move(rows), std::move(inv));
}

std::vector<std::vector<ElementId>> horizontal_sum_layout(std::span<const FinitePoset> parts) {
  std::vector<std::vector<ElementId>> global(parts.size());
  std::size_t next = 1;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& part = parts[k];
    if (!part.is_bounded()) throw UnboundedPart("part " + std::to_string(k + 1) + " is not bounded");
    global[k].assign(part.size(), 0);
    for (ElementId x = 0; x < part.size(); ++x)
      if (x != part.zero() && x != part.one()) global[k][x] = next++;
  }
  if (parts.size() == 1) return {[&] {
      std::vector<ElementId> id(parts[0].size());
      for (ElementId x = 0; x < id.size(); ++x) id[x] = x;
      return id;
    }()};
  for (std::size_t k = 0; k < parts.size(); ++k) global[k][parts[k].one()] = next;
  return global;
}

bool same_labeled_structure(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size() || a.has_involution() != b.has_involution()) return false;
  std::vector<ElementId> to_b(a.size());
  for (ElementId x = 0; x < a.size(); ++x) {
    auto y = b.find(a.name(x));
    if (!y) return false;
    to_b[x] = *y;
  }
  for (ElementId x = 0; x < a.size(); ++x) {
    for (ElementId y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(to_b[x], to_b[y])) return false;
    if (a.has_involution() && to_b[a.prime(x)] != b.prime(to_b[x])) return false;
  }
  return true;
}

FinitePoset induced_subposet(const FinitePoset& l, const ElementSet& x, bool with_involution) {
  if (x.empty()) throw Error("induced subposet of an empty set");
  const bool keep = with_involution && l.has_involution();
  if (keep && !(l.prime_image(x) == x)) throw NotComplementClosed("subset is not closed under '");
  const auto members = x.members();
  const std::size_t n = members.size();
  std::vector<ElementId> local(l.size(), n);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = i;
  std::vector<std::string> names;
  std::vector<ElementSet> rows(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(l.name(members[i]));
    (l.up_set(members[i]) & x).for_each([&](ElementId y) { rows[i].insert(local[y]); });
  }
  std::optional<std::vector<ElementId>> inv;
  if (keep) {
    std::vector<ElementId> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = local[l.prime(members[i])];
    inv = std::move(m);
  }
  return FinitePoset::from_relation(std::move(names), std::move(rows), std::move(inv));
}

}  // namespace posetkit
