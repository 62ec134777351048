#include "posetkit/poset.hpp"

#include <algorithm>

#include "posetkit/errors.hpp"

namespace posetkit {

FinitePoset FinitePoset::from_relation(std::vector<std::string> names, std::vector<ElementSet> up,
                                       std::optional<std::vector<ElementId>> involution) {
  const std::size_t n = names.size();
  if (up.size() != n) throw NotAnOrder("relation has " + std::to_string(up.size()) + " rows for " +
                                       std::to_string(n) + " elements");
  FinitePoset p;
  for (ElementId i = 0; i < n; ++i) {
    if (up[i].universe() != n) throw NotAnOrder("relation row has the wrong width");
    if (!p.index_.emplace(names[i], i).second) throw Error("duplicate element name '" + names[i] + "'");
  }
  for (ElementId x = 0; x < n; ++x) {
    if (!up[x].contains(x)) throw NotAnOrder("relation is not reflexive at '" + names[x] + "'");
  }
  for (ElementId x = 0; x < n; ++x) {
    up[x].for_each([&](ElementId y) {
      if (y != x && up[y].contains(x))
        throw CycleError("'" + names[x] + "' and '" + names[y] + "' lie below each other");
      if (!up[y].is_subset_of(up[x]))
        throw NotAnOrder("relation is not transitive through '" + names[y] + "'");
    });
  }
  p.down_.assign(n, ElementSet(n));
  for (ElementId x = 0; x < n; ++x) up[x].for_each([&](ElementId y) { p.down_[y].insert(x); });
  p.up_ = std::move(up);
  p.names_ = std::move(names);

  for (ElementId x = 0; x < n; ++x) {
    if (p.up_[x].is_full()) p.bottom_ = x;
    if (p.down_[x].is_full()) p.top_ = x;
  }

  if (involution) {
    if (involution->size() != n) throw NotAFunction("involution is not total");
    ElementSet image(n);
    for (ElementId x = 0; x < n; ++x) {
      const ElementId y = (*involution)[x];
      if (y >= n) throw NotAFunction("involution maps outside the carrier");
      if (image.contains(y)) throw NotAFunction("involution is not injective at '" + p.names_[y] + "'");
      image.insert(y);
    }
    p.involution_ = std::move(involution);
  }
  return p;
}

std::optional<ElementId> FinitePoset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FinitePoset::id(std::string_view name) const {
  auto found = find(name);
  if (!found) throw Error("unknown element '" + std::string(name) + "'");
  return *found;
}

ElementId FinitePoset::zero() const {
  if (!bottom_) throw MissingBounds();
  return *bottom_;
}

ElementId FinitePoset::one() const {
  if (!top_) throw MissingBounds();
  return *top_;
}

ElementId FinitePoset::prime(ElementId x) const {
  if (!involution_) throw MissingInvolution();
  return (*involution_)[x];
}

ElementSet FinitePoset::prime_image(const ElementSet& s) const {
  if (!involution_) throw MissingInvolution();
  ElementSet out(size());
  s.for_each([&](ElementId x) { out.insert((*involution_)[x]); });
  return out;
}

ElementSet FinitePoset::set_of_names(std::initializer_list<std::string_view> names) const {
  ElementSet s(size());
  for (auto nm : names) s.insert(id(nm));
  return s;
}

ElementSet FinitePoset::lower_cone(const ElementSet& m) const {
  ElementSet out = all();
  m.for_each([&](ElementId y) { out &= down_[y]; });
  return out;
}

ElementSet FinitePoset::upper_cone(const ElementSet& m) const {
  ElementSet out = all();
  m.for_each([&](ElementId y) { out &= up_[y]; });
  return out;
}

std::string FinitePoset::format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ElementId x) {
    if (!first) out += ',';
    out += names_[x];
    first = false;
  });
  out += '}';
  return out;
}

std::vector<std::pair<ElementId, ElementId>> FinitePoset::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  const std::size_t n = size();
  for (ElementId x = 0; x < n; ++x) {
    ElementSet strictly_above = up_[x];
    strictly_above.erase(x);
    strictly_above.for_each([&](ElementId y) {
      // y covers x iff the open interval (x, y) is empty
      ElementSet between = strictly_above & down_[y];
      between.erase(y);
      if (between.empty()) out.emplace_back(x, y);
    });
  }
  return out;
}

bool operator==(const FinitePoset& a, const FinitePoset& b) {
  return a.names_ == b.names_ && a.up_ == b.up_ && a.involution_ == b.involution_;
}

std::vector<ElementSet> transitive_closure(std::vector<ElementSet> rows) {
  const std::size_t n = rows.size();
  for (ElementId x = 0; x < n; ++x) rows[x].insert(x);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElementSet> next = rows;
    for (ElementId x = 0; x < n; ++x) {
      rows[x].for_each([&](ElementId k) { next[x] |= rows[k]; });
      if (!(next[x] == rows[x])) changed = true;
    }
    rows = std::move(next);
  }
  return rows;
}

FinitePoset build_poset(std::vector<std::string> names, const std::vector<NamePair>& relation,
                        RelationMode mode, const std::optional<std::vector<NamePair>>& involution) {
  const std::size_t n = names.size();
  std::unordered_map<std::string, ElementId> index;
  for (ElementId i = 0; i < n; ++i)
    if (!index.emplace(names[i], i).second) throw Error("duplicate element name '" + names[i] + "'");
  auto lookup = [&](const std::string& nm) {
    auto it = index.find(nm);
    if (it == index.end()) throw Error("relation references unknown element '" + nm + "'");
    return it->second;
  };

  std::vector<ElementSet> rows(n, ElementSet(n));
  for (ElementId x = 0; x < n; ++x) rows[x].insert(x);
  for (const auto& [lo, hi] : relation) rows[lookup(lo)].insert(lookup(hi));
  if (mode == RelationMode::covers) {
    rows = transitive_closure(std::move(rows));
  }

  std::optional<std::vector<ElementId>> map;
  if (involution) {
    std::vector<ElementId> m(n, n);
    for (const auto& [from, to] : *involution) {
      const ElementId a = lookup(from), b = lookup(to);
      if (m[a] != n && m[a] != b) throw NotAFunction("'" + from + "' is mapped twice");
      m[a] = b;
    }
    for (ElementId x = 0; x < n; ++x)
      if (m[x] == n) throw NotAFunction("involution does not map '" + names[x] + "'");
    map = std::move(m);
  }
  return FinitePoset::from_relation(std::move(names), std::move(rows), std::move(map));
}

CheckReport is_antitone_involution(const FinitePoset& p) {
  if (!p.has_involution()) throw MissingInvolution();
  const std::size_t n = p.size();
  for (ElementId x = 0; x < n; ++x) {
    if (p.prime(p.prime(x)) != x) {
      auto r = failed("antitone-involution", "x'' != x");
      r.witness_ids = {x};
      r.witness = {p.name(x)};
      return r;
    }
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (p.leq(x, y) && !p.leq(p.prime(y), p.prime(x))) {
        auto r = failed("antitone-involution", "x <= y but not y' <= x'");
        r.witness_ids = {x, y};
        r.witness = {p.name(x), p.name(y)};
        return r;
      }
  return passed("antitone-involution");
}

CheckReport is_complementation(const FinitePoset& p) {
  if (!p.has_involution()) throw MissingInvolution();
  if (!p.is_bounded()) throw MissingBounds();
  auto antitone = is_antitone_involution(p);
  if (!antitone) {
    antitone.property = "complementation";
    return antitone;
  }
  const auto zero = p.set_of({p.zero()});
  const auto one = p.set_of({p.one()});
  for (ElementId x = 0; x < p.size(); ++x) {
    const ElementId xp = p.prime(x);
    const bool lower_ok = p.lower_cone({x, xp}) == zero;
    const bool upper_ok = p.upper_cone({x, xp}) == one;
    if (!lower_ok || !upper_ok) {
      auto r = failed("complementation", lower_ok ? "U(x,x') != {1}" : "L(x,x') != {0}");
      r.witness_ids = {x};
      r.witness = {p.name(x)};
      return r;
    }
  }
  return passed("complementation");
}

bool is_orthogonal(const FinitePoset& p, const ElementSet& s) {
  if (!p.has_involution()) throw MissingInvolution();
  bool ok = true;
  s.for_each([&](ElementId a) {
    if (!ok) return;
    const ElementId ap = p.prime(a);
    s.for_each([&](ElementId b) {
      if (ok && a != b && !p.leq(b, ap)) ok = false;
    });
  });
  return ok;
}

ElementSet atoms(const FinitePoset& p) {
  const ElementId zero = p.zero();
  ElementSet out(p.size());
  for (const auto& [lo, hi] : p.covers())
    if (lo == zero) out.insert(hi);
  return out;
}

namespace {

std::optional<ElementId> minimum_of(const FinitePoset& p, const ElementSet& s) {
  std::optional<ElementId> result;
  s.for_each([&](ElementId m) {
    if (!result && s.is_subset_of(p.up_set(m))) result = m;
  });
  return result;
}

std::optional<ElementId> maximum_of(const FinitePoset& p, const ElementSet& s) {
  std::optional<ElementId> result;
  s.for_each([&](ElementId m) {
    if (!result && s.is_subset_of(p.down_set(m))) result = m;
  });
  return result;
}

}  // namespace

std::optional<ElementId> join_of(const FinitePoset& p, const ElementSet& s) {
  return minimum_of(p, p.upper_cone(s));
}

std::optional<ElementId> meet_of(const FinitePoset& p, const ElementSet& s) {
  return maximum_of(p, p.lower_cone(s));
}

CheckReport is_atomic(const FinitePoset& p) {
  const ElementId zero = p.zero();
  const ElementSet at = atoms(p);
  for (ElementId b = 0; b < p.size(); ++b) {
    if (b == zero) continue;
    if (!p.down_set(b).intersects(at)) {
      auto r = failed("atomic", "no atom below b");
      r.witness_ids = {b};
      r.witness = {p.name(b)};
      return r;
    }
  }
  return passed("atomic");
}

CheckReport is_atomistic(const FinitePoset& p) {
  const ElementSet at = atoms(p);
  for (ElementId x = 0; x < p.size(); ++x) {
    const auto j = join_of(p, p.down_set(x) & at);
    if (!j || *j != x) {
      auto r = failed("atomistic", "x is not the join of the atoms below it");
      r.witness_ids = {x};
      r.witness = {p.name(x)};
      return r;
    }
  }
  return passed("atomistic");
}

CheckReport is_lattice(const FinitePoset& p) {
  const std::size_t n = p.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x + 1; y < n; ++y) {
      const bool has_join = join_of(p, x, y).has_value();
      if (!has_join || !meet_of(p, x, y)) {
        auto r = failed("lattice", has_join ? "meet of x,y does not exist" : "join of x,y does not exist");
        r.witness_ids = {x, y};
        r.witness = {p.name(x), p.name(y)};
        return r;
      }
    }
  return passed("lattice");
}

CheckReport is_orthocomplete(const FinitePoset& p) {
  std::optional<ElementSet> bad;
  for_each_orthogonal_subset(p, p.all(), [&](const ElementSet& s) {
    if (!join_of(p, s)) {
      bad = s;
      return false;
    }
    return true;
  });
  if (!bad) return passed("orthocomplete");
  auto r = failed("orthocomplete", "orthogonal set without a join");
  r.witness_sets = {*bad};
  r.witness = {p.format(*bad)};
  return r;
}

std::size_t max_orthogonal_size(const FinitePoset& p) {
  std::size_t best = 0;
  for_each_orthogonal_subset(p, p.all(), [&](const ElementSet& s) {
    best = std::max(best, s.count());
    return true;
  });
  return best;
}

StructuralSummary structural_predicates(const FinitePoset& p) {
  if (!p.is_bounded()) throw MissingBounds();
  if (!p.has_involution()) throw MissingInvolution();
  StructuralSummary s;
  s.atomic = is_atomic(p);
  s.atomistic = is_atomistic(p);
  s.orthocomplete = is_orthocomplete(p);
  s.lattice = is_lattice(p);
  s.max_orthogonal_size = max_orthogonal_size(p);
  return s;
}

}  // namespace posetkit
