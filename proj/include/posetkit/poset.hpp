#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetkit/check_report.hpp"
#include "posetkit/element_set.hpp"

namespace posetkit {

/// A finite poset (P, <=) with optional bounds and an optional unary map.
///
/// The order is stored densely: one packed row per element for its up-set
/// and one for its down-set, so cone computations are row intersections.
/// Instances are immutable once built and safe to share across threads.
class FinitePoset {
public:
  FinitePoset() = default;

  /// Builds from a complete reflexive order. `up[x]` must hold every y with
  /// x <= y. Throws NotAnOrder (not reflexive/transitive), CycleError (not
  /// antisymmetric) or NotAFunction (involution not a bijection).
  static FinitePoset from_relation(std::vector<std::string> names, std::vector<ElementSet> up,
                                   std::optional<std::vector<ElementId>> involution = std::nullopt);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ElementId x) const { return names_[x]; }
  std::optional<ElementId> find(std::string_view name) const;
  /// Id of a named element; throws Error when absent.
  ElementId id(std::string_view name) const;

  bool leq(ElementId x, ElementId y) const { return up_[x].contains(y); }
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const { return leq(x, y) || leq(y, x); }
  const ElementSet& up_set(ElementId x) const { return up_[x]; }
  const ElementSet& down_set(ElementId x) const { return down_[x]; }

  std::optional<ElementId> bottom() const { return bottom_; }
  std::optional<ElementId> top() const { return top_; }
  bool is_bounded() const { return bottom_ && top_; }
  /// Bottom id; throws MissingBounds.
  ElementId zero() const;
  /// Top id; throws MissingBounds.
  ElementId one() const;

  bool has_involution() const { return involution_.has_value(); }
  const std::optional<std::vector<ElementId>>& involution() const { return involution_; }
  /// x'; throws MissingInvolution.
  ElementId prime(ElementId x) const;
  /// Elementwise image {x' | x in s}.
  ElementSet prime_image(const ElementSet& s) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }
  ElementSet set_of(std::initializer_list<ElementId> ids) const { return ElementSet::of(size(), ids); }
  ElementSet set_of_names(std::initializer_list<std::string_view> names) const;

  /// L(M) = {x | x <= y for all y in M}; L(empty) is the whole carrier.
  ElementSet lower_cone(const ElementSet& m) const;
  /// U(M) = {x | y <= x for all y in M}; U(empty) is the whole carrier.
  ElementSet upper_cone(const ElementSet& m) const;
  ElementSet lower_cone(std::initializer_list<ElementId> ids) const { return lower_cone(set_of(ids)); }
  ElementSet upper_cone(std::initializer_list<ElementId> ids) const { return upper_cone(set_of(ids)); }

  /// Renders a subset as "{a,b,c}" in id order.
  std::string format(const ElementSet& s) const;

  /// Covering pairs (x, y), x < y with nothing strictly between, in
  /// lexicographic id order.
  std::vector<std::pair<ElementId, ElementId>> covers() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&);

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::optional<ElementId> bottom_;
  std::optional<ElementId> top_;
  std::optional<std::vector<ElementId>> involution_;
};

// Free-function forms of the cone operators.
inline ElementSet lower_cone(const FinitePoset& p, const ElementSet& m) { return p.lower_cone(m); }
inline ElementSet upper_cone(const FinitePoset& p, const ElementSet& m) { return p.upper_cone(m); }

enum class RelationMode { covers, full };

using NamePair = std::pair<std::string, std::string>;

/// Builds a poset from labels and ordered pairs (lower, upper).
///
/// In covers mode the reflexive-transitive closure is taken (by repeated
/// boolean squaring); in full mode the relation must already be transitive
/// (reflexive pairs are implied). The involution list maps x to x' and must
/// be a total bijection. Bounds are detected, never added.
FinitePoset build_poset(std::vector<std::string> names, const std::vector<NamePair>& relation,
                        RelationMode mode = RelationMode::covers,
                        const std::optional<std::vector<NamePair>>& involution = std::nullopt);

/// Reflexive-transitive closure of rows by repeated squaring R <- R | R.R.
std::vector<ElementSet> transitive_closure(std::vector<ElementSet> rows);

/// Antitone involution: x <= y implies y' <= x', and x'' = x.
/// Witness ids: (x, y) for antitonicity, (x) for involutivity.
CheckReport is_antitone_involution(const FinitePoset& p);

/// Complementation: antitone involution with L(x,x') = {0} and U(x,x') = {1}.
/// Witness ids: (x).
CheckReport is_complementation(const FinitePoset& p);

/// True iff s <= t' for all distinct s, t in `s`.
bool is_orthogonal(const FinitePoset& p, const ElementSet& s);

ElementSet atoms(const FinitePoset& p);

std::optional<ElementId> join_of(const FinitePoset& p, const ElementSet& s);
std::optional<ElementId> meet_of(const FinitePoset& p, const ElementSet& s);
inline std::optional<ElementId> join_of(const FinitePoset& p, ElementId x, ElementId y) {
  return join_of(p, p.set_of({x, y}));
}
inline std::optional<ElementId> meet_of(const FinitePoset& p, ElementId x, ElementId y) {
  return meet_of(p, p.set_of({x, y}));
}

/// Every element above 0 has an atom below it. Witness ids: (b).
CheckReport is_atomic(const FinitePoset& p);
/// Every element is the join of the atoms below it. Witness ids: (x).
CheckReport is_atomistic(const FinitePoset& p);
/// Every pair has a join and a meet. Witness ids: (x, y).
CheckReport is_lattice(const FinitePoset& p);
/// Every orthogonal subset has a join. Witness sets: (S).
CheckReport is_orthocomplete(const FinitePoset& p);
/// Largest orthogonal subset of P \ {0}.
std::size_t max_orthogonal_size(const FinitePoset& p);

/// All orthogonal subsets of `within` (0 excluded), smallest-first per
/// branch. Calls visit(set); stops early when visit returns false.
template <class Visit>
void for_each_orthogonal_subset(const FinitePoset& p, const ElementSet& within, Visit&& visit);

struct StructuralSummary {
  CheckReport atomic;
  CheckReport atomistic;
  CheckReport orthocomplete;
  CheckReport lattice;
  std::size_t max_orthogonal_size = 0;
};

/// Bundle of the structural flags. Requires bounds; orthogonality-based
/// entries require an involution (MissingInvolution otherwise).
StructuralSummary structural_predicates(const FinitePoset& p);

// ---------------------------------------------------------------------------

namespace detail {
template <class Visit>
bool orthogonal_extend(const FinitePoset& p, const std::vector<ElementId>& pool, std::size_t from,
                       ElementSet& current, Visit& visit) {
  for (std::size_t i = from; i < pool.size(); ++i) {
    const ElementId x = pool[i];
    const ElementId xp = p.prime(x);
    bool ok = true;
    current.for_each([&](ElementId y) {
      if (ok && !p.leq(y, xp)) ok = false;
    });
    if (!ok) continue;
    current.insert(x);
    if (!visit(static_cast<const ElementSet&>(current))) return false;
    if (!orthogonal_extend(p, pool, i + 1, current, visit)) return false;
    current.erase(x);
  }
  return true;
}
}  // namespace detail

template <class Visit>
void for_each_orthogonal_subset(const FinitePoset& p, const ElementSet& within, Visit&& visit) {
  std::vector<ElementId> pool;
  const auto zero = p.bottom();
  within.for_each([&](ElementId x) {
    if (!zero || x != *zero) pool.push_back(x);
  });
  ElementSet current = p.empty_set();
  detail::orthogonal_extend(p, pool, 0, current, visit);
}

}  // namespace posetkit
