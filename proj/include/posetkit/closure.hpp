#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetkit/check_report.hpp"
#include "posetkit/parallel.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

inline constexpr std::size_t kDefaultMaxClosedSets = 100000;

struct CompletionOptions {
  std::size_t max_closed_sets = kDefaultMaxClosedSets;
  Exec exec = Exec::parallel;
};

/// LU(S), the Dedekind-MacNeille closure of S.
ElementSet closure(const FinitePoset& p, const ElementSet& s);

/// The Dedekind-MacNeille completion: every LU-closed subset of a poset,
/// indexed in lectic enumeration order, ordered by inclusion.
///
/// Closed sets are referenced by index everywhere downstream. The embedding
/// sends x to the index of L(x). When the base poset carries an antitone
/// involution the completion carries X* = L({x' | x in X}).
class DMLattice {
public:
  const FinitePoset& base() const { return base_; }
  std::size_t size() const { return sets_.size(); }
  const ElementSet& closed_set(std::size_t i) const { return sets_[i]; }
  const std::vector<ElementSet>& closed_sets() const { return sets_; }
  std::optional<std::size_t> index_of(const ElementSet& s) const;

  std::size_t embed(ElementId x) const { return embed_[x]; }
  const std::vector<std::size_t>& embedding() const { return embed_; }
  /// Element whose lower cone is closed set i, if any.
  std::optional<ElementId> embedded_element(std::size_t i) const;

  bool includes(std::size_t i, std::size_t j) const { return sets_[i].is_subset_of(sets_[j]); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t join(std::size_t i, std::size_t j) const;
  std::size_t meet(std::size_t i, std::size_t j) const;

  bool has_involution() const { return star_.has_value(); }
  /// X*; throws MissingInvolution.
  std::size_t star(std::size_t i) const;
  const std::optional<std::vector<std::size_t>>& involution() const { return star_; }

  /// Element name for embedded sets, otherwise "sup(m1,m2,..)" over the
  /// maximal members.
  std::string label(std::size_t i) const;

  /// The completion as a FinitePoset on closed-set indices (names from
  /// label(), involution from star when present).
  FinitePoset as_poset(Exec exec = Exec::parallel) const;

private:
  friend DMLattice complete(const FinitePoset& p, const CompletionOptions& options);

  FinitePoset base_;
  std::vector<ElementSet> sets_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<std::size_t> embed_;
  std::vector<std::optional<ElementId>> embedded_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::optional<std::vector<std::size_t>> star_;
};

/// Enumerates DM(P) with NextClosure over S -> LU(S). Throws
/// SizeLimitExceeded once more than options.max_closed_sets sets appear.
DMLattice complete(const FinitePoset& p, const CompletionOptions& options = {});

/// LU(X | Y).
ElementSet dm_join(const DMLattice& d, const ElementSet& x, const ElementSet& y);
/// X & Y.
ElementSet dm_meet(const DMLattice& d, const ElementSet& x, const ElementSet& y);

/// X -> L({x' | x in X}) over closed-set indices; throws MissingInvolution.
std::vector<std::size_t> induced_involution(const DMLattice& d);

/// Every closed set is both the join of the embedded elements below it and
/// the meet of the embedded elements above it. Witness ids: (closed index).
CheckReport check_join_meet_density(const FinitePoset& p, const DMLattice& d);

}  // namespace posetkit
