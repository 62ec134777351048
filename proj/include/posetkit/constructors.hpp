#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "posetkit/check_report.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

/// Disjoint union of bounded posets with all bottoms identified and all tops
/// identified. The shared bounds take the first part's names; clashing
/// names of inner elements get a "_k" suffix (k = 1-based part index).
/// Involutions must be present on all parts or on none.
FinitePoset horizontal_sum(std::span<const FinitePoset> parts);

/// Where horizontal_sum puts each part's elements: result[k][x] is the id of
/// element x of part k in the sum (bottoms map to 0, tops to the last id).
std::vector<std::vector<ElementId>> horizontal_sum_layout(std::span<const FinitePoset> parts);

/// True when both posets have the same labels, order and involution, up to
/// the order in which elements are listed.
bool same_labeled_structure(const FinitePoset& a, const FinitePoset& b);

// --- Greechie diagrams ------------------------------------------------------

struct GreechieDiagram {
  std::vector<std::string> atoms;
  std::vector<std::vector<std::size_t>> blocks;  // atom indices per block
};

struct GreechieValidation {
  CheckReport report;
  /// Every loop order that occurs (2 and 3 only in invalid diagrams).
  std::set<std::size_t> loop_orders;
  /// Smallest loop order >= 4, the lattice obstruction.
  std::optional<std::size_t> min_loop_order_from_4() const;
};

/// Checks the five diagram conditions (block membership, block sizes,
/// pairwise intersections of at most one atom, no loop of order 3) and
/// collects loop orders.
GreechieValidation validate_greechie(const GreechieDiagram& g);

/// Pastes the Boolean blocks into an orthomodular poset: elements are
/// classes of (block, atom subset) under (e,S) ~ (f,T) iff S = T or
/// e\S = f\T; [e,S] <= [f,T] iff some common-block representatives nest;
/// [e,S]' = [e, e\S]. Elements are listed 0, atoms, inner elements,
/// coatoms, 1; coatoms are named "a'" and inner elements "a+b+..".
/// Throws InvalidDiagram.
FinitePoset greechie_to_omp(const GreechieDiagram& g);

// --- subposets and generators -----------------------------------------------

/// Restriction of order (and involution, when `with_involution` and the
/// source has one) to X. Throws NotComplementClosed if X' != X, Error if X
/// is empty.
FinitePoset induced_subposet(const FinitePoset& l, const ElementSet& x, bool with_involution = true);

enum class GenConstraint { any, complemented, pseudo_om };

std::string to_string(GenConstraint c);
std::optional<GenConstraint> parse_gen_constraint(std::string_view text);

struct GenerateOptions {
  std::size_t exhaustive_cap = 8;
  std::size_t random_cap = 12;
};

/// Every bounded poset with antitone involution on exactly n elements
/// (n >= 2), one per isomorphism class, filtered by the constraint.
/// Throws SizeLimitExceeded above options.exhaustive_cap.
std::vector<FinitePoset> generate_exhaustive(std::size_t n, GenConstraint constraint,
                                             const GenerateOptions& options = {});

/// Seed-deterministic random bounded posets with antitone involution.
/// Candidates are drawn by giving each element a height (h(x') = -h(x)),
/// adding random upward edges with their mirror images, and closing
/// transitively. Under the complemented constraints half of the candidates
/// are instead random '-closed subsets (containing 0 and 1) of a host
/// ortholattice or orthomodular poset: 2^3, 2^4, or a loop of 4 or 5
/// three-atom Greechie blocks. Candidates failing the constraint are redrawn.
class RandomPosetGenerator {
public:
  explicit RandomPosetGenerator(std::uint64_t seed, GenerateOptions options = {});

  /// One poset with exactly n elements. Complemented constraints need even n.
  FinitePoset next(std::size_t n, GenConstraint constraint);

private:
  FinitePoset candidate(std::size_t n, bool fixed_points_allowed);
  std::optional<FinitePoset> host_subset(std::size_t n);

  std::mt19937_64 rng_;
  std::vector<FinitePoset> hosts_;
  GenerateOptions options_;
};

struct GenerateRequest {
  std::size_t n = 2;
  GenConstraint constraint = GenConstraint::any;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t count = 1;  // random mode only
};

/// Exhaustive mode: generate_exhaustive(n). Random mode: `count` posets
/// whose sizes are drawn from [3, n] (even sizes in [4, n] for the
/// complemented constraints).
std::vector<FinitePoset> generate_small(const GenerateRequest& request, const GenerateOptions& options = {});

/// Isomorphism-invariant encoding of order and involution: colour
/// refinement followed by a backtracking search for the smallest encoding.
std::string canonical_form(const FinitePoset& p);

}  // namespace posetkit
