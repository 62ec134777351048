#pragma once

#include <array>
#include <optional>

#include "posetkit/check_report.hpp"
#include "posetkit/closure.hpp"
#include "posetkit/lattice.hpp"
#include "posetkit/parallel.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

// Property deciders. Each scans in canonical order (row-major over element
// ids, or over closed-set indices) and reports the first failing instance.
// Where two equivalent forms of a law exist both are evaluated and an
// InvariantViolation is raised if their verdicts differ.

/// L(U(x,y),z) = LU(L(x,z),L(y,z)), cross-checked against the dual
/// U(L(x,y),z) = UL(U(x,z),U(y,z)). Witness ids: (x, y, z) for the first form.
CheckReport is_distributive_poset(const FinitePoset& p, Exec exec = Exec::parallel);

/// Distributive poset whose involution is a complementation.
CheckReport is_boolean_poset(const FinitePoset& p, Exec exec = Exec::parallel);

/// Orthogonal pairs have joins, and ((x^y) v y') ^ y = x ^ y wherever x ^ y
/// = (x' v y')' exists. Witness ids: (x, y). Throws NotComplemented.
CheckReport is_orthomodular_poset(const FinitePoset& p, Exec exec = Exec::parallel);

/// x v y = ((x v y) ^ y') v y, cross-checked against: x <= y and x' ^ y = 0
/// imply x = y. Witness ids: (x, y). Throws NotALattice, NotComplemented.
CheckReport is_orthomodular_lattice(const LatticeView& l, Exec exec = Exec::parallel);
CheckReport is_orthomodular_lattice(const FinitePoset& l, Exec exec = Exec::parallel);
/// Same on a completion; witness ids are closed-set indices.
CheckReport is_orthomodular_lattice(const DMLattice& d, Exec exec = Exec::parallel);

/// L(U(L(x,y),y'),y) = L(x,y), cross-checked against
/// U(L(U(x,y),y'),y) = U(x,y). Witness ids: (x, y). Throws NotComplemented.
CheckReport is_pseudo_orthomodular(const FinitePoset& p, Exec exec = Exec::parallel);

/// Strong D-continuity over the reduced family (B, C) = (X, U(Y)) for
/// closed X <= Y. The meet condition is read as L(C | B') = {0}.
/// Witness sets: (B, C). Throws NotComplemented.
CheckReport is_strongly_d_continuous(const FinitePoset& p, const DMLattice& d,
                                     Exec exec = Exec::parallel);
CheckReport is_strongly_d_continuous(const FinitePoset& p, const CompletionOptions& options = {});

/// Reference form of the above quantifying over every pair of subsets
/// B <= C. Exponential; throws SizeLimitExceeded above 16 elements.
CheckReport is_strongly_d_continuous_naive(const FinitePoset& p);

/// For every nonempty closed set Z and every maximal orthogonal S within Z,
/// LU(S) = Z. Witness ids: (closed index); witness sets: (Z, S).
CheckReport finch_criterion(const FinitePoset& p, const DMLattice& d);
CheckReport finch_criterion(const FinitePoset& p, const CompletionOptions& options = {});

/// X is complement-closed and doubly dense in the complemented lattice `l`:
/// (i) a = join(L(a) & X) = meet(U(a) & X) for all a, (ii) X' = X,
/// (iii) 0, 1 in X. Witness ids: (a) for (i) and (ii).
CheckReport is_complement_closed_doubly_dense(const FinitePoset& l, const ElementSet& x);

/// First (x, y, z) with x <= z and x v (y ^ z) != (x v y) ^ z.
std::optional<std::array<ElementId, 3>> find_modular_violation(const LatticeView& l,
                                                               Exec exec = Exec::parallel);

/// Maximal orthogonal subsets of `within` with 0 removed, via Bron-Kerbosch.
template <class Visit>
void for_each_maximal_orthogonal_subset(const FinitePoset& p, const ElementSet& within, Visit&& visit);

// ---------------------------------------------------------------------------

namespace detail {
template <class Visit>
bool bron_kerbosch(const std::vector<ElementSet>& nbr, ElementSet& r, ElementSet p, ElementSet x,
                   Visit& visit) {
  if (p.empty() && x.empty()) return visit(static_cast<const ElementSet&>(r));
  // pivot: vertex of p | x with most neighbours in p
  std::optional<ElementId> pivot;
  std::size_t best = 0;
  (p | x).for_each([&](ElementId u) {
    const std::size_t c = (p & nbr[u]).count();
    if (!pivot || c > best) {
      pivot = u;
      best = c;
    }
  });
  const ElementSet candidates = p - nbr[*pivot];
  for (ElementId v : candidates.members()) {
    r.insert(v);
    if (!bron_kerbosch(nbr, r, p & nbr[v], x & nbr[v], visit)) return false;
    r.erase(v);
    p.erase(v);
    x.insert(v);
  }
  return true;
}
}  // namespace detail

template <class Visit>
void for_each_maximal_orthogonal_subset(const FinitePoset& p, const ElementSet& within, Visit&& visit) {
  ElementSet pool = within;
  if (p.bottom()) pool.erase(*p.bottom());
  std::vector<ElementSet> nbr(p.size(), p.empty_set());
  pool.for_each([&](ElementId v) {
    nbr[v] = p.down_set(p.prime(v)) & pool;
    nbr[v].erase(v);
  });
  ElementSet r = p.empty_set();
  detail::bron_kerbosch(nbr, r, pool, p.empty_set(), visit);
}

}  // namespace posetkit
