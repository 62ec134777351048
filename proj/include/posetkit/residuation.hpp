#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posetkit/check_report.hpp"
#include "posetkit/closure.hpp"
#include "posetkit/lattice.hpp"
#include "posetkit/parallel.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

enum class OperatorKind { boolean, relpseudo, pseudo_om, custom };

std::string to_string(OperatorKind kind);
/// Accepts "boolean", "relpseudo", "pseudo_om" / "pseudo-om", "custom".
std::optional<OperatorKind> parse_operator_kind(std::string_view text);

/// Set-valued multiplication M and residuation R on P, materialized as n x n
/// tables, plus the unary map used by the R(x,0) = L(x') axiom (the
/// involution, or x*0 for the relatively pseudocomplemented kind).
struct OperatorPair {
  OperatorKind kind = OperatorKind::custom;
  std::size_t n = 0;
  std::vector<ElementSet> multiply;
  std::vector<ElementSet> residuum;
  std::vector<ElementId> negation;

  const ElementSet& m(ElementId x, ElementId y) const { return multiply[x * n + y]; }
  const ElementSet& r(ElementId x, ElementId y) const { return residuum[x * n + y]; }
};

/// Greatest c with L(a,c) subset of L(b), if it exists.
std::optional<ElementId> relative_pseudocomplement(const FinitePoset& p, ElementId a, ElementId b);

/// Builds one of the built-in operator pairs:
///   boolean:   M(x,y) = L(x,y),        R(x,y) = L(U(x',y))
///   relpseudo: M(x,y) = L(x,y),        R(x,y) = L(x*y),  x' := x*0
///   pseudo_om: M(x,y) = L(U(x,y'),y),  R(x,y) = LU(L(x,y),x')
/// Throws MissingInvolution, MissingBounds, NoRelativePseudocomplement.
OperatorPair operator_pair(const FinitePoset& p, OperatorKind kind, Exec exec = Exec::parallel);

using SetOperator = std::function<ElementSet(ElementId, ElementId)>;

/// Arbitrary M and R; the negation is P's involution.
OperatorPair custom_operator_pair(const FinitePoset& p, const SetOperator& m, const SetOperator& r);

/// Checks M(x,1) = M(1,x) = L(x), M(x,y) <= L(z) iff L(x) <= R(y,z),
/// R(x,0) = L(x'), and R(x,y) = P iff x <= y. The failing axiom is named in
/// `details`; witness ids are the offending (x) / (x, y) / (x, y, z).
CheckReport verify_operator_left_residuation(const FinitePoset& p, const OperatorPair& pair,
                                             Exec exec = Exec::parallel);

/// X (*) Y = intersection over a in X, b in U(Y) of L(a*b), as a table over
/// closed-set indices (row-major). Asserts the result is the relative
/// pseudocomplement of the completion and throws InvariantViolation if not.
std::vector<std::size_t> star_on_dm(const DMLattice& d, Exec exec = Exec::parallel);

/// Binary operations (.) and -> on a lattice carrier, as row-major tables.
struct ResiduatedOps {
  OperatorKind kind = OperatorKind::custom;
  std::size_t n = 0;
  std::vector<ElementId> odot;
  std::vector<ElementId> arrow;

  ElementId mul(ElementId x, ElementId y) const { return odot[x * n + y]; }
  ElementId imp(ElementId x, ElementId y) const { return arrow[x * n + y]; }
};

/// Lattice-term versions of the operator pairs:
///   boolean:   x.y = x^y,          x->y = x' v y
///   relpseudo: x.y = x^y,          x->y = relative pseudocomplement
///   pseudo_om: x.y = (x v y')^y,   x->y = (x^y) v x'
ResiduatedOps lattice_transform(const LatticeView& l, OperatorKind kind);

/// The same on a completion, over closed-set indices; relpseudo uses
/// star_on_dm. Throws MissingInvolution.
ResiduatedOps bdm_transform(const DMLattice& d, OperatorKind kind, Exec exec = Exec::parallel);

struct ResiduationVerdict {
  CheckReport left_residuated;  // x.1 = x = 1.x and x.y <= z iff x <= y->z
  CheckReport commutative;      // x.y = y.x
  CheckReport associative;      // reported only, never required
};

ResiduationVerdict verify_left_residuated_lattice(const LatticeView& l, const ResiduatedOps& ops,
                                                  Exec exec = Exec::parallel);

}  // namespace posetkit
