#pragma once

#include <cstddef>
#include <vector>

#include "posetkit/parallel.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

/// A finite poset known to be a lattice, with join and meet tables.
/// Construction throws NotALattice when some pair lacks a join or meet.
class LatticeView {
public:
  explicit LatticeView(FinitePoset p, Exec exec = Exec::parallel);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  ElementId join(ElementId a, ElementId b) const { return join_[a * size() + b]; }
  ElementId meet(ElementId a, ElementId b) const { return meet_[a * size() + b]; }
  ElementId bottom() const { return *poset_.bottom(); }
  ElementId top() const { return *poset_.top(); }
  bool leq(ElementId a, ElementId b) const { return poset_.leq(a, b); }
  ElementId prime(ElementId a) const { return poset_.prime(a); }
  const std::string& name(ElementId a) const { return poset_.name(a); }

private:
  FinitePoset poset_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
};

}  // namespace posetkit
