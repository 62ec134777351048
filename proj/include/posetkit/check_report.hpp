#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetkit/element_set.hpp"

namespace posetkit {

/// Outcome of one property check.
///
/// When `holds` is false the witness is populated: `witness_ids` and
/// `witness_sets` carry the instantiation in machine form (their meaning is
/// per-checker and documented there), `witness` the same rendered with
/// element names. Re-evaluating the defining condition at the witness
/// reproduces the failure.
struct CheckReport {
  std::string property;
  bool holds = true;
  std::vector<std::string> witness;
  std::vector<ElementId> witness_ids;
  std::vector<ElementSet> witness_sets;
  std::string details;

  explicit operator bool() const { return holds; }
};

inline CheckReport passed(std::string property, std::string details = {}) {
  CheckReport r;
  r.property = std::move(property);
  r.details = std::move(details);
  return r;
}

inline CheckReport failed(std::string property, std::string details = {}) {
  CheckReport r;
  r.property = std::move(property);
  r.holds = false;
  r.details = std::move(details);
  return r;
}

}  // namespace posetkit
