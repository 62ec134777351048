#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetkit/check_report.hpp"
#include "posetkit/closure.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

/// Shared state for running several named checks on one poset: the
/// completion is built once, on first use, and may be requested from
/// several threads.
class PropertyContext {
public:
  explicit PropertyContext(FinitePoset p, CompletionOptions options = {});

  const FinitePoset& poset() const { return poset_; }
  const CompletionOptions& options() const { return options_; }
  const DMLattice& completion() const;

private:
  FinitePoset poset_;
  CompletionOptions options_;
  mutable std::once_flag once_;
  mutable std::unique_ptr<DMLattice> completion_;
};

/// Names accepted by run_property, in report order.
const std::vector<std::string>& property_names();
bool is_property_name(std::string_view name);

/// Runs one named check. Precondition errors (missing involution, not a
/// lattice, ...) become a failed report whose details start with
/// "precondition:". SizeLimitExceeded and unknown names propagate.
CheckReport run_property(std::string_view name, const PropertyContext& ctx);

/// One report per expectation: holds iff the observed verdict matches.
/// Expectations on properties absent from `results` fail.
std::vector<CheckReport> expectation_verdicts(const std::vector<CheckReport>& results,
                                              const std::vector<std::pair<std::string, bool>>& expect);

/// For complemented posets: strongly-d-continuous and pseudo-orthomodular
/// together iff the completion is orthomodular, and the Finch criterion
/// iff the completion is orthomodular. Empty when not complemented.
std::vector<CheckReport> theorem_cross_checks(const std::vector<CheckReport>& results);

}  // namespace posetkit
