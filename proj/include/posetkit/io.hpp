#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetkit/check_report.hpp"
#include "posetkit/closure.hpp"
#include "posetkit/constructors.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

inline constexpr int kDocumentVersion = 1;
inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "posetkit 1.0.0";

/// Parsed poset document.
///
/// Plain text, one section keyword per line, entries separated by blanks;
/// a keyword may repeat and its entries accumulate:
///   elements: 0 a b 1
///   covers: 0<a 0<b a<1 b<1        (or `order:` for a full relation)
///   involution: a:b 0:1            (sets both directions)
///   meta: source=fig1a
///   expect: boolean=pass lattice=fail
///   # comment
/// A JSON object with the same keys is accepted too (first non-blank
/// character '{').
struct PosetDocument {
  int version = kDocumentVersion;
  std::vector<std::string> elements;
  std::vector<NamePair> relation;
  RelationMode mode = RelationMode::covers;
  std::optional<std::vector<NamePair>> involution;
  std::map<std::string, std::string> meta;
  std::vector<std::pair<std::string, bool>> expect;
};

/// Throws ParseError (line and column are 1-based).
PosetDocument parse_document(std::string_view text);
FinitePoset to_poset(const PosetDocument& doc);
FinitePoset parse_poset(std::string_view text);

/// Canonical plain-text form: elements in id order, covers sorted by
/// (lower name, upper name), each involution pair once.
std::string serialize_poset(const FinitePoset& p, const std::map<std::string, std::string>& meta = {});

/// `atoms: s t u`, then one `block: s t` line per block.
GreechieDiagram parse_greechie(std::string_view text);
std::string serialize_greechie(const GreechieDiagram& g);

/// Hasse diagram in DOT: one node per element (in id order), cover edges
/// only, rankdir=BT.
std::string export_dot(const FinitePoset& p, std::string_view graph_name = "P");
std::string export_dot(const DMLattice& d, std::string_view graph_name = "DM");

std::string sha256_hex(std::string_view data);

struct RunReport {
  std::string command;
  std::string input_name;
  std::string input_digest;
  std::vector<CheckReport> checks;
  /// When present these decide the outcome instead of `checks`
  /// (expectation matches and theorem cross-checks).
  std::vector<CheckReport> verdicts;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::map<std::string, std::string> summary;
  bool all_passed() const;
};

/// Deterministic JSON rendering; timings are omitted when
/// `include_timings` is false.
std::string render_report(const RunReport& report, bool include_timings = true);
std::string render_check(const CheckReport& c);

}  // namespace posetkit
