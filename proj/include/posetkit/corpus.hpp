#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetkit/constructors.hpp"
#include "posetkit/io.hpp"
#include "posetkit/poset.hpp"

namespace posetkit {

enum class CorpusKind { poset, greechie };

/// Bundled example posets and diagrams, compiled into the library.
struct CorpusEntry {
  std::string_view name;
  CorpusKind kind;
  std::string_view text;
};

std::span<const CorpusEntry> corpus_entries();
/// Throws Error for unknown names.
const CorpusEntry& corpus_entry(std::string_view name);
/// Poset documents are parsed; Greechie diagrams are pasted.
FinitePoset corpus_poset(std::string_view name);
GreechieDiagram corpus_greechie(std::string_view name);
/// `expect:` lines of a poset entry (empty for diagrams).
std::vector<std::pair<std::string, bool>> corpus_expectations(std::string_view name);

}  // namespace posetkit
