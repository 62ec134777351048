#include "posetkit/corpus.hpp"

#include "posetkit/errors.hpp"

namespace posetkit {

namespace generated {
extern const CorpusEntry kCorpus[];
extern const std::size_t kCorpusSize;
}  // namespace generated

std::span<const CorpusEntry> corpus_entries() { return {generated::kCorpus, generated::kCorpusSize}; }

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus_entries())
    if (e.name == name) return e;
  throw Error("no corpus entry named '" + std::string(name) + "'");
}

FinitePoset corpus_poset(std::string_view name) {
  const auto& e = corpus_entry(name);
  if (e.kind == CorpusKind::greechie) return greechie_to_omp(parse_greechie(e.text));
  return parse_poset(e.text);
}

GreechieDiagram corpus_greechie(std::string_view name) {
  const auto& e = corpus_entry(name);
  if (e.kind != CorpusKind::greechie) throw Error("corpus entry '" + std::string(name) + "' is not a diagram");
  return parse_greechie(e.text);
}

std::vector<std::pair<std::string, bool>> corpus_expectations(std::string_view name) {
  const auto& e = corpus_entry(name);
  if (e.kind == CorpusKind::greechie) return {};
  return parse_document(e.text).expect;
}

}  // namespace posetkit
