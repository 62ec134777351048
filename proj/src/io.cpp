#include "posetkit/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "posetkit/errors.hpp"

namespace posetkit {

namespace {

using nlohmann::json;

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t from) {
  std::vector<Token> out;
  std::size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool parse_verdict(std::string_view v, bool& out) {
  if (v == "pass" || v == "true") {
    out = true;
    return true;
  }
  if (v == "fail" || v == "false") {
    out = false;
    return true;
  }
  return false;
}

std::size_t first_non_blank(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return i;
}

PosetDocument parse_json_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, "malformed JSON document");
  }
  auto fail = [](const std::string& msg) -> ParseError { return ParseError(1, 1, msg); };
  if (!j.is_object()) throw fail("document must be a JSON object");
  PosetDocument doc;
  try {
    if (j.contains("version")) doc.version = j.at("version").get<int>();
    std::set<std::string> seen;
    for (const auto& e : j.at("elements")) {
      auto name = e.get<std::string>();
      if (!seen.insert(name).second) throw fail("duplicate element name '" + name + "'");
      doc.elements.push_back(name);
    }
    auto relation_key = j.contains("order") ? "order" : "covers";
    if (j.contains("order")) doc.mode = RelationMode::full;
    if (j.contains(relation_key))
      for (const auto& pr : j.at(relation_key)) {
        auto lo = pr.at(0).get<std::string>(), hi = pr.at(1).get<std::string>();
        if (!seen.count(lo) || !seen.count(hi)) throw fail("relation mentions an unknown element");
        doc.relation.emplace_back(lo, hi);
      }
    if (j.contains("involution")) {
      std::vector<NamePair> inv;
      for (const auto& pr : j.at("involution")) {
        auto a = pr.at(0).get<std::string>(), b = pr.at(1).get<std::string>();
        if (!seen.count(a) || !seen.count(b)) throw fail("involution mentions an unknown element");
        inv.emplace_back(a, b);
        if (a != b) inv.emplace_back(b, a);
      }
      doc.involution = std::move(inv);
    }
    if (j.contains("meta"))
      for (const auto& [k, v] : j.at("meta").items()) doc.meta[k] = v.get<std::string>();
    if (j.contains("expect"))
      for (const auto& [k, v] : j.at("expect").items()) doc.expect.emplace_back(k, v.get<bool>());
  } catch (const json::exception& e) {
    throw fail(std::string("bad document structure: ") + e.what());
  }
  return doc;
}

}  // namespace

PosetDocument parse_document(std::string_view text) {
  const std::size_t start = first_non_blank(text);
  if (start < text.size() && text[start] == '{') return parse_json_document(text);

  PosetDocument doc;
  std::set<std::string> seen;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> pending_names;
  bool has_covers = false, has_order = false;
  std::vector<NamePair> inv;
  bool has_inv = false;

  struct Ref {
    std::string name;
    std::size_t line, column;
  };
  std::vector<Ref> refs;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = strip_comment(line);
    const std::size_t b = first_non_blank(line);
    if (b == line.size()) {
      if (nl == text.size()) break;
      continue;
    }
    const auto colon = line.find(':', b);
    if (colon == std::string_view::npos) throw ParseError(line_no, b + 1, "expected 'section:'");
    const std::string key(line.substr(b, colon - b));
    const auto tokens = split_tokens(line, colon + 1);

    if (key == "format" || key == "version") {
      if (tokens.size() != 1) throw ParseError(line_no, colon + 2, "expected one version number");
      try {
        doc.version = std::stoi(tokens[0].text);
      } catch (...) {
        throw ParseError(line_no, tokens[0].column, "bad version number");
      }
      if (doc.version != kDocumentVersion) throw ParseError(line_no, tokens[0].column, "unsupported format version");
    } else if (key == "elements") {
      for (const auto& t : tokens) {
        if (!seen.insert(t.text).second) throw ParseError(line_no, t.column, "duplicate element name '" + t.text + "'");
        doc.elements.push_back(t.text);
      }
    } else if (key == "covers" || key == "order") {
      (key == "covers" ? has_covers : has_order) = true;
      for (const auto& t : tokens) {
        const auto lt = t.text.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == t.text.size() ||
            t.text.find('<', lt + 1) != std::string::npos)
          throw ParseError(line_no, t.column, "expected 'x<y'");
        auto lo = t.text.substr(0, lt), hi = t.text.substr(lt + 1);
        refs.push_back({lo, line_no, t.column});
        refs.push_back({hi, line_no, t.column + lt + 1});
        doc.relation.emplace_back(lo, hi);
      }
    } else if (key == "involution") {
      has_inv = true;
      for (const auto& t : tokens) {
        // names may contain ':' only as the separator; split at the last one
        const auto sep = t.text.rfind(':');
        if (sep == std::string::npos || sep == 0 || sep + 1 == t.text.size())
          throw ParseError(line_no, t.column, "expected 'x:y'");
        auto a = t.text.substr(0, sep), c = t.text.substr(sep + 1);
        refs.push_back({a, line_no, t.column});
        refs.push_back({c, line_no, t.column + sep + 1});
        inv.emplace_back(a, c);
        if (a != c) inv.emplace_back(c, a);
      }
    } else if (key == "meta") {
      // a token without '=' continues the previous value: "source=completion of fig2"
      std::string* last = nullptr;
      for (const auto& t : tokens) {
        const auto eq = t.text.find('=');
        if (eq == std::string::npos && last) {
          *last += " " + t.text;
          continue;
        }
        if (eq == std::string::npos || eq == 0) throw ParseError(line_no, t.column, "expected 'key=value'");
        last = &doc.meta[t.text.substr(0, eq)];
        *last = t.text.substr(eq + 1);
      }
    } else if (key == "expect") {
      for (const auto& t : tokens) {
        const auto eq = t.text.find('=');
        bool v = false;
        if (eq == std::string::npos || eq == 0 || !parse_verdict(std::string_view(t.text).substr(eq + 1), v))
          throw ParseError(line_no, t.column, "expected 'property=pass|fail'");
        doc.expect.emplace_back(t.text.substr(0, eq), v);
      }
    } else {
      throw ParseError(line_no, b + 1, "unknown section '" + key + "'");
    }
    if (nl == text.size()) break;
  }

  if (doc.elements.empty()) throw ParseError(line_no ? line_no : 1, 1, "no elements section");
  if (has_covers && has_order) throw ParseError(1, 1, "use either covers or order, not both");
  if (has_order) doc.mode = RelationMode::full;
  for (const auto& r : refs)
    if (!seen.count(r.name)) throw ParseError(r.line, r.column, "unknown element '" + r.name + "'");
  if (has_inv) doc.involution = std::move(inv);
  return doc;
}

FinitePoset to_poset(const PosetDocument& doc) {
  std::optional<std::vector<NamePair>> inv;
  if (doc.involution) {
    // a:b lines set both directions; duplicates must agree
    std::map<std::string, std::string> m;
    for (const auto& [a, b] : *doc.involution) {
      auto [it, fresh] = m.emplace(a, b);
      if (!fresh && it->second != b) throw NotAFunction("involution maps '" + a + "' to two elements");
    }
    inv.emplace(m.begin(), m.end());
  }
  return build_poset(doc.elements, doc.relation, doc.mode, inv);
}

FinitePoset parse_poset(std::string_view text) { return to_poset(parse_document(text)); }

std::string serialize_poset(const FinitePoset& p, const std::map<std::string, std::string>& meta) {
  std::ostringstream out;
  out << "format: " << kDocumentVersion << "\n";
  for (const auto& [k, v] : meta) out << "meta: " << k << "=" << v << "\n";
  out << "elements:";
  for (const auto& nm : p.names()) out << ' ' << nm;
  out << "\n";
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [x, y] : p.covers()) covers.emplace_back(p.name(x), p.name(y));
  std::sort(covers.begin(), covers.end());
  out << "covers:";
  for (const auto& [a, b] : covers) out << ' ' << a << '<' << b;
  out << "\n";
  if (p.has_involution()) {
    out << "involution:";
    for (ElementId x = 0; x < p.size(); ++x)
      if (x <= p.prime(x)) out << ' ' << p.name(x) << ':' << p.name(p.prime(x));
    out << "\n";
  }
  return out.str();
}

GreechieDiagram parse_greechie(std::string_view text) {
  GreechieDiagram g;
  std::map<std::string, std::size_t> index;
  bool atoms_seen = false;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = strip_comment(line);
    const std::size_t b = first_non_blank(line);
    if (b < line.size()) {
      const auto colon = line.find(':', b);
      if (colon == std::string_view::npos) throw ParseError(line_no, b + 1, "expected 'section:'");
      const std::string key(line.substr(b, colon - b));
      const auto tokens = split_tokens(line, colon + 1);
      if (key == "atoms") {
        atoms_seen = true;
        for (const auto& t : tokens) {
          if (index.count(t.text)) throw ParseError(line_no, t.column, "duplicate atom '" + t.text + "'");
          index[t.text] = g.atoms.size();
          g.atoms.push_back(t.text);
        }
      } else if (key == "block") {
        if (!atoms_seen) throw ParseError(line_no, b + 1, "block before atoms");
        if (tokens.empty()) throw ParseError(line_no, colon + 1, "empty block");
        std::vector<std::size_t> blk;
        for (const auto& t : tokens) {
          auto it = index.find(t.text);
          if (it == index.end()) throw ParseError(line_no, t.column, "unknown atom '" + t.text + "'");
          blk.push_back(it->second);
        }
        g.blocks.push_back(std::move(blk));
      } else if (key == "meta" || key == "expect" || key == "format") {
        // informational
      } else {
        throw ParseError(line_no, b + 1, "unknown section '" + key + "'");
      }
    }
    if (nl == text.size()) break;
  }
  if (!atoms_seen) throw ParseError(1, 1, "no atoms section");
  return g;
}

std::string serialize_greechie(const GreechieDiagram& g) {
  std::ostringstream out;
  out << "atoms:";
  for (const auto& a : g.atoms) out << ' ' << a;
  out << "\n";
  for (const auto& blk : g.blocks) {
    out << "block:";
    for (auto a : blk) out << ' ' << g.atoms[a];
    out << "\n";
  }
  return out.str();
}

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const FinitePoset& p, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(graph_name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (ElementId x = 0; x < p.size(); ++x) out << "  n" << x << " [label=" << dot_quote(p.name(x)) << "];\n";
  for (auto [x, y] : p.covers()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const DMLattice& d, std::string_view graph_name) {
  return export_dot(d.as_poset(Exec::serial), graph_name);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

bool RunReport::all_passed() const {
  if (!verdicts.empty())
    return std::all_of(verdicts.begin(), verdicts.end(), [](const CheckReport& c) { return c.holds; });
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.holds; });
}

namespace {

json check_json(const CheckReport& c) {
  json j;
  j["property"] = c.property;
  j["holds"] = c.holds;
  if (!c.details.empty()) j["details"] = c.details;
  if (!c.holds) {
    j["witness"] = c.witness;
    j["witness_ids"] = c.witness_ids;
    json sets = json::array();
    for (const auto& s : c.witness_sets) sets.push_back(s.members());
    j["witness_sets"] = sets;
  }
  return j;
}

}  // namespace

std::string render_check(const CheckReport& c) { return check_json(c).dump(); }

std::string render_report(const RunReport& report, bool include_timings) {
  // ordered_json keeps the insertion order stable
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = report.command;
  j["input"] = {{"name", report.input_name}, {"sha256", report.input_digest}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) checks.push_back(nlohmann::ordered_json::parse(check_json(c).dump()));
  j["checks"] = checks;
  if (!report.verdicts.empty()) {
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
    for (const auto& c : report.verdicts) verdicts.push_back(nlohmann::ordered_json::parse(check_json(c).dump()));
    j["verdicts"] = verdicts;
  }
  if (!report.summary.empty()) j["summary"] = report.summary;
  j["all_passed"] = report.all_passed();
  if (include_timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

}  // namespace posetkit
