#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ladder/normed.hpp"
#include "ladder/poset.hpp"

namespace ladder::io {

using Json = nlohmann::ordered_json;

/// Contents of a poset file:
///
///     { "elements": ["e0", ...], "le": [["e0", "e1"], ...],
///       "norm": { "e0": 0, ... }, "meta": { ... } }
///
/// "le" is any generating set of <= pairs. "norm" and "meta" are optional;
/// "meta" is carried through untouched.
struct PosetDocument {
  Poset poset;
  std::optional<std::vector<Ordinal>> norm;
  Json meta;
};

PosetDocument parse_document(const Json& j);
/// Parses text; syntax errors are reported with line and column.
PosetDocument parse_document_text(std::string_view text, const std::string& source = "<input>");
PosetDocument load_document(const std::string& path);

/// Canonical form: elements in id order, "le" = the cover relation sorted by
/// (lower, upper), norm keyed in element order.
Json to_json(const Poset& p, const std::vector<Ordinal>* norm = nullptr, const Json& meta = {});
Json to_json(const NormedLattice& k, const Json& meta = {});
Json to_json(const PosetDocument& doc);

/// Two-space indented text with a trailing newline; the on-disk form.
std::string dump(const Json& j);

Lattice load_lattice(const std::string& path);
NormedLattice load_normed(const std::string& path);

std::vector<std::string> names_of(const Poset& p, const ElementSet& s);
std::vector<std::string> names_of(const Poset& p, std::span<const ElementId> xs);

struct DotOptions {
  const std::vector<Ordinal>* norm = nullptr;
  const ElementSet* highlight = nullptr;
  std::string graph_name = "poset";
};

/// Hasse diagram, one node per element, edges lower -> upper, drawn bottom-up.
std::string to_dot(const Poset& p, const DotOptions& options = {});

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace ladder::io
