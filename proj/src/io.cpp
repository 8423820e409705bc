#include "ladder/io.hpp"

#include <fstream>
#include <sstream>

namespace ladder::io {

namespace {

std::string where(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

PosetDocument parse_document(const Json& j) {
  if (!j.is_object()) throw InputError("poset document must be a JSON object");
  if (!j.contains("elements") || !j["elements"].is_array()) throw InputError("missing array \"elements\"");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw InputError("\"elements\" entries must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("le")) {
    if (!j["le"].is_array()) throw InputError("\"le\" must be an array");
    for (const auto& pr : j["le"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
        throw InputError("\"le\" entries must be [lower, upper] string pairs");
      pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  PosetDocument doc{Poset::from_named_relation(std::move(names), pairs), std::nullopt, Json()};
  if (j.contains("norm")) {
    const auto& nj = j["norm"];
    if (!nj.is_object()) throw InputError("\"norm\" must be an object mapping element names to integers");
    std::vector<Ordinal> norm(doc.poset.size());
    std::vector<char> seen(doc.poset.size(), 0);
    for (auto it = nj.begin(); it != nj.end(); ++it) {
      const ElementId x = doc.poset.id(it.key());
      if (!it.value().is_number_unsigned() && !(it.value().is_number_integer() && it.value().get<long long>() >= 0))
        throw InputError("norm of '" + it.key() + "' must be a non-negative integer");
      norm[x.value()] = it.value().get<Ordinal>();
      seen[x.value()] = 1;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw InputError("norm is missing element '" + doc.poset.name(ElementId(i)) + "'");
    doc.norm = std::move(norm);
  }
  if (j.contains("meta")) doc.meta = j["meta"];
  return doc;
}

PosetDocument parse_document_text(std::string_view text, const std::string& source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": JSON syntax error at " + where(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  try {
    return parse_document(j);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

PosetDocument load_document(const std::string& path) { return parse_document_text(read_text(path), path); }

Json to_json(const Poset& p, const std::vector<Ordinal>* norm, const Json& meta) {
  Json j;
  j["elements"] = p.names();
  auto& le = j["le"] = Json::array();
  for (auto [a, b] : p.cover_pairs()) le.push_back(Json::array({p.name(a), p.name(b)}));
  if (norm) {
    Json nj = Json::object();
    for (std::size_t i = 0; i < p.size(); ++i) nj[p.name(ElementId(i))] = (*norm)[i];
    j["norm"] = std::move(nj);
  }
  if (!meta.is_null()) j["meta"] = meta;
  return j;
}

Json to_json(const NormedLattice& k, const Json& meta) { return to_json(k.poset(), &k.norms(), meta); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const PosetDocument& doc) {
  return to_json(doc.poset, doc.norm ? &*doc.norm : nullptr, doc.meta);
}

Lattice load_lattice(const std::string& path) {
  try {
    return Lattice(load_document(path).poset);
  } catch (const PreconditionError& e) {
    throw InputError(path + ": " + e.what());
  }
}

NormedLattice load_normed(const std::string& path) {
  auto doc = load_document(path);
  if (!doc.norm) throw InputError(path + ": document has no \"norm\"");
  try {
    return NormedLattice(Lattice(std::move(doc.poset)), std::move(*doc.norm));
  } catch (const PreconditionError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::string> names_of(const Poset& p, const ElementSet& s) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(p.name(ElementId(i))); });
  return out;
}

std::vector<std::string> names_of(const Poset& p, std::span<const ElementId> xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(p.name(x));
  return out;
}

std::string to_dot(const Poset& p, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph " << options.graph_name << " {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ElementId x(i);
    std::string label = p.name(x);
    if (options.norm) label += " [" + std::to_string((*options.norm)[i]) + "]";
    os << "  n" << i << " [label=" << quote(label);
    if (options.highlight && options.highlight->test(i)) os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (auto [a, b] : p.cover_pairs()) os << "  n" << a.value() << " -> n" << b.value() << ";\n";
  os << "}\n";
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ladder::io
