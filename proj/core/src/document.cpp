#include "odla/document.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>
#include <tuple>

namespace odla {

namespace {

using nlohmann::json;

std::size_t index_field(const json& entry, std::size_t pos, std::size_t dim, const std::string& where) {
  const json& v = entry.at(pos);
  if (!v.is_number_integer()) throw ParseError(where + ": index must be an integer");
  const auto idx = v.get<long long>();
  if (idx < 1 || idx > static_cast<long long>(dim)) {
    throw ParseError(where + ": index " + std::to_string(idx) + " outside 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(idx - 1);
}

Scalar value_field(const json& entry, std::size_t pos, const std::string& where) {
  const json& v = entry.at(pos);
  if (!v.is_string()) throw ParseError(where + ": value must be a rational string \"p\" or \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

const json& array_field(const json& doc, const char* key) {
  static const json empty = json::array();
  auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  return *it;
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  auto dim_it = doc.find("dim");
  if (dim_it == doc.end() || !dim_it->is_number_integer() || dim_it->get<long long>() < 1) {
    throw ParseError("'dim' must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_it->get<long long>());

  AlgebraDocument out{AlgebraSpec(dim), {}};

  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen_c;
  std::size_t n = 0;
  for (const auto& entry : array_field(doc, "c_entries")) {
    const std::string where = "c_entries[" + std::to_string(n++) + "]";
    if (!entry.is_array() || entry.size() != 4) throw ParseError(where + ": expected [i, j, k, value]");
    const std::size_t i = index_field(entry, 0, dim, where);
    const std::size_t j = index_field(entry, 1, dim, where);
    const std::size_t k = index_field(entry, 2, dim, where);
    if (i >= j) throw ParseError(where + ": requires i < j");
    if (!seen_c.insert({i, j, k}).second) throw ParseError(where + ": duplicate entry");
    out.spec.set_bracket(i, j, k, value_field(entry, 3, where));
  }

  std::set<std::pair<std::size_t, std::size_t>> seen_w;
  n = 0;
  for (const auto& entry : array_field(doc, "omega_entries")) {
    const std::string where = "omega_entries[" + std::to_string(n++) + "]";
    if (!entry.is_array() || entry.size() != 3) throw ParseError(where + ": expected [i, j, value]");
    const std::size_t i = index_field(entry, 0, dim, where);
    const std::size_t j = index_field(entry, 1, dim, where);
    if (i >= j) throw ParseError(where + ": requires i < j");
    if (!seen_w.insert({i, j}).second) throw ParseError(where + ": duplicate entry");
    out.spec.set_omega(i, j, value_field(entry, 2, where));
  }

  if (auto meta = doc.find("metadata"); meta != doc.end()) {
    if (!meta->is_object()) throw ParseError("'metadata' must be an object");
    for (const char* key : {"label", "parameter"}) {
      if (auto f = meta->find(key); f != meta->end()) {
        if (!f->is_string()) throw ParseError(std::string("metadata '") + key + "' must be a string");
        (key[0] == 'l' ? out.metadata.label : out.metadata.parameter) = f->get<std::string>();
      }
    }
  }
  return out;
}

AlgebraSpec parse(std::string_view text) { return parse_document(text).spec; }

std::string serialize(const AlgebraSpec& spec, const DocumentMetadata& metadata) {
  if (!validate_skew(spec).ok()) throw SkewError("only skew specs can be serialized");
  const std::size_t dim = spec.dim();
  std::ostringstream out;
  out << "{\n  \"dim\": " << dim << ",\n  \"c_entries\": [";
  bool first = true;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& v = spec.c(k, i, j);
        if (is_zero(v)) continue;
        out << (first ? "\n    " : ",\n    ") << "[" << i + 1 << ", " << j + 1 << ", " << k + 1 << ", \""
            << to_string(v) << "\"]";
        first = false;
      }
  out << (first ? "]" : "\n  ]") << ",\n  \"omega_entries\": [";
  first = true;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Scalar& v = spec.omega()(i, j);
      if (is_zero(v)) continue;
      out << (first ? "\n    " : ",\n    ") << "[" << i + 1 << ", " << j + 1 << ", \"" << to_string(v) << "\"]";
      first = false;
    }
  out << (first ? "]" : "\n  ]");
  if (!metadata.empty()) {
    json meta = json::object();
    if (metadata.label) meta["label"] = *metadata.label;
    if (metadata.parameter) meta["parameter"] = *metadata.parameter;
    out << ",\n  \"metadata\": " << meta.dump();
  }
  out << "\n}\n";
  return out.str();
}

std::string serialize(const FloatAlgebraSpec&, const DocumentMetadata&) {
  throw NonRationalSpecError("float specs cannot be written as exact documents");
}

}  // namespace odla
