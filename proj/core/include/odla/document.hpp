#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "odla/algebra.hpp"

namespace odla {

/// Optional descriptive fields carried alongside an algebra document.
struct DocumentMetadata {
  std::optional<std::string> label;
  std::optional<std::string> parameter;

  bool empty() const { return !label && !parameter; }
  bool operator==(const DocumentMetadata&) const = default;
};

struct AlgebraDocument {
  AlgebraSpec spec;
  DocumentMetadata metadata;
};

/// Reads the JSON algebra document:
///
///   {"dim": 3,
///    "c_entries": [[i, j, k, "p/q"], ...],     // c^k_ij, 1 <= i < j <= dim
///    "omega_entries": [[i, j, "p/q"], ...],    // omega_ij, i < j
///    "metadata": {"label": "...", "parameter": "..."}}   // optional
///
/// Only i < j is stored; the opposite orientation is filled in with the
/// opposite sign. Throws ParseError on malformed JSON (with byte offset),
/// out-of-range or unordered indices, duplicate entries and bad rationals.
AlgebraDocument parse_document(std::string_view text);

/// parse_document(text).spec.
AlgebraSpec parse(std::string_view text);

/// Canonical, byte-stable document text: entries sorted by (i, j) then k,
/// zero values omitted, rationals in lowest terms. Throws SkewError if the
/// spec is not skew.
std::string serialize(const AlgebraSpec& spec, const DocumentMetadata& metadata = {});

/// Float specs have no exact document form; always throws NonRationalSpecError.
std::string serialize(const FloatAlgebraSpec& spec, const DocumentMetadata& metadata = {});

}  // namespace odla
