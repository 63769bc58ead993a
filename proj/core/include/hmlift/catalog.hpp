#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hmlift {

// Built-in maps with the property verdicts they are known to have.
struct ExpectedProperty {
  std::string property;
  bool verdict = false;
  std::string sketch;  // what the certificate looks like
};

struct CatalogEntry {
  enum class Kind { RealPoly, ComplexPoly, Quadratic, Smooth };

  std::string id;
  std::string summary;
  std::string definition;  // map-definition source
  Kind kind = Kind::RealPoly;
  std::vector<ExpectedProperty> expected;
  std::vector<std::string> notes;
};

const char* to_string(CatalogEntry::Kind kind);

struct PropertyOutcome {
  std::string property;
  bool expected = false;
  bool actual = false;
  std::string detail;

  bool matches() const noexcept { return expected == actual; }
};

struct EntryReport {
  std::string id;
  std::vector<PropertyOutcome> outcomes;
  std::vector<std::string> details;  // computed artefacts (lifts, gradients, ranks)
  std::vector<std::string> notes;

  bool ok() const noexcept;
};

const std::vector<CatalogEntry>& catalog();

// Throws Error(UnknownId).
const CatalogEntry& lookup(std::string_view id);

// Recomputes every expected property of the entry.
EntryReport run_entry(std::string_view id);

}  // namespace hmlift
