#pragma once

// JSON documents for vectors, tableaux and reports. Indices are 1-based,
// rationals are strings, and object keys come out sorted, so emitting a
// parsed document reproduces it byte for byte.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "plucker/exterior.hpp"
#include "plucker/grassmann_s2.hpp"
#include "plucker/straightening.hpp"
#include "plucker/sym_power.hpp"

namespace plucker::cli {

using Json = nlohmann::json;

/// Malformed or inconsistent input document.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const MultiIndex& alpha);
MultiIndex index_from_json(const Json& j);

/// {"k":..,"n":..,"terms":[{"coeff":"..","index":[..]}]}
Json to_json(const ExtVector& v);
ExtVector ext_from_json(const Json& j);

/// {"k":..,"m":..,"n":..,"terms":[{"coeff":"..","indices":[[..],..]}]}
Json to_json(const SymTensor& u);
SymTensor sym_from_json(const Json& j);

/// List of columns.
Json to_json(const RectTableau& t);
/// {"(12,34)":"-1", ...}
Json to_json(const TableauCombo& c);

Json to_json(const PluckerRelation& r);
Json to_json(const LinearRelation& r);
Json to_json(const Violation& v);
Json to_json(const RelationReport& r);

/// Parses a whole document; throws DocumentError on syntax errors.
Json parse(const std::string& text);
/// Two-space indented, trailing newline.
std::string emit(const Json& j);

}  // namespace plucker::cli
