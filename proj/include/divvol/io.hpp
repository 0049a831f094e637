#pragma once

// JSON file formats.
//
// Variety:  {"name": str, "rank": int, "gram": [[r, ...], ...], "ample": [r, ...],
//            "curves": [{"name": str, "class": [r, ...]}, ...]}
// Table:    {"n": int, "s": [r, ...]}
//
// A rational r is a JSON integer or a string "p" / "p/q" (sign on p only,
// q != 0).

#include "divvol/lattice.hpp"
#include "divvol/volume.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace divvol {

// Carries the byte offset for syntax errors or the JSON path for schema errors.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Rational rational_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json rational_to_json(const Rational& r);

SurfaceLattice parse_variety(std::string_view text);
SurfaceLattice load_variety(const std::string& path);
nlohmann::json variety_to_json(const SurfaceLattice& lattice);

NefIntersectionTable parse_table(std::string_view text);
NefIntersectionTable load_table(const std::string& path);

// Comma-separated rationals, e.g. "1,-1/2,0".
DivisorClass parse_class(std::string_view text);

}  // namespace divvol
