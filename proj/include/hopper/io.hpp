#pragma once

#include <stdexcept>
#include <string>

#include "hopper/configuration.hpp"
#include "hopper/planner.hpp"
#include "hopper/search.hpp"

namespace hopper {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);

// Writes via a temp file + rename so failures never leave partial output.
void write_text_file_atomic(const std::string& path, const std::string& content);

// 12 significant digits.
std::string float12(double v);

// Configuration JSON:
//   {"dim": d, "backend": "rational" | {"cyclotomic": N}, "points": [...]}
// rational points are arrays of "p/q" strings; cyclotomic points are integer
// coefficient arrays in the zeta power basis (values beyond int64 appear as
// decimal strings; both forms are accepted on input).
Configuration parse_config_json(const std::string& text);
std::string config_to_json(const Configuration& c);

// Integer matrix JSON: array of rows of integers (strings accepted/emitted
// for values beyond int64).
IntMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const IntMatrix& m);

std::string plan_to_json(const EnlargementPlan& p);

std::string search_report_to_json(const SearchReport& r);

// Deterministic SVG: start vertices as filled circles, start and final
// polygons, one arrow per jump; viewBox = exact bounding box + 5% margin.
std::string render_svg(const Configuration& start, const JumpSequence& s);

}  // namespace hopper
