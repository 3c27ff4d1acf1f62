#pragma once

#include "lapvol/polytope.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lapvol {

// Instance files are JSON documents
//
//   { "A": [["1", "1"], ["-2", "2"], ["2", "-1"]], "b": ["1", "1", "1"] }
//
// Entries are integer or "p/q" strings (JSON integers are accepted as well).
// Decimal literals are refused unless tolerate_floats is set; they are then
// converted to the exact rational they spell and a warning is recorded.

struct ParseOptions {
  bool tolerate_floats = false;
};

PolytopeInstance parse_instance(std::string_view text, const ParseOptions& options = {},
                                std::vector<std::string>* warnings = nullptr);

PolytopeInstance read_instance_file(const std::filesystem::path& path,
                                    const ParseOptions& options = {},
                                    std::vector<std::string>* warnings = nullptr);

std::string format_instance(const PolytopeInstance& inst);

} // namespace lapvol
