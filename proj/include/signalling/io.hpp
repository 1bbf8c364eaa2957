#pragma once

#include <string>
#include <string_view>

#include "signalling/core.hpp"

namespace signalling {

/// JSON object {"q": int, "U": [[entry, ...], ...]}; entries are rational
/// strings or JSON integers. Floating-point numbers are rejected.
/// `source` names the input in error messages.
UtilityMatrix parse_matrix_json(std::string_view text, std::string_view source = "<input>");

/// One row per line, entries separated by commas. Blank lines and lines
/// starting with '#' are skipped.
UtilityMatrix parse_matrix_csv(std::string_view text, std::string_view source = "<input>");

/// JSON if the first non-blank character is '{', CSV otherwise.
UtilityMatrix parse_matrix(std::string_view text, std::string_view source = "<input>");

/// Reads and parses a matrix file. Throws IoError if it cannot be read.
UtilityMatrix read_matrix_file(const std::string& path);

std::string format_matrix_json(const UtilityMatrix& u);
std::string format_matrix_csv(const UtilityMatrix& u);

/// Whole file contents. Throws IoError.
std::string read_text_file(const std::string& path);

}  // namespace signalling
