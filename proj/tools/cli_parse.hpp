#pragma once

// Parsing for the command-line front end: the key = value config format,
// matrix literals with complex entries, and generator words.

#include <map>
#include <optional>
#include <string>

#include "sjt/groups.hpp"
#include "sjt/weil.hpp"

namespace sjt::cli {

struct ConfigEntry {
  std::string value;
  int line = 0;
};

/// Ordered key -> value map; later duplicates are a ParseError.
using Config = std::map<std::string, ConfigEntry>;

Config parse_config(const std::string& text);

/// "1", "-2.5", "i", "-i", "2i", "1+2i", "0.5-1e-3i".
cplx parse_complex(const std::string& token);

/// "[a, b; c, d]" (rows separated by ';'). A bare scalar is a 1x1 matrix.
CMatrix parse_matrix(const std::string& literal);
/// As parse_matrix, rejecting non-zero imaginary parts.
RMatrix parse_real_matrix(const std::string& literal);
/// A real symmetric literal or the name "E8".
IndexMatrix parse_index(const std::string& literal);

/// "[t([2]), sigma, g([-1]), h([1];[0];[0])]"; brackets around the list are optional.
Word parse_word(const std::string& text);

/// Splits at `sep` when not nested in (), [] or {}.
std::vector<std::string> split_top_level(const std::string& s, char sep);
std::string trim(const std::string& s);

}  // namespace sjt::cli
