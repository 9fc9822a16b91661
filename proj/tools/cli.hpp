#pragma once

#include "fillog/syntax.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fillog::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kParseError = 2, kBudget = 3 };

// Line-oriented query file:
//   lang: g2
//   premise: p & !p
//   conclusion: q
//   filter: bi[1/2,1/2]
// Blank lines and lines starting with '#' are ignored.
struct QueryFile {
    std::optional<Language> lang;
    std::vector<std::string> premises;
    std::optional<std::string> conclusion;
    std::optional<std::string> filter;
};

QueryFile parse_query_file(std::string_view text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fillog::cli
