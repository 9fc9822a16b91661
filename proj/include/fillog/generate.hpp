#pragma once

#include "fillog/filters.hpp"
#include "fillog/syntax.hpp"

#include <random>
#include <string>
#include <vector>

namespace fillog {

// Uniform-ish random formula of depth <= max_depth over vars, using only the
// connectives of lang. Sugar is never produced.
Formula random_formula(std::mt19937_64& rng, Language lang, const std::vector<std::string>& vars, int max_depth);

// Random proper filter on lang's carrier with bounds k/den, den <= max_den.
Filter random_filter(std::mt19937_64& rng, Language lang, int max_den);

// All proper filters with bounds drawn from the given values and both bracket
// flags; duplicates (same set) are kept once per bracket choice.
std::vector<Filter> filter_family(Language lang, const std::vector<UnitRational>& bounds);

}  // namespace fillog
