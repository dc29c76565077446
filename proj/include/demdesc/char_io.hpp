#pragma once

#include <string>

#include "demdesc/character.hpp"
#include "demdesc/descent.hpp"

namespace demdesc {

// Input coordinates are capped to this magnitude at parse time so lattice
// arithmetic stays far inside int32.
inline constexpr std::int32_t kMaxInputCoord = 100'000;

/**
 * Character file format:
 *   {"root_datum": "A2", "terms": [{"weight": [1,0], "coeff": 1}, ...]}
 * Terms are emitted sorted descending by the term order; input order is
 * free, duplicate weights accumulate, zero coefficients are dropped.
 * Coefficients outside int64 range are written as decimal strings and
 * accepted in either form.
 */
std::string character_to_json(const Character& f);
Character character_from_json(const std::string& text);

/**
 * Decomposition file format:
 *   {"root_datum": "A2", "entries": [{"highest_weight": [1,1], "mult": 1}, ...]}
 * Entries are emitted sorted descending by the term order on highest
 * weights; every highest weight must be dominant.
 */
std::string decomposition_to_json(const GDecomposition& d);
GDecomposition decomposition_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace demdesc
