#pragma once

#include "finsub/simplicial.hpp"

#include <filesystem>
#include <string>

namespace finsub {

/// Space file format (JSON):
///
///   {"trunc": N,
///    "levels": [|X_0|, ..., |X_N|],
///    "faces": [[], [[d_0 targets], [d_1 targets]], ...],      one entry per level 0..N
///    "degeneracies": [[[s_0 targets]], [[s_0], [s_1]], ...],   one entry per level 0..N-1
///    "basepoint": idx,
///    "labels": [[...], ...]}                                   optional
///
/// All indices are 0-based. `faces[0]` is the empty list for level 0.
std::string space_to_json(const BasedSimplicialSet& x);

/// Throws ParseError with a line or field location for malformed input and
/// ValidationError when the tables violate a simplicial identity.
BasedSimplicialSet space_from_json(const std::string& text);

void save_space(const BasedSimplicialSet& x, const std::filesystem::path& path);
BasedSimplicialSet load_space(const std::filesystem::path& path);

}  // namespace finsub
