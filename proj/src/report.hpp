#pragma once

#include <string>

#include "invariants.hpp"

#include "json.hpp"

namespace gradecheck {

// Fixed report schema: dim, embdim, mult, hvector, cm, gorenstein,
// hypersurface, ci, min_mult, stretched, super_stretched, h_class,
// obstruction, seed, options. Booleans stay null when the Cohen-Macaulay
// precondition fails; all numbers are exact integers.
nlohmann::json report_to_json(const RingReport& rep, uint64_t seed,
                              const nlohmann::json& options);

std::string report_to_text(const RingReport& rep, uint64_t seed);

}  // namespace gradecheck
