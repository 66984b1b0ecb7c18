#pragma once

#include <string_view>

namespace mdteds {

/// Cell-wise text similarity in [0,1]: one minus the character-level edit
/// distance between the case-folded normalized texts, divided by the longer
/// length. Two empty strings compare as 1. Symmetric; 1.0 exactly iff the
/// case-folded normalized texts are equal.
double text_similarity(std::string_view a, std::string_view b);

}  // namespace mdteds
