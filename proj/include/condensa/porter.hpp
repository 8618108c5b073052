#pragma once

#include <string>

namespace condensa {

/// Porter suffix-stripping stemmer (the original 1980 rule set). Expects a
/// lowercased word; words shorter than 3 chars or containing non-ASCII
/// bytes are returned unchanged.
std::string porter_stem(std::string word);

}  // namespace condensa
