#pragma once

#include <vector>

namespace turan {

// Interleave two 4k-tuples into one 8k-tuple. Walking the result cyclically
// visits, besides consecutive pairs inside each input, exactly the cross pairs
// that two adjacent grid columns must realize; weave(y, z, k) and
// weave(z, y, k) trace the same unordered pair set in opposite rotations.
std::vector<int> weave(const std::vector<int>& y, const std::vector<int>& z, int k);

// Inverse of weave: recover (y, z) from an 8k-tuple.
std::pair<std::vector<int>, std::vector<int>> unweave(const std::vector<int>& tuple, int k);

bool has_repeats(const std::vector<int>& tuple);

}  // namespace turan
