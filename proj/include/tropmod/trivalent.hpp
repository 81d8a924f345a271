#ifndef TROPMOD_TRIVALENT_HPP
#define TROPMOD_TRIVALENT_HPP

#include <vector>

#include "tropmod/weighted_graph.hpp"

namespace tropmod {

/// All connected 3-regular multigraphs on 2g-2 vertices up to
/// isomorphism, with all-zero weights, sorted by canonical certificate.
/// Loops count 2 toward the degree. Counts for g = 2..6 are
/// 2, 5, 17, 71, 388.
std::vector<WeightedGraph> enumerate_trivalent(int g);

}  // namespace tropmod

#endif
