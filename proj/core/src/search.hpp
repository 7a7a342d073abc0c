#pragma once

#include <cstdint>
#include <vector>

#include "isf/diagram.hpp"

namespace isf::detail {

struct SearchResult {
    bool found = false;
    Diagram diagram; // meaningful only when found
    std::uint64_t nodes = 0;
};

// Exhaustive search for a diagram realizing every word strictly below the
// shared base point. Words must be nonempty and freely reduced. The formal
// points are the trace-trie nodes (shared prefixes are identified up front;
// at most 1 + sum |w_i| of them); the search branches depth-first over the
// order relations <, >, = of map-coupled point pairs, with union-find for
// equalities, incremental transitive closure, and propagation of map
// functionality, injectivity, order preservation, and order reflection.
// Throws BudgetError when the point or node budget is exceeded.
SearchResult search_diagram(const std::vector<GroupWord>& words, int max_points,
                            std::uint64_t max_nodes);

} // namespace isf::detail
