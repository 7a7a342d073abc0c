#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isf/inequations.hpp"

namespace isf {

// A finite countermodel certificate for an inequation s <= t_1 \/ ... \/ t_n
// over the variety of l-groups. Points are 0 .. num_points-1 in increasing
// order. For each variable, `maps` holds a partial injective order-preserving
// function as a pair list. `traces` walks each reduced word
// w_i = t_i s^-1 from the base point, ending strictly below it. Any such
// diagram extends to a countermodel in the l-group of order-preserving
// bijections of the reals, so acceptance certifies invalidity.
struct Diagram {
    int num_points = 0;
    int base = 0;
    std::map<std::string, std::vector<std::pair<int, int>>> maps;
    std::vector<std::vector<int>> traces;
};

// The reduced words t_i s^-1 traced by a diagram for this inequation.
std::vector<GroupWord> joinand_words(const BasicInequation& e);

// Checks every diagram invariant against e in polynomial time. When a check
// fails and `reason` is non-null, it receives a description.
bool verify_diagram(const Diagram& d, const BasicInequation& e, std::string* reason = nullptr);

} // namespace isf
