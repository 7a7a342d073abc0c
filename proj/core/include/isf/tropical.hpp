#pragma once

#include <map>
#include <optional>
#include <string>

#include "isf/inequations.hpp"

namespace isf {

using IntAssignment = std::map<std::string, long long>;

// net exponent of every variable
IntAssignment abelianize(const GroupWord& w);

// An integer assignment a with lin_s(a) > lin_{t_i}(a) for every joinand,
// i.e. a witness that <Z, max, +, 0> refutes the inequation; nullopt when
// none exists. Decided by exact rational Fourier-Motzkin elimination of the
// homogeneous system lin_s - lin_{t_i} >= 1 and scaled back to integers.
std::optional<IntAssignment> tropical_refutation(const BasicInequation& e);

// lin_s(a) > max_i lin_{t_i}(a) under the assignment (missing vars are 0)
bool tropical_violates(const BasicInequation& e, const IntAssignment& a);

} // namespace isf
