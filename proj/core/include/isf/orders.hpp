#pragma once

#include <utility>
#include <vector>

#include "isf/decide.hpp"

namespace isf {

struct OrderVerdict {
    bool exists = false;
    Verdict inner;                  // the l-group verdict the answer reduces to
    std::vector<GroupWord> reduced; // the words actually queried
};

// Is there a right order on the free group whose positive cone contains
// every word in S? Exists iff e <= s_1 \/ ... \/ s_n fails over l-groups;
// the refuting diagram is the certificate.
OrderVerdict group_right_order_exists(const std::vector<GroupWord>& words,
                                      const DecideOptions& opts = {});

// Is there a right order on the free monoid with s_i < t_i for every pair?
// Reduces to the group query on the words t_i s_i^-1; an equal pair makes
// the answer no.
OrderVerdict monoid_right_order_exists(
    const std::vector<std::pair<MonoidWord, MonoidWord>>& pairs, const DecideOptions& opts = {});

// Substitute the j-th distinct variable (in first-occurrence order) by the
// commutator [x1, x2^j] = x1^-1 x2^-j x1 x2^j and reduce. Distinct variables
// map to distinct free generators of the commutator subgroup, so right-order
// existence is preserved and reflected.
std::vector<GroupWord> embed_rank2(const std::vector<GroupWord>& words);

// A fixed bijection (Z \ {0})^2 -> N: fold each argument onto N by
// zeta(k) = 2k-2 for k > 0 and -2k-1 for k < 0, then pair diagonally.
long long pair_index(long long k, long long l);
std::pair<long long, long long> pair_index_inverse(long long n);

} // namespace isf
