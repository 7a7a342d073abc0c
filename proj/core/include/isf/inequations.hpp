#pragma once

#include <utility>
#include <vector>

#include "isf/word.hpp"

namespace isf {

// s <= t_1 \/ ... \/ t_n with every word over the monoid signature.
struct SimpleInequation {
    MonoidWord lhs;
    std::vector<MonoidWord> rhs; // nonempty
    bool operator==(const SimpleInequation&) const = default;
};

// s <= t_1 \/ ... \/ t_n with a monoid word on the left and freely reduced
// group words on the right.
struct BasicInequation {
    MonoidWord lhs;
    std::vector<GroupWord> rhs; // nonempty
    bool operator==(const BasicInequation&) const = default;
};

// premises => conclusion, all equations between words of one signature
struct Quasiequation {
    std::vector<std::pair<GroupWord, GroupWord>> premises;
    std::pair<GroupWord, GroupWord> conclusion;
};

BasicInequation to_basic(const SimpleInequation& e);

std::size_t size_of(const SimpleInequation& e);
std::size_t size_of(const BasicInequation& e);

std::set<std::string> vars_of(const SimpleInequation& e);
std::set<std::string> vars_of(const BasicInequation& e);
std::set<std::string> vars_of(const Quasiequation& q);

// Statement views. Converting to a statement may merge duplicate joinands
// (Join children are deduplicated); sizes above count duplicates.
Statement to_statement(const SimpleInequation& e);
Statement to_statement(const BasicInequation& e);

// Strict syntactic readings of parsed inequations: the left side must be a
// monoid/group word product and the right side a join of such products.
SimpleInequation as_simple(const Statement& st);
BasicInequation as_basic(const Statement& st);

bool all_positive(const Quasiequation& q);

std::string to_string(const SimpleInequation& e);
std::string to_string(const BasicInequation& e);
std::string to_string(const Quasiequation& q);

} // namespace isf
