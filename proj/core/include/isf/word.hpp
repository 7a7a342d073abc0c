#pragma once

#include <set>
#include <string>
#include <vector>

#include "isf/term.hpp"

namespace isf {

struct Letter {
    std::string var;
    int sign = 1; // +1 or -1
    bool operator==(const Letter&) const = default;
};

// Freely reduced word over the group signature; empty = e. Construct via
// make_group_word or the word operations below, which reduce.
struct GroupWord {
    std::vector<Letter> letters;
    bool operator==(const GroupWord&) const = default;
    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
};

// Word over the monoid signature; empty = e.
struct MonoidWord {
    std::vector<std::string> letters;
    bool operator==(const MonoidWord&) const = default;
    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
};

// Cancel adjacent x x^-1 / x^-1 x pairs to a fixpoint (single stack pass).
std::vector<Letter> free_reduce(const std::vector<Letter>& letters);

GroupWord make_group_word(std::vector<Letter> letters);
GroupWord concat(const GroupWord& a, const GroupWord& b);
GroupWord inverse(const GroupWord& w);
bool is_positive(const GroupWord& w);

MonoidWord concat(const MonoidWord& a, const MonoidWord& b);
GroupWord to_group(const MonoidWord& w);
MonoidWord to_monoid(const GroupWord& w); // requires is_positive

std::set<std::string> word_vars(const GroupWord& w);
std::set<std::string> word_vars(const MonoidWord& w);

TermPtr to_term(const GroupWord& w);
TermPtr to_term(const MonoidWord& w);

// Flattens a product term of variables, e, and inverses into a reduced word;
// inverses of compound factors are pushed to the letters. Throws on lattice
// or zero nodes.
GroupWord group_word_from_term(const TermPtr& t);
// Same, for the monoid fragment (no inverses).
MonoidWord monoid_word_from_term(const TermPtr& t);

std::string to_string(const GroupWord& w);
std::string to_string(const MonoidWord& w);

// term_size of to_term(w), computed directly
std::size_t word_size(const GroupWord& w);
std::size_t word_size(const MonoidWord& w);

} // namespace isf
