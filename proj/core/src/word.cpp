#include "isf/word.hpp"

#include <algorithm>

namespace isf {

std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
    std::vector<Letter> stack;
    stack.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!stack.empty() && stack.back().var == l.var && stack.back().sign == -l.sign) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return stack;
}

GroupWord make_group_word(std::vector<Letter> letters) { return GroupWord{free_reduce(letters)}; }

GroupWord concat(const GroupWord& a, const GroupWord& b) {
    std::vector<Letter> out = a.letters;
    out.insert(out.end(), b.letters.begin(), b.letters.end());
    return make_group_word(std::move(out));
}

GroupWord inverse(const GroupWord& w) {
    std::vector<Letter> out;
    out.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        out.push_back(Letter{it->var, -it->sign});
    }
    return GroupWord{std::move(out)}; // reversal of a reduced word is reduced
}

bool is_positive(const GroupWord& w) {
    return std::all_of(w.letters.begin(), w.letters.end(),
                       [](const Letter& l) { return l.sign > 0; });
}

MonoidWord concat(const MonoidWord& a, const MonoidWord& b) {
    MonoidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

GroupWord to_group(const MonoidWord& w) {
    std::vector<Letter> letters;
    letters.reserve(w.letters.size());
    for (const auto& v : w.letters) letters.push_back(Letter{v, 1});
    return GroupWord{std::move(letters)};
}

MonoidWord to_monoid(const GroupWord& w) {
    MonoidWord out;
    out.letters.reserve(w.letters.size());
    for (const Letter& l : w.letters) {
        if (l.sign < 0) throw Error("word contains an inverse: " + to_string(w));
        out.letters.push_back(l.var);
    }
    return out;
}

std::set<std::string> word_vars(const GroupWord& w) {
    std::set<std::string> out;
    for (const Letter& l : w.letters) out.insert(l.var);
    return out;
}

std::set<std::string> word_vars(const MonoidWord& w) {
    return std::set<std::string>(w.letters.begin(), w.letters.end());
}

TermPtr to_term(const GroupWord& w) {
    std::vector<TermPtr> factors;
    factors.reserve(w.letters.size());
    for (const Letter& l : w.letters) {
        TermPtr v = t_var(l.var);
        factors.push_back(l.sign > 0 ? v : t_inv(v));
    }
    return t_mul(std::move(factors));
}

TermPtr to_term(const MonoidWord& w) {
    std::vector<TermPtr> factors;
    factors.reserve(w.letters.size());
    for (const auto& v : w.letters) factors.push_back(t_var(v));
    return t_mul(std::move(factors));
}

namespace {

void flatten_word(const TermPtr& t, int sign, std::vector<Letter>& out) {
    switch (t->kind) {
        case Term::Kind::var: out.push_back(Letter{t->name, sign}); return;
        case Term::Kind::unit: return;
        case Term::Kind::inv: flatten_word(t->args[0], -sign, out); return;
        case Term::Kind::mul:
            if (sign > 0) {
                for (const auto& a : t->args) flatten_word(a, sign, out);
            } else {
                for (auto it = t->args.rbegin(); it != t->args.rend(); ++it) {
                    flatten_word(*it, sign, out);
                }
            }
            return;
        default: throw Error("term is not a group word: " + to_string(t));
    }
}

} // namespace

GroupWord group_word_from_term(const TermPtr& t) {
    std::vector<Letter> letters;
    flatten_word(t, 1, letters);
    return make_group_word(std::move(letters));
}

MonoidWord monoid_word_from_term(const TermPtr& t) {
    GroupWord w = group_word_from_term(t);
    if (!is_positive(w)) throw Error("term is not a monoid word: " + to_string(t));
    return to_monoid(w);
}

std::string to_string(const GroupWord& w) { return to_string(to_term(w)); }
std::string to_string(const MonoidWord& w) { return to_string(to_term(w)); }

std::size_t word_size(const GroupWord& w) {
    if (w.empty()) return 1;
    std::size_t total = w.length() - 1;
    for (const Letter& l : w.letters) total += l.sign > 0 ? 1 : 2;
    return total;
}

std::size_t word_size(const MonoidWord& w) { return w.empty() ? 1 : 2 * w.length() - 1; }

} // namespace isf
