#include "isf/inequations.hpp"

namespace isf {

BasicInequation to_basic(const SimpleInequation& e) {
    BasicInequation out;
    out.lhs = e.lhs;
    out.rhs.reserve(e.rhs.size());
    for (const auto& t : e.rhs) out.rhs.push_back(to_group(t));
    return out;
}

std::size_t size_of(const SimpleInequation& e) {
    std::size_t total = word_size(e.lhs) + e.rhs.size() - 1;
    for (const auto& t : e.rhs) total += word_size(t);
    return total;
}

std::size_t size_of(const BasicInequation& e) {
    std::size_t total = word_size(e.lhs) + e.rhs.size() - 1;
    for (const auto& t : e.rhs) total += word_size(t);
    return total;
}

std::set<std::string> vars_of(const SimpleInequation& e) {
    std::set<std::string> out = word_vars(e.lhs);
    for (const auto& t : e.rhs) {
        auto v = word_vars(t);
        out.insert(v.begin(), v.end());
    }
    return out;
}

std::set<std::string> vars_of(const BasicInequation& e) {
    std::set<std::string> out = word_vars(e.lhs);
    for (const auto& t : e.rhs) {
        auto v = word_vars(t);
        out.insert(v.begin(), v.end());
    }
    return out;
}

std::set<std::string> vars_of(const Quasiequation& q) {
    std::set<std::string> out;
    auto add = [&](const GroupWord& w) {
        auto v = word_vars(w);
        out.insert(v.begin(), v.end());
    };
    for (const auto& [l, r] : q.premises) {
        add(l);
        add(r);
    }
    add(q.conclusion.first);
    add(q.conclusion.second);
    return out;
}

namespace {

template <typename Word>
TermPtr join_of_words(const std::vector<Word>& words) {
    std::vector<TermPtr> joinands;
    joinands.reserve(words.size());
    for (const auto& t : words) joinands.push_back(to_term(t));
    return t_join(std::move(joinands));
}

} // namespace

Statement to_statement(const SimpleInequation& e) {
    return Statement{false, to_term(e.lhs), join_of_words(e.rhs), Sig::semiring};
}

Statement to_statement(const BasicInequation& e) {
    return Statement{false, to_term(e.lhs), join_of_words(e.rhs), Sig::lgroup};
}

SimpleInequation as_simple(const Statement& st) {
    if (st.equation) throw Error("expected an inequation s <= t");
    SimpleInequation out;
    out.lhs = monoid_word_from_term(st.lhs);
    const TermPtr& r = st.rhs;
    if (r->kind == Term::Kind::join) {
        for (const auto& a : r->args) out.rhs.push_back(monoid_word_from_term(a));
    } else {
        out.rhs.push_back(monoid_word_from_term(r));
    }
    return out;
}

BasicInequation as_basic(const Statement& st) {
    if (st.equation) throw Error("expected an inequation s <= t");
    BasicInequation out;
    out.lhs = monoid_word_from_term(st.lhs);
    const TermPtr& r = st.rhs;
    if (r->kind == Term::Kind::join) {
        for (const auto& a : r->args) out.rhs.push_back(group_word_from_term(a));
    } else {
        out.rhs.push_back(group_word_from_term(r));
    }
    return out;
}

bool all_positive(const Quasiequation& q) {
    auto pos = [](const GroupWord& w) { return is_positive(w); };
    for (const auto& [l, r] : q.premises) {
        if (!pos(l) || !pos(r)) return false;
    }
    return pos(q.conclusion.first) && pos(q.conclusion.second);
}

std::string to_string(const SimpleInequation& e) { return to_string(to_statement(e)); }
std::string to_string(const BasicInequation& e) { return to_string(to_statement(e)); }

std::string to_string(const Quasiequation& q) {
    std::string out;
    for (std::size_t i = 0; i < q.premises.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(q.premises[i].first) + " = " + to_string(q.premises[i].second);
    }
    out += out.empty() ? "=> " : " => ";
    out += to_string(q.conclusion.first) + " = " + to_string(q.conclusion.second);
    return out;
}

} // namespace isf
