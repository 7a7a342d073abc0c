#include "isf/corpus.hpp"

#include <random>

namespace isf {

namespace {

const char* kVarNames[] = {"x", "y", "z", "u", "v", "w"};

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int below(int n) { return n <= 1 ? 0 : static_cast<int>(engine_() % static_cast<unsigned>(n)); }
    bool chance(int num, int den) { return below(den) < num; }

  private:
    std::mt19937_64 engine_;
};

std::string pick_var(Rng& rng, int vars) { return kVarNames[rng.below(std::min(vars, 6))]; }

MonoidWord random_monoid_word(Rng& rng, int vars, int max_len) {
    MonoidWord w;
    int len = rng.below(max_len + 1);
    for (int i = 0; i < len; ++i) w.letters.push_back(pick_var(rng, vars));
    return w;
}

// inverse letters drawn with probability 1/4 to keep inverse counts modest
GroupWord random_group_word(Rng& rng, int vars, int max_len) {
    std::vector<Letter> letters;
    int len = rng.below(max_len + 1);
    for (int i = 0; i < len; ++i) {
        letters.push_back(Letter{pick_var(rng, vars), rng.chance(1, 4) ? -1 : 1});
    }
    return make_group_word(std::move(letters));
}

MonoidWord word_over(Rng& rng, const std::vector<std::string>& alphabet, int max_len) {
    MonoidWord w;
    int len = rng.below(max_len + 1);
    for (int i = 0; i < len; ++i) {
        w.letters.push_back(alphabet[rng.below(static_cast<int>(alphabet.size()))]);
    }
    return w;
}

TermPtr random_semiring_term(Rng& rng, int vars, int depth, bool allow_zero) {
    int leaf_cut = depth <= 0 ? 10 : 4;
    int roll = rng.below(10);
    if (roll < leaf_cut) {
        if (allow_zero && rng.chance(1, 6)) return t_zero();
        if (rng.chance(1, 5)) return t_unit();
        return t_var(pick_var(rng, vars));
    }
    int arity = 2 + rng.below(2);
    std::vector<TermPtr> args;
    for (int i = 0; i < arity; ++i) {
        args.push_back(random_semiring_term(rng, vars, depth - 1, allow_zero));
    }
    return roll < 7 ? t_mul(std::move(args)) : t_join(std::move(args));
}

SimpleInequation random_simple(Rng& rng, const CorpusParams& p, bool left_regular) {
    SimpleInequation e;
    int n = 1 + rng.below(p.joinands);
    for (int i = 0; i < n; ++i) e.rhs.push_back(random_monoid_word(rng, p.vars, p.max_len));
    if (left_regular) {
        std::set<std::string> right;
        for (const auto& t : e.rhs) {
            auto v = word_vars(t);
            right.insert(v.begin(), v.end());
        }
        std::vector<std::string> alphabet(right.begin(), right.end());
        e.lhs = alphabet.empty() ? MonoidWord{} : word_over(rng, alphabet, p.max_len);
    } else {
        e.lhs = random_monoid_word(rng, p.vars, p.max_len);
    }
    return e;
}

BasicInequation random_basic(Rng& rng, const CorpusParams& p) {
    BasicInequation e;
    e.lhs = random_monoid_word(rng, p.vars, std::min(p.max_len, 4));
    int n = 1 + rng.below(p.joinands);
    for (int i = 0; i < n; ++i) e.rhs.push_back(random_group_word(rng, p.vars, p.max_len));
    return e;
}

GroupWord nonempty_group_word(Rng& rng, int vars, int max_len) {
    GroupWord w;
    while (w.empty()) w = random_group_word(rng, vars, std::max(max_len, 1));
    return w;
}

// meet of joins of group words on the left, join of meets of binary joins on
// the right; the shapes the basic-inequation reduction handles verbatim
Statement random_wedge(Rng& rng, const CorpusParams& p) {
    int wlen = std::min(p.max_len, 3);
    auto word_term = [&]() { return to_term(random_group_word(rng, p.vars, wlen)); };
    auto join_of_words = [&](int width) {
        std::vector<TermPtr> parts;
        for (int i = 0; i < width; ++i) parts.push_back(word_term());
        return t_join(std::move(parts));
    };

    std::vector<TermPtr> left_blocks;
    int lhs_blocks = 1 + rng.below(2);
    for (int i = 0; i < lhs_blocks; ++i) left_blocks.push_back(join_of_words(1 + rng.below(2)));
    TermPtr lhs = t_meet(std::move(left_blocks));

    std::vector<TermPtr> right_blocks;
    int rhs_blocks = 1 + rng.below(2);
    for (int k = 0; k < rhs_blocks; ++k) {
        std::vector<TermPtr> meets;
        int m = 1 + rng.below(2);
        for (int l = 0; l < m; ++l) meets.push_back(join_of_words(1 + rng.below(2)));
        right_blocks.push_back(t_meet(std::move(meets)));
    }
    TermPtr rhs = t_join(std::move(right_blocks));
    return Statement{false, lhs, rhs, Sig::lgroup};
}

} // namespace

CorpusKind corpus_kind_from_name(const std::string& name) {
    for (CorpusKind k : {CorpusKind::simple, CorpusKind::leftreg_simple, CorpusKind::basic,
                         CorpusKind::wedge, CorpusKind::semiring, CorpusKind::semiring0}) {
        if (name == corpus_kind_name(k)) return k;
    }
    throw Error("unknown corpus kind: " + name);
}

const char* corpus_kind_name(CorpusKind k) {
    switch (k) {
        case CorpusKind::simple: return "simple";
        case CorpusKind::leftreg_simple: return "leftreg";
        case CorpusKind::basic: return "basic";
        case CorpusKind::wedge: return "wedge";
        case CorpusKind::semiring: return "semiring";
        case CorpusKind::semiring0: return "semiring0";
    }
    return "?";
}

std::vector<SimpleInequation> gen_simple(const CorpusParams& p, bool force_left_regular) {
    Rng rng(p.seed);
    std::vector<SimpleInequation> out;
    out.reserve(static_cast<std::size_t>(p.count));
    for (int i = 0; i < p.count; ++i) out.push_back(random_simple(rng, p, force_left_regular));
    return out;
}

std::vector<BasicInequation> gen_basic(const CorpusParams& p) {
    Rng rng(p.seed);
    std::vector<BasicInequation> out;
    out.reserve(static_cast<std::size_t>(p.count));
    for (int i = 0; i < p.count; ++i) out.push_back(random_basic(rng, p));
    return out;
}

std::vector<Statement> gen_statements(const CorpusParams& p, CorpusKind kind) {
    std::vector<Statement> out;
    out.reserve(static_cast<std::size_t>(p.count));
    switch (kind) {
        case CorpusKind::simple:
        case CorpusKind::leftreg_simple: {
            for (const auto& e : gen_simple(p, kind == CorpusKind::leftreg_simple)) {
                out.push_back(to_statement(e));
            }
            break;
        }
        case CorpusKind::basic: {
            for (const auto& e : gen_basic(p)) out.push_back(to_statement(e));
            break;
        }
        case CorpusKind::wedge: {
            Rng rng(p.seed);
            for (int i = 0; i < p.count; ++i) out.push_back(random_wedge(rng, p));
            break;
        }
        case CorpusKind::semiring:
        case CorpusKind::semiring0: {
            Rng rng(p.seed);
            bool zero = kind == CorpusKind::semiring0;
            for (int i = 0; i < p.count; ++i) {
                TermPtr l = random_semiring_term(rng, p.vars, 2, zero);
                TermPtr r = random_semiring_term(rng, p.vars, 2, zero);
                out.push_back(Statement{rng.chance(1, 2), l, r,
                                        zero ? Sig::semiring0 : Sig::semiring});
            }
            break;
        }
    }
    return out;
}

std::vector<std::vector<GroupWord>> gen_group_queries(const CorpusParams& p) {
    Rng rng(p.seed);
    std::vector<std::vector<GroupWord>> out;
    out.reserve(static_cast<std::size_t>(p.count));
    for (int i = 0; i < p.count; ++i) {
        std::vector<GroupWord> words;
        int n = 1 + rng.below(p.joinands);
        for (int k = 0; k < n; ++k) words.push_back(nonempty_group_word(rng, p.vars, p.max_len));
        out.push_back(std::move(words));
    }
    return out;
}

std::vector<std::vector<std::pair<MonoidWord, MonoidWord>>> gen_monoid_pair_queries(
    const CorpusParams& p) {
    Rng rng(p.seed);
    std::vector<std::vector<std::pair<MonoidWord, MonoidWord>>> out;
    out.reserve(static_cast<std::size_t>(p.count));
    for (int i = 0; i < p.count; ++i) {
        std::vector<std::pair<MonoidWord, MonoidWord>> pairs;
        int n = 1 + rng.below(p.joinands);
        for (int k = 0; k < n; ++k) {
            pairs.emplace_back(random_monoid_word(rng, p.vars, p.max_len),
                               random_monoid_word(rng, p.vars, p.max_len));
        }
        out.push_back(std::move(pairs));
    }
    return out;
}

std::string render_corpus(const CorpusParams& p, CorpusKind kind) {
    std::string out;
    for (const Statement& st : gen_statements(p, kind)) {
        out += to_string(st);
        out += '\n';
    }
    return out;
}

} // namespace isf
