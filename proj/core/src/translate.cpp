#include "isf/translate.hpp"

#include <algorithm>

namespace isf {

namespace {

// join of monoid words, with * distributed over \/ and duplicates removed
std::vector<MonoidWord> distribute_semiring(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::var: return {MonoidWord{{t->name}}};
        case Term::Kind::unit: return {MonoidWord{}};
        case Term::Kind::join: {
            std::vector<MonoidWord> out;
            for (const auto& a : t->args) {
                for (auto& w : distribute_semiring(a)) {
                    if (std::find(out.begin(), out.end(), w) == out.end()) {
                        out.push_back(std::move(w));
                    }
                }
            }
            return out;
        }
        case Term::Kind::mul: {
            std::vector<MonoidWord> acc{MonoidWord{}};
            for (const auto& a : t->args) {
                std::vector<MonoidWord> part = distribute_semiring(a);
                std::vector<MonoidWord> next;
                for (const auto& lhs : acc) {
                    for (const auto& rhs : part) {
                        MonoidWord w = concat(lhs, rhs);
                        if (std::find(next.begin(), next.end(), w) == next.end()) {
                            next.push_back(std::move(w));
                        }
                    }
                }
                acc = std::move(next);
            }
            return acc;
        }
        default:
            throw SignatureError("expected a semiring term, got " + to_string(t));
    }
}

} // namespace

std::vector<SimpleInequation> to_simple_inequations(const Statement& st) {
    check_signature(st.lhs, Sig::semiring);
    check_signature(st.rhs, Sig::semiring);
    std::vector<std::pair<TermPtr, TermPtr>> sides;
    if (st.equation) {
        sides = {{st.lhs, st.rhs}, {st.rhs, st.lhs}};
    } else {
        sides = {{st.lhs, st.rhs}};
    }
    std::vector<SimpleInequation> out;
    for (const auto& [l, r] : sides) {
        std::vector<MonoidWord> left = distribute_semiring(l);
        std::vector<MonoidWord> right = distribute_semiring(r);
        for (const auto& s : left) {
            SimpleInequation e{s, right};
            if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
        }
    }
    return out;
}

bool is_left_regular(const SimpleInequation& e) {
    std::set<std::string> right;
    for (const auto& t : e.rhs) {
        auto v = word_vars(t);
        right.insert(v.begin(), v.end());
    }
    for (const auto& x : word_vars(e.lhs)) {
        if (!right.count(x)) return false;
    }
    return true;
}

std::optional<SimpleInequation> right_regularize(const SimpleInequation& e) {
    std::set<std::string> left = word_vars(e.lhs);
    SimpleInequation out;
    out.lhs = e.lhs;
    for (const auto& t : e.rhs) {
        bool keep = true;
        for (const auto& x : word_vars(t)) {
            if (!left.count(x)) {
                keep = false;
                break;
            }
        }
        if (keep) out.rhs.push_back(t);
    }
    if (out.rhs.empty()) return std::nullopt;
    return out;
}

Quasiequation to_quasiequation(const SimpleInequation& e) {
    Quasiequation q;
    GroupWord t1 = to_group(e.rhs[0]);
    for (std::size_t i = 1; i < e.rhs.size(); ++i) {
        q.premises.emplace_back(t1, to_group(e.rhs[i]));
    }
    q.conclusion = {t1, to_group(e.lhs)};
    return q;
}

FreshVars::FreshVars(const std::set<std::string>& used) {
    for (const auto& name : used) {
        if (name.size() > 2 && name[0] == '_' && name[1] == 'f') {
            unsigned long k = 0;
            bool numeric = true;
            for (std::size_t i = 2; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
                    numeric = false;
                    break;
                }
                k = k * 10 + static_cast<unsigned long>(name[i] - '0');
            }
            if (numeric && k >= counter_) counter_ = k + 1;
        }
    }
}

std::string FreshVars::next() {
    std::string name = "_f" + std::to_string(counter_++);
    produced_.push_back(name);
    return name;
}

InverseEliminationResult eliminate_inverses(const BasicInequation& e,
                                            const InverseEliminationOptions& opts) {
    MonoidWord s = e.lhs;
    std::vector<GroupWord> ts = e.rhs;
    FreshVars fresh(vars_of(e));
    std::size_t steps = 0;

    while (true) {
        // first joinand containing an inverse, and the position of that inverse
        std::size_t i = ts.size();
        std::size_t j = 0;
        for (std::size_t a = 0; a < ts.size() && i == ts.size(); ++a) {
            for (std::size_t b = 0; b < ts[a].letters.size(); ++b) {
                if (ts[a].letters[b].sign < 0) {
                    i = a;
                    j = b;
                    break;
                }
            }
        }
        if (i == ts.size()) break;

        // ts[i] = u x^-1 v with u the maximal inverse-free prefix
        const GroupWord& ti = ts[i];
        MonoidWord u;
        for (std::size_t k = 0; k < j; ++k) u.letters.push_back(ti.letters[k].var);
        std::string x = ti.letters[j].var;
        GroupWord v{std::vector<Letter>(ti.letters.begin() + j + 1, ti.letters.end())};
        std::string y = fresh.next();

        GroupWord xy = make_group_word({Letter{x, 1}, Letter{y, 1}});
        MonoidWord new_s = concat(to_monoid(xy), s);
        MonoidWord split = to_monoid(xy);
        split = concat(split, u);
        split.letters.push_back(opts.literal_joinand ? x : y);
        split = concat(split, s);

        std::vector<GroupWord> next;
        next.reserve(ts.size() + 1);
        for (std::size_t k = 0; k < i; ++k) next.push_back(concat(xy, ts[k]));
        next.push_back(to_group(split));
        next.push_back(v);
        for (std::size_t k = i + 1; k < ts.size(); ++k) next.push_back(concat(xy, ts[k]));

        s = std::move(new_s);
        ts = std::move(next);
        ++steps;
    }

    SimpleInequation result;
    result.lhs = std::move(s);
    result.rhs.reserve(ts.size());
    for (const auto& t : ts) result.rhs.push_back(to_monoid(t));
    return InverseEliminationResult{std::move(result), fresh.produced(), steps};
}

namespace {

// lattice forms over reduced group words
using JoinWords = std::vector<GroupWord>;          // w1 \/ ... \/ wk
using MeetOfJoins = std::vector<JoinWords>;        // A1 /\ ... /\ Am
using JoinOfMeets = std::vector<MeetOfJoins>;      // B1 \/ ... \/ Bn

std::size_t count_words(const JoinOfMeets& f) {
    std::size_t n = 0;
    for (const auto& block : f) {
        for (const auto& jw : block) n += jw.size();
    }
    return n;
}

std::size_t count_words(const MeetOfJoins& f) {
    std::size_t n = 0;
    for (const auto& jw : f) n += jw.size();
    return n;
}

// inverse pushed to the leaves: Inv applies only to variables
TermPtr push_inverses(const TermPtr& t, int sign) {
    switch (t->kind) {
        case Term::Kind::var: return sign > 0 ? t : t_inv(t);
        case Term::Kind::unit: return t;
        case Term::Kind::inv: return push_inverses(t->args[0], -sign);
        case Term::Kind::mul: {
            std::vector<TermPtr> args;
            args.reserve(t->args.size());
            if (sign > 0) {
                for (const auto& a : t->args) args.push_back(push_inverses(a, sign));
            } else {
                for (auto it = t->args.rbegin(); it != t->args.rend(); ++it) {
                    args.push_back(push_inverses(*it, sign));
                }
            }
            return t_mul(std::move(args));
        }
        case Term::Kind::join:
        case Term::Kind::meet: {
            std::vector<TermPtr> args;
            args.reserve(t->args.size());
            for (const auto& a : t->args) args.push_back(push_inverses(a, sign));
            bool join = (t->kind == Term::Kind::join) == (sign > 0);
            return join ? t_join(std::move(args)) : t_meet(std::move(args));
        }
        default: throw SignatureError("unexpected 0 in an lgroup term");
    }
}

class LatticeNormalizer {
  public:
    explicit LatticeNormalizer(const TranslateBudget& budget) : budget_(budget) {}

    // meet of joins of words
    MeetOfJoins to_cnf(const TermPtr& t) {
        switch (t->kind) {
            case Term::Kind::meet: {
                MeetOfJoins out;
                for (const auto& a : t->args) {
                    MeetOfJoins part = to_cnf(a);
                    out.insert(out.end(), part.begin(), part.end());
                }
                check(count_words(out));
                return out;
            }
            case Term::Kind::join: {
                // (/\ A_i) \/ (/\ B_j) = /\_{i,j} (A_i \/ B_j)
                MeetOfJoins acc;
                bool first = true;
                for (const auto& a : t->args) {
                    MeetOfJoins part = to_cnf(a);
                    if (first) {
                        acc = std::move(part);
                        first = false;
                        continue;
                    }
                    MeetOfJoins next;
                    for (const auto& lhs : acc) {
                        for (const auto& rhs : part) {
                            JoinWords merged = lhs;
                            merged.insert(merged.end(), rhs.begin(), rhs.end());
                            next.push_back(std::move(merged));
                        }
                    }
                    acc = std::move(next);
                    check(count_words(acc));
                }
                return acc;
            }
            case Term::Kind::mul: {
                // (/\ A)(/\ B) = /\_{i,j} A_i B_j ; (\/ w)(\/ v) = \/ wv
                MeetOfJoins acc{JoinWords{GroupWord{}}};
                for (const auto& a : t->args) {
                    MeetOfJoins part = to_cnf(a);
                    MeetOfJoins next;
                    for (const auto& lhs : acc) {
                        for (const auto& rhs : part) {
                            JoinWords merged;
                            merged.reserve(lhs.size() * rhs.size());
                            for (const auto& w : lhs) {
                                for (const auto& v : rhs) merged.push_back(concat(w, v));
                            }
                            next.push_back(std::move(merged));
                        }
                    }
                    acc = std::move(next);
                    check(count_words(acc));
                }
                return acc;
            }
            default: return {JoinWords{leaf(t)}};
        }
    }

    // join of meets of joins of words; meets are not distributed over joins
    JoinOfMeets to_jmj(const TermPtr& t) {
        switch (t->kind) {
            case Term::Kind::join: {
                JoinOfMeets out;
                for (const auto& a : t->args) {
                    JoinOfMeets part = to_jmj(a);
                    out.insert(out.end(), part.begin(), part.end());
                }
                check(count_words(out));
                return out;
            }
            case Term::Kind::meet: {
                // (\/ X_k) /\ (\/ Y_l) = \/_{k,l} (X_k /\ Y_l)
                JoinOfMeets acc;
                bool first = true;
                for (const auto& a : t->args) {
                    JoinOfMeets part = to_jmj(a);
                    if (first) {
                        acc = std::move(part);
                        first = false;
                        continue;
                    }
                    JoinOfMeets next;
                    for (const auto& lhs : acc) {
                        for (const auto& rhs : part) {
                            MeetOfJoins merged = lhs;
                            merged.insert(merged.end(), rhs.begin(), rhs.end());
                            next.push_back(std::move(merged));
                        }
                    }
                    acc = std::move(next);
                    check(count_words(acc));
                }
                return acc;
            }
            case Term::Kind::mul: {
                JoinOfMeets acc{MeetOfJoins{JoinWords{GroupWord{}}}};
                for (const auto& a : t->args) {
                    JoinOfMeets part = to_jmj(a);
                    JoinOfMeets next;
                    for (const auto& lhs : acc) {
                        for (const auto& rhs : part) {
                            // (/\ A_i)(/\ B_j) = /\_{i,j} A_i B_j
                            MeetOfJoins merged;
                            for (const auto& ai : lhs) {
                                for (const auto& bj : rhs) {
                                    JoinWords jw;
                                    jw.reserve(ai.size() * bj.size());
                                    for (const auto& w : ai) {
                                        for (const auto& v : bj) jw.push_back(concat(w, v));
                                    }
                                    merged.push_back(std::move(jw));
                                }
                            }
                            next.push_back(std::move(merged));
                        }
                    }
                    acc = std::move(next);
                    check(count_words(acc));
                }
                return acc;
            }
            default: return {MeetOfJoins{JoinWords{leaf(t)}}};
        }
    }

  private:
    TranslateBudget budget_;

    static GroupWord leaf(const TermPtr& t) {
        return group_word_from_term(t); // var, inv(var), or e
    }

    void check(std::size_t words) const {
        if (words > budget_.max_words) {
            throw BudgetError("lattice normalization exceeded the term budget");
        }
    }
};

GroupWord suffixed(const GroupWord& w, const GroupWord& suffix) { return concat(w, suffix); }

// append `suffix` to every leaf word
void suffix_block(MeetOfJoins& block, const GroupWord& suffix) {
    for (auto& jw : block) {
        for (auto& w : jw) w = suffixed(w, suffix);
    }
}

void prefix_block(MeetOfJoins& block, const GroupWord& prefix) {
    for (auto& jw : block) {
        for (auto& w : jw) w = concat(prefix, w);
    }
}

// iterated meet-splitting: e <= u \/ (A_1 /\ ... /\ A_m) becomes
// e <= u \/ A_1 y_1 \/ A_2 y_1^-1 y_2 \/ ... \/ A_m y_1^-1 ... y_{m-1},
// with joins inside the A_l distributed over the suffix.
void split_meet_block(const MeetOfJoins& block, FreshVars& fresh,
                      std::vector<GroupWord>& joinands) {
    std::size_t m = block.size();
    if (m == 1) {
        joinands.insert(joinands.end(), block[0].begin(), block[0].end());
        return;
    }
    GroupWord inv_prefix; // y_1^-1 ... y_{l-1}^-1
    for (std::size_t l = 0; l < m; ++l) {
        GroupWord suffix = inv_prefix;
        if (l + 1 < m) {
            Letter yl{fresh.next(), 1};
            suffix = concat(suffix, GroupWord{{yl}});
            inv_prefix = concat(inv_prefix, GroupWord{{Letter{yl.var, -1}}});
        }
        for (const auto& w : block[l]) joinands.push_back(concat(w, suffix));
    }
}

bool is_unit_word(const MeetOfJoins& f) {
    return f.size() == 1 && f[0].size() == 1 && f[0][0].empty();
}

} // namespace

BasicReductionResult to_basic_inequations(const Statement& st, const TranslateBudget& budget) {
    check_signature(st.lhs, Sig::lgroup);
    check_signature(st.rhs, Sig::lgroup);
    std::vector<std::pair<TermPtr, TermPtr>> sides;
    if (st.equation) {
        sides = {{st.lhs, st.rhs}, {st.rhs, st.lhs}};
    } else {
        sides = {{st.lhs, st.rhs}};
    }

    FreshVars fresh(statement_vars(st));
    BasicReductionResult out;

    for (const auto& [l, r] : sides) {
        // keep inequations that already have basic shape
        try {
            Statement ineq{false, l, r, st.sig};
            out.outputs.push_back(as_basic(ineq));
            continue;
        } catch (const Error&) {
        }

        LatticeNormalizer norm(budget);
        MeetOfJoins left = norm.to_cnf(push_inverses(l, 1));
        JoinOfMeets right = norm.to_jmj(push_inverses(r, 1));

        JoinOfMeets blocks;
        if (is_unit_word(left)) {
            blocks = std::move(right);
        } else if (left.size() == 1 && left[0].size() == 1) {
            // single word w: e <= R w^-1
            GroupWord winv = inverse(left[0][0]);
            for (auto& block : right) suffix_block(block, winv);
            blocks = std::move(right);
        } else {
            // product-splitting: e <= R y \/ y^-1 L^-1
            Letter y{fresh.next(), 1};
            GroupWord wy{{y}};
            GroupWord wyinv{{Letter{y.var, -1}}};
            for (auto& block : right) suffix_block(block, wy);
            blocks = std::move(right);
            // L^-1 = \/_i /\_j w_ij^-1 for L = /\_i \/_j w_ij
            for (const auto& jw : left) {
                MeetOfJoins block;
                block.reserve(jw.size());
                for (const auto& w : jw) block.push_back(JoinWords{inverse(w)});
                prefix_block(block, wyinv);
                blocks.push_back(std::move(block));
            }
        }

        std::vector<GroupWord> joinands;
        for (const auto& block : blocks) split_meet_block(block, fresh, joinands);
        if (joinands.empty()) throw Error("internal: empty joinand list");
        out.outputs.push_back(BasicInequation{MonoidWord{}, std::move(joinands)});
    }

    out.fresh_vars = fresh.produced();
    return out;
}

TermPtr simplify_zero(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::var:
        case Term::Kind::unit:
        case Term::Kind::zero: return t;
        case Term::Kind::mul: {
            std::vector<TermPtr> args;
            args.reserve(t->args.size());
            for (const auto& a : t->args) {
                TermPtr s = simplify_zero(a);
                if (s->kind == Term::Kind::zero) return t_zero();
                if (s->kind != Term::Kind::unit) args.push_back(std::move(s));
            }
            return t_mul(std::move(args)); // empty product collapses to e
        }
        case Term::Kind::join: {
            std::vector<TermPtr> args;
            for (const auto& a : t->args) {
                TermPtr s = simplify_zero(a);
                if (s->kind != Term::Kind::zero) args.push_back(std::move(s));
            }
            if (args.empty()) return t_zero();
            return t_join(std::move(args));
        }
        default: throw SignatureError("expected a semiring0 term, got " + to_string(t));
    }
}

std::optional<TermPtr> strip_unit(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::var: return t;
        case Term::Kind::unit: return std::nullopt;
        case Term::Kind::mul: {
            std::vector<TermPtr> args;
            for (const auto& a : t->args) {
                if (auto s = strip_unit(a)) args.push_back(std::move(*s));
            }
            if (args.empty()) return std::nullopt;
            return t_mul(std::move(args));
        }
        case Term::Kind::join: {
            std::vector<TermPtr> args;
            for (const auto& a : t->args) {
                auto s = strip_unit(a);
                if (!s) {
                    throw Error("no e-free form: bare e joinand in " + to_string(t));
                }
                args.push_back(std::move(*s));
            }
            return t_join(std::move(args));
        }
        default: throw SignatureError("expected a semiring term, got " + to_string(t));
    }
}

UnitFreeWrapResult wrap_unit_free(const SimpleInequation& e) {
    FreshVars fresh(vars_of(e));
    std::string x = fresh.next();
    MonoidWord prefix{{x}};
    UnitFreeWrapResult out;
    out.fresh_var = x;
    out.result.lhs = concat(prefix, e.lhs);
    out.result.rhs.reserve(e.rhs.size());
    for (const auto& t : e.rhs) out.result.rhs.push_back(concat(prefix, t));
    return out;
}

} // namespace isf
