#include "isf/decide.hpp"

#include <chrono>

#include "search.hpp"

namespace isf {

const char* decide_class_name(DecideClass c) {
    switch (c) {
        case DecideClass::lgroup: return "lgroup";
        case DecideClass::dlmonoid: return "dlmonoid";
        case DecideClass::semifield: return "semifield";
        case DecideClass::semifield_efree: return "semifield_efree";
        case DecideClass::semifield0: return "semifield0";
        case DecideClass::commutative: return "commutative";
    }
    return "?";
}

DecideClass decide_class_from_name(const std::string& name) {
    for (DecideClass c : {DecideClass::lgroup, DecideClass::dlmonoid, DecideClass::semifield,
                          DecideClass::semifield_efree, DecideClass::semifield0,
                          DecideClass::commutative}) {
        if (name == decide_class_name(c)) return c;
    }
    throw Error("unknown class: " + name);
}

Sig decide_class_signature(DecideClass c) {
    switch (c) {
        case DecideClass::lgroup:
        case DecideClass::dlmonoid: return Sig::lgroup;
        case DecideClass::semifield0: return Sig::semiring0;
        default: return Sig::semiring;
    }
}

namespace {

class Timer {
  public:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// diagram for an abelian countermodel: every variable acts as translation
// by its assigned integer, so trace positions are partial sums
Diagram translation_diagram(const std::vector<GroupWord>& words, const IntAssignment& a) {
    std::set<long long> positions{0};
    for (const GroupWord& w : words) {
        long long pos = 0;
        for (const Letter& l : w.letters) {
            pos += l.sign * a.at(l.var);
            positions.insert(pos);
        }
    }
    std::vector<long long> sorted(positions.begin(), positions.end());
    auto rank = [&](long long p) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin());
    };

    Diagram d;
    d.num_points = static_cast<int>(sorted.size());
    d.base = rank(0);
    for (const GroupWord& w : words) {
        long long pos = 0;
        std::vector<int> trace{d.base};
        for (const Letter& l : w.letters) {
            long long next = pos + l.sign * a.at(l.var);
            std::pair<int, int> pr = l.sign > 0 ? std::pair{rank(pos), rank(next)}
                                                : std::pair{rank(next), rank(pos)};
            auto& pairs = d.maps[l.var];
            if (std::find(pairs.begin(), pairs.end(), pr) == pairs.end()) pairs.push_back(pr);
            pos = next;
            trace.push_back(rank(pos));
        }
        d.traces.push_back(std::move(trace));
    }
    for (auto& [var, pairs] : d.maps) std::sort(pairs.begin(), pairs.end());
    return d;
}

Verdict checked_invalid(const BasicInequation& e, Diagram d, SearchStats stats) {
    std::string reason;
    if (!verify_diagram(d, e, &reason)) {
        throw Error("internal: certificate failed self-check: " + reason);
    }
    Verdict v;
    v.valid = false;
    v.certificate = DiagramCertificate{e, std::move(d)};
    v.stats = stats;
    return v;
}

} // namespace

Verdict decide_lgroup(const BasicInequation& e, const DecideOptions& opts) {
    Timer timer;
    std::vector<GroupWord> words = joinand_words(e);
    for (const GroupWord& w : words) {
        if (w.empty()) {
            Verdict v;
            v.stats.seconds = timer.elapsed();
            return v; // some t_i s^-1 reduces to e, so s <= \/ t_i everywhere
        }
    }
    if (opts.tropical_shortcut) {
        std::optional<IntAssignment> witness;
        bool shortcut_ok = true;
        try {
            witness = tropical_refutation(e);
        } catch (const BudgetError&) {
            shortcut_ok = false; // fall through to the complete search
        }
        if (shortcut_ok && witness) {
            SearchStats stats{0, 0};
            Verdict v = checked_invalid(e, translation_diagram(words, *witness), stats);
            v.stats.seconds = timer.elapsed();
            return v;
        }
    }
    detail::SearchResult result = detail::search_diagram(words, opts.max_points, opts.max_nodes);
    SearchStats stats{result.nodes, 0};
    if (result.found) {
        Verdict v = checked_invalid(e, std::move(result.diagram), stats);
        v.stats.seconds = timer.elapsed();
        return v;
    }
    Verdict v;
    v.stats = stats;
    v.stats.seconds = timer.elapsed();
    return v;
}

Verdict decide_tropical(const BasicInequation& e, const DecideOptions&) {
    Timer timer;
    Verdict v;
    if (auto witness = tropical_refutation(e)) {
        v.valid = false;
        v.certificate = IntegerCertificate{e, *witness};
    }
    v.stats.seconds = timer.elapsed();
    return v;
}

namespace {

Verdict merge_stats(Verdict inner, const SearchStats& acc, const Timer& timer) {
    inner.stats.nodes += acc.nodes;
    inner.stats.seconds = timer.elapsed();
    return inner;
}

Verdict decide_over_lgroup_parts(const std::vector<BasicInequation>& parts,
                                 const DecideOptions& opts, const Timer& timer) {
    SearchStats acc;
    for (const auto& part : parts) {
        Verdict v = decide_lgroup(part, opts);
        if (!v.valid) return merge_stats(std::move(v), acc, timer);
        acc.nodes += v.stats.nodes;
    }
    Verdict v;
    v.stats = acc;
    v.stats.seconds = timer.elapsed();
    return v;
}

bool contains_unit(const TermPtr& t) {
    if (t->kind == Term::Kind::unit) return true;
    for (const auto& a : t->args) {
        if (contains_unit(a)) return true;
    }
    return false;
}

bool contains_inv(const TermPtr& t) {
    if (t->kind == Term::Kind::inv) return true;
    for (const auto& a : t->args) {
        if (contains_inv(a)) return true;
    }
    return false;
}

Verdict invalid_in_b0(const Statement& st, Assignment assignment, const Timer& timer) {
    SatResult check = satisfies(two_element_zero_semifield(), st, assignment);
    if (check.holds) throw Error("internal: B0 witness failed self-check");
    Verdict v;
    v.valid = false;
    v.certificate = AlgebraCertificate{"B0", std::move(assignment)};
    v.stats.seconds = timer.elapsed();
    return v;
}

Verdict decide_zero_semifield(const Statement& st, const DecideOptions& opts, const Timer& timer) {
    TermPtr l = simplify_zero(st.lhs);
    TermPtr r = simplify_zero(st.rhs);
    bool lz = l->kind == Term::Kind::zero;
    bool rz = r->kind == Term::Kind::zero;

    if (lz && rz) return Verdict{};            // 0 = 0 / 0 <= 0
    if (!st.equation && lz) return Verdict{};  // 0 <= t
    if (lz || rz) {
        // t = 0, 0 = t, or t <= 0 with t a semiring term: the all-e
        // assignment separates in the two-element 0-semifield
        Assignment all_e;
        for (const auto& x : statement_vars(st)) all_e[x] = 0; // element e of B0
        return invalid_in_b0(st, std::move(all_e), timer);
    }

    Statement reduced{st.equation, l, r, Sig::semiring};
    SearchStats acc;
    for (const SimpleInequation& part : to_simple_inequations(reduced)) {
        auto regular = right_regularize(part);
        if (!regular) {
            // every joinand dropped: send its extra variables to 0 and the
            // left side to e
            Assignment witness;
            auto left = word_vars(part.lhs);
            for (const auto& x : statement_vars(st)) witness[x] = left.count(x) ? 0 : 1;
            Verdict v = invalid_in_b0(st, std::move(witness), timer);
            v.stats.nodes = acc.nodes;
            return v;
        }
        Verdict v = decide_lgroup(to_basic(*regular), opts);
        if (!v.valid) return merge_stats(std::move(v), acc, timer);
        acc.nodes += v.stats.nodes;
    }
    Verdict v;
    v.stats = acc;
    v.stats.seconds = timer.elapsed();
    return v;
}

} // namespace

Verdict decide_statement(const Statement& st, DecideClass cls, const DecideOptions& opts) {
    Timer timer;
    Sig sig = decide_class_signature(cls);
    check_signature(st.lhs, sig);
    check_signature(st.rhs, sig);

    switch (cls) {
        case DecideClass::dlmonoid:
            if (contains_inv(st.lhs) || contains_inv(st.rhs)) {
                throw SignatureError("distributive l-monoid statements must be inverse-free");
            }
            [[fallthrough]];
        case DecideClass::lgroup: {
            BasicReductionResult parts = to_basic_inequations(st, opts.translate);
            return decide_over_lgroup_parts(parts.outputs, opts, timer);
        }
        case DecideClass::semifield_efree:
            if (contains_unit(st.lhs) || contains_unit(st.rhs)) {
                throw SignatureError("e-free statements must not contain e");
            }
            [[fallthrough]];
        case DecideClass::semifield: {
            std::vector<BasicInequation> parts;
            for (const SimpleInequation& e : to_simple_inequations(st)) {
                parts.push_back(to_basic(e));
            }
            return decide_over_lgroup_parts(parts, opts, timer);
        }
        case DecideClass::semifield0: return decide_zero_semifield(st, opts, timer);
        case DecideClass::commutative: {
            for (const SimpleInequation& e : to_simple_inequations(st)) {
                Verdict v = decide_tropical(to_basic(e), opts);
                if (!v.valid) {
                    v.stats.seconds = timer.elapsed();
                    return v;
                }
            }
            Verdict v;
            v.stats.seconds = timer.elapsed();
            return v;
        }
    }
    throw Error("unreachable");
}

} // namespace isf
