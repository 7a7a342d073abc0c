#include "isf/term.hpp"

#include <algorithm>

namespace isf {

const char* sig_name(Sig s) {
    switch (s) {
        case Sig::monoid: return "monoid";
        case Sig::group: return "group";
        case Sig::semiring: return "semiring";
        case Sig::semiring0: return "semiring0";
        case Sig::lgroup: return "lgroup";
    }
    return "?";
}

Sig sig_from_name(const std::string& name) {
    if (name == "monoid") return Sig::monoid;
    if (name == "group") return Sig::group;
    if (name == "semiring") return Sig::semiring;
    if (name == "semiring0") return Sig::semiring0;
    if (name == "lgroup") return Sig::lgroup;
    throw Error("unknown signature: " + name);
}

bool sig_allows_inv(Sig s) { return s == Sig::group || s == Sig::lgroup; }
bool sig_allows_join(Sig s) { return s == Sig::semiring || s == Sig::semiring0 || s == Sig::lgroup; }
bool sig_allows_meet(Sig s) { return s == Sig::lgroup; }
bool sig_allows_zero(Sig s) { return s == Sig::semiring0; }

bool sig_subset(Sig a, Sig b) {
    auto ok = [&](bool in_a, bool in_b) { return !in_a || in_b; };
    return ok(sig_allows_inv(a), sig_allows_inv(b)) && ok(sig_allows_join(a), sig_allows_join(b)) &&
           ok(sig_allows_meet(a), sig_allows_meet(b)) && ok(sig_allows_zero(a), sig_allows_zero(b));
}

TermPtr t_var(std::string name) {
    return std::make_shared<Term>(Term::Kind::var, std::move(name), std::vector<TermPtr>{});
}

TermPtr t_unit() {
    static const TermPtr e = std::make_shared<Term>(Term::Kind::unit, "", std::vector<TermPtr>{});
    return e;
}

TermPtr t_zero() {
    static const TermPtr z = std::make_shared<Term>(Term::Kind::zero, "", std::vector<TermPtr>{});
    return z;
}

TermPtr t_inv(TermPtr arg) {
    return std::make_shared<Term>(Term::Kind::inv, "", std::vector<TermPtr>{std::move(arg)});
}

namespace {

std::vector<TermPtr> flatten(Term::Kind kind, std::vector<TermPtr> args) {
    std::vector<TermPtr> out;
    out.reserve(args.size());
    for (auto& a : args) {
        if (a->kind == kind) {
            out.insert(out.end(), a->args.begin(), a->args.end());
        } else {
            out.push_back(std::move(a));
        }
    }
    return out;
}

std::vector<TermPtr> dedup(std::vector<TermPtr> args) {
    std::vector<TermPtr> out;
    for (auto& a : args) {
        bool seen = false;
        for (const auto& b : out) {
            if (term_equal(a, b)) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(std::move(a));
    }
    return out;
}

TermPtr build_nary(Term::Kind kind, std::vector<TermPtr> args, bool dedup_args) {
    args = flatten(kind, std::move(args));
    if (dedup_args) args = dedup(std::move(args));
    if (args.empty()) return t_unit();
    if (args.size() == 1) return args[0];
    return std::make_shared<Term>(kind, "", std::move(args));
}

} // namespace

TermPtr t_mul(std::vector<TermPtr> args) { return build_nary(Term::Kind::mul, std::move(args), false); }
TermPtr t_join(std::vector<TermPtr> args) { return build_nary(Term::Kind::join, std::move(args), true); }
TermPtr t_meet(std::vector<TermPtr> args) { return build_nary(Term::Kind::meet, std::move(args), true); }

TermPtr t_pow(const TermPtr& base, long long exp) {
    if (exp == 0) return t_unit();
    TermPtr factor = exp > 0 ? base : t_inv(base);
    std::vector<TermPtr> copies(static_cast<std::size_t>(exp > 0 ? exp : -exp), factor);
    return t_mul(std::move(copies));
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    if (a->kind == Term::Kind::var) return a->name == b->name;
    if (a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (!term_equal(a->args[i], b->args[i])) return false;
    }
    return true;
}

std::size_t term_size(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::var:
        case Term::Kind::unit:
        case Term::Kind::zero: return 1;
        case Term::Kind::inv: return 1 + term_size(t->args[0]);
        default: {
            std::size_t total = t->args.size() - 1;
            for (const auto& a : t->args) total += term_size(a);
            return total;
        }
    }
}

void collect_vars(const TermPtr& t, std::set<std::string>& out) {
    if (t->kind == Term::Kind::var) {
        out.insert(t->name);
        return;
    }
    for (const auto& a : t->args) collect_vars(a, out);
}

std::set<std::string> term_vars(const TermPtr& t) {
    std::set<std::string> out;
    collect_vars(t, out);
    return out;
}

namespace {

const char* offending_symbol(const TermPtr& t, Sig sig) {
    switch (t->kind) {
        case Term::Kind::zero:
            if (!sig_allows_zero(sig)) return "0";
            break;
        case Term::Kind::inv:
            if (!sig_allows_inv(sig)) return "^-1";
            break;
        case Term::Kind::join:
            if (!sig_allows_join(sig)) return "\\/";
            break;
        case Term::Kind::meet:
            if (!sig_allows_meet(sig)) return "/\\";
            break;
        default: break;
    }
    for (const auto& a : t->args) {
        if (const char* sym = offending_symbol(a, sig)) return sym;
    }
    return nullptr;
}

} // namespace

bool in_signature(const TermPtr& t, Sig sig) { return offending_symbol(t, sig) == nullptr; }

void check_signature(const TermPtr& t, Sig sig) {
    if (const char* sym = offending_symbol(t, sig)) {
        throw SignatureError(std::string("symbol ") + sym + " is not in signature " + sig_name(sig));
    }
}

Sig minimal_signature(const TermPtr& t) {
    struct Flags {
        bool inv = false, join = false, meet = false, zero = false;
    } f;
    auto scan = [&](auto&& self, const TermPtr& u) -> void {
        switch (u->kind) {
            case Term::Kind::inv: f.inv = true; break;
            case Term::Kind::join: f.join = true; break;
            case Term::Kind::meet: f.meet = true; break;
            case Term::Kind::zero: f.zero = true; break;
            default: break;
        }
        for (const auto& a : u->args) self(self, a);
    };
    scan(scan, t);
    if (f.zero) {
        if (f.inv || f.meet) throw SignatureError("term mixes 0 with group/lattice symbols");
        return Sig::semiring0;
    }
    if (f.meet || (f.inv && f.join)) return Sig::lgroup;
    if (f.inv) return Sig::group;
    if (f.join) return Sig::semiring;
    return Sig::monoid;
}

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& subst, Sig sig) {
    switch (t->kind) {
        case Term::Kind::var: {
            auto it = subst.find(t->name);
            if (it == subst.end()) return t;
            check_signature(it->second, sig);
            return it->second;
        }
        case Term::Kind::unit:
        case Term::Kind::zero: return t;
        case Term::Kind::inv: return t_inv(substitute(t->args[0], subst, sig));
        default: {
            std::vector<TermPtr> args;
            args.reserve(t->args.size());
            for (const auto& a : t->args) args.push_back(substitute(a, subst, sig));
            if (t->kind == Term::Kind::mul) return t_mul(std::move(args));
            if (t->kind == Term::Kind::join) return t_join(std::move(args));
            return t_meet(std::move(args));
        }
    }
}

namespace {

// precedence: lattice < mul < inv/atom
enum { PREC_LATTICE = 0, PREC_MUL = 1, PREC_ATOM = 2 };

void print_term(const TermPtr& t, int parent_prec, std::string& out);

// x * x * x prints as x^3, x^-1 * x^-1 as x^-2
void print_mul(const TermPtr& t, std::string& out) {
    const auto& args = t->args;
    std::size_t i = 0;
    while (i < args.size()) {
        std::size_t j = i + 1;
        while (j < args.size() && term_equal(args[i], args[j])) ++j;
        std::size_t run = j - i;
        if (i > 0) out += " * ";
        const TermPtr& a = args[i];
        bool inv_var = a->kind == Term::Kind::inv && a->args[0]->kind == Term::Kind::var;
        if (a->kind == Term::Kind::var) {
            out += run > 1 ? a->name + "^" + std::to_string(run) : a->name;
        } else if (inv_var) {
            out += a->args[0]->name + "^-" + std::to_string(run);
        } else {
            for (std::size_t k = 0; k < run; ++k) {
                if (k > 0) out += " * ";
                print_term(a, PREC_MUL, out);
            }
        }
        i = j;
    }
}

void print_term(const TermPtr& t, int parent_prec, std::string& out) {
    switch (t->kind) {
        case Term::Kind::var: out += t->name; return;
        case Term::Kind::unit: out += 'e'; return;
        case Term::Kind::zero: out += '0'; return;
        case Term::Kind::inv: {
            const TermPtr& c = t->args[0];
            if (c->kind == Term::Kind::var) {
                out += c->name + "^-1";
            } else if (c->kind == Term::Kind::unit) {
                out += "e^-1";
            } else {
                out += '(';
                print_term(c, PREC_LATTICE, out);
                out += ")^-1";
            }
            return;
        }
        case Term::Kind::mul: {
            bool wrap = parent_prec > PREC_MUL;
            if (wrap) out += '(';
            print_mul(t, out);
            if (wrap) out += ')';
            return;
        }
        case Term::Kind::join:
        case Term::Kind::meet: {
            const char* op = t->kind == Term::Kind::join ? " \\/ " : " /\\ ";
            bool wrap = parent_prec > PREC_LATTICE;
            if (wrap) out += '(';
            for (std::size_t i = 0; i < t->args.size(); ++i) {
                if (i > 0) out += op;
                // operands of \/ and /\ are products; a nested lattice node
                // of the other flavour gets parenthesized via PREC_MUL
                print_term(t->args[i], PREC_MUL, out);
            }
            if (wrap) out += ')';
            return;
        }
    }
}

} // namespace

std::string to_string(const TermPtr& t) {
    std::string out;
    print_term(t, PREC_LATTICE, out);
    return out;
}

std::string to_string(const Statement& st) {
    return to_string(st.lhs) + (st.equation ? " = " : " <= ") + to_string(st.rhs);
}

std::size_t statement_size(const Statement& st) { return term_size(st.lhs) + term_size(st.rhs); }

std::set<std::string> statement_vars(const Statement& st) {
    std::set<std::string> out;
    collect_vars(st.lhs, out);
    collect_vars(st.rhs, out);
    return out;
}

Statement as_equation(const Statement& st) {
    if (st.equation) return st;
    if (!sig_allows_join(st.sig)) {
        throw SignatureError("inequation requires a signature containing \\/");
    }
    return Statement{true, t_join({st.lhs, st.rhs}), st.rhs, st.sig};
}

} // namespace isf
