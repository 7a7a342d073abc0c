#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "isf/error.hpp"

namespace isf {

// The five signatures, as symbol sets:
//
//   monoid    {*, e}
//   group     {*, e, ^-1}
//   semiring  {*, e, \/}
//   semiring0 {*, e, \/, 0}
//   lgroup    {*, e, ^-1, \/, /\}
//
// monoid < group, monoid < semiring < semiring0, group|semiring < lgroup.
enum class Sig { monoid, group, semiring, semiring0, lgroup };

const char* sig_name(Sig s);
Sig sig_from_name(const std::string& name); // throws Error on unknown name

bool sig_allows_inv(Sig s);
bool sig_allows_join(Sig s);
bool sig_allows_meet(Sig s);
bool sig_allows_zero(Sig s);

// true when every symbol of `a` is also a symbol of `b`
bool sig_subset(Sig a, Sig b);

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term AST. Mul/Join/Meet are flattened n-ary nodes with arity >= 2;
// Join and Meet children are deduplicated up to structural equality. Use the
// t_* constructors below; they maintain these invariants.
class Term {
  public:
    enum class Kind { var, unit, zero, mul, join, meet, inv };

    Kind kind;
    std::string name;          // var nodes only
    std::vector<TermPtr> args; // mul/join/meet: >= 2 entries, inv: exactly 1

    Term(Kind k, std::string n, std::vector<TermPtr> a)
        : kind(k), name(std::move(n)), args(std::move(a)) {}
};

TermPtr t_var(std::string name);
TermPtr t_unit();
TermPtr t_zero();
TermPtr t_inv(TermPtr arg);
TermPtr t_mul(std::vector<TermPtr> args);  // flattens; {} -> e, {t} -> t
TermPtr t_join(std::vector<TermPtr> args); // flattens and deduplicates
TermPtr t_meet(std::vector<TermPtr> args);

// x^n as parser sugar: n-fold product, x^0 = e, x^-n = (x^-1)^n.
TermPtr t_pow(const TermPtr& base, long long exp);

bool term_equal(const TermPtr& a, const TermPtr& b);

// Total count of variable occurrences, constant occurrences, and operation
// symbol occurrences; an n-ary mul/join/meet counts as n-1 binary symbols.
std::size_t term_size(const TermPtr& t);

std::set<std::string> term_vars(const TermPtr& t);
void collect_vars(const TermPtr& t, std::set<std::string>& out);

bool in_signature(const TermPtr& t, Sig sig);
// throws SignatureError naming the offending symbol
void check_signature(const TermPtr& t, Sig sig);
// smallest signature containing every symbol of t
Sig minimal_signature(const TermPtr& t);

// Homomorphic replacement. Variables outside the map are left unchanged;
// every image must lie in `sig` (SignatureError otherwise).
TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& subst, Sig sig);

std::string to_string(const TermPtr& t);

// An equation s = t or an inequation s <= t; the latter is definitionally
// the equation s \/ t = t (see as_equation).
struct Statement {
    bool equation = true;
    TermPtr lhs, rhs;
    Sig sig = Sig::semiring;
};

std::string to_string(const Statement& st);
std::size_t statement_size(const Statement& st);
std::set<std::string> statement_vars(const Statement& st);

// s <= t rewritten as s \/ t = t; requires a join signature
Statement as_equation(const Statement& st);

} // namespace isf
