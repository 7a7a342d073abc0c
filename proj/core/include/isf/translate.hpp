#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isf/inequations.hpp"
#include "isf/term.hpp"

namespace isf {

// An idempotent semiring satisfies the statement iff it satisfies every
// returned simple inequation: split = into two <=, distribute * over \/ on
// both sides, then split joins on the left.
std::vector<SimpleInequation> to_simple_inequations(const Statement& st);

// every variable of the left side occurs in some joinand
bool is_left_regular(const SimpleInequation& e);

// Drop every joinand containing a variable that does not occur in the left
// side; nullopt when all joinands drop. Equisatisfiable with the input over
// idempotent semifields and idempotent 0-semirings.
std::optional<SimpleInequation> right_regularize(const SimpleInequation& e);

// s <= t1 \/ ... \/ tn  |->  {t1 = t2, ..., t1 = tn} => t1 = s
Quasiequation to_quasiequation(const SimpleInequation& e);

// Fresh variables are drawn deterministically as _f1, _f2, ... starting
// above any _f<k> already present in the input.
class FreshVars {
  public:
    explicit FreshVars(const std::set<std::string>& used);
    std::string next();
    const std::vector<std::string>& produced() const { return produced_; }

  private:
    unsigned long counter_ = 1;
    std::vector<std::string> produced_;
};

struct InverseEliminationOptions {
    // Use the joinand x y u x s instead of the derived x y u y s when
    // rewriting a joinand u x^-1 v. Off by default; the two variants differ
    // in one letter and only the default passes the equivalidity suite.
    bool literal_joinand = false;
};

struct InverseEliminationResult {
    SimpleInequation result;
    std::vector<std::string> fresh_vars;
    std::size_t steps = 0; // equals the inverse count of the input
};

// The recursive inverse-elimination translation: locate the first joinand
// containing an inverse, write it as u x^-1 v with u the maximal
// inverse-free prefix, and replace the inequation s <= ... \/ u x^-1 v \/ ...
// by x y s <= x y t1 \/ ... \/ x y u y s \/ v \/ ... for a fresh y. The
// result is equivalid over any variety of l-groups with the
// product-splitting property and has size at most 7 S^2 + S.
InverseEliminationResult eliminate_inverses(const BasicInequation& e,
                                            const InverseEliminationOptions& opts = {});

struct TranslateBudget {
    std::size_t max_words = 200'000; // leaf words during lattice normalization
};

struct BasicReductionResult {
    std::vector<BasicInequation> outputs;
    std::vector<std::string> fresh_vars;
};

// Reduce an lgroup statement to basic inequations, equivalid over the
// variety of l-groups: split = into two <=; if an inequation is already
// basic it is kept as is; otherwise both sides are normalized to lattice
// forms over group words (budget-guarded), the left side is moved to the
// right (with one product-splitting step when it is a proper lattice
// combination), and meet blocks are eliminated by iterated meet-splitting
// with fresh variables. Inputs already in meet-of-joins <= join-of-meets
// shape with size S produce output of size at most 2 S^2.
BasicReductionResult to_basic_inequations(const Statement& st, const TranslateBudget& budget = {});

// Bottom-up application of x*0 -> 0, 0*x -> 0, 0 \/ x -> x, x \/ 0 -> x.
// The result is the constant 0 or a 0-free semiring term; linear time.
TermPtr simplify_zero(const TermPtr& t);

// Delete e factors from a semiring term; nullopt when the whole term is an
// empty product. Throws when a bare e joinand survives (no e-free form).
std::optional<TermPtr> strip_unit(const TermPtr& t);

struct UnitFreeWrapResult {
    SimpleInequation result; // every word nonempty, hence e-free
    std::string fresh_var;
};

// x s <= x t1 \/ ... \/ x tn for a fresh x: an idempotent semifield
// satisfies the input iff its e-free reduct satisfies the wrapped form.
UnitFreeWrapResult wrap_unit_free(const SimpleInequation& e);

} // namespace isf
