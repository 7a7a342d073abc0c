#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isf/inequations.hpp"
#include "isf/term.hpp"

namespace isf {

inline constexpr std::uint64_t kDefaultMaxEvals = 10'000'000;

// Finite monoid given by its multiplication table; associativity and the
// unit laws are checked on construction.
struct FiniteMonoid {
    std::string name;
    int size = 0;
    int unit = 0;
    std::vector<int> table; // row-major size*size

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * size + b]; }
};

FiniteMonoid make_monoid(std::string name, int size, int unit, std::vector<int> table);
FiniteMonoid cyclic_monoid(int n);                                     // Z_n
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);
FiniteMonoid trivial_monoid();
// two elements {e, a} with a*a = a; the smallest non-cancellative monoid
FiniteMonoid noncancellative2();

// The fixed monoid catalog used by the property suites: Z1..Z8, Z2xZ3,
// and the non-cancellative two-element monoid.
const std::vector<FiniteMonoid>& monoid_catalog();

// cad = cbd implies a = b; for finite monoids, left and right cancellation
// are checked (equivalent to the four-variable form, which tests verify)
bool is_cancellative(const FiniteMonoid& m);

// Operation tables for a finite algebra over (a fragment of) the lgroup /
// semiring0 signatures. Laws are NOT asserted on construction; use the
// check_* functions below.
struct FiniteAlgebra {
    std::string name;
    int size = 0;
    int unit = 0;
    std::vector<int> mul;
    std::vector<int> join;
    std::vector<int> meet;     // empty when the signature has no meet
    std::optional<int> zero;   // least element interpreting 0
    std::optional<int> top;    // informational (flat extensions)

    bool has_meet() const { return !meet.empty(); }
    int op_mul(int a, int b) const { return mul[static_cast<std::size_t>(a) * size + b]; }
    int op_join(int a, int b) const { return join[static_cast<std::size_t>(a) * size + b]; }
    int op_meet(int a, int b) const { return meet[static_cast<std::size_t>(a) * size + b]; }
};

// M plus an absorbing top: a * b = top unless both lie in M, a \/ b = a if
// a = b else top.
FiniteAlgebra flat_extension(const FiniteMonoid& m);

// Adjoin a least element 0 with x*0 = 0*x = 0 and 0 \/ x = x.
FiniteAlgebra extend_with_zero(const FiniteAlgebra& a);

// The two-element idempotent 0-semifield {0 < e}.
FiniteAlgebra two_element_zero_semifield();

// O_k: all order-preserving self-maps of a k-chain under composition,
// pointwise \/ and /\, unit the identity map. 2 <= k <= 4.
FiniteAlgebra endo_chain_algebra(int k);

struct LawReport {
    bool ok = true;
    std::string failed_law;     // empty when ok
    std::vector<int> witness;   // element tuple violating the law
};

LawReport check_idempotent_semiring(const FiniteAlgebra& a);
LawReport check_distributive_lmonoid(const FiniteAlgebra& a);
LawReport check_zero_semiring(const FiniteAlgebra& a); // semiring + 0 least, absorbing

using Assignment = std::map<std::string, int>;

struct SatResult {
    bool holds = true;
    Assignment witness; // a violating assignment when !holds (lexicographically least)
};

// Exhaustive evaluation over all |A|^#vars assignments.
SatResult satisfies(const FiniteAlgebra& a, const Statement& st,
                    std::uint64_t max_evals = kDefaultMaxEvals);
SatResult satisfies(const FiniteAlgebra& a, const Statement& st, const Assignment& fixed);
// quasiequations evaluate in the multiplicative monoid of the algebra
SatResult satisfies(const FiniteAlgebra& a, const Quasiequation& q,
                    std::uint64_t max_evals = kDefaultMaxEvals);

// Quasiequation checks; words must be positive for a bare monoid.
SatResult satisfies_quasi(const FiniteMonoid& m, const Quasiequation& q,
                          std::uint64_t max_evals = kDefaultMaxEvals);
// Z_n with inverses allowed (group evaluation mod n).
SatResult satisfies_quasi_cyclic(int n, const Quasiequation& q,
                                 std::uint64_t max_evals = kDefaultMaxEvals);
// <Z, +, 0>: the conclusion's exponent vector must lie in the rational span
// of the premise vectors (exact arithmetic).
bool satisfies_quasi_integers(const Quasiequation& q);

// x <= e \/ x^n together with the flat extension of Z_n and the assignment
// refuting it there (n >= 2); n = 1 yields the degenerate x <= e \/ x.
struct WitnessFamily {
    Statement inequation;
    FiniteAlgebra algebra;
    std::optional<Assignment> refutation; // x -> generator; absent when degenerate
    bool degenerate = false;
};

WitnessFamily witness_family(int n);

} // namespace isf
