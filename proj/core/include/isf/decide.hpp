#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "isf/diagram.hpp"
#include "isf/models.hpp"
#include "isf/translate.hpp"
#include "isf/tropical.hpp"

namespace isf {

// The algebra classes a statement can be decided over.
enum class DecideClass { lgroup, dlmonoid, semifield, semifield_efree, semifield0, commutative };

const char* decide_class_name(DecideClass c);
DecideClass decide_class_from_name(const std::string& name);
// the signature statements of this class are parsed in
Sig decide_class_signature(DecideClass c);

struct DecideOptions {
    std::uint64_t max_nodes = 1'000'000;
    int max_points = 256;
    std::uint64_t max_evals = kDefaultMaxEvals;
    // certify abelian-refutable instances via translations before searching
    bool tropical_shortcut = true;
    InverseEliminationOptions star;
    TranslateBudget translate;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0;
};

// invalidity certificates
struct DiagramCertificate {
    BasicInequation inequation;
    Diagram diagram;
};
struct IntegerCertificate {
    BasicInequation inequation;
    IntAssignment assignment; // strict violation over <Z, max, +, 0>
};
struct AlgebraCertificate {
    std::string algebra; // a named finite algebra (e.g. "B0")
    Assignment assignment;
};

using Certificate =
    std::variant<std::monostate, DiagramCertificate, IntegerCertificate, AlgebraCertificate>;

struct Verdict {
    bool valid = true;
    Certificate certificate; // always present when !valid
    SearchStats stats;
};

// Validity over the variety of l-groups (equivalently, restricted to
// semiring statements, over the class of idempotent semifields): rewrite
// s <= \/ t_i to e <= \/ t_i s^-1 and reduce; an empty joinand means valid;
// otherwise search exhaustively for a diagram. Invalid verdicts carry a
// diagram accepted by verify_diagram.
Verdict decide_lgroup(const BasicInequation& e, const DecideOptions& opts = {});

// Validity over <Z, max, +, 0>, equivalently over every commutative
// idempotent semifield. Invalid verdicts carry an integer assignment.
Verdict decide_tropical(const BasicInequation& e, const DecideOptions& opts = {});

// Per-class pipeline; see decide_class_signature for input signatures.
Verdict decide_statement(const Statement& st, DecideClass cls, const DecideOptions& opts = {});

} // namespace isf
