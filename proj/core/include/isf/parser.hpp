#pragma once

#include <string>
#include <variant>

#include "isf/term.hpp"

namespace isf {

// Grammar (ASCII):
//
//   stmt    := term ("=" | "<=") term
//   term    := lattice
//   lattice := prod ( ("\/" prod)* | ("/\" prod)* )
//   prod    := factor ( "*" factor )*
//   factor  := atom ( "^" integer )?
//   atom    := ident | "e" | "0" | "(" term ")"
//   ident   := [a-z][a-z0-9_]*
//
// Mixing \/ and /\ at one level requires parentheses. Negative exponents are
// accepted only in signatures containing ^-1. Identifiers beginning with '_'
// are reserved for generated fresh variables; the parser accepts them so that
// translated output can be read back.
TermPtr parse_term(const std::string& text, Sig sig);
Statement parse_statement(const std::string& text, Sig sig);

// Either a full statement or, when no relation symbol occurs, a bare term.
std::variant<Statement, TermPtr> parse_statement_or_term(const std::string& text, Sig sig);

} // namespace isf
