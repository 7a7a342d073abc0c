#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isf/inequations.hpp"
#include "isf/term.hpp"

namespace isf {

// Seeded corpus generation; identical parameters produce identical output
// on every platform (mt19937_64 with modulo draws).
struct CorpusParams {
    std::uint64_t seed = 1;
    int count = 10;
    int vars = 3;      // variables drawn from x, y, z, u, v, w
    int joinands = 3;  // maximum joinands per inequation
    int max_len = 4;   // maximum word length
};

enum class CorpusKind {
    simple,          // simple inequations over monoid words
    leftreg_simple,  // simple and left-regular by construction
    basic,           // basic inequations with group-word joinands
    wedge,           // lgroup statements in meet-of-joins <= join-of-meets shape
    semiring,        // random semiring statements (= and <=)
    semiring0,       // random semiring0 statements with 0 leaves
};

CorpusKind corpus_kind_from_name(const std::string& name);
const char* corpus_kind_name(CorpusKind k);

std::vector<SimpleInequation> gen_simple(const CorpusParams& p, bool force_left_regular);
std::vector<BasicInequation> gen_basic(const CorpusParams& p);
std::vector<Statement> gen_statements(const CorpusParams& p, CorpusKind kind);

// right-order query fuel
std::vector<std::vector<GroupWord>> gen_group_queries(const CorpusParams& p);
std::vector<std::vector<std::pair<MonoidWord, MonoidWord>>> gen_monoid_pair_queries(
    const CorpusParams& p);

// one statement per line, in the statement grammar
std::string render_corpus(const CorpusParams& p, CorpusKind kind);

} // namespace isf
