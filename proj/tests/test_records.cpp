#include <doctest.h>

#include "isf/corpus.hpp"
#include "isf/parser.hpp"
#include "isf/records.hpp"
#include "isf/translate.hpp"

using namespace isf;

TEST_CASE("diagram JSON round-trips and re-verifies") {
    BasicInequation e = as_basic(parse_statement("e <= x \\/ y * x", Sig::lgroup));
    Verdict v = decide_lgroup(e);
    REQUIRE_FALSE(v.valid);
    const auto& cert = std::get<DiagramCertificate>(v.certificate);

    nlohmann::json j = to_json(cert.diagram);
    Diagram back = diagram_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.num_points == cert.diagram.num_points);
    CHECK(back.maps == cert.diagram.maps);
    CHECK(back.traces == cert.diagram.traces);
    CHECK(verify_diagram(back, e));
}

TEST_CASE("verdict JSON carries status, certificate, and stats") {
    Verdict v = decide_lgroup(as_basic(parse_statement("e <= x", Sig::lgroup)));
    nlohmann::json j = to_json(v);
    CHECK(j.at("status") == "invalid");
    CHECK(j.at("certificate").at("kind") == "diagram");
    CHECK(j.at("stats").contains("nodes"));
}

TEST_CASE("translated statements re-parse to the same inequations") {
    CorpusParams p;
    p.seed = 83;
    p.count = 30;
    p.vars = 3;
    p.joinands = 3;
    p.max_len = 5;
    for (const BasicInequation& e : gen_basic(p)) {
        auto star = eliminate_inverses(e);
        Statement reparsed = parse_statement(to_string(star.result), Sig::semiring);
        // duplicates may collapse under the Join invariant; the statement view
        // must agree either way
        CHECK(to_string(as_simple(reparsed)) == to_string(as_simple(to_statement(star.result))));
    }
}

TEST_CASE("printed statements re-parse to equal terms") {
    for (CorpusKind kind : {CorpusKind::semiring, CorpusKind::wedge, CorpusKind::semiring0}) {
        CorpusParams p;
        p.seed = 89;
        p.count = 50;
        p.vars = 3;
        p.max_len = 4;
        Sig sig = kind == CorpusKind::wedge
                      ? Sig::lgroup
                      : (kind == CorpusKind::semiring0 ? Sig::semiring0 : Sig::semiring);
        for (const Statement& st : gen_statements(p, kind)) {
            Statement back = parse_statement(to_string(st), sig);
            CHECK(term_equal(back.lhs, st.lhs));
            CHECK(term_equal(back.rhs, st.rhs));
            CHECK(back.equation == st.equation);
        }
    }
}

TEST_CASE("corpus generation is deterministic") {
    CorpusParams p;
    p.seed = 97;
    p.count = 25;
    p.vars = 2;
    p.max_len = 4;
    CHECK(render_corpus(p, CorpusKind::simple) == render_corpus(p, CorpusKind::simple));
    CHECK(render_corpus(p, CorpusKind::wedge) == render_corpus(p, CorpusKind::wedge));
    CorpusParams q = p;
    q.seed = 98;
    CHECK(render_corpus(p, CorpusKind::simple) != render_corpus(q, CorpusKind::simple));
}

TEST_CASE("generated corpora parse in their signatures") {
    CorpusParams p;
    p.seed = 90;
    p.count = 10;
    p.vars = 2;
    p.max_len = 4;
    std::string text = render_corpus(p, CorpusKind::simple);
    int lines = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        CHECK_NOTHROW(parse_statement(text.substr(start, end - start), Sig::semiring));
        ++lines;
        start = end + 1;
    }
    CHECK(lines == 10);
}
