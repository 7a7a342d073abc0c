#include <doctest.h>

#include "isf/corpus.hpp"
#include "isf/orders.hpp"
#include "isf/parser.hpp"

using namespace isf;

namespace {

GroupWord gw(const std::string& text) { return group_word_from_term(parse_term(text, Sig::group)); }
MonoidWord mw(const std::string& text) {
    return monoid_word_from_term(parse_term(text, Sig::monoid));
}

} // namespace

TEST_CASE("group right-order existence") {
    CHECK(group_right_order_exists({gw("x")}).exists);
    CHECK_FALSE(group_right_order_exists({gw("x"), gw("x^-1")}).exists);
    CHECK_FALSE(group_right_order_exists({gw("e")}).exists);
    OrderVerdict comm = group_right_order_exists({gw("x * y * x^-1 * y^-1")});
    CHECK(comm.exists);
    const auto& cert = std::get<DiagramCertificate>(comm.inner.certificate);
    CHECK(verify_diagram(cert.diagram, cert.inequation));
    CHECK_THROWS_AS(group_right_order_exists({}), Error);
}

TEST_CASE("monoid right-order existence") {
    CHECK(monoid_right_order_exists({{mw("x * y"), mw("y * x")}}).exists);
    CHECK_FALSE(monoid_right_order_exists({{mw("x"), mw("x")}}).exists);
    CHECK(monoid_right_order_exists({{mw("e"), mw("x")}, {mw("e"), mw("y")}}).exists);
    // x < y and y < x cannot both hold
    CHECK_FALSE(monoid_right_order_exists({{mw("x"), mw("y")}, {mw("y"), mw("x")}}).exists);
}

TEST_CASE("sign convention guard: w and w^-1 are never jointly positive") {
    CorpusParams p;
    p.seed = 71;
    p.count = 40;
    p.vars = 3;
    p.joinands = 1;
    p.max_len = 5;
    for (const auto& query : gen_group_queries(p)) {
        const GroupWord& w = query[0];
        CHECK(group_right_order_exists({w}).exists);
        CHECK_FALSE(group_right_order_exists({w, inverse(w)}).exists);
    }
}

TEST_CASE("rank-2 commutator embedding") {
    std::vector<GroupWord> image = embed_rank2({gw("y")});
    REQUIRE(image.size() == 1);
    CHECK(to_string(image[0]) == "x1^-1 * x2^-1 * x1 * x2");

    std::vector<GroupWord> two = embed_rank2({gw("y * z")});
    CHECK(to_string(two[0]) == "x1^-1 * x2^-1 * x1 * x2 * x1^-1 * x2^-2 * x1 * x2^2");

    CHECK(embed_rank2({gw("e")}) == std::vector<GroupWord>{GroupWord{}});

    // the image of w^-1 is the inverse of the image of w
    std::vector<GroupWord> both = embed_rank2({gw("x * y"), gw("y^-1 * x^-1")});
    CHECK(both[1] == inverse(both[0]));
}

TEST_CASE("embedding preserves right-order existence") {
    CorpusParams p;
    p.seed = 73;
    p.count = 40;
    p.vars = 3;
    p.joinands = 3;
    p.max_len = 4;
    for (const auto& query : gen_group_queries(p)) {
        CHECK(group_right_order_exists(query).exists ==
              group_right_order_exists(embed_rank2(query)).exists);
    }
}

TEST_CASE("pair_index examples and round trips") {
    CHECK(pair_index(1, 1) == 0);
    CHECK(pair_index_inverse(0) == std::pair<long long, long long>{1, 1});
    CHECK_THROWS_AS(pair_index(0, 1), Error);
    CHECK_THROWS_AS(pair_index(1, 0), Error);

    for (long long k = -20; k <= 20; ++k) {
        for (long long l = -20; l <= 20; ++l) {
            if (k == 0 || l == 0) continue;
            auto [k2, l2] = pair_index_inverse(pair_index(k, l));
            CHECK(k2 == k);
            CHECK(l2 == l);
        }
    }
    // injectivity over the window
    std::set<long long> seen;
    for (long long k = -10; k <= 10; ++k) {
        for (long long l = -10; l <= 10; ++l) {
            if (k == 0 || l == 0) continue;
            CHECK(seen.insert(pair_index(k, l)).second);
        }
    }
}
