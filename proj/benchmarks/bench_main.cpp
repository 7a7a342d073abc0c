#include <benchmark/benchmark.h>

#include "isf/corpus.hpp"
#include "isf/decide.hpp"
#include "isf/parser.hpp"
#include "isf/translate.hpp"

namespace {

using namespace isf;

void BM_parse(benchmark::State& state) {
    const std::string text = "x * (y \\/ z)^2 * x <= e \\/ x^3 * y \\/ z * z * y";
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_statement(text, Sig::semiring));
    }
}
BENCHMARK(BM_parse);

void BM_decide_witness_family(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Statement st = parse_statement("x <= e \\/ x^" + std::to_string(n), Sig::semiring);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide_statement(st, DecideClass::semifield));
    }
}
BENCHMARK(BM_decide_witness_family)->DenseRange(2, 6);

void BM_decide_basic_corpus(benchmark::State& state) {
    CorpusParams p;
    p.seed = 7;
    p.count = 50;
    p.vars = 3;
    p.joinands = 3;
    p.max_len = static_cast<int>(state.range(0));
    auto corpus = gen_basic(p);
    for (auto _ : state) {
        for (const auto& e : corpus) {
            benchmark::DoNotOptimize(decide_lgroup(e));
        }
    }
}
BENCHMARK(BM_decide_basic_corpus)->Arg(4)->Arg(6)->Arg(8);

void BM_inverse_elimination(benchmark::State& state) {
    CorpusParams p;
    p.seed = 3;
    p.count = 50;
    p.vars = 3;
    p.joinands = 3;
    p.max_len = 6;
    auto corpus = gen_basic(p);
    for (auto _ : state) {
        for (const auto& e : corpus) {
            benchmark::DoNotOptimize(eliminate_inverses(e));
        }
    }
}
BENCHMARK(BM_inverse_elimination);

void BM_decide_star_translated(benchmark::State& state) {
    CorpusParams p;
    p.seed = 7;
    p.count = 20;
    p.vars = 3;
    p.joinands = 3;
    p.max_len = 6;
    std::vector<BasicInequation> translated;
    for (const auto& e : gen_basic(p)) {
        translated.push_back(to_basic(eliminate_inverses(e).result));
    }
    for (auto _ : state) {
        for (const auto& e : translated) {
            benchmark::DoNotOptimize(decide_lgroup(e));
        }
    }
}
BENCHMARK(BM_decide_star_translated);

// e <= w \/ w^-1 is valid for every w; proving it exercises the
// propagation chain across the full word length
void BM_decide_word_inverse_pair(benchmark::State& state) {
    int len = static_cast<int>(state.range(0));
    std::vector<Letter> letters;
    const char* vars[] = {"x", "y", "z"};
    for (int k = 0; k < len; ++k) {
        letters.push_back(Letter{vars[k % 3], (k * 7 + 3) % 5 < 2 ? -1 : 1});
    }
    GroupWord w = make_group_word(std::move(letters));
    BasicInequation e{MonoidWord{}, {w, inverse(w)}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide_lgroup(e));
    }
}
BENCHMARK(BM_decide_word_inverse_pair)->Arg(8)->Arg(16)->Arg(32);

void BM_tropical(benchmark::State& state) {
    CorpusParams p;
    p.seed = 5;
    p.count = 100;
    p.vars = 4;
    p.joinands = 4;
    p.max_len = 8;
    auto corpus = gen_basic(p);
    for (auto _ : state) {
        for (const auto& e : corpus) {
            benchmark::DoNotOptimize(tropical_refutation(e));
        }
    }
}
BENCHMARK(BM_tropical);

} // namespace

BENCHMARK_MAIN();
