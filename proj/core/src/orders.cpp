#include "isf/orders.hpp"

#include <map>

namespace isf {

OrderVerdict group_right_order_exists(const std::vector<GroupWord>& words,
                                      const DecideOptions& opts) {
    if (words.empty()) throw Error("empty word list");
    OrderVerdict out;
    out.reduced = words;
    out.inner = decide_lgroup(BasicInequation{MonoidWord{}, words}, opts);
    out.exists = !out.inner.valid;
    return out;
}

OrderVerdict monoid_right_order_exists(
    const std::vector<std::pair<MonoidWord, MonoidWord>>& pairs, const DecideOptions& opts) {
    if (pairs.empty()) throw Error("empty pair list");
    std::vector<GroupWord> words;
    words.reserve(pairs.size());
    bool degenerate = false;
    for (const auto& [s, t] : pairs) {
        GroupWord g = concat(to_group(t), inverse(to_group(s)));
        if (g.empty()) degenerate = true; // s < s is impossible
        words.push_back(std::move(g));
    }
    if (degenerate) {
        OrderVerdict out;
        out.reduced = std::move(words);
        out.exists = false;
        return out;
    }
    return group_right_order_exists(words, opts);
}

std::vector<GroupWord> embed_rank2(const std::vector<GroupWord>& words) {
    std::map<std::string, GroupWord> images;
    std::vector<std::string> order;
    for (const GroupWord& w : words) {
        for (const Letter& l : w.letters) {
            if (!images.count(l.var)) {
                order.push_back(l.var);
                long long j = static_cast<long long>(order.size());
                // [x1, x2^j] = x1^-1 x2^-j x1 x2^j
                std::vector<Letter> c;
                c.push_back(Letter{"x1", -1});
                for (long long k = 0; k < j; ++k) c.push_back(Letter{"x2", -1});
                c.push_back(Letter{"x1", 1});
                for (long long k = 0; k < j; ++k) c.push_back(Letter{"x2", 1});
                images.emplace(l.var, GroupWord{std::move(c)});
            }
        }
    }
    std::vector<GroupWord> out;
    out.reserve(words.size());
    for (const GroupWord& w : words) {
        GroupWord image;
        for (const Letter& l : w.letters) {
            const GroupWord& c = images.at(l.var);
            image = concat(image, l.sign > 0 ? c : inverse(c));
        }
        out.push_back(std::move(image));
    }
    return out;
}

namespace {

long long fold_nonzero(long long k) {
    if (k == 0) throw Error("pair_index is undefined at 0");
    return k > 0 ? 2 * k - 2 : -2 * k - 1;
}

long long unfold_nonzero(long long a) {
    return a % 2 == 0 ? a / 2 + 1 : -(a + 1) / 2;
}

} // namespace

long long pair_index(long long k, long long l) {
    long long a = fold_nonzero(k);
    long long b = fold_nonzero(l);
    return (a + b) * (a + b + 1) / 2 + b;
}

std::pair<long long, long long> pair_index_inverse(long long n) {
    if (n < 0) throw Error("pair_index_inverse is undefined on negatives");
    long long w = 0;
    while ((w + 1) * (w + 2) / 2 <= n) ++w;
    long long b = n - w * (w + 1) / 2;
    long long a = w - b;
    return {unfold_nonzero(a), unfold_nonzero(b)};
}

} // namespace isf
