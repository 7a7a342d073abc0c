#include "isf/diagram.hpp"

namespace isf {

std::vector<GroupWord> joinand_words(const BasicInequation& e) {
    GroupWord sinv = inverse(to_group(e.lhs));
    std::vector<GroupWord> out;
    out.reserve(e.rhs.size());
    for (const auto& t : e.rhs) out.push_back(concat(t, sinv));
    return out;
}

namespace {

bool refuse(std::string* reason, const std::string& why) {
    if (reason) *reason = why;
    return false;
}

} // namespace

bool verify_diagram(const Diagram& d, const BasicInequation& e, std::string* reason) {
    std::vector<GroupWord> words = joinand_words(e);

    if (d.num_points < 1) return refuse(reason, "no points");
    if (d.base < 0 || d.base >= d.num_points) return refuse(reason, "base out of range");
    std::size_t budget = 1;
    for (const auto& w : words) budget += w.length();
    if (static_cast<std::size_t>(d.num_points) > budget) {
        return refuse(reason, "more points than 1 + sum of traced word lengths");
    }

    for (const auto& [var, pairs] : d.maps) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto [a, b] = pairs[i];
            if (a < 0 || a >= d.num_points || b < 0 || b >= d.num_points) {
                return refuse(reason, "map pair out of range for " + var);
            }
            for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                auto [c, dd] = pairs[j];
                if (a == c && b != dd) return refuse(reason, "map for " + var + " not functional");
                if (b == dd && a != c) return refuse(reason, "map for " + var + " not injective");
                if ((a < c) != (b < dd) && a != c) {
                    return refuse(reason, "map for " + var + " not order-preserving");
                }
            }
        }
    }

    auto image = [&](const std::string& var, int p) -> int {
        auto it = d.maps.find(var);
        if (it == d.maps.end()) return -1;
        for (auto [a, b] : it->second) {
            if (a == p) return b;
        }
        return -1;
    };
    auto preimage = [&](const std::string& var, int p) -> int {
        auto it = d.maps.find(var);
        if (it == d.maps.end()) return -1;
        for (auto [a, b] : it->second) {
            if (b == p) return a;
        }
        return -1;
    };

    if (d.traces.size() != words.size()) return refuse(reason, "trace count mismatch");
    for (std::size_t i = 0; i < words.size(); ++i) {
        const GroupWord& w = words[i];
        const auto& trace = d.traces[i];
        if (trace.size() != w.length() + 1) {
            return refuse(reason, "trace " + std::to_string(i) + " has wrong length");
        }
        if (trace[0] != d.base) return refuse(reason, "trace " + std::to_string(i) + " does not start at base");
        for (std::size_t k = 0; k < w.length(); ++k) {
            const Letter& l = w.letters[k];
            int expected = l.sign > 0 ? image(l.var, trace[k]) : preimage(l.var, trace[k]);
            if (expected < 0 || expected != trace[k + 1]) {
                return refuse(reason, "trace " + std::to_string(i) + " step " + std::to_string(k) +
                                          " does not follow the map for " + l.var);
            }
        }
        if (trace.back() >= d.base) {
            return refuse(reason, "trace " + std::to_string(i) + " does not end below the base");
        }
    }
    return true;
}

} // namespace isf
