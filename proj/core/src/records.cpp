#include "isf/records.hpp"

namespace isf {

using nlohmann::json;

json to_json(const Diagram& d) {
    json maps = json::object();
    for (const auto& [var, pairs] : d.maps) {
        json list = json::array();
        for (auto [a, b] : pairs) list.push_back(json::array({a, b}));
        maps[var] = std::move(list);
    }
    return json{{"points", d.num_points},
                {"base", d.base},
                {"maps", std::move(maps)},
                {"traces", d.traces}};
}

Diagram diagram_from_json(const json& j) {
    Diagram d;
    d.num_points = j.at("points").get<int>();
    d.base = j.at("base").get<int>();
    for (const auto& [var, pairs] : j.at("maps").items()) {
        auto& list = d.maps[var];
        for (const auto& pr : pairs) {
            list.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
        }
    }
    d.traces = j.at("traces").get<std::vector<std::vector<int>>>();
    return d;
}

json to_json(const SearchStats& s) {
    return json{{"nodes", s.nodes}, {"seconds", s.seconds}};
}

json to_json(const Certificate& c) {
    if (std::holds_alternative<std::monostate>(c)) return nullptr;
    if (const auto* d = std::get_if<DiagramCertificate>(&c)) {
        return json{{"kind", "diagram"},
                    {"inequation", to_string(d->inequation)},
                    {"diagram", to_json(d->diagram)}};
    }
    if (const auto* i = std::get_if<IntegerCertificate>(&c)) {
        return json{{"kind", "integers"},
                    {"inequation", to_string(i->inequation)},
                    {"assignment", i->assignment}};
    }
    const auto& a = std::get<AlgebraCertificate>(c);
    return json{{"kind", "algebra"}, {"algebra", a.algebra}, {"assignment", a.assignment}};
}

json to_json(const Verdict& v) {
    return json{{"status", v.valid ? "valid" : "invalid"},
                {"certificate", to_json(v.certificate)},
                {"stats", to_json(v.stats)}};
}

json to_json(const OrderVerdict& v) {
    json words = json::array();
    for (const auto& w : v.reduced) words.push_back(to_string(w));
    return json{{"exists", v.exists},
                {"reduced_words", std::move(words)},
                {"certificate", to_json(v.inner.certificate)},
                {"stats", to_json(v.inner.stats)}};
}

json to_json(const TranslationRecord& r) {
    return json{{"input", r.input},
                {"output", r.output},
                {"fresh_vars", r.fresh_vars},
                {"size_in", r.size_in},
                {"size_out", r.size_out}};
}

} // namespace isf
