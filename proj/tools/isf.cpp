// isf: decide equations over l-groups, idempotent semifields, and their
// relatives; translate between the signatures; check finite models; answer
// right-order queries. One command per invocation; --json switches the
// human-readable rendering to one JSON record per line.
//
// Exit codes: 0 verdict/output produced, 1 parse or usage error, 2 budget
// exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "isf/corpus.hpp"
#include "isf/parser.hpp"
#include "isf/records.hpp"

using namespace isf;
using nlohmann::json;

namespace {

struct GlobalFlags {
    bool json = false;
    std::uint64_t max_nodes = 1'000'000;
    int max_points = 256;
    std::uint64_t max_evals = kDefaultMaxEvals;
    std::string command; // the full argv, for reproducible records
};

DecideOptions options_from(const GlobalFlags& g) {
    DecideOptions opts;
    opts.max_nodes = g.max_nodes;
    opts.max_points = g.max_points;
    opts.max_evals = g.max_evals;
    return opts;
}

void emit(const GlobalFlags& g, json record, const std::string& human) {
    if (g.json) {
        if (record.is_object()) record["command"] = g.command;
        std::cout << record.dump() << "\n";
    } else {
        std::cout << human << "\n";
    }
}

std::string render_verdict(const Verdict& v) {
    std::string out = v.valid ? "valid" : "invalid";
    if (const auto* d = std::get_if<DiagramCertificate>(&v.certificate)) {
        out += "\n  countermodel diagram: " + std::to_string(d->diagram.num_points) +
               " points, base " + std::to_string(d->diagram.base);
        for (const auto& [var, pairs] : d->diagram.maps) {
            out += "\n    " + var + ":";
            for (auto [a, b] : pairs) {
                out += " " + std::to_string(a) + "->" + std::to_string(b);
            }
        }
    } else if (const auto* i = std::get_if<IntegerCertificate>(&v.certificate)) {
        out += "\n  integer witness:";
        for (const auto& [var, val] : i->assignment) {
            out += " " + var + "=" + std::to_string(val);
        }
    } else if (const auto* a = std::get_if<AlgebraCertificate>(&v.certificate)) {
        out += "\n  refuted in " + a->algebra + " at:";
        for (const auto& [var, val] : a->assignment) {
            out += " " + var + "=" + std::to_string(val);
        }
    }
    out += "\n  (" + std::to_string(v.stats.nodes) + " nodes, " +
           std::to_string(v.stats.seconds) + " s)";
    return out;
}

FiniteAlgebra algebra_by_name(const std::string& spec) {
    if (spec.rfind("flat-zn:", 0) == 0) {
        return flat_extension(cyclic_monoid(std::stoi(spec.substr(8))));
    }
    if (spec.rfind("endo:", 0) == 0) return endo_chain_algebra(std::stoi(spec.substr(5)));
    if (spec == "flat-z2z3") {
        return flat_extension(direct_product(cyclic_monoid(2), cyclic_monoid(3)));
    }
    if (spec == "b0") return two_element_zero_semifield();
    throw Error("unknown algebra: " + spec + " (expected flat-zn:<n>, flat-z2z3, endo:<k>, b0)");
}

Sig algebra_signature(const FiniteAlgebra& a) {
    if (a.zero) return Sig::semiring0;
    if (a.has_meet()) return Sig::lgroup;
    return Sig::semiring;
}

// premises "l = r" separated by commas, then "=>", then the conclusion
Quasiequation parse_quasiequation(const std::string& text, Sig sig) {
    auto parse_eq = [&](const std::string& part) {
        Statement st = parse_statement(part, sig);
        if (!st.equation) throw Error("quasiequation parts must be equations: " + part);
        return std::make_pair(group_word_from_term(st.lhs), group_word_from_term(st.rhs));
    };
    Quasiequation q;
    std::size_t arrow = text.find("=>");
    std::string conclusion = text;
    if (arrow != std::string::npos) {
        std::string premises = text.substr(0, arrow);
        conclusion = text.substr(arrow + 2);
        std::size_t start = 0;
        while (start < premises.size()) {
            std::size_t comma = premises.find(',', start);
            std::string part = premises.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (part.find_first_not_of(" \t") != std::string::npos) {
                q.premises.push_back(parse_eq(part));
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    q.conclusion = parse_eq(conclusion);
    return q;
}

json algebra_tables(const FiniteAlgebra& a) {
    auto table = [&](const std::vector<int>& t) {
        json rows = json::array();
        for (int i = 0; i < a.size; ++i) {
            json row = json::array();
            for (int j = 0; j < a.size; ++j) row.push_back(t[static_cast<std::size_t>(i) * a.size + j]);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    json j{{"name", a.name}, {"size", a.size}, {"unit", a.unit},
           {"mul", table(a.mul)}, {"join", table(a.join)}};
    if (a.has_meet()) j["meet"] = table(a.meet);
    if (a.zero) j["zero"] = *a.zero;
    if (a.top) j["top"] = *a.top;
    return j;
}

int run_translate(const GlobalFlags& g, const std::string& mode, const std::string& input,
                  bool literal_star) {
    TranslationRecord rec;
    rec.input = input;
    std::vector<std::string> rendered;

    if (mode == "simple") {
        Statement st = parse_statement(input, Sig::semiring);
        rec.size_in = statement_size(st);
        for (const auto& e : to_simple_inequations(st)) {
            rendered.push_back(to_string(e));
            rec.size_out += size_of(e);
        }
    } else if (mode == "star") {
        BasicInequation e = as_basic(parse_statement(input, Sig::lgroup));
        rec.size_in = size_of(e);
        InverseEliminationOptions opts;
        opts.literal_joinand = literal_star;
        auto result = eliminate_inverses(e, opts);
        rendered.push_back(to_string(result.result));
        rec.size_out = size_of(result.result);
        rec.fresh_vars = result.fresh_vars;
    } else if (mode == "basic") {
        Statement st = parse_statement(input, Sig::lgroup);
        rec.size_in = statement_size(st);
        auto result = to_basic_inequations(st);
        for (const auto& e : result.outputs) {
            rendered.push_back(to_string(e));
            rec.size_out += size_of(e);
        }
        rec.fresh_vars = result.fresh_vars;
    } else if (mode == "quasi") {
        SimpleInequation e = as_simple(parse_statement(input, Sig::semiring));
        rec.size_in = size_of(e);
        Quasiequation q = to_quasiequation(e);
        rendered.push_back(to_string(q));
        rec.size_out = rec.size_in;
    } else if (mode == "efree") {
        SimpleInequation e = as_simple(parse_statement(input, Sig::semiring));
        rec.size_in = size_of(e);
        auto result = wrap_unit_free(e);
        rendered.push_back(to_string(result.result));
        rec.size_out = size_of(result.result);
        rec.fresh_vars = {result.fresh_var};
    } else if (mode == "zero") {
        TermPtr t = parse_term(input, Sig::semiring0);
        rec.size_in = term_size(t);
        TermPtr s = simplify_zero(t);
        rendered.push_back(to_string(s));
        rec.size_out = term_size(s);
    } else if (mode == "rightreg") {
        SimpleInequation e = as_simple(parse_statement(input, Sig::semiring));
        rec.size_in = size_of(e);
        if (auto r = right_regularize(e)) {
            rendered.push_back(to_string(*r));
            rec.size_out = size_of(*r);
        } else {
            rendered.push_back("(empty)");
        }
    } else {
        throw Error("unknown translation: " + mode);
    }

    rec.output = rendered;
    std::string human;
    for (const auto& line : rendered) {
        if (!human.empty()) human += "\n";
        human += line;
    }
    emit(g, to_json(rec), human);
    return 0;
}

int run_bench(const GlobalFlags& g, const std::string& path, const std::string& cls_name) {
    DecideClass cls = decide_class_from_name(cls_name);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    DecideOptions opts = options_from(g);

    std::string line;
    int count = 0, valid = 0, invalid = 0, errors = 0;
    double star_ratio_max = 0, basic_ratio_max = 0, total_seconds = 0;
    std::uint64_t total_nodes = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        ++count;
        json rec{{"input", line}};
        try {
            Statement st = parse_statement(line, decide_class_signature(cls));
            std::size_t size_in = statement_size(st);
            rec["size_in"] = size_in;
            if (cls == DecideClass::lgroup || cls == DecideClass::dlmonoid) {
                auto basic = to_basic_inequations(st, opts.translate);
                std::size_t basic_size = 0;
                for (const auto& b : basic.outputs) basic_size += size_of(b);
                double ratio = static_cast<double>(basic_size) /
                               (2.0 * static_cast<double>(size_in) * static_cast<double>(size_in));
                basic_ratio_max = std::max(basic_ratio_max, ratio);
                rec["basic_size"] = basic_size;
                rec["basic_bound_ratio"] = ratio;
                std::size_t star_size = 0;
                double sr = 0;
                for (const auto& b : basic.outputs) {
                    auto star = eliminate_inverses(b);
                    star_size += size_of(star.result);
                    std::size_t s = size_of(b);
                    sr = std::max(sr, static_cast<double>(size_of(star.result)) /
                                          static_cast<double>(7 * s * s + s));
                }
                star_ratio_max = std::max(star_ratio_max, sr);
                rec["star_size"] = star_size;
                rec["star_bound_ratio"] = sr;
            }
            Verdict v = decide_statement(st, cls, opts);
            (v.valid ? valid : invalid)++;
            total_nodes += v.stats.nodes;
            total_seconds += v.stats.seconds;
            rec["status"] = v.valid ? "valid" : "invalid";
            rec["stats"] = to_json(v.stats);
        } catch (const Error& e) {
            ++errors;
            rec["error"] = e.what();
        }
        if (g.json) std::cout << rec.dump() << "\n";
    }

    json summary{{"instances", count},    {"valid", valid},
                 {"invalid", invalid},    {"errors", errors},
                 {"total_nodes", total_nodes}, {"total_seconds", total_seconds},
                 {"max_star_bound_ratio", star_ratio_max},
                 {"max_basic_bound_ratio", basic_ratio_max}};
    std::string human = "instances: " + std::to_string(count) + "  valid: " + std::to_string(valid) +
                        "  invalid: " + std::to_string(invalid) + "  errors: " + std::to_string(errors) +
                        "\nnodes: " + std::to_string(total_nodes) + "  decide time: " +
                        std::to_string(total_seconds) + " s" +
                        "\nmax star ratio (vs 7S^2+S): " + std::to_string(star_ratio_max) +
                        "\nmax basic ratio (vs 2S^2): " + std::to_string(basic_ratio_max);
    emit(g, summary, human);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equational reasoning over l-groups and idempotent semifields"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalFlags g;
    app.add_flag("--json", g.json, "emit one JSON record per line");
    app.add_option("--max-nodes", g.max_nodes, "search node budget");
    app.add_option("--max-points", g.max_points, "diagram point budget");
    app.add_option("--max-evals", g.max_evals, "finite-model evaluation budget");

    std::string input, sig_name_opt = "semiring", cls_name = "semifield";

    auto* parse_cmd = app.add_subcommand("parse", "parse and reprint a statement or term");
    parse_cmd->add_option("statement", input)->required();
    parse_cmd->add_option("--sig", sig_name_opt, "signature (monoid|group|semiring|semiring0|lgroup)");

    auto* translate_cmd = app.add_subcommand("translate", "apply a syntactic translation");
    std::string mode;
    bool literal_star = false;
    translate_cmd->add_option("mode", mode, "simple|star|basic|quasi|efree|zero|rightreg")->required();
    translate_cmd->add_option("statement", input)->required();
    translate_cmd->add_flag("--literal-star", literal_star,
                            "use the x y u x s joinand variant in star");

    auto* decide_cmd = app.add_subcommand("decide", "decide a statement over a class");
    decide_cmd->add_option("--class", cls_name,
                           "lgroup|dlmonoid|semifield|semifield_efree|semifield0|commutative");
    decide_cmd->add_option("statement", input)->required();

    auto* model_cmd = app.add_subcommand("model", "finite-model checks");
    model_cmd->require_subcommand(1);
    std::string algebra_spec = "flat-zn:2", quasi_model = "Z";
    auto* model_check = model_cmd->add_subcommand("check", "evaluate a statement in an algebra");
    model_check->add_option("--algebra", algebra_spec, "flat-zn:<n>|flat-z2z3|endo:<k>|b0");
    model_check->add_option("statement", input)->required();
    auto* model_quasi = model_cmd->add_subcommand("quasi", "evaluate a quasiequation");
    model_quasi->add_option("--in", quasi_model, "Z or Zn:<n>");
    model_quasi->add_option("quasiequation", input)->required();
    auto* model_export = model_cmd->add_subcommand("export", "emit operation tables as JSON");
    model_export->add_option("--algebra", algebra_spec, "flat-zn:<n>|flat-z2z3|endo:<k>|b0");

    auto* order_cmd = app.add_subcommand("order", "right-order existence queries");
    order_cmd->require_subcommand(1);
    std::vector<std::string> order_args;
    auto* order_group = order_cmd->add_subcommand("group", "group words to be made positive");
    order_group->add_option("words", order_args)->required();
    auto* order_monoid = order_cmd->add_subcommand("monoid", "monoid constraints s<t");
    order_monoid->add_option("pairs", order_args)->required();

    auto* witness_cmd = app.add_subcommand("witness", "x <= e \\/ x^n with its flat(Z_n) refutation");
    int witness_n = 2;
    witness_cmd->add_option("--n", witness_n)->required();

    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded statement corpus");
    CorpusParams params;
    std::string kind_name = "simple", out_path;
    gen_cmd->add_option("--seed", params.seed);
    gen_cmd->add_option("--count", params.count);
    gen_cmd->add_option("--vars", params.vars)->check(CLI::Range(1, 6));
    gen_cmd->add_option("--joinands", params.joinands)->check(CLI::Range(1, 8));
    gen_cmd->add_option("--max-len", params.max_len)->check(CLI::Range(0, 12));
    gen_cmd->add_option("--kind", kind_name, "simple|leftreg|basic|wedge|semiring|semiring0");
    gen_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* bench_cmd = app.add_subcommand("bench", "decide a corpus file and report sizes/timings");
    std::string bench_path;
    bench_cmd->add_option("corpus", bench_path)->required();
    bench_cmd->add_option("--class", cls_name, "decide class for the corpus");

    for (int i = 0; i < argc; ++i) {
        if (i > 0) g.command += ' ';
        g.command += argv[i];
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        DecideOptions opts = options_from(g);

        if (parse_cmd->parsed()) {
            Sig sig = sig_from_name(sig_name_opt);
            auto result = parse_statement_or_term(input, sig);
            std::string text = std::holds_alternative<Statement>(result)
                                   ? to_string(std::get<Statement>(result))
                                   : to_string(std::get<TermPtr>(result));
            std::size_t size = std::holds_alternative<Statement>(result)
                                   ? statement_size(std::get<Statement>(result))
                                   : term_size(std::get<TermPtr>(result));
            emit(g, json{{"input", input}, {"parsed", text}, {"size", size}, {"signature", sig_name_opt}},
                 text + "  (size " + std::to_string(size) + ")");
            return 0;
        }
        if (translate_cmd->parsed()) return run_translate(g, mode, input, literal_star);
        if (decide_cmd->parsed()) {
            DecideClass cls = decide_class_from_name(cls_name);
            Statement st = parse_statement(input, decide_class_signature(cls));
            Verdict v = decide_statement(st, cls, opts);
            json rec = to_json(v);
            rec["input"] = input;
            rec["class"] = cls_name;
            emit(g, rec, render_verdict(v));
            return 0;
        }
        if (model_check->parsed()) {
            FiniteAlgebra a = algebra_by_name(algebra_spec);
            Statement st = parse_statement(input, algebra_signature(a));
            SatResult r = satisfies(a, st, g.max_evals);
            json rec{{"algebra", a.name}, {"input", input}, {"holds", r.holds}};
            std::string human = a.name + (r.holds ? " satisfies " : " refutes ") + input;
            if (!r.holds) {
                rec["witness"] = r.witness;
                human += " at";
                for (const auto& [var, val] : r.witness) {
                    human += " " + var + "=" + std::to_string(val);
                }
            }
            emit(g, rec, human);
            return 0;
        }
        if (model_quasi->parsed()) {
            Quasiequation q = parse_quasiequation(
                input, quasi_model == "Z" ? Sig::monoid : Sig::group);
            bool holds;
            json rec{{"input", input}, {"model", quasi_model}};
            if (quasi_model == "Z") {
                holds = satisfies_quasi_integers(q);
            } else if (quasi_model.rfind("Zn:", 0) == 0) {
                SatResult r = satisfies_quasi_cyclic(std::stoi(quasi_model.substr(3)), q, g.max_evals);
                holds = r.holds;
                if (!r.holds) rec["witness"] = r.witness;
            } else {
                throw Error("unknown model: " + quasi_model + " (expected Z or Zn:<n>)");
            }
            rec["holds"] = holds;
            emit(g, rec, std::string(holds ? "holds in " : "fails in ") + quasi_model);
            return 0;
        }
        if (model_export->parsed()) {
            json rec = algebra_tables(algebra_by_name(algebra_spec));
            std::cout << rec.dump(g.json ? -1 : 2) << "\n";
            return 0;
        }
        if (order_group->parsed()) {
            std::vector<GroupWord> words;
            for (const auto& text : order_args) {
                words.push_back(group_word_from_term(parse_term(text, Sig::group)));
            }
            OrderVerdict v = group_right_order_exists(words, opts);
            emit(g, to_json(v),
                 v.exists ? "a right order with these elements positive exists"
                          : "no right order makes all of these positive");
            return 0;
        }
        if (order_monoid->parsed()) {
            std::vector<std::pair<MonoidWord, MonoidWord>> pairs;
            for (const auto& text : order_args) {
                std::size_t lt = text.find('<');
                if (lt == std::string::npos) throw Error("expected s<t, got " + text);
                pairs.emplace_back(
                    monoid_word_from_term(parse_term(text.substr(0, lt), Sig::monoid)),
                    monoid_word_from_term(parse_term(text.substr(lt + 1), Sig::monoid)));
            }
            OrderVerdict v = monoid_right_order_exists(pairs, opts);
            emit(g, to_json(v),
                 v.exists ? "a right order satisfying the constraints exists"
                          : "no right order satisfies the constraints");
            return 0;
        }
        if (witness_cmd->parsed()) {
            WitnessFamily w = witness_family(witness_n);
            json rec{{"n", witness_n},
                     {"inequation", to_string(w.inequation)},
                     {"algebra", w.algebra.name},
                     {"degenerate", w.degenerate}};
            std::string human = to_string(w.inequation);
            if (w.degenerate) {
                human += "\n  degenerate: valid everywhere, refuted nowhere";
            } else {
                SatResult check = satisfies(w.algebra, w.inequation, *w.refutation);
                Verdict lg = decide_statement(w.inequation, DecideClass::semifield, opts);
                rec["refutation"] = *w.refutation;
                rec["refuted_in_algebra"] = !check.holds;
                rec["lgroup_valid"] = lg.valid;
                human += "\n  refuted in " + w.algebra.name + " at x=a: " +
                         (!check.holds ? "yes" : "NO") +
                         "\n  valid over l-groups: " + (lg.valid ? "yes" : "NO");
            }
            emit(g, rec, human);
            return 0;
        }
        if (gen_cmd->parsed()) {
            std::string corpus = render_corpus(params, corpus_kind_from_name(kind_name));
            if (out_path.empty()) {
                std::cout << corpus;
            } else {
                std::ofstream out(out_path);
                if (!out) throw Error("cannot write " + out_path);
                out << corpus;
            }
            return 0;
        }
        if (bench_cmd->parsed()) return run_bench(g, bench_path, cls_name);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
