#include "isf/models.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>

namespace isf {

using Rational = boost::multiprecision::cpp_rational;

FiniteMonoid make_monoid(std::string name, int size, int unit, std::vector<int> table) {
    if (size <= 0 || unit < 0 || unit >= size ||
        table.size() != static_cast<std::size_t>(size) * size) {
        throw Error("malformed monoid table: " + name);
    }
    for (int entry : table) {
        if (entry < 0 || entry >= size) throw Error("monoid table entry out of range: " + name);
    }
    FiniteMonoid m{std::move(name), size, unit, std::move(table)};
    for (int a = 0; a < size; ++a) {
        if (m.mul(m.unit, a) != a || m.mul(a, m.unit) != a) {
            throw Error(m.name + ": unit law fails");
        }
    }
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            for (int c = 0; c < size; ++c) {
                if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
                    throw Error(m.name + ": associativity fails");
                }
            }
        }
    }
    return m;
}

FiniteMonoid cyclic_monoid(int n) {
    if (n < 1) throw Error("cyclic_monoid: n must be positive");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
    return make_monoid("Z" + std::to_string(n), n, 0, std::move(table));
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
    int n = a.size * b.size;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    auto idx = [&](int x, int y) { return x * b.size + y; };
    for (int x1 = 0; x1 < a.size; ++x1) {
        for (int y1 = 0; y1 < b.size; ++y1) {
            for (int x2 = 0; x2 < a.size; ++x2) {
                for (int y2 = 0; y2 < b.size; ++y2) {
                    table[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    return make_monoid(a.name + "x" + b.name, n, idx(a.unit, b.unit), std::move(table));
}

FiniteMonoid trivial_monoid() { return cyclic_monoid(1); }

FiniteMonoid noncancellative2() {
    return make_monoid("NC2", 2, 0, {0, 1, 1, 1});
}

const std::vector<FiniteMonoid>& monoid_catalog() {
    static const std::vector<FiniteMonoid> catalog = [] {
        std::vector<FiniteMonoid> out;
        for (int n = 1; n <= 8; ++n) out.push_back(cyclic_monoid(n));
        out.push_back(direct_product(cyclic_monoid(2), cyclic_monoid(3)));
        out.push_back(noncancellative2());
        return out;
    }();
    return catalog;
}

bool is_cancellative(const FiniteMonoid& m) {
    for (int c = 0; c < m.size; ++c) {
        for (int a = 0; a < m.size; ++a) {
            for (int b = 0; b < m.size; ++b) {
                if (a != b && (m.mul(c, a) == m.mul(c, b) || m.mul(a, c) == m.mul(b, c))) {
                    return false;
                }
            }
        }
    }
    return true;
}

FiniteAlgebra flat_extension(const FiniteMonoid& m) {
    FiniteAlgebra a;
    a.name = "flat(" + m.name + ")";
    a.size = m.size + 1;
    a.unit = m.unit;
    a.top = m.size;
    int n = a.size;
    int top = m.size;
    a.mul.assign(static_cast<std::size_t>(n) * n, top);
    a.join.assign(static_cast<std::size_t>(n) * n, top);
    for (int x = 0; x < m.size; ++x) {
        for (int y = 0; y < m.size; ++y) a.mul[static_cast<std::size_t>(x) * n + y] = m.mul(x, y);
    }
    for (int x = 0; x < n; ++x) a.join[static_cast<std::size_t>(x) * n + x] = x;
    return a;
}

FiniteAlgebra extend_with_zero(const FiniteAlgebra& a) {
    if (a.zero) throw Error(a.name + " already has a zero");
    FiniteAlgebra b;
    b.name = a.name + "+0";
    b.size = a.size + 1;
    b.unit = a.unit;
    b.top = a.top;
    b.zero = a.size;
    int n = b.size;
    int z = a.size;
    b.mul.assign(static_cast<std::size_t>(n) * n, z);
    b.join.assign(static_cast<std::size_t>(n) * n, z);
    for (int x = 0; x < a.size; ++x) {
        for (int y = 0; y < a.size; ++y) {
            b.mul[static_cast<std::size_t>(x) * n + y] = a.op_mul(x, y);
            b.join[static_cast<std::size_t>(x) * n + y] = a.op_join(x, y);
        }
        b.join[static_cast<std::size_t>(x) * n + z] = x;
        b.join[static_cast<std::size_t>(z) * n + x] = x;
    }
    if (a.has_meet()) {
        b.meet.assign(static_cast<std::size_t>(n) * n, z);
        for (int x = 0; x < a.size; ++x) {
            for (int y = 0; y < a.size; ++y) {
                b.meet[static_cast<std::size_t>(x) * n + y] = a.op_meet(x, y);
            }
        }
    }
    return b;
}

FiniteAlgebra two_element_zero_semifield() {
    FiniteAlgebra a;
    a.name = "triv";
    a.size = 1;
    a.unit = 0;
    a.mul = {0};
    a.join = {0};
    FiniteAlgebra b = extend_with_zero(a);
    b.name = "B0";
    return b;
}

FiniteAlgebra endo_chain_algebra(int k) {
    if (k < 2 || k > 4) throw Error("endo_chain_algebra: k must be in 2..4");
    // enumerate order-preserving maps {0..k-1} -> {0..k-1} in lexicographic order
    std::vector<std::vector<int>> maps;
    std::vector<int> f(k, 0);
    while (true) {
        bool monotone = true;
        for (int i = 1; i < k; ++i) {
            if (f[i] < f[i - 1]) monotone = false;
        }
        if (monotone) maps.push_back(f);
        int i = k - 1;
        while (i >= 0 && f[i] == k - 1) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
    }
    int n = static_cast<int>(maps.size());
    auto index_of = [&](const std::vector<int>& g) {
        return static_cast<int>(std::lower_bound(maps.begin(), maps.end(), g) - maps.begin());
    };
    FiniteAlgebra a;
    a.name = "O" + std::to_string(k);
    a.size = n;
    a.mul.resize(static_cast<std::size_t>(n) * n);
    a.join.resize(static_cast<std::size_t>(n) * n);
    a.meet.resize(static_cast<std::size_t>(n) * n);
    std::vector<int> identity(k);
    for (int i = 0; i < k; ++i) identity[i] = i;
    a.unit = index_of(identity);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            std::vector<int> comp(k), jn(k), mt(k);
            for (int p = 0; p < k; ++p) {
                comp[p] = maps[y][maps[x][p]]; // apply x, then y
                jn[p] = std::max(maps[x][p], maps[y][p]);
                mt[p] = std::min(maps[x][p], maps[y][p]);
            }
            a.mul[static_cast<std::size_t>(x) * n + y] = index_of(comp);
            a.join[static_cast<std::size_t>(x) * n + y] = index_of(jn);
            a.meet[static_cast<std::size_t>(x) * n + y] = index_of(mt);
        }
    }
    return a;
}

namespace {

LawReport fail(std::string law, std::vector<int> witness) {
    return LawReport{false, std::move(law), std::move(witness)};
}

LawReport check_semiring_core(const FiniteAlgebra& a) {
    int n = a.size;
    for (int x = 0; x < n; ++x) {
        if (a.op_join(x, x) != x) return fail("x \\/ x = x", {x});
        if (a.op_mul(a.unit, x) != x || a.op_mul(x, a.unit) != x) return fail("unit law", {x});
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (a.op_join(x, y) != a.op_join(y, x)) return fail("\\/ commutativity", {x, y});
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (a.op_join(a.op_join(x, y), z) != a.op_join(x, a.op_join(y, z))) {
                    return fail("\\/ associativity", {x, y, z});
                }
                if (a.op_mul(a.op_mul(x, y), z) != a.op_mul(x, a.op_mul(y, z))) {
                    return fail("* associativity", {x, y, z});
                }
            }
        }
    }
    // a(b \/ c)d = abd \/ acd
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                for (int w = 0; w < n; ++w) {
                    int lhs = a.op_mul(a.op_mul(x, a.op_join(y, z)), w);
                    int rhs = a.op_join(a.op_mul(a.op_mul(x, y), w), a.op_mul(a.op_mul(x, z), w));
                    if (lhs != rhs) return fail("x(y \\/ z)w = xyw \\/ xzw", {x, y, z, w});
                }
            }
        }
    }
    return LawReport{};
}

} // namespace

LawReport check_idempotent_semiring(const FiniteAlgebra& a) { return check_semiring_core(a); }

LawReport check_distributive_lmonoid(const FiniteAlgebra& a) {
    if (!a.has_meet()) return fail("algebra has no meet", {});
    LawReport base = check_semiring_core(a);
    if (!base.ok) return base;
    int n = a.size;
    for (int x = 0; x < n; ++x) {
        if (a.op_meet(x, x) != x) return fail("x /\\ x = x", {x});
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (a.op_meet(x, y) != a.op_meet(y, x)) return fail("/\\ commutativity", {x, y});
            if (a.op_join(x, a.op_meet(x, y)) != x) return fail("absorption \\/", {x, y});
            if (a.op_meet(x, a.op_join(x, y)) != x) return fail("absorption /\\", {x, y});
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (a.op_meet(a.op_meet(x, y), z) != a.op_meet(x, a.op_meet(y, z))) {
                    return fail("/\\ associativity", {x, y, z});
                }
                if (a.op_meet(x, a.op_join(y, z)) !=
                    a.op_join(a.op_meet(x, y), a.op_meet(x, z))) {
                    return fail("lattice distributivity", {x, y, z});
                }
                // two-sided distribution of * over meet
                if (a.op_mul(x, a.op_meet(y, z)) != a.op_meet(a.op_mul(x, y), a.op_mul(x, z))) {
                    return fail("x(y /\\ z) = xy /\\ xz", {x, y, z});
                }
                if (a.op_mul(a.op_meet(y, z), x) != a.op_meet(a.op_mul(y, x), a.op_mul(z, x))) {
                    return fail("(y /\\ z)x = yx /\\ zx", {x, y, z});
                }
            }
        }
    }
    return LawReport{};
}

LawReport check_zero_semiring(const FiniteAlgebra& a) {
    if (!a.zero) return fail("algebra has no zero", {});
    LawReport base = check_semiring_core(a);
    if (!base.ok) return base;
    int z = *a.zero;
    for (int x = 0; x < a.size; ++x) {
        if (a.op_join(z, x) != x) return fail("0 \\/ x = x", {x});
        if (a.op_mul(z, x) != z || a.op_mul(x, z) != z) return fail("0 absorption", {x});
    }
    return LawReport{};
}

namespace {

int eval_term(const FiniteAlgebra& a, const TermPtr& t,
              const std::map<std::string, int>& env) {
    switch (t->kind) {
        case Term::Kind::var: {
            auto it = env.find(t->name);
            if (it == env.end()) throw Error("unassigned variable " + t->name);
            return it->second;
        }
        case Term::Kind::unit: return a.unit;
        case Term::Kind::zero:
            if (!a.zero) throw Error(a.name + " has no zero");
            return *a.zero;
        case Term::Kind::inv: throw Error(a.name + " has no inverse operation");
        case Term::Kind::mul: {
            int acc = eval_term(a, t->args[0], env);
            for (std::size_t i = 1; i < t->args.size(); ++i) {
                acc = a.op_mul(acc, eval_term(a, t->args[i], env));
            }
            return acc;
        }
        case Term::Kind::join: {
            int acc = eval_term(a, t->args[0], env);
            for (std::size_t i = 1; i < t->args.size(); ++i) {
                acc = a.op_join(acc, eval_term(a, t->args[i], env));
            }
            return acc;
        }
        case Term::Kind::meet: {
            if (!a.has_meet()) throw Error(a.name + " has no meet");
            int acc = eval_term(a, t->args[0], env);
            for (std::size_t i = 1; i < t->args.size(); ++i) {
                acc = a.op_meet(acc, eval_term(a, t->args[i], env));
            }
            return acc;
        }
    }
    throw Error("unreachable");
}

bool statement_holds_at(const FiniteAlgebra& a, const Statement& st,
                        const std::map<std::string, int>& env) {
    int l = eval_term(a, st.lhs, env);
    int r = eval_term(a, st.rhs, env);
    return st.equation ? l == r : a.op_join(l, r) == r;
}

// iterate assignments in lexicographic order over sorted variable names
template <typename Fn>
SatResult exhaust(const std::vector<std::string>& vars, int domain, std::uint64_t max_evals,
                  Fn&& holds_at) {
    if (domain <= 0) throw Error("evaluation over an empty domain");
    double combos = std::pow(static_cast<double>(domain), static_cast<double>(vars.size()));
    if (combos > static_cast<double>(max_evals)) {
        throw BudgetError("assignment space exceeds evaluation budget");
    }
    std::vector<int> odo(vars.size(), 0);
    std::map<std::string, int> env;
    while (true) {
        for (std::size_t k = 0; k < vars.size(); ++k) env[vars[k]] = odo[k];
        if (!holds_at(env)) return SatResult{false, env};
        bool wrapped = true;
        std::size_t i = odo.size();
        while (i > 0) {
            --i;
            if (++odo[i] < domain) {
                wrapped = false;
                break;
            }
            odo[i] = 0;
        }
        if (wrapped) return SatResult{};
    }
}

} // namespace

SatResult satisfies(const FiniteAlgebra& a, const Statement& st, std::uint64_t max_evals) {
    auto var_set = statement_vars(st);
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    return exhaust(vars, a.size, max_evals,
                   [&](const std::map<std::string, int>& env) {
                       return statement_holds_at(a, st, env);
                   });
}

SatResult satisfies(const FiniteAlgebra& a, const Statement& st, const Assignment& fixed) {
    bool holds = statement_holds_at(a, st, fixed);
    if (holds) return SatResult{};
    return SatResult{false, fixed};
}

namespace {

template <typename Mul>
bool quasi_holds_at(int unit, Mul&& mul, const Quasiequation& q,
                    const std::map<std::string, int>& env) {
    auto eval = [&](const GroupWord& w) {
        int acc = unit;
        for (const Letter& l : w.letters) {
            if (l.sign < 0) throw Error("inverse letter in monoid evaluation");
            acc = mul(acc, env.at(l.var));
        }
        return acc;
    };
    for (const auto& [l, r] : q.premises) {
        if (eval(l) != eval(r)) return true;
    }
    return eval(q.conclusion.first) == eval(q.conclusion.second);
}

} // namespace

SatResult satisfies_quasi(const FiniteMonoid& m, const Quasiequation& q,
                          std::uint64_t max_evals) {
    auto var_set = vars_of(q);
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    return exhaust(vars, m.size, max_evals, [&](const std::map<std::string, int>& env) {
        return quasi_holds_at(m.unit, [&](int a, int b) { return m.mul(a, b); }, q, env);
    });
}

SatResult satisfies(const FiniteAlgebra& a, const Quasiequation& q, std::uint64_t max_evals) {
    auto var_set = vars_of(q);
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    return exhaust(vars, a.size, max_evals, [&](const std::map<std::string, int>& env) {
        return quasi_holds_at(a.unit, [&](int x, int y) { return a.op_mul(x, y); }, q, env);
    });
}

SatResult satisfies_quasi_cyclic(int n, const Quasiequation& q, std::uint64_t max_evals) {
    if (n < 1) throw Error("satisfies_quasi_cyclic: n must be positive");
    auto var_set = vars_of(q);
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    auto eval = [&](const GroupWord& w, const std::map<std::string, int>& env) {
        long long acc = 0;
        for (const Letter& l : w.letters) acc += static_cast<long long>(l.sign) * env.at(l.var);
        return static_cast<int>(((acc % n) + n) % n);
    };
    return exhaust(vars, n, max_evals, [&](const std::map<std::string, int>& env) {
        for (const auto& [l, r] : q.premises) {
            if (eval(l, env) != eval(r, env)) return true;
        }
        return eval(q.conclusion.first, env) == eval(q.conclusion.second, env);
    });
}

namespace {

std::map<std::string, long long> exponent_vector(const GroupWord& lhs, const GroupWord& rhs) {
    std::map<std::string, long long> v;
    for (const Letter& l : lhs.letters) v[l.var] += l.sign;
    for (const Letter& l : rhs.letters) v[l.var] -= l.sign;
    return v;
}

} // namespace

bool satisfies_quasi_integers(const Quasiequation& q) {
    auto var_set = vars_of(q);
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    std::size_t n = vars.size();
    auto to_row = [&](const std::map<std::string, long long>& v) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto it = v.find(vars[i]);
            row[i] = it == v.end() ? 0 : it->second;
        }
        return row;
    };
    std::vector<std::vector<Rational>> rows;
    for (const auto& [l, r] : q.premises) rows.push_back(to_row(exponent_vector(l, r)));
    std::vector<Rational> target = to_row(exponent_vector(q.conclusion.first, q.conclusion.second));

    // Gaussian elimination: reduce the target by the premise rows; the
    // quasiequation holds in Z iff the residual is zero (the integer solution
    // lattice of the premise system spans its rational solution space).
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot_row && rows[r][col] != 0) {
                Rational factor = rows[r][col] / rows[pivot_row][col];
                for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[pivot_row][c];
            }
        }
        if (target[col] != 0) {
            Rational factor = target[col] / rows[pivot_row][col];
            for (std::size_t c = col; c < n; ++c) target[c] -= factor * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    return std::all_of(target.begin(), target.end(), [](const Rational& x) { return x == 0; });
}

WitnessFamily witness_family(int n) {
    if (n < 1) throw Error("witness_family: n must be positive");
    Statement ineq{false, t_var("x"), t_join({t_unit(), t_pow(t_var("x"), n)}), Sig::semiring};
    WitnessFamily out{ineq, flat_extension(cyclic_monoid(n)), std::nullopt, n == 1};
    if (n >= 2) out.refutation = Assignment{{"x", 1}};
    return out;
}

} // namespace isf
