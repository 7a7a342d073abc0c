#include "isf/tropical.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace isf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

IntAssignment abelianize(const GroupWord& w) {
    IntAssignment v;
    for (const Letter& l : w.letters) {
        if ((v[l.var] += l.sign) == 0) v.erase(l.var);
    }
    return v;
}

namespace {

constexpr std::size_t kMaxRows = 40'000;

// one constraint  sum_j coeff[j] * a_j >= rhs, with rhs kept positive.
// Combinations of such rows with positive weights keep rhs positive, so a
// row may be normalized to rhs = 1; parallel rows then deduplicate.
struct Row {
    std::vector<Rational> coeff;
    Rational rhs;
    bool operator==(const Row&) const = default;
};

void normalize(Row& r) {
    bool zero = std::all_of(r.coeff.begin(), r.coeff.end(),
                            [](const Rational& c) { return c == 0; });
    if (zero) return; // kept verbatim; a positive rhs marks infeasibility
    for (Rational& c : r.coeff) c /= r.rhs;
    r.rhs = 1;
}

void dedup(std::vector<Row>& rows) {
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.coeff < b.coeff || (a.coeff == b.coeff && a.rhs < b.rhs);
    });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

} // namespace

std::optional<IntAssignment> tropical_refutation(const BasicInequation& e) {
    IntAssignment lhs = abelianize(to_group(e.lhs));
    std::set<std::string> var_set = vars_of(e);
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    std::size_t n = vars.size();
    auto col = [&](const std::string& v) {
        return static_cast<std::size_t>(
            std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
    };

    std::vector<Row> rows;
    for (const auto& t : e.rhs) {
        Row r{std::vector<Rational>(n, 0), 1};
        for (const auto& [v, c] : lhs) r.coeff[col(v)] += c;
        for (const auto& [v, c] : abelianize(t)) r.coeff[col(v)] -= c;
        normalize(r);
        rows.push_back(std::move(r));
    }
    dedup(rows);

    // Fourier-Motzkin, eliminating the variable with the fewest pos*neg
    // combinations first; levels[i] is the system before the i-th step
    std::vector<std::vector<Row>> levels;
    std::vector<std::size_t> order;
    std::vector<bool> eliminated(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::size_t best_cost = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (eliminated[k]) continue;
            std::size_t pos = 0, neg = 0;
            for (const Row& r : rows) {
                if (r.coeff[k] > 0) ++pos;
                if (r.coeff[k] < 0) ++neg;
            }
            std::size_t cost = pos * neg;
            if (best == n || cost < best_cost) {
                best = k;
                best_cost = cost;
            }
        }
        std::size_t k = best;
        eliminated[k] = true;
        order.push_back(k);
        levels.push_back(rows);

        std::vector<Row> next;
        std::vector<const Row*> pos, neg;
        for (const Row& r : rows) {
            if (r.coeff[k] > 0) {
                pos.push_back(&r);
            } else if (r.coeff[k] < 0) {
                neg.push_back(&r);
            } else {
                next.push_back(r);
            }
        }
        for (const Row* p : pos) {
            for (const Row* q : neg) {
                // positive combination cancelling a_k
                Row r{std::vector<Rational>(n, 0), 0};
                Rational cp = p->coeff[k];
                Rational cq = -q->coeff[k];
                for (std::size_t j = 0; j < n; ++j) {
                    r.coeff[j] = p->coeff[j] / cp + q->coeff[j] / cq;
                }
                r.rhs = p->rhs / cp + q->rhs / cq;
                normalize(r);
                next.push_back(std::move(r));
                if (next.size() > kMaxRows) {
                    throw BudgetError("Fourier-Motzkin row budget exceeded");
                }
            }
        }
        dedup(next);
        rows = std::move(next);
    }

    for (const Row& r : rows) {
        if (r.rhs > 0) return std::nullopt; // 0 >= positive: infeasible
    }

    // feasible: back-substitute in reverse elimination order, taking the
    // tightest lower bound
    std::vector<Rational> value(n, 0);
    std::vector<bool> fixed(n, false);
    for (std::size_t step = n; step-- > 0;) {
        std::size_t k = order[step];
        std::optional<Rational> lo, hi;
        for (const Row& r : levels[step]) {
            if (r.coeff[k] == 0) continue;
            Rational rest = r.rhs;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k && fixed[j]) rest -= r.coeff[j] * value[j];
            }
            Rational bound = rest / r.coeff[k];
            if (r.coeff[k] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        value[k] = lo ? *lo : (hi ? *hi : Rational(0));
        fixed[k] = true;
    }

    // scale to integers; scaling up keeps every row >= rhs >= 1 by homogeneity
    BigInt scale = 1;
    for (const Rational& v : value) scale = lcm(scale, BigInt(denominator(v)));
    IntAssignment witness;
    for (std::size_t k = 0; k < n; ++k) {
        Rational scaled = value[k] * Rational(scale);
        BigInt num = numerator(scaled);
        witness[vars[k]] = num.convert_to<long long>();
    }
    if (!tropical_violates(e, witness)) {
        throw Error("internal: Fourier-Motzkin witness failed verification");
    }
    return witness;
}

bool tropical_violates(const BasicInequation& e, const IntAssignment& a) {
    auto value = [&](const IntAssignment& lin) {
        long long total = 0;
        for (const auto& [v, c] : lin) {
            auto it = a.find(v);
            if (it != a.end()) total += c * it->second;
        }
        return total;
    };
    long long l = value(abelianize(to_group(e.lhs)));
    for (const auto& t : e.rhs) {
        if (value(abelianize(t)) >= l) return false;
    }
    return true;
}

} // namespace isf
