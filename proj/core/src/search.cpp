#include "search.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "isf/error.hpp"

namespace isf::detail {

namespace {

struct Conflict {};

struct Edge {
    int in = 0;
    int out = 0;
    int var = 0;
};

class Searcher {
  public:
    Searcher(const std::vector<GroupWord>& words, int max_points, std::uint64_t max_nodes)
        : max_nodes_(max_nodes) {
        build_trie(words);
        if (node_count() > max_points) {
            throw BudgetError("trace points (" + std::to_string(node_count()) +
                              ") exceed the point budget (" + std::to_string(max_points) + ")");
        }
        init_state();
    }

    SearchResult run() {
        SearchResult result;
        try {
            for (int end : ends_) ensure_less(find(end), find(root_));
            drain();
        } catch (const Conflict&) {
            result.nodes = nodes_;
            return result; // propagation alone refutes every diagram
        }
        queue_.clear();
        if (solve(0)) {
            result.found = true;
            result.diagram = extract();
        }
        result.nodes = nodes_;
        return result;
    }

  private:
    // ---- static structure -------------------------------------------------

    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;

    int root_ = 0;
    std::vector<std::string> var_names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> in_edges_;  // node -> edge ids with in == node
    std::vector<std::vector<int>> out_edges_; // node -> edge ids with out == node
    std::vector<std::vector<int>> traces_;    // word -> trie node path
    std::vector<int> ends_;
    // in-point pairs of same-variable edges: the DFS branch candidates
    std::vector<std::pair<int, int>> couplings_; // edge id pairs

    int node_count() const { return static_cast<int>(in_edges_.size()); }

    void build_trie(const std::vector<GroupWord>& words) {
        std::map<std::string, int> var_ids;
        std::vector<std::map<std::pair<int, int>, int>> children(1); // (var, sign) -> node
        in_edges_.emplace_back();
        out_edges_.emplace_back();

        auto add_node = [&]() {
            children.emplace_back();
            in_edges_.emplace_back();
            out_edges_.emplace_back();
            return static_cast<int>(children.size()) - 1;
        };

        for (const GroupWord& w : words) {
            int cur = root_;
            std::vector<int> path{cur};
            for (const Letter& l : w.letters) {
                auto [it, _] = var_ids.try_emplace(l.var, static_cast<int>(var_ids.size()));
                int v = it->second;
                auto key = std::make_pair(v, l.sign);
                int next;
                auto child_it = children[cur].find(key);
                if (child_it != children[cur].end()) {
                    next = child_it->second;
                } else {
                    next = add_node();
                    children[cur].emplace(key, next);
                    Edge e = l.sign > 0 ? Edge{cur, next, v} : Edge{next, cur, v};
                    int eid = static_cast<int>(edges_.size());
                    edges_.push_back(e);
                    in_edges_[e.in].push_back(eid);
                    out_edges_[e.out].push_back(eid);
                }
                cur = next;
                path.push_back(cur);
            }
            ends_.push_back(cur);
            traces_.push_back(std::move(path));
        }

        var_names_.resize(var_ids.size());
        for (const auto& [name, id] : var_ids) var_names_[id] = name;

        std::vector<std::vector<int>> by_var(var_names_.size());
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            by_var[edges_[e].var].push_back(e);
        }
        for (const auto& group : by_var) {
            for (std::size_t i = 0; i < group.size(); ++i) {
                for (std::size_t j = i + 1; j < group.size(); ++j) {
                    couplings_.emplace_back(group[i], group[j]);
                }
            }
        }
    }

    // ---- dynamic state ------------------------------------------------------

    std::size_t row_words_ = 0;
    std::vector<std::uint64_t> above_; // above(p) bit q: p < q
    std::vector<std::uint64_t> below_; // below(p) bit q: q < p
    std::vector<int> parent_;
    std::vector<std::vector<int>> members_;

    struct TrailEntry {
        enum Kind { set_bit, link, saved_rows } kind;
        int a = 0;
        int b = 0;
    };
    std::vector<TrailEntry> trail_;
    std::vector<std::vector<std::uint64_t>> saved_row_data_;

    struct Event {
        bool eq = false;
        int a = 0, b = 0;             // LT: roots with a < b at enqueue time
        std::vector<int> left, right; // EQ: node lists of the two merged classes
    };
    std::deque<Event> queue_;

    std::uint64_t* above(int p) { return &above_[static_cast<std::size_t>(p) * row_words_]; }
    std::uint64_t* below(int p) { return &below_[static_cast<std::size_t>(p) * row_words_]; }

    static bool test(const std::uint64_t* row, int q) { return (row[q >> 6] >> (q & 63)) & 1; }
    static void set(std::uint64_t* row, int q) { row[q >> 6] |= std::uint64_t(1) << (q & 63); }
    static void clear(std::uint64_t* row, int q) { row[q >> 6] &= ~(std::uint64_t(1) << (q & 63)); }

    void init_state() {
        int n = node_count();
        row_words_ = static_cast<std::size_t>((n + 63) / 64);
        above_.assign(static_cast<std::size_t>(n) * row_words_, 0);
        below_.assign(static_cast<std::size_t>(n) * row_words_, 0);
        parent_.resize(n);
        members_.resize(n);
        for (int i = 0; i < n; ++i) {
            parent_[i] = i;
            members_[i] = {i};
        }
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool less(int a, int b) { return test(above(a), b); }

    template <typename Fn>
    void for_each_bit(const std::uint64_t* row, Fn&& fn) const {
        for (std::size_t w = 0; w < row_words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                fn(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
                bits &= bits - 1;
            }
        }
    }

    void save_rows(int p) {
        trail_.push_back({TrailEntry::saved_rows, p, 0});
        saved_row_data_.emplace_back(above(p), above(p) + row_words_);
        saved_row_data_.emplace_back(below(p), below(p) + row_words_);
    }

    void add_bit(int p, int q) {
        trail_.push_back({TrailEntry::set_bit, p, q});
        set(above(p), q);
        set(below(q), p);
        queue_.push_back(Event{false, p, q, {}, {}});
    }

    // record p < q (roots) and close transitively
    void ensure_less(int p, int q) {
        if (p == q || test(below(p), q)) throw Conflict{};
        if (test(above(p), q)) return;
        std::vector<int> ps{p}, qs{q};
        for_each_bit(below(p), [&](int x) { ps.push_back(x); });
        for_each_bit(above(q), [&](int y) { qs.push_back(y); });
        for (int x : ps) {
            for (int y : qs) {
                if (x == y || test(below(x), y)) throw Conflict{};
                if (!test(above(x), y)) add_bit(x, y);
            }
        }
    }

    void ensure_merge(int p, int q) {
        if (p == q) return;
        if (test(above(p), q) || test(below(p), q)) throw Conflict{};
        int s = members_[p].size() >= members_[q].size() ? p : q;
        int o = s == p ? q : p;

        Event eq_event{true, 0, 0, members_[s], members_[o]};

        save_rows(s);
        trail_.push_back({TrailEntry::link, o, 0});
        parent_[o] = s;
        members_[s].insert(members_[s].end(), members_[o].begin(), members_[o].end());

        for (std::size_t w = 0; w < row_words_; ++w) {
            above(s)[w] |= above(o)[w];
            below(s)[w] |= below(o)[w];
        }
        for (std::size_t w = 0; w < row_words_; ++w) {
            if (above(s)[w] & below(s)[w]) throw Conflict{};
        }
        if (test(above(s), s) || test(below(s), s)) throw Conflict{};

        // retarget references to o; the relation itself is not new, but it
        // now binds the members of both halves, so refresh the map
        // constraints against every related class below
        for (int r = 0; r < node_count(); ++r) {
            if (parent_[r] != r || r == s) continue;
            bool had_above = test(above(r), o); // r < o
            bool had_below = test(below(r), o); // o < r
            if (!had_above && !had_below) continue;
            save_rows(r);
            if (had_above) {
                clear(above(r), o);
                set(above(r), s);
                set(below(s), r);
            }
            if (had_below) {
                clear(below(r), o);
                set(below(r), s);
                set(above(s), r);
            }
        }

        // close transitively through the merged class
        std::vector<int> lows, highs;
        for_each_bit(below(s), [&](int x) { lows.push_back(x); });
        for_each_bit(above(s), [&](int y) { highs.push_back(y); });
        for (int x : lows) {
            for (int y : highs) {
                if (x == y || test(below(x), y)) throw Conflict{};
                if (!test(above(x), y)) add_bit(x, y);
            }
        }

        queue_.push_back(std::move(eq_event));
        for (int x : lows) queue_.push_back(Event{false, x, s, {}, {}});
        for (int y : highs) queue_.push_back(Event{false, s, y, {}, {}});
    }

    void force(int a, int b, bool eq) {
        if (eq) {
            ensure_merge(find(a), find(b));
        } else {
            ensure_less(find(a), find(b));
        }
    }

    // map constraints for a decided relation between nodes x and y:
    // functionality/order-preservation via shared in-points, injectivity/
    // order-reflection via shared out-points
    void cross_edges(int x, int y, bool eq) {
        for (int e1 : in_edges_[x]) {
            for (int e2 : in_edges_[y]) {
                if (edges_[e1].var == edges_[e2].var && e1 != e2) {
                    force(edges_[e1].out, edges_[e2].out, eq);
                }
            }
        }
        for (int e1 : out_edges_[x]) {
            for (int e2 : out_edges_[y]) {
                if (edges_[e1].var == edges_[e2].var && e1 != e2) {
                    force(edges_[e1].in, edges_[e2].in, eq);
                }
            }
        }
    }

    void process(const Event& ev) {
        if (ev.eq) {
            for (int x : ev.left) {
                for (int y : ev.right) cross_edges(x, y, true);
            }
            return;
        }
        int a = find(ev.a), b = find(ev.b);
        if (a == b) throw Conflict{};
        if (!test(above(a), b)) {
            if (test(below(a), b)) throw Conflict{};
            return;
        }
        for (int x : members_[a]) {
            for (int y : members_[b]) cross_edges(x, y, false);
        }
    }

    void drain() {
        while (!queue_.empty()) {
            Event ev = std::move(queue_.front());
            queue_.pop_front();
            process(ev);
        }
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            TrailEntry e = trail_.back();
            trail_.pop_back();
            switch (e.kind) {
                case TrailEntry::set_bit:
                    clear(above(e.a), e.b);
                    clear(below(e.b), e.a);
                    break;
                case TrailEntry::link: {
                    int o = e.a;
                    int s = parent_[o];
                    members_[s].resize(members_[s].size() - members_[o].size());
                    parent_[o] = o;
                    break;
                }
                case TrailEntry::saved_rows:
                    std::copy(saved_row_data_.back().begin(), saved_row_data_.back().end(),
                              below(e.a));
                    saved_row_data_.pop_back();
                    std::copy(saved_row_data_.back().begin(), saved_row_data_.back().end(),
                              above(e.a));
                    saved_row_data_.pop_back();
                    break;
            }
        }
    }

    bool solve(std::size_t pair_hint) {
        std::size_t chosen = couplings_.size();
        int p = 0, q = 0;
        for (std::size_t i = pair_hint; i < couplings_.size(); ++i) {
            auto [e1, e2] = couplings_[i];
            int a = find(edges_[e1].in), b = find(edges_[e2].in);
            if (a != b && !less(a, b) && !less(b, a)) {
                chosen = i;
                p = a;
                q = b;
                break;
            }
        }
        if (chosen == couplings_.size()) return true; // all coupled pairs decided

        for (int branch = 0; branch < 3; ++branch) {
            if (++nodes_ > max_nodes_) throw BudgetError("search node budget exceeded");
            std::size_t mark = trail_.size();
            try {
                if (branch == 0) {
                    ensure_less(p, q);
                } else if (branch == 1) {
                    ensure_less(q, p);
                } else {
                    ensure_merge(p, q);
                }
                drain();
                if (solve(chosen + 1)) return true;
            } catch (const Conflict&) {
            }
            queue_.clear();
            undo_to(mark);
        }
        return false;
    }

    Diagram extract() {
        std::vector<int> roots;
        for (int r = 0; r < node_count(); ++r) {
            if (parent_[r] == r) roots.push_back(r);
        }
        // linear extension: repeatedly place the smallest root with nothing
        // unplaced below it
        std::vector<int> rank(node_count(), -1);
        std::vector<bool> placed(node_count(), false);
        for (int next_rank = 0; next_rank < static_cast<int>(roots.size()); ++next_rank) {
            for (int r : roots) {
                if (placed[r]) continue;
                bool minimal = true;
                for_each_bit(below(r), [&](int x) {
                    if (!placed[x]) minimal = false;
                });
                if (minimal) {
                    rank[r] = next_rank;
                    placed[r] = true;
                    break;
                }
            }
        }

        Diagram d;
        d.num_points = static_cast<int>(roots.size());
        d.base = rank[find(root_)];
        for (const Edge& e : edges_) {
            auto& pairs = d.maps[var_names_[e.var]];
            std::pair<int, int> pr{rank[find(e.in)], rank[find(e.out)]};
            if (std::find(pairs.begin(), pairs.end(), pr) == pairs.end()) pairs.push_back(pr);
        }
        for (auto& [var, pairs] : d.maps) std::sort(pairs.begin(), pairs.end());
        for (const auto& path : traces_) {
            std::vector<int> trace;
            trace.reserve(path.size());
            for (int node : path) trace.push_back(rank[find(node)]);
            d.traces.push_back(std::move(trace));
        }
        return d;
    }
};

} // namespace

SearchResult search_diagram(const std::vector<GroupWord>& words, int max_points,
                            std::uint64_t max_nodes) {
    Searcher s(words, max_points, max_nodes);
    return s.run();
}

} // namespace isf::detail
