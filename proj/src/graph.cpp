#include "omega/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace omega {

std::vector<std::vector<int>> sccs(const Graph& g) {
    const int n = static_cast<int>(g.size());
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> out;
    int counter = 0;
    // Frames of (node, next edge position).
    std::vector<std::pair<int, std::size_t>> call;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos < g[v].size()) {
                int w = g[v][pos++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            int node = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[node]);
            if (low[node] == index[node]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != node);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

struct Step {
    Letter letter;
    int dst;
    unsigned marks;
    bool avoid;
};

std::vector<std::vector<Step>> adjacency(const MarkedGraph& g) {
    std::vector<std::vector<Step>> adj(g.n);
    for (const auto& e : g.edges) adj[e.src].push_back({e.letter, e.dst, e.marks, e.avoid});
    for (auto& v : adj)
        std::sort(v.begin(), v.end(), [](const Step& a, const Step& b) {
            return std::tie(a.letter, a.dst, a.marks, a.avoid) < std::tie(b.letter, b.dst, b.marks, b.avoid);
        });
    return adj;
}

}  // namespace

std::optional<Lasso> find_accepting_lasso(const MarkedGraph& g) {
    const unsigned full = (1u << g.mark_count) - 1;
    auto adj = adjacency(g);

    // Shortlex-least shortest stems from the initial states.
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::vector<Letter> via(g.n, -1);
    std::deque<int> queue;
    std::vector<int> inits = g.initials;
    std::sort(inits.begin(), inits.end());
    for (int s : inits)
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (const auto& st : adj[s])
            if (dist[st.dst] < 0) {
                dist[st.dst] = dist[s] + 1;
                parent[st.dst] = s;
                via[st.dst] = st.letter;
                queue.push_back(st.dst);
            }
    }

    Graph kept(g.n);
    for (int s = 0; s < g.n; ++s)
        if (dist[s] >= 0)
            for (const auto& st : adj[s])
                if (!st.avoid) kept[s].push_back(st.dst);
    auto comps = sccs(kept);
    std::vector<int> comp_of(g.n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int s : comps[c]) comp_of[s] = static_cast<int>(c);

    std::vector<unsigned> comp_marks(comps.size(), 0);
    for (int s = 0; s < g.n; ++s)
        if (dist[s] >= 0)
            for (const auto& st : adj[s])
                if (!st.avoid && comp_of[st.dst] == comp_of[s]) comp_marks[comp_of[s]] |= st.marks;

    std::vector<int> candidates;
    for (int s = 0; s < g.n; ++s) {
        if (dist[s] < 0 || comp_marks[comp_of[s]] != full) continue;
        bool source = false;
        for (const auto& st : adj[s]) source = source || (!st.avoid && st.marks && comp_of[st.dst] == comp_of[s]);
        if (source) candidates.push_back(s);
    }
    if (candidates.empty()) return std::nullopt;
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return dist[a] < dist[b]; });

    auto stem_of = [&](int s) {
        Word w;
        for (int t = s; dist[t] > 0; t = parent[t]) w.push_back(via[t]);
        std::reverse(w.begin(), w.end());
        return w;
    };

    auto loop_of = [&](int s) {
        const int c = comp_of[s];
        std::map<std::pair<int, unsigned>, std::pair<std::pair<int, unsigned>, Letter>> prev;
        std::deque<std::pair<int, unsigned>> q{{s, 0u}};
        prev[{s, 0u}] = {{-1, 0u}, -1};
        std::pair<int, unsigned> goal{s, full};
        while (!q.empty()) {
            auto cur = q.front();
            q.pop_front();
            for (const auto& st : adj[cur.first]) {
                if (st.avoid || comp_of[st.dst] != c) continue;
                std::pair<int, unsigned> nxt{st.dst, cur.second | st.marks};
                if (prev.count(nxt)) continue;
                prev[nxt] = {cur, st.letter};
                if (nxt == goal) {
                    Word w;
                    for (auto t = goal; !(t.first == s && t.second == 0u); t = prev[t].first)
                        w.push_back(prev[t].second);
                    std::reverse(w.begin(), w.end());
                    return w;
                }
                q.push_back(nxt);
            }
        }
        return Word{};
    };

    std::optional<Lasso> best;
    for (int s : candidates) {
        if (best && static_cast<std::size_t>(dist[s]) + 1 > best->stem.size() + best->loop.size()) break;
        Lasso l{stem_of(s), loop_of(s)};
        if (l.loop.empty()) continue;
        if (!best) {
            best = l;
            continue;
        }
        auto key = [](const Lasso& x) { return std::make_tuple(x.stem.size() + x.loop.size(), x.stem, x.loop); };
        if (key(l) < key(*best)) best = l;
    }
    return best;
}

std::optional<Lasso> one_pair_rabin_empty(const MarkedGraph& g) {
    MarkedGraph h = g;
    h.mark_count = 1;
    return find_accepting_lasso(h);
}

namespace {

std::vector<std::vector<const NbaEdge*>> nba_adjacency(const Nba& a) {
    std::vector<std::vector<const NbaEdge*>> adj(a.n);
    for (const auto& e : a.trans) adj[e.src].push_back(&e);
    return adj;
}

// Product of an NBA with a deterministic automaton; the callback sets
// marks and avoid on each product edge.
template <typename Label>
MarkedGraph det_product(const Nba& a, const DetOmega& d, int marks, Label label) {
    if (a.sigma != d.ts.sigma) throw AlphabetError("automata over different alphabets");
    auto adj = nba_adjacency(a);
    MarkedGraph g;
    g.mark_count = marks;
    std::map<std::pair<State, State>, int> id;
    std::vector<std::pair<State, State>> nodes;
    auto get = [&](State p, State q) {
        auto [it, fresh] = id.emplace(std::make_pair(p, q), static_cast<int>(nodes.size()));
        if (fresh) nodes.emplace_back(p, q);
        return it->second;
    };
    for (State p : a.initials) g.initials.push_back(get(p, d.ts.initial));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [p, q] = nodes[i];
        for (const NbaEdge* e : adj[p]) {
            int t = get(e->dst, d.ts.next(q, e->letter));
            MarkedEdge me{static_cast<int>(i), e->letter, t, 0u, false};
            label(*e, q, me);
            g.edges.push_back(me);
        }
    }
    g.n = static_cast<int>(nodes.size());
    return g;
}

}  // namespace

std::optional<Lasso> nba_dba_included(const Nba& a, const DetOmega& b) {
    if (b.polarity != Polarity::Buchi) throw PreconditionError("inclusion target must be a Büchi automaton");
    auto g = det_product(a, b, 1, [&](const NbaEdge& e, State q, MarkedEdge& me) {
        me.marks = e.acc ? 1u : 0u;
        me.avoid = b.is_acc(q, e.letter);
    });
    return one_pair_rabin_empty(g);
}

std::optional<Lasso> dba_nba_intersect(const DetOmega& d, const Nba& a) {
    if (d.polarity != Polarity::Buchi) throw PreconditionError("expected a Büchi automaton");
    auto g = det_product(a, d, 2, [&](const NbaEdge& e, State q, MarkedEdge& me) {
        me.marks = (e.acc ? 1u : 0u) | (d.is_acc(q, e.letter) ? 2u : 0u);
    });
    return find_accepting_lasso(g);
}

std::optional<Lasso> nba_intersect(const Nba& a, const Nba& b) {
    if (a.sigma != b.sigma) throw AlphabetError("automata over different alphabets");
    auto adj_a = nba_adjacency(a), adj_b = nba_adjacency(b);
    MarkedGraph g;
    g.mark_count = 2;
    std::map<std::pair<State, State>, int> id;
    std::vector<std::pair<State, State>> nodes;
    auto get = [&](State p, State q) {
        auto [it, fresh] = id.emplace(std::make_pair(p, q), static_cast<int>(nodes.size()));
        if (fresh) nodes.emplace_back(p, q);
        return it->second;
    };
    for (State p : a.initials)
        for (State q : b.initials) g.initials.push_back(get(p, q));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto [p, q] = nodes[i];
        for (const NbaEdge* e : adj_a[p])
            for (const NbaEdge* f : adj_b[q]) {
                if (e->letter != f->letter) continue;
                int t = get(e->dst, f->dst);
                g.edges.push_back({static_cast<int>(i), e->letter, t, (e->acc ? 1u : 0u) | (f->acc ? 2u : 0u), false});
            }
    }
    g.n = static_cast<int>(nodes.size());
    return find_accepting_lasso(g);
}

bool dba_state_equiv(const DetOmega& d, State p, State q) {
    if (p == q) return true;
    DetOmega dp = with_initial(d, p), dq = with_initial(d, q);
    return !nba_dba_included(as_nba(dp), dq) && !nba_dba_included(as_nba(dq), dp);
}

bool member_upword_nba(const Nba& a, const UpWord& w) {
    if (w.v.empty()) return false;
    const Word x = concat(w.u, w.v);
    const int len = static_cast<int>(x.size()), loop_start = static_cast<int>(w.u.size());
    auto adj = nba_adjacency(a);
    MarkedGraph g;
    g.n = a.n * len;
    for (State s : a.initials) g.initials.push_back(s * len);
    for (State s = 0; s < a.n; ++s)
        for (int i = 0; i < len; ++i) {
            int j = i + 1 < len ? i + 1 : loop_start;
            for (const NbaEdge* e : adj[s])
                if (e->letter == x[i]) g.edges.push_back({s * len + i, e->letter, e->dst * len + j, e->acc ? 1u : 0u, false});
        }
    return find_accepting_lasso(g).has_value();
}

}  // namespace omega
