#include "oracle.hpp"

#include <deque>
#include <set>

namespace oracle {

bool member(const DetOmega& d, State from, const Word& u, const Word& v) {
    if (v.empty()) return false;
    State s = from;
    for (Letter a : u) s = d.ts.next(s, a);
    const int n = d.ts.n;
    for (int i = 0; i < n; ++i)
        for (Letter a : v) s = d.ts.next(s, a);
    bool seen = false;
    for (int i = 0; i < n; ++i)
        for (Letter a : v) {
            seen = seen || d.is_acc(s, a);
            s = d.ts.next(s, a);
        }
    return seen;
}

bool member(const DetOmega& d, const Word& u, const Word& v) { return member(d, d.ts.initial, u, v); }

bool nba_member(const omega::Nba& a, const Word& u, const Word& v) {
    if (v.empty()) return false;
    using Config = std::set<std::pair<State, bool>>;
    auto step = [&](const Config& c, Letter l) {
        Config r;
        for (auto [s, f] : c)
            for (const auto& e : a.trans)
                if (e.src == s && e.letter == l) r.insert({e.dst, f || e.acc});
        return r;
    };
    std::set<State> start(a.initials.begin(), a.initials.end());
    for (Letter l : u) {
        Config c;
        for (State s : start) c.insert({s, false});
        c = step(c, l);
        start.clear();
        for (auto [s, f] : c) start.insert(s);
    }
    // States at period boundaries after u·v^i for i <= n.
    std::set<State> boundary = start, frontier = start;
    for (int i = 0; i < a.n; ++i) {
        Config c;
        for (State s : frontier) c.insert({s, false});
        for (Letter l : v) c = step(c, l);
        frontier.clear();
        for (auto [s, f] : c) frontier.insert(s);
        boundary.insert(frontier.begin(), frontier.end());
    }
    for (State q : boundary) {
        Config c{{q, false}};
        for (int j = 1; j <= a.n; ++j) {
            for (Letter l : v) c = step(c, l);
            if (c.count({q, true})) return true;
        }
    }
    return false;
}

NbaTable::NbaTable(const omega::Nba& a) : a_(a), out_(static_cast<std::size_t>(a.n) * a.sigma.size()) {
    for (const auto& e : a.trans) out_[e.src * a_.sigma.size() + e.letter].push_back({e.dst, e.acc});
}

const std::vector<bool>& NbaTable::after(const Word& u) {
    auto it = after_.find(u);
    if (it != after_.end()) return it->second;
    std::vector<bool> cur(a_.n, false);
    if (u.empty()) {
        for (State s : a_.initials) cur[s] = true;
    } else {
        Word prefix(u.begin(), u.end() - 1);
        const auto& prev = after(prefix);
        for (State s = 0; s < a_.n; ++s)
            if (prev[s])
                for (auto [t, acc] : out_[s * a_.sigma.size() + u.back()]) cur[t] = true;
    }
    return after_.emplace(u, std::move(cur)).first->second;
}

const std::vector<bool>& NbaTable::accepting_from(const Word& v) {
    auto it = from_.find(v);
    if (it != from_.end()) return it->second;
    const int n = a_.n, k = a_.sigma.size();
    // step[p]: (q, flag) pairs reachable from p by reading v once.
    std::vector<std::set<std::pair<State, bool>>> step(n);
    for (State p = 0; p < n; ++p) {
        std::set<std::pair<State, bool>> cur{{p, false}};
        for (Letter l : v) {
            std::set<std::pair<State, bool>> next;
            for (auto [s, f] : cur)
                for (auto [t, acc] : out_[s * k + l]) next.insert({t, f || acc});
            cur = std::move(next);
        }
        step[p] = std::move(cur);
    }
    // q lies on an accepting cycle of v-blocks iff (q, true) is reachable
    // from (q, false) in the flagged block graph.
    std::vector<bool> good(n, false);
    for (State q = 0; q < n; ++q) {
        std::set<std::pair<State, bool>> seen;
        std::vector<std::pair<State, bool>> stack{{q, false}};
        while (!stack.empty() && !good[q]) {
            auto [x, f] = stack.back();
            stack.pop_back();
            for (auto [y, g] : step[x]) {
                std::pair<State, bool> nx{y, f || g};
                if (nx == std::pair<State, bool>{q, true}) good[q] = true;
                if (seen.insert(nx).second) stack.push_back(nx);
            }
        }
    }
    // Backward closure over block steps.
    std::vector<bool> from = good;
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p) {
            if (from[p]) continue;
            for (auto [q, f] : step[p])
                if (from[q]) {
                    from[p] = changed = true;
                    break;
                }
        }
    }
    return from_.emplace(v, std::move(from)).first->second;
}

bool NbaTable::member(const Word& u, const Word& v) {
    if (v.empty()) return false;
    const auto& s = after(u);
    const auto& f = accepting_from(v);
    for (State q = 0; q < a_.n; ++q)
        if (s[q] && f[q]) return true;
    return false;
}

bool has_accepting_cycle(const omega::MarkedGraph& g) {
    const unsigned full = (1u << g.mark_count) - 1;
    std::vector<bool> reach(g.n, false);
    std::vector<int> stack(g.initials.begin(), g.initials.end());
    for (int s : stack) reach[s] = true;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges)
            if (e.src == s && !reach[e.dst]) {
                reach[e.dst] = true;
                stack.push_back(e.dst);
            }
    }
    // For each reachable s, explore (node, marks) over non-avoid edges from
    // (s, 0) and look for (s, full).
    for (int s = 0; s < g.n; ++s) {
        if (!reach[s]) continue;
        std::set<std::pair<int, unsigned>> seen;
        std::vector<std::pair<int, unsigned>> st{{s, 0u}};
        while (!st.empty()) {
            auto [x, m] = st.back();
            st.pop_back();
            for (const auto& e : g.edges) {
                if (e.src != x || e.avoid) continue;
                std::pair<int, unsigned> nx{e.dst, m | e.marks};
                if (nx.first == s && nx.second == full) return true;
                if (seen.insert(nx).second) st.push_back(nx);
            }
        }
    }
    return false;
}

Congruence::Congruence(const DetOmega& dba) : d(dba) {
    const int n = d.ts.n, k = d.ts.k();
    reachable.assign(n, false);
    std::deque<State> q{d.ts.initial};
    reachable[d.ts.initial] = true;
    while (!q.empty()) {
        State s = q.front();
        q.pop_front();
        for (Letter a = 0; a < k; ++a)
            if (!reachable[d.ts.next(s, a)]) {
                reachable[d.ts.next(s, a)] = true;
                q.push_back(d.ts.next(s, a));
            }
    }
    using P = std::vector<std::pair<State, bool>>;
    P id;
    for (State s = 0; s < n; ++s) id.push_back({s, false});
    std::map<P, Word> words{{id, {}}};
    std::deque<P> pq{id};
    while (!pq.empty()) {
        P p = pq.front();
        pq.pop_front();
        for (Letter a = 0; a < k; ++a) {
            P r(n);
            for (State s = 0; s < n; ++s) {
                State t = p[s].first;
                r[s] = {d.ts.next(t, a), p[s].second || d.is_acc(t, a)};
            }
            if (words.count(r)) continue;
            Word w = words[p];
            w.push_back(a);
            words[r] = w;
            pq.push_back(r);
        }
    }
    for (const auto& [p, w] : words) {
        profiles_.push_back(p);
        profile_words.push_back(w);
    }
    residual_class.assign(n, -1);
    std::vector<State> reps;
    for (State s = 0; s < n; ++s) {
        if (!reachable[s]) continue;
        for (std::size_t c = 0; c < reps.size() && residual_class[s] < 0; ++c)
            if (equivalent(reps[c], s)) residual_class[s] = static_cast<int>(c);
        if (residual_class[s] < 0) {
            residual_class[s] = static_cast<int>(reps.size());
            reps.push_back(s);
        }
    }
    classes = static_cast<int>(reps.size());
}

bool Congruence::equivalent(State p, State q) const {
    const int k = d.ts.k();
    auto accepts = [&](const std::vector<std::pair<State, bool>>& prof, State s) {
        std::vector<int> at(prof.size(), -1);
        std::vector<bool> bits;
        for (int i = 0;; ++i) {
            if (at[s] >= 0) {
                for (int j = at[s]; j < i; ++j)
                    if (bits[j]) return true;
                return false;
            }
            at[s] = i;
            bits.push_back(prof[s].second);
            s = prof[s].first;
        }
    };
    std::set<std::pair<State, State>> seen{{p, q}};
    std::deque<std::pair<State, State>> work{{p, q}};
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        for (const auto& prof : profiles_)
            if (accepts(prof, x) != accepts(prof, y)) return false;
        for (Letter a = 0; a < k; ++a) {
            std::pair<State, State> nx{d.ts.next(x, a), d.ts.next(y, a)};
            if (seen.insert(nx).second) work.push_back(nx);
        }
    }
    return true;
}

int Congruence::class_after(State from, const Word& w) const {
    State s = from;
    for (Letter a : w) s = d.ts.next(s, a);
    return residual_class[s];
}

bool Congruence::predicate(omega::Flavor f, State rep, const Word& z) const {
    bool ret = class_after(rep, z) == residual_class[rep];
    bool mem = member(d, rep, {}, z);
    switch (f) {
        case omega::Flavor::Periodic: return mem;
        case omega::Flavor::Recurrent:
        case omega::Flavor::Syntactic: return ret && mem;
        case omega::Flavor::Limit: return !ret || mem;
    }
    return false;
}

std::vector<int> Congruence::signature(omega::Flavor f, State rep, const Word& x, const std::vector<Word>& exts) const {
    std::vector<int> sig;
    if (f == omega::Flavor::Syntactic) sig.push_back(class_after(rep, x));
    for (const auto& v : exts) {
        Word xv = omega::concat(x, v);
        if (f == omega::Flavor::Syntactic) {
            // Only extensions returning to the class matter; encode 2 otherwise.
            bool ret = class_after(rep, xv) == residual_class[rep];
            sig.push_back(ret ? (member(d, rep, {}, xv) ? 1 : 0) : 2);
        } else {
            sig.push_back(predicate(f, rep, xv) ? 1 : 0);
        }
    }
    return sig;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

bool dfa_agree_up_to(const omega::Dfa& a, const omega::Dfa& b, int max_len) {
    for (const auto& w : omega::words_up_to(a.ts.k(), max_len))
        if (a.accepts(w) != b.accepts(w)) return false;
    return true;
}

}  // namespace oracle
