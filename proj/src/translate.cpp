#include "omega/translate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

namespace omega {

namespace {

struct Power {
    std::vector<std::array<State, 3>> states;  // (m, n1, n2)
    std::vector<State> delta;                  // states.size() * k, -1 when trimmed
    std::vector<bool> final;
    std::vector<bool> live;
};

Power build_power(const Fdfa& f, State q, State fin) {
    const int k = f.leading.k();
    const Dfa& N = f.progress[q];
    Power p;
    std::map<std::array<State, 3>, State> id;
    auto get = [&](std::array<State, 3> s) {
        auto [it, fresh] = id.emplace(s, static_cast<State>(p.states.size()));
        if (fresh) p.states.push_back(s);
        return it->second;
    };
    get({q, N.ts.initial, fin});
    for (std::size_t i = 0; i < p.states.size(); ++i) {
        auto [m, a, b] = p.states[i];
        for (Letter c = 0; c < k; ++c) p.delta.push_back(get({f.leading.next(m, c), N.ts.next(a, c), N.ts.next(b, c)}));
    }
    const int n = static_cast<int>(p.states.size());
    p.final.assign(n, false);
    for (int i = 0; i < n; ++i) {
        auto [m, a, b] = p.states[i];
        p.final[i] = m == q && a == fin && b == fin;
    }
    // Keep states that can reach a final state.
    std::vector<std::vector<State>> rev(n);
    for (int i = 0; i < n; ++i)
        for (Letter c = 0; c < k; ++c) rev[p.delta[i * k + c]].push_back(i);
    p.live = p.final;
    std::vector<State> stack;
    for (int i = 0; i < n; ++i)
        if (p.live[i]) stack.push_back(i);
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (State r : rev[s])
            if (!p.live[r]) {
                p.live[r] = true;
                stack.push_back(r);
            }
    }
    return p;
}

Ldba translate(const Fdfa& f, bool deterministic_power) {
    f.validate();
    const int k = f.leading.k();
    Ldba out;
    Nba& nba = out.nba;
    nba.sigma = f.sigma();
    nba.n = f.leading.n;
    nba.initials = {f.leading.initial};
    for (State m = 0; m < f.leading.n; ++m)
        for (Letter c = 0; c < k; ++c) nba.add(m, c, f.leading.next(m, c), false);
    out.deterministic.assign(nba.n, false);

    for (State q = 0; q < f.leading.n; ++q) {
        const Dfa& N = f.progress[q];
        for (State fin = 0; fin < N.ts.n; ++fin) {
            if (!N.finals[fin]) continue;
            Power p = build_power(f, q, fin);
            if (!p.live[0]) continue;
            const int n = static_cast<int>(p.states.size());
            std::vector<State> id(n, -1);
            for (int i = 0; i < n; ++i)
                if (p.live[i]) {
                    id[i] = nba.add_state();
                    out.deterministic.push_back(true);
                }
            const State init = id[0];
            for (int i = 0; i < n; ++i) {
                if (id[i] < 0) continue;
                for (Letter c = 0; c < k; ++c) {
                    State t = p.delta[i * k + c];
                    if (id[t] < 0) continue;
                    if (p.final[t]) {
                        nba.add(id[i], c, init, true);
                        if (!deterministic_power) nba.add(id[i], c, id[t], false);
                    } else {
                        nba.add(id[i], c, id[t], false);
                    }
                }
            }
            for (State m = 0; m < f.leading.n; ++m)
                for (Letter c = 0; c < k; ++c)
                    if (f.leading.next(m, c) == q) nba.add(m, c, init, false);
            if (q == f.leading.initial) nba.initials.push_back(init);
        }
    }
    nba.normalize();
    return out;
}

}  // namespace

Nba fdfa_to_nba(const Fdfa& f) { return translate(f, false).nba; }

Ldba fdfa_to_ldba(const Fdfa& f) { return translate(f, true); }

bool is_limit_deterministic(const Ldba& l) {
    std::map<std::pair<State, Letter>, int> out_degree;
    for (const auto& e : l.nba.trans) {
        if (l.deterministic[e.src]) {
            if (!l.deterministic[e.dst]) return false;
            if (++out_degree[{e.src, e.letter}] > 1) return false;
        } else if (e.acc) {
            return false;
        }
    }
    return true;
}

long long nba_state_bound(const Fdfa& f) {
    long long n = f.leading.n, k = 0;
    for (const auto& p : f.progress) k = std::max<long long>(k, p.ts.n);
    return n + n * n * k * k * k;
}

DetOmega fdfa_to_dba(const Fdfa& f) {
    f.validate();
    for (const auto& p : f.progress)
        for (State s = 0; s < p.ts.n; ++s) {
            if (!p.finals[s]) continue;
            for (Letter c = 0; c < p.ts.k(); ++c)
                if (p.ts.next(s, c) != s) throw PreconditionError("progress DFA has a final state that is not a sink");
        }
    const int k = f.leading.k();
    using Key = std::tuple<State, State, State>;  // (leading, owner, progress)
    std::map<Key, State> id;
    std::vector<Key> states;
    auto get = [&](Key key) {
        auto [it, fresh] = id.emplace(key, static_cast<State>(states.size()));
        if (fresh) states.push_back(key);
        return it->second;
    };
    const State iota = f.leading.initial;
    get({iota, iota, f.progress[iota].ts.initial});
    std::vector<State> delta;
    std::vector<bool> acc;
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [m, owner, q] = states[i];
        const Dfa& N = f.progress[owner];
        for (Letter c = 0; c < k; ++c) {
            State m2 = f.leading.next(m, c), q2 = N.ts.next(q, c);
            if (N.finals[q2]) {
                delta.push_back(get({m2, m2, f.progress[m2].ts.initial}));
                acc.push_back(true);
            } else {
                delta.push_back(get({m2, owner, q2}));
                acc.push_back(false);
            }
        }
    }
    DetOmega d(DetTS(f.sigma(), static_cast<int>(states.size()), 0));
    d.ts.delta = std::move(delta);
    d.acc = std::move(acc);
    return d;
}

}  // namespace omega
