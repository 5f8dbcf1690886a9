#include "omega/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace omega {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw AlphabetError("alphabet is empty");
    for (int i = 0; i < size(); ++i) {
        const auto& l = letters_[i];
        if (l.empty()) throw AlphabetError("empty letter name");
        if (l.find('.') != std::string::npos || l == "ε")
            throw AlphabetError("reserved letter name '" + l + "'");
        if (!index_.emplace(l, i).second) throw AlphabetError("duplicate letter '" + l + "'");
    }
}

Letter Alphabet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw AlphabetError("unknown letter '" + name + "'");
    return it->second;
}

bool Alphabet::single_char() const {
    return std::all_of(letters_.begin(), letters_.end(), [](const std::string& s) { return s.size() == 1; });
}

std::string Alphabet::render(const Word& w) const {
    if (w.empty()) return "ε";
    std::string out;
    bool dots = !single_char();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (dots && i) out += '.';
        out += name(w[i]);
    }
    return out;
}

Word Alphabet::parse(const std::string& text) const {
    Word w;
    if (text.empty() || text == "ε") return w;
    if (single_char() && text.find('.') == std::string::npos) {
        for (char c : text) w.push_back(index(std::string(1, c)));
        return w;
    }
    std::size_t start = 0;
    while (true) {
        auto dot = text.find('.', start);
        w.push_back(index(text.substr(start, dot == std::string::npos ? std::string::npos : dot - start)));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return w;
}

DetTS::DetTS(Alphabet s, int states, State init)
    : sigma(std::move(s)), n(states), initial(init), delta(static_cast<std::size_t>(states) * sigma.size(), 0) {}

void DetTS::validate() const {
    if (n <= 0) throw PreconditionError("transition structure has no states");
    if (initial < 0 || initial >= n) throw PreconditionError("initial state out of range");
    if (delta.size() != static_cast<std::size_t>(n) * k()) throw PreconditionError("transition table has wrong size");
    for (State t : delta)
        if (t < 0 || t >= n) throw PreconditionError("transition target out of range");
}

State run_word(const DetTS& ts, State from, const Word& w) {
    State s = from;
    for (Letter a : w) {
        if (a < 0 || a >= ts.k()) throw AlphabetError("letter index out of range");
        s = ts.next(s, a);
    }
    return s;
}

bool NbaEdge::operator<(const NbaEdge& o) const {
    return std::tie(src, letter, dst, acc) < std::tie(o.src, o.letter, o.dst, o.acc);
}
bool NbaEdge::operator==(const NbaEdge& o) const {
    return src == o.src && letter == o.letter && dst == o.dst && acc == o.acc;
}

void Nba::normalize() {
    std::sort(trans.begin(), trans.end());
    trans.erase(std::unique(trans.begin(), trans.end()), trans.end());
    std::sort(initials.begin(), initials.end());
    initials.erase(std::unique(initials.begin(), initials.end()), initials.end());
}

bool UpWord::operator<(const UpWord& o) const {
    if (u.size() + v.size() != o.u.size() + o.v.size()) return u.size() + v.size() < o.u.size() + o.v.size();
    return std::tie(u, v) < std::tie(o.u, o.v);
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word power(const Word& w, int k) {
    Word r;
    for (int i = 0; i < k; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

UpWord canonical_upword(const UpWord& w) {
    if (w.v.empty()) throw PreconditionError("period must be nonempty");
    Word u = w.u, v = w.v;
    const std::size_t m = v.size();
    for (std::size_t d = 1; d <= m; ++d) {
        if (m % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < m && ok; ++i) ok = v[i] == v[i - d];
        if (ok) {
            v.resize(d);
            break;
        }
    }
    while (!u.empty() && u.back() == v.back()) {
        u.pop_back();
        std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    }
    return {u, v};
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<Word> words_up_to(int k, int max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_start = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i)
            for (Letter a = 0; a < k; ++a) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        level_start = level_end;
    }
    return out;
}

bool member_upword_det_from(const DetOmega& a, State from, const UpWord& w) {
    if (w.v.empty()) return false;
    State s = run_word(a.ts, from, w.u);
    std::vector<int> seen_at(a.ts.n, -1);
    std::vector<bool> period_acc;
    for (int i = 0;; ++i) {
        if (seen_at[s] >= 0) {
            bool any = false;
            for (int j = seen_at[s]; j < i; ++j) any = any || period_acc[j];
            return a.polarity == Polarity::Buchi ? any : !any;
        }
        seen_at[s] = i;
        bool acc = false;
        for (Letter c : w.v) {
            if (c < 0 || c >= a.ts.k()) throw AlphabetError("letter index out of range");
            acc = acc || a.is_acc(s, c);
            s = a.ts.next(s, c);
        }
        period_acc.push_back(acc);
    }
}

bool member_upword_det(const DetOmega& a, const UpWord& w) {
    return member_upword_det_from(a, a.ts.initial, w);
}

Dfa dfa_product(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& final_rule) {
    if (a.ts.sigma != b.ts.sigma) throw AlphabetError("product of automata over different alphabets");
    const int k = a.ts.k();
    std::map<std::pair<State, State>, State> id;
    std::vector<std::pair<State, State>> pairs;
    auto get = [&](State p, State q) {
        auto [it, fresh] = id.emplace(std::make_pair(p, q), static_cast<State>(pairs.size()));
        if (fresh) pairs.emplace_back(p, q);
        return it->second;
    };
    get(a.ts.initial, b.ts.initial);
    std::vector<State> delta;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        for (Letter c = 0; c < k; ++c) delta.push_back(get(a.ts.next(p, c), b.ts.next(q, c)));
    }
    Dfa out(DetTS(a.ts.sigma, static_cast<int>(pairs.size()), 0));
    out.ts.delta = std::move(delta);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out.finals[i] = final_rule(a.finals[pairs[i].first], b.finals[pairs[i].second]);
    return out;
}

namespace {

// Renumber states reachable from the initial state in BFS letter order;
// block[s] gives the class of s, classes with equal block share a state.
Dfa quotient_bfs(const Dfa& a, const std::vector<int>& block) {
    const int k = a.ts.k();
    std::map<int, State> id;
    std::vector<State> rep;
    std::deque<State> queue;
    auto get = [&](State s) {
        auto [it, fresh] = id.emplace(block[s], static_cast<State>(rep.size()));
        if (fresh) {
            rep.push_back(s);
            queue.push_back(s);
        }
        return it->second;
    };
    get(a.ts.initial);
    std::vector<State> delta;
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (Letter c = 0; c < k; ++c) delta.push_back(get(a.ts.next(s, c)));
    }
    Dfa out(DetTS(a.ts.sigma, static_cast<int>(rep.size()), 0));
    out.ts.delta = std::move(delta);
    for (std::size_t i = 0; i < rep.size(); ++i) out.finals[i] = a.finals[rep[i]];
    return out;
}

}  // namespace

Dfa dfa_canonical(const Dfa& a) {
    std::vector<int> block(a.ts.n);
    for (int i = 0; i < a.ts.n; ++i) block[i] = i;
    return quotient_bfs(a, block);
}

Dfa dfa_minimize(const Dfa& in) {
    Dfa a = dfa_canonical(in);
    const int n = a.ts.n, k = a.ts.k();
    std::vector<int> block(n);
    for (int s = 0; s < n; ++s) block[s] = a.finals[s] ? 1 : 0;
    int count = 0;
    while (true) {
        std::map<std::vector<int>, int> sig_id;
        std::vector<int> next(n);
        for (int s = 0; s < n; ++s) {
            std::vector<int> sig{block[s]};
            for (Letter c = 0; c < k; ++c) sig.push_back(block[a.ts.next(s, c)]);
            next[s] = sig_id.emplace(std::move(sig), static_cast<int>(sig_id.size())).first->second;
        }
        int new_count = static_cast<int>(sig_id.size());
        block = std::move(next);
        if (new_count == count) break;
        count = new_count;
    }
    return quotient_bfs(a, block);
}

Dfa dfa_complement(const Dfa& a) {
    Dfa out = a;
    out.finals.flip();
    return out;
}

bool dfa_empty(const Dfa& a) {
    auto reach = reachable_states(a.ts);
    for (int s = 0; s < a.ts.n; ++s)
        if (reach[s] && a.finals[s]) return false;
    return true;
}

bool dfa_equivalent(const Dfa& a, const Dfa& b) {
    return dfa_empty(dfa_product(a, b, [](bool x, bool y) { return x != y; }));
}

bool dfa_isomorphic(const Dfa& a, const Dfa& b) {
    Dfa x = dfa_canonical(a), y = dfa_canonical(b);
    return x.ts.sigma == y.ts.sigma && x.ts.delta == y.ts.delta && x.finals == y.finals;
}

std::vector<bool> reachable_states(const DetTS& ts) {
    std::vector<bool> seen(ts.n, false);
    std::vector<State> stack{ts.initial};
    seen[ts.initial] = true;
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (Letter c = 0; c < ts.k(); ++c) {
            State t = ts.next(s, c);
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

Nba as_nba(const DetOmega& d) {
    if (d.polarity != Polarity::Buchi) throw PreconditionError("expected a Büchi automaton");
    Nba out;
    out.sigma = d.ts.sigma;
    out.n = d.ts.n;
    out.initials = {d.ts.initial};
    for (State s = 0; s < d.ts.n; ++s)
        for (Letter c = 0; c < d.ts.k(); ++c) out.add(s, c, d.ts.next(s, c), d.is_acc(s, c));
    return out;
}

DetOmega with_initial(const DetOmega& d, State s) {
    DetOmega out = d;
    out.ts.initial = s;
    return out;
}

}  // namespace omega
