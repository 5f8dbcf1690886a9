#include "omega/fdfa.hpp"

#include <algorithm>
#include <set>

namespace omega {

void Fdfa::validate() const {
    leading.validate();
    if (static_cast<int>(progress.size()) != leading.n)
        throw PreconditionError("expected one progress DFA per leading state");
    for (const auto& p : progress) {
        p.ts.validate();
        if (p.ts.sigma != leading.sigma) throw AlphabetError("progress DFA over a different alphabet");
        if (static_cast<int>(p.finals.size()) != p.ts.n) throw PreconditionError("final set has wrong size");
    }
}

Fdfa build_canonical_fdfa(const LeadingQuotient& q, Flavor flavor) {
    Fdfa f;
    f.leading = q.leading;
    f.flavor = flavor;
    for (int c = 0; c < q.classes(); ++c) {
        f.progress.push_back(progress_dfa(q, c, flavor));
        f.labels.emplace_back(q.rep_word[c]);
    }
    return f;
}

Fdfa build_canonical_fdfa(const DetOmega& d, Flavor flavor, int profile_cap) {
    return build_canonical_fdfa(compute_leading(d, profile_cap), flavor);
}

AcceptanceMode AcceptanceMode::exhaustive(int bound) {
    if (bound < 1) throw PreconditionError("exhaustive acceptance needs a bound >= 1");
    return {ExhaustiveBounded, bound};
}

UpWord normalize(const Fdfa& f, const UpWord& w) {
    if (w.v.empty()) throw PreconditionError("period must be nonempty");
    std::vector<int> first(f.leading.n, -1);
    State s = run_word(f.leading, f.leading.initial, w.u);
    for (int i = 0;; ++i) {
        if (first[s] >= 0) {
            int j = first[s];
            return {concat(w.u, power(w.v, j)), power(w.v, i - j)};
        }
        first[s] = i;
        s = run_word(f.leading, s, w.v);
    }
}

bool is_normalized(const Fdfa& f, const UpWord& w) {
    State m = run_word(f.leading, f.leading.initial, w.u);
    return !w.v.empty() && run_word(f.leading, m, w.v) == m;
}

bool accepts_decomposition(const Fdfa& f, const UpWord& w) {
    if (w.v.empty()) return false;
    State m = run_word(f.leading, f.leading.initial, w.u);
    if (run_word(f.leading, m, w.v) != m) return false;
    return f.progress[m].accepts(w.v);
}

std::vector<UpWord> decompositions(const UpWord& w, int bound) {
    UpWord c = canonical_upword(w);
    std::vector<UpWord> out;
    const int m = static_cast<int>(c.v.size());
    for (int i = 0; i <= bound; ++i)
        for (int j = 0; j < m; ++j) {
            Word prefix = concat(c.u, power(c.v, i));
            prefix.insert(prefix.end(), c.v.begin(), c.v.begin() + j);
            Word rot(c.v.begin() + j, c.v.end());
            rot.insert(rot.end(), c.v.begin(), c.v.begin() + j);
            for (int p = 1; p <= bound; ++p) out.push_back({prefix, power(rot, p)});
        }
    return out;
}

bool accepts_upword(const Fdfa& f, const UpWord& w, AcceptanceMode mode) {
    if (mode.kind == AcceptanceMode::Saturated) return accepts_decomposition(f, normalize(f, w));
    if (accepts_decomposition(f, normalize(f, w))) return true;
    for (const auto& d : decompositions(w, mode.bound))
        if (accepts_decomposition(f, d)) return true;
    return false;
}

namespace {

std::vector<UpWord> upwords_up_to(int k, int bound) {
    auto words = words_up_to(k, bound);
    std::vector<UpWord> out;
    for (const auto& u : words)
        for (const auto& v : words)
            if (!v.empty()) out.push_back({u, v});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SaturationReport is_saturated_bounded(const Fdfa& f, int bound) {
    SaturationReport r;
    std::set<UpWord> seen;
    for (const auto& w : upwords_up_to(f.leading.k(), bound)) {
        UpWord c = canonical_upword(w);
        if (!seen.insert(c).second) continue;
        std::optional<UpWord> acc, rej;
        for (const auto& d : decompositions(c, bound)) {
            if (!is_normalized(f, d)) continue;
            auto& slot = accepts_decomposition(f, d) ? acc : rej;
            if (!slot) slot = d;
        }
        if (acc && rej) {
            r.ok = false;
            r.accepted = *acc;
            r.rejected = *rej;
            return r;
        }
    }
    return r;
}

SaturationReport is_almost_saturated_bounded(const Fdfa& f, int bound, int pump) {
    SaturationReport r;
    for (const auto& w : upwords_up_to(f.leading.k(), bound)) {
        if (!accepts_decomposition(f, w)) continue;
        for (int k = 2; k <= pump; ++k) {
            UpWord pumped{w.u, power(w.v, k)};
            if (!accepts_decomposition(f, pumped)) {
                r.ok = false;
                r.accepted = w;
                r.rejected = pumped;
                return r;
            }
        }
    }
    return r;
}

std::optional<State> sink_final_state(const Dfa& p) {
    for (State s = 0; s < p.ts.n; ++s) {
        if (!p.finals[s]) continue;
        bool sink = true;
        for (Letter a = 0; a < p.ts.k() && sink; ++a) sink = p.ts.next(s, a) == s;
        if (sink) return s;
    }
    return std::nullopt;
}

namespace {

bool is_sink(const Dfa& p, State s) {
    for (Letter a = 0; a < p.ts.k(); ++a)
        if (p.ts.next(s, a) != s) return false;
    return true;
}

}  // namespace

std::variant<Fdfa, NotApplicable> extract_fb(const Fdfa& f) {
    Fdfa out = f;
    for (State q = 0; q < f.leading.n; ++q) {
        auto& p = out.progress[q];
        bool any = std::find(p.finals.begin(), p.finals.end(), true) != p.finals.end();
        if (any && !sink_final_state(p)) return NotApplicable{q};
        for (State s = 0; s < p.ts.n; ++s) p.finals[s] = p.finals[s] && is_sink(p, s);
    }
    return out;
}

Fdfa complement_finals(const Fdfa& f) {
    Fdfa out = f;
    for (auto& p : out.progress) p.finals.flip();
    return out;
}

SizeReport size_report(const Fdfa& f) {
    SizeReport r;
    r.leading = f.leading.n;
    for (const auto& p : f.progress) {
        r.progress.push_back(p.ts.n);
        r.progress_total += p.ts.n;
    }
    r.total = r.leading + r.progress_total;
    return r;
}

}  // namespace omega
