#include "omega/congruence.hpp"

#include <deque>
#include <unordered_map>

#include "omega/graph.hpp"

namespace omega {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Periodic: return "periodic";
        case Flavor::Syntactic: return "syntactic";
        case Flavor::Recurrent: return "recurrent";
        case Flavor::Limit: return "limit";
    }
    return "?";
}

Flavor parse_flavor(const std::string& name) {
    for (Flavor f : all_flavors())
        if (flavor_name(f) == name) return f;
    throw PreconditionError("unknown flavor '" + name + "'");
}

const std::vector<Flavor>& all_flavors() {
    static const std::vector<Flavor> v{Flavor::Periodic, Flavor::Syntactic, Flavor::Recurrent, Flavor::Limit};
    return v;
}

Profile profile_identity(int n) {
    Profile p(n);
    for (int s = 0; s < n; ++s) p[s] = static_cast<std::uint32_t>(s) << 1;
    return p;
}

Profile profile_of_letter(const DetOmega& d, Letter a) {
    Profile p(d.ts.n);
    for (State s = 0; s < d.ts.n; ++s)
        p[s] = (static_cast<std::uint32_t>(d.ts.next(s, a)) << 1) | (d.is_acc(s, a) ? 1u : 0u);
    return p;
}

Profile profile_compose(const Profile& x, const Profile& y) {
    Profile r(x.size());
    for (std::size_t s = 0; s < x.size(); ++s) {
        std::uint32_t mid = x[s] >> 1;
        r[s] = (y[mid] & ~1u) | ((x[s] | y[mid]) & 1u);
    }
    return r;
}

bool profile_accepts_from(const Profile& p, State s, Polarity pol) {
    std::vector<int> seen(p.size(), -1);
    std::vector<bool> bits;
    for (int i = 0;; ++i) {
        if (seen[s] >= 0) {
            bool any = false;
            for (int j = seen[s]; j < i; ++j) any = any || bits[j];
            return pol == Polarity::Buchi ? any : !any;
        }
        seen[s] = i;
        bits.push_back(p[s] & 1u);
        s = static_cast<State>(p[s] >> 1);
    }
}

namespace {

struct ProfileHash {
    std::size_t operator()(const Profile& p) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

}  // namespace

ProfileMonoid build_profile_monoid(const DetOmega& d, int cap) {
    const int k = d.ts.k();
    std::vector<Profile> letters;
    for (Letter a = 0; a < k; ++a) letters.push_back(profile_of_letter(d, a));
    ProfileMonoid m;
    std::unordered_map<Profile, State, ProfileHash> id;
    std::vector<State> delta;
    auto get = [&](Profile p) {
        auto it = id.find(p);
        if (it != id.end()) return it->second;
        if (static_cast<int>(m.elements.size()) >= cap)
            throw ResourceError("profile monoid exceeds cap of " + std::to_string(cap) + " elements");
        State s = static_cast<State>(m.elements.size());
        id.emplace(p, s);
        m.elements.push_back(std::move(p));
        return s;
    };
    get(profile_identity(d.ts.n));
    for (std::size_t i = 0; i < m.elements.size(); ++i)
        for (Letter a = 0; a < k; ++a) {
            Profile next = profile_compose(m.elements[i], letters[a]);
            delta.push_back(get(std::move(next)));
        }
    m.ts = DetTS(d.ts.sigma, static_cast<int>(m.elements.size()), 0);
    m.ts.delta = std::move(delta);
    return m;
}

const ProfileMonoid& LeadingQuotient::profiles() const {
    if (!monoid) monoid = std::make_shared<const ProfileMonoid>(build_profile_monoid(ref, profile_cap));
    return *monoid;
}

LeadingQuotient compute_leading(const DetOmega& d, int profile_cap) {
    d.ts.validate();
    if (d.polarity != Polarity::Buchi) throw PreconditionError("reference must be a Büchi automaton");
    const int k = d.ts.k();

    auto reach = reachable_states(d.ts);
    std::vector<State> old_to_new(d.ts.n, -1);
    int n = 0;
    for (State s = 0; s < d.ts.n; ++s)
        if (reach[s]) old_to_new[s] = n++;
    LeadingQuotient q;
    q.profile_cap = profile_cap;
    q.ref = DetOmega(DetTS(d.ts.sigma, n, old_to_new[d.ts.initial]));
    for (State s = 0; s < d.ts.n; ++s) {
        if (!reach[s]) continue;
        for (Letter a = 0; a < k; ++a) {
            q.ref.ts.set(old_to_new[s], a, old_to_new[d.ts.next(s, a)]);
            q.ref.set_acc(old_to_new[s], a, d.is_acc(s, a));
        }
    }

    std::vector<int> raw(n, -1);
    std::vector<State> reps;
    for (State s = 0; s < n; ++s) {
        for (std::size_t c = 0; c < reps.size() && raw[s] < 0; ++c)
            if (dba_state_equiv(q.ref, reps[c], s)) raw[s] = static_cast<int>(c);
        if (raw[s] < 0) {
            raw[s] = static_cast<int>(reps.size());
            reps.push_back(s);
        }
    }

    // Canonical numbering by breadth-first search over classes.
    std::vector<int> order(reps.size(), -1);
    std::vector<int> by_order;
    std::vector<Word> words;
    std::deque<int> queue;
    order[raw[q.ref.ts.initial]] = 0;
    by_order.push_back(raw[q.ref.ts.initial]);
    words.push_back({});
    queue.push_back(raw[q.ref.ts.initial]);
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) {
            int t = raw[q.ref.ts.next(reps[c], a)];
            if (order[t] < 0) {
                order[t] = static_cast<int>(by_order.size());
                by_order.push_back(t);
                Word w = words[order[c]];
                w.push_back(a);
                words.push_back(std::move(w));
                queue.push_back(t);
            }
        }
    }
    const int classes = static_cast<int>(by_order.size());
    q.class_of.assign(n, -1);
    for (State s = 0; s < n; ++s) q.class_of[s] = order[raw[s]];
    q.leading = DetTS(d.ts.sigma, classes, 0);
    q.rep_state.resize(classes);
    for (int c = 0; c < classes; ++c) {
        q.rep_state[c] = reps[by_order[c]];
        for (Letter a = 0; a < k; ++a) q.leading.set(c, a, q.class_of[q.ref.ts.next(q.rep_state[c], a)]);
    }
    q.rep_word = std::move(words);
    return q;
}

Dfa periodic_lang_dfa(const LeadingQuotient& q, int u_class) {
    const auto& m = q.profiles();
    Dfa out(m.ts);
    const State rep = q.rep_state.at(u_class);
    for (std::size_t e = 1; e < m.elements.size(); ++e)
        out.finals[e] = profile_accepts_from(m.elements[e], rep, Polarity::Buchi);
    return out;
}

Dfa cu_dfa(const LeadingQuotient& q, int u_class) {
    Dfa out(q.leading);
    out.ts.initial = u_class;
    out.finals[u_class] = true;
    return out;
}

Dfa progress_dfa(const LeadingQuotient& q, int u_class, Flavor flavor) {
    switch (flavor) {
        case Flavor::Periodic:
            return dfa_minimize(periodic_lang_dfa(q, u_class));
        case Flavor::Recurrent:
            return dfa_minimize(
                dfa_product(cu_dfa(q, u_class), periodic_lang_dfa(q, u_class), [](bool c, bool p) { return c && p; }));
        case Flavor::Limit:
            return dfa_minimize(
                dfa_product(cu_dfa(q, u_class), periodic_lang_dfa(q, u_class), [](bool c, bool p) { return !c || p; }));
        case Flavor::Syntactic:
            return dfa_product(cu_dfa(q, u_class), progress_dfa(q, u_class, Flavor::Limit),
                               [](bool c, bool l) { return c && l; });
    }
    throw PreconditionError("unknown flavor");
}

Dfa cosafety_vu_dfa(const LeadingQuotient& q, int u_class) {
    const DetOmega& d = q.ref;
    const int n = d.ts.n, k = d.ts.k();
    Graph reduced(n);
    for (State s = 0; s < n; ++s)
        for (Letter a = 0; a < k; ++a)
            if (!d.is_acc(s, a)) reduced[s].push_back(d.ts.next(s, a));
    auto comps = sccs(reduced);
    std::vector<int> comp_of(n);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int s : comps[c]) comp_of[s] = static_cast<int>(c);

    // States 0..n-1 follow the reference, state n is the final sink.
    DetTS ts(d.ts.sigma, n + 1, 0);
    for (State s = 0; s < n; ++s)
        for (Letter a = 0; a < k; ++a) {
            State t = d.ts.next(s, a);
            bool jump = d.is_acc(s, a) || comp_of[s] != comp_of[t];
            ts.set(s, a, jump ? n : t);
        }
    for (Letter a = 0; a < k; ++a) ts.set(n, a, n);

    std::optional<Dfa> acc;
    for (State s = 0; s < n; ++s) {
        if (q.class_of[s] != u_class) continue;
        Dfa dq(ts);
        dq.ts.initial = s;
        dq.finals[n] = true;
        acc = acc ? dfa_product(*acc, dq, [](bool x, bool y) { return x && y; }) : dq;
    }
    if (!acc) throw PreconditionError("leading class has no reference state");
    return dfa_minimize(*acc);
}

RefinementReport check_rp_refinement(const LeadingQuotient& q, int u_class, Flavor flavor, int bound) {
    RefinementReport report;
    if (bound <= 0) return report;
    const Dfa p = progress_dfa(q, u_class, flavor);
    const auto words = words_up_to(q.leading.k(), bound);
    const State rep = q.rep_state.at(u_class);
    std::vector<std::vector<const Word*>> groups(p.size());
    for (const auto& w : words) groups[run_word(p.ts, p.ts.initial, w)].push_back(&w);
    auto returns = [&](const Word& z) { return run_word(q.leading, u_class, z) == u_class; };
    auto member = [&](const Word& z) { return member_upword_det_from(q.ref, rep, UpWord{{}, z}); };
    for (const auto& g : groups)
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                ++report.pairs_checked;
                for (const auto& v : words) {
                    Word xv = concat(*g[i], v), yv = concat(*g[j], v);
                    if (returns(xv) && returns(yv) && member(xv) != member(yv)) {
                        if (report.violations.size() < 16) report.violations.push_back({*g[i], *g[j], v});
                        break;
                    }
                }
            }
    return report;
}

}  // namespace omega
