#include "omega/learn.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "omega/congruence.hpp"
#include "omega/graph.hpp"
#include "omega/translate.hpp"

namespace omega {

// ---------------------------------------------------------------- teachers

namespace {

// Finite summary of a period word for the target, plus the target states
// reached by prefixes; member(t, s) decides u·v^ω for t = target(u), s = summary(v).
class TargetModel {
public:
    virtual ~TargetModel() = default;
    virtual int initial() const = 0;
    virtual int step(int t, Letter a) const = 0;
    virtual Profile identity() const = 0;
    virtual Profile extend(const Profile& s, Letter a) const = 0;
    virtual bool member(int t, const Profile& s) const = 0;
};

class DbaModel : public TargetModel {
public:
    explicit DbaModel(const DetOmega& d) : d_(d) {
        for (Letter a = 0; a < d.ts.k(); ++a) letters_.push_back(profile_of_letter(d, a));
    }
    int initial() const override { return d_.ts.initial; }
    int step(int t, Letter a) const override { return d_.ts.next(t, a); }
    Profile identity() const override { return profile_identity(d_.ts.n); }
    Profile extend(const Profile& s, Letter a) const override { return profile_compose(s, letters_[a]); }
    bool member(int t, const Profile& s) const override { return profile_accepts_from(s, t, d_.polarity); }

private:
    const DetOmega& d_;
    std::vector<Profile> letters_;
};

// Summary: the leading map of v followed by, for every leading state q, the
// map of v on the progress DFA of q.
class FdfaModel : public TargetModel {
public:
    explicit FdfaModel(const Fdfa& g) : g_(g) {
        int off = g.leading.n;
        for (const auto& p : g.progress) {
            offset_.push_back(off);
            off += p.ts.n;
        }
        size_ = off;
    }
    int initial() const override { return g_.leading.initial; }
    int step(int t, Letter a) const override { return g_.leading.next(t, a); }
    Profile identity() const override {
        Profile s(size_);
        for (State q = 0; q < g_.leading.n; ++q) s[q] = q;
        for (std::size_t q = 0; q < g_.progress.size(); ++q)
            for (int j = 0; j < g_.progress[q].ts.n; ++j) s[offset_[q] + j] = j;
        return s;
    }
    Profile extend(const Profile& s, Letter a) const override {
        Profile r(size_);
        for (State q = 0; q < g_.leading.n; ++q) r[q] = g_.leading.next(s[q], a);
        for (std::size_t q = 0; q < g_.progress.size(); ++q)
            for (int j = 0; j < g_.progress[q].ts.n; ++j)
                r[offset_[q] + j] = g_.progress[q].ts.next(s[offset_[q] + j], a);
        return r;
    }
    bool member(int t, const Profile& s) const override {
        std::vector<int> seen(g_.leading.n, -1);
        int i = 0;
        while (seen[t] < 0) {
            seen[t] = i++;
            t = static_cast<int>(s[t]);
        }
        const int period = i - seen[t];
        const Dfa& p = g_.progress[t];
        State x = p.ts.initial;
        for (int r = 0; r < period; ++r) x = static_cast<State>(s[offset_[t] + x]);
        return p.finals[x];
    }

private:
    const Fdfa& g_;
    std::vector<int> offset_;
    int size_ = 0;
};

struct ProfileHash {
    std::size_t operator()(const Profile& p) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

// All decompositions (u, v) normalized for h, searched exhaustively over the
// finite quotient, for one on which h and the target disagree.
std::optional<UpWord> decomposition_search(const Fdfa& h, const TargetModel& target, const EqOptions& opts) {
    const int k = h.leading.k();
    std::map<std::pair<State, int>, Word> prefix;
    std::deque<std::pair<State, int>> queue;
    std::pair<State, int> start{h.leading.initial, target.initial()};
    prefix[start] = {};
    queue.push_back(start);
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < k; ++a) {
            std::pair<State, int> nxt{h.leading.next(cur.first, a), target.step(cur.second, a)};
            if (prefix.count(nxt)) continue;
            Word w = prefix[cur];
            w.push_back(a);
            prefix[nxt] = std::move(w);
            queue.push_back(nxt);
        }
    }
    std::vector<std::vector<std::pair<int, const Word*>>> by_leading(h.leading.n);
    for (const auto& [key, w] : prefix) by_leading[key.first].push_back({key.second, &w});

    std::optional<UpWord> best;
    std::size_t visited = 0;
    for (State m = 0; m < h.leading.n; ++m) {
        if (by_leading[m].empty()) continue;
        const Dfa& N = h.progress[m];
        struct Node {
            State lead;
            State prog;
            Profile summary;
            Word v;
        };
        std::unordered_map<Profile, std::vector<std::pair<State, State>>, ProfileHash> seen;
        auto mark = [&](const Node& n) {
            auto& v = seen[n.summary];
            std::pair<State, State> key{n.lead, n.prog};
            if (std::find(v.begin(), v.end(), key) != v.end()) return false;
            v.push_back(key);
            return true;
        };
        std::deque<Node> q;
        Node root{m, N.ts.initial, target.identity(), {}};
        mark(root);
        q.push_back(std::move(root));
        bool found = false;
        while (!q.empty() && !found) {
            Node cur = std::move(q.front());
            q.pop_front();
            if (best && cur.v.size() >= best->v.size() + best->u.size()) break;
            if (opts.bound && static_cast<int>(cur.v.size()) >= *opts.bound) continue;
            for (Letter a = 0; a < k && !found; ++a) {
                Node nxt{h.leading.next(cur.lead, a), N.ts.next(cur.prog, a), target.extend(cur.summary, a), cur.v};
                nxt.v.push_back(a);
                if (!mark(nxt)) continue;
                if (++visited > opts.search_cap)
                    throw ResourceError("equivalence search exceeds cap of " + std::to_string(opts.search_cap));
                if (nxt.lead == m) {
                    const bool hacc = N.finals[nxt.prog];
                    for (const auto& [t, u] : by_leading[m])
                        if (hacc != target.member(t, nxt.summary)) {
                            UpWord cand{*u, nxt.v};
                            if (!best || cand < *best) best = cand;
                            found = true;
                        }
                }
                q.push_back(std::move(nxt));
            }
        }
    }
    return best;
}

class ExactTeacher : public Teacher {
public:
    explicit ExactTeacher(EqOptions opts) : opts_(opts) {}

    std::optional<UpWord> equivalent(const Fdfa& h) override {
        h.validate();
        if (auto l = hypothesis_excess(h))
            if (auto w = effective(h, *l)) return w;
        if (is_saturated_bounded(h, opts_.saturation_bound).ok)
            if (auto l = hypothesis_deficit(h))
                if (auto w = effective(h, *l)) return w;
        return decomposition_search(h, model(), opts_);
    }

protected:
    // Lasso accepted by NBA(h) but outside the target.
    virtual std::optional<Lasso> hypothesis_excess(const Fdfa& h) = 0;
    // Lasso in the target but accepted by NBA(complement_finals(h)).
    virtual std::optional<Lasso> hypothesis_deficit(const Fdfa& h) = 0;
    virtual const TargetModel& model() const = 0;

    EqOptions opts_;

private:
    std::optional<UpWord> effective(const Fdfa& h, const Lasso& l) {
        std::vector<UpWord> cands{normalize(h, l.upword())};
        for (auto& d : decompositions(l.upword(), 3)) cands.push_back(std::move(d));
        for (const auto& d : cands)
            if (is_normalized(h, d) && accepts_decomposition(h, d) != member(d)) return d;
        return std::nullopt;
    }
};

class DbaTeacher : public ExactTeacher {
public:
    DbaTeacher(const DetOmega& d, EqOptions opts) : ExactTeacher(opts), d_(d), model_(d_) {
        d_.ts.validate();
        if (d_.polarity != Polarity::Buchi) throw PreconditionError("teacher reference must be a Büchi automaton");
    }
    const Alphabet& alphabet() const override { return d_.ts.sigma; }
    bool member(const UpWord& w) override { return member_upword_det(d_, w); }

protected:
    std::optional<Lasso> hypothesis_excess(const Fdfa& h) override { return nba_dba_included(fdfa_to_nba(h), d_); }
    std::optional<Lasso> hypothesis_deficit(const Fdfa& h) override {
        return dba_nba_intersect(d_, fdfa_to_nba(complement_finals(h)));
    }
    const TargetModel& model() const override { return model_; }

private:
    DetOmega d_;
    DbaModel model_;
};

class FdfaTeacher : public ExactTeacher {
public:
    FdfaTeacher(const Fdfa& g, EqOptions opts) : ExactTeacher(opts), g_(g), model_(g_) {
        g_.validate();
        if (!is_saturated_bounded(g_, opts.saturation_bound).ok)
            throw PreconditionError("teacher FDFA fails the bounded saturation check");
        nba_ = fdfa_to_nba(g_);
        co_nba_ = fdfa_to_nba(complement_finals(g_));
    }
    const Alphabet& alphabet() const override { return g_.sigma(); }
    bool member(const UpWord& w) override { return accepts_upword(g_, w); }

protected:
    std::optional<Lasso> hypothesis_excess(const Fdfa& h) override { return nba_intersect(fdfa_to_nba(h), co_nba_); }
    std::optional<Lasso> hypothesis_deficit(const Fdfa& h) override {
        return nba_intersect(nba_, fdfa_to_nba(complement_finals(h)));
    }
    const TargetModel& model() const override { return model_; }

private:
    Fdfa g_;
    FdfaModel model_;
    Nba nba_, co_nba_;
};

}  // namespace

int default_eq_bound(const Fdfa& h, int reference_size) {
    int k = 0;
    for (const auto& p : h.progress) k = std::max(k, p.ts.n);
    return (h.leading.n + k) * reference_size + 2;
}

std::unique_ptr<Teacher> teacher_from_dba(const DetOmega& d, EqOptions opts) {
    return std::make_unique<DbaTeacher>(d, opts);
}

std::unique_ptr<Teacher> teacher_from_fdfa(const Fdfa& f, EqOptions opts) {
    return std::make_unique<FdfaTeacher>(f, opts);
}

// ----------------------------------------------------------------- learner

LimitLearner::LimitLearner(Teacher& teacher, std::ostream* log, LearnLimits limits)
    : teacher_(teacher), log_(log), limits_(limits) {
    leading_.reps = {Word{}};
    for (Letter a = 0; a < teacher_.alphabet().size(); ++a) leading_.experiments.push_back({Word{}, Word{a}});
    close_leading();
    reset_progress();
}

bool LimitLearner::mq(const Word& u, const Word& v) {
    if (v.empty()) return false;
    UpWord key = canonical_upword({u, v});
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    bool r = teacher_.member({u, v});
    ++stats_.mq;
    if (log_) {
        const auto& s = teacher_.alphabet();
        *log_ << "MQ " << s.render(u) << ' ' << s.render(v) << ' ' << (r ? 1 : 0) << '\n';
    }
    cache_.emplace(key, r);
    return r;
}

std::vector<bool> LimitLearner::leading_row(const Word& s) {
    auto& row = leading_.rows[s];
    for (std::size_t e = row.size(); e < leading_.experiments.size(); ++e) {
        const auto& [x, y] = leading_.experiments[e];
        row.push_back(mq(concat(s, x), y));
    }
    return row;
}

void LimitLearner::close_leading() {
    const int k = teacher_.alphabet().size();
    while (true) {
        std::map<std::vector<bool>, bool> rep_rows;
        for (const auto& r : leading_.reps) rep_rows[leading_row(r)] = true;
        std::optional<Word> promote;
        for (const auto& r : leading_.reps)
            for (Letter a = 0; a < k; ++a) {
                Word s = r;
                s.push_back(a);
                if (!rep_rows.count(leading_row(s)) && (!promote || shortlex_less(s, *promote))) promote = s;
            }
        if (!promote) break;
        leading_.reps.push_back(*promote);
        std::sort(leading_.reps.begin(), leading_.reps.end(), shortlex_less);
        if (static_cast<int>(leading_.rows.size()) > limits_.max_rows)
            throw IterationLimitError("leading table exceeds row limit\n" + dump());
    }
    std::map<std::vector<bool>, State> index;
    for (std::size_t i = 0; i < leading_.reps.size(); ++i) index[leading_.rows[leading_.reps[i]]] = static_cast<State>(i);
    leading_ts_ = DetTS(teacher_.alphabet(), static_cast<int>(leading_.reps.size()), 0);
    for (std::size_t i = 0; i < leading_.reps.size(); ++i)
        for (Letter a = 0; a < k; ++a) {
            Word s = leading_.reps[i];
            s.push_back(a);
            leading_ts_.set(static_cast<State>(i), a, index.at(leading_.rows[s]));
        }
}

State LimitLearner::leading_state(const Word& w) const { return run_word(leading_ts_, leading_ts_.initial, w); }

std::vector<bool> LimitLearner::progress_row(State q, const Word& x) {
    auto& t = progress_[q];
    auto& row = t.rows[x];
    const Word& u = leading_rep(q);
    for (std::size_t e = row.size(); e < t.experiments.size(); ++e) {
        Word xv = concat(x, t.experiments[e]);
        bool left = run_word(leading_ts_, q, xv) != q;
        row.push_back(left || mq(u, xv));
    }
    return row;
}

void LimitLearner::close_progress(State q) {
    const int k = teacher_.alphabet().size();
    auto& t = progress_[q];
    while (true) {
        std::map<std::vector<bool>, bool> rep_rows;
        for (const auto& r : t.reps) rep_rows[progress_row(q, r)] = true;
        std::optional<Word> promote;
        for (std::size_t i = 0; i < t.reps.size(); ++i)
            for (Letter a = 0; a < k; ++a) {
                Word s = t.reps[i];
                s.push_back(a);
                if (!rep_rows.count(progress_row(q, s)) && (!promote || shortlex_less(s, *promote))) promote = s;
            }
        if (!promote) break;
        t.reps.push_back(*promote);
        std::sort(t.reps.begin(), t.reps.end(), shortlex_less);
        if (static_cast<int>(t.rows.size()) > limits_.max_rows)
            throw IterationLimitError("progress table exceeds row limit\n" + dump());
    }
    std::map<std::vector<bool>, State> index;
    for (std::size_t i = 0; i < t.reps.size(); ++i) index[t.rows[t.reps[i]]] = static_cast<State>(i);
    Dfa p(DetTS(teacher_.alphabet(), static_cast<int>(t.reps.size()), 0));
    for (std::size_t i = 0; i < t.reps.size(); ++i) {
        p.finals[i] = t.rows[t.reps[i]][0];
        for (Letter a = 0; a < k; ++a) {
            Word s = t.reps[i];
            s.push_back(a);
            p.ts.set(static_cast<State>(i), a, index.at(t.rows[s]));
        }
    }
    progress_dfa_[q] = std::move(p);
}

void LimitLearner::reset_progress() {
    progress_.assign(leading_ts_.n, ProgressTable{});
    progress_dfa_.assign(leading_ts_.n, Dfa());
    for (State q = 0; q < leading_ts_.n; ++q) {
        progress_[q].reps = {Word{}};
        progress_[q].experiments = {Word{}};
        close_progress(q);
    }
}

Fdfa LimitLearner::hypothesis() const {
    Fdfa h;
    h.leading = leading_ts_;
    h.progress = progress_dfa_;
    h.flavor = Flavor::Limit;
    for (const auto& r : leading_.reps) h.labels.emplace_back(r);
    return h;
}

Refinement LimitLearner::analyze(const UpWord& counterexample) {
    const Fdfa h = hypothesis();
    auto effective = [&](const UpWord& d) { return is_normalized(h, d) && accepts_decomposition(h, d) != mq(d.u, d.v); };
    std::optional<UpWord> cex;
    UpWord first = normalize(h, counterexample);
    if (effective(first)) {
        cex = first;
    } else {
        for (const auto& d : decompositions(counterexample, 3))
            if (effective(d)) {
                cex = d;
                break;
            }
    }
    if (!cex) throw PreconditionError("not a counterexample for the current hypothesis");
    const Word& x = cex->u;
    const Word& y = cex->v;
    const State xs = leading_state(x);
    const Word& xt = leading_rep(xs);

    Refinement r;
    if (mq(x, y) != mq(xt, y)) {
        r.leading = true;
        const std::size_t n = x.size();
        auto value = [&](std::size_t i) {
            Word prefix(x.begin(), x.begin() + static_cast<long>(i));
            Word rest(x.begin() + static_cast<long>(i), x.end());
            return mq(concat(leading_rep(leading_state(prefix)), rest), y);
        };
        bool prev = value(0);
        for (std::size_t j = 1; j <= n; ++j) {
            bool cur = value(j);
            if (cur != prev) {
                r.leading_experiment = {Word(x.begin() + static_cast<long>(j), x.end()), y};
                return r;
            }
        }
        throw PreconditionError("leading counterexample analysis found no breakpoint");
    }
    r.leading = false;
    r.progress_class = xs;
    const Dfa& A = progress_dfa_[xs];
    const auto& reps = progress_[xs].reps;
    const std::size_t n = y.size();
    auto value = [&](std::size_t i) {
        Word prefix(y.begin(), y.begin() + static_cast<long>(i));
        Word rest(y.begin() + static_cast<long>(i), y.end());
        Word period = concat(reps[run_word(A.ts, A.ts.initial, prefix)], rest);
        bool m = run_word(leading_ts_, xs, period) == xs;
        bool c = mq(xt, period);
        return !m || c;
    };
    bool prev = value(0);
    for (std::size_t j = 1; j <= n; ++j) {
        bool cur = value(j);
        if (cur != prev) {
            r.progress_experiment = Word(y.begin() + static_cast<long>(j), y.end());
            return r;
        }
    }
    throw PreconditionError("progress counterexample analysis found no breakpoint");
}

void LimitLearner::refine(const Refinement& r) {
    if (r.leading) {
        auto& e = leading_.experiments;
        if (std::find(e.begin(), e.end(), r.leading_experiment) != e.end())
            throw IterationLimitError("leading experiment already present\n" + dump());
        const std::size_t before = leading_.reps.size();
        e.push_back(r.leading_experiment);
        close_leading();
        if (leading_.reps.size() == before) throw IterationLimitError("leading refinement made no progress\n" + dump());
        reset_progress();
        return;
    }
    auto& t = progress_.at(r.progress_class);
    if (std::find(t.experiments.begin(), t.experiments.end(), r.progress_experiment) != t.experiments.end())
        throw IterationLimitError("progress experiment already present\n" + dump());
    const std::size_t before = t.reps.size();
    t.experiments.push_back(r.progress_experiment);
    close_progress(r.progress_class);
    if (t.reps.size() == before) throw IterationLimitError("progress refinement made no progress\n" + dump());
}

Fdfa LimitLearner::run() {
    const auto& s = teacher_.alphabet();
    while (true) {
        Fdfa h = hypothesis();
        ++stats_.eq;
        auto cex = teacher_.equivalent(h);
        if (log_) {
            *log_ << "EQ " << stats_.eq;
            if (cex)
                *log_ << " no " << s.render(cex->u) << ' ' << s.render(cex->v) << '\n';
            else
                *log_ << " yes\n";
        }
        if (!cex) return h;
        if (++stats_.iterations > limits_.max_iterations)
            throw IterationLimitError("iteration limit reached\n" + dump());
        refine(analyze(*cex));
    }
}

std::string LimitLearner::dump() const {
    const auto& s = teacher_.alphabet();
    std::ostringstream out;
    out << "leading reps:";
    for (const auto& r : leading_.reps) out << ' ' << s.render(r);
    out << "\nleading experiments:";
    for (const auto& [x, y] : leading_.experiments) out << " (" << s.render(x) << ", " << s.render(y) << ')';
    for (std::size_t q = 0; q < progress_.size(); ++q) {
        out << "\nprogress " << q << " reps:";
        for (const auto& r : progress_[q].reps) out << ' ' << s.render(r);
        out << " experiments:";
        for (const auto& e : progress_[q].experiments) out << ' ' << s.render(e);
    }
    out << "\nmq=" << stats_.mq << " eq=" << stats_.eq << '\n';
    return out.str();
}

LearnResult learn_limit_fdfa(Teacher& teacher, LearnLimits limits, std::ostream* log) {
    LimitLearner learner(teacher, log, limits);
    Fdfa h = learner.run();
    return {h, learner.stats()};
}

}  // namespace omega
