#pragma once

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega/automata.hpp"
#include "omega/fdfa.hpp"

namespace omega {

class Teacher {
public:
    virtual ~Teacher() = default;
    virtual const Alphabet& alphabet() const = 0;
    virtual bool member(const UpWord& w) = 0;
    // nullopt accepts the hypothesis; otherwise a decomposition normalized
    // for the hypothesis on which it disagrees with the target.
    virtual std::optional<UpWord> equivalent(const Fdfa& h) = 0;
};

struct EqOptions {
    // Depth bound for the decomposition search; unset searches to a fixpoint.
    std::optional<int> bound;
    // Bound for the saturation check that gates the complement product.
    int saturation_bound = 2;
    std::size_t search_cap = 4'000'000;
};

// Default search depth (leading size + max progress size) · reference size + 2.
int default_eq_bound(const Fdfa& h, int reference_size);

std::unique_ptr<Teacher> teacher_from_dba(const DetOmega& d, EqOptions opts = {});
// The target must pass the bounded saturation check.
std::unique_ptr<Teacher> teacher_from_fdfa(const Fdfa& f, EqOptions opts = {});

struct LeadingTable {
    std::vector<Word> reps;  // S̃, shortlex order
    std::vector<std::pair<Word, Word>> experiments;
    std::map<Word, std::vector<bool>> rows;  // S = S̃ ∪ S̃·Σ
};

struct ProgressTable {
    std::vector<Word> reps;
    std::vector<Word> experiments;  // experiments[0] = ε
    std::map<Word, std::vector<bool>> rows;
};

struct Refinement {
    bool leading = true;
    State progress_class = 0;  // leading state whose progress table grows
    std::pair<Word, Word> leading_experiment;
    Word progress_experiment;
};

struct LearnStats {
    long mq = 0;
    long eq = 0;
    int iterations = 0;
};

struct IterationLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LearnLimits {
    int max_iterations = 2000;
    int max_rows = 20000;
};

class LimitLearner {
public:
    explicit LimitLearner(Teacher& teacher, std::ostream* log = nullptr, LearnLimits limits = {});

    Fdfa hypothesis() const;
    Refinement analyze(const UpWord& counterexample);
    void refine(const Refinement& r);
    // Runs equivalence queries until the teacher accepts.
    Fdfa run();

    const LeadingTable& leading_table() const { return leading_; }
    const ProgressTable& progress_table(State leading_state) const { return progress_.at(leading_state); }
    const LearnStats& stats() const { return stats_; }
    bool mq(const Word& u, const Word& v);
    std::string dump() const;

private:
    void close_leading();
    void close_progress(State q);
    void reset_progress();
    std::vector<bool> leading_row(const Word& s);
    std::vector<bool> progress_row(State q, const Word& x);
    State leading_state(const Word& w) const;
    const Word& leading_rep(State q) const { return leading_.reps[q]; }

    Teacher& teacher_;
    std::ostream* log_;
    LearnLimits limits_;
    LearnStats stats_;
    std::map<UpWord, bool> cache_;
    LeadingTable leading_;
    DetTS leading_ts_;
    std::vector<ProgressTable> progress_;
    std::vector<Dfa> progress_dfa_;
};

struct LearnResult {
    Fdfa hypothesis;
    LearnStats stats;
};

LearnResult learn_limit_fdfa(Teacher& teacher, LearnLimits limits = {}, std::ostream* log = nullptr);

}  // namespace omega
