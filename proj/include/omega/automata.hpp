#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace omega {

using Letter = int;
using State = int;
using Word = std::vector<Letter>;

struct AlphabetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when a construction exceeds a configured size cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::string& name(Letter a) const { return letters_.at(a); }
    const std::vector<std::string>& letters() const { return letters_; }
    Letter index(const std::string& name) const;
    bool single_char() const;

    // "ε" for the empty word; letters concatenated when all are one
    // character, otherwise joined with '.'.
    std::string render(const Word& w) const;
    Word parse(const std::string& text) const;

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::vector<std::string> letters_;
    std::unordered_map<std::string, Letter> index_;
};

struct DetTS {
    Alphabet sigma;
    int n = 0;
    State initial = 0;
    std::vector<State> delta;  // n * |sigma|, row-major by state

    DetTS() = default;
    DetTS(Alphabet s, int states, State init);

    int k() const { return sigma.size(); }
    State next(State s, Letter a) const { return delta[s * k() + a]; }
    void set(State s, Letter a, State t) { delta[s * k() + a] = t; }
    void validate() const;
};

State run_word(const DetTS& ts, State from, const Word& w);

struct Dfa {
    DetTS ts;
    std::vector<bool> finals;

    Dfa() = default;
    explicit Dfa(DetTS t) : ts(std::move(t)), finals(ts.n, false) {}
    int size() const { return ts.n; }
    bool accepts(const Word& w) const { return finals[run_word(ts, ts.initial, w)]; }
};

enum class Polarity { Buchi, CoBuchi };

struct DetOmega {
    DetTS ts;
    std::vector<bool> acc;  // indexed like ts.delta
    Polarity polarity = Polarity::Buchi;

    DetOmega() = default;
    explicit DetOmega(DetTS t) : ts(std::move(t)), acc(ts.delta.size(), false) {}
    int size() const { return ts.n; }
    bool is_acc(State s, Letter a) const { return acc[s * ts.k() + a]; }
    void set_acc(State s, Letter a, bool v = true) { acc[s * ts.k() + a] = v; }
};

struct NbaEdge {
    State src;
    Letter letter;
    State dst;
    bool acc;
    bool operator<(const NbaEdge& o) const;
    bool operator==(const NbaEdge& o) const;
};

struct Nba {
    Alphabet sigma;
    int n = 0;
    std::vector<State> initials;
    std::vector<NbaEdge> trans;

    int add_state() { return n++; }
    void add(State s, Letter a, State t, bool acc) { trans.push_back({s, a, t, acc}); }
    // Sorts transitions and removes duplicates.
    void normalize();
};

struct UpWord {
    Word u;
    Word v;
    bool operator==(const UpWord& o) const { return u == o.u && v == o.v; }
    bool operator<(const UpWord& o) const;
};

struct Lasso {
    Word stem;
    Word loop;
    bool operator==(const Lasso& o) const { return stem == o.stem && loop == o.loop; }
    UpWord upword() const { return {stem, loop}; }
};

Word concat(const Word& a, const Word& b);
Word power(const Word& w, int k);
// Shortest-prefix, primitive-period presentation of u·v^ω.
UpWord canonical_upword(const UpWord& w);
// Shortlex order on words.
bool shortlex_less(const Word& a, const Word& b);
// All words of length <= max_len in shortlex order.
std::vector<Word> words_up_to(int k, int max_len);

bool member_upword_det(const DetOmega& a, const UpWord& w);
bool member_upword_det_from(const DetOmega& a, State from, const UpWord& w);
bool member_upword_nba(const Nba& a, const UpWord& w);

Dfa dfa_product(const Dfa& a, const Dfa& b, const std::function<bool(bool, bool)>& final_rule);
// Reachable part, states numbered by breadth-first search in letter order.
Dfa dfa_canonical(const Dfa& a);
Dfa dfa_minimize(const Dfa& a);
Dfa dfa_complement(const Dfa& a);
bool dfa_equivalent(const Dfa& a, const Dfa& b);
bool dfa_isomorphic(const Dfa& a, const Dfa& b);
bool dfa_empty(const Dfa& a);

// Deterministic automaton as an NBA; requires Büchi polarity.
Nba as_nba(const DetOmega& d);
DetOmega with_initial(const DetOmega& d, State s);
std::vector<bool> reachable_states(const DetTS& ts);

}  // namespace omega
