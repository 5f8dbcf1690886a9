#pragma once

// Brute-force reference implementations used only by the tests. They share
// no algorithmic code with the library beyond the plain data types.

#include <map>
#include <vector>

#include "omega/automata.hpp"
#include "omega/congruence.hpp"
#include "omega/graph.hpp"

namespace oracle {

using omega::DetOmega;
using omega::Letter;
using omega::State;
using omega::Word;

// u·v^ω from `from` by unrolling v 2n times; Büchi polarity.
bool member(const DetOmega& d, State from, const Word& u, const Word& v);
bool member(const DetOmega& d, const Word& u, const Word& v);

// u·v^ω by tracking (state, saw-accepting) sets over unrolled periods.
bool nba_member(const omega::Nba& a, const Word& u, const Word& v);

// Batch evaluation of u·v^ω for many (u, v): the states reached by u are
// intersected with the states from which v^ω is accepted.
class NbaTable {
public:
    explicit NbaTable(const omega::Nba& a);
    bool member(const Word& u, const Word& v);

private:
    const std::vector<bool>& after(const Word& u);
    const std::vector<bool>& accepting_from(const Word& v);

    omega::Nba a_;
    std::vector<std::vector<std::pair<State, bool>>> out_;  // by state * k + letter
    std::map<Word, std::vector<bool>> after_, from_;
};

// Does a reachable cycle avoid all avoid-edges and hit every mark set?
bool has_accepting_cycle(const omega::MarkedGraph& g);

struct Congruence {
    explicit Congruence(const DetOmega& d);

    DetOmega d;
    std::vector<bool> reachable;
    std::vector<int> residual_class;  // -1 when unreachable
    int classes = 0;
    // Representative words of every reachable transition-monoid element.
    std::vector<Word> profile_words;

    bool equivalent(State p, State q) const;
    int class_after(State from, const Word& w) const;
    // Evaluates the flavor's acceptance predicate for the class of `rep`.
    bool predicate(omega::Flavor f, State rep, const Word& z) const;
    // Signature of x under the flavor's progress congruence at `rep`, over
    // the extension set `exts`.
    std::vector<int> signature(omega::Flavor f, State rep, const Word& x, const std::vector<Word>& exts) const;

private:
    std::vector<std::vector<std::pair<State, bool>>> profiles_;
};

// Groups words by key; returns for each word the index of its group.
template <typename Key>
std::vector<int> partition_of(const std::vector<Key>& keys) {
    std::map<Key, int> id;
    std::vector<int> out;
    for (const auto& k : keys) out.push_back(id.emplace(k, static_cast<int>(id.size())).first->second);
    return out;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b);

// Bounded language equality of DFAs on all words up to max_len.
bool dfa_agree_up_to(const omega::Dfa& a, const omega::Dfa& b, int max_len);

}  // namespace oracle
