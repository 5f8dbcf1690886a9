#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "omega/automata.hpp"
#include "omega/congruence.hpp"

namespace omega {

struct Fdfa {
    DetTS leading;
    std::vector<Dfa> progress;      // one per leading state
    std::optional<Flavor> flavor;   // declared construction, if known
    std::vector<std::optional<Word>> labels;  // representative words, metadata only

    const Alphabet& sigma() const { return leading.sigma; }
    void validate() const;
};

Fdfa build_canonical_fdfa(const DetOmega& d, Flavor flavor, int profile_cap = kDefaultProfileCap);
Fdfa build_canonical_fdfa(const LeadingQuotient& q, Flavor flavor);

struct AcceptanceMode {
    enum Kind { Saturated, ExhaustiveBounded } kind = Saturated;
    int bound = 1;

    static AcceptanceMode saturated() { return {}; }
    static AcceptanceMode exhaustive(int bound);
};

UpWord normalize(const Fdfa& f, const UpWord& w);
bool is_normalized(const Fdfa& f, const UpWord& w);
bool accepts_decomposition(const Fdfa& f, const UpWord& w);
bool accepts_upword(const Fdfa& f, const UpWord& w, AcceptanceMode mode = AcceptanceMode::saturated());

// Decompositions (u0·ρ^i·ρ[0..j), rot_j(ρ)^p) of the word for i, p <= bound,
// where (u0, ρ) is the canonical presentation.
std::vector<UpWord> decompositions(const UpWord& w, int bound);

struct SaturationReport {
    bool ok = true;
    UpWord rejected;
    UpWord accepted;
};

// Over all UP-words with |u|, |v| <= bound, compares the acceptance of all
// normalized decompositions within the same bound.
SaturationReport is_saturated_bounded(const Fdfa& f, int bound);

// Accepted (u, v) with |u|, |v| <= bound must have (u, v^k) accepted for k <= pump.
SaturationReport is_almost_saturated_bounded(const Fdfa& f, int bound, int pump);

std::optional<State> sink_final_state(const Dfa& p);

struct NotApplicable {
    State leading_state;  // progress DFA with finals but no sink final
};

std::variant<Fdfa, NotApplicable> extract_fb(const Fdfa& f);
Fdfa complement_finals(const Fdfa& f);

struct SizeReport {
    int leading = 0;
    std::vector<int> progress;
    int progress_total = 0;
    int total = 0;
};

SizeReport size_report(const Fdfa& f);

}  // namespace omega
