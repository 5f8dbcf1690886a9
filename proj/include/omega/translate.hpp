#pragma once

#include <vector>

#include "omega/automata.hpp"
#include "omega/fdfa.hpp"

namespace omega {

// Union over leading states q and progress finals f of L(M from ι to q)
// followed by the ω-power of M^q_q × (N^q from ι_q to f) × (N^q from f to f).
Nba fdfa_to_nba(const Fdfa& f);

struct Ldba {
    Nba nba;
    // deterministic[s]: s lies in a component entered only by the initial
    // nondeterministic jump; all accepting transitions live there.
    std::vector<bool> deterministic;
};

Ldba fdfa_to_ldba(const Fdfa& f);
bool is_limit_deterministic(const Ldba& l);

// Bound n + n^2 k^3 on the states of fdfa_to_nba, with n leading states and
// k the largest progress DFA.
long long nba_state_bound(const Fdfa& f);

// Requires every progress final state to be a sink.
DetOmega fdfa_to_dba(const Fdfa& f);

}  // namespace omega
