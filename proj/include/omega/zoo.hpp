#pragma once

#include <cstdint>

#include "omega/automata.hpp"
#include "omega/fdfa.hpp"

namespace omega::zoo {

// States q0..qn are 0..n, the rejecting sink is n+1; letters are "0".."n".
DetOmega gen_ln(int n);
// a^ω + ab^ω; states [ε], [a], [b] (sink), [aa], [ab].
DetOmega gen_fig1();
// Maximal letter occurring infinitely often is even, over {1,2,3,4}.
Fdfa gen_fig5_fdfa();
// (Σ*·aa)^ω over {a, b}.
DetOmega gen_sigma_star_aa();
// Letters "a", "b", ...; each transition accepting with probability acc_density.
DetOmega gen_random_dba(std::uint64_t seed, int states, int alphabet_size, double acc_density);

}  // namespace omega::zoo
