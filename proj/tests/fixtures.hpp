#pragma once

#include <string>
#include <utility>
#include <vector>

#include "omega/zoo.hpp"

namespace fixtures {

inline std::vector<std::pair<std::string, omega::DetOmega>> zoo_dbas(int max_n = 4) {
    std::vector<std::pair<std::string, omega::DetOmega>> out{{"fig1", omega::zoo::gen_fig1()},
                                                             {"sigma-aa", omega::zoo::gen_sigma_star_aa()}};
    for (int n = 1; n <= max_n; ++n) out.emplace_back("L" + std::to_string(n), omega::zoo::gen_ln(n));
    return out;
}

inline omega::DetOmega random_dba(int i, int states, int letters = 2) {
    return omega::zoo::gen_random_dba(1000 + static_cast<std::uint64_t>(i), states, letters, 0.35);
}

inline omega::Word w(const omega::Alphabet& s, const std::string& text) { return s.parse(text); }

}  // namespace fixtures
