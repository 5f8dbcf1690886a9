#pragma once

#include <optional>
#include <vector>

#include "omega/automata.hpp"

namespace omega {

using Graph = std::vector<std::vector<int>>;

// Maximal strongly connected components, sources first.
std::vector<std::vector<int>> sccs(const Graph& g);

struct MarkedEdge {
    int src;
    Letter letter;
    int dst;
    unsigned marks;  // bit i set: edge belongs to must-hit set i
    bool avoid;
};

// Labelled graph with must-hit sets and one must-avoid set.
struct MarkedGraph {
    int n = 0;
    int mark_count = 1;
    std::vector<int> initials;
    std::vector<MarkedEdge> edges;
};

// A reachable cycle free of avoid edges that hits every mark set.
// Among candidate loop starts (sources of marked edges) the lasso is the
// minimum by (|stem|+|loop|, stem, loop) with shortlex-least BFS paths.
std::optional<Lasso> find_accepting_lasso(const MarkedGraph& g);

std::optional<Lasso> one_pair_rabin_empty(const MarkedGraph& g);

// nullopt when L(a) ⊆ L(b), otherwise a lasso in L(a) \ L(b).
std::optional<Lasso> nba_dba_included(const Nba& a, const DetOmega& b);
// nullopt when L(d) ∩ L(a) is empty, otherwise a lasso in both.
std::optional<Lasso> dba_nba_intersect(const DetOmega& d, const Nba& a);

// nullopt when L(a) ∩ L(b) is empty, otherwise a lasso in both.
std::optional<Lasso> nba_intersect(const Nba& a, const Nba& b);

bool dba_state_equiv(const DetOmega& d, State p, State q);

}  // namespace omega
