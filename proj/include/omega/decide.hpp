#pragma once

#include <optional>
#include <stdexcept>

#include "omega/automata.hpp"
#include "omega/fdfa.hpp"

namespace omega {

// The decision procedure is only sound for limit FDFAs.
struct FlavorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Verdict {
    bool dba_recognizable = false;
    std::optional<State> non_cosafety_class;  // step 1 refusal
    std::optional<Lasso> witness;             // step 3 refusal, in UP(f) but not in L(B[F_B])
};

// Files without a flavor line are taken as limit FDFAs.
Verdict decide_dba_recognizable(const Fdfa& f);

}  // namespace omega
