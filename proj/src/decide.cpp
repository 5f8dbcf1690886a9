#include "omega/decide.hpp"

#include "omega/graph.hpp"
#include "omega/translate.hpp"

namespace omega {

Verdict decide_dba_recognizable(const Fdfa& f) {
    f.validate();
    if (f.flavor == Flavor::Recurrent)
        throw FlavorError("recurrent FDFAs are not supported: the decision procedure is unsound for them");
    if (f.flavor && *f.flavor != Flavor::Limit)
        throw FlavorError("expected a limit FDFA, got flavor " + flavor_name(*f.flavor));

    Verdict v;
    auto fb = extract_fb(f);
    if (auto* na = std::get_if<NotApplicable>(&fb)) {
        v.non_cosafety_class = na->leading_state;
        return v;
    }
    Nba a = fdfa_to_nba(f);
    DetOmega b = fdfa_to_dba(std::get<Fdfa>(fb));
    v.witness = nba_dba_included(a, b);
    v.dba_recognizable = !v.witness;
    return v;
}

}  // namespace omega
