#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omega/automata.hpp"

namespace omega {

enum class Flavor { Periodic, Syntactic, Recurrent, Limit };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& name);
const std::vector<Flavor>& all_flavors();

constexpr int kDefaultProfileCap = 200000;

// Transition-monoid element: for every reference state the state reached
// and whether an accepting transition was taken, packed as (succ << 1) | bit.
using Profile = std::vector<std::uint32_t>;

Profile profile_identity(int n);
Profile profile_of_letter(const DetOmega& d, Letter a);
// Reading x then y.
Profile profile_compose(const Profile& x, const Profile& y);
// Whether iterating the profile from state s forever is accepting.
bool profile_accepts_from(const Profile& p, State s, Polarity pol);

// Reachable profile elements as a DFA over letters; state 0 is the identity.
struct ProfileMonoid {
    DetTS ts;
    std::vector<Profile> elements;
};

ProfileMonoid build_profile_monoid(const DetOmega& d, int cap = kDefaultProfileCap);

struct LeadingQuotient {
    DetOmega ref;  // reachable part of the input, ids kept in order
    std::vector<int> class_of;  // reference state -> class
    DetTS leading;
    std::vector<State> rep_state;  // least reference state per class
    std::vector<Word> rep_word;    // shortlex-least word per class
    mutable std::shared_ptr<const ProfileMonoid> monoid;
    int profile_cap = kDefaultProfileCap;

    int classes() const { return leading.n; }
    const ProfileMonoid& profiles() const;
};

LeadingQuotient compute_leading(const DetOmega& d, int profile_cap = kDefaultProfileCap);

Dfa periodic_lang_dfa(const LeadingQuotient& q, int u_class);
Dfa cu_dfa(const LeadingQuotient& q, int u_class);
Dfa progress_dfa(const LeadingQuotient& q, int u_class, Flavor flavor);
Dfa cosafety_vu_dfa(const LeadingQuotient& q, int u_class);

struct RefinementViolation {
    Word x;
    Word y;
    Word v;
};

struct RefinementReport {
    std::size_t pairs_checked = 0;
    std::vector<RefinementViolation> violations;
    bool ok() const { return violations.empty(); }
};

// For words x, y up to the bound identified by the progress DFA, checks
// (u·x·v ∼ u ∧ u·y·v ∼ u) ⟹ (u·(x·v)^ω ∈ L ⟺ u·(y·v)^ω ∈ L)
// for all v up to the bound.
RefinementReport check_rp_refinement(const LeadingQuotient& q, int u_class, Flavor flavor, int bound);

}  // namespace omega
