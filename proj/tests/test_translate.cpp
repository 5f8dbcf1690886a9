#include "doctest.h"
#include "fixtures.hpp"
#include "omega/graph.hpp"
#include "omega/translate.hpp"
#include "oracle.hpp"

using namespace omega;

namespace {

std::vector<std::pair<std::string, DetOmega>> sample_dbas() {
    auto out = fixtures::zoo_dbas(3);
    for (int i = 0; i < 15; ++i) out.emplace_back("random" + std::to_string(i), fixtures::random_dba(i, 4));
    return out;
}

bool same_language(const DetOmega& a, const DetOmega& b) {
    return !nba_dba_included(as_nba(a), b) && !nba_dba_included(as_nba(b), a);
}

}  // namespace

TEST_CASE("NBA from an FDFA accepts the same UP-words") {
    for (const auto& [name, d] : sample_dbas())
        for (Flavor fl : all_flavors()) {
            INFO(name, " ", flavor_name(fl));
            auto f = build_canonical_fdfa(d, fl);
            Nba a = fdfa_to_nba(f);
            CHECK(a.n <= nba_state_bound(f));
            for (const auto& u : words_up_to(2, 2))
                for (const auto& v : words_up_to(2, 3))
                    if (!v.empty()) CHECK(oracle::nba_member(a, u, v) == oracle::member(d, u, v));
        }
}

TEST_CASE("NBA from a limit FDFA is language-equivalent to the reference") {
    for (const auto& [name, d] : sample_dbas()) {
        INFO(name);
        Nba a = fdfa_to_nba(build_canonical_fdfa(d, Flavor::Limit));
        CHECK_FALSE(nba_dba_included(a, d));
        auto comp = fdfa_to_nba(complement_finals(build_canonical_fdfa(d, Flavor::Limit)));
        CHECK_FALSE(dba_nba_intersect(d, comp));
    }
}

TEST_CASE("LDBA from a limit FDFA") {
    for (const auto& [name, d] : sample_dbas()) {
        INFO(name);
        auto f = build_canonical_fdfa(d, Flavor::Limit);
        Ldba l = fdfa_to_ldba(f);
        CHECK(is_limit_deterministic(l));
        CHECK(l.nba.n <= nba_state_bound(f));
        CHECK_FALSE(nba_dba_included(l.nba, d));
        for (const auto& u : words_up_to(2, 2))
            for (const auto& v : words_up_to(2, 3))
                if (!v.empty()) CHECK(oracle::nba_member(l.nba, u, v) == oracle::member(d, u, v));
    }
}

TEST_CASE("limit determinism check rejects nondeterministic components") {
    Ldba l;
    l.nba.sigma = Alphabet({"a"});
    l.nba.n = 2;
    l.nba.initials = {0};
    l.nba.add(0, 0, 1, false);
    l.nba.add(1, 0, 1, true);
    l.deterministic = {false, true};
    CHECK(is_limit_deterministic(l));
    l.nba.add(1, 0, 0, false);
    CHECK_FALSE(is_limit_deterministic(l));
    l.nba.trans.pop_back();
    l.nba.add(0, 0, 0, true);
    CHECK_FALSE(is_limit_deterministic(l));
}

TEST_CASE("DBA from F_B recovers DBA-recognizable references") {
    for (const auto& [name, d] : sample_dbas()) {
        INFO(name);
        auto fb = extract_fb(build_canonical_fdfa(d, Flavor::Limit));
        REQUIRE(std::holds_alternative<Fdfa>(fb));
        DetOmega b = fdfa_to_dba(std::get<Fdfa>(fb));
        CHECK(same_language(b, d));
    }
}

TEST_CASE("DBA translation requires sink finals") {
    auto f = build_canonical_fdfa(zoo::gen_sigma_star_aa(), Flavor::Limit);
    CHECK_THROWS_AS(fdfa_to_dba(f), PreconditionError);
}

TEST_CASE("NBA state bound") {
    auto f = zoo::gen_fig5_fdfa();
    CHECK(nba_state_bound(f) == 1 + 64);
    CHECK(fdfa_to_nba(f).n <= 65);
}
