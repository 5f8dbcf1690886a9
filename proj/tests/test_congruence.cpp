#include "doctest.h"
#include "fixtures.hpp"
#include "omega/congruence.hpp"
#include "omega/fdfa.hpp"
#include "oracle.hpp"

using namespace omega;

namespace {

std::vector<DetOmega> sample_dbas() {
    std::vector<DetOmega> out;
    for (auto& [name, d] : fixtures::zoo_dbas(3)) out.push_back(d);
    for (int i = 0; i < 20; ++i) out.push_back(fixtures::random_dba(i, 4));
    return out;
}

std::vector<Word> extensions(const oracle::Congruence& oc, int k, int len) {
    auto exts = words_up_to(k, len);
    exts.insert(exts.end(), oc.profile_words.begin(), oc.profile_words.end());
    return exts;
}

}  // namespace

TEST_CASE("flavor names") {
    for (Flavor f : all_flavors()) CHECK(parse_flavor(flavor_name(f)) == f);
    CHECK(flavor_name(Flavor::Limit) == "limit");
    CHECK_THROWS(parse_flavor("weak"));
}

TEST_CASE("leading class counts") {
    for (int n = 1; n <= 8; ++n) CHECK(compute_leading(zoo::gen_ln(n)).classes() == n + 2);
    CHECK(compute_leading(zoo::gen_sigma_star_aa()).classes() == 1);
    auto q = compute_leading(zoo::gen_fig1());
    CHECK(q.classes() == 5);
    CHECK(q.rep_word[q.class_of[3]] == Word{0, 0});
    CHECK(q.rep_word[q.class_of[0]].empty());
}

TEST_CASE("leading classes match the oracle") {
    for (const auto& d : sample_dbas()) {
        auto q = compute_leading(d);
        oracle::Congruence oc(q.ref);
        CHECK(q.classes() == oc.classes);
        std::vector<int> ours, theirs;
        for (State s = 0; s < q.ref.size(); ++s) {
            ours.push_back(q.class_of[s]);
            theirs.push_back(oc.residual_class[s]);
        }
        CHECK(oracle::same_partition(ours, theirs));
        for (int c = 0; c < q.classes(); ++c) {
            CHECK(run_word(q.leading, q.leading.initial, q.rep_word[c]) == c);
            CHECK(q.class_of[run_word(q.ref.ts, q.ref.ts.initial, q.rep_word[c])] == c);
        }
        for (State s = 0; s < q.ref.size(); ++s)
            for (Letter a = 0; a < q.ref.ts.k(); ++a)
                CHECK(q.leading.next(q.class_of[s], a) == q.class_of[q.ref.ts.next(s, a)]);
    }
}

TEST_CASE("profile monoid") {
    auto d = zoo::gen_fig1();
    auto m = build_profile_monoid(d);
    CHECK(m.elements[0] == profile_identity(d.size()));
    for (State s = 0; s < d.size(); ++s) CHECK_FALSE(profile_accepts_from(m.elements[0], s, Polarity::Buchi));
    for (const auto& x : words_up_to(2, 4)) {
        Profile p = profile_identity(d.size());
        for (Letter a : x) p = profile_compose(p, profile_of_letter(d, a));
        CHECK(m.elements[run_word(m.ts, 0, x)] == p);
        for (State s = 0; s < d.size(); ++s)
            if (!x.empty()) CHECK(profile_accepts_from(p, s, Polarity::Buchi) == oracle::member(d, s, {}, x));
    }
    CHECK_THROWS_AS(build_profile_monoid(fixtures::random_dba(3, 6, 3), 4), ResourceError);
}

TEST_CASE("fig1 progress sizes") {
    auto q = compute_leading(zoo::gen_fig1());
    int aa = q.class_of[3];
    CHECK(dfa_minimize(progress_dfa(q, aa, Flavor::Limit)).size() == 2);
    auto f = build_canonical_fdfa(q, Flavor::Limit);
    auto r = size_report(f);
    CHECK(r.leading == 5);
    CHECK(r.total == 14);
    CHECK(size_report(build_canonical_fdfa(q, Flavor::Recurrent)).total == 14);
}

TEST_CASE("one-class references give identical progress languages") {
    std::vector<DetOmega> ds{zoo::gen_sigma_star_aa()};
    for (int i = 0; i < 60 && ds.size() < 6; ++i) {
        auto d = fixtures::random_dba(i, 3);
        if (compute_leading(d).classes() == 1) ds.push_back(d);
    }
    for (const auto& d : ds) {
        auto q = compute_leading(d);
        REQUIRE(q.classes() == 1);
        Dfa lim = dfa_minimize(progress_dfa(q, 0, Flavor::Limit));
        for (Flavor f : all_flavors()) {
            CHECK(dfa_equivalent(progress_dfa(q, 0, f), lim));
            CHECK(dfa_isomorphic(dfa_minimize(progress_dfa(q, 0, f)), lim));
        }
    }
}

TEST_CASE("progress DFAs match the oracle congruences") {
    for (const auto& d : sample_dbas()) {
        auto q = compute_leading(d);
        oracle::Congruence oc(q.ref);
        const int k = q.ref.ts.k();
        auto xs = words_up_to(k, 4);
        auto exts = extensions(oc, k, 4);
        for (int c = 0; c < q.classes(); ++c) {
            State rep = q.rep_state[c];
            for (Flavor f : all_flavors()) {
                Dfa p = progress_dfa(q, c, f);
                std::vector<State> states;
                std::vector<std::vector<int>> sigs;
                for (const auto& x : xs) {
                    states.push_back(run_word(p.ts, p.ts.initial, x));
                    sigs.push_back(oc.signature(f, rep, x, exts));
                    CHECK(p.accepts(x) == oc.predicate(f, rep, x));
                }
                CHECK(oracle::same_partition(oracle::partition_of(states), oracle::partition_of(sigs)));
            }
        }
    }
}

TEST_CASE("syntactic refines recurrent and limit") {
    for (const auto& d : sample_dbas()) {
        auto q = compute_leading(d);
        oracle::Congruence oc(q.ref);
        const int k = q.ref.ts.k();
        auto xs = words_up_to(k, 3);
        auto exts = extensions(oc, k, 3);
        for (int c = 0; c < q.classes(); ++c) {
            State rep = q.rep_state[c];
            for (const auto& x : xs)
                for (const auto& y : xs) {
                    if (oc.signature(Flavor::Syntactic, rep, x, exts) != oc.signature(Flavor::Syntactic, rep, y, exts))
                        continue;
                    CHECK(oc.signature(Flavor::Recurrent, rep, x, exts) == oc.signature(Flavor::Recurrent, rep, y, exts));
                    CHECK(oc.signature(Flavor::Limit, rep, x, exts) == oc.signature(Flavor::Limit, rep, y, exts));
                }
        }
    }
}

TEST_CASE("progress classes refine the right-congruence condition") {
    for (const auto& d : sample_dbas()) {
        auto q = compute_leading(d);
        for (int c = 0; c < q.classes(); ++c)
            for (Flavor f : all_flavors()) {
                auto r = check_rp_refinement(q, c, f, 3);
                CHECK(r.ok());
            }
    }
}

TEST_CASE("periodic and C_u DFAs") {
    auto q = compute_leading(zoo::gen_fig1());
    for (int c = 0; c < q.classes(); ++c) {
        Dfa cu = cu_dfa(q, c);
        Dfa per = periodic_lang_dfa(q, c);
        for (const auto& x : words_up_to(2, 5)) {
            CHECK(cu.accepts(x) == (run_word(q.leading, c, x) == c));
            CHECK(per.accepts(x) == (!x.empty() && oracle::member(q.ref, q.rep_state[c], {}, x)));
        }
    }
}

TEST_CASE("cosafety DFA of sigma-star-aa") {
    auto q = compute_leading(zoo::gen_sigma_star_aa());
    Dfa c = cosafety_vu_dfa(q, 0);
    Alphabet s = q.ref.ts.sigma;
    CHECK(c.accepts(s.parse("aa")));
    CHECK(c.accepts(s.parse("baab")));
    CHECK_FALSE(c.accepts(s.parse("aba")));
    CHECK_FALSE(c.accepts({}));
}
