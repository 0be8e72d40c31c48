#include "doctest.h"

#include "emach/analysis.hpp"
#include "emach/generation.hpp"
#include "oracle.hpp"

using namespace emach;

namespace {
const TransitionString kEven{0, 1, -1, 0};          // even process, start state 0
const TransitionString kEvenCanonical{-1, 1, 1, 0};  // same machine from the other state
}  // namespace

TEST_CASE("relabel walks regenerate the string from a new start state") {
    CHECK(relabel_from(kEven, 1, {2, 2}) == kEvenCanonical);
    CHECK(relabel_from(kEvenCanonical, 1, {2, 2}) == kEven);

    // the three representations of the worked three-state machine
    const TransitionString s1{1, 2, 0, 0, -1, 2, -1, 0, 2};
    const TransitionString s2{1, -1, 2, 0, 2, 1, -1, 1, 2};
    const TransitionString s3{-1, 1, 0, 2, 0, 1, 1, -1, 0};
    CHECK(relabel_from(s1, 0, {3, 3}) == s1);
    CHECK(relabel_from(s1, 1, {3, 3}) == s2);
    CHECK(relabel_from(s1, 2, {3, 3}) == s3);
}

TEST_CASE("relabel fails when the start state cannot reach everything") {
    CHECK_FALSE(relabel_from({0, 1, -1, -1}, 1, {2, 2}).has_value());
}

TEST_CASE("relabeling from state 0 is the identity on accessible forms") {
    for (MachineParams p : {MachineParams{2, 2}, MachineParams{3, 2}, MachineParams{2, 3}}) {
        N1Table t(p);
        Enumerator en(t);
        while (en.advance())
            CHECK(relabel_from(en.current(), 0, p) == en.current());
    }
}

TEST_CASE("strong connectivity examples") {
    CHECK(is_strongly_connected(kEven, {2, 2}));
    CHECK_FALSE(is_strongly_connected({0, 1, -1, -1}, {2, 2}));  // state 1 is a dead end
    CHECK_FALSE(is_strongly_connected({1, -1, 1, -1}, {2, 2}));  // no route back to 0
}

TEST_CASE("strong connectivity equals every relabel walk succeeding") {
    for (MachineParams p : {MachineParams{2, 2}, MachineParams{3, 2}, MachineParams{2, 3}}) {
        N1Table t(p);
        Enumerator en(t);
        while (en.advance()) {
            bool all = true;
            for (int q0 = 0; q0 < p.n && all; ++q0)
                all = relabel_from(en.current(), q0, p).has_value();
            CHECK(is_strongly_connected(en.current(), p) == all);
        }
    }
}

TEST_CASE("minimality examples") {
    CHECK_FALSE(is_minimal({0, 1, 0, 1}, {2, 2}));  // complete: both states equivalent
    CHECK(is_minimal(kEvenCanonical, {2, 2}));      // word "0" separates the states
    CHECK(is_minimal({0, -1}, {1, 2}));             // a single state is vacuously minimal
    CHECK(is_minimal({0, 0}, {1, 2}));
}

TEST_CASE("minimality agrees with the word-by-word equivalence oracle") {
    for (MachineParams p : {MachineParams{2, 2}, MachineParams{3, 2}, MachineParams{2, 3}}) {
        N1Table t(p);
        Enumerator en(t);
        while (en.advance()) {
            bool no_pairs = oracle::naive_equivalent_states(en.current(), p).empty();
            CHECK(is_minimal(en.current(), p) == no_pairs);
        }
    }
}

TEST_CASE("the equivalence oracle flags the complete two-state machine") {
    auto pairs = oracle::naive_equivalent_states({0, 1, 0, 1}, {2, 2});
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::pair<int, int>{0, 1});
    CHECK(oracle::naive_equivalent_states(kEvenCanonical, {2, 2}).empty());
}

TEST_CASE("alphabet usage") {
    CHECK(uses_full_alphabet(kEven, {2, 2}));
    CHECK_FALSE(uses_full_alphabet({0, -1, 1, -1}, {2, 2}));  // symbol 1 unused
    CHECK(uses_full_alphabet({0, 0}, {1, 2}));
}

TEST_CASE("edge-count bounds force connectivity and minimality failures") {
    MachineParams p{3, 2};
    N1Table t(p);
    Enumerator en(t);
    while (en.advance()) {
        if (en.edges() == p.positions())
            CHECK_FALSE(is_minimal(en.current(), p));
        if (en.edges() < p.n)
            CHECK_FALSE(is_strongly_connected(en.current(), p));
    }
}
