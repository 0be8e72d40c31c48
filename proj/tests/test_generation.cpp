#include "doctest.h"

#include "emach/generation.hpp"
#include "oracle.hpp"

using namespace emach;

TEST_CASE("first_flag maxes every coordinate") {
    CHECK(first_flag({2, 2}) == Flag{-1, 1, 4});
    CHECK(first_flag({3, 3}) == Flag{-1, 2, 5, 9});
    CHECK(first_flag({1, 4}) == Flag{-1, 4});
}

TEST_CASE("next_flag walks flags in descending lexicographic order") {
    MachineParams p22{2, 2};
    Flag f = first_flag(p22);
    CHECK(next_flag(f, p22));
    CHECK(f == Flag{-1, 0, 4});
    CHECK_FALSE(next_flag(f, p22));

    MachineParams p33{3, 3};
    Flag g = first_flag(p33);
    CHECK(next_flag(g, p33));
    CHECK(g == Flag{-1, 2, 4, 9});  // rightmost coordinate drops first

    // carries reset trailing coordinates to their maxima
    Flag h{-1, 1, 2, 9};
    CHECK(next_flag(h, p33));
    CHECK(h == Flag{-1, 0, 5, 9});
}

TEST_CASE("first_string pins flags and clears everything else") {
    CHECK(first_string({-1, 1, 4}, {2, 2}) == TransitionString{-1, 1, -1, -1});
    CHECK(first_string({-1, 0, 4}, {2, 2}) == TransitionString{1, -1, -1, -1});
    CHECK(first_string({-1, 2, 5, 9}, {3, 3}) ==
          TransitionString{-1, -1, 1, -1, -1, 2, -1, -1, -1});
}

TEST_CASE("max_state_before tracks introduced states") {
    CHECK(max_state_before(0, {-1, 1, 4}, {2, 2}) == 0);
    CHECK(max_state_before(3, {-1, 1, 4}, {2, 2}) == 1);
    CHECK(max_state_before(4, {-1, 2, 5, 9}, {3, 3}) == 1);
    CHECK(max_state_before(6, {-1, 2, 5, 9}, {3, 3}) == 2);
}

TEST_CASE("next_string increments the rightmost free digit with room") {
    MachineParams p{2, 2};
    Flag f{-1, 1, 4};
    TransitionString s{-1, 1, -1, -1};
    CHECK(next_string(s, f, p));
    CHECK(s == TransitionString{-1, 1, -1, 0});

    s = {-1, 1, 1, 1};
    CHECK(next_string(s, f, p));
    CHECK(s == TransitionString{0, 1, -1, -1});

    s = {0, 1, 1, 1};
    CHECK_FALSE(next_string(s, f, p));
}

TEST_CASE("enumeration yields consecutive ranks over the whole range") {
    for (MachineParams p : {MachineParams{2, 2}, MachineParams{3, 2}, MachineParams{2, 3},
                            MachineParams{3, 3}, MachineParams{1, 3}}) {
        N1Table t(p);
        Enumerator en(t);
        EnumIndex expected = 0;
        while (en.advance()) {
            CHECK(en.index() == expected);
            CHECK(string_index(en.current(), t) == expected);
            CHECK(en.edges() == edge_count(en.current()));
            CHECK(flag_of(en.current(), p) == en.flag());
            ++expected;
        }
        CHECK(expected == total_count(t));
    }
}

TEST_CASE("a range starts mid-stream via unrank") {
    N1Table t({2, 2});
    Enumerator en(t, 18, 45);
    int count = 0;
    while (en.advance()) {
        CHECK(en.flag() == Flag{-1, 0, 4});
        ++count;
    }
    CHECK(count == 27);

    Enumerator empty(t, 7, 7);
    CHECK_FALSE(empty.advance());
    CHECK_THROWS_AS(Enumerator(t, 10, 46), IndexOutOfRange);
}

TEST_CASE("generated strings equal the definition-level accessible set") {
    for (MachineParams p : {MachineParams{2, 2}, MachineParams{3, 2}, MachineParams{2, 3},
                            MachineParams{1, 2}, MachineParams{2, 1}}) {
        auto expected = oracle::naive_accessible_strings(p);
        N1Table t(p);
        Enumerator en(t);
        std::size_t at = 0;
        while (en.advance()) {
            REQUIRE(at < expected.size());
            CHECK(en.current() == expected[at]);
            ++at;
        }
        CHECK(at == expected.size());
    }
}
