/*
 * generation.hpp -- successor-based enumeration of accessible DFA strings.
 *
 * Flags are produced in reverse lexicographic order; within a flag, strings
 * advance lexicographically (absent edge smallest) by incrementing the
 * rightmost free position that has room and clearing everything after it.
 * The order produced is exactly ascending string_index.
 */

#pragma once

#include <vector>

#include "emach/ranking.hpp"
#include "emach/types.hpp"

namespace emach {

// Lexicographically greatest valid flag: f_i = i*k - 1.
Flag first_flag(MachineParams p);

// Advances to the next flag in descending lexicographic order. Returns false
// (leaving f unchanged) once the minimal flag f_i = i-1 has been consumed.
bool next_flag(Flag& f, MachineParams p);

// Entry at each flag position is its state, every free position empty.
TransitionString first_string(const Flag& f, MachineParams p);

// Largest state introduced strictly before this (non-flag) position; the
// position admits entries {absent, 0..m}, i.e. m+2 digits.
int max_state_before(int position, const Flag& f, MachineParams p);

// Lexicographic successor among the strings carrying this flag; false when
// every free digit is maximal.
bool next_string(TransitionString& s, const Flag& f, MachineParams p);

/*
 * Streams (string, index) pairs over an index interval in ascending rank
 * order. One instance is single-owner and stateful; disjoint ranges can run
 * concurrently sharing only the table.
 *
 *   Enumerator en(table, begin, end);
 *   while (en.advance()) use(en.current(), en.index());
 */
class Enumerator {
public:
    explicit Enumerator(const N1Table& table);
    Enumerator(const N1Table& table, EnumIndex begin, EnumIndex end);  // throws IndexOutOfRange

    bool advance();
    const TransitionString& current() const { return string_; }
    EnumIndex index() const { return index_; }
    const Flag& flag() const { return flag_; }
    int edges() const { return edges_; }  // maintained incrementally
    EnumIndex end() const { return end_; }

private:
    void load_flag(const Flag& f);
    bool step();

    const N1Table* table_ = nullptr;
    MachineParams params_{};
    Flag flag_;
    TransitionString string_;
    std::vector<std::int8_t> max_digit_;  // per position; -1 marks a flag position
    EnumIndex index_ = 0;
    EnumIndex end_ = 0;
    int edges_ = 0;
    bool primed_ = false;
    bool done_ = false;
};

}  // namespace emach
