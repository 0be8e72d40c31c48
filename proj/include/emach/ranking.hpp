/*
 * ranking.hpp -- the rank bijection between accessible DFA strings and
 * 0 .. B1_{n,k}-1.
 *
 * Strings are ordered by flag (reverse lexicographic) and, within one flag,
 * lexicographically with the absent-edge entry smallest. The rank of a
 * string splits as flag_base_index(flag) + rank_within_flag(string): the
 * first index carrying the flag plus a mixed-radix code over the free
 * (non-flag) positions, where a position after j states have been introduced
 * holds a base-(j+2) digit.
 */

#pragma once

#include <vector>

#include "emach/types.hpp"

namespace emach {

/*
 * N1(m, j) counts the ways to fill positions j+1 .. n*k-1 once states 0..m
 * have all appeared at or before position j (states m+1..n-1 still to be
 * introduced, in order). Row m covers j in [m-1, m*k-1]:
 *
 *   N1(n-1, j)   = (n+1)^(nk-1-j)
 *   N1(m, mk-1)  = sum_{i=0}^{k-1} (m+2)^i * N1(m+1, mk+i)
 *   N1(m, j)     = (m+2) * N1(m, j+1) + N1(m+1, j+1)
 *
 * The table also carries the small-power table and the per-(j, f_j) tail
 * sums used by flag_base_index, so ranking one string is a single pass.
 * Built once per (n, k); read-only and safe to share across threads.
 */
class N1Table {
public:
    N1Table() = default;
    explicit N1Table(MachineParams params);  // throws std::invalid_argument

    MachineParams params() const { return params_; }

    // N1(m, j); valid for 1 <= m <= n-1, m-1 <= j <= m*k-1
    EnumIndex at(int m, int j) const { return rows_[m - 1][j - (m - 1)]; }

    // base^exp for 1 <= base <= n+1, 0 <= exp <= n*k
    EnumIndex pow(int base, int exp) const { return pows_[base - 1][exp]; }

    // sum_{l=fj+1}^{jk-1} (j+1)^(l-fj) * N1(j, l): the count of strings whose
    // flag agrees on coordinates before j but introduces state j later than fj
    EnumIndex flag_tail(int j, int fj) const { return tails_[j - 1][fj - (j - 1)]; }

private:
    MachineParams params_{};
    std::vector<std::vector<EnumIndex>> rows_;
    std::vector<std::vector<EnumIndex>> pows_;
    std::vector<std::vector<EnumIndex>> tails_;
};

// Number of accessible-form strings, i.e. the size of the index space.
EnumIndex total_count(const N1Table& table);
EnumIndex total_count(MachineParams params);

// Rank of the lexicographically first string carrying this flag.
EnumIndex flag_base_index(const Flag& flag, const N1Table& table);  // throws InvalidFlag

// Number of strings carrying this flag.
EnumIndex block_size(const Flag& flag, const N1Table& table);

// Mixed-radix rank of s among the strings with its flag. Throws FlagMismatch
// when s does not carry the given flag.
EnumIndex rank_within_flag(const TransitionString& s, const Flag& flag, const N1Table& table);

// flag_base_index(flag_of(s)) + rank_within_flag(s).
EnumIndex string_index(const TransitionString& s, const N1Table& table);

// Inverse of string_index; throws IndexOutOfRange.
TransitionString unrank(EnumIndex index, const N1Table& table);

}  // namespace emach
