/*
 * tables.hpp -- reference census values and the verify runner that recomputes
 * selected cells and compares counts, full-alphabet counts, accessible-DFA
 * totals, and edge histograms.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "emach/types.hpp"

namespace emach {

struct ReferenceCell {
    int n = 0;
    int k = 0;
    std::optional<std::uint64_t> machines;            // E_{n,k}
    std::optional<std::uint64_t> full_alphabet;       // F_{n,k}
    std::optional<std::uint64_t> accessible_total;    // B1_{n,k}
    std::map<int, std::uint64_t> edge_histogram;      // empty when unpublished
};

// Cells of the three published census tables, keyed 1..3:
// 1 = binary alphabet with edge breakdown, 2 = E_{n,k}, 3 = F_{n,k}.
const std::vector<ReferenceCell>& reference_table(int table);

// Expected machine count for (n, k) when any table lists it.
std::optional<std::uint64_t> expected_machine_count(MachineParams p);
std::optional<std::uint64_t> expected_full_alphabet_count(MachineParams p);

struct VerifyOptions {
    int table = 1;
    int max_states = 0;            // 0 = no cap
    double budget_seconds = 300.0;  // skip cells whose estimated run exceeds this
    int threads = 0;               // 0 = hardware concurrency
    bool check_identity = true;    // E_{n,k} = sum_l C(k,l) F_{n,l} on table-2 cells
};

struct VerifyReport {
    int cells_checked = 0;
    int cells_skipped = 0;
    int failures = 0;
    bool all_ok() const { return failures == 0 && cells_checked > 0; }
};

// Recomputes every selected cell and writes one pass/fail line per cell.
VerifyReport verify_tables(const VerifyOptions& options, std::ostream& report);

}  // namespace emach
