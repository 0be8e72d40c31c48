/*
 * census.hpp -- full-range or sharded enumeration runs: apply the filter to
 * every candidate in an index interval, accumulate counters, and optionally
 * emit one record per accepted machine in index order.
 */

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "emach/filter.hpp"
#include "emach/types.hpp"

namespace emach {

enum class EmitFormat { None, Jsonl, Dot };

struct CensusOptions {
    int shards = 1;
    int shard_id = 0;
    int threads = 1;  // 0 = hardware concurrency
    bool full_alphabet_only = false;
    EmitFormat emit = EmitFormat::None;

    // Checkpointing requires threads == 1; use shards for parallel resumable
    // runs. A clean stop (stop_after) leaves checkpoint and emitted records
    // consistent, so a resumed run extends the record stream byte-for-byte.
    std::string checkpoint_path;
    std::uint64_t checkpoint_every = 1u << 22;
    std::uint64_t stop_after = 0;  // max candidates this invocation; 0 = no cap
};

struct CensusSummary {
    MachineParams params;
    int shards = 1;
    int shard_id = 0;
    EnumIndex range_begin = 0;
    EnumIndex range_end = 0;
    EnumIndex next_index = 0;  // resume point; equals range_end when complete

    std::uint64_t candidates = 0;  // strings tested
    std::uint64_t accepted = 0;
    std::uint64_t full_alphabet = 0;
    std::map<int, std::uint64_t> edge_histogram;              // edges -> accepted
    std::array<std::uint64_t, kRejectionReasonCount> rejected{};  // by RejectionReason

    double elapsed_seconds = 0.0;
    bool complete = true;

    std::uint64_t rejected_total() const;
    // Counter merge for shard composition; ranges must be adjacent in order.
    void merge(const CensusSummary& other);
};

// Enumerates the shard's index range, filters every candidate, and writes
// one record per accepted machine to records (when non-null and emit is not
// None). Deterministic: output is ordered by index regardless of threads.
CensusSummary run_census(MachineParams params, const CensusOptions& options,
                         std::ostream* records);

// [begin, end) of a balanced contiguous shard partition.
std::pair<EnumIndex, EnumIndex> shard_range(EnumIndex total, int shards, int shard_id);

std::string to_jsonl(const MachineRecord& rec);
std::string to_dot(const MachineRecord& rec);
std::string format_record(const MachineRecord& rec, EmitFormat format);

// Single-line checkpoint record; see census.cpp for the field order.
std::string format_checkpoint(const CensusSummary& summary);
CensusSummary parse_checkpoint(const std::string& line);  // throws std::invalid_argument

void write_summary(std::ostream& out, const CensusSummary& summary);

}  // namespace emach
