#include "emach/census.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "emach/generation.hpp"

namespace emach {

namespace {

constexpr const char* kCheckpointMagic = "emach-census-v1";

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void record_accept(CensusSummary& summary, const TransitionString& s, int edges,
                   MachineParams params) {
    ++summary.accepted;
    ++summary.edge_histogram[edges];
    if (uses_full_alphabet(s, params))
        ++summary.full_alphabet;
}

// Sweeps [from, to) into summary, emitting accepted records. Returns early
// after stop_after candidates (0 = no cap) with summary.next_index set.
void sweep(const N1Table& table, EnumIndex from, EnumIndex to, const CensusOptions& options,
           CensusSummary& summary, std::ostream* records, std::uint64_t stop_after) {
    const MachineParams params = table.params();
    MachineFilter filter(table);
    Enumerator en(table, from, to);
    std::uint64_t seen = 0;
    while (en.advance()) {
        const TransitionString& s = en.current();
        RejectionReason reason = filter.test(s, en.index(), en.edges());
        if (reason == RejectionReason::Accepted) {
            record_accept(summary, s, en.edges(), params);
            if (records && options.emit != EmitFormat::None &&
                (!options.full_alphabet_only || uses_full_alphabet(s, params))) {
                *records << format_record(make_record(s, en.index(), params), options.emit);
            }
        } else {
            ++summary.rejected[static_cast<int>(reason)];
        }
        ++summary.candidates;
        summary.next_index = en.index() + 1;
        if (stop_after && ++seen >= stop_after)
            return;
    }
    summary.next_index = to;
}

void write_checkpoint_file(const std::string& path, const CensusSummary& summary) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write checkpoint file " + tmp);
        out << format_checkpoint(summary) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

CensusSummary run_single(const N1Table& table, EnumIndex begin, EnumIndex end,
                         const CensusOptions& options, std::ostream* records) {
    CensusSummary summary;
    summary.params = table.params();
    summary.shards = options.shards;
    summary.shard_id = options.shard_id;
    summary.range_begin = begin;
    summary.range_end = end;
    summary.next_index = begin;

    EnumIndex from = begin;
    if (!options.checkpoint_path.empty() &&
        std::filesystem::exists(options.checkpoint_path)) {
        std::ifstream in(options.checkpoint_path);
        std::string line;
        if (!std::getline(in, line))
            throw std::runtime_error("cannot read checkpoint " + options.checkpoint_path);
        CensusSummary saved = parse_checkpoint(line);
        if (!(saved.params == table.params()) || saved.shards != options.shards ||
            saved.shard_id != options.shard_id || saved.range_begin != begin ||
            saved.range_end != end)
            throw std::runtime_error("checkpoint " + options.checkpoint_path +
                                     " does not match this run's parameters");
        summary = saved;
        from = saved.next_index;
    }

    Clock clock;
    std::uint64_t budget = options.stop_after;  // candidates left this invocation; 0 = no cap
    while (from < end) {
        std::uint64_t chunk = options.checkpoint_path.empty() ? 0 : options.checkpoint_every;
        if (options.stop_after)
            chunk = chunk ? std::min(chunk, budget) : budget;
        const std::uint64_t before = summary.candidates;
        sweep(table, from, end, options, summary, records, chunk);
        from = summary.next_index;
        if (records)
            records->flush();
        if (!options.checkpoint_path.empty())
            write_checkpoint_file(options.checkpoint_path, summary);
        if (options.stop_after) {
            const std::uint64_t processed = summary.candidates - before;
            if (processed >= budget)
                break;
            budget -= processed;
        }
    }
    summary.elapsed_seconds = clock.seconds();
    summary.complete = summary.next_index == end;
    return summary;
}

CensusSummary run_parallel(const N1Table& table, EnumIndex begin, EnumIndex end,
                           const CensusOptions& options, std::ostream* records,
                           int threads) {
    // contiguous micro-chunks pulled off an atomic cursor; record buffers are
    // concatenated in chunk order, so output is identical to a serial run
    Clock clock;
    const bool emitting = records && options.emit != EmitFormat::None;
    const int chunk_count = threads * 8;
    std::vector<CensusSummary> chunk_summary(chunk_count);
    std::vector<std::string> chunk_records(chunk_count);
    std::atomic<int> cursor{0};

    auto worker = [&]() {
        for (;;) {
            const int c = cursor.fetch_add(1);
            if (c >= chunk_count)
                return;
            auto [from, to] = shard_range(end - begin, chunk_count, c);
            from += begin;
            to += begin;
            CensusSummary& local = chunk_summary[c];
            local.params = table.params();
            local.range_begin = from;
            local.range_end = to;
            local.next_index = from;
            std::ostringstream buffer;
            sweep(table, from, to, options, local, emitting ? &buffer : nullptr, 0);
            chunk_records[c] = std::move(buffer).str();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    CensusSummary summary;
    summary.params = table.params();
    summary.shards = options.shards;
    summary.shard_id = options.shard_id;
    summary.range_begin = begin;
    summary.range_end = end;
    summary.next_index = begin;
    for (int c = 0; c < chunk_count; ++c) {
        summary.merge(chunk_summary[c]);
        if (records && !chunk_records[c].empty())
            *records << chunk_records[c];
    }
    if (records)
        records->flush();
    summary.elapsed_seconds = clock.seconds();
    summary.complete = true;
    return summary;
}

}  // namespace

std::uint64_t CensusSummary::rejected_total() const {
    std::uint64_t total = 0;
    for (auto r : rejected)
        total += r;
    return total;
}

void CensusSummary::merge(const CensusSummary& other) {
    candidates += other.candidates;
    accepted += other.accepted;
    full_alphabet += other.full_alphabet;
    for (const auto& [edges, count] : other.edge_histogram)
        edge_histogram[edges] += count;
    for (int i = 0; i < kRejectionReasonCount; ++i)
        rejected[i] += other.rejected[i];
    next_index = other.next_index;
    complete = complete && other.complete;
}

std::pair<EnumIndex, EnumIndex> shard_range(EnumIndex total, int shards, int shard_id) {
    const EnumIndex q = total / static_cast<unsigned>(shards);
    const EnumIndex r = total % static_cast<unsigned>(shards);
    const unsigned id = static_cast<unsigned>(shard_id);
    EnumIndex begin = q * id + (id < r ? id : static_cast<unsigned long long>(r));
    EnumIndex size = q + (id < r ? 1 : 0);
    return {begin, begin + size};
}

CensusSummary run_census(MachineParams params, const CensusOptions& options,
                         std::ostream* records) {
    validate_params(params);
    if (options.shards < 1 || options.shard_id < 0 || options.shard_id >= options.shards)
        throw std::invalid_argument("shard_id must lie in [0, shards)");
    int threads = options.threads;
    if (threads == 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1)
        threads = 1;
    if (threads > 1 && !options.checkpoint_path.empty())
        throw std::invalid_argument("checkpointing requires threads == 1");
    if (threads > 1 && options.stop_after)
        throw std::invalid_argument("stop_after requires threads == 1");

    const N1Table table(params);
    auto [begin, end] = shard_range(total_count(table), options.shards, options.shard_id);
    if (threads == 1)
        return run_single(table, begin, end, options, records);
    return run_parallel(table, begin, end, options, records, threads);
}

std::string to_jsonl(const MachineRecord& rec) {
    std::string out;
    out.reserve(64 + rec.string.size() * 3);
    out += "{\"n\":";
    out += std::to_string(rec.params.n);
    out += ",\"k\":";
    out += std::to_string(rec.params.k);
    out += ",\"index\":\"";
    out += index_to_string(rec.index);
    out += "\",\"string\":[";
    for (size_t i = 0; i < rec.string.size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(static_cast<int>(rec.string[i]));
    }
    out += "],\"edges\":";
    out += std::to_string(rec.edges);
    out += ",\"full_alphabet\":";
    out += rec.full_alphabet ? "true" : "false";
    out += "}\n";
    return out;
}

std::string to_dot(const MachineRecord& rec) {
    std::string out;
    out += "digraph m" + index_to_string(rec.index) + " {\n";
    out += "  rankdir=LR;\n";
    for (int q = 0; q < rec.params.n; ++q)
        out += "  " + std::to_string(q) + ";\n";
    for (int q = 0; q < rec.params.n; ++q) {
        for (int j = 0; j < rec.params.k; ++j) {
            std::int8_t t = rec.string[q * rec.params.k + j];
            if (t == kNoEdge)
                continue;
            out += "  " + std::to_string(q) + " -> " + std::to_string(static_cast<int>(t)) +
                   " [label=\"1/" + std::to_string(rec.out_degree[q]) + "|" +
                   std::to_string(j) + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

std::string format_record(const MachineRecord& rec, EmitFormat format) {
    switch (format) {
    case EmitFormat::Jsonl: return to_jsonl(rec);
    case EmitFormat::Dot: return to_dot(rec);
    case EmitFormat::None: break;
    }
    return {};
}

/*
 * Checkpoint line, space separated:
 *   magic n k shards shard_id range_begin range_end next_index
 *   candidates accepted full_alphabet r0 r1 r2 r3 r4 H (edges count){H}
 */
std::string format_checkpoint(const CensusSummary& s) {
    std::ostringstream out;
    out << kCheckpointMagic << ' ' << s.params.n << ' ' << s.params.k << ' ' << s.shards << ' '
        << s.shard_id << ' ' << index_to_string(s.range_begin) << ' '
        << index_to_string(s.range_end) << ' ' << index_to_string(s.next_index) << ' '
        << s.candidates << ' ' << s.accepted << ' ' << s.full_alphabet;
    for (auto r : s.rejected)
        out << ' ' << r;
    out << ' ' << s.edge_histogram.size();
    for (const auto& [edges, count] : s.edge_histogram)
        out << ' ' << edges << ' ' << count;
    return out.str();
}

CensusSummary parse_checkpoint(const std::string& line) {
    std::istringstream in(line);
    std::string magic;
    CensusSummary s;
    std::string begin_text, end_text, next_text;
    std::size_t hist_size = 0;
    in >> magic;
    if (magic != kCheckpointMagic)
        throw std::invalid_argument("not a census checkpoint: " + line);
    in >> s.params.n >> s.params.k >> s.shards >> s.shard_id >> begin_text >> end_text >>
        next_text >> s.candidates >> s.accepted >> s.full_alphabet;
    for (auto& r : s.rejected)
        in >> r;
    in >> hist_size;
    for (std::size_t i = 0; i < hist_size; ++i) {
        int edges = 0;
        std::uint64_t count = 0;
        in >> edges >> count;
        s.edge_histogram[edges] = count;
    }
    if (!in)
        throw std::invalid_argument("truncated census checkpoint: " + line);
    s.range_begin = index_from_string(begin_text);
    s.range_end = index_from_string(end_text);
    s.next_index = index_from_string(next_text);
    s.complete = s.next_index == s.range_end;
    return s;
}

void write_summary(std::ostream& out, const CensusSummary& s) {
    out << "n " << s.params.n << "  k " << s.params.k;
    if (s.shards > 1)
        out << "  shard " << s.shard_id << "/" << s.shards;
    out << "  range [" << index_to_string(s.range_begin) << ", "
        << index_to_string(s.range_end) << ")\n";
    out << "candidates " << s.candidates << (s.complete ? "" : "  (incomplete)") << "\n";
    out << "accepted   " << s.accepted;
    if (s.candidates > 0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f",
                      static_cast<double>(s.accepted) / static_cast<double>(s.candidates));
        out << "  (" << buf << " of candidates)";
    }
    out << "\n";
    out << "full_alphabet " << s.full_alphabet << "\n";
    out << "edge histogram:";
    for (const auto& [edges, count] : s.edge_histogram)
        out << "  " << edges << ":" << count;
    out << "\n";
    out << "rejected:";
    for (int i = 0; i < kRejectionReasonCount; ++i)
        out << "  " << to_string(static_cast<RejectionReason>(i)) << ":" << s.rejected[i];
    out << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s.elapsed_seconds);
    out << "elapsed " << buf << "s\n";
}

}  // namespace emach
