/*
 * emach -- census runs, rank/unrank utilities, single-machine inspection,
 * and verification against the published census tables.
 *
 * Exit codes: 0 success, 1 usage or runtime error, 2 verification mismatch.
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "emach/census.hpp"
#include "emach/filter.hpp"
#include "emach/generation.hpp"
#include "emach/tables.hpp"

namespace {

struct ParamArgs {
    int states = 0;
    int alphabet = 0;
    emach::MachineParams params() const { return {states, alphabet}; }
};

void add_param_options(CLI::App* cmd, ParamArgs& args) {
    cmd->add_option("-n,--states", args.states, "number of states")->required();
    cmd->add_option("-k,--alphabet", args.alphabet, "alphabet size")->required();
}

int run_census_command(const ParamArgs& args, const emach::CensusOptions& options,
                       const std::string& out_path) {
    const bool emitting = options.emit != emach::EmitFormat::None;
    std::ofstream file;
    std::ostream* records = nullptr;
    if (emitting) {
        if (!out_path.empty()) {
            // extend the record stream when resuming from a checkpoint
            const bool resuming = !options.checkpoint_path.empty() &&
                                  std::filesystem::exists(options.checkpoint_path);
            file.open(out_path, resuming ? std::ios::app : std::ios::trunc);
            if (!file) {
                std::cerr << "emach: cannot open " << out_path << " for writing\n";
                return 1;
            }
            records = &file;
        } else {
            records = &std::cout;
        }
    }

    emach::CensusSummary summary = emach::run_census(args.params(), options, records);
    // keep the summary away from a record stream on stdout
    std::ostream& report = (records == &std::cout) ? std::cerr : std::cout;
    emach::write_summary(report, summary);
    return 0;
}

int run_inspect(const ParamArgs& args, const std::string& text) {
    const emach::MachineParams params = args.params();
    emach::validate_params(params);
    const emach::TransitionString s = emach::parse_string(text, params);
    if (!emach::is_accessible_form(s, params)) {
        std::cout << "string " << emach::format_string(s)
                  << " is not in accessible form (no flag)\n";
        return 0;
    }
    const emach::N1Table table(params);
    const emach::EnumIndex index = emach::string_index(s, table);
    std::cout << "string " << emach::format_string(s) << "\n";
    std::cout << "flag   " << emach::format_flag(emach::flag_of(s, params)) << "\n";
    std::cout << "index  " << emach::index_to_string(index) << "\n";
    std::cout << "edges  " << emach::edge_count(s) << "\n";

    bool strongly_connected = true;
    for (int q0 = 0; q0 < params.n; ++q0) {
        auto relabeled = emach::relabel_from(s, q0, params);
        std::cout << "start " << q0 << ": ";
        if (!relabeled) {
            std::cout << "labeling walk fails (not strongly connected)\n";
            strongly_connected = false;
            continue;
        }
        std::cout << emach::format_string(*relabeled) << "  index "
                  << emach::index_to_string(emach::string_index(*relabeled, table)) << "\n";
    }
    if (strongly_connected) {
        auto canon = emach::canonical_index(s, table);
        std::cout << "canonical: " << emach::format_string(canon->string) << "  index "
                  << emach::index_to_string(canon->index) << "\n";
    }
    std::cout << "result " << emach::to_string(emach::test_topological_emachine(s, index, table))
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological machine census over accessible DFA strings"};
    app.require_subcommand(1);

    // census
    ParamArgs census_args;
    emach::CensusOptions census_options;
    std::string out_path;
    std::string emit_name = "none";
    auto* census = app.add_subcommand("census", "enumerate and filter one (n, k) cell");
    add_param_options(census, census_args);
    census->add_option("--shards", census_options.shards, "number of index-range shards");
    census->add_option("--shard-id", census_options.shard_id, "this shard, 0-based");
    census->add_option("--threads", census_options.threads,
                       "worker threads (0 = hardware)");
    census->add_option("--emit", emit_name, "record format: none, jsonl, dot")
        ->check(CLI::IsMember({"none", "jsonl", "dot"}));
    census->add_option("--out", out_path, "write records to this file (default stdout)");
    census->add_flag("--full-alphabet-only", census_options.full_alphabet_only,
                     "emit only machines using every letter");
    census->add_option("--checkpoint", census_options.checkpoint_path,
                       "checkpoint file; resumes when it exists (threads=1)");
    census->add_option("--checkpoint-every", census_options.checkpoint_every,
                       "candidates between checkpoint writes");
    census->add_option("--stop-after", census_options.stop_after,
                       "stop after this many candidates (for staged runs)");

    // verify
    emach::VerifyOptions verify_options;
    auto* verify = app.add_subcommand("verify", "recompute published table cells and compare");
    verify->add_option("--table", verify_options.table, "table to verify: 1, 2, or 3")
        ->required()
        ->check(CLI::Range(1, 3));
    verify->add_option("--max-states", verify_options.max_states, "largest n to verify");
    verify->add_option("--budget-seconds", verify_options.budget_seconds,
                       "skip cells estimated to exceed this");
    verify->add_option("--threads", verify_options.threads, "worker threads (0 = hardware)");

    // rank / unrank
    ParamArgs rank_args;
    std::string rank_string;
    auto* rank = app.add_subcommand("rank", "index of a string");
    add_param_options(rank, rank_args);
    rank->add_option("--string", rank_string, "comma-separated entries, -1 for absent")
        ->required();

    ParamArgs unrank_args;
    std::string unrank_index;
    auto* unrank = app.add_subcommand("unrank", "string at an index");
    add_param_options(unrank, unrank_args);
    unrank->add_option("--index", unrank_index, "decimal rank")->required();

    // inspect
    ParamArgs inspect_args;
    std::string inspect_string;
    auto* inspect = app.add_subcommand(
        "inspect", "run the machine filter on one string and show all relabelings");
    add_param_options(inspect, inspect_args);
    inspect->add_option("--string", inspect_string, "comma-separated entries")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (census->parsed()) {
            if (emit_name == "jsonl")
                census_options.emit = emach::EmitFormat::Jsonl;
            else if (emit_name == "dot")
                census_options.emit = emach::EmitFormat::Dot;
            return run_census_command(census_args, census_options, out_path);
        }
        if (verify->parsed()) {
            emach::VerifyReport report = emach::verify_tables(verify_options, std::cout);
            std::cout << report.cells_checked << " cells checked, " << report.cells_skipped
                      << " skipped, " << report.failures << " failures\n";
            return report.failures == 0 ? 0 : 2;
        }
        if (rank->parsed()) {
            const emach::MachineParams params = rank_args.params();
            emach::validate_params(params);
            const emach::N1Table table(params);
            const auto s = emach::parse_string(rank_string, params);
            std::cout << emach::index_to_string(emach::string_index(s, table)) << "\n";
            return 0;
        }
        if (unrank->parsed()) {
            const emach::MachineParams params = unrank_args.params();
            emach::validate_params(params);
            const emach::N1Table table(params);
            const emach::EnumIndex index = emach::index_from_string(unrank_index);
            std::cout << emach::format_string(emach::unrank(index, table)) << "\n";
            return 0;
        }
        if (inspect->parsed())
            return run_inspect(inspect_args, inspect_string);
    } catch (const std::exception& e) {
        std::cerr << "emach: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
