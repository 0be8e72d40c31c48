/*
 * acceptance.cpp -- end-to-end checks against the published census numbers.
 *
 * Runs each check at full precision and prints one PASS/FAIL line per
 * criterion; exits nonzero if any fail. The n=7 binary cell takes far longer
 * than the rest, so it only runs when EMACH_EXTENDED is set.
 */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "emach/census.hpp"
#include "emach/filter.hpp"
#include "emach/generation.hpp"
#include "emach/tables.hpp"
#include "oracle.hpp"

using namespace emach;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << criterion << "  " << name;
    if (!detail.empty())
        std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok)
        ++failures;
}

std::map<std::pair<int, int>, CensusSummary> census_cache;

const CensusSummary& census(int n, int k) {
    auto key = std::make_pair(n, k);
    auto it = census_cache.find(key);
    if (it == census_cache.end()) {
        CensusOptions opt;
        opt.threads = 0;  // all cores
        it = census_cache.emplace(key, run_census({n, k}, opt, nullptr)).first;
    }
    return it->second;
}

std::uint64_t binomial(int n, int r) {
    std::uint64_t result = 1;
    for (int i = 1; i <= r; ++i)
        result = result * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return result;
}

void criterion1_binary_census() {
    bool ok = true;
    std::string detail;
    for (const auto& cell : reference_table(1)) {
        if (cell.n > 6)
            continue;
        const CensusSummary& s = census(cell.n, 2);
        if (s.accepted != *cell.machines || s.edge_histogram != cell.edge_histogram) {
            ok = false;
            detail += " n=" + std::to_string(cell.n) + " got " + std::to_string(s.accepted);
        }
    }
    report(1, "binary census n=1..6 with edge histograms", ok, detail);

    if (std::getenv("EMACH_EXTENDED")) {
        const CensusSummary& s7 = census(7, 2);
        report(1, "binary census n=7 (extended)", s7.accepted == 43997426,
               "E=" + std::to_string(s7.accepted));
    } else {
        std::cout << "SKIP  1  binary census n=7 (extended; set EMACH_EXTENDED to run)"
                  << std::endl;
    }
}

void criterion2_accessible_totals() {
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<int, std::uint64_t>> expected = {
        {2, 45}, {3, 816}, {4, 20225}, {5, 632700}, {6, 23836540}};
    for (auto [n, total] : expected) {
        if (total_count({n, 2}) != total) {
            ok = false;
            detail += " n=" + std::to_string(n);
        }
    }
    report(2, "accessible-DFA totals n=2..6", ok, detail);
}

void criterion3_multi_alphabet() {
    bool ok = true;
    std::string detail;
    for (int k = 2; k <= 6; ++k) {
        std::uint64_t expected = (1u << k) - 1;
        if (census(1, k).accepted != expected) {
            ok = false;
            detail += " (1," + std::to_string(k) + ")";
        }
    }
    const std::vector<std::pair<std::pair<int, int>, std::uint64_t>> cells = {
        {{2, 3}, 141}, {{2, 4}, 1873}, {{2, 5}, 20925}, {{3, 3}, 15598}};
    for (const auto& [cell, expected] : cells) {
        if (census(cell.first, cell.second).accepted != expected) {
            ok = false;
            detail += " (" + std::to_string(cell.first) + "," + std::to_string(cell.second) + ")";
        }
    }
    report(3, "multi-alphabet census cells", ok, detail);
}

void criterion4_full_alphabet() {
    bool ok = true;
    std::string detail;
    for (int k = 2; k <= 6; ++k) {
        if (census(1, k).full_alphabet != 1) {
            ok = false;
            detail += " (1," + std::to_string(k) + ")";
        }
    }
    const std::vector<std::pair<std::pair<int, int>, std::uint64_t>> cells = {
        {{2, 3}, 120}, {{2, 4}, 1351}, {{3, 3}, 15364}};
    for (const auto& [cell, expected] : cells) {
        if (census(cell.first, cell.second).full_alphabet != expected) {
            ok = false;
            detail += " (" + std::to_string(cell.first) + "," + std::to_string(cell.second) + ")";
        }
    }
    // alphabet-subset identity on every computed cell
    for (auto [n, kmax] : std::vector<std::pair<int, int>>{{1, 6}, {2, 5}, {3, 3}}) {
        for (int k = 2; k <= kmax; ++k) {
            std::uint64_t sum = 0;
            for (int l = 1; l <= k; ++l)
                sum += binomial(k, l) * census(n, l).full_alphabet;
            if (sum != census(n, k).accepted) {
                ok = false;
                detail += " identity(" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        }
    }
    report(4, "full-alphabet counts and alphabet-subset identity", ok, detail);
}

void criterion5_worked_indices() {
    N1Table t({3, 3});
    const TransitionString s1{1, 2, 0, 0, -1, 2, -1, 0, 2};
    const TransitionString s2{1, -1, 2, 0, 2, 1, -1, 1, 2};
    const TransitionString s3{-1, 1, 0, 2, 0, 1, 1, -1, 0};
    bool ok = string_index(s1, t) == 70791 && string_index(s2, t) == 55115 &&
              string_index(s3, t) == 18977;
    auto canon = canonical_index(s1, t);
    ok = ok && canon && canon->index == 18977 && canon->string == s3;
    report(5, "worked three-state indices and canonical selection", ok);
}

void criterion6_bijection_suite() {
    bool ok = true;
    std::string detail;
    int raw_checked = 0;
    int raw_skipped = 0;
    for (int n = 1; n <= 10; ++n) {
        for (int k = 1; n * k <= 10; ++k) {
            MachineParams p{n, k};
            N1Table t(p);
            const EnumIndex total = total_count(t);

            // generation order equals rank order; unrank inverts every rank
            Enumerator en(t);
            EnumIndex expected = 0;
            bool cell_ok = true;
            while (en.advance()) {
                if (en.index() != expected || string_index(en.current(), t) != expected ||
                    unrank(expected, t) != en.current()) {
                    cell_ok = false;
                    break;
                }
                ++expected;
            }
            cell_ok = cell_ok && expected == total;

            // generated set equals the definition-level accessible set
            if (oracle::raw_tuple_count(p) <= 1.5e8) {
                ++raw_checked;
                auto naive = oracle::naive_accessible_strings(p);
                cell_ok = cell_ok && naive.size() == static_cast<std::size_t>(total);
                Enumerator again(t);
                std::size_t at = 0;
                while (again.advance() && cell_ok) {
                    cell_ok = at < naive.size() && again.current() == naive[at];
                    ++at;
                }
            } else {
                ++raw_skipped;  // raw tuple scan over budget; order checks above still ran
            }

            if (!cell_ok) {
                ok = false;
                detail += " (" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        }
    }
    report(6, "bijection suite over nk <= 10", ok,
           detail.empty() ? std::to_string(raw_checked) + " raw-set cells, " +
                                std::to_string(raw_skipped) + " over raw budget"
                          : detail);
}

void criterion7_filter_properties() {
    bool ok = true;
    std::string detail;
    for (MachineParams p : {MachineParams{2, 2}, MachineParams{3, 2}}) {
        N1Table t(p);
        MachineFilter filter(t);
        std::vector<TransitionString> pool;
        std::vector<bool> accepted;
        Enumerator en(t);
        while (en.advance()) {
            const TransitionString& s = en.current();
            RejectionReason reason = filter.test(s, en.index(), en.edges());

            // minimality decisions agree with the word oracle
            if (is_minimal(s, p) != oracle::naive_equivalent_states(s, p).empty()) {
                ok = false;
                detail += " minimality";
            }
            // edge bounds behave as the structural lemmas dictate
            if (en.edges() < p.n && is_strongly_connected(s, p)) {
                ok = false;
                detail += " lemma1";
            }
            if (p.n > 1 && en.edges() == p.positions() && is_minimal(s, p)) {
                ok = false;
                detail += " lemma2";
            }
            if (is_strongly_connected(s, p) && is_minimal(s, p) &&
                !(p.n > 1 && en.edges() == p.positions())) {
                pool.push_back(s);
                accepted.push_back(reason == RejectionReason::Accepted);
            }
        }
        for (const auto& cls : oracle::naive_isomorphism_classes(pool, p)) {
            int winners = 0;
            for (std::size_t member : cls)
                winners += accepted[member];
            if (winners != 1) {
                ok = false;
                detail += " iso-class";
            }
        }
    }
    report(7, "filter properties at (2,2) and (3,2)", ok, detail);
}

void criterion8_sharding_and_checkpoints() {
    const MachineParams p{5, 2};
    CensusOptions opt;
    opt.emit = EmitFormat::Jsonl;

    std::ostringstream whole;
    CensusSummary unsharded = run_census(p, opt, &whole);

    std::ostringstream parts;
    CensusSummary merged;
    merged.params = p;
    for (int shard = 0; shard < 4; ++shard) {
        CensusOptions sopt = opt;
        sopt.shards = 4;
        sopt.shard_id = shard;
        merged.merge(run_census(p, sopt, &parts));
    }
    bool ok = parts.str() == whole.str() && merged.accepted == unsharded.accepted &&
              merged.candidates == unsharded.candidates &&
              merged.edge_histogram == unsharded.edge_histogram &&
              merged.rejected == unsharded.rejected;

    // a checkpointed run, stopped and resumed, extends the stream byte-for-byte
    auto checkpoint = std::filesystem::temp_directory_path() / "emach-acceptance.ck";
    std::filesystem::remove(checkpoint);
    std::ostringstream staged;
    CensusOptions stage = opt;
    stage.checkpoint_path = checkpoint.string();
    stage.stop_after = 200000;
    for (int i = 0; i < 8; ++i) {
        if (run_census(p, stage, &staged).complete)
            break;
    }
    ok = ok && staged.str() == whole.str();
    std::filesystem::remove(checkpoint);

    report(8, "sharded and checkpointed runs are byte-identical", ok);
}

void scaling_sanity() {
    const CensusSummary& s5 = census(5, 2);
    const CensusSummary& s6 = census(6, 2);
    double rate5 = static_cast<double>(s5.candidates) / s5.elapsed_seconds;
    double rate6 = static_cast<double>(s6.candidates) / s6.elapsed_seconds;
    bool ok = rate6 * 10.0 >= rate5;
    std::ostringstream detail;
    detail.precision(3);
    detail << "n=5 " << rate5 / 1e6 << "M/s, n=6 " << rate6 / 1e6 << "M/s";
    report(9, "per-candidate throughput at n=6 within 10x of n=5", ok, detail.str());
}

}  // namespace

int main() {
    criterion1_binary_census();
    criterion2_accessible_totals();
    criterion3_multi_alphabet();
    criterion4_full_alphabet();
    criterion5_worked_indices();
    criterion6_bijection_suite();
    criterion7_filter_properties();
    criterion8_sharding_and_checkpoints();
    scaling_sanity();
    if (failures) {
        std::cout << failures << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
