#include "emach/tables.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

#include "emach/census.hpp"
#include "emach/ranking.hpp"

namespace emach {

namespace {

std::vector<ReferenceCell> make_binary_table() {
    // E_{n,2} with edge breakdown and the accessible totals B1_{n,2}
    std::vector<ReferenceCell> cells;
    cells.push_back({1, 2, 3, std::nullopt, std::nullopt, {{1, 2}, {2, 1}}});
    cells.push_back({2, 2, 7, std::nullopt, 45, {{2, 1}, {3, 6}}});
    cells.push_back({3, 2, 78, std::nullopt, 816, {{3, 2}, {4, 22}, {5, 54}}});
    cells.push_back({4, 2, 1388, std::nullopt, 20225, {{4, 3}, {5, 68}, {6, 403}, {7, 914}}});
    cells.push_back({5, 2, 35186, std::nullopt, 632700,
                     {{5, 6}, {6, 192}, {7, 2228}, {8, 10886}, {9, 21874}}});
    cells.push_back({6, 2, 1132613, std::nullopt, 23836540,
                     {{6, 9}, {7, 512}, {8, 9721}, {9, 85974}, {10, 360071}, {11, 676326}}});
    cells.push_back({7, 2, 43997426, std::nullopt, 1048592640,
                     {{7, 18},
                      {8, 1312},
                      {9, 37736},
                      {10, 526760},
                      {11, 3809428},
                      {12, 14229762},
                      {13, 25392410}}});
    cells.push_back({8, 2, 1993473480, std::nullopt, 52696514169ULL,
                     {{8, 30},
                      {9, 3264},
                      {10, 133218},
                      {11, 2729336},
                      {12, 30477505},
                      {13, 190505028},
                      {14, 651856885},
                      {15, 1117768214}}});
    return cells;
}

std::vector<ReferenceCell> make_machine_table() {
    // E_{n,k} over states and alphabet size
    std::vector<ReferenceCell> cells;
    auto add = [&](int n, int k, std::uint64_t e) { cells.push_back({n, k, e, {}, {}, {}}); };
    add(1, 2, 3);
    add(1, 3, 7);
    add(1, 4, 15);
    add(1, 5, 31);
    add(1, 6, 63);
    add(2, 2, 7);
    add(2, 3, 141);
    add(2, 4, 1873);
    add(2, 5, 20925);
    add(2, 6, 213997);
    add(3, 2, 78);
    add(3, 3, 15598);
    add(3, 4, 1658606);
    add(3, 5, 136146590);
    add(4, 2, 1388);
    add(4, 3, 3625638);
    add(5, 2, 35186);
    add(6, 2, 1132613);
    add(7, 2, 43997426);
    add(8, 2, 1993473480);
    return cells;
}

std::vector<ReferenceCell> make_full_alphabet_table() {
    // F_{n,k}: machines employing all k letters; the machine totals are not
    // part of this table, so only full_alphabet is compared
    std::vector<ReferenceCell> cells;
    auto add = [&](int n, int k, std::uint64_t f) {
        ReferenceCell cell{n, k, std::nullopt, f, {}, {}};
        cells.push_back(cell);
    };
    add(1, 2, 1);
    add(1, 3, 1);
    add(1, 4, 1);
    add(1, 5, 1);
    add(1, 6, 1);
    add(2, 2, 7);
    add(2, 3, 120);
    add(2, 4, 1351);
    add(2, 5, 12900);
    add(2, 6, 113827);
    add(3, 2, 78);
    add(3, 3, 15364);
    add(3, 4, 1596682);
    add(3, 5, 128008760);
    add(4, 2, 1388);
    add(4, 3, 3621474);
    add(5, 2, 35186);
    add(6, 2, 1132613);
    add(7, 2, 43997426);
    add(8, 2, 1993473480);
    return cells;
}

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    std::uint64_t result = 1;
    for (int i = 1; i <= r; ++i)
        result = result * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return result;
}

// Candidates per second, measured on a run long enough to swamp the
// worker-pool startup cost.
double calibrate_rate(int threads) {
    CensusOptions opt;
    opt.threads = threads;
    auto start = std::chrono::steady_clock::now();
    CensusSummary s = run_census({5, 2}, opt, nullptr);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds <= 0)
        seconds = 1e-3;
    return static_cast<double>(s.candidates) / seconds;
}

}  // namespace

const std::vector<ReferenceCell>& reference_table(int table) {
    static const std::vector<ReferenceCell> binary = make_binary_table();
    static const std::vector<ReferenceCell> machines = make_machine_table();
    static const std::vector<ReferenceCell> full = make_full_alphabet_table();
    switch (table) {
    case 1: return binary;
    case 2: return machines;
    case 3: return full;
    }
    throw std::invalid_argument("no reference table " + std::to_string(table));
}

std::optional<std::uint64_t> expected_machine_count(MachineParams p) {
    for (const auto& cell : reference_table(2))
        if (cell.n == p.n && cell.k == p.k)
            return cell.machines;
    return std::nullopt;
}

std::optional<std::uint64_t> expected_full_alphabet_count(MachineParams p) {
    for (const auto& cell : reference_table(3))
        if (cell.n == p.n && cell.k == p.k)
            return cell.full_alphabet;
    return std::nullopt;
}

VerifyReport verify_tables(const VerifyOptions& options, std::ostream& report) {
    VerifyReport result;
    const auto& cells = reference_table(options.table);
    const double rate = calibrate_rate(options.threads);

    for (const auto& cell : cells) {
        const MachineParams params{cell.n, cell.k};
        if (options.max_states > 0 && cell.n > options.max_states)
            continue;
        const double cost = index_to_double(total_count(params)) / rate;
        if (options.budget_seconds > 0 && cost > options.budget_seconds) {
            report << "table " << options.table << " n=" << cell.n << " k=" << cell.k
                   << ": skipped (estimated " << static_cast<long>(cost)
                   << "s exceeds budget)\n";
            ++result.cells_skipped;
            continue;
        }

        CensusOptions census_options;
        census_options.threads = options.threads;
        CensusSummary summary = run_census(params, census_options, nullptr);

        bool ok = true;
        std::string detail;
        if (cell.machines && summary.accepted != *cell.machines) {
            ok = false;
            detail += " machines=" + std::to_string(summary.accepted) + " expected " +
                      std::to_string(*cell.machines);
        }
        if (cell.full_alphabet && summary.full_alphabet != *cell.full_alphabet) {
            ok = false;
            detail += " full_alphabet=" + std::to_string(summary.full_alphabet) + " expected " +
                      std::to_string(*cell.full_alphabet);
        }
        if (cell.accessible_total) {
            if (summary.candidates != *cell.accessible_total) {
                ok = false;
                detail += " accessible=" + std::to_string(summary.candidates) + " expected " +
                          std::to_string(*cell.accessible_total);
            }
        }
        if (!cell.edge_histogram.empty() && summary.edge_histogram != cell.edge_histogram) {
            ok = false;
            detail += " edge-histogram mismatch";
        }

        // every k-ary machine decomposes by the set of letters it uses
        if (options.check_identity && options.table == 2 && cell.k >= 2) {
            std::uint64_t expected_sum = 0;
            for (int l = 1; l <= cell.k; ++l) {
                CensusSummary sub = l == cell.k
                                        ? summary
                                        : run_census({cell.n, l}, census_options, nullptr);
                expected_sum += binomial(cell.k, l) * sub.full_alphabet;
            }
            if (expected_sum != summary.accepted) {
                ok = false;
                detail += " alphabet-subset identity gives " + std::to_string(expected_sum);
            }
        }

        ++result.cells_checked;
        if (!ok)
            ++result.failures;
        report << "table " << options.table << " n=" << cell.n << " k=" << cell.k << ": "
               << (ok ? "ok" : "FAIL") << detail;
        report << "  (E=" << summary.accepted << ", " << summary.candidates << " candidates, ";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", summary.elapsed_seconds);
        report << buf << "s)\n";
    }
    return result;
}

}  // namespace emach
