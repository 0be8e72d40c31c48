/*
 * filter.hpp -- decides whether a candidate string is the canonical
 * representative of a topological machine.
 *
 * A strongly connected machine has one string representation per choice of
 * start state; the canonical one is the string of smallest rank. The filter
 * rejects, in order: too few edges (< n), complete (= n*k edges, n > 1 only
 * -- the single-state complete machine is a valid machine), any relabeling
 * failing (not strongly connected) or ranking no higher (not canonical),
 * and finally non-minimality. The order matters for speed only; minimality
 * is the most expensive check, so it runs last on the fewest candidates.
 */

#pragma once

#include <optional>

#include "emach/analysis.hpp"
#include "emach/ranking.hpp"
#include "emach/types.hpp"

namespace emach {

struct CanonicalForm {
    EnumIndex index = 0;
    TransitionString string;
};

class MachineFilter {
public:
    explicit MachineFilter(const N1Table& table);

    // Full rejection chain on a candidate with known rank.
    RejectionReason test(const TransitionString& s, EnumIndex index);
    RejectionReason test(const TransitionString& s, EnumIndex index, int edges);

    // Minimum-rank relabeling over all start states; nullopt when the
    // machine is not strongly connected.
    std::optional<CanonicalForm> canonical(const TransitionString& s, EnumIndex index);

    const N1Table& table() const { return *table_; }

private:
    const N1Table* table_;
    MachineParams params_;
    Relabeler relabeler_;
    MinimalityChecker minimality_;
    TransitionString relabeled_;
};

// One-shot wrappers.
RejectionReason test_topological_emachine(const TransitionString& s, EnumIndex index,
                                          const N1Table& table);
std::optional<CanonicalForm> canonical_index(const TransitionString& s, const N1Table& table);

}  // namespace emach
