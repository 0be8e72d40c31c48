/*
 * analysis.hpp -- structural tests on candidate strings: the deterministic
 * state-labeling walk, strong connectivity, minimality, and alphabet usage.
 *
 * All checks are pure; the class forms exist to reuse scratch buffers in the
 * enumeration loop.
 */

#pragma once

#include <optional>
#include <vector>

#include "emach/types.hpp"

namespace emach {

/*
 * The labeling walk: q0 becomes state 0, then states are scanned in new-label
 * order following their symbols 0..k-1, each newly reached original state
 * taking the next unused label. Succeeds iff all n states are reached.
 */
class Relabeler {
public:
    explicit Relabeler(MachineParams p);

    // Writes the string rewritten under the walk's labeling into out.
    // Returns false (out unspecified) when fewer than n states are reached.
    bool relabel(const TransitionString& s, int q0, TransitionString& out);

private:
    MachineParams params_;
    std::vector<std::int8_t> label_;  // original id -> new label
    std::vector<std::int8_t> order_;  // new label -> original id
};

// Convenience wrapper; nullopt when the machine is not accessible from q0.
std::optional<TransitionString> relabel_from(const TransitionString& s, int q0, MachineParams p);

// Every state reaches every other. One forward and one backward sweep from
// state 0; equivalent to the labeling walk succeeding from every start.
bool is_strongly_connected(const TransitionString& s, MachineParams p);

/*
 * Minimality with all n real states accepting and missing transitions read
 * as rejection: complete the machine with one non-accepting absorbing sink,
 * split {states}/{sink}, and run Moore refinement to a fixed point. Minimal
 * iff no two real states end in the same class.
 */
class MinimalityChecker {
public:
    explicit MinimalityChecker(MachineParams p);

    bool is_minimal(const TransitionString& s);

private:
    MachineParams params_;
    std::vector<int> cls_;
    std::vector<int> next_cls_;
    std::vector<int> rep_;  // class id -> representative state of this round
};

bool is_minimal(const TransitionString& s, MachineParams p);

// Every symbol labels at least one edge.
bool uses_full_alphabet(const TransitionString& s, MachineParams p);

}  // namespace emach
