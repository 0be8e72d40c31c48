/*
 * types.hpp -- domain types shared by the enumeration engine.
 *
 * Machines live in string representation: an n*k tuple of terminal states
 * where entry i*k+j is the target of the edge leaving state i on symbol j,
 * or kNoEdge when that edge is absent. States are 0..n-1, symbols 0..k-1.
 */

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace emach {

/*
 * Enumeration indices are exact integers up to (n+1)^(n*k). 64 bits already
 * overflow for modest parameters, so ranks are 128-bit throughout; anything
 * wider is rejected up front by validate_params().
 */
using EnumIndex = unsigned __int128;

std::string index_to_string(EnumIndex value);
EnumIndex index_from_string(const std::string& text);  // throws std::invalid_argument
double index_to_double(EnumIndex value);

struct MachineParams {
    int n = 1;  // state count
    int k = 1;  // alphabet size

    int positions() const { return n * k; }
    bool operator==(const MachineParams&) const = default;
};

// True iff n,k >= 1 and the whole index space (n+1)^(n*k) fits in EnumIndex.
bool params_supported(MachineParams p);
// Throws std::invalid_argument when params_supported() fails.
void validate_params(MachineParams p);

inline constexpr std::int8_t kNoEdge = -1;

using TransitionString = std::vector<std::int8_t>;

/*
 * First-occurrence positions of each state in a string, with sentinels
 * f[0] = -1 and f[n] = n*k. Valid flags are strictly increasing with
 * f[i] <= i*k-1, which is exactly the accessibility constraint.
 */
using Flag = std::vector<int>;

struct MalformedString : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidFlag : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FlagMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Digit encoding of one entry: kNoEdge -> 0, state t -> t+1. At a position
// whose segment allows states 0..m this gives a base-(m+2) digit.
inline int digit(std::int8_t entry) { return entry + 1; }
inline std::int8_t entry_of_digit(int d) { return static_cast<std::int8_t>(d - 1); }

int edge_count(const TransitionString& s);

// Does s carry a valid flag, i.e. every state 1..n-1 occurs, first
// occurrences are strictly increasing and first(i) <= i*k-1? Equivalent to
// the labeling walk from state 0 reproducing s itself.
bool is_accessible_form(const TransitionString& s, MachineParams p);

Flag flag_of(const TransitionString& s, MachineParams p);  // throws MalformedString
void validate_flag(const Flag& f, MachineParams p);        // throws InvalidFlag

// Text forms: comma-separated integers, -1 for an absent edge.
std::string format_string(const TransitionString& s);
TransitionString parse_string(const std::string& text, MachineParams p);
std::string format_flag(const Flag& f);

// Outcome of the machine filter chain, in the order the checks run.
enum class RejectionReason {
    TooFewEdges,
    Complete,
    NotStronglyConnected,
    NotCanonical,
    NotMinimal,
    Accepted,
};
inline constexpr int kRejectionReasonCount = 5;  // Accepted is not a rejection
const char* to_string(RejectionReason r);

// One accepted machine. Transition probabilities are uniform per state, so
// out_degree fully determines them (each edge from state q has weight
// 1/out_degree[q]).
struct MachineRecord {
    MachineParams params;
    TransitionString string;
    EnumIndex index = 0;
    int edges = 0;
    bool full_alphabet = false;
    std::vector<int> out_degree;
};

MachineRecord make_record(const TransitionString& s, EnumIndex index, MachineParams p);

}  // namespace emach
