#include "emach/filter.hpp"

namespace emach {

MachineFilter::MachineFilter(const N1Table& table)
    : table_(&table),
      params_(table.params()),
      relabeler_(table.params()),
      minimality_(table.params()) {}

RejectionReason MachineFilter::test(const TransitionString& s, EnumIndex index) {
    return test(s, index, edge_count(s));
}

RejectionReason MachineFilter::test(const TransitionString& s, EnumIndex index, int edges) {
    const int n = params_.n;
    if (edges < n)
        return RejectionReason::TooFewEdges;
    if (n > 1 && edges == params_.positions())
        return RejectionReason::Complete;
    for (int q0 = 1; q0 < n; ++q0) {
        if (!relabeler_.relabel(s, q0, relabeled_))
            return RejectionReason::NotStronglyConnected;
        if (string_index(relabeled_, *table_) <= index)
            return RejectionReason::NotCanonical;
    }
    if (!minimality_.is_minimal(s))
        return RejectionReason::NotMinimal;
    return RejectionReason::Accepted;
}

std::optional<CanonicalForm> MachineFilter::canonical(const TransitionString& s,
                                                      EnumIndex index) {
    CanonicalForm best{index, s};
    for (int q0 = 1; q0 < params_.n; ++q0) {
        if (!relabeler_.relabel(s, q0, relabeled_))
            return std::nullopt;
        EnumIndex ri = string_index(relabeled_, *table_);
        if (ri < best.index) {
            best.index = ri;
            best.string = relabeled_;
        }
    }
    return best;
}

RejectionReason test_topological_emachine(const TransitionString& s, EnumIndex index,
                                          const N1Table& table) {
    MachineFilter filter(table);
    return filter.test(s, index);
}

std::optional<CanonicalForm> canonical_index(const TransitionString& s, const N1Table& table) {
    MachineFilter filter(table);
    return filter.canonical(s, string_index(s, table));
}

}  // namespace emach
