#include "emach/analysis.hpp"

namespace emach {

Relabeler::Relabeler(MachineParams p) : params_(p), label_(p.n), order_(p.n) {}

bool Relabeler::relabel(const TransitionString& s, int q0, TransitionString& out) {
    const int n = params_.n;
    const int k = params_.k;
    label_.assign(n, kNoEdge);
    label_[q0] = 0;
    order_[0] = static_cast<std::int8_t>(q0);
    int found = 1;
    for (int next = 0; next < found; ++next) {
        const int q = order_[next];
        for (int j = 0; j < k; ++j) {
            std::int8_t t = s[q * k + j];
            if (t != kNoEdge && label_[t] == kNoEdge) {
                label_[t] = static_cast<std::int8_t>(found);
                order_[found++] = t;
            }
        }
    }
    if (found < n)
        return false;
    out.resize(n * k);
    for (int label = 0; label < n; ++label) {
        const int q = order_[label];
        for (int j = 0; j < k; ++j) {
            std::int8_t t = s[q * k + j];
            out[label * k + j] = (t == kNoEdge) ? kNoEdge : label_[t];
        }
    }
    return true;
}

std::optional<TransitionString> relabel_from(const TransitionString& s, int q0, MachineParams p) {
    Relabeler relabeler(p);
    TransitionString out;
    if (!relabeler.relabel(s, q0, out))
        return std::nullopt;
    return out;
}

bool is_strongly_connected(const TransitionString& s, MachineParams p) {
    const int n = p.n;
    const int k = p.k;
    // forward reachability from 0
    std::vector<std::int8_t> seen(n, 0);
    std::vector<std::int8_t> stack;
    stack.reserve(n);
    seen[0] = 1;
    stack.push_back(0);
    int reached = 1;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int j = 0; j < k; ++j) {
            std::int8_t t = s[q * k + j];
            if (t != kNoEdge && !seen[t]) {
                seen[t] = 1;
                ++reached;
                stack.push_back(t);
            }
        }
    }
    if (reached < n)
        return false;
    // backward reachability to 0 over the reversed edges
    std::vector<std::vector<std::int8_t>> rev(n);
    for (int q = 0; q < n; ++q)
        for (int j = 0; j < k; ++j)
            if (s[q * k + j] != kNoEdge)
                rev[s[q * k + j]].push_back(static_cast<std::int8_t>(q));
    seen.assign(n, 0);
    seen[0] = 1;
    stack.push_back(0);
    reached = 1;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (std::int8_t t : rev[q]) {
            if (!seen[t]) {
                seen[t] = 1;
                ++reached;
                stack.push_back(t);
            }
        }
    }
    return reached == n;
}

MinimalityChecker::MinimalityChecker(MachineParams p)
    : params_(p), cls_(p.n + 1), next_cls_(p.n + 1), rep_(p.n + 1) {}

bool MinimalityChecker::is_minimal(const TransitionString& s) {
    const int n = params_.n;
    const int k = params_.k;
    const int sink = n;
    // initial split: accepting states vs the sink
    for (int q = 0; q < n; ++q)
        cls_[q] = 0;
    cls_[sink] = 1;
    int classes = 2;

    auto target_class = [&](int q, int j) {
        if (q == sink)
            return cls_[sink];
        std::int8_t t = s[q * k + j];
        return t == kNoEdge ? cls_[sink] : cls_[t];
    };

    for (;;) {
        int next_classes = 0;
        for (int q = 0; q <= n; ++q) {
            // same new class iff same old class and same per-symbol target classes
            int assigned = -1;
            for (int c = 0; c < next_classes; ++c) {
                int r = rep_[c];
                if (cls_[r] != cls_[q])
                    continue;
                bool same = true;
                for (int j = 0; j < k; ++j) {
                    if (target_class(r, j) != target_class(q, j)) {
                        same = false;
                        break;
                    }
                }
                if (same) {
                    assigned = c;
                    break;
                }
            }
            if (assigned < 0) {
                assigned = next_classes++;
                rep_[assigned] = q;
            }
            next_cls_[q] = assigned;
        }
        std::swap(cls_, next_cls_);
        if (next_classes == classes)
            break;
        classes = next_classes;
    }
    // minimal iff all real states sit in distinct classes
    return classes >= n + 1;
}

bool is_minimal(const TransitionString& s, MachineParams p) {
    MinimalityChecker checker(p);
    return checker.is_minimal(s);
}

bool uses_full_alphabet(const TransitionString& s, MachineParams p) {
    for (int j = 0; j < p.k; ++j) {
        bool used = false;
        for (int q = 0; q < p.n && !used; ++q)
            used = s[q * p.k + j] != kNoEdge;
        if (!used)
            return false;
    }
    return true;
}

}  // namespace emach
