#include "emach/ranking.hpp"

#include "emach/generation.hpp"

namespace emach {

N1Table::N1Table(MachineParams params) : params_(params) {
    validate_params(params);
    const int n = params.n;
    const int k = params.k;

    pows_.resize(n + 1);
    for (int base = 1; base <= n + 1; ++base) {
        auto& row = pows_[base - 1];
        row.resize(n * k + 1);
        row[0] = 1;
        for (int e = 1; e <= n * k; ++e)
            row[e] = row[e - 1] * static_cast<unsigned>(base);
    }

    if (n >= 2) {
        rows_.resize(n - 1);
        // base row m = n-1
        {
            auto& row = rows_[n - 2];
            row.resize((n - 1) * k - 1 - (n - 2) + 1);
            for (int j = n - 2; j <= (n - 1) * k - 1; ++j)
                row[j - (n - 2)] = pow(n + 1, n * k - 1 - j);
        }
        for (int m = n - 2; m >= 1; --m) {
            auto& row = rows_[m - 1];
            row.resize(m * k - 1 - (m - 1) + 1);
            EnumIndex last = 0;
            for (int i = 0; i < k; ++i)
                last += pow(m + 2, i) * at(m + 1, m * k + i);
            row[m * k - 1 - (m - 1)] = last;
            for (int j = m * k - 2; j >= m - 1; --j)
                row[j - (m - 1)] =
                    static_cast<unsigned>(m + 2) * at(m, j + 1) + at(m + 1, j + 1);
        }

        tails_.resize(n - 1);
        for (int j = 1; j <= n - 1; ++j) {
            auto& row = tails_[j - 1];
            row.resize(j * k - 1 - (j - 1) + 1);
            // tail(j, jk-1) is an empty sum; accumulate right to left
            EnumIndex acc = 0;
            row[j * k - 1 - (j - 1)] = 0;
            for (int fj = j * k - 2; fj >= j - 1; --fj) {
                // tail(j, fj) = (j+1) * (tail(j, fj+1) + N1(j, fj+1))
                acc = static_cast<unsigned>(j + 1) * (acc + at(j, fj + 1));
                row[fj - (j - 1)] = acc;
            }
        }
    }
}

EnumIndex total_count(const N1Table& table) {
    const MachineParams p = table.params();
    if (p.n == 1)
        return table.pow(2, p.k);  // every position independently absent or a self-loop
    EnumIndex total = 0;
    for (int l = 0; l < p.k; ++l)
        total += table.pow(2, l) * table.at(1, l);
    return total;
}

EnumIndex total_count(MachineParams params) {
    return total_count(N1Table(params));
}

EnumIndex flag_base_index(const Flag& flag, const N1Table& table) {
    const MachineParams p = table.params();
    validate_flag(flag, p);
    EnumIndex base = 0;
    EnumIndex prefix = 1;  // product of segment sizes before the deviation point
    for (int j = 1; j <= p.n - 1; ++j) {
        prefix *= table.pow(j + 1, flag[j] - flag[j - 1] - 1);
        base += prefix * table.flag_tail(j, flag[j]);
    }
    return base;
}

EnumIndex block_size(const Flag& flag, const N1Table& table) {
    const MachineParams p = table.params();
    EnumIndex size = 1;
    for (int j = 0; j <= p.n - 1; ++j)
        size *= table.pow(j + 2, flag[j + 1] - flag[j] - 1);
    return size;
}

EnumIndex rank_within_flag(const TransitionString& s, const Flag& flag, const N1Table& table) {
    const MachineParams p = table.params();
    if (static_cast<int>(s.size()) != p.positions())
        throw FlagMismatch("string length does not match parameters");
    EnumIndex rank = 0;
    int seg = 0;  // states introduced so far
    for (int pos = 0; pos < p.positions(); ++pos) {
        if (seg < p.n - 1 && pos == flag[seg + 1]) {
            ++seg;
            if (s[pos] != seg)
                throw FlagMismatch("flag position " + std::to_string(pos) +
                                   " does not introduce state " + std::to_string(seg));
            continue;
        }
        int d = digit(s[pos]);
        if (d < 0 || d > seg + 1)
            throw FlagMismatch("entry at position " + std::to_string(pos) +
                               " is not allowed before state " + std::to_string(seg + 1) +
                               " is introduced");
        rank = rank * static_cast<unsigned>(seg + 2) + static_cast<unsigned>(d);
    }
    return rank;
}

EnumIndex string_index(const TransitionString& s, const N1Table& table) {
    const Flag flag = flag_of(s, table.params());
    return flag_base_index(flag, table) + rank_within_flag(s, flag, table);
}

TransitionString unrank(EnumIndex index, const N1Table& table) {
    const MachineParams p = table.params();
    Flag flag = first_flag(p);
    EnumIndex base = 0;
    for (;;) {
        EnumIndex size = block_size(flag, table);
        if (index < base + size)
            break;
        base += size;
        if (!next_flag(flag, p))
            throw IndexOutOfRange("index " + index_to_string(index) + " is not below " +
                                  index_to_string(base));
    }
    // decode the remainder as the mixed-radix code over the free positions
    EnumIndex rem = index - base;
    TransitionString s(p.positions(), kNoEdge);
    std::vector<EnumIndex> weight(p.positions(), 1);
    {
        int seg = p.n - 1;
        EnumIndex w = 1;
        for (int pos = p.positions() - 1; pos >= 0; --pos) {
            while (seg >= 1 && flag[seg] > pos)
                --seg;
            if (seg >= 1 && flag[seg] == pos)
                continue;  // flag position, fixed entry
            weight[pos] = w;
            w *= static_cast<unsigned>(seg + 2);
        }
    }
    int seg = 0;
    for (int pos = 0; pos < p.positions(); ++pos) {
        if (seg < p.n - 1 && pos == flag[seg + 1]) {
            ++seg;
            s[pos] = static_cast<std::int8_t>(seg);
            continue;
        }
        int d = static_cast<int>(rem / weight[pos]);
        rem %= weight[pos];
        s[pos] = entry_of_digit(d);
    }
    return s;
}

}  // namespace emach
