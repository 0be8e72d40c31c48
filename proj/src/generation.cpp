#include "emach/generation.hpp"

namespace emach {

Flag first_flag(MachineParams p) {
    Flag f(p.n + 1);
    f[0] = -1;
    f[p.n] = p.positions();
    for (int i = 1; i < p.n; ++i)
        f[i] = i * p.k - 1;
    return f;
}

bool next_flag(Flag& f, MachineParams p) {
    // descending lexicographic: lower the rightmost coordinate with room,
    // then push everything after it back up to its maximum
    for (int i = p.n - 1; i >= 1; --i) {
        if (f[i] - 1 > f[i - 1]) {
            --f[i];
            for (int j = i + 1; j < p.n; ++j)
                f[j] = j * p.k - 1;
            return true;
        }
    }
    return false;
}

TransitionString first_string(const Flag& f, MachineParams p) {
    TransitionString s(p.positions(), kNoEdge);
    for (int i = 1; i < p.n; ++i)
        s[f[i]] = static_cast<std::int8_t>(i);
    return s;
}

int max_state_before(int position, const Flag& f, MachineParams p) {
    int m = 0;
    while (m + 1 <= p.n - 1 && f[m + 1] < position)
        ++m;
    return m;
}

bool next_string(TransitionString& s, const Flag& f, MachineParams p) {
    int seg = p.n - 1;
    for (int pos = p.positions() - 1; pos >= 0; --pos) {
        while (seg >= 1 && f[seg] > pos)
            --seg;
        if (seg >= 1 && f[seg] == pos)
            continue;
        if (digit(s[pos]) <= seg) {  // digits run 0 .. seg+1
            ++s[pos];
            return true;
        }
        s[pos] = kNoEdge;  // maximal digit: clear and carry left
    }
    return false;
}

Enumerator::Enumerator(const N1Table& table)
    : Enumerator(table, 0, total_count(table)) {}

Enumerator::Enumerator(const N1Table& table, EnumIndex begin, EnumIndex end)
    : table_(&table), params_(table.params()), index_(begin), end_(end) {
    const EnumIndex total = total_count(table);
    if (begin > end || end > total)
        throw IndexOutOfRange("range [" + index_to_string(begin) + ", " + index_to_string(end) +
                              ") exceeds total " + index_to_string(total));
    if (begin == end) {
        done_ = true;
        return;
    }
    if (begin == 0) {
        load_flag(first_flag(params_));
        string_ = first_string(flag_, params_);
    } else {
        string_ = unrank(begin, table);
        load_flag(flag_of(string_, params_));
    }
    edges_ = edge_count(string_);
}

void Enumerator::load_flag(const Flag& f) {
    flag_ = f;
    max_digit_.assign(params_.positions(), 0);
    int seg = 0;
    for (int pos = 0; pos < params_.positions(); ++pos) {
        if (seg < params_.n - 1 && flag_[seg + 1] == pos) {
            ++seg;
            max_digit_[pos] = -1;
            continue;
        }
        max_digit_[pos] = static_cast<std::int8_t>(seg + 1);
    }
}

bool Enumerator::advance() {
    if (done_)
        return false;
    if (!primed_) {
        primed_ = true;
        return true;
    }
    if (index_ + 1 >= end_) {
        done_ = true;
        return false;
    }
    ++index_;
    if (step())
        return true;
    done_ = true;  // unreachable while index_ < end_; guards a bad range
    return false;
}

bool Enumerator::step() {
    // in-block successor: rightmost free digit with room
    for (int pos = params_.positions() - 1; pos >= 0; --pos) {
        int cap = max_digit_[pos];
        if (cap < 0)
            continue;
        int d = digit(string_[pos]);
        if (d < cap) {
            edges_ += (d == 0);  // absent -> state 0 gains an edge
            ++string_[pos];
            return true;
        }
        edges_ -= (d > 0);
        string_[pos] = kNoEdge;
    }
    if (!next_flag(flag_, params_))
        return false;
    load_flag(flag_);
    string_ = first_string(flag_, params_);
    edges_ = params_.n - 1;  // exactly the flag entries
    return true;
}

}  // namespace emach
