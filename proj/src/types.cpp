#include "emach/types.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace emach {

std::string index_to_string(EnumIndex value) {
    if (value == 0)
        return "0";
    std::string out;
    while (value > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

EnumIndex index_from_string(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty index literal");
    EnumIndex value = 0;
    constexpr EnumIndex kMax = ~EnumIndex{0};
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad index literal: " + text);
        int d = c - '0';
        if (value > (kMax - d) / 10)
            throw std::invalid_argument("index literal out of range: " + text);
        value = value * 10 + d;
    }
    return value;
}

double index_to_double(EnumIndex value) {
    double out = 0.0;
    // split into two 64-bit halves
    out = static_cast<double>(static_cast<std::uint64_t>(value >> 64));
    out = out * 18446744073709551616.0 + static_cast<double>(static_cast<std::uint64_t>(value));
    return out;
}

bool params_supported(MachineParams p) {
    if (p.n < 1 || p.k < 1)
        return false;
    // (n+1)^(n*k) must fit EnumIndex; check by repeated checked multiply
    constexpr EnumIndex kMax = ~EnumIndex{0};
    EnumIndex acc = 1;
    const EnumIndex base = static_cast<unsigned>(p.n) + 1;
    for (int i = 0; i < p.positions(); ++i) {
        if (acc > kMax / base)
            return false;
        acc *= base;
    }
    return true;
}

void validate_params(MachineParams p) {
    if (p.n < 1 || p.k < 1)
        throw std::invalid_argument("machine parameters require n >= 1 and k >= 1");
    if (!params_supported(p))
        throw std::invalid_argument("index space (n+1)^(n*k) exceeds 128-bit ranks for n=" +
                                    std::to_string(p.n) + " k=" + std::to_string(p.k));
}

int edge_count(const TransitionString& s) {
    int edges = 0;
    for (std::int8_t t : s)
        edges += (t != kNoEdge);
    return edges;
}

bool is_accessible_form(const TransitionString& s, MachineParams p) {
    if (static_cast<int>(s.size()) != p.positions())
        return false;
    int prev = -1;  // first occurrence of the previously introduced state
    for (int st = 1; st < p.n; ++st) {
        int first = -1;
        for (int pos = 0; pos < p.positions(); ++pos) {
            if (s[pos] == st) {
                first = pos;
                break;
            }
        }
        if (first < 0 || first <= prev || first > st * p.k - 1)
            return false;
        prev = first;
    }
    for (std::int8_t t : s) {
        if (t < kNoEdge || t >= p.n)
            return false;
    }
    return true;
}

Flag flag_of(const TransitionString& s, MachineParams p) {
    if (static_cast<int>(s.size()) != p.positions())
        throw MalformedString("string has " + std::to_string(s.size()) + " entries, expected " +
                              std::to_string(p.positions()));
    Flag f(p.n + 1, -1);
    f[p.n] = p.positions();
    for (int pos = 0; pos < p.positions(); ++pos) {
        std::int8_t t = s[pos];
        if (t < kNoEdge || t >= p.n)
            throw MalformedString("entry " + std::to_string(t) + " at position " +
                                  std::to_string(pos) + " is out of range");
        if (t > 0 && f[t] < 0)
            f[t] = pos;
    }
    for (int st = 1; st < p.n; ++st) {
        if (f[st] < 0)
            throw MalformedString("state " + std::to_string(st) + " never occurs");
        if (f[st] <= f[st - 1] || f[st] > st * p.k - 1)
            throw MalformedString("first occurrence of state " + std::to_string(st) +
                                  " at position " + std::to_string(f[st]) +
                                  " violates the accessibility order");
    }
    return f;
}

void validate_flag(const Flag& f, MachineParams p) {
    if (static_cast<int>(f.size()) != p.n + 1)
        throw InvalidFlag("flag has " + std::to_string(f.size()) + " entries, expected " +
                          std::to_string(p.n + 1));
    if (f[0] != -1 || f[p.n] != p.positions())
        throw InvalidFlag("flag sentinels must be -1 and n*k");
    for (int i = 1; i < p.n; ++i) {
        if (f[i] <= f[i - 1] || f[i] > i * p.k - 1)
            throw InvalidFlag("flag coordinate f_" + std::to_string(i) + " = " +
                              std::to_string(f[i]) + " is out of range");
    }
}

std::string format_string(const TransitionString& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(static_cast<int>(s[i]));
    }
    return out;
}

TransitionString parse_string(const std::string& text, MachineParams p) {
    TransitionString s;
    s.reserve(p.positions());
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int value = 0;
        size_t begin = item.find_first_not_of(" \t");
        size_t end = item.find_last_not_of(" \t");
        if (begin == std::string::npos)
            throw MalformedString("empty entry in string literal: " + text);
        auto [ptr, ec] = std::from_chars(item.data() + begin, item.data() + end + 1, value);
        if (ec != std::errc{} || ptr != item.data() + end + 1)
            throw MalformedString("bad entry '" + item + "' in string literal");
        if (value < -1 || value >= p.n)
            throw MalformedString("entry " + std::to_string(value) + " out of range for n=" +
                                  std::to_string(p.n));
        s.push_back(static_cast<std::int8_t>(value));
    }
    if (static_cast<int>(s.size()) != p.positions())
        throw MalformedString("string literal has " + std::to_string(s.size()) +
                              " entries, expected " + std::to_string(p.positions()));
    return s;
}

std::string format_flag(const Flag& f) {
    std::string out;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(f[i]);
    }
    return out;
}

const char* to_string(RejectionReason r) {
    switch (r) {
    case RejectionReason::TooFewEdges: return "too-few-edges";
    case RejectionReason::Complete: return "complete";
    case RejectionReason::NotStronglyConnected: return "not-strongly-connected";
    case RejectionReason::NotCanonical: return "not-canonical";
    case RejectionReason::NotMinimal: return "not-minimal";
    case RejectionReason::Accepted: return "accepted";
    }
    return "?";
}

MachineRecord make_record(const TransitionString& s, EnumIndex index, MachineParams p) {
    MachineRecord rec;
    rec.params = p;
    rec.string = s;
    rec.index = index;
    rec.edges = edge_count(s);
    rec.out_degree.assign(p.n, 0);
    std::vector<bool> symbol_used(p.k, false);
    for (int q = 0; q < p.n; ++q) {
        for (int j = 0; j < p.k; ++j) {
            if (s[q * p.k + j] != kNoEdge) {
                ++rec.out_degree[q];
                symbol_used[j] = true;
            }
        }
    }
    rec.full_alphabet =
        std::all_of(symbol_used.begin(), symbol_used.end(), [](bool b) { return b; });
    return rec;
}

}  // namespace emach
