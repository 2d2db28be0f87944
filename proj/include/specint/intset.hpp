#pragma once

// IntSet: a finite set of small nonnegative integers (values 0..127), used for
// allowed-intersection sets M, forbidden sets P, signatures, and height-function
// arguments. Includes the run-length statistic l(S), the syndetic test, shifts,
// complements, and the text literal format used by the CLI.

#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace specint {

class IntSet {
  public:
    static constexpr int max_supported = 127;

    IntSet() : w_{0, 0} {}

    static IntSet of(std::initializer_list<int> xs) {
        IntSet s;
        for (int x : xs) s.insert(x);
        return s;
    }

    // {0, 1, ..., hi} (empty when hi < 0).
    static IntSet range(int hi) {
        IntSet s;
        for (int i = 0; i <= hi; ++i) s.insert(i);
        return s;
    }

    static IntSet interval(int lo, int hi) {
        IntSet s;
        for (int i = lo; i <= hi; ++i) s.insert(i);
        return s;
    }

    void insert(int x) {
        check(x);
        w_[x >> 6] |= uint64_t(1) << (x & 63);
    }
    void erase(int x) {
        check(x);
        w_[x >> 6] &= ~(uint64_t(1) << (x & 63));
    }
    bool contains(int x) const {
        if (x < 0 || x > max_supported) return false;
        return (w_[x >> 6] >> (x & 63)) & 1;
    }

    int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    int min() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        throw std::domain_error("IntSet::min on empty set");
    }
    int max() const {
        if (w_[1]) return 127 - std::countl_zero(w_[1]);
        if (w_[0]) return 63 - std::countl_zero(w_[0]);
        throw std::domain_error("IntSet::max on empty set");
    }

    std::vector<int> values() const {
        std::vector<int> v;
        for (int i = 0; i <= max_supported; ++i)
            if (contains(i)) v.push_back(i);
        return v;
    }

    // Elements shifted by delta; results outside [0, max_value] are dropped.
    IntSet shift(int delta, int max_value) const {
        IntSet r;
        for (int x : values()) {
            int y = x + delta;
            if (y >= 0 && y <= max_value) r.insert(y);
        }
        return r;
    }

    // {0..max_value} minus this set.
    IntSet complement(int max_value) const {
        IntSet r;
        for (int i = 0; i <= max_value; ++i)
            if (!contains(i)) r.insert(i);
        return r;
    }

    IntSet set_union(const IntSet& o) const {
        IntSet r;
        r.w_[0] = w_[0] | o.w_[0];
        r.w_[1] = w_[1] | o.w_[1];
        return r;
    }
    IntSet set_intersection(const IntSet& o) const {
        IntSet r;
        r.w_[0] = w_[0] & o.w_[0];
        r.w_[1] = w_[1] & o.w_[1];
        return r;
    }
    bool subset_of(const IntSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    friend bool operator==(const IntSet& a, const IntSet& b) {
        return a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1];
    }
    friend bool operator!=(const IntSet& a, const IntSet& b) { return !(a == b); }
    friend bool operator<(const IntSet& a, const IntSet& b) {
        if (a.w_[1] != b.w_[1]) return a.w_[1] < b.w_[1];
        return a.w_[0] < b.w_[0];
    }

    // Length of the longest run of consecutive integers contained in the set;
    // 0 for the empty set.
    int length_l() const {
        int best = 0, cur = 0;
        for (int i = 0; i <= max_supported + 1; ++i) {
            if (i <= max_supported && contains(i)) {
                ++cur;
                if (cur > best) best = cur;
            } else {
                cur = 0;
            }
        }
        return best;
    }

    // True iff every window of l consecutive integers lying inside
    // {0..range_end} meets the set. Windows longer than the range do not
    // exist, so the test is vacuously true then.
    bool is_syndetic(int l, int range_end) const {
        if (l <= 0) throw std::invalid_argument("is_syndetic: l must be positive");
        for (int start = 0; start + l - 1 <= range_end; ++start) {
            bool hit = false;
            for (int i = start; i < start + l; ++i)
                if (contains(i)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    }

    // Low 64 values as a machine word (sufficient whenever max() < 64).
    uint64_t low_word() const { return w_[0]; }
    uint64_t high_word() const { return w_[1]; }

    static IntSet from_low_word(uint64_t w) {
        IntSet s;
        s.w_[0] = w;
        return s;
    }

  private:
    static void check(int x) {
        if (x < 0 || x > max_supported)
            throw std::out_of_range("IntSet element out of range [0,127]: " + std::to_string(x));
    }
    std::array<uint64_t, 2> w_;
};

// ---------------------------------------------------------------------------
// Text literal format.
//
//   {a,b,c}            explicit elements ({} is the empty set)
//   [lo..hi]           the integers lo..hi inclusive
//   complement{...}    {0..n} minus the inner literal (also complement[lo..hi])
//   evens / odds       all even / odd values in {0..n}
//   all / none         {0..n} / {}
//
// Terms may be joined with 'u' (union), e.g. "{0}u[2..4]u{7}". Whitespace is
// ignored. Elements must lie in [0, n].
// ---------------------------------------------------------------------------

namespace detail {
inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline long parse_int(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw std::invalid_argument("IntSet literal: expected integer near '" +
                                                s.substr(start, 8) + "'");
    return std::stol(s.substr(start, i - start));
}

inline IntSet parse_term(const std::string& s, size_t& i, int n);

inline bool match_word(const std::string& s, size_t& i, const char* w) {
    size_t j = i, k = 0;
    while (w[k]) {
        if (j >= s.size() || std::tolower(static_cast<unsigned char>(s[j])) != w[k]) return false;
        ++j, ++k;
    }
    i = j;
    return true;
}

inline IntSet parse_term(const std::string& s, size_t& i, int n) {
    skip_ws(s, i);
    if (i >= s.size()) throw std::invalid_argument("IntSet literal: unexpected end of input");
    if (match_word(s, i, "complement")) {
        IntSet inner = parse_term(s, i, n);
        return inner.complement(n);
    }
    if (match_word(s, i, "evens")) {
        IntSet r;
        for (int v = 0; v <= n; v += 2) r.insert(v);
        return r;
    }
    if (match_word(s, i, "odds")) {
        IntSet r;
        for (int v = 1; v <= n; v += 2) r.insert(v);
        return r;
    }
    if (match_word(s, i, "all")) return IntSet::range(n);
    if (match_word(s, i, "none")) return IntSet();
    if (s[i] == '{') {
        ++i;
        IntSet r;
        skip_ws(s, i);
        if (i < s.size() && s[i] == '}') {
            ++i;
            return r;
        }
        for (;;) {
            long v = parse_int(s, i);
            if (v < 0 || v > n)
                throw std::invalid_argument("IntSet literal: element " + std::to_string(v) +
                                            " outside [0," + std::to_string(n) + "]");
            r.insert(static_cast<int>(v));
            skip_ws(s, i);
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == '}') {
                ++i;
                return r;
            }
            throw std::invalid_argument("IntSet literal: expected ',' or '}'");
        }
    }
    if (s[i] == '[') {
        ++i;
        long lo = parse_int(s, i);
        skip_ws(s, i);
        if (i + 1 >= s.size() || s[i] != '.' || s[i + 1] != '.')
            throw std::invalid_argument("IntSet literal: expected '..' in interval");
        i += 2;
        long hi = parse_int(s, i);
        skip_ws(s, i);
        if (i >= s.size() || s[i] != ']')
            throw std::invalid_argument("IntSet literal: expected ']'");
        ++i;
        if (lo < 0 || hi > n || lo > hi)
            throw std::invalid_argument("IntSet literal: bad interval [" + std::to_string(lo) +
                                        ".." + std::to_string(hi) + "] for n=" + std::to_string(n));
        return IntSet::interval(static_cast<int>(lo), static_cast<int>(hi));
    }
    throw std::invalid_argument("IntSet literal: unexpected character '" + std::string(1, s[i]) +
                                "'");
}
}  // namespace detail

// Parse a literal over the universe {0..n}.
inline IntSet parse_intset(const std::string& text, int n) {
    if (n < 0 || n > IntSet::max_supported)
        throw std::invalid_argument("parse_intset: universe bound out of range");
    size_t i = 0;
    IntSet r = detail::parse_term(text, i, n);
    detail::skip_ws(text, i);
    while (i < text.size() && (text[i] == 'u' || text[i] == 'U' || text[i] == '|')) {
        ++i;
        r = r.set_union(detail::parse_term(text, i, n));
        detail::skip_ws(text, i);
    }
    if (i != text.size())
        throw std::invalid_argument("IntSet literal: trailing characters at '" + text.substr(i) +
                                    "'");
    return r;
}

inline std::string format_intset(const IntSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.values()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace specint
