#pragma once

// Ground sets, subset masks, and families of subsets.
//
// Conventions: the ground set is V = {0..n-1} (n elements, n <= 62); subsets
// are uint64_t bit masks; intersection sizes therefore lie in {0..n}. A family
// is a canonical (sorted, duplicate-free) list of masks. Densities are exact
// dyadic rationals p(F) = |F| / 2^n.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <bit>

#include "specint/intset.hpp"
#include "specint/numeric.hpp"

namespace specint {

using Mask = uint64_t;

struct GroundSet {
    int n = 0;  // V = {0..n-1}

    GroundSet() = default;
    explicit GroundSet(int size) : n(size) {
        if (n < 0 || n > 62) throw std::invalid_argument("GroundSet: n must be in [0,62]");
    }
    Mask full_mask() const { return n == 0 ? 0 : (~Mask(0) >> (64 - n)); }
    friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.n == b.n; }
};

inline int set_size(Mask m) { return std::popcount(m); }

// Remove element v from the ground set: bit v is dropped and the bits above
// it shift down by one, re-indexing the remaining elements onto {0..n-2}.
inline Mask splice_out(Mask m, int v) {
    Mask low = m & ((Mask(1) << v) - 1);
    Mask high = (m >> (v + 1)) << v;
    return low | high;
}

class Family {
  public:
    Family() = default;
    Family(GroundSet g, std::vector<Mask> sets) : ground_(g), sets_(std::move(sets)) {
        canonicalize();
    }

    static Family empty(GroundSet g) { return Family(g, {}); }

    // All 2^n subsets.
    static Family power_set(GroundSet g) {
        if (g.n > 24) throw std::invalid_argument("power_set: n too large to materialize");
        std::vector<Mask> v;
        v.reserve(size_t(1) << g.n);
        for (Mask m = 0; m <= g.full_mask(); ++m) {
            v.push_back(m);
            if (m == g.full_mask()) break;  // guard n = 0
        }
        return Family(g, std::move(v));
    }

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.n; }
    const std::vector<Mask>& sets() const { return sets_; }
    size_t size() const { return sets_.size(); }
    bool is_empty() const { return sets_.empty(); }
    bool contains(Mask m) const {
        return std::binary_search(sets_.begin(), sets_.end(), m);
    }

    // p(F) = |F| / 2^n, exact.
    DyadicRational density() const {
        return DyadicRational(BigInt(sets_.size()), static_cast<unsigned>(ground_.n));
    }

    // F_1(v) = { S \ {v} : S in F, v in S }, re-indexed onto {0..n-2}.
    Family restrict1(int v) const {
        require_vertex(v);
        std::vector<Mask> out;
        for (Mask m : sets_)
            if ((m >> v) & 1) out.push_back(splice_out(m & ~(Mask(1) << v), v));
        return Family(GroundSet(ground_.n - 1), std::move(out));
    }

    // F_0(v) = { S : S in F, v not in S }, re-indexed onto {0..n-2}.
    Family restrict0(int v) const {
        require_vertex(v);
        std::vector<Mask> out;
        for (Mask m : sets_)
            if (!((m >> v) & 1)) out.push_back(splice_out(m, v));
        return Family(GroundSet(ground_.n - 1), std::move(out));
    }

    Family set_union(const Family& o) const {
        require_same_ground(o);
        std::vector<Mask> out;
        std::set_union(sets_.begin(), sets_.end(), o.sets_.begin(), o.sets_.end(),
                       std::back_inserter(out));
        return Family(ground_, std::move(out));
    }

    Family set_intersection(const Family& o) const {
        require_same_ground(o);
        std::vector<Mask> out;
        std::set_intersection(sets_.begin(), sets_.end(), o.sets_.begin(), o.sets_.end(),
                              std::back_inserter(out));
        return Family(ground_, std::move(out));
    }

    friend bool operator==(const Family& a, const Family& b) {
        return a.ground_ == b.ground_ && a.sets_ == b.sets_;
    }

  private:
    void canonicalize() {
        Mask full = ground_.full_mask();
        for (Mask m : sets_)
            if ((m & ~full) != 0)
                throw std::invalid_argument("Family: subset mask outside the ground set");
        std::sort(sets_.begin(), sets_.end());
        sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    }
    void require_vertex(int v) const {
        if (v < 0 || v >= ground_.n) throw std::out_of_range("Family: vertex out of range");
    }
    void require_same_ground(const Family& o) const {
        if (!(ground_ == o.ground_))
            throw std::invalid_argument("Family: ground sets differ");
    }

    GroundSet ground_;
    std::vector<Mask> sets_;
};

struct FamilyPair {
    Family a;
    Family b;
};

// Signature of B against A: the set of intersection sizes {|A n B| : A in A}.
inline IntSet signature(const Family& A, Mask B) {
    IntSet s;
    for (Mask m : A.sets()) s.insert(std::popcount(m & B));
    return s;
}

struct IntersectionCheck {
    bool ok = true;
    // First offending pair when !ok (for the diagonal case first == second).
    Mask first = 0, second = 0;
    int intersection_size = 0;
};

// All pairwise intersection sizes within A must lie in M; with
// include_diagonal the member sizes |A| = |A n A| are constrained too.
inline IntersectionCheck is_intersecting_family(const Family& A, const IntSet& M,
                                                bool include_diagonal) {
    const auto& v = A.sets();
    for (size_t i = 0; i < v.size(); ++i) {
        if (include_diagonal) {
            int d = std::popcount(v[i]);
            if (!M.contains(d)) return {false, v[i], v[i], d};
        }
        for (size_t j = i + 1; j < v.size(); ++j) {
            int d = std::popcount(v[i] & v[j]);
            if (!M.contains(d)) return {false, v[i], v[j], d};
        }
    }
    return {};
}

// Cross intersections only: |A n B| in M for all A in A, B in B.
inline IntersectionCheck is_intersecting_pair(const Family& A, const Family& B,
                                              const IntSet& M) {
    for (Mask a : A.sets())
        for (Mask b : B.sets()) {
            int d = std::popcount(a & b);
            if (!M.contains(d)) return {false, a, b, d};
        }
    return {};
}

// Cross intersections avoid P: |A n B| not in P.
inline IntersectionCheck is_omitting_pair(const Family& A, const Family& B, const IntSet& P) {
    for (Mask a : A.sets())
        for (Mask b : B.sets()) {
            int d = std::popcount(a & b);
            if (P.contains(d)) return {false, a, b, d};
        }
    return {};
}

// ---------------------------------------------------------------------------
// Family file format: UTF-8 text; '#' starts a comment; a header line "n=<int>"
// precedes the data; each subsequent non-empty line is one subset as
// comma-separated ascending element indices, with "-" denoting the empty set.
// ---------------------------------------------------------------------------

inline void write_family(std::ostream& os, const Family& f) {
    os << "n=" << f.n() << "\n";
    for (Mask m : f.sets()) {
        if (m == 0) {
            os << "-\n";
            continue;
        }
        bool first = true;
        for (int i = 0; i < f.n(); ++i)
            if ((m >> i) & 1) {
                if (!first) os << ",";
                os << i;
                first = false;
            }
        os << "\n";
    }
}

inline Family read_family(std::istream& is) {
    std::string line;
    int n = -1;
    std::vector<Mask> sets;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (n < 0) {
            if (line.rfind("n=", 0) != 0)
                throw std::invalid_argument("family file: expected header n=<int> (line " +
                                            std::to_string(lineno) + ")");
            n = std::stoi(line.substr(2));
            if (n < 0 || n > 62)
                throw std::invalid_argument("family file: n out of range [0,62]");
            continue;
        }
        if (line == "-") {
            sets.push_back(0);
            continue;
        }
        Mask m = 0;
        int prev = -1;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int v = std::stoi(tok);
            if (v < 0 || v >= n)
                throw std::invalid_argument("family file: element " + std::to_string(v) +
                                            " outside ground set (line " +
                                            std::to_string(lineno) + ")");
            if (v <= prev)
                throw std::invalid_argument("family file: elements must be strictly ascending "
                                            "(line " + std::to_string(lineno) + ")");
            prev = v;
            m |= Mask(1) << v;
        }
        sets.push_back(m);
    }
    if (n < 0) throw std::invalid_argument("family file: missing header n=<int>");
    return Family(GroundSet(n), std::move(sets));
}

inline void write_family_file(const std::string& path, const Family& f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_family(os, f);
}

inline Family read_family_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return read_family(is);
}

inline std::string family_to_string(const Family& f) {
    std::ostringstream os;
    write_family(os, f);
    return os.str();
}

}  // namespace specint
