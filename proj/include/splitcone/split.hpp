#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace splitcone {

// A circular split of the taxa {0,1,...,n}, stored as the contiguous
// interval [lo,hi] of {1..n} that does NOT contain the root 0.
// Invariants: 1 <= lo <= hi <= n and (lo,hi) != (1,n) -- the root has no
// trivial split.
struct Split {
    int lo = 1;
    int hi = 1;

    bool is_trivial() const { return lo == hi; }
    bool contains(int taxon) const { return taxon >= lo && taxon <= hi; }

    friend bool operator==(const Split& a, const Split& b)
    {
        return a.lo == b.lo && a.hi == b.hi;
    }
    friend bool operator<(const Split& a, const Split& b)
    {
        return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
    }
};

std::string split_to_string(const Split& s); // "[lo,hi]"

// A split given as an explicit bipartition of {0,...,n}; ingestion format
// only, canonicalized before use.
struct GeneralSplit {
    std::set<int> side_a;
    std::set<int> side_b;
};

enum class CanonError { NotCircular, RootTrivial, Malformed };

// Returns the interval form of the 0-free side, or the reason it has none.
// The 0-free side must be a contiguous interval of [n] and must not be all
// of [n].
struct CanonResult {
    std::optional<Split> split;
    std::optional<CanonError> error;
};
CanonResult canonicalize(const GeneralSplit& s, int n);

// Re-expands a Split to its bipartition of {0,...,n}.
GeneralSplit expand(const Split& s, int n);

// A circular split system on taxa {0,...,n}: the leaf count plus a
// duplicate-free, sorted set of splits.
struct SplitSystem {
    int n = 0;
    std::vector<Split> splits; // kept sorted, duplicate-free

    bool contains(const Split& s) const;
    bool has_all_trivials() const;
};

// Builds a system from an arbitrary list (sorts, deduplicates, validates
// ranges). Throws std::invalid_argument on out-of-range splits.
SplitSystem make_system(int n, std::vector<Split> splits);

// Adds every trivial split [i,i], i in [n].
SplitSystem with_trivials(SplitSystem sys);

// KN_n: every interval split [i,j], 1 <= i <= j <= n, (i,j) != (1,n).
// Requires n >= 2.
SplitSystem complete_system(int n);

// True iff the split separates taxa i and j of {0,...,n} (exactly one of
// them lies in the interval; taxon 0 never does).
bool separates(const Split& s, int i, int j);

// Pairwise compatibility: for every pair of splits, at least one of the
// four side-intersections is empty. Returns a violating pair otherwise.
struct CompatibilityResult {
    bool compatible = true;
    Split a, b; // witness when incompatible
};
CompatibilityResult pairwise_compatible(const SplitSystem& sys);

// Two individual splits, on taxa {0,...,n}.
bool splits_compatible(const Split& a, const Split& b, int n);

// Dual (n+1)-gon diagonals: each non-trivial split [i,j] maps to the
// diagonal (i, j+1 mod n+1); trivial splits map to polygon sides and are
// omitted.
std::vector<std::pair<int, int>> polygon_diagonals(const SplitSystem& sys);

} // namespace splitcone
