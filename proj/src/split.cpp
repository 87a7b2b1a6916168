#include "splitcone/split.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitcone {

std::string split_to_string(const Split& s)
{
    return "[" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "]";
}

CanonResult canonicalize(const GeneralSplit& s, int n)
{
    CanonResult res;
    // Validate the bipartition.
    if (s.side_a.empty() || s.side_b.empty()) {
        res.error = CanonError::Malformed;
        return res;
    }
    std::set<int> all;
    for (int x : s.side_a) all.insert(x);
    for (int x : s.side_b) all.insert(x);
    if (static_cast<int>(all.size()) != n + 1 ||
        static_cast<int>(s.side_a.size() + s.side_b.size()) != n + 1 ||
        *all.begin() != 0 || *all.rbegin() != n) {
        res.error = CanonError::Malformed;
        return res;
    }
    const std::set<int>& free_side = s.side_a.count(0) ? s.side_b : s.side_a;
    int lo = *free_side.begin();
    int hi = *free_side.rbegin();
    if (hi - lo + 1 != static_cast<int>(free_side.size())) {
        res.error = CanonError::NotCircular;
        return res;
    }
    if (lo == 1 && hi == n) {
        res.error = CanonError::RootTrivial;
        return res;
    }
    res.split = Split{lo, hi};
    return res;
}

GeneralSplit expand(const Split& s, int n)
{
    GeneralSplit g;
    for (int x = 0; x <= n; ++x) {
        if (s.contains(x))
            g.side_a.insert(x);
        else
            g.side_b.insert(x);
    }
    return g;
}

bool SplitSystem::contains(const Split& s) const
{
    return std::binary_search(splits.begin(), splits.end(), s);
}

bool SplitSystem::has_all_trivials() const
{
    for (int i = 1; i <= n; ++i)
        if (!contains(Split{i, i}))
            return false;
    return true;
}

SplitSystem make_system(int n, std::vector<Split> splits)
{
    if (n < 1)
        throw std::invalid_argument("split system needs n >= 1");
    for (const Split& s : splits) {
        if (s.lo < 1 || s.hi > n || s.lo > s.hi)
            throw std::invalid_argument("split out of range: " + split_to_string(s));
        if (s.lo == 1 && s.hi == n)
            throw std::invalid_argument("the root's trivial split [1,n] is excluded");
    }
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    return SplitSystem{n, std::move(splits)};
}

SplitSystem with_trivials(SplitSystem sys)
{
    std::vector<Split> splits = sys.splits;
    for (int i = 1; i <= sys.n; ++i)
        splits.push_back(Split{i, i});
    return make_system(sys.n, std::move(splits));
}

SplitSystem complete_system(int n)
{
    if (n < 2)
        throw std::invalid_argument("complete_system needs n >= 2");
    std::vector<Split> splits;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (!(i == 1 && j == n))
                splits.push_back(Split{i, j});
    return make_system(n, std::move(splits));
}

bool separates(const Split& s, int i, int j)
{
    return s.contains(i) != s.contains(j);
}

bool splits_compatible(const Split& a, const Split& b, int n)
{
    // Compatible iff one of the four pairwise side-intersections is empty.
    int cnt[2][2] = {{0, 0}, {0, 0}};
    for (int x = 0; x <= n; ++x)
        ++cnt[a.contains(x) ? 0 : 1][b.contains(x) ? 0 : 1];
    return cnt[0][0] == 0 || cnt[0][1] == 0 || cnt[1][0] == 0 || cnt[1][1] == 0;
}

CompatibilityResult pairwise_compatible(const SplitSystem& sys)
{
    CompatibilityResult res;
    for (size_t i = 0; i < sys.splits.size(); ++i)
        for (size_t j = i + 1; j < sys.splits.size(); ++j)
            if (!splits_compatible(sys.splits[i], sys.splits[j], sys.n)) {
                res.compatible = false;
                res.a = sys.splits[i];
                res.b = sys.splits[j];
                return res;
            }
    return res;
}

std::vector<std::pair<int, int>> polygon_diagonals(const SplitSystem& sys)
{
    std::vector<std::pair<int, int>> out;
    for (const Split& s : sys.splits) {
        if (s.is_trivial())
            continue;
        out.emplace_back(s.lo, (s.hi + 1) % (sys.n + 1));
    }
    return out;
}

} // namespace splitcone
