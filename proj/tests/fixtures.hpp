// Shared example data used across the test suites.
#pragma once

#include "splitcone/edc.hpp"
#include "splitcone/metric.hpp"
#include "splitcone/split.hpp"

#include <random>
#include <vector>

namespace fixtures {

using splitcone::DissimilarityMatrix;
using splitcone::Rat;
using splitcone::Split;
using splitcone::SplitSystem;

inline DissimilarityMatrix from_rows(int n, const std::vector<std::vector<int>>& rows)
{
    DissimilarityMatrix d(n);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n; ++j)
            d.set(i, j, Rat(rows[i - 1][j - i - 1]));
    return d;
}

// A tree metric on 5 leaves (four-point condition holds).
inline DissimilarityMatrix distexample()
{
    return from_rows(5, {{5, 15, 12, 17}, {16, 13, 18}, {11, 16}, {7}});
}

// A circular (Kalmanson) metric on 5 leaves that is not a tree metric.
inline DissimilarityMatrix netdistex()
{
    return from_rows(5, {{22, 32, 29, 26}, {34, 31, 34}, {11, 26}, {21}});
}

// An equidistant circular metric on 5 leaves (root distance 8).
inline DissimilarityMatrix disim()
{
    return from_rows(5, {{12, 16, 16, 16}, {8, 14, 14}, {14, 14}, {4}});
}

// n = 6 matrix of the worked X-diagram example.
inline DissimilarityMatrix xdiamex()
{
    return from_rows(6, {{4, 4, 8, 8, 8}, {1, 6, 6, 7}, {3, 5, 6}, {2, 3}, {2}});
}

// The 4-split circular system {01|2345, 12|0345, 0145|23, 0123|45} plus
// trivials, in interval form.
inline SplitSystem dualpolygonex()
{
    return splitcone::with_trivials(splitcone::make_system(
        5, {Split{2, 5}, Split{1, 2}, Split{2, 3}, Split{4, 5}}));
}

// Ingests an unrooted split system on [m] by designating one taxon as the
// root 0 (its trivial split is dropped). Sides are given as digit strings.
inline SplitSystem rooted_from_unrooted(int m, int root,
                                        const std::vector<std::pair<std::string, std::string>>& sides)
{
    // Relabel: root -> 0; the remaining taxa keep their relative circular
    // order starting after the root.
    auto relabel = [&](int x) {
        // Taxa are 1..m; root becomes 0, others map to 1..m-1 preserving
        // the circular order (root+1 -> 1, ..., root-1 -> m-1).
        int r = x - root;
        if (r < 0)
            r += m;
        return r;
    };
    std::vector<Split> splits;
    for (const auto& [a, b] : sides) {
        splitcone::GeneralSplit gs;
        for (char c : a)
            gs.side_a.insert(relabel(c - '0'));
        for (char c : b)
            gs.side_b.insert(relabel(c - '0'));
        auto res = splitcone::canonicalize(gs, m - 1);
        if (!res.split)
            throw std::runtime_error("fixture split is not circular after rooting");
        splits.push_back(*res.split);
    }
    return splitcone::with_trivials(splitcone::make_system(m - 1, std::move(splits)));
}

// The three unrooted 6-leaf systems of the network examples, rooted at
// taxon 6.
inline SplitSystem treeex()
{
    return rooted_from_unrooted(6, 6,
                                {{"12", "3456"}, {"1265", "34"}, {"1234", "56"}});
}

inline SplitSystem exnet()
{
    return rooted_from_unrooted(
        6, 6, {{"12", "3456"}, {"16", "2345"}, {"123", "456"}, {"126", "345"}});
}

inline SplitSystem orderex()
{
    return rooted_from_unrooted(6, 6,
                                {{"123", "456"}, {"126", "345"}, {"156", "234"}});
}

// Deterministic random nonnegative rational cone point: a random
// combination of extreme rays.
inline DissimilarityMatrix random_cone_point(int n, std::mt19937_64& rng)
{
    auto rays = splitcone::all_rays(n);
    std::uniform_int_distribution<int> num(0, 6), den(1, 4), pick(0, 3);
    DissimilarityMatrix d(n);
    for (const auto& t : rays) {
        if (pick(rng) == 0)
            continue; // leave some rays out for varied faces
        Rat coeff(num(rng), den(rng));
        coeff.canonicalize();
        if (coeff == 0)
            continue;
        auto r = splitcone::ray_vector(t);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                d.set(i, j, d.at(i, j) + coeff * r.at(i, j));
    }
    return d;
}

} // namespace fixtures
