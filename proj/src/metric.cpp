#include "splitcone/metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace splitcone {

const Rat& WeightVector::weight_of(const Split& s) const
{
    auto it = std::lower_bound(sys.splits.begin(), sys.splits.end(), s);
    if (it == sys.splits.end() || !(*it == s))
        throw std::invalid_argument("weight_of: split not in system " +
                                    split_to_string(s));
    return weights[static_cast<size_t>(it - sys.splits.begin())];
}

WeightVector zero_weights(const SplitSystem& sys)
{
    return WeightVector{sys, std::vector<Rat>(sys.splits.size(), Rat(0))};
}

int thread_cap()
{
#ifdef _OPENMP
    int cap = omp_get_max_threads();
    if (const char* env = std::getenv("SPLITCONE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1 && v < cap)
            cap = v;
    }
    return cap;
#else
    return 1;
#endif
}

Rat distance(const SplitSystem& sys, const WeightVector& w, int i, int j)
{
    if (i == j)
        return Rat(0);
    Rat sum(0);
    for (size_t k = 0; k < sys.splits.size(); ++k)
        if (separates(sys.splits[k], i, j))
            sum += w.weights[k];
    return sum;
}

FullMatrixResult full_matrix(const SplitSystem& sys, const WeightVector& w)
{
    FullMatrixResult res;
    res.matrix = DissimilarityMatrix(sys.n);
    for (int i = 1; i <= sys.n; ++i)
        for (int j = i + 1; j <= sys.n; ++j)
            res.matrix.set(i, j, distance(sys, w, i, j));
    for (int i = 1; i <= sys.n; ++i)
        res.root_distances.push_back(distance(sys, w, 0, i));
    return res;
}

std::array<Rat, 3> quadruple_sums(const DissimilarityMatrix& d, int i, int j,
                                  int k, int l)
{
    return {d.at(i, j) + d.at(k, l), d.at(i, k) + d.at(j, l),
            d.at(i, l) + d.at(j, k)};
}

namespace {

bool four_point_ok(const std::array<Rat, 3>& s)
{
    // Two of the three pair-sums are equal and >= the third.
    const Rat mx = std::max({s[0], s[1], s[2]});
    int at_max = 0;
    for (const Rat& v : s)
        if (v == mx)
            ++at_max;
    return at_max >= 2;
}

bool kalmanson_ok(const std::array<Rat, 3>& s)
{
    return s[0] <= s[1] && s[2] <= s[1];
}

// Scans all quadruples i<j<k<l with the given predicate, parallel over i,
// returning the lexicographically first violation regardless of schedule.
template <typename Pred>
QuadrupleResult scan_quadruples(const DissimilarityMatrix& d, Pred ok)
{
    QuadrupleResult res;
    if (d.n < 4)
        return res;
    std::optional<QuadrupleWitness> best;
#ifdef _OPENMP
#pragma omp parallel num_threads(thread_cap())
    {
        std::optional<QuadrupleWitness> local;
#pragma omp for schedule(dynamic) nowait
        for (int i = 1; i <= d.n - 3; ++i) {
            if (local && local->quad[0] < i)
                continue;
            for (int j = i + 1; j <= d.n - 2 && !local; ++j)
                for (int k = j + 1; k <= d.n - 1 && !local; ++k)
                    for (int l = k + 1; l <= d.n && !local; ++l) {
                        auto s = quadruple_sums(d, i, j, k, l);
                        if (!ok(s))
                            local = QuadrupleWitness{{i, j, k, l}, s};
                    }
        }
#pragma omp critical
        if (local && (!best || local->quad < best->quad))
            best = local;
    }
#else
    for (int i = 1; i <= d.n - 3 && !best; ++i)
        for (int j = i + 1; j <= d.n - 2 && !best; ++j)
            for (int k = j + 1; k <= d.n - 1 && !best; ++k)
                for (int l = k + 1; l <= d.n && !best; ++l) {
                    auto s = quadruple_sums(d, i, j, k, l);
                    if (!ok(s))
                        best = QuadrupleWitness{{i, j, k, l}, s};
                }
#endif
    if (best) {
        res.ok = false;
        res.witness = best;
    }
    return res;
}

template <typename Pred>
QuadrupleResult scan_quadruples_serial(const DissimilarityMatrix& d, Pred ok)
{
    QuadrupleResult res;
    for (int i = 1; i + 3 <= d.n; ++i)
        for (int j = i + 1; j + 2 <= d.n; ++j)
            for (int k = j + 1; k + 1 <= d.n; ++k)
                for (int l = k + 1; l <= d.n; ++l) {
                    auto s = quadruple_sums(d, i, j, k, l);
                    if (!ok(s)) {
                        res.ok = false;
                        res.witness = QuadrupleWitness{{i, j, k, l}, s};
                        return res;
                    }
                }
    return res;
}

} // namespace

QuadrupleResult check_four_point(const DissimilarityMatrix& d)
{
    return scan_quadruples(d, four_point_ok);
}

QuadrupleResult check_four_point_serial(const DissimilarityMatrix& d)
{
    return scan_quadruples_serial(d, four_point_ok);
}

QuadrupleResult check_kalmanson(const DissimilarityMatrix& d)
{
    return scan_quadruples(d, kalmanson_ok);
}

QuadrupleResult check_kalmanson_serial(const DissimilarityMatrix& d)
{
    return scan_quadruples_serial(d, kalmanson_ok);
}

std::optional<std::vector<int>> kalmanson_some_ordering(const DissimilarityMatrix& d)
{
    if (d.n > 8)
        throw std::invalid_argument("ordering search is capped at n = 8");
    if (d.n <= 3) {
        std::vector<int> id(d.n);
        for (int i = 0; i < d.n; ++i)
            id[i] = i + 1;
        return id;
    }
    std::vector<int> rest;
    for (int i = 2; i <= d.n; ++i)
        rest.push_back(i);
    do {
        // Fix leaf 1 first and skip mirror images.
        if (rest.front() > rest.back())
            continue;
        std::vector<int> order{1};
        order.insert(order.end(), rest.begin(), rest.end());
        DissimilarityMatrix rel(d.n);
        for (int a = 1; a <= d.n; ++a)
            for (int b = a + 1; b <= d.n; ++b)
                rel.set(a, b, d.at(order[a - 1], order[b - 1]));
        if (check_kalmanson_serial(rel).ok)
            return order;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return std::nullopt;
}

EquidistantResult check_equidistant(const SplitSystem& sys, const WeightVector& w)
{
    EquidistantResult res;
    res.value = distance(sys, w, 0, 1);
    res.ok = true;
    for (int i = 2; i <= sys.n; ++i)
        if (distance(sys, w, 0, i) != res.value) {
            res.ok = false;
            break;
        }
    return res;
}

MetricResult check_metric(const DissimilarityMatrix& d)
{
    MetricResult res;
    for (int x = 1; x <= d.n; ++x)
        for (int y = 1; y <= d.n; ++y)
            for (int z = 1; z <= d.n; ++z) {
                if (x == y || y == z || x == z)
                    continue;
                if (d.at(x, z) > d.at(x, y) + d.at(y, z)) {
                    res.ok = false;
                    res.witness = {x, y, z};
                    return res;
                }
            }
    return res;
}

} // namespace splitcone
