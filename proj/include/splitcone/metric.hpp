#pragma once

#include "splitcone/rational.hpp"
#include "splitcone/split.hpp"

#include <array>
#include <optional>
#include <vector>

namespace splitcone {

// Symmetric nonnegative dissimilarity matrix on the non-root leaves
// {1,...,n}; upper-triangular storage, zero diagonal implicit.
struct DissimilarityMatrix {
    int n = 0;
    std::vector<Rat> entries; // delta(i,j), 1 <= i < j <= n, row-major

    explicit DissimilarityMatrix(int n_ = 0)
        : n(n_), entries(static_cast<size_t>(n_) * (n_ - 1) / 2, Rat(0))
    {
    }

    static size_t index(int n, int i, int j)
    {
        // 1 <= i < j <= n
        return static_cast<size_t>(i - 1) * (2 * n - i) / 2 + (j - i - 1);
    }
    const Rat& at(int i, int j) const
    {
        static const Rat zero(0);
        if (i == j)
            return zero;
        if (i > j)
            std::swap(i, j);
        return entries[index(n, i, j)];
    }
    void set(int i, int j, Rat v)
    {
        if (i > j)
            std::swap(i, j);
        entries[index(n, i, j)] = std::move(v);
    }
    bool is_zero() const
    {
        for (const Rat& e : entries)
            if (e != 0)
                return false;
        return true;
    }
    friend bool operator==(const DissimilarityMatrix& a,
                           const DissimilarityMatrix& b)
    {
        return a.n == b.n && a.entries == b.entries;
    }
};

// Nonnegative weights on the splits of a system; the i-th weight belongs to
// sys.splits[i].
struct WeightVector {
    SplitSystem sys;
    std::vector<Rat> weights;

    const Rat& weight_of(const Split& s) const;
};

WeightVector zero_weights(const SplitSystem& sys);

// Number of quadruple-scan threads, capped by SPLITCONE_THREADS.
int thread_cap();

// delta_{N,a}(i,j) over taxa {0,...,n}: sum of weights of separating splits.
Rat distance(const SplitSystem& sys, const WeightVector& w, int i, int j);

// All leaf-pair distances plus the root-to-leaf distance vector.
struct FullMatrixResult {
    DissimilarityMatrix matrix;
    std::vector<Rat> root_distances; // delta(0,i), index i-1
};
FullMatrixResult full_matrix(const SplitSystem& sys, const WeightVector& w);

// Four-point condition: for every quadruple, two of the three pair-sums are
// equal and >= the third. The witness is the lexicographically first
// violating quadruple with its three sums
//   (d(i,j)+d(k,l), d(i,k)+d(j,l), d(i,l)+d(j,k)).
struct QuadrupleWitness {
    std::array<int, 4> quad;
    std::array<Rat, 3> sums;
};
struct QuadrupleResult {
    bool ok = true;
    std::optional<QuadrupleWitness> witness;
};

// The three pair-sums of a quadruple, in the fixed order
// (d(i,j)+d(k,l), d(i,k)+d(j,l), d(i,l)+d(j,k)).
std::array<Rat, 3> quadruple_sums(const DissimilarityMatrix& d, int i, int j,
                                  int k, int l);
QuadrupleResult check_four_point(const DissimilarityMatrix& d);
QuadrupleResult check_four_point_serial(const DissimilarityMatrix& d);

// Kalmanson condition in the standard ordering: for all i<j<k<l,
// d(i,j)+d(k,l) <= d(i,k)+d(j,l) and d(i,l)+d(j,k) <= d(i,k)+d(j,l).
// Witness sums are reported in the same order as for the four-point check.
QuadrupleResult check_kalmanson(const DissimilarityMatrix& d);
QuadrupleResult check_kalmanson_serial(const DissimilarityMatrix& d);

// Kalmanson over every circular ordering fixing leaf 1 (n <= 8): returns an
// ordering under which the condition holds, if any.
std::optional<std::vector<int>> kalmanson_some_ordering(const DissimilarityMatrix& d);

// Equidistance of a weighted system: all root-to-leaf distances equal.
struct EquidistantResult {
    bool ok = false;
    Rat value; // the common root distance when ok
};
EquidistantResult check_equidistant(const SplitSystem& sys, const WeightVector& w);

// Triangle inequality on the leaf set; witness is the first violating
// ordered triple (x,y,z) with d(x,z) > d(x,y)+d(y,z).
struct MetricResult {
    bool ok = true;
    std::array<int, 3> witness{};
};
MetricResult check_metric(const DissimilarityMatrix& d);

} // namespace splitcone
