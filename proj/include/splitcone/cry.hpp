#pragma once

#include "splitcone/edc.hpp"

#include <cstdint>
#include <vector>

namespace splitcone {

// An n x n matrix of the Chan-Robbins-Yuen polytope CRY_n: doubly
// stochastic with x(i,j) = 0 whenever i - j > 1.
struct CRYMatrix {
    int n = 0;
    std::vector<Rat> x; // row-major, 1-based access via at()

    explicit CRYMatrix(int n_ = 0)
        : n(n_), x(static_cast<size_t>(n_) * n_, Rat(0))
    {
    }
    const Rat& at(int i, int j) const
    {
        return x[static_cast<size_t>(i - 1) * n + (j - 1)];
    }
    Rat& at(int i, int j) { return x[static_cast<size_t>(i - 1) * n + (j - 1)]; }

    friend bool operator==(const CRYMatrix& a, const CRYMatrix& b)
    {
        return a.n == b.n && a.x == b.x;
    }
};

// True iff x is doubly stochastic, nonnegative, with the CRY zero pattern.
bool is_cry_point(const CRYMatrix& x);

// phi: CRY_n -> PEDC_n, delta(k,l) = 1 - sum_{i<=k} sum_{j>=l} x(i,j).
DissimilarityMatrix phi(const CRYMatrix& x);

// psi: PEDC_n -> CRY_n, the inverse affine map (weight-recovery
// differences plus border complements). Throws std::domain_error
// (NotInPolytope) if d is not in PEDC_n.
CRYMatrix psi(const DissimilarityMatrix& d);

// True iff membership(d) is not Outside and d(1,n) <= 1.
bool is_pedc_point(const DissimilarityMatrix& d);

// The 2^(n-1) vertices of CRY_n: block-diagonal permutation matrices whose
// blocks are 1x1 identities or k-cycle blocks (subdiagonal ones plus the
// upper-right 1), ordered by block composition lexicographically.
std::vector<CRYMatrix> cry_vertices(int n);

// The 2^(n-1) vertices of PEDC_n: the origin plus ray_vector(tau) for every
// tau in R_n.
std::vector<DissimilarityMatrix> pedc_vertices(int n);

// Lattice-point counts of the dilates t*PEDC_n and t*CRY_n (they must
// agree). Public desk-scale cap: n <= 5, t <= 4; throws
// std::invalid_argument (TooLarge) beyond.
struct LatticeCounts {
    std::int64_t pedc = 0;
    std::int64_t cry = 0;
};
LatticeCounts count_lattice_points(int n, int t);

// Uncapped internal counters (used by the Ehrhart path and the benchmark).
std::int64_t count_pedc_points(int n, int t);
std::int64_t count_pedc_points_serial(int n, int t);
std::int64_t count_cry_points(int n, int t);

// Normalized volume of PEDC_n by exact Ehrhart interpolation on
// t = 0..C(n,2); equals prod_{i=1}^{n-2} Catalan(i). Capped at n <= 5.
Rat normalized_volume(int n);

} // namespace splitcone
