#pragma once

#include "splitcone/metric.hpp"

#include <string>
#include <vector>

namespace splitcone {

// One facet inequality b . delta >= 0 of EDC_{KN_n}.
struct Facet {
    enum class Kind { Left, Right, Triangle, Covering };
    Kind kind;
    int i = 0;
    int j = 0; // used by Covering only

    // The split paired with this facet (Left(i) <-> [1,i], Right(i) <->
    // [i,n], Triangle(i) <-> [i,i], Covering(i,j) <-> [i,j]).
    Split paired_split(int n) const;

    // Exact value of the facet functional on d.
    Rat eval(const DissimilarityMatrix& d) const;

    // The functional as a dense coefficient vector over the C(n,2)
    // upper-triangular coordinates of d.
    std::vector<Rat> coefficients(int n) const;

    std::string to_string() const;

    friend bool operator==(const Facet& a, const Facet& b)
    {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
};

// All facets of EDC_{KN_n} in the fixed order Left, Right, Triangle,
// Covering (each lexicographic); count 3(n-2) + (n-2)(n-3)/2. Requires
// n >= 3.
std::vector<Facet> facets(int n);

// A fixed-order set partition of [n] into contiguous blocks, stored by its
// cut points: cuts = {c_1 < ... < c_m}, c in [1,n-1], meaning blocks
// [1..c_1], [c_1+1..c_2], ..., [c_m+1..n]. At least one cut (>= 2 blocks).
struct RayTau {
    int n = 0;
    std::vector<int> cuts;

    int block_of(int x) const; // 0-based block index of leaf x
    std::vector<std::pair<int, int>> blocks() const;
    std::string to_string() const; // e.g. "1|23|45"

    friend bool operator==(const RayTau& a, const RayTau& b)
    {
        return a.n == b.n && a.cuts == b.cuts;
    }
    friend bool operator<(const RayTau& a, const RayTau& b)
    {
        if (a.cuts.size() != b.cuts.size())
            return a.cuts.size() < b.cuts.size();
        return a.cuts < b.cuts;
    }
};

// The 0/1 vector r_tau: r(i,j) = 0 iff i and j share a block.
DissimilarityMatrix ray_vector(const RayTau& t);

// All 2^(n-1) - 1 elements of R_n, ordered by (block count, cut points
// lexicographic). Requires n >= 2.
std::vector<RayTau> all_rays(int n);

// Weight recovery on KN_n from the facet functionals (weights may be
// negative when d lies outside the cone). Requires n >= 3.
WeightVector recover_weights(const DissimilarityMatrix& d);

// Facets of KN_n containing r_tau, by the closed-form exclusion rules.
std::vector<Facet> facet_incidence(const RayTau& t);

// Membership report against EDC_{KN_n}, or against the face EDC_N for a
// sub-system N.
struct MembershipReport {
    enum class Status { Interior, OnFace, Outside };
    Status status = Status::Outside;
    SplitSystem face;                     // when OnFace/Interior
    std::vector<std::string> violations;  // when Outside
};
MembershipReport membership(const DissimilarityMatrix& d);
MembershipReport membership(const DissimilarityMatrix& d, const SplitSystem& sys);

// Extreme rays of the face EDC_N: the r_tau tight on every facet paired
// with a split absent from sys. Computed by the incidence rules and by
// direct substitution, asserted equal.
std::vector<RayTau> rays_of_face(const SplitSystem& sys);

// Greedy conic decomposition: d = sum lambda_k r_{tau_k} exactly, with
// lambda_k > 0. Throws std::domain_error (NotInCone) if membership(d) is
// Outside.
struct DecompositionTerm {
    Rat coeff;
    RayTau tau;
};
std::vector<DecompositionTerm> decompose(const DissimilarityMatrix& d);

} // namespace splitcone
