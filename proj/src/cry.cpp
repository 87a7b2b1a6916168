#include "splitcone/cry.hpp"

#include <stdexcept>

namespace splitcone {

bool is_cry_point(const CRYMatrix& m)
{
    const int n = m.n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (m.at(i, j) < 0)
                return false;
            if (i - j > 1 && m.at(i, j) != 0)
                return false;
        }
    for (int i = 1; i <= n; ++i) {
        Rat row(0), col(0);
        for (int j = 1; j <= n; ++j) {
            row += m.at(i, j);
            col += m.at(j, i);
        }
        if (row != 1 || col != 1)
            return false;
    }
    return true;
}

DissimilarityMatrix phi(const CRYMatrix& m)
{
    const int n = m.n;
    DissimilarityMatrix d(n);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            Rat v(1);
            for (int i = 1; i <= k; ++i)
                for (int j = l; j <= n; ++j)
                    v -= m.at(i, j);
            d.set(k, l, v);
        }
    return d;
}

bool is_pedc_point(const DissimilarityMatrix& d)
{
    if (d.n == 2)
        return d.at(1, 2) >= 0 && d.at(1, 2) <= 1;
    if (membership(d).status == MembershipReport::Status::Outside)
        return false;
    return d.at(1, d.n) <= 1;
}

CRYMatrix psi(const DissimilarityMatrix& d)
{
    const int n = d.n;
    if (!is_pedc_point(d))
        throw std::domain_error("psi: point is not in PEDC_n (NotInPolytope)");
    CRYMatrix m(n);
    // Diagonal: the trivial-split weights, doubled.
    m.at(1, 1) = d.at(1, 2);
    m.at(n, n) = d.at(n - 1, n);
    for (int i = 2; i <= n - 1; ++i)
        m.at(i, i) = d.at(i - 1, i) + d.at(i, i + 1) - d.at(i - 1, i + 1);
    // Subdiagonal: complements of the adjacent distances.
    for (int i = 1; i <= n - 1; ++i)
        m.at(i + 1, i) = Rat(1) - d.at(i, i + 1);
    // First row and last column: border differences.
    m.at(1, n) = Rat(1) - d.at(1, n);
    for (int l = 2; l <= n - 1; ++l)
        m.at(1, l) = d.at(1, l + 1) - d.at(1, l);
    for (int k = 2; k <= n - 1; ++k)
        m.at(k, n) = d.at(k - 1, n) - d.at(k, n);
    // Interior: the covering differences.
    for (int k = 2; k <= n - 1; ++k)
        for (int l = k + 1; l <= n - 1; ++l)
            m.at(k, l) = d.at(k - 1, l) + d.at(k, l + 1) - d.at(k, l) - d.at(k - 1, l + 1);
    return m;
}

namespace {

// All compositions of n, lexicographic by parts.
void compositions(int n, std::vector<int>& parts, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(parts);
        return;
    }
    for (int p = 1; p <= n; ++p) {
        parts.push_back(p);
        compositions(n - p, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<CRYMatrix> cry_vertices(int n)
{
    if (n < 2)
        throw std::invalid_argument("cry_vertices: n >= 2 required");
    std::vector<std::vector<int>> comps;
    std::vector<int> parts;
    compositions(n, parts, comps);
    std::vector<CRYMatrix> out;
    for (const auto& comp : comps) {
        CRYMatrix m(n);
        int a = 1;
        for (int p : comp) {
            int b = a + p - 1;
            if (p == 1) {
                m.at(a, a) = 1;
            } else {
                m.at(a, b) = 1; // upper-right corner of the cycle block
                for (int i = a; i < b; ++i)
                    m.at(i + 1, i) = 1;
            }
            a = b + 1;
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<DissimilarityMatrix> pedc_vertices(int n)
{
    std::vector<DissimilarityMatrix> out;
    out.emplace_back(n); // the origin (apex of the cone)
    for (const RayTau& t : all_rays(n))
        out.push_back(ray_vector(t));
    return out;
}

namespace {

struct PedcCounter {
    int n;
    std::int64_t t;
    std::vector<std::int64_t> val; // indexed like DissimilarityMatrix

    std::int64_t& at(int i, int j)
    {
        return val[DissimilarityMatrix::index(n, i, j)];
    }

    // Assign the variables row-major; bounds enforce the Left chain, the
    // Right/monotone column bound, and within-row monotonicity; Triangle
    // and Covering facets are checked as soon as their last variable is set.
    std::int64_t count(int i, int j)
    {
        if (i > n - 1)
            return 1;
        int ni = i, nj = j + 1;
        if (nj > n) {
            ni = i + 1;
            nj = ni + 1;
        }
        std::int64_t lo = (j == i + 1) ? 0 : at(i, j - 1);
        std::int64_t hi = (i == 1) ? t : at(i - 1, j);
        if (i > 1 && j > i + 1 && at(i, j - 1) > hi)
            return 0;
        std::int64_t total = 0;
        for (std::int64_t v = lo; v <= hi; ++v) {
            at(i, j) = v;
            if (i >= 2) {
                if (j == i + 1) {
                    if (at(i - 1, i) + v - at(i - 1, i + 1) < 0)
                        continue; // Triangle(i) violated
                } else {
                    if (v + at(i - 1, j - 1) - at(i, j - 1) - at(i - 1, j) < 0)
                        continue; // Covering(i,j-1) violated
                }
            }
            total += count(ni, nj);
        }
        return total;
    }
};

} // namespace

std::int64_t count_pedc_points_serial(int n, int t)
{
    if (n < 2)
        throw std::invalid_argument("count_pedc_points: n >= 2 required");
    PedcCounter c;
    c.n = n;
    c.t = t;
    c.val.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
    return c.count(1, 2);
}

std::int64_t count_pedc_points(int n, int t)
{
    if (n < 2)
        throw std::invalid_argument("count_pedc_points: n >= 2 required");
    if (n == 2)
        return t + 1;
    std::int64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total) \
    num_threads(thread_cap())
#endif
    for (int first = 0; first <= t; ++first) {
        PedcCounter c;
        c.n = n;
        c.t = t;
        c.val.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
        c.at(1, 2) = first;
        total += c.count(1, 3);
    }
    return total;
}

namespace {

struct CryCounter {
    int n;
    std::int64_t t;
    std::vector<std::int64_t> colrem;
    std::vector<std::vector<int>> row_cols; // allowed columns per row

    std::int64_t count(int row, size_t idx, std::int64_t rem)
    {
        const auto& cols = row_cols[row];
        if (idx == cols.size()) {
            if (rem != 0)
                return 0;
            // Column row-1 takes no further contributions.
            if (row >= 2 && colrem[row - 1] != 0)
                return 0;
            if (row == n) {
                if (colrem[n] != 0)
                    return 0;
                return 1;
            }
            return count(row + 1, 0, t);
        }
        int col = cols[idx];
        std::int64_t hi = std::min(rem, colrem[col]);
        std::int64_t total = 0;
        for (std::int64_t v = 0; v <= hi; ++v) {
            colrem[col] -= v;
            total += count(row, idx + 1, rem - v);
            colrem[col] += v;
        }
        return total;
    }
};

} // namespace

std::int64_t count_cry_points(int n, int t)
{
    if (n < 2)
        throw std::invalid_argument("count_cry_points: n >= 2 required");
    CryCounter c;
    c.n = n;
    c.t = t;
    c.colrem.assign(n + 1, t);
    c.row_cols.assign(n + 1, {});
    for (int i = 1; i <= n; ++i) {
        if (i >= 2)
            c.row_cols[i].push_back(i - 1);
        for (int j = i; j <= n; ++j)
            c.row_cols[i].push_back(j);
    }
    return c.count(1, 0, t);
}

LatticeCounts count_lattice_points(int n, int t)
{
    if (n > 5 || t > 4)
        throw std::invalid_argument(
            "count_lattice_points: capped at n <= 5, t <= 4 (TooLarge)");
    if (n < 2 || t < 0)
        throw std::invalid_argument("count_lattice_points: need n >= 2, t >= 0");
    return LatticeCounts{count_pedc_points(n, t), count_cry_points(n, t)};
}

Rat normalized_volume(int n)
{
    if (n > 5)
        throw std::invalid_argument("normalized_volume: capped at n <= 5 (TooLarge)");
    if (n < 3)
        throw std::invalid_argument("normalized_volume: n >= 3 required");
    const int dim = n * (n - 1) / 2;
    // Exact Lagrange interpolation of the Ehrhart polynomial on t = 0..dim;
    // the leading coefficient is the top divided difference.
    std::vector<std::int64_t> counts;
    for (int t = 0; t <= dim; ++t)
        counts.push_back(count_pedc_points(n, t));
    Rat leading(0);
    for (int i = 0; i <= dim; ++i) {
        Rat denom(1);
        for (int j = 0; j <= dim; ++j)
            if (j != i)
                denom *= Rat(i - j);
        leading += Rat(counts[i]) / denom;
    }
    Rat fact(1);
    for (int k = 2; k <= dim; ++k)
        fact *= k;
    return leading * fact;
}

} // namespace splitcone
