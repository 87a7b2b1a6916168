#pragma once

#include "splitcone/edc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace splitcone {

// The bordered matrix delta~: rows 0..n, columns 1..n+1; row 0 and column
// n+1 are all 1, the interior (1 <= i < j <= n) is delta, and the diagonal
// entries delta~(i,i) are 0.
struct TildeMatrix {
    int n = 0;
    DissimilarityMatrix d;

    static bool defined(int n, int i, int j)
    {
        if (i == 0)
            return j >= 1 && j <= n + 1;
        if (j == n + 1)
            return i >= 0 && i <= n;
        return i >= 1 && i <= j && j <= n; // includes the zero diagonal
    }
    Rat at(int i, int j) const;
};

TildeMatrix tilde(const DissimilarityMatrix& d);

// The indicator triple (f,g,h) of delta~.
//   f(k,l): the unit cell with corners (k,l),(k+1,l+1) balances --
//           delta~(k,l)+delta~(k+1,l+1) = delta~(k+1,l)+delta~(k,l+1);
//           each cell corresponds to one facet of EDC_{KN_n}.
//   g(i,j): vertical equality delta~(i,j) = delta~(i+1,j).
//   h(i,j): horizontal equality delta~(i,j) = delta~(i,j+1).
// Domains are restricted to positions whose referenced entries are defined
// (diagonal-touching edges included, border-border edges excluded).
class XDiagram {
public:
    int n = 0;

    static bool f_domain(int n, int k, int l)
    {
        return k >= 0 && k <= n - 2 && l >= 2 && l <= n && k < l &&
               !(k == 0 && l == n);
    }
    static bool g_domain(int n, int i, int j)
    {
        if (j == n + 1)
            return i >= 0 && i <= n - 2;
        return j >= 2 && j <= n && i >= 0 && i <= j - 1;
    }
    static bool h_domain(int n, int i, int j)
    {
        if (i == 0)
            return j >= 2 && j <= n - 1;
        return i >= 1 && i <= n - 1 && j >= i && j <= n;
    }

    bool f(int k, int l) const { return fset[cell_index(n, k, l)]; }
    bool g(int i, int j) const { return gset[pos_index(n, i, j)]; }
    bool h(int i, int j) const { return hset[pos_index(n, i, j)]; }
    void set_f(int k, int l, bool v) { fset[cell_index(n, k, l)] = v; }
    void set_g(int i, int j, bool v) { gset[pos_index(n, i, j)] = v; }
    void set_h(int i, int j, bool v) { hset[pos_index(n, i, j)] = v; }

    explicit XDiagram(int n_)
        : n(n_),
          fset(static_cast<size_t>(n_) * (n_ + 2), false),
          gset(static_cast<size_t>(n_ + 1) * (n_ + 2), false),
          hset(static_cast<size_t>(n_ + 1) * (n_ + 2), false)
    {
    }

private:
    static size_t cell_index(int n, int k, int l)
    {
        return static_cast<size_t>(k) * (n + 2) + l;
    }
    static size_t pos_index(int n, int i, int j)
    {
        return static_cast<size_t>(i) * (n + 2) + j;
    }
    std::vector<bool> fset, gset, hset;
};

// The facet carried by an in-domain f cell (k,l): Left(l) when k=0,
// Right(k+1) when l=n, Triangle(k+1) when l=k+1, else Covering(k+1,l).
Facet facet_of_cell(int n, int k, int l);
// The inverse table.
std::pair<int, int> cell_of_facet(int n, const Facet& f);

// Evaluates f, g, h exactly over their domains. Requires n >= 3.
XDiagram xdiagram_of(const DissimilarityMatrix& d);

// One violated consistency rule.
struct RuleViolation {
    int rule = 0; // 1..4
    std::string description;
};

// Checks the four necessary rules; an empty list means "not invalid".
std::vector<RuleViolation> check_rules(const XDiagram& x);

// The line construction: returns a tau whose r_tau is tight on every facet
// tight in x (and on the end coordinates when those are tight), or nullopt
// for the zero vector (everything tight). Throws std::invalid_argument
// (InvalidTightSet) when no staircase realizes the tight set.
std::optional<RayTau> ray_for_tight_set(const XDiagram& x);

// Deterministic text rendering: '+' vertices, '--'/'|' edges where h/g are
// 1, and 'X'/'.' in cells where f is 1/0.
std::string render_ascii(const XDiagram& x);

} // namespace splitcone
