#include "splitcone/xdiagram.hpp"

#include <sstream>
#include <stdexcept>

namespace splitcone {

Rat TildeMatrix::at(int i, int j) const
{
    if (!defined(n, i, j))
        throw std::out_of_range("tilde entry undefined");
    if (i == 0 || j == n + 1)
        return Rat(1);
    if (i == j)
        return Rat(0);
    return d.at(i, j);
}

TildeMatrix tilde(const DissimilarityMatrix& d)
{
    if (d.n < 2)
        throw std::invalid_argument("tilde: n >= 2 required");
    return TildeMatrix{d.n, d};
}

Facet facet_of_cell(int n, int k, int l)
{
    if (!XDiagram::f_domain(n, k, l))
        throw std::out_of_range("cell outside the f domain");
    if (k == 0)
        return Facet{Facet::Kind::Left, l, 0};
    if (l == n)
        return Facet{Facet::Kind::Right, k + 1, 0};
    if (l == k + 1)
        return Facet{Facet::Kind::Triangle, k + 1, 0};
    return Facet{Facet::Kind::Covering, k + 1, l};
}

std::pair<int, int> cell_of_facet(int n, const Facet& f)
{
    switch (f.kind) {
    case Facet::Kind::Left:
        return {0, f.i};
    case Facet::Kind::Right:
        return {f.i - 1, n};
    case Facet::Kind::Triangle:
        return {f.i - 1, f.i};
    case Facet::Kind::Covering:
        return {f.i - 1, f.j};
    }
    throw std::logic_error("unreachable");
}

XDiagram xdiagram_of(const DissimilarityMatrix& d)
{
    if (d.n < 3)
        throw std::invalid_argument("xdiagram_of: n >= 3 required");
    const int n = d.n;
    const TildeMatrix t = tilde(d);
    XDiagram x(n);
    for (int k = 0; k <= n - 2; ++k)
        for (int l = 2; l <= n; ++l)
            if (XDiagram::f_domain(n, k, l))
                x.set_f(k, l,
                        t.at(k, l) + t.at(k + 1, l + 1) ==
                            t.at(k + 1, l) + t.at(k, l + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (XDiagram::g_domain(n, i, j))
                x.set_g(i, j, t.at(i, j) == t.at(i + 1, j));
            if (XDiagram::h_domain(n, i, j))
                x.set_h(i, j, t.at(i, j) == t.at(i, j + 1));
        }
    return x;
}

namespace {

std::string pos(int i, int j)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

std::vector<RuleViolation> check_rules(const XDiagram& x)
{
    const int n = x.n;
    std::vector<RuleViolation> out;
    auto cells = [&](auto&& fn) {
        for (int k = 0; k <= n - 2; ++k)
            for (int l = 2; l <= n; ++l)
                if (XDiagram::f_domain(n, k, l))
                    fn(k, l);
    };

    // Rule 1: f = 1 forces matching verticals and matching horizontals.
    cells([&](int k, int l) {
        if (!x.f(k, l))
            return;
        if (XDiagram::g_domain(n, k, l) && XDiagram::g_domain(n, k, l + 1) &&
            x.g(k, l) != x.g(k, l + 1))
            out.push_back({1, "f" + pos(k, l) + "=1 but g" + pos(k, l) +
                                  " != g" + pos(k, l + 1)});
        if (XDiagram::h_domain(n, k, l) && XDiagram::h_domain(n, k + 1, l) &&
            x.h(k, l) != x.h(k + 1, l))
            out.push_back({1, "f" + pos(k, l) + "=1 but h" + pos(k, l) +
                                  " != h" + pos(k + 1, l)});
    });

    // Rule 2: two parallel equalities around a cell force f = 1.
    cells([&](int k, int l) {
        if (x.f(k, l))
            return;
        if (XDiagram::g_domain(n, k, l) && XDiagram::g_domain(n, k, l + 1) &&
            x.g(k, l) && x.g(k, l + 1))
            out.push_back({2, "g" + pos(k, l) + "=g" + pos(k, l + 1) +
                                  "=1 but f" + pos(k, l) + "=0"});
        if (XDiagram::h_domain(n, k, l) && XDiagram::h_domain(n, k + 1, l) &&
            x.h(k, l) && x.h(k + 1, l))
            out.push_back({2, "h" + pos(k, l) + "=h" + pos(k + 1, l) +
                                  "=1 but f" + pos(k, l) + "=0"});
    });

    // Rule 3: g propagates right, h propagates up.
    for (int i = 0; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (XDiagram::g_domain(n, i, j) && j > i && x.g(i, j) &&
                XDiagram::g_domain(n, i, j + 1) && !x.g(i, j + 1))
                out.push_back({3, "g" + pos(i, j) + "=1 but g" + pos(i, j + 1) + "=0"});
            if (XDiagram::h_domain(n, i, j) && x.h(i, j) &&
                XDiagram::h_domain(n, i - 1, j) && !x.h(i - 1, j))
                out.push_back({3, "h" + pos(i, j) + "=1 but h" + pos(i - 1, j) + "=0"});
        }

    // Rule 4: three sides of a unit cell force the fourth.
    cells([&](int k, int l) {
        if (!(XDiagram::g_domain(n, k, l) && XDiagram::g_domain(n, k, l + 1) &&
              XDiagram::h_domain(n, k, l) && XDiagram::h_domain(n, k + 1, l)))
            return;
        struct Side {
            bool v;
            std::string name;
        };
        Side sides[4] = {{x.g(k, l), "g" + pos(k, l)},
                         {x.g(k, l + 1), "g" + pos(k, l + 1)},
                         {x.h(k, l), "h" + pos(k, l)},
                         {x.h(k + 1, l), "h" + pos(k + 1, l)}};
        int ones = 0;
        const Side* missing = nullptr;
        for (const Side& s : sides) {
            if (s.v)
                ++ones;
            else
                missing = &s;
        }
        if (ones == 3)
            out.push_back({4, "cell " + pos(k, l) + " has three sides but " +
                                  missing->name + "=0"});
    });

    return out;
}

namespace {

// Tightness over the extended cell system: row-0 cells are Left facets with
// (0,1) standing for the end coordinate delta(1,2); column-n cells are Right
// facets with (n-1,n) standing for delta(n-1,n).
bool ext_tight(const XDiagram& x, int c, int l)
{
    const int n = x.n;
    if (c == 0 && l == 1)
        return x.h(1, 1); // delta(1,2) = 0
    if (c == n - 1 && l == n)
        return x.g(n - 1, n); // delta(n-1,n) = 0
    return x.f(c, l);
}

} // namespace

std::optional<RayTau> ray_for_tight_set(const XDiagram& x)
{
    const int n = x.n;
    RayTau tau;
    tau.n = n;

    // First cut: the smallest l whose row-0 cell is not tight.
    int c = 0;
    for (int l = 1; l <= n - 1; ++l)
        if (!ext_tight(x, 0, l)) {
            c = l;
            break;
        }
    if (c == 0) {
        // Entire first row tight: delta(1,j) = 0 throughout, the zero vector.
        return std::nullopt;
    }
    tau.cuts.push_back(c);
    // Extend the staircase until the termination cell of the current cut is
    // open.
    while (ext_tight(x, c, n)) {
        int next = 0;
        for (int l = c + 1; l <= n - 1; ++l)
            if (!ext_tight(x, c, l)) {
                next = l;
                break;
            }
        if (next == 0)
            throw std::invalid_argument(
                "ray_for_tight_set: no staircase realizes this tight set (InvalidTightSet)");
        tau.cuts.push_back(next);
        c = next;
    }

    // The produced ray must be tight on everything tight in x.
    const DissimilarityMatrix r = ray_vector(tau);
    for (int k = 0; k <= n - 2; ++k)
        for (int l = 2; l <= n; ++l)
            if (XDiagram::f_domain(n, k, l) && x.f(k, l) &&
                facet_of_cell(n, k, l).eval(r) != 0)
                throw std::invalid_argument(
                    "ray_for_tight_set: staircase misses a tight facet (InvalidTightSet)");
    if (x.h(1, 1) && r.at(1, 2) != 0)
        throw std::invalid_argument(
            "ray_for_tight_set: end coordinate delta(1,2) not preserved (InvalidTightSet)");
    if (x.g(n - 1, n) && r.at(n - 1, n) != 0)
        throw std::invalid_argument(
            "ray_for_tight_set: end coordinate delta(n-1,n) not preserved (InvalidTightSet)");
    return tau;
}

std::string render_ascii(const XDiagram& x)
{
    const int n = x.n;
    std::ostringstream os;
    auto vertex_defined = [&](int i, int j) { return TildeMatrix::defined(n, i, j); };
    for (int i = 0; i <= n - 1; ++i) {
        // Vertex row.
        for (int j = 1; j <= n + 1; ++j) {
            os << (vertex_defined(i, j) ? '+' : ' ');
            if (j <= n)
                os << (XDiagram::h_domain(n, i, j) && x.h(i, j) ? "--" : "  ");
        }
        os << '\n';
        // Edge/cell row between vertex rows i and i+1.
        if (i == n - 1)
            break;
        for (int j = 1; j <= n + 1; ++j) {
            os << (XDiagram::g_domain(n, i, j) && x.g(i, j) ? '|' : ' ');
            if (j <= n) {
                char cell = ' ';
                if (XDiagram::f_domain(n, i, j))
                    cell = x.f(i, j) ? 'X' : '.';
                os << cell << ' ';
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace splitcone
