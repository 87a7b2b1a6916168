#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "splitcone/edc.hpp"
#include "splitcone/xdiagram.hpp"

#include <algorithm>
#include <set>

using namespace splitcone;

namespace {

using Cell = std::pair<int, int>;

std::vector<Cell> f_cells(int n)
{
    std::vector<Cell> s;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n + 1; ++l)
            if (XDiagram::f_domain(n, k, l))
                s.push_back({k, l});
    return s;
}

std::vector<Cell> g_cells(int n)
{
    std::vector<Cell> s;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n + 1; ++j)
            if (XDiagram::g_domain(n, i, j))
                s.push_back({i, j});
    return s;
}

std::vector<Cell> h_cells(int n)
{
    std::vector<Cell> s;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n + 1; ++j)
            if (XDiagram::h_domain(n, i, j))
                s.push_back({i, j});
    return s;
}

std::set<Cell> f_ones(const XDiagram& x)
{
    std::set<Cell> s;
    for (auto [k, l] : f_cells(x.n))
        if (x.f(k, l))
            s.insert({k, l});
    return s;
}

std::set<Cell> g_ones(const XDiagram& x)
{
    std::set<Cell> s;
    for (auto [i, j] : g_cells(x.n))
        if (x.g(i, j))
            s.insert({i, j});
    return s;
}

std::set<Cell> h_ones(const XDiagram& x)
{
    std::set<Cell> s;
    for (auto [i, j] : h_cells(x.n))
        if (x.h(i, j))
            s.insert({i, j});
    return s;
}

} // namespace

TEST_CASE("tilde matrix borders and goldens")
{
    auto td = tilde(fixtures::xdiamex());
    for (int j = 1; j <= 7; ++j)
        CHECK(td.at(0, j) == 1);
    for (int i = 0; i <= 6; ++i)
        CHECK(td.at(i, 7) == 1);
    for (int i = 1; i <= 6; ++i)
        CHECK(td.at(i, i) == 0);
    CHECK(td.at(1, 2) == fixtures::xdiamex().at(1, 2));
    CHECK(td.at(3, 5) == fixtures::xdiamex().at(3, 5));

    auto tz = tilde(DissimilarityMatrix(4));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            CHECK(tz.at(i, j) == 0);

    auto tr = tilde(ray_vector(RayTau{3, {1}}));
    CHECK(tr.at(1, 2) == 1);
    CHECK(tr.at(1, 3) == 1);
    CHECK(tr.at(2, 3) == 0);
}

TEST_CASE("X-diagram of the worked n=6 example")
{
    auto x = xdiagram_of(fixtures::xdiamex());
    CHECK(f_ones(x) == std::set<Cell>{{0, 2}, {0, 4}, {0, 5}, {1, 4},
                                      {2, 5}, {3, 5}, {3, 4}});
    CHECK(g_ones(x) ==
          std::set<Cell>{{0, 7}, {1, 7}, {2, 7}, {3, 7}, {4, 7}});
    CHECK(h_ones(x) == std::set<Cell>{{0, 2}, {0, 3}, {0, 4}, {0, 5},
                                      {1, 2}, {1, 4}, {1, 5}, {2, 4}});
}

TEST_CASE("interior point: nothing tight away from the fixed borders")
{
    DissimilarityMatrix d(5);
    for (const auto& t : all_rays(5)) {
        auto r = ray_vector(t);
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j)
                d.set(i, j, d.at(i, j) + r.at(i, j));
    }
    auto x = xdiagram_of(d);
    CHECK(f_ones(x).empty());
    // The bordered row/column of ones always stays equal to itself.
    for (auto [i, j] : g_ones(x))
        CHECK(j == 6);
    for (auto [i, j] : h_ones(x))
        CHECK(i == 0);
}

TEST_CASE("cell/facet dictionary is a bijection")
{
    for (int n : {3, 4, 5, 6, 8}) {
        auto cells = f_cells(n);
        CHECK(cells.size() == facets(n).size());
        std::set<std::string> seen;
        for (auto [k, l] : cells) {
            Facet f = facet_of_cell(n, k, l);
            seen.insert(f.to_string());
            CHECK(cell_of_facet(n, f) == Cell{k, l});
        }
        CHECK(seen.size() == cells.size());
    }
}

TEST_CASE("f entries record facet tightness")
{
    // On a ray: f is 0 exactly on cells of the excluded facets.
    auto x = xdiagram_of(ray_vector(RayTau{5, {1}}));
    std::set<Cell> zeros;
    for (auto [k, l] : f_cells(5))
        if (!x.f(k, l))
            zeros.insert({k, l});
    CHECK(zeros == std::set<Cell>{cell_of_facet(5, Facet{Facet::Kind::Right, 2, 0})});

    std::mt19937_64 rng(7);
    for (int n : {4, 5, 6})
        for (int rep = 0; rep < 8; ++rep) {
            auto d = fixtures::random_cone_point(n, rng);
            auto xd = xdiagram_of(d);
            for (const Facet& f : facets(n)) {
                auto [k, l] = cell_of_facet(n, f);
                CHECK(xd.f(k, l) == (f.eval(d) == 0));
            }
        }
}

TEST_CASE("check_rules flags the broken diagram")
{
    XDiagram x(6);
    for (auto [k, l] : std::vector<Cell>{{3, 6}})
        x.set_f(k, l, true);
    for (auto [i, j] : std::vector<Cell>{{1, 3}, {1, 4}, {3, 7}})
        x.set_g(i, j, true);
    for (auto [i, j] : std::vector<Cell>{{3, 3}, {1, 4}, {2, 4}})
        x.set_h(i, j, true);

    auto viol = check_rules(x);
    std::set<std::string> msgs;
    for (const auto& v : viol)
        msgs.insert(v.description);
    CHECK(msgs.count("f(3,6)=1 but g(3,6) != g(3,7)"));
    CHECK(msgs.count("g(1,3)=g(1,4)=1 but f(1,3)=0"));
    CHECK(msgs.count("h(3,3)=1 but h(2,3)=0"));
    CHECK(msgs.count("cell (1,4) has three sides but g(1,5)=0"));
}

TEST_CASE("check_rules accepts genuine diagrams")
{
    CHECK(check_rules(xdiagram_of(DissimilarityMatrix(5))).empty());
    CHECK(check_rules(xdiagram_of(fixtures::xdiamex())).empty());
    std::mt19937_64 rng(11);
    for (int n : {4, 5, 6, 7})
        for (int rep = 0; rep < 6; ++rep)
            CHECK(check_rules(
                      xdiagram_of(fixtures::random_cone_point(n, rng)))
                      .empty());
    for (const auto& t : all_rays(6))
        CHECK(check_rules(xdiagram_of(ray_vector(t))).empty());
}

TEST_CASE("ray_for_tight_set recovers rays from their own tight sets")
{
    auto x6 = xdiagram_of(ray_vector(RayTau{6, {1, 2}}));
    auto got = ray_for_tight_set(x6);
    REQUIRE(got.has_value());
    CHECK(*got == RayTau{6, {1, 2}});

    for (int n = 3; n <= 7; ++n)
        for (const auto& t : all_rays(n)) {
            auto r = ray_for_tight_set(xdiagram_of(ray_vector(t)));
            REQUIRE(r.has_value());
            CHECK(*r == t);
        }
}

TEST_CASE("ray_for_tight_set on the zero matrix yields the zero vector")
{
    CHECK(!ray_for_tight_set(xdiagram_of(DissimilarityMatrix(5))).has_value());
}

TEST_CASE("ray_for_tight_set: superset contract on cone points")
{
    std::mt19937_64 rng(13);
    for (int n : {4, 5, 6})
        for (int rep = 0; rep < 10; ++rep) {
            auto d = fixtures::random_cone_point(n, rng);
            auto x = xdiagram_of(d);
            auto r = ray_for_tight_set(x);
            if (!r.has_value()) {
                // Tight everywhere that matters only at the apex face of
                // the first column; the zero vector is always consistent.
                continue;
            }
            auto rv = ray_vector(*r);
            // Every facet tight on d stays tight on the produced ray.
            for (const Facet& f : facets(n))
                if (f.eval(d) == 0)
                    CHECK(f.eval(rv) == 0);
            if (d.at(1, 2) == 0)
                CHECK(rv.at(1, 2) == 0);
            if (d.at(n - 1, n) == 0)
                CHECK(rv.at(n - 1, n) == 0);
        }
}

TEST_CASE("render_ascii marks crossings")
{
    auto art = render_ascii(xdiagram_of(ray_vector(RayTau{5, {1}})));
    size_t crosses = std::count(art.begin(), art.end(), 'X');
    size_t dots = std::count(art.begin(), art.end(), '.');
    CHECK(crosses == f_cells(5).size() - 1);
    CHECK(dots == 1);

    auto full = render_ascii(xdiagram_of(fixtures::xdiamex()));
    CHECK(std::count(full.begin(), full.end(), 'X') == 7);
}
