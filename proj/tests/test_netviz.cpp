#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "splitcone/netviz.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace splitcone;

namespace {

std::map<std::string, int> class_sizes(const SplitNetworkGraph& g)
{
    std::map<std::string, int> m;
    for (const NetEdge& e : g.edges)
        ++m[e.label ? split_to_string(*e.label) : "root"];
    return m;
}

WeightVector random_weights(const SplitSystem& sys, std::mt19937_64& rng)
{
    WeightVector w = zero_weights(sys);
    for (Rat& v : w.weights) {
        v = Rat(static_cast<long>(1 + rng() % 6), static_cast<long>(1 + rng() % 3));
        v.canonicalize();
    }
    return w;
}

void check_distances(const SplitSystem& sys, std::mt19937_64& rng)
{
    auto g = build_network(sys);
    REQUIRE(verify_split_graph(g).ok);
    auto w = random_weights(sys, rng);
    for (int i = 0; i <= sys.n; ++i)
        for (int j = i + 1; j <= sys.n; ++j)
            CHECK(graph_distance(g, w, i, j) == distance(sys, w, i, j));
}

} // namespace

TEST_CASE("star network: trivial splits only")
{
    auto sys = with_trivials(make_system(5, {}));
    auto g = build_network(sys);
    CHECK(g.vertex_count == 7); // 6 leaves + hub
    CHECK(g.edges.size() == 6);
    CHECK(verify_split_graph(g).ok);
    auto sizes = class_sizes(g);
    CHECK(sizes["root"] == 1);
    for (int i = 1; i <= 5; ++i)
        CHECK(sizes["[" + std::to_string(i) + "," + std::to_string(i) + "]"] == 1);
}

TEST_CASE("compatible system yields a tree")
{
    auto g = build_network(fixtures::treeex());
    CHECK(verify_split_graph(g).ok);
    for (auto& [name, size] : class_sizes(g))
        CHECK(size == 1); // every class a single edge: a tree
    CHECK(g.edges.size() == static_cast<size_t>(g.vertex_count) - 1);
}

TEST_CASE("incompatible system grows parallel classes")
{
    auto g = build_network(fixtures::exnet());
    CHECK(verify_split_graph(g).ok);
    auto sizes = class_sizes(g);
    bool some_parallel = false;
    for (auto& [name, size] : sizes)
        if (size > 1)
            some_parallel = true;
    CHECK(some_parallel);
    // Both crossing pairs among {[1,2],[2,5]} and {[1,3],[3,5]} force
    // duplicated classes.
    CHECK(sizes["[2,5]"] >= 2);
}

TEST_CASE("insertion order changes the drawing but not correctness")
{
    auto sys = fixtures::orderex();
    std::vector<Split> o1 = {{1, 3}, {3, 5}, {2, 4}};
    std::vector<Split> o2 = {{2, 4}, {1, 3}, {3, 5}};
    auto g1 = build_network(sys, o1);
    auto g2 = build_network(sys, o2);
    CHECK(verify_split_graph(g1).ok);
    CHECK(verify_split_graph(g2).ok);
    CHECK(render_network(g1) != render_network(g2));
}

TEST_CASE("build_network validates the order argument")
{
    auto sys = fixtures::treeex();
    CHECK_THROWS(build_network(sys, {{1, 2}}));          // incomplete
    CHECK_THROWS(build_network(sys, {{1, 2}, {3, 4}, {1, 4}, {1, 2}})); // dup
}

TEST_CASE("verify_split_graph catches a mislabeled edge")
{
    auto g = build_network(fixtures::treeex());
    for (NetEdge& e : g.edges)
        if (e.label && *e.label == Split{1, 2}) {
            e.label = Split{3, 4};
            break;
        }
    auto res = verify_split_graph(g);
    CHECK(!res.ok);
    CHECK(!res.witness.empty());
}

TEST_CASE("graph distances equal split-system distances")
{
    std::mt19937_64 rng(29);
    check_distances(fixtures::treeex(), rng);
    check_distances(fixtures::exnet(), rng);
    check_distances(fixtures::orderex(), rng);
    check_distances(fixtures::dualpolygonex(), rng);
    check_distances(complete_system(5), rng);
}

TEST_CASE("random circular systems: build, verify, distances")
{
    std::mt19937_64 rng(31);
    for (int n = 4; n <= 8; ++n)
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<Split> picks;
            for (int lo = 1; lo <= n; ++lo)
                for (int hi = lo; hi <= n; ++hi) {
                    Split s{lo, hi};
                    if (!s.is_trivial() && !(lo == 1 && hi == n) && rng() % 3 == 0)
                        picks.push_back(s);
                }
            auto sys = with_trivials(make_system(n, picks));
            check_distances(sys, rng);
        }
}

TEST_CASE("render_polygon chord counts")
{
    auto count_chords = [](const std::string& svg) {
        size_t c = 0, pos = 0;
        while ((pos = svg.find("class=\"chord\"", pos)) != std::string::npos) {
            ++c;
            pos += 10;
        }
        return c;
    };
    CHECK(count_chords(render_polygon(fixtures::dualpolygonex())) == 4);
    CHECK(count_chords(render_polygon(with_trivials(make_system(4, {})))) == 0);
    CHECK(count_chords(render_polygon(complete_system(5))) == 9);
    // Weighted rendering embeds the weights.
    auto sys = fixtures::dualpolygonex();
    auto w = zero_weights(sys);
    for (size_t k = 0; k < sys.splits.size(); ++k)
        if (sys.splits[k] == Split{2, 5})
            w.weights[k] = Rat(7, 2);
    auto svg = render_polygon(sys, &w);
    CHECK(svg.find("7/2") != std::string::npos);
}

TEST_CASE("render_network structure")
{
    auto g = build_network(fixtures::exnet());
    auto dot = render_network(g);
    CHECK(dot.rfind("graph", 0) == 0);
    CHECK(dot.find("0 (root)") != std::string::npos);
    // One color per class, stable across calls.
    CHECK(dot == render_network(g));
    size_t edge_lines = 0, pos = 0;
    while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
        ++edge_lines;
        pos += 4;
    }
    CHECK(edge_lines == g.edges.size());
}
