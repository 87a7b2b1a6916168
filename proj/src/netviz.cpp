#include "splitcone/netviz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace splitcone {

std::vector<std::vector<int>> SplitNetworkGraph::adjacency() const
{
    std::vector<std::vector<int>> adj(vertex_count);
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].u].push_back(static_cast<int>(e));
        adj[edges[e].v].push_back(static_cast<int>(e));
    }
    return adj;
}

namespace {

int other_end(const NetEdge& e, int v)
{
    return e.u == v ? e.v : e.u;
}

// Inserts one non-trivial split by path duplication (Algorithm 1 steps 2-4).
void insert_split(SplitNetworkGraph& g, const Split& s)
{
    const auto adj = g.adjacency();
    const int src = g.leaf_vertex[s.lo];
    const int dst = g.leaf_vertex[s.hi];

    // Shortest path src -> dst; ties broken toward the lexicographically
    // smallest vertex sequence.
    std::vector<int> dist(g.vertex_count, -1);
    std::queue<int> q;
    dist[dst] = 0;
    q.push(dst);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : adj[v]) {
            int w = other_end(g.edges[e], v);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    if (dist[src] < 0)
        throw std::logic_error("insert_split: graph is disconnected");
    std::vector<int> path{src};
    for (int cur = src; cur != dst;) {
        int best = -1;
        for (int e : adj[cur]) {
            int w = other_end(g.edges[e], cur);
            if (dist[w] == dist[cur] - 1 && (best < 0 || w < best))
                best = w;
        }
        path.push_back(best);
        cur = best;
    }
    std::vector<char> is_internal(g.vertex_count, 0);
    for (size_t i = 1; i + 1 < path.size(); ++i)
        is_internal[path[i]] = 1;

    // Components of the graph minus the internal path vertices.
    std::vector<int> comp(g.vertex_count, -1);
    int ncomp = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (is_internal[v] || comp[v] >= 0)
            continue;
        comp[v] = ncomp;
        std::queue<int> bfs;
        bfs.push(v);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int e : adj[u]) {
                int w = other_end(g.edges[e], u);
                if (!is_internal[w] && comp[w] < 0) {
                    comp[w] = ncomp;
                    bfs.push(w);
                }
            }
        }
        ++ncomp;
    }
    // A component moves to the duplicated side iff it contains a leaf of the
    // far side of the split.
    std::vector<char> has_a(ncomp, 0), has_b(ncomp, 0);
    for (int x = 0; x <= g.n; ++x) {
        int v = g.leaf_vertex[x];
        if (is_internal[v])
            throw std::logic_error("insert_split: leaf on the interior of a path");
        (s.contains(x) ? has_a : has_b)[comp[v]] = 1;
    }
    for (int c = 0; c < ncomp; ++c)
        if (has_a[c] && has_b[c])
            throw std::logic_error(
                "insert_split: a side component contains leaves of both sides");

    // Duplicate the internal path vertices.
    std::vector<int> copy_of(g.vertex_count, -1);
    for (size_t i = 1; i + 1 < path.size(); ++i)
        copy_of[path[i]] = g.vertex_count++;

    const size_t old_edges = g.edges.size();
    for (size_t e = 0; e < old_edges; ++e) {
        NetEdge& ed = g.edges[e];
        const bool iu = is_internal[ed.u], iv = is_internal[ed.v];
        if (iu && iv) {
            // A rail of the ladder: keep the original, add the copy.
            g.edges.push_back(NetEdge{copy_of[ed.u], copy_of[ed.v], ed.label});
        } else if (iu && has_b[comp[ed.v]]) {
            ed.u = copy_of[ed.u];
        } else if (iv && has_b[comp[ed.u]]) {
            ed.v = copy_of[ed.v];
        }
    }
    // The rungs realize the new split.
    for (size_t i = 1; i + 1 < path.size(); ++i)
        g.edges.push_back(NetEdge{path[i], copy_of[path[i]], s});
}

std::string class_name(const std::optional<Split>& label)
{
    return label ? split_to_string(*label) : std::string("root");
}

} // namespace

SplitNetworkGraph build_network(const SplitSystem& sys, std::vector<Split> order)
{
    if (!sys.has_all_trivials())
        throw std::invalid_argument("build_network: system must contain all trivial splits");
    std::vector<Split> nontrivial;
    for (const Split& s : sys.splits)
        if (!s.is_trivial())
            nontrivial.push_back(s);
    if (order.empty()) {
        // Insert wider intervals first: in a pairwise-compatible system every
        // insertion then splits a single vertex and the result is a tree.
        order = nontrivial;
        std::stable_sort(order.begin(), order.end(),
                         [](const Split& a, const Split& b) {
                             return a.hi - a.lo > b.hi - b.lo;
                         });
    } else {
        std::vector<Split> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (!(sorted == nontrivial))
            throw std::invalid_argument(
                "build_network: order must be a permutation of the non-trivial splits");
    }

    SplitNetworkGraph g;
    g.n = sys.n;
    g.vertex_count = sys.n + 2; // leaves 0..n plus the hub
    const int hub = sys.n + 1;
    g.leaf_vertex.resize(sys.n + 1);
    for (int x = 0; x <= sys.n; ++x) {
        g.leaf_vertex[x] = x;
        if (x == 0)
            g.edges.push_back(NetEdge{0, hub, std::nullopt});
        else
            g.edges.push_back(NetEdge{x, hub, Split{x, x}});
    }
    for (const Split& s : order)
        insert_split(g, s);
    return g;
}

VerifyResult verify_split_graph(const SplitNetworkGraph& g)
{
    VerifyResult res;
    // Group edges into classes by label.
    std::map<std::string, std::vector<size_t>> classes;
    std::map<std::string, std::optional<Split>> labels;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        std::string key = class_name(g.edges[e].label);
        classes[key].push_back(e);
        labels[key] = g.edges[e].label;
    }
    for (const auto& [key, edge_set] : classes) {
        // Components after deleting this class.
        std::vector<int> comp(g.vertex_count, -1);
        std::vector<char> removed(g.edges.size(), 0);
        for (size_t e : edge_set)
            removed[e] = 1;
        int ncomp = 0;
        for (int v = 0; v < g.vertex_count; ++v) {
            if (comp[v] >= 0)
                continue;
            comp[v] = ncomp;
            std::queue<int> q;
            q.push(v);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (size_t e = 0; e < g.edges.size(); ++e) {
                    if (removed[e])
                        continue;
                    int w = -1;
                    if (g.edges[e].u == u)
                        w = g.edges[e].v;
                    else if (g.edges[e].v == u)
                        w = g.edges[e].u;
                    if (w >= 0 && comp[w] < 0) {
                        comp[w] = ncomp;
                        q.push(w);
                    }
                }
            }
            ++ncomp;
        }
        if (ncomp != 2) {
            res.ok = false;
            res.witness = key + ": removal yields " + std::to_string(ncomp) +
                          " components";
            return res;
        }
        // The two components must realize the labeled split.
        std::vector<int> side0, side1;
        for (int x = 0; x <= g.n; ++x)
            (comp[g.leaf_vertex[x]] == 0 ? side0 : side1).push_back(x);
        std::vector<int> expect_a;
        if (labels[key])
            for (int x = labels[key]->lo; x <= labels[key]->hi; ++x)
                expect_a.push_back(x);
        else
            expect_a.push_back(0);
        if (!(side0 == expect_a || side1 == expect_a)) {
            res.ok = false;
            res.witness = key + ": components do not realize the split";
            return res;
        }
    }
    return res;
}

Rat graph_distance(const SplitNetworkGraph& g, const WeightVector& w, int i, int j)
{
    const int src = g.leaf_vertex[i], dst = g.leaf_vertex[j];
    std::vector<std::optional<Rat>> dist(g.vertex_count);
    std::vector<char> done(g.vertex_count, 0);
    const auto adj = g.adjacency();
    dist[src] = Rat(0);
    for (;;) {
        int best = -1;
        for (int v = 0; v < g.vertex_count; ++v)
            if (!done[v] && dist[v] && (best < 0 || *dist[v] < *dist[best]))
                best = v;
        if (best < 0)
            break;
        done[best] = 1;
        for (int e : adj[best]) {
            int v = other_end(g.edges[e], best);
            Rat weight = g.edges[e].label ? w.weight_of(*g.edges[e].label) : Rat(0);
            Rat cand = *dist[best] + weight;
            if (!dist[v] || cand < *dist[v])
                dist[v] = cand;
        }
    }
    if (!dist[dst])
        throw std::logic_error("graph_distance: disconnected graph");
    return *dist[dst];
}

namespace {

const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                          "#66a61e", "#e6ab02", "#a6761d", "#666666",
                          "#1f78b4", "#b2182b", "#4daf4a", "#984ea3"};

std::string fmt2(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string render_polygon(const SplitSystem& sys, const WeightVector* w)
{
    const int m = sys.n + 1; // polygon vertex count
    const double cx = 200, cy = 200, r = 150, pi = 3.14159265358979323846;
    auto px = [&](int k) { return cx + r * std::sin(2 * pi * k / m); };
    auto py = [&](int k) { return cy - r * std::cos(2 * pi * k / m); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
          "viewBox=\"0 0 400 400\">\n";
    os << "  <polygon points=\"";
    for (int k = 0; k < m; ++k)
        os << (k ? " " : "") << fmt2(px(k)) << "," << fmt2(py(k));
    os << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const Split& s : sys.splits) {
        if (s.is_trivial())
            continue;
        int a = s.lo, b = (s.hi + 1) % m;
        os << "  <line class=\"chord\" x1=\"" << fmt2(px(a)) << "\" y1=\""
           << fmt2(py(a)) << "\" x2=\"" << fmt2(px(b)) << "\" y2=\""
           << fmt2(py(b)) << "\" stroke=\"#d95f02\"/>\n";
        if (w) {
            double mx = (px(a) + px(b)) / 2, my = (py(a) + py(b)) / 2;
            os << "  <text x=\"" << fmt2(mx) << "\" y=\"" << fmt2(my)
               << "\" font-size=\"10\">" << rat_to_string(w->weight_of(s))
               << "</text>\n";
        }
    }
    for (int k = 0; k < m; ++k) {
        double lx = cx + (r + 15) * std::sin(2 * pi * k / m);
        double ly = cy - (r + 15) * std::cos(2 * pi * k / m);
        os << "  <text x=\"" << fmt2(lx) << "\" y=\"" << fmt2(ly)
           << "\" font-size=\"12\" text-anchor=\"middle\">" << k << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_network(const SplitNetworkGraph& g)
{
    // One color per class, assigned in sorted class-name order.
    std::map<std::string, size_t> color_of;
    for (const NetEdge& e : g.edges)
        color_of.emplace(class_name(e.label), 0);
    size_t idx = 0;
    for (auto& [key, color] : color_of)
        color = idx++ % (sizeof kPalette / sizeof kPalette[0]);

    std::vector<int> taxon_of(g.vertex_count, -1);
    for (int x = 0; x <= g.n; ++x)
        taxon_of[g.leaf_vertex[x]] = x;

    std::ostringstream os;
    os << "graph splitnetwork {\n";
    os << "  node [shape=point];\n";
    for (int v = 0; v < g.vertex_count; ++v) {
        if (taxon_of[v] == 0)
            os << "  v" << v << " [shape=box, label=\"0 (root)\"];\n";
        else if (taxon_of[v] > 0)
            os << "  v" << v << " [shape=circle, label=\"" << taxon_of[v]
               << "\"];\n";
    }
    for (const NetEdge& e : g.edges) {
        std::string key = class_name(e.label);
        os << "  v" << e.u << " -- v" << e.v << " [color=\""
           << kPalette[color_of[key]] << "\", label=\"" << key << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace splitcone
