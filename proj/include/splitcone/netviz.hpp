#pragma once

#include "splitcone/metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace splitcone {

// An undirected split-network graph. Edges carry a class label: the Split
// they realize, or the root pendant class (taxon 0's stem, which has no
// split in a rooted system).
struct NetEdge {
    int u = 0;
    int v = 0;
    std::optional<Split> label; // nullopt = root pendant class
};

struct SplitNetworkGraph {
    int n = 0;           // non-root leaf count; taxa are 0..n
    int vertex_count = 0;
    std::vector<NetEdge> edges;
    std::vector<int> leaf_vertex; // taxon -> vertex id, size n+1

    std::vector<std::vector<int>> adjacency() const; // vertex -> edge indices
};

// Algorithm 1: start from the star on {0,...,n} and insert each non-trivial
// split of `order` by duplicating the minimal path between its boundary
// leaves. `order` must be a permutation of sys's non-trivial splits; pass
// empty to use the default (lo,hi)-lexicographic order.
SplitNetworkGraph build_network(const SplitSystem& sys,
                                std::vector<Split> order = {});

// Checks that removing each edge class yields exactly two components whose
// leaf sets realize the labeled split (the root pendant class must isolate
// taxon 0).
struct VerifyResult {
    bool ok = true;
    std::string witness; // offending class when !ok
};
VerifyResult verify_split_graph(const SplitNetworkGraph& g);

// Weighted shortest-path distance between taxa: each edge weighs its
// class's split weight; the root pendant edge weighs 0.
Rat graph_distance(const SplitNetworkGraph& g, const WeightVector& w, int i, int j);

// Standalone SVG: the regular (n+1)-gon with vertex 0 at the top, clockwise
// labels, one chord per non-trivial split, optional weight annotations.
std::string render_polygon(const SplitSystem& sys, const WeightVector* w = nullptr);

// Graphviz DOT document: one color per split class, taxon labels, root
// flagged. Byte-stable for identical input.
std::string render_network(const SplitNetworkGraph& g);

} // namespace splitcone
