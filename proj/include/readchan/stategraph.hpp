#ifndef READCHAN_STATEGRAPH_HPP
#define READCHAN_STATEGRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "readchan/core.hpp"

namespace readchan {

struct Edge {
    int src;
    int label;
    int dst;
    auto operator<=>(const Edge&) const = default;
};

// Directed multigraph with integer edge labels. Parallel edges between the
// same node pair carry distinct labels; identical (src,label,dst) triples are
// stored once. Edges are kept sorted for reproducible export.
struct LabeledGraph {
    std::vector<std::string> node_names;
    std::vector<Edge> edges;

    int num_nodes() const { return static_cast<int>(node_names.size()); }
};

// Set of node indices, packed; used for the nondeterministic successor
// relation and the subset construction.
class NodeSet {
  public:
    NodeSet() : n_(0) {}
    explicit NodeSet(int n) : n_(n), w_(static_cast<size_t>((n + 63) / 64), 0) {}

    int universe_size() const { return n_; }
    void add(int i) { w_[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
    bool contains(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
    bool empty() const;
    int count() const;
    void unite(const NodeSet& o);
    std::vector<int> members() const;

    bool operator==(const NodeSet&) const = default;
    size_t hash() const;

  private:
    int n_;
    std::vector<uint64_t> w_;
};

// Nondeterministic state diagram of the read channel: nodes are the
// length-(ell-delta) binary vectors, and every x in {0,1}^ell contributes the
// edge x[1;ell-delta] --w(x)--> x[delta+1;ell-delta]. Node index i encodes
// the vector whose j-th symbol (1-based) is bit j-1 of i.
LabeledGraph build_G(const ChannelParams& p);

int node_index_from_bits(const std::string& bits);

// E(V, alpha): all nodes with an incoming alpha-labeled edge from V.
NodeSet successors(const LabeledGraph& G, const NodeSet& V, int alpha);

// Interval node V_a^b = { s : a <= w(s) <= b }, 0 <= a <= b <= ell-delta.
struct IntervalNode {
    int a = 0;
    int b = 0;
    int size() const { return b - a; }
    bool in_lambda(int ell_minus_delta) const { return a == 0 || b == ell_minus_delta; }
    auto operator<=>(const IntervalNode&) const = default;
};

std::string interval_name(const IntervalNode& nd);

// Interval determinization of G and its pruning. Valid for delta < ell <= 2*delta.
struct IntervalGraph {
    ChannelParams p;
    std::vector<IntervalNode> nodes;
    std::vector<Edge> edges;

    LabeledGraph to_labeled() const;
};

// Nodes are all V_a^b; the edge V_{a1}^{b1} --alpha--> V_{a2}^{b2} exists when
// E(V_{a1}^{b1}, alpha) is contained in V_{a2}^{b2} with both extremes a2, b2
// attained, which pins (a2,b2) to the min/max successor weight. The result is
// deterministic by construction.
IntervalGraph build_H(const ChannelParams& p);

// Drops the nodes outside Lambda whose size is below 2*delta-ell (exactly the
// in-degree-zero ones); node count becomes 1 + 2(ell-delta) + C(2ell-3delta, 2).
IntervalGraph prune_H(const IntervalGraph& H);

// Matrix ordering of the pruned graph: node size descending, ties by
// ascending a. The t(i)/d(i) accessors use 1-based matrix indices.
struct NodeOrdering {
    std::vector<IntervalNode> nodes;

    int index_of(const IntervalNode& nd) const;
    int d(int i_1based) const { return nodes[static_cast<size_t>(i_1based - 1)].size(); }
    IntervalNode t(int i_1based) const { return nodes[static_cast<size_t>(i_1based - 1)]; }
};

NodeOrdering node_ordering(const IntervalGraph& Hstar);

// Entry (i,j) counts the parallel labeled edges t(i) -> t(j).
IntMatrix adjacency_from_graph(const IntervalGraph& Hstar, const NodeOrdering& ord);

// Same matrix filled directly from the edge-count case analysis; requires
// delta < ell < 2*delta.
IntMatrix adjacency_closed_form(const ChannelParams& p);

// Generic power-set determinization from an initial node set; covers the
// regimes the interval construction does not. Nodes are named by discovery
// order; subsets[i] is the subset behind node i and start is its index.
struct DeterminizedGraph {
    LabeledGraph graph;
    std::vector<NodeSet> subsets;
    int start = 0;
};

DeterminizedGraph subset_determinize(const LabeledGraph& G, const NodeSet& initial,
                                     uint64_t subset_budget = 1ull << 16);

NodeSet all_nodes(const LabeledGraph& G);

// Number of label strings of length k realizable from `start` in a
// deterministic graph (= number of length-k paths).
unsigned long long path_language_count(const LabeledGraph& D, int start, int k);

bool is_deterministic(const LabeledGraph& g);

// Adjacency counts of an arbitrary labeled graph (parallel labels add up).
IntMatrix adjacency_matrix(const LabeledGraph& g);

// Graphviz DOT with stable node and edge ordering.
std::string export_dot(const LabeledGraph& g);
std::string graph_to_json(const LabeledGraph& g);

}  // namespace readchan

#endif
