#include "readchan/stategraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace readchan {

bool NodeSet::empty() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

int NodeSet::count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

void NodeSet::unite(const NodeSet& o) {
    if (o.n_ != n_) throw param_error("NodeSet::unite: universe mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
}

std::vector<int> NodeSet::members() const {
    std::vector<int> out;
    for (size_t wi = 0; wi < w_.size(); ++wi) {
        uint64_t w = w_[wi];
        while (w) {
            out.push_back(static_cast<int>(wi * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

size_t NodeSet::hash() const {
    size_t h = static_cast<size_t>(n_) * 0x9e3779b97f4a7c15ull;
    for (uint64_t w : w_) h = (h ^ w) * 0x100000001b3ull;
    return h;
}

namespace {

std::string bits_name(uint32_t value, int len) {
    if (len == 0) return "e";  // the empty vector
    std::string s(static_cast<size_t>(len), '0');
    for (int j = 0; j < len; ++j)
        if ((value >> j) & 1) s[static_cast<size_t>(j)] = '1';
    return s;
}

void sort_dedupe(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

// Per-(node,label) successor masks of G; shared by successors(), build_H and
// the subset construction.
std::vector<std::vector<NodeSet>> successor_masks(const LabeledGraph& G, int max_label) {
    const int n = G.num_nodes();
    std::vector<std::vector<NodeSet>> mask(
        static_cast<size_t>(n), std::vector<NodeSet>(static_cast<size_t>(max_label) + 1, NodeSet(n)));
    for (const Edge& e : G.edges) mask[static_cast<size_t>(e.src)][static_cast<size_t>(e.label)].add(e.dst);
    return mask;
}

int max_label_of(const LabeledGraph& G) {
    int m = 0;
    for (const Edge& e : G.edges) m = std::max(m, e.label);
    return m;
}

}  // namespace

LabeledGraph build_G(const ChannelParams& p) {
    if (p.delta > p.ell)
        throw param_error("build_G: delta > ell (no state vector; use the closed forms)");
    if (p.ell > 26) throw resource_error("build_G: ell too large to enumerate generators");
    const int m = p.ell - p.delta;
    const uint32_t node_mask = (m == 32) ? ~0u : ((1u << m) - 1);

    LabeledGraph g;
    g.node_names.reserve(1u << m);
    for (uint32_t v = 0; v < (1u << m); ++v) g.node_names.push_back(bits_name(v, m));

    for (uint32_t x = 0; x < (1u << p.ell); ++x) {
        const int src = static_cast<int>(x & node_mask);
        const int dst = static_cast<int>((x >> p.delta) & node_mask);
        g.edges.push_back({src, std::popcount(x), dst});
    }
    sort_dedupe(g.edges);
    return g;
}

int node_index_from_bits(const std::string& bits) {
    int v = 0;
    for (size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] == '1')
            v |= 1 << j;
        else if (bits[j] != '0')
            throw param_error("node_index_from_bits: not a bit string");
    }
    return v;
}

NodeSet successors(const LabeledGraph& G, const NodeSet& V, int alpha) {
    NodeSet out(G.num_nodes());
    for (const Edge& e : G.edges)
        if (e.label == alpha && V.contains(e.src)) out.add(e.dst);
    return out;
}

std::string interval_name(const IntervalNode& nd) {
    return "V_" + std::to_string(nd.a) + "^" + std::to_string(nd.b);
}

LabeledGraph IntervalGraph::to_labeled() const {
    LabeledGraph g;
    g.node_names.reserve(nodes.size());
    for (const IntervalNode& nd : nodes) g.node_names.push_back(interval_name(nd));
    g.edges = edges;
    sort_dedupe(g.edges);
    return g;
}

IntervalGraph build_H(const ChannelParams& p) {
    if (!(p.delta < p.ell && p.ell <= 2 * p.delta))
        throw param_error("build_H: interval construction requires delta < ell <= 2*delta");
    const int m = p.ell - p.delta;
    LabeledGraph G = build_G(p);
    auto mask = successor_masks(G, p.ell);

    // Weight of G-node i is the popcount of its encoding.
    std::vector<NodeSet> weight_class(static_cast<size_t>(m) + 1, NodeSet(G.num_nodes()));
    for (int i = 0; i < G.num_nodes(); ++i)
        weight_class[static_cast<size_t>(std::popcount(static_cast<uint32_t>(i)))].add(i);

    IntervalGraph H;
    H.p = p;
    for (int a = 0; a <= m; ++a)
        for (int b = a; b <= m; ++b) H.nodes.push_back({a, b});

    std::unordered_map<int, int> node_index;  // (a * (m+1) + b) -> index
    for (size_t i = 0; i < H.nodes.size(); ++i)
        node_index[H.nodes[i].a * (m + 1) + H.nodes[i].b] = static_cast<int>(i);

    for (size_t i = 0; i < H.nodes.size(); ++i) {
        NodeSet V(G.num_nodes());
        for (int w = H.nodes[i].a; w <= H.nodes[i].b; ++w) V.unite(weight_class[static_cast<size_t>(w)]);
        for (int alpha = 0; alpha <= p.ell; ++alpha) {
            NodeSet E(G.num_nodes());
            for (int u : V.members()) E.unite(mask[static_cast<size_t>(u)][static_cast<size_t>(alpha)]);
            if (E.empty()) continue;
            int lo = m + 1, hi = -1;
            for (int u : E.members()) {
                const int w = std::popcount(static_cast<uint32_t>(u));
                lo = std::min(lo, w);
                hi = std::max(hi, w);
            }
            H.edges.push_back({static_cast<int>(i), alpha, node_index.at(lo * (m + 1) + hi)});
        }
    }
    sort_dedupe(H.edges);
    return H;
}

IntervalGraph prune_H(const IntervalGraph& H) {
    const int m = H.p.ell - H.p.delta;
    const int min_size = 2 * H.p.delta - H.p.ell;
    std::vector<int> remap(H.nodes.size(), -1);
    IntervalGraph out;
    out.p = H.p;
    for (size_t i = 0; i < H.nodes.size(); ++i) {
        const IntervalNode& nd = H.nodes[i];
        if (nd.in_lambda(m) || nd.size() >= min_size) {
            remap[i] = static_cast<int>(out.nodes.size());
            out.nodes.push_back(nd);
        }
    }
    for (const Edge& e : H.edges) {
        const int s = remap[static_cast<size_t>(e.src)];
        const int t = remap[static_cast<size_t>(e.dst)];
        if (s >= 0 && t >= 0) out.edges.push_back({s, e.label, t});
    }
    sort_dedupe(out.edges);
    return out;
}

NodeOrdering node_ordering(const IntervalGraph& Hstar) {
    NodeOrdering ord;
    ord.nodes = Hstar.nodes;
    std::sort(ord.nodes.begin(), ord.nodes.end(), [](const IntervalNode& x, const IntervalNode& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x.a < y.a;
    });
    return ord;
}

int NodeOrdering::index_of(const IntervalNode& nd) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == nd) return static_cast<int>(i);
    throw param_error("NodeOrdering: node not present");
}

IntMatrix adjacency_from_graph(const IntervalGraph& Hstar, const NodeOrdering& ord) {
    IntMatrix A(static_cast<int>(ord.nodes.size()));
    std::vector<int> remap(Hstar.nodes.size());
    for (size_t i = 0; i < Hstar.nodes.size(); ++i)
        remap[i] = ord.index_of(Hstar.nodes[i]);
    for (const Edge& e : Hstar.edges)
        A.at(remap[static_cast<size_t>(e.src)], remap[static_cast<size_t>(e.dst)]) += 1;
    return A;
}

IntMatrix adjacency_closed_form(const ChannelParams& p) {
    if (!(p.delta < p.ell && p.ell < 2 * p.delta))
        throw param_error("adjacency_closed_form: requires delta < ell < 2*delta");
    const int m = p.ell - p.delta;
    const int gap = 2 * p.delta - p.ell;

    IntervalGraph skeleton;
    skeleton.p = p;
    for (int a = 0; a <= m; ++a)
        for (int b = a; b <= m; ++b) {
            IntervalNode nd{a, b};
            if (nd.in_lambda(m) || nd.size() >= gap) skeleton.nodes.push_back(nd);
        }
    NodeOrdering ord = node_ordering(skeleton);

    const int mm = static_cast<int>(ord.nodes.size());
    IntMatrix A(mm);
    for (int i = 1; i <= mm; ++i) {
        A.at(i - 1, 0) = std::max(0, 3 * p.delta - 2 * p.ell + ord.d(i) + 1);
        for (int j = 2; j <= mm; ++j) {
            const bool lam = ord.t(j).in_lambda(m);
            if (lam && ord.d(j) <= gap + ord.d(i))
                A.at(i - 1, j - 1) = 1;
            else if (!lam && ord.d(j) == gap + ord.d(i))
                A.at(i - 1, j - 1) = 1;
        }
    }
    return A;
}

NodeSet all_nodes(const LabeledGraph& G) {
    NodeSet s(G.num_nodes());
    for (int i = 0; i < G.num_nodes(); ++i) s.add(i);
    return s;
}

DeterminizedGraph subset_determinize(const LabeledGraph& G, const NodeSet& initial,
                                     uint64_t subset_budget) {
    if (initial.universe_size() != G.num_nodes())
        throw param_error("subset_determinize: initial set universe mismatch");
    if (initial.empty()) throw param_error("subset_determinize: empty initial set");
    const int max_label = max_label_of(G);
    auto mask = successor_masks(G, max_label);

    struct SetHash {
        size_t operator()(const NodeSet& s) const { return s.hash(); }
    };
    std::unordered_map<NodeSet, int, SetHash> index;
    DeterminizedGraph out;
    out.subsets.push_back(initial);
    index.emplace(initial, 0);
    std::deque<int> queue{0};

    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        const NodeSet S = out.subsets[static_cast<size_t>(i)];
        for (int alpha = 0; alpha <= max_label; ++alpha) {
            NodeSet T(G.num_nodes());
            for (int u : S.members()) T.unite(mask[static_cast<size_t>(u)][static_cast<size_t>(alpha)]);
            if (T.empty()) continue;
            auto [it, inserted] = index.emplace(T, static_cast<int>(out.subsets.size()));
            if (inserted) {
                if (out.subsets.size() >= subset_budget)
                    throw resource_error("subset_determinize: reachable subsets exceed budget");
                out.subsets.push_back(T);
                queue.push_back(it->second);
            }
            out.graph.edges.push_back({i, alpha, it->second});
        }
    }
    out.graph.node_names.reserve(out.subsets.size());
    for (size_t i = 0; i < out.subsets.size(); ++i)
        out.graph.node_names.push_back("S" + std::to_string(i));
    sort_dedupe(out.graph.edges);
    return out;
}

bool is_deterministic(const LabeledGraph& g) {
    std::vector<Edge> es = g.edges;
    std::sort(es.begin(), es.end());
    for (size_t i = 1; i < es.size(); ++i)
        if (es[i].src == es[i - 1].src && es[i].label == es[i - 1].label) return false;
    return true;
}

unsigned long long path_language_count(const LabeledGraph& D, int start, int k) {
    if (!is_deterministic(D)) throw param_error("path_language_count: graph is not deterministic");
    if (start < 0 || start >= D.num_nodes()) throw param_error("path_language_count: bad start");
    using u128 = unsigned __int128;
    std::vector<u128> cur(static_cast<size_t>(D.num_nodes()), 0);
    cur[static_cast<size_t>(start)] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<u128> nxt(cur.size(), 0);
        for (const Edge& e : D.edges) nxt[static_cast<size_t>(e.dst)] += cur[static_cast<size_t>(e.src)];
        cur.swap(nxt);
    }
    u128 total = 0;
    for (u128 c : cur) total += c;
    if (total > static_cast<u128>(~0ull))
        throw numeric_error("path_language_count: count exceeds 64 bits");
    return static_cast<unsigned long long>(total);
}

IntMatrix adjacency_matrix(const LabeledGraph& g) {
    IntMatrix A(g.num_nodes());
    for (const Edge& e : g.edges) A.at(e.src, e.dst) += 1;
    return A;
}

std::string export_dot(const LabeledGraph& g) {
    std::string s = "digraph readchannel {\n  rankdir=LR;\n";
    for (int i = 0; i < g.num_nodes(); ++i)
        s += "  n" + std::to_string(i) + " [label=\"" + g.node_names[static_cast<size_t>(i)] + "\"];\n";
    for (const Edge& e : g.edges)
        s += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) + " [label=\"" +
             std::to_string(e.label) + "\"];\n";
    s += "}\n";
    return s;
}

std::string graph_to_json(const LabeledGraph& g) {
    std::string s = "{\"nodes\":[";
    for (int i = 0; i < g.num_nodes(); ++i) {
        if (i) s.push_back(',');
        s += "\"" + g.node_names[static_cast<size_t>(i)] + "\"";
    }
    s += "],\"edges\":[";
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (i) s.push_back(',');
        s += "{\"s\":" + std::to_string(g.edges[i].src) + ",\"l\":" + std::to_string(g.edges[i].label) +
             ",\"t\":" + std::to_string(g.edges[i].dst) + "}";
    }
    s += "]}";
    return s;
}

}  // namespace readchan
