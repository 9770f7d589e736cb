#include "hofer/regiongraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hofer {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // returns false when the two were already connected
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

Color edge_color(const RegionGraph& g, int e) {
    return g.vertices[g.edges[e].first].color;
}

Side vertex_side(const RegionGraph& g, int v) { return g.vertices[v].side; }

int endpoint_on_side(const RegionGraph& g, int e, Side s) {
    const auto [a, b] = g.edges[e];
    if (vertex_side(g, a) == s) return a;
    if (vertex_side(g, b) == s) return b;
    return -1;
}

}  // namespace

int RegionGraph::find(const RegionId& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

int RegionGraph::root_of(Color c) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].is_root && vertices[i].color == c) return static_cast<int>(i);
    return -1;
}

bool GraphCheckReport::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

RegionGraph build_graph(const WeightedMeander& wm) {
    const auto rep = validate_weights(wm);
    if (!rep.valid) throw std::invalid_argument("build_graph: " + rep.message);

    RegionGraph g;
    g.provenance = canonical_key(wm.meander);
    g.vertices.reserve(wm.regions.regions.size());
    for (std::size_t i = 0; i < wm.regions.regions.size(); ++i) {
        const Region& r = wm.regions.regions[i];
        g.vertices.push_back(GraphVertex{r.id, r.color, r.side, wm.weights[i], r.is_root});
    }
    g.edges.reserve(wm.regions.edges.size());
    for (const auto& e : wm.regions.edges) g.edges.emplace_back(e.north_region, e.south_region);
    return g;
}

RootedTree tree_view(const RegionGraph& g, Color color) {
    RootedTree t;
    t.color = color;
    t.root = g.root_of(color);
    const std::size_t n = g.vertices.size();
    t.parent.assign(n, -1);
    t.depth.assign(n, -1);
    t.children.assign(n, {});
    if (t.root < 0) return t;

    // adjacency restricted to this color, neighbor lists in edge order
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge index, other)
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [a, b] = g.edges[e];
        if (g.vertices[a].color != color || g.vertices[b].color != color) continue;
        adj[a].emplace_back(static_cast<int>(e), b);
        adj[b].emplace_back(static_cast<int>(e), a);
        ++t.edge_count;
    }
    std::vector<int> queue{t.root};
    t.depth[t.root] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int v = queue[h];
        for (const auto& [e, u] : adj[v]) {
            if (t.depth[u] >= 0) continue;
            t.depth[u] = t.depth[v] + 1;
            t.parent[u] = v;
            t.children[v].push_back(u);
            t.tree_depth = std::max(t.tree_depth, t.depth[u]);
            queue.push_back(u);
        }
    }
    return t;
}

GraphCheckReport check_graph_invariants(const RegionGraph& g) {
    GraphCheckReport rep;
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
        rep.items.push_back(GraphCheckItem{name, pass, detail});
    };
    const int nv = static_cast<int>(g.vertices.size());
    const int ne = static_cast<int>(g.edges.size());

    add("vertex-count", nv == ne + 2,
        std::to_string(nv) + " vertices vs " + std::to_string(ne) + " edges");

    bool same_color = true;
    for (const auto& [a, b] : g.edges)
        if (g.vertices[a].color != g.vertices[b].color) same_color = false;
    add("edges-join-same-color", same_color);

    bool alternate = true;
    for (int e = 0; same_color && e + 1 < ne; ++e)
        if (edge_color(g, e) == edge_color(g, e + 1)) alternate = false;
    add("edge-colors-alternate", same_color && alternate);

    bool forest = true;
    UnionFind uf(g.vertices.size());
    for (const auto& [a, b] : g.edges) {
        if (g.vertices[a].color != g.vertices[b].color) continue;
        if (!uf.unite(a, b)) forest = false;
    }
    add("forest", forest, forest ? "" : "monochrome cycle found");

    bool connected = true;
    for (Color c : {Color::Black, Color::White}) {
        int comp = -1;
        for (int v = 0; v < nv; ++v) {
            if (g.vertices[v].color != c) continue;
            const int root = uf.find(v);
            if (comp < 0) comp = root;
            if (root != comp) connected = false;
        }
    }
    add("color-classes-connected", connected);

    int roots[2] = {0, 0};
    for (const auto& v : g.vertices)
        if (v.is_root) ++roots[static_cast<int>(v.color)];
    add("roots", roots[0] == 1 && roots[1] == 1,
        std::to_string(roots[0]) + " black / " + std::to_string(roots[1]) + " white roots");

    int count[2] = {0, 0};
    for (const auto& v : g.vertices) ++count[static_cast<int>(v.color)];
    add("color-counts-balanced", std::abs(count[0] - count[1]) <= 1,
        std::to_string(count[0]) + " black vs " + std::to_string(count[1]) + " white");

    const Rational half = make_rational(1, 2);
    Rational sums[2][2];
    for (const auto& v : g.vertices)
        sums[static_cast<int>(v.side)][static_cast<int>(v.color)] += v.weight;
    const bool weights_ok = sums[0][0] + sums[0][1] == half && sums[1][0] + sums[1][1] == half &&
                            sums[0][0] + sums[1][0] == half && sums[0][1] + sums[1][1] == half;
    add("weight-half-sums", weights_ok);

    bool depth_ok = true;
    if (roots[0] == 1 && roots[1] == 1 && forest) {
        const int n_crossings = ne - 1;
        for (Color c : {Color::Black, Color::White}) {
            const auto t = tree_view(g, c);
            // depth(T) <= #E(T) <= n/2 + 1, kept exact as 2*#E <= n + 2
            if (t.tree_depth > t.edge_count || 2 * t.edge_count > n_crossings + 2)
                depth_ok = false;
        }
    }
    add("depth-bound", depth_ok);
    return rep;
}

RegionGraph delete_leaf_surgery(const RegionGraph& g, const RegionId& leaf_id,
                                const RegionId& target_id) {
    const int leaf = g.find(leaf_id);
    const int target = g.find(target_id);
    if (leaf < 0) throw std::invalid_argument("surgery: unknown leaf " + leaf_id.str());
    if (target < 0) throw std::invalid_argument("surgery: unknown target " + target_id.str());
    if (g.vertices[leaf].is_root) throw std::invalid_argument("surgery: leaf is a root");
    if (g.vertices[target].color != g.vertices[leaf].color)
        throw std::invalid_argument("surgery: target color differs from leaf color");

    int leaf_edge = -1;
    int incident = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].first == leaf || g.edges[e].second == leaf) {
            leaf_edge = static_cast<int>(e);
            ++incident;
        }
    }
    if (incident != 1) throw std::invalid_argument("surgery: leaf vertex is not a tree leaf");

    const auto tree = tree_view(g, g.vertices[leaf].color);
    if (tree.depth[leaf] < 2)
        throw std::invalid_argument("surgery: leaf depth " + std::to_string(tree.depth[leaf]) +
                                    " is below 2");
    const int via = g.edges[leaf_edge].first == leaf ? g.edges[leaf_edge].second
                                                     : g.edges[leaf_edge].first;
    bool target_ok = false;
    for (const auto& [a, b] : g.edges)
        if ((a == via && b == target) || (b == via && a == target)) target_ok = true;
    if (!target_ok || target == leaf)
        throw std::invalid_argument("surgery: target is not at graph distance 2 from leaf");

    const int p = leaf_edge;
    if (p - 1 < 0 || p + 1 >= static_cast<int>(g.edges.size()))
        throw std::invalid_argument("surgery: leaf edge has no flanking edges");

    const Side sigma = g.vertices[leaf].side;
    const int hood = endpoint_on_side(g, p - 1, sigma);
    const int hood2 = endpoint_on_side(g, p + 1, sigma);
    const int merged_a = endpoint_on_side(g, p - 1, flip(sigma));
    const int merged_b = endpoint_on_side(g, p + 1, flip(sigma));
    if (hood < 0 || hood2 < 0 || merged_a < 0 || merged_b < 0 || hood != hood2)
        throw std::invalid_argument("surgery: flanking edges do not share the leaf's hood");
    if (merged_a == merged_b)
        throw std::invalid_argument("surgery: flanking opposite-side faces coincide");
    const int keep = g.vertices[merged_a].id < g.vertices[merged_b].id ? merged_a : merged_b;
    const int drop = keep == merged_a ? merged_b : merged_a;

    // vertex remap: leaf removed, drop folded into keep
    std::vector<int> remap(g.vertices.size(), -1);
    std::vector<GraphVertex> verts;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (static_cast<int>(v) == leaf || static_cast<int>(v) == drop) continue;
        remap[v] = static_cast<int>(verts.size());
        verts.push_back(g.vertices[v]);
    }
    remap[drop] = remap[keep];
    verts[remap[keep]].weight = g.vertices[merged_a].weight + g.vertices[merged_b].weight;
    verts[remap[target]].weight += g.vertices[leaf].weight;

    // edges: drop the leaf edge, fold the two flanking edges into one
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (static_cast<int>(e) == p || static_cast<int>(e) == p + 1) continue;
        auto [a, b] = g.edges[e];
        edges.emplace_back(remap[a], remap[b]);
    }

    // recanonicalize non-root ids from the surviving edge order, then sort
    std::vector<int> leftmost(verts.size(), -1);
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (int v : {edges[e].first, edges[e].second})
            if (leftmost[v] < 0) leftmost[v] = static_cast<int>(e);
    for (std::size_t v = 0; v < verts.size(); ++v) {
        if (verts[v].is_root) {
            verts[v].id = RegionId{true, verts[v].side, -1};
        } else {
            if (leftmost[v] < 0) throw std::logic_error("surgery: isolated non-root vertex");
            verts[v].id = RegionId{false, verts[v].side, leftmost[v]};
        }
    }
    std::vector<int> perm(verts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return verts[a].id < verts[b].id; });
    std::vector<int> where(verts.size());
    for (std::size_t i = 0; i < perm.size(); ++i) where[perm[i]] = static_cast<int>(i);

    RegionGraph out;
    out.provenance = g.provenance + ";surgery(" + leaf_id.str() + "->" + target_id.str() + ")";
    out.vertices.reserve(verts.size());
    for (int old : perm) out.vertices.push_back(verts[old]);
    out.edges.reserve(edges.size());
    for (auto [a, b] : edges) {
        int na = where[a], nb = where[b];
        if (out.vertices[na].side != Side::North) std::swap(na, nb);
        out.edges.emplace_back(na, nb);
    }
    return out;
}

std::string encode(const RegionGraph& g) {
    std::ostringstream os;
    os << "RG|V:";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        if (i) os << ",";
        os << v.id.str() << ":" << color_char(v.color) << side_char(v.side) << ":"
           << to_string(v.weight) << (v.is_root ? ":r" : "");
    }
    os << "|E:";
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (e) os << ",";
        os << e << "(" << g.vertices[g.edges[e].first].id.str() << "-"
           << g.vertices[g.edges[e].second].id.str() << ")";
    }
    return os.str();
}

std::string to_dot(const RegionGraph& g) {
    std::ostringstream os;
    os << "graph region_graph {\n";
    os << "  node [shape=circle];\n";
    for (const auto& v : g.vertices) {
        os << "  \"" << v.id.str() << "\" [label=\"" << v.id.str() << "\\n"
           << color_char(v.color) << "/" << side_char(v.side) << " w=" << to_string(v.weight)
           << "\"" << (v.color == Color::Black ? ", style=filled, fillcolor=gray80" : "")
           << (v.is_root ? ", penwidth=2" : "") << "];\n";
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        os << "  \"" << g.vertices[g.edges[e].first].id.str() << "\" -- \""
           << g.vertices[g.edges[e].second].id.str() << "\" [label=\"" << e << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hofer
