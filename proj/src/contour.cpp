#include "hofer/contour.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hofer {

namespace {

constexpr double kPi = std::numbers::pi;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Exact superlevel area of a linear triangle: S * (f2-l)^2/((f2-f0)(f2-f1))
// above the middle value, S minus the mirrored term below it.
double superlevel_area(double S, double f0, double f1, double f2, double level) {
    if (level <= f0) return S;
    if (level >= f2) return 0.0;
    if (level >= f1) {
        const double d = f2 - level;
        return S * d * d / ((f2 - f0) * (f2 - f1));
    }
    const double d = level - f0;
    return S - S * d * d / ((f1 - f0) * (f2 - f0));
}

}  // namespace

double ContourEdge::measure(double level) const {
    double m = base;
    if (up) {
        for (const auto& e : entries)
            if (e.level >= level) m += e.mass;
        for (const auto& p : pieces)
            if (p.lo <= level && level <= p.hi) m += (p.c2 * level + p.c1) * level + p.c0;
    } else {
        for (const auto& e : entries)
            if (e.level <= level) m += e.mass;
        for (const auto& p : pieces)
            if (p.lo <= level && level <= p.hi) m += (p.c2 * level + p.c1) * level + p.c0;
    }
    return m;
}

double ContourEdge::measure_at_child() const { return measure(child_level); }
double ContourEdge::measure_at_parent() const { return measure(parent_level); }

double ContourTree::total_mass() const {
    double m = root_level_mass;
    for (const auto& e : edges)
        if (e.parent == root) m += e.measure_at_parent();
    return m;
}

namespace {

struct MergeTreeBuilder {
    // join tree when ascending == true (sublevel components), split otherwise
    static void build(const std::vector<int>& order,  // node ids in processing order
                      const std::vector<std::vector<int>>& adj,
                      const std::vector<int>& rank_of, bool ascending,
                      std::vector<int>& parent, std::vector<int>& child_count) {
        const std::size_t n = rank_of.size();
        parent.assign(n, -1);
        child_count.assign(n, 0);
        UnionFind uf(n);
        std::vector<int> top(n, -1);
        std::vector<bool> seen(n, false);
        for (int u : order) {
            seen[u] = true;
            top[uf.find(u)] = u;
            for (int w : adj[u]) {
                if (!seen[w]) continue;
                const int rw = uf.find(w);
                const int ru = uf.find(u);
                if (rw == ru) continue;
                parent[top[rw]] = u;
                ++child_count[u];
                uf.unite(rw, ru);
                top[uf.find(u)] = u;
            }
        }
        (void)ascending;
    }
};

}  // namespace

ContourTree build_contour_tree(const ScalarField& field) {
    const TriangulatedDisk& mesh = field.mesh;
    if (field.values.size() != mesh.vertices.size())
        throw std::invalid_argument("contour tree: value count mismatch");
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v)
        if (mesh.boundary[v] && field.values[v] != 0.0)
            throw std::invalid_argument("contour tree: field does not vanish on the boundary");

    // Collapse the boundary circle to the root node.
    const int nv = static_cast<int>(mesh.vertices.size());
    std::vector<int> node_of(nv, -1);
    std::vector<int> mesh_vertex_of{-1};
    std::vector<double> level{0.0};
    for (int v = 0; v < nv; ++v) {
        if (mesh.boundary[v]) {
            node_of[v] = 0;
        } else {
            node_of[v] = static_cast<int>(level.size());
            mesh_vertex_of.push_back(v);
            level.push_back(field.values[v]);
        }
    }
    const int nn = static_cast<int>(level.size());

    ContourTree tree;
    tree.root = 0;
    tree.nodes.resize(nn);
    for (int u = 0; u < nn; ++u) {
        tree.nodes[u].mesh_vertex = mesh_vertex_of[u];
        tree.nodes[u].level = level[u];
        tree.nodes[u].is_root = u == 0;
    }
    if (nn == 1) {  // constant field: the tree is the bare root
        tree.root_level_mass = mesh.normalized_area();
        return tree;
    }

    // deduplicated 1-skeleton on collapsed nodes
    std::vector<std::vector<int>> adj(nn);
    {
        std::vector<std::pair<int, int>> raw;
        raw.reserve(mesh.triangles.size() * 3);
        for (const auto& [a, b, c] : mesh.triangles) {
            const int na = node_of[a], nb = node_of[b], nc = node_of[c];
            if (na != nb) raw.emplace_back(std::min(na, nb), std::max(na, nb));
            if (nb != nc) raw.emplace_back(std::min(nb, nc), std::max(nb, nc));
            if (na != nc) raw.emplace_back(std::min(na, nc), std::max(na, nc));
        }
        std::sort(raw.begin(), raw.end());
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        for (const auto& [a, b] : raw) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }

    // simulated simplicity: (value, mesh vertex index), root below all ties
    std::vector<int> rank_of(nn);
    {
        std::vector<int> order(nn);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (level[a] != level[b]) return level[a] < level[b];
            return mesh_vertex_of[a] < mesh_vertex_of[b];
        });
        for (int i = 0; i < nn; ++i) rank_of[order[i]] = i;

        std::vector<int> jparent, j_count, sparent, s_count;
        MergeTreeBuilder::build(order, adj, rank_of, true, jparent, j_count);
        std::vector<int> rorder(order.rbegin(), order.rend());
        MergeTreeBuilder::build(rorder, adj, rank_of, false, sparent, s_count);

        // classic merge of join and split trees into the augmented tree
        std::vector<std::vector<int>> jkids(nn), skids(nn);
        for (int u = 0; u < nn; ++u) {
            if (jparent[u] >= 0) jkids[jparent[u]].push_back(u);
            if (sparent[u] >= 0) skids[sparent[u]].push_back(u);
        }
        std::vector<bool> alive(nn, true);
        auto jchild = [&](int v) {  // unique live join child, -1 if none
            for (int c : jkids[v])
                if (alive[c] && jparent[c] == v) return c;
            return -1;
        };
        auto schild = [&](int v) {
            for (int c : skids[v])
                if (alive[c] && sparent[c] == v) return c;
            return -1;
        };
        auto is_leaf = [&](int v) {
            return (j_count[v] == 0 && jparent[v] >= 0 && s_count[v] <= 1) ||
                   (s_count[v] == 0 && sparent[v] >= 0 && j_count[v] <= 1);
        };
        std::deque<int> queue;
        for (int u : order)
            if (is_leaf(u)) queue.push_back(u);

        std::vector<std::pair<int, int>> aug_edges;
        aug_edges.reserve(nn - 1);
        int remaining = nn;
        while (remaining > 1 && !queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            if (!alive[v] || !is_leaf(v)) continue;
            int u;
            if (j_count[v] == 0 && jparent[v] >= 0) {
                u = jparent[v];
                aug_edges.emplace_back(v, u);
                --j_count[u];
                // splice v out of the split tree
                const int c = schild(v);
                if (c >= 0) {
                    sparent[c] = sparent[v];
                    if (sparent[v] >= 0) skids[sparent[v]].push_back(c);
                } else if (sparent[v] >= 0) {
                    --s_count[sparent[v]];
                }
            } else {
                u = sparent[v];
                aug_edges.emplace_back(v, u);
                --s_count[u];
                const int c = jchild(v);
                if (c >= 0) {
                    jparent[c] = jparent[v];
                    if (jparent[v] >= 0) jkids[jparent[v]].push_back(c);
                } else if (jparent[v] >= 0) {
                    --j_count[jparent[v]];
                }
            }
            alive[v] = false;
            --remaining;
            if (alive[u] && is_leaf(u)) queue.push_back(u);
        }
        if (remaining != 1)
            throw std::logic_error("contour tree: merge did not reduce to a single node");

        // Root the augmented tree, reduce chains, then attach measure events.
        attach_profiles(tree, aug_edges, adj, field, node_of);
    }
    return tree;
}

// ---- profile construction -------------------------------------------------

namespace {

struct AugTree {
    std::vector<int> parent;            // toward the root
    std::vector<int> bfs;               // root first
    std::vector<int> plateau_jump;      // last node of an equal-level run
    std::vector<int> edge_of_augedge;   // reduced edge containing (u -> parent[u])
    std::vector<int> depth;
};

}  // namespace

static void solve_quadratic_into(double c2, double c1, double c0, double target, double lo,
                                 double hi, bool up, double& out, bool& found);

void attach_profiles(ContourTree& tree, const std::vector<std::pair<int, int>>& aug_edges,
                     const std::vector<std::vector<int>>& /*adj*/, const ScalarField& field,
                     const std::vector<int>& node_of) {
    const int nn = static_cast<int>(tree.nodes.size());
    std::vector<std::vector<int>> aug_adj(nn);
    for (const auto& [a, b] : aug_edges) {
        aug_adj[a].push_back(b);
        aug_adj[b].push_back(a);
    }

    AugTree aug;
    aug.parent.assign(nn, -1);
    aug.depth.assign(nn, -1);
    aug.bfs.clear();
    aug.bfs.reserve(nn);
    aug.bfs.push_back(tree.root);
    aug.depth[tree.root] = 0;
    for (std::size_t h = 0; h < aug.bfs.size(); ++h) {
        const int v = aug.bfs[h];
        for (int u : aug_adj[v]) {
            if (aug.depth[u] >= 0) continue;
            aug.depth[u] = aug.depth[v] + 1;
            aug.parent[u] = v;
            aug.bfs.push_back(u);
        }
    }
    if (static_cast<int>(aug.bfs.size()) != nn)
        throw std::logic_error("contour tree: augmented tree is disconnected");

    aug.plateau_jump.assign(nn, -1);
    for (int v : aug.bfs) {
        const int p = aug.parent[v];
        aug.plateau_jump[v] =
            (p >= 0 && tree.nodes[p].level == tree.nodes[v].level) ? aug.plateau_jump[p] : v;
    }

    // reduced nodes: root plus everything that is not a regular degree-2 point
    std::vector<bool> reduced(nn, false);
    for (int v = 0; v < nn; ++v)
        reduced[v] = v == tree.root || aug_adj[v].size() != 2;

    aug.edge_of_augedge.assign(nn, -1);
    auto rank_below = [&](int a, int b) {
        if (tree.nodes[a].level != tree.nodes[b].level)
            return tree.nodes[a].level < tree.nodes[b].level;
        return tree.nodes[a].mesh_vertex < tree.nodes[b].mesh_vertex;
    };
    for (int v : aug.bfs) {
        if (v == tree.root) continue;
        const int p = aug.parent[v];
        int eid;
        if (reduced[p]) {
            eid = static_cast<int>(tree.edges.size());
            ContourEdge e;
            e.parent = p;
            tree.edges.push_back(e);
        } else {
            eid = aug.edge_of_augedge[p];
        }
        aug.edge_of_augedge[v] = eid;
        if (reduced[v]) {
            tree.edges[eid].child = v;
            tree.edges[eid].child_level = tree.nodes[v].level;
            tree.edges[eid].parent_level = tree.nodes[tree.edges[eid].parent].level;
            tree.edges[eid].up = tree.edges[eid].child_level != tree.edges[eid].parent_level
                                     ? tree.edges[eid].child_level > tree.edges[eid].parent_level
                                     : rank_below(tree.edges[eid].parent, v);
        }
    }
    for (const auto& e : tree.edges)
        if (e.child < 0) throw std::logic_error("contour tree: dangling reduced edge");
    for (int v = 0; v < nn; ++v) {
        if (!reduced[v]) continue;
        tree.nodes[v].edges.clear();
    }
    for (std::size_t eid = 0; eid < tree.edges.size(); ++eid) {
        tree.nodes[tree.edges[eid].child].edges.push_back(static_cast<int>(eid));
        tree.nodes[tree.edges[eid].parent].edges.push_back(static_cast<int>(eid));
    }

    // ---- per-triangle attribution (the OpenMP kernel) ----------------------
    struct PieceEvent {
        int edge;
        QuadPiece piece;
    };
    struct EntryEvent {
        int edge;
        MassEntry entry;
    };

    const auto& mesh = field.mesh;
    const int nt = static_cast<int>(mesh.triangles.size());

    // One walk per direction: `super` follows superlevel sets root-ward from
    // the top corner, the mirror follows sublevel sets from the bottom corner.
    auto walk = [&](bool super, int start, double f0, double f1, double f2, double S,
                    std::vector<PieceEvent>& piece_out, std::vector<EntryEvent>& entry_out) {
        // normalized orientation: s(u) = +level for superlevel, -level else
        auto s_of = [&](int u) { return super ? tree.nodes[u].level : -tree.nodes[u].level; };
        const double s_far = super ? f2 : -f0;   // walk starts here
        const double s_stop = super ? f0 : -f2;  // full mass below this
        const double knee = super ? f1 : -f1;

        int cur = start;
        double win_hi = s_far;
        while (cur != tree.root) {
            if (tree.nodes[cur].level == tree.nodes[aug.parent[cur]].level)
                cur = aug.plateau_jump[cur];  // equal-level run, nothing can be emitted
            if (cur == tree.root) break;
            const int p = aug.parent[cur];
            const double sp = s_of(p);
            if (sp >= win_hi) {  // ridge in walk coordinates; keep descending
                cur = p;
                continue;
            }
            const double win_lo = std::max(s_stop, sp);
            const int eid = aug.edge_of_augedge[cur];
            if (win_lo < win_hi) {
                // split the window at the knee and emit quadratics in true levels
                auto emit = [&](double lo_s, double hi_s, bool upper_piece) {
                    if (lo_s >= hi_s) return;
                    QuadPiece q;
                    if (super) {
                        q.lo = lo_s;
                        q.hi = hi_s;
                        if (upper_piece) {  // level in [f1, f2]
                            const double k = S / ((f2 - f0) * (f2 - f1));
                            q.c2 = k;
                            q.c1 = -2.0 * k * f2;
                            q.c0 = k * f2 * f2;
                        } else {  // level in [f0, f1]
                            const double k = S / ((f1 - f0) * (f2 - f0));
                            q.c2 = -k;
                            q.c1 = 2.0 * k * f0;
                            q.c0 = S - k * f0 * f0;
                        }
                    } else {  // sublevel areas, s = -level
                        q.lo = -hi_s;
                        q.hi = -lo_s;
                        if (upper_piece) {  // s in [-f1, -f0] <=> level in [f0, f1]
                            const double k = S / ((f1 - f0) * (f2 - f0));
                            q.c2 = k;
                            q.c1 = -2.0 * k * f0;
                            q.c0 = k * f0 * f0;
                        } else {  // level in [f1, f2]
                            const double k = S / ((f2 - f0) * (f2 - f1));
                            q.c2 = -k;
                            q.c1 = 2.0 * k * f2;
                            q.c0 = S - k * f2 * f2;
                        }
                    }
                    piece_out.push_back({eid, q});
                };
                emit(std::max(win_lo, knee), win_hi, true);
                emit(win_lo, std::min(win_hi, knee), false);
            }
            if (sp < s_stop) {
                entry_out.push_back({eid, MassEntry{super ? f0 : f2, S}});
                return;
            }
            win_hi = win_lo;
            cur = p;
        }
        // ran into the root: the remaining mass sits on the root side
    };

    std::vector<PieceEvent> pieces;
    std::vector<EntryEvent> entries;
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::vector<std::vector<PieceEvent>> tl_pieces(threads);
    std::vector<std::vector<EntryEvent>> tl_entries(threads);

#pragma omp parallel for schedule(static)
    for (int t = 0; t < nt; ++t) {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#else
        const int tid = 0;
#endif
        const auto& tri = mesh.triangles[t];
        int corners[3] = {node_of[tri[0]], node_of[tri[1]], node_of[tri[2]]};
        std::sort(corners, corners + 3,
                  [&](int a, int b) { return rank_below(a, b); });
        const double f0 = tree.nodes[corners[0]].level;
        const double f1 = tree.nodes[corners[1]].level;
        const double f2 = tree.nodes[corners[2]].level;
        const double S = triangle_area(mesh, t) / kPi;
        if (S <= 0.0) continue;
        if (corners[2] != tree.root)
            walk(true, corners[2], f0, f1, f2, S, tl_pieces[tid], tl_entries[tid]);
        if (corners[0] != tree.root)
            walk(false, corners[0], f0, f1, f2, S, tl_pieces[tid], tl_entries[tid]);
    }
    for (int i = 0; i < threads; ++i) {
        pieces.insert(pieces.end(), tl_pieces[i].begin(), tl_pieces[i].end());
        entries.insert(entries.end(), tl_entries[i].begin(), tl_entries[i].end());
    }

    for (const auto& ev : pieces) {
        // superlevel windows live on up edges, sublevel ones on down edges
        ContourEdge& e = tree.edges[ev.edge];
        e.pieces.push_back(ev.piece);
    }
    for (const auto& ev : entries) tree.edges[ev.edge].entries.push_back(ev.entry);
    for (auto& e : tree.edges) {
        std::sort(e.pieces.begin(), e.pieces.end(),
                  [](const QuadPiece& a, const QuadPiece& b) { return a.lo < b.lo; });
        std::sort(e.entries.begin(), e.entries.end(),
                  [](const MassEntry& a, const MassEntry& b) { return a.level < b.level; });
    }

    // bases: mass hanging beyond the child end, accumulated depth-first
    std::vector<int> by_depth(tree.edges.size());
    std::iota(by_depth.begin(), by_depth.end(), 0);
    std::sort(by_depth.begin(), by_depth.end(), [&](int a, int b) {
        return aug.depth[tree.edges[a].child] > aug.depth[tree.edges[b].child];
    });
    std::vector<double> hanging(nn, 0.0);
    for (int eid : by_depth) {
        ContourEdge& e = tree.edges[eid];
        e.base = hanging[e.child];
        hanging[e.parent] += e.measure_at_parent();
    }
    tree.root_level_mass = mesh.normalized_area() - hanging[tree.root];
}

// ---- cut point ------------------------------------------------------------

static void solve_quadratic_into(double c2, double c1, double c0, double target, double lo,
                                 double hi, bool /*up*/, double& out, bool& found) {
    // roots of c2 x^2 + c1 x + (c0 - target) inside [lo, hi]
    const double c = c0 - target;
    const double eps = 1e-300;
    if (std::abs(c2) < eps) {
        if (std::abs(c1) < eps) return;
        const double x = -c / c1;
        if (x >= lo - 1e-12 && x <= hi + 1e-12) {
            out = std::clamp(x, lo, hi);
            found = true;
        }
        return;
    }
    const double disc = c1 * c1 - 4.0 * c2 * c;
    if (disc < 0.0) return;
    const double sq = std::sqrt(disc);
    for (double x : {(-c1 - sq) / (2.0 * c2), (-c1 + sq) / (2.0 * c2)}) {
        if (x >= lo - 1e-12 && x <= hi + 1e-12) {
            out = std::clamp(x, lo, hi);
            found = true;
            return;
        }
    }
}

namespace {

// Solve measure(level) == target inside the edge; the measure is monotone
// from the child end toward the parent end.
double solve_on_edge(const ContourEdge& e, double target) {
    std::vector<double> cuts{std::min(e.child_level, e.parent_level),
                             std::max(e.child_level, e.parent_level)};
    for (const auto& p : e.pieces) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    for (const auto& en : e.entries) cuts.push_back(en.level);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        const double mid = 0.5 * (lo + hi);
        // collect the active quadratic on this interval
        double c2 = 0.0, c1 = 0.0, c0 = e.base;
        for (const auto& p : e.pieces) {
            if (p.lo <= mid && mid <= p.hi) {
                c2 += p.c2;
                c1 += p.c1;
                c0 += p.c0;
            }
        }
        for (const auto& en : e.entries) {
            const bool counted = e.up ? en.level >= hi : en.level <= lo;
            if (counted) c0 += en.mass;
        }
        const double m_lo = (c2 * lo + c1) * lo + c0;
        const double m_hi = (c2 * hi + c1) * hi + c0;
        const double mn = std::min(m_lo, m_hi), mx = std::max(m_lo, m_hi);
        if (target < mn - 1e-12 || target > mx + 1e-12) continue;
        double out = 0.0;
        bool found = false;
        solve_quadratic_into(c2, c1, c0, target, lo, hi, e.up, out, found);
        if (found) return out;
    }
    // numerical fallback: bisection on the exact evaluator
    double lo = e.up ? e.parent_level : e.child_level;
    double hi = e.up ? e.child_level : e.parent_level;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double m = e.measure(mid);
        const bool away_side = e.up ? m >= target : m < target;
        if (e.up) {
            (m >= target ? lo : hi) = mid;
        } else {
            (m >= target ? hi : lo) = mid;
        }
        (void)away_side;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

CutPoint cut_point(const ContourTree& tree, double A) {
    if (!(A >= 0.5 && A < 1.0))
        throw std::invalid_argument("cut parameter A must lie in [1/2, 1)");
    CutPoint cp;
    int node = tree.root;
    int arrived_by = -1;
    while (true) {
        int next_edge = -1;
        for (int eid : tree.nodes[node].edges) {
            const ContourEdge& e = tree.edges[eid];
            if (e.parent != node || eid == arrived_by) continue;
            if (e.measure_at_parent() >= A) {
                next_edge = eid;
                break;  // at most one branch can carry >= 1/2
            }
        }
        if (next_edge < 0) {
            if (node == tree.root) {
                cp.at_root = true;
                cp.node = node;
                cp.x_level = 0.0;
                return cp;
            }
            cp.node = node;
            cp.x_level = tree.nodes[node].level;
            return cp;
        }
        const ContourEdge& e = tree.edges[next_edge];
        if (e.measure_at_child() >= A) {
            node = e.child;
            arrived_by = next_edge;
            continue;
        }
        cp.edge = next_edge;
        cp.x_level = solve_on_edge(e, A);
        return cp;
    }
}

std::string to_dot(const ContourTree& tree) {
    std::string out = "graph contour_tree {\n  node [shape=point];\n";
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        if (!tree.nodes[i].is_root && tree.nodes[i].edges.empty()) continue;
        out += "  n" + std::to_string(i) + " [xlabel=\"" +
               std::to_string(tree.nodes[i].level) + (tree.nodes[i].is_root ? " (root)" : "") +
               "\"];\n";
    }
    for (const auto& e : tree.edges) {
        out += "  n" + std::to_string(e.child) + " -- n" + std::to_string(e.parent) +
               " [label=\"" + std::to_string(e.measure_at_parent()) + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::map<int, double> component_areas(const ScalarField& field, double level, bool superlevel,
                                      bool parallel) {
    const auto& mesh = field.mesh;
    const int nv = static_cast<int>(mesh.vertices.size());
    auto active = [&](int v) {
        return superlevel ? field.values[v] >= level : field.values[v] <= level;
    };
    UnionFind uf(nv);
    for (const auto& [a, b, c] : mesh.triangles) {
        if (active(a) && active(b)) uf.unite(a, b);
        if (active(b) && active(c)) uf.unite(b, c);
        if (active(a) && active(c)) uf.unite(a, c);
    }
    const int nt = static_cast<int>(mesh.triangles.size());
    std::vector<int> owner(nt, -1);
    std::vector<double> area(nt, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
    for (int t = 0; t < nt; ++t) {
        const auto& tri = mesh.triangles[t];
        double f[3] = {field.values[tri[0]], field.values[tri[1]], field.values[tri[2]]};
        int idx[3] = {tri[0], tri[1], tri[2]};
        if (f[1] < f[0]) {
            std::swap(f[0], f[1]);
            std::swap(idx[0], idx[1]);
        }
        if (f[2] < f[1]) {
            std::swap(f[1], f[2]);
            std::swap(idx[1], idx[2]);
        }
        if (f[1] < f[0]) {
            std::swap(f[0], f[1]);
            std::swap(idx[0], idx[1]);
        }
        const double S = triangle_area(mesh, t) / kPi;
        double a;
        int extreme;
        if (superlevel) {
            a = superlevel_area(S, f[0], f[1], f[2], level);
            extreme = idx[2];
        } else {
            a = S - superlevel_area(S, f[0], f[1], f[2], level);
            extreme = idx[0];
        }
        if (a > 0.0 && active(extreme)) {
            owner[t] = extreme;
            area[t] = a;
        }
    }
    std::map<int, double> result;
    for (int t = 0; t < nt; ++t)
        if (owner[t] >= 0) result[uf.find(owner[t])] += area[t];
    return result;
}

}  // namespace hofer
