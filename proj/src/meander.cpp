#include "hofer/meander.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace hofer {

namespace {

std::string marker_name(int x, int n) {
    if (x == 0) return "a";
    if (x == n + 1) return "b";
    return std::to_string(x);
}

std::string arc_name(const Arc& arc, int n) {
    return "(" + marker_name(arc.lo, n) + "," + marker_name(arc.hi, n) + ")";
}

// Interleave test for two same-side arcs with pairwise distinct endpoints.
bool arcs_cross(const Arc& x, const Arc& y) {
    return (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) ||
           (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi);
}

Color face_color(Side side, int depth) {
    const Color root_color = (side == Side::North) ? Color::White : Color::Black;
    return (depth % 2 == 0) ? root_color : flip(root_color);
}

}  // namespace

std::string RegionId::str() const {
    if (is_root) return side == Side::North ? "rootW" : "rootB";
    return "e" + std::to_string(leftmost_edge) + std::string(1, side_char(side));
}

int RegionSet::find(const RegionId& id) const {
    for (std::size_t i = 0; i < regions.size(); ++i)
        if (regions[i].id == id) return static_cast<int>(i);
    return -1;
}

int RegionSet::region_of_edge(int edge, Side s) const {
    return s == Side::North ? edges.at(edge).north_region : edges.at(edge).south_region;
}

const Rational& WeightedMeander::weight(const RegionId& id) const {
    const int i = regions.find(id);
    if (i < 0) throw std::invalid_argument("unknown region " + id.str());
    return weights.at(i);
}

std::vector<Arc> arcs_of(const Meander& m) {
    std::vector<Arc> arcs;
    arcs.reserve(m.n + 1);
    Side side = m.start_side;
    int prev = 0;  // marker a
    for (int k = 0; k < m.n; ++k) {
        const int q = m.order[k];
        arcs.push_back({std::min(prev, q), std::max(prev, q), side, k});
        prev = q;
        side = flip(side);
    }
    arcs.push_back({std::min(prev, m.n + 1), std::max(prev, m.n + 1), side, m.n});
    return arcs;
}

ValidationReport validate_meander(const Meander& m) {
    ValidationReport rep;
    if (m.n < 0 || static_cast<int>(m.order.size()) != m.n) {
        rep.valid = false;
        rep.message = "order length does not match n";
        return rep;
    }
    std::vector<bool> seen(m.n + 1, false);
    for (int q : m.order) {
        if (q < 1 || q > m.n || seen[q]) {
            rep.valid = false;
            rep.message = "order is not a permutation of 1.." + std::to_string(m.n);
            return rep;
        }
        seen[q] = true;
    }

    const auto arcs = arcs_of(m);
    for (Side side : {Side::North, Side::South}) {
        // arc with an endpoint at a given marker, if any (at most one per side)
        std::vector<const Arc*> at_marker(m.n + 2, nullptr);
        for (const auto& a : arcs) {
            if (a.side != side) continue;
            at_marker[a.lo] = &a;
            at_marker[a.hi] = &a;
        }
        std::vector<const Arc*> stack;
        for (int x = 0; x <= m.n + 1; ++x) {
            const Arc* a = at_marker[x];
            if (a == nullptr) continue;
            if (x == a->lo) {
                stack.push_back(a);
            } else {
                if (stack.empty() || stack.back() != a) {
                    const Arc* open = stack.empty() ? nullptr : stack.back();
                    rep.valid = false;
                    std::ostringstream os;
                    os << (side == Side::North ? "north" : "south") << " arcs "
                       << arc_name(*a, m.n);
                    if (open) os << " and " << arc_name(*open, m.n);
                    os << " interleave";
                    rep.message = os.str();
                    return rep;
                }
                stack.pop_back();
            }
        }
    }
    return rep;
}

namespace {

// DFS over visit orders; a freshly added arc is checked against all existing
// arcs on its side, which prunes every extension of an invalid prefix.
void enumerate_rec(int n, Side start, std::vector<int>& order, std::vector<bool>& used,
                   std::vector<Arc>& placed, std::vector<Meander>& out) {
    const int k = static_cast<int>(order.size());
    if (k == n) {
        const int prev = n == 0 ? 0 : order.back();
        Side side = start;
        for (int i = 0; i < n; ++i) side = flip(side);
        const Arc last{std::min(prev, n + 1), std::max(prev, n + 1), side, n};
        for (const auto& a : placed)
            if (a.side == last.side && arcs_cross(a, last)) return;
        out.push_back(Meander{n, start, order});
        return;
    }
    const int prev = k == 0 ? 0 : order.back();
    Side side = start;
    for (int i = 0; i < k; ++i) side = flip(side);
    for (int q = 1; q <= n; ++q) {
        if (used[q]) continue;
        const Arc next{std::min(prev, q), std::max(prev, q), side, k};
        bool ok = true;
        for (const auto& a : placed) {
            if (a.side == next.side && arcs_cross(a, next)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        used[q] = true;
        order.push_back(q);
        placed.push_back(next);
        enumerate_rec(n, start, order, used, placed, out);
        placed.pop_back();
        order.pop_back();
        used[q] = false;
    }
}

}  // namespace

std::vector<Meander> enumerate_meanders(int n, int cap) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (n > cap) throw std::invalid_argument("n exceeds enumeration cap " + std::to_string(cap));
    std::vector<Meander> out;
    for (Side start : {Side::North, Side::South}) {
        std::vector<int> order;
        std::vector<bool> used(n + 1, false);
        std::vector<Arc> placed;
        enumerate_rec(n, start, order, used, placed, out);
    }
    return out;
}

Meander mirror(const Meander& m) {
    Meander r;
    r.n = m.n;
    r.start_side = (m.n % 2 == 0) ? m.start_side : flip(m.start_side);
    r.order.resize(m.n);
    for (int i = 0; i < m.n; ++i) r.order[i] = m.n + 1 - m.order[m.n - 1 - i];
    return r;
}

RegionSet extract_regions(const Meander& m) {
    const auto rep = validate_meander(m);
    if (!rep.valid) throw std::invalid_argument("invalid meander: " + rep.message);

    const auto arcs = arcs_of(m);
    RegionSet rs;

    // Faces per side: one per arc (the region directly under it) plus the
    // boundary-adjacent root. Nesting depth among same-side arcs fixes the
    // color: the north root is white, the south root black, and the color
    // flips across each arc of the curve.
    struct Face {
        Side side;
        int arc = -1;  // index into arcs, -1 for the root face
        int depth = 0;
        Color color = Color::White;
        std::vector<int> incident;
    };
    std::vector<Face> faces;
    std::vector<int> face_of_arc(arcs.size(), -1);
    int root_face[2] = {-1, -1};  // [North, South]

    for (Side side : {Side::North, Side::South}) {
        Face root{side, -1, 0, face_color(side, 0), {}};
        root_face[static_cast<int>(side)] = static_cast<int>(faces.size());
        faces.push_back(root);
    }
    for (std::size_t ai = 0; ai < arcs.size(); ++ai) {
        const Arc& a = arcs[ai];
        int depth = 1;
        for (const auto& b : arcs)
            if (b.side == a.side && b.lo < a.lo && a.hi < b.hi) ++depth;
        face_of_arc[ai] = static_cast<int>(faces.size());
        faces.push_back(Face{a.side, static_cast<int>(ai), depth, face_color(a.side, depth), {}});
    }

    // Innermost covering arc decides which face a segment sees on each side.
    std::vector<std::pair<int, int>> seg_faces(m.n + 1, {-1, -1});  // (north, south)
    for (int s = 0; s <= m.n; ++s) {
        for (Side side : {Side::North, Side::South}) {
            int best = -1;
            for (std::size_t ai = 0; ai < arcs.size(); ++ai) {
                const Arc& a = arcs[ai];
                if (a.side != side || a.lo > s || a.hi < s + 1) continue;
                if (best < 0 || a.lo > arcs[best].lo) best = static_cast<int>(ai);
            }
            const int f = best < 0 ? root_face[static_cast<int>(side)] : face_of_arc[best];
            faces[f].incident.push_back(s);
            if (side == Side::North)
                seg_faces[s].first = f;
            else
                seg_faces[s].second = f;
        }
    }

    // Canonical ids, then sort and remap.
    std::vector<Region> regions(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        Region r;
        r.side = faces[i].side;
        r.color = faces[i].color;
        r.is_root = faces[i].arc < 0;
        r.incident_edges = faces[i].incident;
        r.id.is_root = r.is_root;
        r.id.side = r.side;
        r.id.leftmost_edge = r.is_root ? -1 : r.incident_edges.front();
        regions[i] = std::move(r);
    }
    std::vector<int> perm(regions.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return regions[a].id < regions[b].id; });
    std::vector<int> where(regions.size());
    for (std::size_t i = 0; i < perm.size(); ++i) where[perm[i]] = static_cast<int>(i);

    rs.regions.reserve(regions.size());
    for (int old : perm) rs.regions.push_back(regions[old]);
    rs.edges.resize(m.n + 1);
    for (int s = 0; s <= m.n; ++s)
        rs.edges[s] = EdgeFaces{s, where[seg_faces[s].first], where[seg_faces[s].second]};
    return rs;
}

ValidationReport validate_weights(const WeightedMeander& wm) {
    ValidationReport rep;
    if (wm.weights.size() != wm.regions.regions.size()) {
        rep.valid = false;
        rep.message = "weight count does not match region count";
        return rep;
    }
    const Rational half = make_rational(1, 2);
    Rational sums[2][2] = {};  // [side][color]
    for (std::size_t i = 0; i < wm.weights.size(); ++i) {
        const Region& r = wm.regions.regions[i];
        sums[static_cast<int>(r.side)][static_cast<int>(r.color)] += wm.weights[i];
    }
    const struct {
        const char* name;
        Rational value;
    } checks[] = {
        {"north", sums[0][0] + sums[0][1]},
        {"south", sums[1][0] + sums[1][1]},
        {"black", sums[0][0] + sums[1][0]},
        {"white", sums[0][1] + sums[1][1]},
    };
    for (const auto& c : checks) {
        if (c.value != half) {
            rep.valid = false;
            rep.message = std::string(c.name) + " weight sum " + to_string(c.value) +
                          " differs from 1/2";
            return rep;
        }
    }
    for (std::size_t i = 0; i < wm.weights.size(); ++i) {
        const Region& r = wm.regions.regions[i];
        if (wm.weights[i] < 0) {
            rep.valid = false;
            rep.message = "weight of " + r.id.str() + " is negative";
            return rep;
        }
        if (wm.weights[i] == 0) {
            // The only admissible zero is the n=0 lens of the terminal state
            // (both roots then carry exactly 1/2).
            if (wm.meander.n == 0 && !r.is_root) {
                rep.degenerate_terminal = true;
            } else {
                rep.valid = false;
                rep.message = "weight of " + r.id.str() + " is not positive";
                return rep;
            }
        }
    }
    return rep;
}

WeightedMeander make_weighted(const Meander& m,
                              const std::map<std::string, Rational>& weights) {
    WeightedMeander wm;
    wm.meander = m;
    wm.regions = extract_regions(m);
    wm.weights.resize(wm.regions.regions.size());
    std::set<std::string> used;
    for (std::size_t i = 0; i < wm.regions.regions.size(); ++i) {
        const std::string key = wm.regions.regions[i].id.str();
        const auto it = weights.find(key);
        if (it == weights.end())
            throw std::invalid_argument("missing weight for region " + key);
        wm.weights[i] = it->second;
        used.insert(key);
    }
    for (const auto& [key, value] : weights)
        if (!used.count(key)) throw std::invalid_argument("unknown weight key " + key);
    return wm;
}

namespace {

WeightedMeander terminal_for(const Meander& m) {
    WeightedMeander wm;
    wm.meander = m;
    wm.regions = extract_regions(m);
    wm.weights.assign(wm.regions.regions.size(), Rational(0));
    for (std::size_t i = 0; i < wm.regions.regions.size(); ++i)
        if (wm.regions.regions[i].is_root) wm.weights[i] = make_rational(1, 2);
    return wm;
}

}  // namespace

WeightedMeander sample_weights(const Meander& m, std::uint64_t seed) {
    WeightedMeander wm;
    wm.meander = m;
    wm.regions = extract_regions(m);
    const std::size_t count = wm.regions.regions.size();
    wm.weights.assign(count, Rational(0));

    if (m.n == 0) return terminal_for(m);

    // Seeded interior point: draw positive integer masses, normalize the
    // north side to 1/2, then split the south side so that the white sum is
    // exactly 1/2 (which forces the black sum too). mt19937_64 plus modulo
    // keeps the draw identical across standard libraries.
    std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ULL);
    constexpr std::uint64_t kGrid = 1'000'000;
    auto draw = [&gen]() { return static_cast<long long>(gen() % kGrid) + 1; };

    std::vector<long long> raw(count, 0);
    long long north_total = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (wm.regions.regions[i].side == Side::North) {
            raw[i] = draw();
            north_total += raw[i];
        }
    }
    Rational white_north(0);
    for (std::size_t i = 0; i < count; ++i) {
        if (wm.regions.regions[i].side != Side::North) continue;
        wm.weights[i] = Rational(BigInt(raw[i]), BigInt(2 * north_total));
        if (wm.regions.regions[i].color == Color::White) white_north += wm.weights[i];
    }

    const Rational half = make_rational(1, 2);
    const Rational target_white_south = half - white_north;
    const Rational target_black_south = white_north;
    long long class_total[2] = {0, 0};  // [Black, White] on the south side
    for (std::size_t i = 0; i < count; ++i) {
        if (wm.regions.regions[i].side != Side::South) continue;
        raw[i] = draw();
        class_total[static_cast<int>(wm.regions.regions[i].color)] += raw[i];
    }
    for (std::size_t i = 0; i < count; ++i) {
        const Region& r = wm.regions.regions[i];
        if (r.side != Side::South) continue;
        const Rational target =
            r.color == Color::White ? target_white_south : target_black_south;
        wm.weights[i] = target * Rational(BigInt(raw[i]), BigInt(class_total[static_cast<int>(r.color)]));
    }
    return wm;
}

WeightedMeander class_balanced_weights(const Meander& m) {
    if (m.n == 0) return terminal_for(m);
    WeightedMeander wm;
    wm.meander = m;
    wm.regions = extract_regions(m);
    int class_size[2][2] = {};
    for (const auto& r : wm.regions.regions)
        ++class_size[static_cast<int>(r.side)][static_cast<int>(r.color)];
    wm.weights.resize(wm.regions.regions.size());
    for (std::size_t i = 0; i < wm.weights.size(); ++i) {
        const Region& r = wm.regions.regions[i];
        const int sz = class_size[static_cast<int>(r.side)][static_cast<int>(r.color)];
        wm.weights[i] = Rational(BigInt(1), BigInt(4LL * sz));
    }
    return wm;
}

namespace {

// Same-color adjacency over shared axis segments.
std::vector<std::vector<int>> region_adjacency(const RegionSet& rs) {
    std::vector<std::vector<int>> adj(rs.regions.size());
    for (const auto& e : rs.edges) {
        adj[e.north_region].push_back(e.south_region);
        adj[e.south_region].push_back(e.north_region);
    }
    return adj;
}

std::vector<int> depths_from_root(const RegionSet& rs, Color color) {
    std::vector<int> depth(rs.regions.size(), -1);
    int root = -1;
    for (std::size_t i = 0; i < rs.regions.size(); ++i)
        if (rs.regions[i].is_root && rs.regions[i].color == color) root = static_cast<int>(i);
    if (root < 0) return depth;
    const auto adj = region_adjacency(rs);
    std::vector<int> queue{root};
    depth[root] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int v = queue[h];
        for (int u : adj[v]) {
            if (depth[u] >= 0 || rs.regions[u].color != color) continue;
            depth[u] = depth[v] + 1;
            queue.push_back(u);
        }
    }
    return depth;
}

}  // namespace

WeightedMeander reduce_leaf(const WeightedMeander& wm, const RegionId& leaf_id,
                            const RegionId& target_id) {
    const RegionSet& rs = wm.regions;
    const int leaf = rs.find(leaf_id);
    const int target = rs.find(target_id);
    if (leaf < 0) throw std::invalid_argument("reduce_leaf: unknown leaf " + leaf_id.str());
    if (target < 0) throw std::invalid_argument("reduce_leaf: unknown target " + target_id.str());
    const Region& L = rs.regions[leaf];
    if (L.is_root) throw std::invalid_argument("reduce_leaf: leaf is a root");
    if (L.incident_edges.size() != 1)
        throw std::invalid_argument("reduce_leaf: " + leaf_id.str() + " is not a tree leaf");
    if (rs.regions[target].color != L.color)
        throw std::invalid_argument("reduce_leaf: target color differs from leaf color");

    const auto depth = depths_from_root(rs, L.color);
    if (depth[leaf] < 2)
        throw std::invalid_argument("reduce_leaf: leaf depth " + std::to_string(depth[leaf]) +
                                    " is below 2");
    // distance 2 in the same-color tree == shared neighbor with the leaf
    const int p = L.incident_edges.front();
    const int via = rs.region_of_edge(p, flip(L.side));
    bool target_adjacent_via = false;
    for (const auto& e : rs.edges) {
        const int a = e.north_region, b = e.south_region;
        if ((a == via && b == target) || (b == via && a == target)) target_adjacent_via = true;
    }
    if (!target_adjacent_via || target == leaf)
        throw std::invalid_argument("reduce_leaf: target is not at graph distance 2 from leaf");

    // Depth >= 2 guarantees the leaf is a bigon over true crossings: its two
    // boundary crossings p, p+1 are consecutive along the axis and joined by
    // one arc of the curve. Asserted rather than trusted.
    const Meander& m = wm.meander;
    if (p < 1 || p + 1 > m.n)
        throw std::invalid_argument("reduce_leaf: leaf segment touches a departure marker");
    {
        bool bigon = false;
        for (const auto& a : arcs_of(m))
            if (a.side == L.side && a.lo == p && a.hi == p + 1) bigon = true;
        if (!bigon)
            throw std::invalid_argument("reduce_leaf: leaf crossings are not adjacent along the curve");
    }

    // Splice the meander: crossings p and p+1 disappear.
    Meander reduced;
    reduced.n = m.n - 2;
    reduced.start_side = m.start_side;
    for (int q : m.order) {
        if (q == p || q == p + 1) continue;
        reduced.order.push_back(q > p + 1 ? q - 2 : q);
    }

    WeightedMeander out;
    out.meander = reduced;
    out.regions = extract_regions(reduced);
    out.weights.assign(out.regions.regions.size(), Rational(0));

    // Region correspondence. Segments p-1, p, p+1 merge into the new segment
    // p-1; everything beyond shifts down by two. The leaf disappears, the
    // curve-side faces of the two flanking segments coincide (the leaf's hood)
    // and keep their weight, and the two opposite-side flanking faces merge.
    const Side sigma = L.side;
    auto seg_image = [&](int j) { return j <= p + 1 ? std::min(j, p - 1) : j - 2; };

    const int hood = rs.region_of_edge(p - 1, sigma);
    const int hood2 = rs.region_of_edge(p + 1, sigma);
    if (hood != hood2)
        throw std::logic_error("reduce_leaf: flanking same-side faces differ");
    const int merged_a = rs.region_of_edge(p - 1, flip(sigma));
    const int merged_b = rs.region_of_edge(p + 1, flip(sigma));
    if (merged_a == merged_b)
        throw std::logic_error("reduce_leaf: flanking opposite-side faces coincide");

    std::vector<int> map_to_new(rs.regions.size(), -1);
    auto assign = [&](int old_region, int new_region) {
        if (map_to_new[old_region] == -1) {
            map_to_new[old_region] = new_region;
        } else if (map_to_new[old_region] != new_region) {
            throw std::logic_error("reduce_leaf: inconsistent region correspondence");
        }
    };
    assign(hood, out.regions.region_of_edge(p - 1, sigma));
    assign(merged_a, out.regions.region_of_edge(p - 1, flip(sigma)));
    assign(merged_b, out.regions.region_of_edge(p - 1, flip(sigma)));
    for (int j = 0; j <= m.n; ++j) {
        if (j >= p - 1 && j <= p + 1) continue;
        for (Side s : {Side::North, Side::South})
            assign(rs.region_of_edge(j, s), out.regions.region_of_edge(seg_image(j), s));
    }
    for (std::size_t i = 0; i < rs.regions.size(); ++i) {
        if (static_cast<int>(i) == leaf) continue;
        if (map_to_new[i] < 0) throw std::logic_error("reduce_leaf: region left unmapped");
        out.weights[map_to_new[i]] += wm.weights[i];
    }
    out.weights[map_to_new[target]] += wm.weights[leaf];

    Rational total(0);
    for (const auto& w : out.weights) total += w;
    if (total != Rational(1)) throw std::logic_error("reduce_leaf: weight total drifted");
    return out;
}

std::string canonical_key(const Meander& m) {
    std::ostringstream os;
    os << "M;n=" << m.n << ";s=" << side_char(m.start_side) << ";o=";
    for (int i = 0; i < m.n; ++i) {
        if (i) os << ",";
        os << m.order[i];
    }
    return os.str();
}

std::string canonical_key(const WeightedMeander& wm) {
    std::ostringstream os;
    os << canonical_key(wm.meander) << ";w{";
    for (std::size_t i = 0; i < wm.regions.regions.size(); ++i) {
        if (i) os << ",";
        os << wm.regions.regions[i].id.str() << "=" << to_string(wm.weights[i]);
    }
    os << "}";
    return os.str();
}

}  // namespace hofer
