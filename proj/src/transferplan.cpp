#include "hofer/transferplan.hpp"

#include <algorithm>

namespace hofer {

namespace {

// Deepest black leaf with depth >= 2, ties by smaller leftmost-edge index.
// Returns (leaf, via, grandparent) as graph vertex indices, or nullopt when
// the black tree is already a star.
struct LeafPick {
    int leaf;
    int via;
    int target;
};

std::optional<LeafPick> pick_leaf(const RegionGraph& g, const RootedTree& black) {
    int best = -1;
    auto precedes = [&](int v, int u) {
        if (black.depth[v] != black.depth[u]) return black.depth[v] > black.depth[u];
        if (g.vertices[v].id.leftmost_edge != g.vertices[u].id.leftmost_edge)
            return g.vertices[v].id.leftmost_edge < g.vertices[u].id.leftmost_edge;
        return g.vertices[v].id < g.vertices[u].id;
    };
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.vertices[v].color != Color::Black || black.depth[v] < 2) continue;
        if (!black.children[v].empty()) continue;
        if (best < 0 || precedes(static_cast<int>(v), best)) best = static_cast<int>(v);
    }
    if (best < 0) return std::nullopt;
    const int via = black.parent[best];
    return LeafPick{best, via, black.parent[via]};
}

}  // namespace

WeightedMeander terminal_state() {
    Meander empty;  // n = 0, start north: the canonical representative
    WeightedMeander wm;
    wm.meander = empty;
    wm.regions = extract_regions(empty);
    wm.weights.assign(wm.regions.regions.size(), Rational(0));
    for (std::size_t i = 0; i < wm.regions.regions.size(); ++i)
        if (wm.regions.regions[i].is_root) wm.weights[i] = make_rational(1, 2);
    return wm;
}

Plan make_plan(const WeightedMeander& wm, const FinalPushPolicy& policy) {
    const auto rep = validate_weights(wm);
    if (!rep.valid) throw std::invalid_argument("make_plan: " + rep.message);

    Plan plan;
    plan.source = canonical_key(wm);
    plan.bound = Rational(wm.meander.n) / 8 + 1;

    WeightedMeander state = wm;
    while (true) {
        const RegionGraph g = build_graph(state);
        const RootedTree black = tree_view(g, Color::Black);
        const auto pick = pick_leaf(g, black);
        if (!pick) {
            // star stage: one push absorbs the remaining petals
            Rational push(0);
            for (const auto& v : g.vertices)
                if (!v.is_root && v.color == Color::Black) push += v.weight;
            if (policy.max_over_both_colors) {
                Rational white(0);
                for (const auto& v : g.vertices)
                    if (!v.is_root && v.color == Color::White) white += v.weight;
                push = std::max(push, white);
            }
            Move final;
            final.kind = Move::Kind::FinalPush;
            final.cost = push;
            plan.moves.push_back(final);
            plan.total_cost += push;
            break;
        }
        Move mv;
        mv.kind = Move::Kind::Transfer;
        mv.leaf = g.vertices[pick->leaf].id;
        mv.via = g.vertices[pick->via].id;
        mv.target = g.vertices[pick->target].id;
        mv.cost = g.vertices[pick->leaf].weight;
        plan.moves.push_back(mv);
        plan.total_cost += mv.cost;
        state = reduce_leaf(state, mv.leaf, mv.target);
    }
    plan.certified = plan.total_cost <= plan.bound;
    return plan;
}

Trace execute_plan(const WeightedMeander& wm, const Plan& plan) {
    if (plan.source != canonical_key(wm))
        throw std::invalid_argument("execute_plan: plan was made for a different input");
    Trace trace;
    trace.states.push_back(wm);
    for (std::size_t i = 0; i < plan.moves.size(); ++i) {
        const Move& mv = plan.moves[i];
        const WeightedMeander& cur = trace.states.back();
        WeightedMeander next;
        if (mv.kind == Move::Kind::Transfer) {
            try {
                next = reduce_leaf(cur, mv.leaf, mv.target);
            } catch (const std::exception& e) {
                throw std::runtime_error("execute_plan: move " + std::to_string(i) +
                                         " failed: " + e.what());
            }
            if (next.meander.n != cur.meander.n - 2)
                throw std::runtime_error("execute_plan: move " + std::to_string(i) +
                                         " did not remove exactly two crossings");
        } else {
            next = terminal_state();
        }
        const auto rep = validate_weights(next);
        if (!rep.valid)
            throw std::runtime_error("execute_plan: state after move " + std::to_string(i) +
                                     " is invalid: " + rep.message);
        trace.states.push_back(std::move(next));
    }
    return trace;
}

Rational closed_form_cost(const RegionGraph& g) {
    const RootedTree black = tree_view(g, Color::Black);
    Rational cost(0);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.vertices[v].color != Color::Black || g.vertices[v].is_root) continue;
        const int d = black.depth[v];
        if (d < 0) throw std::invalid_argument("closed_form_cost: black class is disconnected");
        cost += g.vertices[v].weight * Rational((d + 1) / 2);
    }
    return cost;
}

Certificate bound_certificate(const Plan& plan, int n) {
    Certificate cert;
    const Rational bound = Rational(n) / 8 + 1;
    cert.certified = plan.total_cost <= bound;
    cert.margin = bound - plan.total_cost;
    return cert;
}

}  // namespace hofer
