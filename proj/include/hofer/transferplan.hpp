#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hofer/regiongraph.hpp"

namespace hofer {

// One step of the deformation plan. A Transfer deletes a depth>=2 black leaf
// and moves its weight two tree steps rootward at a cost equal to the moved
// weight; the FinalPush flattens the remaining star onto the axis at a cost
// equal to the black non-root weight still present. Region ids refer to the
// weighted meander state the move is applied to.
struct Move {
    enum class Kind { Transfer, FinalPush };
    Kind kind = Kind::Transfer;
    RegionId leaf;
    RegionId via;
    RegionId target;
    Rational cost;
};

struct Plan {
    std::string source;  // canonical key of the input weighted meander
    std::vector<Move> moves;
    Rational total_cost;
    Rational bound;  // n/8 + 1
    bool certified = false;
};

struct Trace {
    std::vector<WeightedMeander> states;  // input state first, terminal last
};

struct FinalPushPolicy {
    // The push cost sums one color's non-root weights (the black tree is the
    // one being pruned). The max-over-both-colors alternative is exposed for
    // comparison runs but is not used by the certification path.
    bool max_over_both_colors = false;
};

// Deepest black leaf first, ties broken by the smaller leftmost-edge index;
// every transfer targets the grandparent. Ends with one FinalPush.
Plan make_plan(const WeightedMeander& wm, const FinalPushPolicy& policy = {});

// Replays a plan move by move, validating every intermediate state. The
// terminal state is the empty meander with both root weights 1/2.
Trace execute_plan(const WeightedMeander& wm, const Plan& plan);

// Order-independent exact cost of the pruning strategy:
// sum over black non-root vertices of w(v) * ceil(depth(v)/2).
Rational closed_form_cost(const RegionGraph& g);

struct Certificate {
    bool certified = false;
    Rational margin;  // bound - total_cost
};

Certificate bound_certificate(const Plan& plan, int n);

WeightedMeander terminal_state();

}  // namespace hofer
