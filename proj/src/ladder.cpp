#include "riskpref/ladder.hpp"

#include <algorithm>
#include <cmath>

namespace riskpref {

SureOptionLadder build_ladder(const Prospect& prospect, std::size_t n_rungs) {
    if (n_rungs < 3) throw ValidationError("build_ladder: need at least 3 rungs");

    const double a1 = std::abs(prospect.x1);
    const double a2 = std::abs(prospect.x2);
    if (a1 == a2) {
        throw DegenerateProspectError("build_ladder: |x_max| == |x_min| leaves no rendering order");
    }
    const double hi = a1 > a2 ? prospect.x1 : prospect.x2;  // larger magnitude, rendered first
    const double lo = a1 > a2 ? prospect.x2 : prospect.x1;

    SureOptionLadder ladder{{}, prospect, SureOptionLadder::Spacing::Geometric};
    ladder.rungs.reserve(n_rungs);

    const double steps = static_cast<double>(n_rungs - 1);
    if (hi * lo > 0.0) {
        const double sign = hi > 0.0 ? 1.0 : -1.0;
        const double ratio = std::abs(lo) / std::abs(hi);
        for (std::size_t i = 0; i < n_rungs; ++i) {
            ladder.rungs.push_back(sign * std::abs(hi) *
                                   std::pow(ratio, static_cast<double>(i) / steps));
        }
    } else {
        ladder.spacing = SureOptionLadder::Spacing::Arithmetic;
        for (std::size_t i = 0; i < n_rungs; ++i) {
            ladder.rungs.push_back(hi + (lo - hi) * static_cast<double>(i) / steps);
        }
    }
    // Endpoints are the prospect's extreme outcomes exactly.
    ladder.rungs.front() = hi;
    ladder.rungs.back() = lo;
    return ladder;
}

std::vector<std::size_t> preference_order(const SureOptionLadder& ladder) {
    std::vector<std::size_t> order(ladder.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ladder.rungs[a] > ladder.rungs[b];
    });
    return order;
}

DecisionSequence optimal_decisions(const Prospect& prospect, const SureOptionLadder& ladder,
                                   const PTParams& params) {
    const double utility = prospect_utility(prospect, params);
    DecisionSequence decisions;
    decisions.reserve(ladder.size());
    for (double rung : ladder.rungs) {
        decisions.push_back(value(rung, params) >= utility ? Decision::Accept : Decision::Reject);
    }
    return decisions;
}

}  // namespace riskpref
