#pragma once

#include <cmath>
#include <vector>

#include "riskpref/errors.hpp"

namespace riskpref {

/// Prospect-theory parameter quadruple.
///
/// alpha: curvature of the value function over gains.
/// beta: curvature over losses.
/// lambda: loss-aversion multiplier applied to losses.
/// phi: curvature of the probability-weighting function.
///
/// Construction accepts the wide sanity box [0.05, 10] per field; the fit
/// itself is constrained to the narrower FitBox (see fitting.hpp).
struct PTParams {
    static constexpr double kMin = 0.05;
    static constexpr double kMax = 10.0;

    double alpha;
    double beta;
    double lambda;
    double phi;

    PTParams(double alpha_, double beta_, double lambda_, double phi_)
        : alpha(alpha_), beta(beta_), lambda(lambda_), phi(phi_) {
        for (double v : {alpha, beta, lambda, phi}) {
            if (!std::isfinite(v) || v < kMin || v > kMax) {
                throw ValidationError("PTParams value outside [0.05, 10]: " + std::to_string(v));
            }
        }
    }

    static PTParams risk_neutral() { return PTParams(1.0, 1.0, 1.0, 1.0); }
};

/// A two-outcome gamble: x1 with probability p1, x2 with probability p2.
struct Prospect {
    double x1;
    double x2;
    double p1;
    double p2;

    Prospect(double x1_, double x2_, double p1_, double p2_) : x1(x1_), x2(x2_), p1(p1_), p2(p2_) {
        if (!std::isfinite(x1) || !std::isfinite(x2) || x1 == x2) {
            throw ValidationError("degenerate prospect: outcomes must be finite and distinct");
        }
        if (p1 < 0.0 || p1 > 1.0 || p2 < 0.0 || p2 > 1.0 || std::abs(p1 + p2 - 1.0) > 1e-9) {
            throw ValidationError("prospect probabilities must lie in [0,1] and sum to 1");
        }
    }

    double expected_value() const { return x1 * p1 + x2 * p2; }

    enum class Composition { GainOnly, LossOnly, Mixed };

    Composition composition() const {
        if (x1 >= 0.0 && x2 >= 0.0) return Composition::GainOnly;
        if (x1 <= 0.0 && x2 <= 0.0) return Composition::LossOnly;
        return Composition::Mixed;
    }

    friend bool operator==(const Prospect& a, const Prospect& b) {
        return a.x1 == b.x1 && a.x2 == b.x2 && a.p1 == b.p1 && a.p2 == b.p2;
    }
};

enum class Decision { Accept, Reject };

/// One Accept/Reject per ladder rung, in rendered rung order.
using DecisionSequence = std::vector<Decision>;

/// Power value function: x^alpha for gains, -lambda * (-x)^beta for losses.
inline double value(double x, const PTParams& params) {
    if (x >= 0.0) return std::pow(x, params.alpha);
    return -params.lambda * std::pow(-x, params.beta);
}

/// Probability weighting w(p) = p^phi / (p^phi + (1-p)^phi)^(1/phi).
/// Exact at the endpoints: w(0) = 0, w(1) = 1.
inline double weight(double p, const PTParams& params) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("weight: probability outside [0,1]: " + std::to_string(p));
    }
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    const double num = std::pow(p, params.phi);
    const double den = std::pow(num + std::pow(1.0 - p, params.phi), 1.0 / params.phi);
    return num / den;
}

/// Per-outcome weighted prospect utility: v(x1) w(p1) + v(x2) w(p2).
/// Each probability is weighted independently (no rank-dependent transform).
inline double prospect_utility(const Prospect& prospect, const PTParams& params) {
    return value(prospect.x1, params) * weight(prospect.p1, params) +
           value(prospect.x2, params) * weight(prospect.p2, params);
}

/// Inverse of the value function, mapping utility back to money.
inline double inverse_value(double u, const PTParams& params) {
    if (u >= 0.0) return std::pow(u, 1.0 / params.alpha);
    return -std::pow(-u / params.lambda, 1.0 / params.beta);
}

/// Sure amount whose value equals the prospect's utility.
inline double certainty_equivalent(const Prospect& prospect, const PTParams& params) {
    return inverse_value(prospect_utility(prospect, params), params);
}

}  // namespace riskpref
