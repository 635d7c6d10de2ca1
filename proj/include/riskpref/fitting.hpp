#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include "riskpref/elicit.hpp"
#include "riskpref/prospect.hpp"

namespace riskpref {

/// Box the fitter searches. Narrower than the PTParams construction box:
/// covers the canonical human estimates with margin, and the 0.28 lower
/// bound on the curvature exponents keeps the weighting form monotone and
/// the powers well-conditioned.
struct FitBox {
    std::array<double, 4> lo{0.28, 0.28, 0.1, 0.28};
    std::array<double, 4> hi{2.5, 2.5, 5.0, 1.5};
};

struct FitConfig {
    FitBox box;
    int max_iterations = 2000;     // Nelder-Mead iterations per start
    double tolerance = 1e-6;       // simplex diameter in box-scaled space
};

struct FitResult {
    PTParams params;
    double rss = 0.0;          // residual sum of squares, money squared
    int n_obs = 0;
    int n_censored = 0;
    bool converged = false;    // every start reached the simplex tolerance
    int starts_tried = 0;
    /// False when the observations contain no mixed-sign prospect; pure-sign
    /// certainty equivalents are invariant to lambda, so the reported lambda
    /// is then an artifact of the start lattice.
    bool lambda_identified = false;
};

/// A battery of elicitation prospects.
struct Battery {
    std::vector<Prospect> prospects;

    bool has(Prospect::Composition c) const;
};

/// Deterministic default battery: four gain families {(200,100), (400,100),
/// (100,0), (150,50)} crossed with p1 in {0.25, 0.5, 0.75}, their mirrored
/// loss versions, four mixed prospects {(120,-80), (200,-100)} x p1 in
/// {0.3, 0.7}, with the (200, 100, 0.3, 0.7) gamble from the elicitation
/// prompt leading the list.
Battery default_battery();

/// One prospect per line as JSON {x1, x2, p1, p2}.
Battery load_battery(const std::filesystem::path& path);
void save_battery(const Battery& battery, const std::filesystem::path& path);

/// Fit residuals in money units. Uncensored observations contribute
/// ce_empirical - ce_theoretical. Censored observations contribute a
/// one-sided hinge: zero when the theoretical CE is at or beyond the
/// censoring bound in the censored direction, otherwise the gap back to the
/// bound. Throws EmptyBatteryError on an empty list.
std::vector<double> residuals(const PTParams& params, const std::vector<CEObservation>& obs);

/// Sum of squared residuals.
double objective_rss(const PTParams& params, const std::vector<CEObservation>& obs);

/// The fixed start lattice: {0.6, 1.0, 1.4}^2 x {0.5, 1.0, 2.5} x
/// {0.5, 1.0} plus the canonical human-estimate point
/// (0.88, 0.88, 2.25, 0.65), in a deterministic order.
std::vector<std::array<double, 4>> fit_start_lattice();

/// Least-squares parameter estimate over the fitting box: Nelder-Mead with
/// trial points clamped to the box, restarted from every lattice start; the
/// best final RSS wins, ties broken by lattice index. Deterministic for
/// identical observations and config.
FitResult fit_pt_params(const std::vector<CEObservation>& obs, const FitConfig& config = {});

}  // namespace riskpref
