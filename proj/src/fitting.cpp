#include "riskpref/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "riskpref/errors.hpp"

namespace riskpref {

using nlohmann::json;

bool Battery::has(Prospect::Composition c) const {
    return std::any_of(prospects.begin(), prospects.end(),
                       [c](const Prospect& p) { return p.composition() == c; });
}

Battery default_battery() {
    Battery battery;
    battery.prospects.emplace_back(200.0, 100.0, 0.3, 0.7);

    const std::array<std::pair<double, double>, 4> gain_pairs = {
        {{200.0, 100.0}, {400.0, 100.0}, {100.0, 0.0}, {150.0, 50.0}}};
    const std::array<double, 3> probs = {0.25, 0.5, 0.75};
    for (const auto& [x1, x2] : gain_pairs) {
        for (double p : probs) battery.prospects.emplace_back(x1, x2, p, 1.0 - p);
    }
    for (const auto& [x1, x2] : gain_pairs) {
        for (double p : probs) battery.prospects.emplace_back(-x1, -x2, p, 1.0 - p);
    }
    const std::array<std::pair<double, double>, 2> mixed_pairs = {{{120.0, -80.0}, {200.0, -100.0}}};
    for (const auto& [x1, x2] : mixed_pairs) {
        for (double p : {0.3, 0.7}) battery.prospects.emplace_back(x1, x2, p, 1.0 - p);
    }
    return battery;
}

Battery load_battery(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open battery file: " + path.string());
    Battery battery;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const json record = json::parse(line);
            battery.prospects.emplace_back(record.at("x1").get<double>(),
                                           record.at("x2").get<double>(),
                                           record.at("p1").get<double>(),
                                           record.at("p2").get<double>());
        } catch (const ValidationError& e) {
            throw SchemaError("battery file line " + std::to_string(line_no) + ": " + e.what());
        } catch (const json::exception& e) {
            throw SchemaError("battery file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return battery;
}

void save_battery(const Battery& battery, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write battery file: " + path.string());
    for (const Prospect& p : battery.prospects) {
        out << json{{"x1", p.x1}, {"x2", p.x2}, {"p1", p.p1}, {"p2", p.p2}}.dump() << '\n';
    }
}

std::vector<double> residuals(const PTParams& params, const std::vector<CEObservation>& obs) {
    if (obs.empty()) throw EmptyBatteryError("residuals: no observations");
    std::vector<double> out;
    out.reserve(obs.size());
    for (const CEObservation& o : obs) {
        const double theory = certainty_equivalent(o.prospect, params);
        switch (o.censoring) {
            case Censoring::None:
                out.push_back(o.ce - theory);
                break;
            case Censoring::AtBest:
                // True CE at or above the most-preferred rung.
                out.push_back(std::max(0.0, o.ce - theory));
                break;
            case Censoring::AtWorst:
                out.push_back(std::max(0.0, theory - o.ce));
                break;
        }
    }
    return out;
}

double objective_rss(const PTParams& params, const std::vector<CEObservation>& obs) {
    const std::vector<double> r = residuals(params, obs);
    return std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
}

std::vector<std::array<double, 4>> fit_start_lattice() {
    std::vector<std::array<double, 4>> starts;
    for (double a : {0.6, 1.0, 1.4}) {
        for (double b : {0.6, 1.0, 1.4}) {
            for (double l : {0.5, 1.0, 2.5}) {
                for (double p : {0.5, 1.0}) starts.push_back({a, b, l, p});
            }
        }
    }
    starts.push_back({0.88, 0.88, 2.25, 0.65});
    return starts;
}

namespace {

using Point = std::array<double, 4>;

Point clamp_to_box(Point x, const FitBox& box) {
    for (std::size_t i = 0; i < 4; ++i) x[i] = std::clamp(x[i], box.lo[i], box.hi[i]);
    return x;
}

struct NelderMeadOutcome {
    Point x;
    double f;
    bool converged;
};

/// Derivative-free simplex descent with trial points projected onto the
/// box. Convergence is measured as the simplex infinity-diameter in
/// box-scaled coordinates.
NelderMeadOutcome nelder_mead(const std::function<double(const Point&)>& f, Point start,
                              const FitBox& box, int max_iterations, double tolerance) {
    constexpr std::size_t kDim = 4;
    std::array<double, 4> width{};
    for (std::size_t i = 0; i < kDim; ++i) width[i] = box.hi[i] - box.lo[i];

    std::vector<Point> simplex;
    simplex.push_back(clamp_to_box(start, box));
    for (std::size_t i = 0; i < kDim; ++i) {
        Point p = start;
        p[i] += 0.1 * width[i];
        if (p[i] > box.hi[i]) p[i] = start[i] - 0.1 * width[i];
        simplex.push_back(clamp_to_box(p, box));
    }
    std::vector<double> fv(simplex.size());
    for (std::size_t i = 0; i < simplex.size(); ++i) fv[i] = f(simplex[i]);

    auto order_simplex = [&] {
        std::vector<std::size_t> idx(simplex.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        std::vector<Point> s2;
        std::vector<double> f2;
        for (std::size_t i : idx) {
            s2.push_back(simplex[i]);
            f2.push_back(fv[i]);
        }
        simplex = std::move(s2);
        fv = std::move(f2);
    };

    bool converged = false;
    for (int iter = 0; iter < max_iterations; ++iter) {
        order_simplex();

        double diameter = 0.0;
        for (std::size_t v = 1; v < simplex.size(); ++v) {
            for (std::size_t i = 0; i < kDim; ++i) {
                diameter = std::max(diameter,
                                    std::abs(simplex[v][i] - simplex[0][i]) / width[i]);
            }
        }
        if (diameter < tolerance) {
            converged = true;
            break;
        }

        Point centroid{};
        for (std::size_t v = 0; v + 1 < simplex.size(); ++v) {
            for (std::size_t i = 0; i < kDim; ++i) centroid[i] += simplex[v][i];
        }
        for (std::size_t i = 0; i < kDim; ++i) centroid[i] /= static_cast<double>(kDim);

        const Point& worst = simplex.back();
        Point reflected;
        for (std::size_t i = 0; i < kDim; ++i) reflected[i] = centroid[i] + (centroid[i] - worst[i]);
        reflected = clamp_to_box(reflected, box);
        const double fr = f(reflected);

        if (fr < fv.front()) {
            Point expanded;
            for (std::size_t i = 0; i < kDim; ++i) {
                expanded[i] = centroid[i] + 2.0 * (centroid[i] - worst[i]);
            }
            expanded = clamp_to_box(expanded, box);
            const double fe = f(expanded);
            if (fe < fr) {
                simplex.back() = expanded;
                fv.back() = fe;
            } else {
                simplex.back() = reflected;
                fv.back() = fr;
            }
        } else if (fr < fv[fv.size() - 2]) {
            simplex.back() = reflected;
            fv.back() = fr;
        } else {
            Point contracted;
            if (fr < fv.back()) {
                for (std::size_t i = 0; i < kDim; ++i) {
                    contracted[i] = centroid[i] + 0.5 * (reflected[i] - centroid[i]);
                }
            } else {
                for (std::size_t i = 0; i < kDim; ++i) {
                    contracted[i] = centroid[i] + 0.5 * (worst[i] - centroid[i]);
                }
            }
            contracted = clamp_to_box(contracted, box);
            const double fc = f(contracted);
            if (fc < std::min(fr, fv.back())) {
                simplex.back() = contracted;
                fv.back() = fc;
            } else {
                // Shrink toward the best vertex.
                for (std::size_t v = 1; v < simplex.size(); ++v) {
                    for (std::size_t i = 0; i < kDim; ++i) {
                        simplex[v][i] = simplex[0][i] + 0.5 * (simplex[v][i] - simplex[0][i]);
                    }
                    simplex[v] = clamp_to_box(simplex[v], box);
                    fv[v] = f(simplex[v]);
                }
            }
        }
    }

    order_simplex();
    return NelderMeadOutcome{simplex.front(), fv.front(), converged};
}

}  // namespace

FitResult fit_pt_params(const std::vector<CEObservation>& obs, const FitConfig& config) {
    if (obs.empty()) throw EmptyBatteryError("fit_pt_params: no observations");

    const auto objective = [&obs](const Point& x) {
        return objective_rss(PTParams(x[0], x[1], x[2], x[3]), obs);
    };

    const auto starts = fit_start_lattice();
    NelderMeadOutcome best{};
    bool all_converged = true;
    bool have_best = false;
    for (const Point& start : starts) {
        const NelderMeadOutcome outcome = nelder_mead(objective, clamp_to_box(start, config.box),
                                                      config.box, config.max_iterations,
                                                      config.tolerance);
        all_converged = all_converged && outcome.converged;
        if (!have_best || outcome.f < best.f) {  // ties keep the earlier lattice index
            best = outcome;
            have_best = true;
        }
    }

    FitResult result{PTParams(best.x[0], best.x[1], best.x[2], best.x[3]),
                     best.f,
                     static_cast<int>(obs.size()),
                     0,
                     all_converged,
                     static_cast<int>(starts.size()),
                     false};
    for (const CEObservation& o : obs) {
        if (o.censoring != Censoring::None) ++result.n_censored;
        if (o.prospect.composition() == Prospect::Composition::Mixed) {
            result.lambda_identified = true;
        }
    }
    return result;
}

}  // namespace riskpref
