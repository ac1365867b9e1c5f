#include "hcnsim/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hcnsim {

namespace {

// 7-15 Gauss-Kronrod pairs: abscissa, embedded Gauss weight (0 on
// Kronrod-only nodes), Kronrod weight.
struct GkNode {
    double x;
    double gw;
    double kw;
};

constexpr GkNode kNodes[8] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.207784955007898, 0.000000000000000, 0.204432940075298},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.586087235467691, 0.000000000000000, 0.169004726639267},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.864864423359769, 0.000000000000000, 0.104790010322250},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.991455371120813, 0.000000000000000, 0.022935322010529},
};

struct PanelEval {
    double value = 0.0;
    double err = 0.0;
};

PanelEval eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double f0 = f(mid);
    double k15 = f0 * kNodes[0].kw;
    double g7 = f0 * kNodes[0].gw;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kNodes[i].x;
        const double s = f(mid - dx) + f(mid + dx);
        k15 += s * kNodes[i].kw;
        g7 += s * kNodes[i].gw;
    }
    k15 *= h;
    g7 *= h;
    PanelEval out;
    out.value = k15;
    if (!std::isfinite(k15)) {
        out.err = std::numeric_limits<double>::infinity();
        return out;
    }
    const double diff = std::abs(k15 - g7);
    out.err = std::min(diff, std::pow(200.0 * diff, 1.5));
    return out;
}

// Hard cap on panel evaluations per integrate() call; keeps divergent
// integrands from exploding the refinement tree before max_depth binds.
constexpr long kPanelBudget = 100000;

void refine(const std::function<double(double)>& f, double a, double b, double tol, int depth,
            long& budget, double& value, double& err) {
    const PanelEval e = eval_panel(f, a, b);
    --budget;
    if (depth <= 0 || budget <= 0 || e.err <= tol) {
        value += e.value;
        err += e.err;
        return;
    }
    const double mid = 0.5 * (a + b);
    refine(f, a, mid, 0.5 * tol, depth - 1, budget, value, err);
    refine(f, mid, b, 0.5 * tol, depth - 1, budget, value, err);
}

}  // namespace

IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const Quadrature& quad) {
    if (!(std::isfinite(a) && std::isfinite(b) && a <= b))
        throw std::invalid_argument("integration bounds must be finite with a <= b");
    if (a == b) return IntegralResult{0.0, 0.0};
    const PanelEval first = eval_panel(f, a, b);
    const double scale = std::isfinite(first.value) ? std::abs(first.value) : 0.0;
    const double tol = std::max(quad.abs_tol, quad.rel_tol * scale);
    IntegralResult out;
    long budget = kPanelBudget;
    refine(f, a, b, tol, quad.max_depth, budget, out.value, out.error_bound);
    const double final_tol = std::max(quad.abs_tol, quad.rel_tol * std::abs(out.value));
    if (!(out.error_bound <= final_tol))
        throw ConvergenceError("quadrature did not reach the requested tolerance", out.value,
                               out.error_bound);
    return out;
}

IntegralResult integrate_improper(const std::function<double(double)>& f, const Quadrature& quad) {
    Quadrature panel_quad = quad;
    panel_quad.abs_tol = quad.abs_tol / 64.0;
    panel_quad.rel_tol = quad.rel_tol / 8.0;
    IntegralResult out;
    double lo = 0.0;
    double hi = 1.0;
    int consecutive_small = 0;
    bool tail_done = false;
    for (int i = 0; i < 64; ++i) {
        IntegralResult part;
        try {
            part = integrate(f, lo, hi, panel_quad);
        } catch (const ConvergenceError& e) {
            throw ConvergenceError("improper integral panel did not converge",
                                   out.value + e.best_estimate, e.error_bound);
        }
        out.value += part.value;
        out.error_bound += part.error_bound;
        if (std::abs(part.value) < quad.abs_tol / 100.0) {
            if (++consecutive_small >= 2) {
                tail_done = true;
                break;
            }
        } else {
            consecutive_small = 0;
        }
        lo = hi;
        hi *= 2.0;
    }
    if (!tail_done)
        throw ConvergenceError("improper integral tail did not decay", out.value, out.error_bound);
    const double final_tol = std::max(quad.abs_tol, quad.rel_tol * std::abs(out.value));
    if (!(out.error_bound <= final_tol))
        throw ConvergenceError("improper integral did not reach the requested tolerance",
                               out.value, out.error_bound);
    return out;
}

double victim_distance_pdf(double r, double ms_intensity) {
    return nearest_distance_pdf(r, ms_intensity);
}

double victim_distance_cdf(double r, double ms_intensity) {
    return nearest_distance_cdf(r, ms_intensity);
}

double mean_candidate_count(const NetworkConfig& config) {
    return 1.0 / config.cochannel_fraction();
}

double mean_candidate_count_by_integral(const NetworkConfig& config, const Quadrature& quad) {
    const double lam_norm = normalized_intensity(config);
    const double lam_co = config.cochannel_fraction() * lam_norm;
    const auto disc_content = [lam_norm, lam_co](double r) {
        return lam_norm * std::numbers::pi * r * r * nearest_distance_pdf(r, lam_co);
    };
    return integrate_improper(disc_content, quad).value;
}

double r_opt_cdf(double r, double ms_intensity, double n_ty) {
    if (!(std::isfinite(n_ty) && n_ty >= 1.0))
        throw std::invalid_argument("candidate count must be finite and at least 1");
    if (!(r >= 0.0)) return 0.0;
    return std::pow(victim_distance_cdf(r, ms_intensity), n_ty);
}

double r_opt_pdf(double r, double ms_intensity, double n_ty) {
    if (!(std::isfinite(n_ty) && n_ty >= 1.0))
        throw std::invalid_argument("candidate count must be finite and at least 1");
    if (!(r >= 0.0)) return 0.0;
    return victim_distance_pdf(r, ms_intensity) * n_ty *
           std::pow(victim_distance_cdf(r, ms_intensity), n_ty - 1.0);
}

double interference_prefactor(const NetworkConfig& config) {
    const double expo = 2.0 / config.alpha();
    double num = 0.0;
    double den = 0.0;
    for (const auto& t : config.tiers()) {
        num += t.intensity * std::pow(t.power, expo + 1.0);
        den += t.intensity * std::pow(t.power, expo);
    }
    return num / den;
}

InterferenceEstimate expected_interference_conventional(const NetworkConfig& config,
                                                        const PathLossModel& model,
                                                        const Quadrature& quad) {
    const double lam_ms = config.ms_intensity();
    const auto integrand = [&model, lam_ms](double r) {
        return model.gain(r) * victim_distance_pdf(r, lam_ms);
    };
    const IntegralResult base = integrate_improper(integrand, quad);
    const double pre = interference_prefactor(config);
    return InterferenceEstimate{pre * base.value, pre * base.error_bound,
                                EstimateMethod::quadrature};
}

InterferenceEstimate expected_interference_proposed(const NetworkConfig& config,
                                                    const PathLossModel& model, double n_ty,
                                                    const Quadrature& quad) {
    if (!(std::isfinite(n_ty) && n_ty >= 1.0))
        throw std::invalid_argument("candidate count must be finite and at least 1");
    const double lam_ms = config.ms_intensity();
    const auto integrand = [&model, lam_ms, n_ty](double r) {
        return model.gain(r) * r_opt_pdf(r, lam_ms, n_ty);
    };
    const IntegralResult base = integrate_improper(integrand, quad);
    const double pre = interference_prefactor(config);
    return InterferenceEstimate{pre * base.value, pre * base.error_bound,
                                EstimateMethod::quadrature};
}

}  // namespace hcnsim
