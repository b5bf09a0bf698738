#pragma once

// Limit laws: the JUE spectral density, the Howe-dual particle density and
// its limit shape, the transition measure on the band, Stieltjes transforms,
// and the Markov-Krein correspondence linking shape and measure.
//
// Conventions. A DensityModel carries a continuous part supported on [a, b]
// plus point atoms. Normalized models satisfy continuous + atom mass = 1.
// Atoms are kept symbolically (location, mass) and never folded into the
// continuous component. All square-root edges are integrated through the
// cosine substitution (see quadrature.hpp).

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "skewjue/quadrature.hpp"

namespace skewjue {

struct Atom {
    double location = 0.0;
    double mass = 0.0;
};

struct DensityModel {
    std::function<double(double)> density;  // continuous part, 0 outside [a, b]
    double a = 0.0;                         // support interval of the continuous part
    double b = 0.0;
    std::vector<Atom> atoms;
    bool normalized = true;  // whether continuous + atoms should carry total mass 1

    double atom_mass() const {
        double m = 0.0;
        for (const Atom& at : atoms) m += at.mass;
        return m;
    }
    double continuous_mass(int n = 400) const { return band_integral(density, a, b, n); }
    double total_mass(int n = 400) const { return continuous_mass(n) + atom_mass(); }
};

// Spectral edges lambda_-+ of the JUE limit law.
inline std::pair<double, double> jue_edges(double c_alpha, double c_beta) {
    const double s = c_alpha + c_beta;
    if (!(c_alpha > 0.0) || !(c_beta > 0.0) || !(s > 1.0))
        throw std::invalid_argument("jue_edges: need c_alpha, c_beta > 0 and c_alpha + c_beta > 1");
    const double base = c_alpha * (s - 1.0) + c_beta;
    const double gap = 2.0 * std::sqrt(c_alpha * c_beta * (s - 1.0));
    return {(base - gap) / (s * s), (base + gap) / (s * s)};
}

// Limiting eigenvalue distribution of the Jacobi ensemble with rectangularity
// parameters (c_alpha, c_beta): an arcsine-like bulk on (lambda_-, lambda_+)
// plus deterministic atoms at 0 and 1 when a dimension deficit forces exact
// eigenvalues there. Total mass is exactly 1.
inline DensityModel jue_limit_density(double c_alpha, double c_beta) {
    auto [lo, hi] = jue_edges(c_alpha, c_beta);
    const double s = c_alpha + c_beta;
    const double pi = std::acos(-1.0);
    DensityModel model;
    model.a = lo;
    model.b = hi;
    model.density = [lo, hi, s, pi](double x) {
        const double q = (hi - x) * (x - lo);
        if (q <= 0.0 || x <= 0.0 || x >= 1.0) return 0.0;
        return s * std::sqrt(q) / (2.0 * pi * x * (1.0 - x));
    };
    if (c_alpha < 1.0) model.atoms.push_back({0.0, 1.0 - c_alpha});
    if (c_beta < 1.0) model.atoms.push_back({1.0, 1.0 - c_beta});
    model.normalized = true;
    return model;
}

// Asymptotic regime of the dual-pair particle system: rows/columns scale as
// k ~ c n and the diagram fills a fraction controlled by alpha_h.
struct HoweAsymptoticParams {
    double c = 1.0;
    double alpha_h = 1.0;

    double zeta() const { return std::log(alpha_h); }
    void validate() const {
        if (!(c > 0.0) || !(alpha_h > 0.0))
            throw std::invalid_argument("HoweAsymptoticParams: need c > 0 and alpha_h > 0");
    }
};

// Band endpoints t_-+ of the Howe particle density.
inline std::pair<double, double> howe_band(const HoweAsymptoticParams& params) {
    params.validate();
    const double gap = 2.0 * std::sqrt(params.alpha_h * params.c);
    const double base = params.alpha_h * (params.c - 1.0);
    const double den = params.alpha_h + 1.0;
    return {(base - gap) / den, (base + gap) / den};
}

namespace detail {

// Argument of the arccos in the particle density; +-inf signs encode the
// saturated (rho = 1) and vacuum (rho = 0) plateaus outside the band.
inline double howe_acos_arg(const HoweAsymptoticParams& params, double x) {
    const double num = params.alpha_h * (params.c - 1.0) + x * (1.0 - params.alpha_h);
    const double q = params.alpha_h * (params.c - x) * (x + 1.0);
    if (q <= 0.0) {
        if (num > 0.0) return std::numeric_limits<double>::infinity();
        if (num < 0.0) return -std::numeric_limits<double>::infinity();
        return 0.0;
    }
    return num / (2.0 * std::sqrt(q));
}

}  // namespace detail

// Particle density rho on [-1, c]: arccos profile on the band, clamped to
// the plateaus rho = 1 (saturated) and rho = 0 (vacuum) outside it. This is
// a density of particles per unit length, not a probability density; its
// integral over [-1, c] equals 1 by particle count, so normalized = false
// and the model records the support of the full profile.
inline DensityModel howe_limit_density(const HoweAsymptoticParams& params) {
    params.validate();
    const double pi = std::acos(-1.0);
    DensityModel model;
    model.a = -1.0;
    model.b = params.c;
    model.density = [params, pi](double x) {
        if (x <= -1.0 || x >= params.c) return 0.0;
        const double arg = std::clamp(detail::howe_acos_arg(params, x), -1.0, 1.0);
        return std::acos(arg) / pi;
    };
    model.normalized = false;
    return model;
}

// Transition measure of the limit shape: arcsine-like bulk on [t_-, t_+]
// plus boundary atoms when a plateau touches the corresponding endpoint.
// Under x = (c+1) y - 1 this pushes forward to the JUE law with
// c_alpha = (1 + 1/alpha_h)/(1 + c), c_beta = c * c_alpha.
inline DensityModel howe_transition_measure(const HoweAsymptoticParams& params) {
    auto [lo, hi] = howe_band(params);
    const double al = params.alpha_h;
    const double c = params.c;
    const double pi = std::acos(-1.0);
    DensityModel model;
    model.a = lo;
    model.b = hi;
    model.density = [lo, hi, al, c, pi](double x) {
        const double q = (hi - x) * (x - lo);
        if (q <= 0.0 || x <= -1.0 || x >= c) return 0.0;
        return (1.0 + al) * std::sqrt(q) / (2.0 * pi * al * (c - x) * (x + 1.0));
    };
    const double left = (al * c - 1.0) / (al * (c + 1.0));
    const double right = (al - c) / (al * (c + 1.0));
    if (left > 0.0) model.atoms.push_back({-1.0, left});
    if (right > 0.0) model.atoms.push_back({c, right});
    model.normalized = true;
    return model;
}

// Continuous limit shape Omega on [-1, c]: Omega(x) = 1 - x + 2 * integral
// of rho over [-1, x], equivalently Omega' = 1 - 2 rho. Plateaus contribute
// exact linear pieces; the band is accumulated in the theta variable where
// the profile is smooth. Queries clamp to |x|-type tails outside [-1, c].
class LimitShape {
  public:
    explicit LimitShape(const HoweAsymptoticParams& params, int panels = 2048)
        : params_(params), panels_(panels) {
        params_.validate();
        std::tie(t_lo_, t_hi_) = howe_band(params_);
        t_lo_ = std::max(t_lo_, -1.0);
        t_hi_ = std::min(t_hi_, params_.c);
        rho_left_ = density_value(0.5 * (-1.0 + t_lo_));
        rho_right_ = density_value(0.5 * (t_hi_ + params_.c));
        omega_at_tlo_ = 1.0 + (1.0 - 2.0 * rho_left_) * (t_lo_ + 1.0);
        mid_ = 0.5 * (t_lo_ + t_hi_);
        rad_ = 0.5 * (t_hi_ - t_lo_);
        const double pi = std::acos(-1.0);
        cum_.assign(static_cast<std::size_t>(panels_) + 1, 0.0);
        double acc = omega_at_tlo_ - t_lo_;  // accumulate Omega(x) - x for exactness at edges
        for (int i = 0; i < panels_; ++i) {
            const double th0 = pi * i / panels_;
            const double th1 = pi * (i + 1) / panels_;
            acc += integrate_gl([this](double th) { return slope_theta(th); }, th0, th1, 8);
            cum_[static_cast<std::size_t>(i) + 1] = acc;
        }
    }

    double operator()(double x) const {
        if (x <= -1.0) return -x;
        if (x <= t_lo_) return 1.0 + (1.0 - 2.0 * rho_left_) * (x + 1.0);
        if (x >= params_.c) return omega_at(t_hi_) + (x - t_hi_) +
                                   (t_hi_ >= params_.c ? 0.0 : (params_.c - t_hi_) * (-2.0 * rho_right_));
        if (x >= t_hi_) return omega_at(t_hi_) + (1.0 - 2.0 * rho_right_) * (x - t_hi_);
        return omega_at(x);
    }

    double band_lo() const { return t_lo_; }
    double band_hi() const { return t_hi_; }

  private:
    double density_value(double x) const {
        const double arg = std::clamp(detail::howe_acos_arg(params_, x), -1.0, 1.0);
        return std::acos(arg) / std::acos(-1.0);
    }
    // d/dtheta of (Omega(x(theta)) - x(theta)) with x = mid - rad cos(theta).
    double slope_theta(double th) const {
        const double x = mid_ - rad_ * std::cos(th);
        return -2.0 * density_value(x) * rad_ * std::sin(th);
    }
    double omega_at(double x) const {
        if (rad_ <= 0.0) return omega_at_tlo_ + (x - t_lo_);
        const double pi = std::acos(-1.0);
        double u = std::clamp((x - mid_) / rad_, -1.0, 1.0);
        const double th = std::acos(-u);
        const double step = pi / panels_;
        int idx = std::min(static_cast<int>(th / step), panels_ - 1);
        double partial = integrate_gl([this](double t) { return slope_theta(t); },
                                      step * idx, th, 8);
        return x + cum_[static_cast<std::size_t>(idx)] + partial;
    }

    HoweAsymptoticParams params_;
    int panels_;
    double t_lo_ = 0.0, t_hi_ = 0.0;
    double rho_left_ = 0.0, rho_right_ = 0.0;
    double omega_at_tlo_ = 0.0;
    double mid_ = 0.0, rad_ = 0.0;
    std::vector<double> cum_;  // cum_[i] = Omega(x(theta_i)) - x(theta_i)
};

inline LimitShape limit_shape(const HoweAsymptoticParams& params) { return LimitShape(params); }

// Stieltjes transform G(u) = int density(y)/(u - y) dy + sum m_i/(u - loc_i),
// normalized so that u G(u) -> total mass as |u| -> infinity. The evaluation
// point must stay at distance > 1e-6 from the support and the atoms.
inline std::complex<double> stieltjes(const DensityModel& model, std::complex<double> u,
                                      double tol = 1e-9) {
    const double margin = 1e-6;
    auto dist_to_segment = [&](double lo, double hi) {
        const double x = u.real(), y = u.imag();
        const double t = std::clamp(x, lo, hi);
        return std::hypot(x - t, y);
    };
    if (model.b > model.a && dist_to_segment(model.a, model.b) <= margin)
        throw std::domain_error("stieltjes: evaluation point too close to the support");
    std::complex<double> acc{0.0, 0.0};
    for (const Atom& at : model.atoms) {
        if (std::abs(u - std::complex<double>(at.location, 0.0)) <= margin)
            throw std::domain_error("stieltjes: evaluation point too close to an atom");
        acc += at.mass / (u - at.location);
    }
    if (model.b > model.a) {
        const double m = 0.5 * (model.a + model.b);
        const double r = 0.5 * (model.b - model.a);
        const double pi = std::acos(-1.0);
        auto g = [&](double th) -> std::complex<double> {
            const double y = m + r * std::cos(th);
            return model.density(y) * (r * std::sin(th)) / (u - y);
        };
        acc += integrate_adaptive(g, 0.0, pi, tol);
    }
    return acc;
}

// Stieltjes transform of a particle profile rho (a sub-probability-density
// bounded by 1, possibly with saturated plateaus): the plateaus are part of
// the integrand, so integrate over the full window [-1, c] split at the band
// edges where rho has sqrt kinks.
inline std::complex<double> profile_stieltjes(const HoweAsymptoticParams& params,
                                              std::complex<double> u, double tol = 1e-9) {
    params.validate();
    DensityModel rho = howe_limit_density(params);
    auto [lo, hi] = howe_band(params);
    lo = std::clamp(lo, -1.0, params.c);
    hi = std::clamp(hi, -1.0, params.c);
    const double margin = 1e-6;
    const double t = std::clamp(u.real(), -1.0, params.c);
    if (std::hypot(u.real() - t, u.imag()) <= margin)
        throw std::domain_error("profile_stieltjes: evaluation point too close to the support");
    auto piece = [&](double a, double b) -> std::complex<double> {
        if (!(b > a)) return {0.0, 0.0};
        auto g = [&](double y) -> std::complex<double> { return rho.density(y) / (u - y); };
        return integrate_adaptive(g, a, b, tol);
    };
    return piece(-1.0, lo) + piece(lo, hi) + piece(hi, params.c);
}

// Markov-Krein correspondence between the limit shape (through its particle
// profile rho) and its transition measure sigma:
//   G_sigma(u) = exp(G_rho(u)) / (u + 1).
// Returns the maximum residual over the evaluation grid.
inline double markov_krein_check(const HoweAsymptoticParams& params,
                                 const std::vector<std::complex<double>>& grid) {
    params.validate();
    DensityModel sigma = howe_transition_measure(params);
    double worst = 0.0;
    for (const std::complex<double>& u : grid) {
        const std::complex<double> lhs = stieltjes(sigma, u);
        const std::complex<double> rhs = std::exp(profile_stieltjes(params, u)) / (u + 1.0);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

// Default evaluation grid for the correspondence: real points on both sides
// of the window plus genuinely complex ones above the band.
inline std::vector<std::complex<double>> markov_krein_grid(const HoweAsymptoticParams& params) {
    params.validate();
    const double c = params.c;
    std::vector<std::complex<double>> grid;
    for (double off : {0.5, 1.0, 2.0, 4.0}) grid.emplace_back(c + off, 0.0);
    for (double off : {0.5, 2.0}) grid.emplace_back(-1.0 - off, 0.0);
    grid.emplace_back(0.5 * (c - 1.0), 2.0);
    grid.emplace_back(0.5 * (c - 1.0), -2.0);
    grid.emplace_back(c + 1.0, 1.0);
    grid.emplace_back(-2.0, -1.0);
    return grid;
}

// Cumulative distribution of a DensityModel, F(x) = atoms(<= x) + integral of
// the continuous part up to x; suitable for KS statistics against samples.
class DensityCdf {
  public:
    explicit DensityCdf(const DensityModel& model, int panels = 4096) : model_(model) {
        if (model_.b > model_.a) {
            const double pi = std::acos(-1.0);
            mid_ = 0.5 * (model_.a + model_.b);
            rad_ = 0.5 * (model_.b - model_.a);
            cum_.assign(static_cast<std::size_t>(panels) + 1, 0.0);
            panels_ = panels;
            double acc = 0.0;
            for (int i = 0; i < panels; ++i) {
                const double th0 = pi * i / panels;
                const double th1 = pi * (i + 1) / panels;
                acc += integrate_gl([this](double th) { return band_theta(th); }, th0, th1, 8);
                cum_[static_cast<std::size_t>(i) + 1] = acc;
            }
        }
    }

    // F(x) including atoms at locations <= x.
    double operator()(double x) const {
        double f = continuous_below(x);
        for (const Atom& at : model_.atoms)
            if (at.location <= x) f += at.mass;
        return f;
    }
    // Left limit F(x-): atoms strictly below x.
    double left(double x) const {
        double f = continuous_below(x);
        for (const Atom& at : model_.atoms)
            if (at.location < x) f += at.mass;
        return f;
    }

  private:
    double band_theta(double th) const {
        const double y = mid_ - rad_ * std::cos(th);
        return model_.density(y) * rad_ * std::sin(th);
    }
    double continuous_below(double x) const {
        if (!(model_.b > model_.a) || x <= model_.a) return 0.0;
        if (x >= model_.b) return cum_.back();
        const double pi = std::acos(-1.0);
        const double u = std::clamp((x - mid_) / rad_, -1.0, 1.0);
        const double th = std::acos(-u);
        const double step = pi / panels_;
        int idx = std::min(static_cast<int>(th / step), panels_ - 1);
        return cum_[static_cast<std::size_t>(idx)] +
               integrate_gl([this](double t) { return band_theta(t); }, step * idx, th, 8);
    }

    DensityModel model_;
    double mid_ = 0.0, rad_ = 0.0;
    int panels_ = 0;
    std::vector<double> cum_;
};

// Pushforward of a model on [-1, c] under y = (x + 1)/(c + 1) onto [0, 1];
// atoms move with the map, continuous densities pick up the Jacobian c + 1.
inline DensityModel pushforward_to_unit(const DensityModel& model, double c) {
    if (!(c > -1.0)) throw std::invalid_argument("pushforward_to_unit: need c > -1");
    const double scale = c + 1.0;
    DensityModel out;
    out.a = (model.a + 1.0) / scale;
    out.b = (model.b + 1.0) / scale;
    auto inner = model.density;
    out.density = [inner, scale](double y) { return scale * inner(scale * y - 1.0); };
    for (const Atom& at : model.atoms) out.atoms.push_back({(at.location + 1.0) / scale, at.mass});
    out.normalized = model.normalized;
    return out;
}

// Dictionary from the Howe regime to JUE rectangularity parameters.
inline std::pair<double, double> howe_to_jue_params(const HoweAsymptoticParams& params) {
    params.validate();
    const double c_alpha = (1.0 + 1.0 / params.alpha_h) / (1.0 + params.c);
    return {c_alpha, params.c * c_alpha};
}

// Inverse dictionary: c = c_beta / c_alpha, and alpha_h solves
// c_alpha (1 + c) = 1 + 1/alpha_h, which is positive whenever the ratios sum
// above 1.
inline HoweAsymptoticParams jue_to_howe_params(double c_alpha, double c_beta) {
    if (!(c_alpha > 0.0) || !(c_beta > 0.0) || !(c_alpha + c_beta > 1.0))
        throw std::invalid_argument("jue_to_howe_params: need positive ratios with sum above 1");
    HoweAsymptoticParams params;
    params.c = c_beta / c_alpha;
    params.alpha_h = 1.0 / (c_alpha + c_beta - 1.0);
    return params;
}

}  // namespace skewjue
