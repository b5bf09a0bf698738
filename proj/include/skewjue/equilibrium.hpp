#pragma once

// Electrostatic equilibrium problems: minimize the logarithmic energy with
// an external field V over probability densities on a window. A single-cut
// ansatz with support [a, b] = [m - r, m + r] reduces to two moment
// conditions on V' in the angle variable y = m + r cos(theta):
//   F1(m, r) = int_0^pi V'(y) dtheta                 = 0
//   F2(m, r) = (1/2pi) int_0^pi y V'(y) dtheta       = 1
// (the principal-value equation is  PV int sigma(y)/(x-y) dy = V'(x)/2).
// The density on the cut is recovered from the resolvent:
//   sigma(x) = sqrt((x-a)(b-x)) / (2 pi^2) * int_0^pi Q(x, y(theta)) dtheta,
//   Q(x, y) = (V'(x) - V'(y)) / (x - y).
// GUE pin: V' = y gives [a, b] = [-2, 2] and the semicircle sqrt(4-x^2)/(2pi).

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewjue/density.hpp"
#include "skewjue/quadrature.hpp"

namespace skewjue {

struct PotentialModel {
    std::function<double(double)> v;   // V
    std::function<double(double)> dv;  // V'
    double lo = 0.0;                   // open window containing any admissible support
    double hi = 0.0;
    std::string name;
};

inline PotentialModel gue_potential() {
    PotentialModel pot;
    pot.v = [](double x) { return 0.5 * x * x; };
    pot.dv = [](double x) { return x; };
    pot.lo = -8.0;
    pot.hi = 8.0;
    pot.name = "gue";
    return pot;
}

// Jacobi log-gas potential on (0, 1); for c_alpha, c_beta > 1 the
// equilibrium support is (lambda_-, lambda_+) and the density is the
// continuous JUE limit law.
inline PotentialModel jue_potential(double c_alpha, double c_beta) {
    if (!(c_alpha > 0.0) || !(c_beta > 0.0))
        throw std::invalid_argument("jue_potential: need positive parameters");
    PotentialModel pot;
    pot.v = [c_alpha, c_beta](double x) {
        return (1.0 - c_alpha) * std::log(x) + (1.0 - c_beta) * std::log(1.0 - x);
    };
    pot.dv = [c_alpha, c_beta](double x) {
        return (1.0 - c_alpha) / x + (c_beta - 1.0) / (1.0 - x);
    };
    pot.lo = 0.0;
    pot.hi = 1.0;
    pot.name = "jue";
    return pot;
}

// Entropy-type potential of the particle system on (-1, c); its equilibrium
// measure is the particle density rho whenever rho stays below the lattice
// saturation bound, with support [t_-, t_+].
inline PotentialModel howe_potential(const HoweAsymptoticParams& params) {
    params.validate();
    const double c = params.c;
    const double zeta = params.zeta();
    PotentialModel pot;
    pot.v = [c, zeta](double x) {
        return (c - x) * std::log(c - x) + (x + 1.0) * std::log(x + 1.0) + zeta * x;
    };
    pot.dv = [c, zeta](double x) { return std::log((x + 1.0) / (c - x)) + zeta; };
    pot.lo = -1.0;
    pot.hi = c;
    pot.name = "howe";
    return pot;
}

struct EquilibriumResult {
    double a = 0.0;  // support edges, a < b
    double b = 0.0;
    std::function<double(double)> density;  // equilibrium density on (a, b), 0 outside
    double residual = 0.0;                  // max(|F1|, |F2 - 1|) at the solution
    double mass = 0.0;                      // integral of the density (diagnostic)
    int iterations = 0;
};

namespace detail {

struct SupportEquations {
    const PotentialModel& pot;
    double tol;

    // Returns (F1, F2) at (m, r).
    std::pair<double, double> operator()(double m, double r) const {
        const double pi = std::acos(-1.0);
        auto y = [&](double th) { return m + r * std::cos(th); };
        double f1 = integrate_adaptive([&](double th) { return pot.dv(y(th)); }, 0.0, pi, tol);
        double f2 = integrate_adaptive([&](double th) { return y(th) * pot.dv(y(th)); }, 0.0, pi,
                                       tol) /
                    (2.0 * pi);
        return {f1, f2};
    }
};

}  // namespace detail

// Damped Newton iteration on (m, r) for the support equations, with the
// iterates clamped to keep [m - r, m + r] inside the potential window.
// Roots on the window boundary (saturated cases) converge to within the
// clamp margin. The returned density is validated for nonnegativity; a
// negative lobe means the single-cut ansatz does not hold.
inline EquilibriumResult equilibrium_solver(const PotentialModel& pot, double a0 = 0.0,
                                            double b0 = 0.0, double tol = 1e-12,
                                            int max_iter = 120) {
    if (!(pot.hi > pot.lo)) throw std::invalid_argument("equilibrium_solver: empty window");
    const double width = pot.hi - pot.lo;
    const double margin = 1e-9 * std::max(1.0, width);
    double m, r;
    if (b0 > a0) {
        m = 0.5 * (a0 + b0);
        r = 0.5 * (b0 - a0);
    } else {
        m = 0.5 * (pot.lo + pot.hi);
        r = 0.25 * width;
    }
    auto clamp_mr = [&](double& mm, double& rr) {
        rr = std::max(rr, 1e-12 * width);
        const double lo = pot.lo + margin, hi = pot.hi - margin;
        if (mm - rr < lo || mm + rr > hi) {
            double aa = std::clamp(mm - rr, lo, hi - 2e-12 * width);
            double bb = std::clamp(mm + rr, aa + 1e-12 * width, hi);
            mm = 0.5 * (aa + bb);
            rr = 0.5 * (bb - aa);
        }
    };
    clamp_mr(m, r);

    detail::SupportEquations eqs{pot, 1e-12};
    // One-sided finite differences directed into the feasible region: the
    // potential is undefined outside the window, so probes never cross it.
    auto probe_step = [&](double mm, double rr, bool in_m) {
        const double h = 1e-6 * std::max({1.0, std::abs(mm), rr});
        const double room_up = in_m ? (pot.hi - margin) - (mm + rr)
                                    : std::min((pot.hi - margin) - (mm + rr),
                                               (mm - rr) - (pot.lo + margin));
        const double room_dn = in_m ? (mm - rr) - (pot.lo + margin) : rr;
        if (room_up >= h) return h;
        if (room_dn >= h) return -h;
        return room_up >= room_dn ? 0.5 * std::max(room_up, 0.0) : -0.5 * std::max(room_dn, 0.0);
    };
    auto [f1, f2] = eqs(m, r);
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        const double res = std::max(std::abs(f1), std::abs(f2 - 1.0));
        if (res < tol) break;
        const double hm = probe_step(m, r, true);
        const double hr = probe_step(m, r, false);
        if (std::abs(hm) < 1e-14 || std::abs(hr) < 1e-14) break;
        auto [f1m, f2m] = eqs(m + hm, r);
        auto [f1r, f2r] = eqs(m, r + hr);
        const double j11 = (f1m - f1) / hm, j12 = (f1r - f1) / hr;
        const double j21 = (f2m - f2) / hm, j22 = (f2r - f2) / hr;
        const double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-30) break;
        const double dm = -(j22 * f1 - j12 * (f2 - 1.0)) / det;
        const double dr = -(-j21 * f1 + j11 * (f2 - 1.0)) / det;
        // Fraction-to-the-boundary: a step may consume at most 90% of the
        // remaining slack to the window, so boundary roots are approached
        // geometrically instead of being hit and stuck on the clamp.
        double lambda = 1.0;
        const double da = dm - dr, db = dm + dr;  // edge displacements
        const double slack_a = (m - r) - (pot.lo + margin);
        const double slack_b = (pot.hi - margin) - (m + r);
        if (da < 0.0) lambda = std::min(lambda, 0.9 * slack_a / (-da));
        if (db > 0.0) lambda = std::min(lambda, 0.9 * slack_b / db);
        if (dr < 0.0) lambda = std::min(lambda, 0.9 * r / (-dr));
        double nm = m, nr = r, nf1 = f1, nf2 = f2;
        bool accepted = false;
        for (int halving = 0; halving < 40; ++halving) {
            nm = m + lambda * dm;
            nr = r + lambda * dr;
            std::tie(nf1, nf2) = eqs(nm, nr);
            const double nres = std::max(std::abs(nf1), std::abs(nf2 - 1.0));
            if (nres < res) {
                accepted = true;
                break;
            }
            lambda *= 0.5;
            if (lambda * (std::abs(dm) + std::abs(dr)) < 1e-15) break;
        }
        if (!accepted) break;
        m = nm;
        r = nr;
        f1 = nf1;
        f2 = nf2;
    }

    EquilibriumResult out;
    out.a = m - r;
    out.b = m + r;
    out.residual = std::max(std::abs(f1), std::abs(f2 - 1.0));
    out.iterations = iter;

    const double a = out.a, b = out.b;
    const double pi = std::acos(-1.0);
    auto dv = pot.dv;
    auto density = [a, b, pi, dv](double x) {
        const double q = (x - a) * (b - x);
        if (q <= 0.0) return 0.0;
        const double mm = 0.5 * (a + b), rr = 0.5 * (b - a);
        const double delta = 1e-7 * std::max(1.0, rr);
        auto kernel = [&](double th) {
            const double y = mm + rr * std::cos(th);
            if (std::abs(x - y) <= delta) {
                // Q(x, y) -> V''; difference over a short chord kept inside
                // [a, b], where the potential is guaranteed finite.
                const double z = 0.5 * (x + y);
                const double zl = std::max(z - delta, a);
                const double zr = std::min(zl + 2.0 * delta, b);
                return (dv(zr) - dv(zl)) / (zr - zl);
            }
            return (dv(x) - dv(y)) / (x - y);
        };
        const double integral = integrate_adaptive(kernel, 0.0, pi, 1e-10);
        return std::sqrt(q) * integral / (2.0 * pi * pi);
    };
    out.density = density;

    // Single-cut validity: the density must be nonnegative across the cut.
    for (int i = 1; i < 64; ++i) {
        const double x = a + (b - a) * i / 64.0;
        if (density(x) < -1e-8)
            throw std::runtime_error("equilibrium_solver: single-cut ansatz failed (negative density)");
    }
    out.mass = band_integral(density, a, b, 400);
    return out;
}

}  // namespace skewjue
