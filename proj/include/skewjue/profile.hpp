#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "skewjue/jue.hpp"

namespace skewjue {

// Zigzag with slopes alternating -1/+1 through interlaced minima and maxima:
// f(t) = sum_i |t - a_i| - sum_j |t - b_j|. Outside the data range
// f(t) = |t - anchor()| exactly.
struct PiecewiseLinearProfile {
    std::vector<double> minima;  // ascending, size N >= 1
    std::vector<double> maxima;  // ascending, size N - 1, interlaced with minima

    double operator()(double t) const {
        double f = 0.0;
        for (double a : minima) f += std::abs(t - a);
        for (double b : maxima) f -= std::abs(t - b);
        return f;
    }

    double anchor() const {
        double s = 0.0;
        for (double a : minima) s += a;
        for (double b : maxima) s -= b;
        return s;
    }

    std::vector<double> breakpoints() const {
        std::vector<double> out;
        out.reserve(minima.size() + maxima.size());
        out.insert(out.end(), minima.begin(), minima.end());
        out.insert(out.end(), maxima.begin(), maxima.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Eigenvalues of H become minima and eigenvalues of the trailing principal
// minor become maxima under the horizontal map t = (c+1) lambda - 1; Cauchy
// interlacing keeps the zigzag well formed up to roundoff ties.
inline PiecewiseLinearProfile interlacing_profile(const SpectrumSample& sample, double c,
                                                  double tol = 1e-9) {
    if (!sample.has_minor)
        throw std::invalid_argument("interlacing_profile: minor spectrum missing");
    if (sample.eigenvalues.empty())
        throw std::invalid_argument("interlacing_profile: empty spectrum");
    if (sample.minor_eigenvalues.size() + 1 != sample.eigenvalues.size())
        throw std::invalid_argument("interlacing_profile: minor size must be N - 1");
    PiecewiseLinearProfile prof;
    prof.minima.reserve(sample.eigenvalues.size());
    prof.maxima.reserve(sample.minor_eigenvalues.size());
    for (double lam : sample.eigenvalues) prof.minima.push_back((c + 1.0) * lam - 1.0);
    for (double lam : sample.minor_eigenvalues) prof.maxima.push_back((c + 1.0) * lam - 1.0);
    std::sort(prof.minima.begin(), prof.minima.end());
    std::sort(prof.maxima.begin(), prof.maxima.end());
    const double slack = tol * std::abs(c + 1.0);
    for (std::size_t j = 0; j < prof.maxima.size(); ++j)
        if (prof.maxima[j] < prof.minima[j] - slack ||
            prof.maxima[j] > prof.minima[j + 1] + slack)
            throw std::invalid_argument("interlacing_profile: interlacing violated");
    return prof;
}

// max |f - g| over a uniform grid on [lo, hi] plus the breakpoints of f that
// fall inside; both functions are 1-Lipschitz in practice, so this resolves
// the supremum to grid resolution.
template <typename G>
double sup_distance(const PiecewiseLinearProfile& f, G&& g, double lo, double hi,
                    int grid = 2000) {
    if (!(hi > lo) || grid < 2) throw std::invalid_argument("sup_distance: bad window");
    double sup = 0.0;
    auto probe = [&](double t) { sup = std::max(sup, std::abs(f(t) - g(t))); };
    for (int i = 0; i < grid; ++i) probe(lo + (hi - lo) * i / (grid - 1.0));
    for (double t : f.breakpoints())
        if (t >= lo && t <= hi) probe(t);
    return sup;
}

}  // namespace skewjue
