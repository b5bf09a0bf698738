#pragma once

// Quadrature kernels shared by the limit-law and equilibrium modules.
// Gauss-Legendre rules are generated once per order by Newton iteration on
// the Legendre recurrence and cached. Square-root band edges are absorbed
// by the cosine substitution x = m + r cos(theta), so every integrand seen
// by a rule here is smooth on its panel. The adaptive driver bisects until
// two estimates agree; it is templated so complex-valued integrands
// (Stieltjes transforms) reuse the same path.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace skewjue {

struct GlRule {
    std::vector<double> nodes;    // in (-1, 1), ascending
    std::vector<double> weights;  // positive, sum to 2
};

namespace detail {

inline GlRule make_gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    GlRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    // Roots come in +- pairs; solve the upper half from asymptotic seeds.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
            double p0 = 1.0, p1 = x;
            for (int j = 1; j < n; ++j) {
                double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(i)] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

}  // namespace detail

// Cached rule lookup; rules are immutable once built.
inline const GlRule& gauss_legendre(int n) {
    thread_local std::map<int, GlRule> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, detail::make_gauss_legendre(n)).first;
    return it->second;
}

// Fixed-order Gauss-Legendre on [a, b]; exact for polynomials of degree 2n-1.
template <typename F>
auto integrate_gl(F&& f, double a, double b, int n) -> decltype(f(a) * 1.0) {
    const GlRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    decltype(f(a) * 1.0) acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

// Globally adaptive integration with a GL(15) kernel and a GL(7) error
// estimate per panel. The panel with the largest estimated error is bisected
// until the total estimate drops below tol (absolute) or the panel budget is
// exhausted, so the work is strictly bounded even when rounding noise makes
// a local tolerance unreachable. Handles integrable endpoint singularities
// (sqrt kinks, logs) and complex-valued integrands.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, double tol, int max_panels = 4000)
    -> decltype(f(a) * 1.0) {
    using V = decltype(f(a) * 1.0);
    struct Panel {
        double a, b, err;
        V val;
    };
    auto make = [&](double lo, double hi) {
        V v15 = integrate_gl(f, lo, hi, 15);
        V v7 = integrate_gl(f, lo, hi, 7);
        return Panel{lo, hi, std::abs(v15 - v7), v15};
    };
    auto worse = [](const Panel& p, const Panel& q) { return p.err < q.err; };
    std::vector<Panel> heap;
    heap.push_back(make(a, b));
    std::vector<Panel> frozen;  // panels too narrow to split further
    double total_err = heap.front().err;
    const double min_width = 64.0 * 1e-16 * (std::abs(a) + std::abs(b) + 1.0);
    while (total_err > tol &&
           static_cast<int>(heap.size() + frozen.size()) < max_panels && !heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), worse);
        Panel top = heap.back();
        heap.pop_back();
        total_err -= top.err;
        if (top.b - top.a <= min_width) {
            frozen.push_back(top);
            continue;
        }
        const double mid = 0.5 * (top.a + top.b);
        for (Panel child : {make(top.a, mid), make(mid, top.b)}) {
            total_err += child.err;
            heap.push_back(child);
            std::push_heap(heap.begin(), heap.end(), worse);
        }
    }
    V acc{};
    for (const Panel& p : heap) acc += p.val;
    for (const Panel& p : frozen) acc += p.val;
    return acc;
}

// Integral of f over the band [m - r, m + r] via x = m + r cos(theta):
// the Jacobian r sin(theta) cancels inverse-sqrt edge factors, so densities
// with sqrt((b-x)(x-a)) behavior become smooth in theta.
template <typename F>
auto band_integral(F&& f, double a, double b, int n) -> decltype(f(a) * 1.0) {
    const double m = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const double pi = std::acos(-1.0);
    auto g = [&](double theta) { return f(m + r * std::cos(theta)) * (r * std::sin(theta)); };
    return integrate_gl(g, 0.0, pi, n);
}

// Double-exponential (tanh-sinh) rule on (a, b); tolerates integrable
// endpoint singularities. Used as the fallback when the cosine substitution
// does not apply (e.g. x^alpha (1-x)^beta weights with alpha > -1).
template <typename F>
auto tanh_sinh(F&& f, double a, double b, double tol = 1e-12) -> decltype(f(a) * 1.0) {
    using V = decltype(f(a) * 1.0);
    const double pi_half = 0.5 * std::acos(-1.0);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double tmax = 4.0;  // abscissas beyond this are within 1e-300 of the endpoints
    auto eval = [&](double t) -> V {
        const double u = pi_half * std::sinh(t);
        const double x = std::tanh(u);
        const double w = pi_half * std::cosh(t) / (std::cosh(u) * std::cosh(u));
        const double y = mid + half * x;
        if (y <= a || y >= b) return V{};
        return f(y) * (w * half);
    };
    double h = 1.0;
    V sum = eval(0.0);
    for (int k = 1; k * h <= tmax; ++k) sum += eval(k * h) + eval(-k * h);
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        V add{};
        for (int k = 1; k * h <= tmax; k += 2) add += eval(k * h) + eval(-k * h);
        V prev = sum * h * 2.0;
        sum += add;
        V cur = sum * h;
        if (level >= 3 && std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
    }
    return sum * h;
}

}  // namespace skewjue
