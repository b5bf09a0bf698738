#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace skewjue {

// Regularized lower incomplete gamma P(a, x): series for x < a+1, continued
// fraction (modified Lentz) otherwise.
namespace detail {

inline double gamma_series_p(double a, double x) {
    double sum = 1.0 / a, term = sum, ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_cf_q(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace detail

inline double gammap(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("gammap: bad arguments");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? detail::gamma_series_p(a, x) : 1.0 - detail::gamma_cf_q(a, x);
}

inline double gammaq(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::domain_error("gammaq: bad arguments");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - detail::gamma_series_p(a, x) : detail::gamma_cf_q(a, x);
}

struct Chi2Result {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

// Pearson chi-square against fixed cell probabilities.
inline Chi2Result chi2_gof(const std::vector<long long>& observed,
                           const std::vector<double>& expected_prob) {
    if (observed.size() != expected_prob.size() || observed.empty())
        throw std::invalid_argument("chi2_gof: size mismatch");
    long long total = 0;
    for (long long o : observed) total += o;
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double e = expected_prob[i] * total;
        if (e <= 0.0) throw std::domain_error("chi2_gof: zero expected cell");
        double d = observed[i] - e;
        stat += d * d / e;
    }
    int dof = static_cast<int>(observed.size()) - 1;
    return Chi2Result{stat, dof, gammaq(dof / 2.0, stat / 2.0)};
}

// Asymptotic Kolmogorov tail 2 sum (-1)^{j-1} exp(-2 j^2 t^2) at the Stephens
// effective sample size.
inline double ks_asymptotic_pvalue(double d, double n_eff) {
    double sqn = std::sqrt(n_eff);
    double t = (sqn + 0.12 + 0.11 / sqn) * d;
    double p = 0.0;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        double term = std::exp(-2.0 * j * j * t * t);
        p += sign * term;
        sign = -sign;
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * p, 0.0, 1.0);
}

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

// One-sample KS against a (possibly atomic) CDF: cdf is right-continuous,
// cdf_left its left limit. Tied observations are grouped so the empirical CDF
// jump at an atom is compared as a whole.
inline KsResult ks_one_sample(std::vector<double> data, const std::function<double(double)>& cdf,
                              const std::function<double(double)>& cdf_left) {
    if (data.empty()) throw std::invalid_argument("ks_one_sample: empty data");
    std::sort(data.begin(), data.end());
    std::size_t n = data.size();
    double d = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && data[j] == data[i]) ++j;
        double lo = static_cast<double>(i) / n;    // empirical CDF just left of the tie group
        double hi = static_cast<double>(j) / n;    // and just right of it
        d = std::max(d, std::fabs(cdf_left(data[i]) - lo));
        d = std::max(d, std::fabs(cdf(data[i]) - hi));
        i = j;
    }
    return KsResult{d, ks_asymptotic_pvalue(d, static_cast<double>(n))};
}

inline KsResult ks_one_sample(std::vector<double> data, const std::function<double(double)>& cdf) {
    return ks_one_sample(std::move(data), cdf, cdf);
}

inline KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / a.size() -
                                  static_cast<double>(j) / b.size()));
    }
    double n_eff = static_cast<double>(a.size()) * b.size() / (a.size() + b.size());
    return KsResult{d, ks_asymptotic_pvalue(d, n_eff)};
}

struct JackknifeResult {
    double mean = 0.0;
    double standard_error = 0.0;
};

// Leave-one-out jackknife of the sample mean.
inline JackknifeResult jackknife_mean(const std::vector<double>& x) {
    if (x.size() < 2) throw std::invalid_argument("jackknife_mean: need at least 2 values");
    std::size_t n = x.size();
    double sum = 0.0;
    for (double v : x) sum += v;
    double mean = sum / n;
    // leave-one-out mean is (sum - x_i)/(n-1); SE collapses to the usual form
    double ss = 0.0;
    for (double v : x) {
        double loo = (sum - v) / (n - 1);
        double d = loo - mean;
        ss += d * d;
    }
    return JackknifeResult{mean, std::sqrt(ss * (n - 1) / n)};
}

inline double median(std::vector<double> x) {
    if (x.empty()) throw std::invalid_argument("median: empty");
    std::sort(x.begin(), x.end());
    std::size_t n = x.size();
    return n % 2 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

}  // namespace skewjue
