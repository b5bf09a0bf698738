#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewjue/density.hpp"
#include "skewjue/linalg.hpp"
#include "skewjue/partition.hpp"
#include "skewjue/rng.hpp"

namespace skewjue {

// Wishart-quotient ensemble dimensions. The column counts are the rounded
// targets M_alpha = round(c_alpha N), M_beta = round(c_beta N); the exponents
// alpha, beta in the eigenvalue weight lambda^alpha (1-lambda)^beta are their
// excesses over N and go negative exactly when the rank is deficient.
struct JueParams {
    long long n = 1;
    double c_alpha = 1.0;
    double c_beta = 1.0;

    long long m_alpha() const { return std::llround(c_alpha * static_cast<double>(n)); }
    long long m_beta() const { return std::llround(c_beta * static_cast<double>(n)); }
    long long alpha() const { return m_alpha() - n; }
    long long beta() const { return m_beta() - n; }
    double realized_c_alpha() const { return static_cast<double>(m_alpha()) / static_cast<double>(n); }
    double realized_c_beta() const { return static_cast<double>(m_beta()) / static_cast<double>(n); }

    void validate() const {
        if (n < 1) throw std::invalid_argument("JueParams: N must be positive");
        if (!(c_alpha > 0.0) || !(c_beta > 0.0))
            throw std::invalid_argument("JueParams: ratios must be positive");
        if (m_alpha() < 1 || m_beta() < 1)
            throw std::invalid_argument("JueParams: rounded M_alpha, M_beta must be at least 1");
        if (m_alpha() + m_beta() <= n)
            throw std::invalid_argument("JueParams: need M_alpha + M_beta > N");
    }
};

// Entries with i.i.d. standard normal real and imaginary parts; any common
// variance gives the same H by scale invariance, so none is applied.
inline ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix a(rows, cols);
    for (auto& z : a.data) {
        const double re = rng.normal();
        const double im = rng.normal();
        z = std::complex<double>(re, im);
    }
    return a;
}

// H = (W_A + W_B)^{-1/2} W_A (W_A + W_B)^{-1/2}; Hermitian up to roundoff
// with spectrum in [0, 1], and exactly max(0, N - M_alpha) zero eigenvalues
// because rank W_A = min(M_alpha, N).
inline ComplexMatrix jue_matrix_from(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("jue_matrix_from: column counts differ");
    const ComplexMatrix wa = gram(a);
    const ComplexMatrix s = inverse_sqrt_psd(wa + gram(b));
    return multiply(multiply(s, wa), s);
}

inline ComplexMatrix jue_matrix(const JueParams& params, Rng& rng) {
    params.validate();
    for (int attempt = 1;; ++attempt) {
        const ComplexMatrix a =
            gaussian_matrix(static_cast<std::size_t>(params.m_alpha()),
                            static_cast<std::size_t>(params.n), rng);
        const ComplexMatrix b =
            gaussian_matrix(static_cast<std::size_t>(params.m_beta()),
                            static_cast<std::size_t>(params.n), rng);
        try {
            return jue_matrix_from(a, b);
        } catch (const std::runtime_error&) {
            // W_A + W_B numerically singular: resample further along the same
            // stream, so the draw stays a pure function of the stream state.
            if (attempt >= 8) throw;
            std::cerr << "jue_matrix: near-singular W_A + W_B, resampling (attempt "
                      << attempt + 1 << ")\n";
        }
    }
}

inline ComplexMatrix jue_matrix(const JueParams& params, std::uint64_t seed,
                                std::uint64_t stream = 0) {
    Rng rng(seed, stream);
    return jue_matrix(params, rng);
}

// Eigenvalues only, descending, through the definite pencil
// W_A v = lambda (W_A + W_B) v. Same law and same draws per stream as
// jue_matrix, without ever forming H.
inline std::vector<double> jue_eigenvalues(const JueParams& params, Rng& rng) {
    params.validate();
    for (int attempt = 1;; ++attempt) {
        ComplexMatrix wa = gram(gaussian_matrix(static_cast<std::size_t>(params.m_alpha()),
                                                static_cast<std::size_t>(params.n), rng));
        ComplexMatrix wsum = wa + gram(gaussian_matrix(static_cast<std::size_t>(params.m_beta()),
                                                       static_cast<std::size_t>(params.n), rng));
        try {
            std::vector<double> values =
                definite_pencil_eigenvalues(std::move(wa), std::move(wsum));
            std::reverse(values.begin(), values.end());
            return values;
        } catch (const std::runtime_error&) {
            if (attempt >= 8) throw;
            std::cerr << "jue_eigenvalues: near-singular W_A + W_B, resampling (attempt "
                      << attempt + 1 << ")\n";
        }
    }
}

struct SpectrumSample {
    JueParams params;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::vector<double> eigenvalues;        // descending
    std::vector<double> minor_eigenvalues;  // descending, size N - 1 when present
    bool has_minor = false;
};

// Spectral decomposition with a hard residual gate ||Hv - lambda v|| <=
// 1e-9 ||H||_F per pair; the minor spectrum comes from H with the last row
// and column deleted.
inline SpectrumSample spectrum(const ComplexMatrix& h, bool with_minor = false) {
    const HermitianEig eig = hermitian_eig(h, true);
    double hnorm = 0.0;
    for (const auto& z : h.data) hnorm += std::norm(z);
    hnorm = std::sqrt(hnorm);
    const ComplexMatrix hv = multiply(h, eig.vectors);
    for (std::size_t j = 0; j < h.cols; ++j) {
        double res = 0.0;
        for (std::size_t i = 0; i < h.rows; ++i)
            res += std::norm(hv(i, j) - eig.values[j] * eig.vectors(i, j));
        if (std::sqrt(res) > 1e-9 * hnorm)
            throw std::runtime_error("spectrum: eigenpair residual above bound on " +
                                     detail::matrix_brief(h));
    }
    SpectrumSample out;
    out.eigenvalues.assign(eig.values.rbegin(), eig.values.rend());
    if (with_minor) {
        const HermitianEig minor = hermitian_eig(delete_last_row_col(h), false);
        out.minor_eigenvalues.assign(minor.values.rbegin(), minor.values.rend());
        out.has_minor = true;
    }
    return out;
}

inline SpectrumSample sample_spectrum(const JueParams& params, std::uint64_t seed,
                                      std::uint64_t stream = 0, bool with_minor = false) {
    SpectrumSample out = spectrum(jue_matrix(params, seed, stream), with_minor);
    out.params = params;
    out.seed = seed;
    out.stream = stream;
    return out;
}

// Matrix-model normalization pi^{N(N-1)/2} prod_{k=1}^{N} Gamma(alpha+k)
// Gamma(beta+k) / Gamma(alpha+beta+2N+1-k), evaluated in long double log
// space; all Gamma arguments are positive once alpha, beta > -1.
inline long double z_jue(long long n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("z_jue: N must be positive");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("z_jue: Gamma pole at alpha or beta <= -1");
    const long double la = static_cast<long double>(alpha);
    const long double lb = static_cast<long double>(beta);
    long double log_z =
        0.5L * static_cast<long double>(n) * static_cast<long double>(n - 1) *
        std::log(std::numbers::pi_v<long double>);
    for (long long k = 1; k <= n; ++k)
        log_z += std::lgamma(la + k) + std::lgamma(lb + k) -
                 std::lgamma(la + lb + static_cast<long double>(2 * n + 1 - k));
    return std::exp(log_z);
}

struct JacobiRule {
    std::vector<double> nodes;    // in (0, 1), ascending
    std::vector<double> weights;  // positive, summing to Beta(alpha+1, beta+1)
};

// Gauss-Jacobi rule for the weight x^alpha (1-x)^beta on [0, 1], built by
// Golub-Welsch from the monic Jacobi recurrence; n nodes integrate the weight
// times any polynomial of degree <= 2n - 1 exactly.
inline JacobiRule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: need at least one node");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::invalid_argument("gauss_jacobi: weight not integrable");
    // Standard Jacobi weight (1-t)^a (1+t)^b on [-1, 1] with a = beta,
    // b = alpha maps onto ours by x = (1+t)/2.
    const double a = beta, b = alpha;
    std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
    diag[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        const double m = 2.0 * k + a + b;
        diag[k] = (b * b - a * a) / (m * (m + 2.0));
        const double bk =
            k == 1 ? 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0))
                   : 4.0 * k * (k + a) * (k + b) * (k + a + b) / (m * m * (m + 1.0) * (m - 1.0));
        off[k - 1] = std::sqrt(bk);
    }
    const TridiagEig eig = tridiagonal_eig(std::move(diag), std::move(off));
    const double mu0 =
        std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
    JacobiRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * (1.0 + eig.values[i]);
        rule.weights[i] = mu0 * eig.first_components[i] * eig.first_components[i];
    }
    return rule;
}

struct MomentEstimate {
    double value = 0.0;
    double error = 0.0;  // roundoff bound for quadrature, standard error for Monte Carlo
};

namespace detail {

inline double pow_ll(double x, long long k) {
    double r = 1.0;
    for (; k > 0; --k) r *= x;
    return r;
}

}  // namespace detail

// <prod_j tr H^{kappa_j}> for N <= 3 by a tensor Gauss-Jacobi rule. The
// integrand is the weight times a polynomial of per-variable degree at most
// 2(N-1) + |kappa|, so the rule is exact and the reported error bound only
// covers roundoff in the normalizing ratio.
inline MomentEstimate exact_moments_small_n(int n, double alpha, double beta,
                                            const Partition& kappa) {
    if (n < 1) throw std::invalid_argument("exact_moments_small_n: N must be positive");
    if (n > 3) throw std::invalid_argument("exact_moments_small_n: N > 3, use Monte Carlo");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::domain_error("exact_moments_small_n: weight not integrable");
    const int degree = 2 * (n - 1) + static_cast<int>(kappa.weight());
    const JacobiRule rule = gauss_jacobi(degree / 2 + 1, alpha, beta);
    const int q = static_cast<int>(rule.nodes.size());
    std::vector<int> idx(n, 0);
    std::vector<double> lam(n);
    double num = 0.0, den = 0.0, num_abs = 0.0;
    for (;;) {
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
            lam[i] = rule.nodes[idx[i]];
            w *= rule.weights[idx[i]];
        }
        double vand = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double d = lam[i] - lam[j];
                vand *= d * d;
            }
        double f = 1.0;
        for (int j = 1; j <= kappa.length(); ++j) {
            double power_sum = 0.0;
            for (int i = 0; i < n; ++i) power_sum += detail::pow_ll(lam[i], kappa.part(j));
            f *= power_sum;
        }
        num += w * vand * f;
        num_abs += std::abs(w * vand * f);
        den += w * vand;
        int d = 0;
        while (d < n && ++idx[d] == q) {
            idx[d] = 0;
            ++d;
        }
        if (d == n) break;
    }
    MomentEstimate out;
    out.value = num / den;
    out.error = 8.0 * std::numeric_limits<double>::epsilon() * (num_abs / den + std::abs(out.value));
    return out;
}

// Sample mean of prod_j tr H^{kappa_j} with its jackknife standard error;
// for the mean statistic the leave-one-out jackknife variance collapses to
// sum (x_r - mean)^2 / (n(n-1)). Replica r draws from stream (seed, r) and
// the reduction order is fixed, so the result is a function of the seed.
inline MomentEstimate mc_correlators(const JueParams& params, const Partition& kappa,
                                     long long samples, std::uint64_t seed) {
    params.validate();
    if (samples < 2) throw std::invalid_argument("mc_correlators: need at least two samples");
    std::vector<double> stat(static_cast<std::size_t>(samples));
    for (long long r = 0; r < samples; ++r) {
        Rng rng(seed, static_cast<std::uint64_t>(r));
        const std::vector<double> lam = jue_eigenvalues(params, rng);
        double f = 1.0;
        for (int j = 1; j <= kappa.length(); ++j) {
            double power_sum = 0.0;
            for (double x : lam) power_sum += detail::pow_ll(x, kappa.part(j));
            f *= power_sum;
        }
        stat[static_cast<std::size_t>(r)] = f;
    }
    double mean = 0.0;
    for (double x : stat) mean += x;
    mean /= static_cast<double>(samples);
    double ss = 0.0;
    for (double x : stat) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (static_cast<double>(samples) * static_cast<double>(samples - 1)))};
}

// Top-s eigenvalues per draw, recentred at the soft edge:
// y_i = N^{2/3} (lambda_i / lambda_+ - 1) with lambda_+ from the limiting law
// for the requested ratios.
inline std::vector<std::vector<double>> edge_samples_jue(const JueParams& params, long long count,
                                                         int top_s, std::uint64_t seed) {
    params.validate();
    if (top_s < 1 || top_s > params.n)
        throw std::invalid_argument("edge_samples_jue: top_s outside [1, N]");
    if (count < 0) throw std::invalid_argument("edge_samples_jue: negative count");
    const double lambda_plus = jue_edges(params.c_alpha, params.c_beta).second;
    const double scale = std::pow(static_cast<double>(params.n), 2.0 / 3.0);
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long r = 0; r < count; ++r) {
        Rng rng(seed, static_cast<std::uint64_t>(r));
        const std::vector<double> lam = jue_eigenvalues(params, rng);
        std::vector<double> y(static_cast<std::size_t>(top_s));
        for (int i = 0; i < top_s; ++i) y[i] = scale * (lam[i] / lambda_plus - 1.0);
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace skewjue
