#pragma once
// Truncated tau-function sectors for the multiparametric weight
// gamma(z) = (1+z)(1+z/c_alpha)/(1+z/(c_alpha+c_beta)) and their two
// expansions: Schur sums with content products, and Jucys-Murphy transport
// through the multiparametric Hurwitz numbers H^d_gamma. The correlator
// generating function Z_N is recovered by the substitution eps = 1/N,
// p_m = (c_alpha/s)^m N^m u_m with s = c_alpha + c_beta.

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skewjue/characters.hpp"
#include "skewjue/hurwitz.hpp"
#include "skewjue/partition.hpp"
#include "skewjue/permutation.hpp"
#include "skewjue/rational.hpp"

namespace skewjue {

// Parameters of the weight gamma; the only pole is z = -(c_alpha + c_beta).
struct GammaParams {
    ExactScalar c_alpha = 1;
    ExactScalar c_beta = 1;

    ExactScalar s() const { return c_alpha + c_beta; }

    void validate() const {
        if (!(c_alpha > 0)) throw std::invalid_argument("GammaParams: c_alpha must be positive");
        if (!(c_alpha + c_beta > 0))
            throw std::invalid_argument("GammaParams: c_alpha + c_beta must be positive");
    }
};

// gamma at an exact rational point.
inline ExactScalar gamma_value(const GammaParams& gp, const ExactScalar& z) {
    ExactScalar den = 1 + z / gp.s();
    if (den == 0) throw std::domain_error("gamma_value: pole at z = -(c_alpha + c_beta)");
    return (1 + z) * (1 + z / gp.c_alpha) / den;
}

// r_kappa(gamma, eps) = prod over boxes (i,j) of kappa of gamma(eps (j-i)).
inline ExactScalar content_product(const Partition& kappa, const GammaParams& gp,
                                   const ExactScalar& eps) {
    gp.validate();
    ExactScalar r = 1;
    for (int i = 1; i <= kappa.length(); ++i)
        for (int j = 1; j <= kappa.part(i); ++j) r *= gamma_value(gp, eps * (j - i));
    return r;
}

// Taylor coefficients of r_kappa(gamma, eps) through eps^d_max. Boxes of
// content 0 contribute gamma(0) = 1 and are skipped.
inline std::vector<ExactScalar> content_product_series(const Partition& kappa,
                                                       const GammaParams& gp, int d_max) {
    gp.validate();
    if (d_max < 0) throw std::invalid_argument("content_product_series: negative degree");
    std::vector<ExactScalar> gm(static_cast<std::size_t>(d_max) + 1);
    for (int m = 0; m <= d_max; ++m)
        gm[static_cast<std::size_t>(m)] = gamma_series_coeff(gp.c_alpha, gp.c_beta, m);
    std::vector<ExactScalar> acc(static_cast<std::size_t>(d_max) + 1, ExactScalar(0));
    acc[0] = 1;
    for (int i = 1; i <= kappa.length(); ++i) {
        for (int j = 1; j <= kappa.part(i); ++j) {
            long long c = j - i;
            if (c == 0) continue;
            std::vector<ExactScalar> next(static_cast<std::size_t>(d_max) + 1, ExactScalar(0));
            for (int a = 0; a <= d_max; ++a) {
                const ExactScalar& base = acc[static_cast<std::size_t>(a)];
                if (base == 0) continue;
                ExactScalar cpow = 1;  // c^m alongside gm[m]
                for (int m = 0; a + m <= d_max; ++m) {
                    next[static_cast<std::size_t>(a + m)] +=
                        base * gm[static_cast<std::size_t>(m)] * cpow;
                    cpow *= c;
                }
            }
            acc = std::move(next);
        }
    }
    return acc;
}

// Which variables the stored coefficients multiply: the power sums p_kappa of
// the tau function itself, or the correlator variables u_kappa of Z_N after
// the substitution above.
enum class SeriesVariables { PowerSums, Correlators };

// Joint truncation of a tau-type series: exact coefficient of eps^d p_kappa
// for |kappa| <= d_max and d <= d_max. Absent keys are exact zeros.
struct SeriesTruncation {
    int d_max = 0;
    SeriesVariables variables = SeriesVariables::PowerSums;
    std::map<std::pair<Partition, int>, ExactScalar> coefficients;

    ExactScalar coeff(const Partition& kappa, int d) const {
        auto it = coefficients.find({kappa, d});
        return it == coefficients.end() ? ExactScalar(0) : it->second;
    }

    void set(const Partition& kappa, int d, ExactScalar v) {
        if (kappa.weight() > d_max || d < 0 || d > d_max)
            throw std::invalid_argument("SeriesTruncation: index outside truncation");
        if (v == 0)
            coefficients.erase({kappa, d});
        else
            coefficients[{kappa, d}] = std::move(v);
    }
};

// Schur route: tau = sum_la (dim la / |la|!) r_la(gamma, eps) s_la, with
// s_la = sum_mu chi_la(mu)/z_mu p_mu. The eps^0 sector collapses to
// sum_w p_1^w / w! by column orthogonality.
inline SeriesTruncation tau_schur_truncation(const GammaParams& gp, int d_max) {
    gp.validate();
    if (d_max < 0) throw std::invalid_argument("tau_schur_truncation: negative degree");
    if (d_max > 5) throw std::length_error("tau_schur_truncation: truncation budget exceeded");
    SeriesTruncation out{d_max, SeriesVariables::PowerSums, {}};
    out.set(Partition(), 0, 1);
    for (int w = 1; w <= d_max; ++w) {
        std::vector<Partition> parts = partitions_of(w);
        ExactScalar wfact = ExactScalar(factorial(w));
        std::map<std::pair<Partition, int>, ExactScalar> sector;
        for (const Partition& la : parts) {
            std::vector<ExactScalar> r = content_product_series(la, gp, d_max);
            ExactScalar dim_over = dim_sym(la) / wfact;
            for (const Partition& mu : parts) {
                ExactScalar weight = dim_over * mn_character(la, mu) / ExactScalar(z_kappa(mu));
                if (weight == 0) continue;
                for (int d = 0; d <= d_max; ++d)
                    if (r[static_cast<std::size_t>(d)] != 0)
                        sector[{mu, d}] += weight * r[static_cast<std::size_t>(d)];
            }
        }
        for (auto& [key, value] : sector)
            if (value != 0) out.set(key.first, key.second, std::move(value));
    }
    return out;
}

// Hurwitz route: coefficient of eps^d p_kappa is H^d_gamma(kappa), one
// multiparametric record per key. The d = 0 sector is the identity-class
// contribution H^0_gamma(1^w) = 1/w!, present even though only d >= 1 carries
// Jucys-Murphy content.
inline SeriesTruncation tau_hurwitz_truncation(const GammaParams& gp, int d_max, int p_bound = 5,
                                               long long budget = 10'000'000) {
    gp.validate();
    if (d_max < 0) throw std::invalid_argument("tau_hurwitz_truncation: negative degree");
    if (p_bound < 0 || p_bound > 5)
        throw std::length_error("tau_hurwitz_truncation: partition budget exceeded");
    SeriesTruncation out{d_max, SeriesVariables::PowerSums, {}};
    out.set(Partition(), 0, 1);
    for (int w = 1; w <= d_max && w <= p_bound; ++w)
        for (const Partition& kappa : partitions_of(w))
            for (int d = 0; d <= d_max; ++d) {
                ExactScalar v = multiparametric_hurwitz(w, kappa, d, gp.c_alpha, gp.c_beta, budget).value;
                if (v != 0) out.set(kappa, d, std::move(v));
            }
    return out;
}

// Column H^0..H^{d_top} of H^d_gamma(kappa) from a single Jucys-Murphy
// product; agrees with multiparametric_hurwitz degree by degree.
inline std::vector<ExactScalar> hurwitz_column(const Partition& kappa, const GammaParams& gp,
                                               int d_top, long long budget = 10'000'000) {
    gp.validate();
    if (d_top < 0) throw std::invalid_argument("hurwitz_column: negative degree");
    int p = static_cast<int>(kappa.weight());
    if (p == 0) {
        std::vector<ExactScalar> col(static_cast<std::size_t>(d_top) + 1, ExactScalar(0));
        col[0] = 1;
        return col;
    }
    if (factorial(p - 1) * factorial(p) * (d_top + 1) * (d_top + 1) > budget)
        throw std::length_error("hurwitz_column: group algebra budget exceeded");
    GroupAlgebraElement prod = jm_series_product(
        p, d_top, [&](int m) { return gamma_series_coeff(gp.c_alpha, gp.c_beta, m); });
    const EpsPoly& poly = prod.coeff(class_representative(p, kappa));
    ExactScalar zk = ExactScalar(z_kappa(kappa));
    std::vector<ExactScalar> col(static_cast<std::size_t>(d_top) + 1);
    for (int d = 0; d <= d_top; ++d) col[static_cast<std::size_t>(d)] = poly.coeff(d) / zk;
    return col;
}

// [u_kappa] Z_N = (1/z_kappa) < prod_j tr H^{kappa_j} >
//               = (c_alpha N / s)^{|kappa|} sum_{d >= 0} N^{-d} H^d_gamma(kappa).
// The d-series is geometric with ratio about (|kappa|-1)/(N s); it is summed
// until three consecutive terms fall below rel_tol, and the truncation is
// reported too shallow when that never happens by d_cap (in particular when
// N s <= |kappa| - 1 and the series diverges).
inline double generating_function_coefficient(long long n, const GammaParams& gp,
                                              const Partition& kappa, double rel_tol = 1e-9,
                                              int d_cap = 40, long long budget = 10'000'000) {
    gp.validate();
    if (n < 1) throw std::invalid_argument("generating_function_coefficient: N must be positive");
    if (kappa.weight() > 5)
        throw std::length_error("generating_function_coefficient: partition budget exceeded");
    if (kappa.empty()) return 1.0;
    std::vector<ExactScalar> col = hurwitz_column(kappa, gp, d_cap, budget);
    ExactScalar sum = 0, npow = 1;  // npow = N^{-d}
    double recent[3] = {1.0, 1.0, 1.0};
    // the column vanishes below the class codimension, and above it on every
    // other degree (parity), so the stop window spans three terms past it
    long long codim = kappa.weight() - kappa.length();
    int stopped = -1;
    for (int d = 0; d <= d_cap; ++d) {
        ExactScalar term = col[static_cast<std::size_t>(d)] * npow;
        sum += term;
        recent[d % 3] = std::abs(to_double(term));
        npow /= n;
        if (d >= codim + 2 && recent[0] + recent[1] + recent[2] <=
                                  rel_tol * (1.0 + std::abs(to_double(sum)))) {
            stopped = d;
            break;
        }
    }
    if (stopped < 0)
        throw std::runtime_error(
            "generating_function_coefficient: truncation too shallow for requested kappa");
    ExactScalar front = pow_rat(gp.c_alpha * n / gp.s(), kappa.weight());
    return to_double(front * sum);
}

// Partial genus expansion of < prod_j tr H^{kappa_j} >: exact coefficients
// A_g multiplying N^{2 - 2g - l(kappa)},
// A_g = (-1)^{|kappa|} (z_kappa / |kappa|!) sum_{mu, nu |- |kappa|}
//       c_alpha^{l(nu)} (-s)^{-(l(mu)+l(nu)+l(kappa)+2g-2)} h_g(kappa,mu,nu).
// The series in g is asymptotic; eval reports the partial sum.
struct GenusExpansion {
    Partition kappa;
    std::vector<ExactScalar> coefficients;  // index g

    int exponent(int g) const { return 2 - 2 * g - kappa.length(); }

    double eval(long long n) const {
        if (n < 1) throw std::invalid_argument("GenusExpansion: N must be positive");
        ExactScalar total = 0;
        for (std::size_t g = 0; g < coefficients.size(); ++g)
            total += coefficients[g] * pow_rat(ExactScalar(n), exponent(static_cast<int>(g)));
        return to_double(total);
    }
};

inline GenusExpansion genus_expansion_eval(const GammaParams& gp, const Partition& kappa,
                                           int g_max, long long budget = 10'000'000) {
    gp.validate();
    if (kappa.empty()) throw std::invalid_argument("genus_expansion_eval: kappa must be nonempty");
    if (g_max < 0) throw std::invalid_argument("genus_expansion_eval: negative genus");
    if (kappa.weight() > 4 || g_max > 2)
        throw std::length_error("genus_expansion_eval: enumeration budget exceeded");
    int p = static_cast<int>(kappa.weight());
    ExactScalar s = gp.s();
    ExactScalar front =
        ExactScalar(p % 2 ? -1 : 1) * ExactScalar(z_kappa(kappa)) / ExactScalar(factorial(p));
    std::vector<Partition> parts = partitions_of(p);
    GenusExpansion out{kappa, {}};
    for (int g = 0; g <= g_max; ++g) {
        ExactScalar acc = 0;
        for (const Partition& mu : parts)
            for (const Partition& nu : parts) {
                HurwitzRecord rec = monotone_hurwitz(kappa, mu, nu, g, budget);
                if (rec.value == 0) continue;
                long long e = mu.length() + nu.length() + kappa.length() + 2LL * g - 2;
                acc += pow_rat(gp.c_alpha, nu.length()) * pow_rat(-s, -e) * rec.value;
            }
        out.coefficients.push_back(front * acc);
    }
    return out;
}

}  // namespace skewjue
