#include <skewjue/jue.hpp>

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include <skewjue/quadrature.hpp>

using namespace skewjue;

namespace {

double beta_fn(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

// E[X^m] for X ~ Beta(alpha+1, beta+1): prod_{i=1}^{m} (alpha+i)/(alpha+beta+1+i),
// which equals B(alpha+m+1, beta+1)/B(alpha+1, beta+1).
double beta_moment(double alpha, double beta, int m) {
    double r = 1.0;
    for (int i = 1; i <= m; ++i) r *= (alpha + i) / (alpha + beta + 1 + i);
    return r;
}

long long zero_count(const std::vector<double>& values, double tol = 1e-9) {
    long long count = 0;
    for (double v : values)
        if (std::abs(v) <= tol) ++count;
    return count;
}

}  // namespace

TEST_CASE("JueParams rounds dimensions and validates", "[jue]") {
    const JueParams p{1000, 0.95, 1.0};
    REQUIRE(p.m_alpha() == 950);
    REQUIRE(p.m_beta() == 1000);
    REQUIRE(p.alpha() == -50);
    REQUIRE(p.beta() == 0);
    REQUIRE(p.realized_c_alpha() == Catch::Approx(0.95).margin(1e-15));
    p.validate();

    REQUIRE_THROWS_AS((JueParams{0, 1.0, 1.0}.validate()), std::invalid_argument);
    REQUIRE_THROWS_AS((JueParams{3, -1.0, 1.0}.validate()), std::invalid_argument);
    REQUIRE_THROWS_AS((JueParams{10, 0.01, 1.0}.validate()), std::invalid_argument);
    // M_alpha + M_beta = 3 <= N = 5.
    REQUIRE_THROWS_AS((JueParams{5, 0.2, 0.4}.validate()), std::invalid_argument);
}

TEST_CASE("z_jue matches the Beta normalization at N=1", "[jue]") {
    REQUIRE(static_cast<double>(z_jue(1, 0.0, 0.0)) == Catch::Approx(1.0).margin(1e-14));
    REQUIRE(static_cast<double>(z_jue(1, 1.0, 0.0)) == Catch::Approx(0.5).margin(1e-14));
    REQUIRE(static_cast<double>(z_jue(1, 1.0, 1.0)) ==
            Catch::Approx(1.0 / 6.0).margin(1e-14));
    // General exponents still integrate the weight: Z(1) = B(alpha+1, beta+1).
    REQUIRE(static_cast<double>(z_jue(1, 0.5, 2.5)) ==
            Catch::Approx(beta_fn(1.5, 3.5)).epsilon(1e-13));

    REQUIRE(static_cast<double>(z_jue(4, 2.0, 7.0)) > 0.0);
    REQUIRE(std::isfinite(static_cast<double>(z_jue(6, 0.0, 0.0))));

    REQUIRE_THROWS_AS(z_jue(0, 0.0, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(z_jue(1, -1.0, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(z_jue(2, 0.0, -1.5), std::domain_error);
}

TEST_CASE("gauss_jacobi integrates Beta moments exactly", "[jue]") {
    const double alpha = 0.7, beta = 1.3;
    const int n = 6;
    const JacobiRule rule = gauss_jacobi(n, alpha, beta);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        REQUIRE(rule.nodes[i] > 0.0);
        REQUIRE(rule.nodes[i] < 1.0);
        REQUIRE(rule.weights[i] > 0.0);
        if (i > 0) REQUIRE(rule.nodes[i] > rule.nodes[i - 1]);
    }
    // Exact for x^k against the weight up to degree 2n-1.
    for (int k = 0; k <= 2 * n - 1; ++k) {
        double got = 0.0;
        for (int i = 0; i < n; ++i)
            got += rule.weights[i] * std::pow(rule.nodes[i], k);
        REQUIRE(got == Catch::Approx(beta_fn(alpha + 1 + k, beta + 1)).epsilon(1e-12));
    }

    // Flat weight reduces to Gauss-Legendre mapped onto [0, 1].
    const JacobiRule flat = gauss_jacobi(5, 0.0, 0.0);
    const GlRule& gl = gauss_legendre(5);
    for (int i = 0; i < 5; ++i) {
        REQUIRE(flat.nodes[i] == Catch::Approx(0.5 * (1.0 + gl.nodes[i])).margin(1e-13));
        REQUIRE(flat.weights[i] == Catch::Approx(0.5 * gl.weights[i]).margin(1e-13));
    }

    REQUIRE_THROWS_AS(gauss_jacobi(0, 0.0, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(gauss_jacobi(3, -1.0, 0.0), std::invalid_argument);
}

TEST_CASE("exact moments reproduce Beta moments at N=1", "[jue]") {
    const MomentEstimate uniform_mean = exact_moments_small_n(1, 0.0, 0.0, Partition({1}));
    REQUIRE(uniform_mean.value == Catch::Approx(0.5).margin(1e-13));
    REQUIRE(uniform_mean.error >= 0.0);
    REQUIRE(uniform_mean.error < 1e-12);

    const std::pair<double, double> weights[] = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 3.0}, {0.5, 1.5}};
    for (const auto& [a, b] : weights)
        for (int m = 1; m <= 4; ++m) {
            const MomentEstimate est = exact_moments_small_n(1, a, b, Partition({m}));
            REQUIRE(est.value == Catch::Approx(beta_moment(a, b, m)).margin(1e-12));
        }
}

TEST_CASE("exact moments honor the exchangeable first-moment identity", "[jue]") {
    // E[tr H] = N M_alpha / (M_alpha + M_beta): exchangeability of the
    // M_alpha + M_beta Gaussian rows in (W_A+W_B)^{-1} W_A.
    const MomentEstimate two = exact_moments_small_n(2, 0.0, 0.0, Partition({1}));
    REQUIRE(two.value == Catch::Approx(1.0).margin(1e-12));

    // N=3, M_alpha=4, M_beta=5 -> 3*4/9.
    const MomentEstimate three = exact_moments_small_n(3, 1.0, 2.0, Partition({1}));
    REQUIRE(three.value == Catch::Approx(4.0 / 3.0).margin(1e-12));

    // N=2, M_alpha=2, M_beta=5 -> 2*2/7.
    const MomentEstimate lopsided = exact_moments_small_n(2, 0.0, 3.0, Partition({1}));
    REQUIRE(lopsided.value == Catch::Approx(4.0 / 7.0).margin(1e-12));
}

TEST_CASE("exact moments agree with a nested adaptive oracle at N=2", "[jue]") {
    const double a = 0.5, b = 1.5;
    auto weight = [&](double x) { return std::pow(x, a) * std::pow(1.0 - x, b); };
    auto inner = [&](double x, auto&& f) {
        return integrate_adaptive(
            [&](double y) { return (x - y) * (x - y) * f(x, y) * weight(y); }, 0.0, 1.0, 1e-11);
    };
    auto outer = [&](auto&& f) {
        return integrate_adaptive([&](double x) { return weight(x) * inner(x, f); }, 0.0, 1.0,
                                  1e-10);
    };
    const double num = outer([](double x, double y) { return x * x + y * y; });
    const double den = outer([](double, double) { return 1.0; });
    const MomentEstimate est = exact_moments_small_n(2, a, b, Partition({2}));
    REQUIRE(est.value == Catch::Approx(num / den).margin(1e-7));

    // <(tr H)^2> - <tr H^2> = 2 E[lambda_1 lambda_2] >= 0.
    const MomentEstimate sq = exact_moments_small_n(2, a, b, Partition({1, 1}));
    REQUIRE(sq.value - est.value > 0.0);
}

TEST_CASE("exact moments reject big N and bad weights", "[jue]") {
    REQUIRE_THROWS_WITH(exact_moments_small_n(4, 0.0, 0.0, Partition({1})),
                        Catch::Matchers::ContainsSubstring("use Monte Carlo"));
    REQUIRE_THROWS_AS(exact_moments_small_n(0, 0.0, 0.0, Partition({1})), std::invalid_argument);
    REQUIRE_THROWS_AS(exact_moments_small_n(2, -1.0, 0.0, Partition({1})), std::domain_error);
}

TEST_CASE("jue_matrix is Hermitian with unit-interval spectrum", "[jue]") {
    const JueParams params{17, 1.3, 2.2};
    const ComplexMatrix h = jue_matrix(params, 99);
    REQUIRE(h.rows == 17);
    REQUIRE(h.hermitian_defect() <= 1e-12 * h.max_abs());

    const JueParams wide{50, 0.9, 1.7};
    const SpectrumSample sample = spectrum(jue_matrix(wide, 7));
    REQUIRE(sample.eigenvalues.size() == 50);
    for (std::size_t i = 0; i < sample.eigenvalues.size(); ++i) {
        REQUIRE(sample.eigenvalues[i] >= -1e-10);
        REQUIRE(sample.eigenvalues[i] <= 1.0 + 1e-10);
        if (i > 0) REQUIRE(sample.eigenvalues[i] <= sample.eigenvalues[i - 1]);
    }
}

TEST_CASE("scalar ensemble with unit ratios is uniform", "[jue]") {
    const JueParams params{1, 1.0, 1.0};
    const long long draws = 400;
    double mean = 0.0;
    for (long long r = 0; r < draws; ++r) {
        const ComplexMatrix h = jue_matrix(params, 2024, static_cast<std::uint64_t>(r));
        const double x = h(0, 0).real();
        REQUIRE(std::abs(h(0, 0).imag()) < 1e-12);
        REQUIRE(x >= 0.0);
        REQUIRE(x <= 1.0);
        mean += x;
    }
    mean /= static_cast<double>(draws);
    // Uniform(0,1): sd of the mean is 1/sqrt(12*400).
    REQUIRE(std::abs(mean - 0.5) < 3.0 / std::sqrt(12.0 * draws));
}

TEST_CASE("rank deficiency forces exact zero eigenvalues", "[jue]") {
    const JueParams params{40, 0.6, 1.5};
    REQUIRE(params.m_alpha() == 24);
    for (std::uint64_t stream : {0, 1, 2}) {
        const SpectrumSample sample = spectrum(jue_matrix(params, 314, stream));
        REQUIRE(zero_count(sample.eigenvalues) == 16);
        Rng rng(314, stream);
        REQUIRE(zero_count(jue_eigenvalues(params, rng)) == 16);
    }
}

TEST_CASE("common rescaling of A and B leaves H unchanged", "[jue]") {
    Rng rng(77);
    const ComplexMatrix a = gaussian_matrix(12, 8, rng);
    const ComplexMatrix b = gaussian_matrix(20, 8, rng);
    const ComplexMatrix h1 = jue_matrix_from(a, b);
    const ComplexMatrix h2 = jue_matrix_from(3.7 * a, 3.7 * b);
    double diff = 0.0;
    for (std::size_t i = 0; i < h1.data.size(); ++i)
        diff = std::max(diff, std::abs(h1.data[i] - h2.data[i]));
    REQUIRE(diff < 1e-12);

    REQUIRE_THROWS_AS(jue_matrix_from(ComplexMatrix(3, 2), ComplexMatrix(3, 4)),
                      std::invalid_argument);
}

TEST_CASE("pencil eigenvalues agree with the explicit matrix path", "[jue]") {
    const JueParams params{20, 1.6, 4.8};
    const SpectrumSample direct = spectrum(jue_matrix(params, 55));
    Rng rng(55, 0);
    const std::vector<double> pencil = jue_eigenvalues(params, rng);
    REQUIRE(pencil.size() == direct.eigenvalues.size());
    for (std::size_t i = 0; i < pencil.size(); ++i)
        REQUIRE(pencil[i] == Catch::Approx(direct.eigenvalues[i]).margin(1e-10));
}

TEST_CASE("spectrum handles diagonal input and trailing minors", "[jue]") {
    ComplexMatrix h(3, 3);
    h(0, 0) = {0.3, 0.0};
    h(1, 1) = {0.7, 0.0};
    h(2, 2) = {0.1, 0.0};
    const SpectrumSample sample = spectrum(h, true);
    REQUIRE(sample.eigenvalues[0] == Catch::Approx(0.7).margin(1e-14));
    REQUIRE(sample.eigenvalues[1] == Catch::Approx(0.3).margin(1e-14));
    REQUIRE(sample.eigenvalues[2] == Catch::Approx(0.1).margin(1e-14));
    REQUIRE(sample.has_minor);
    REQUIRE(sample.minor_eigenvalues.size() == 2);
    REQUIRE(sample.minor_eigenvalues[0] == Catch::Approx(0.7).margin(1e-14));
    REQUIRE(sample.minor_eigenvalues[1] == Catch::Approx(0.3).margin(1e-14));

    const ComplexMatrix one(1, 1);
    const SpectrumSample tiny = spectrum(one, true);
    REQUIRE(tiny.eigenvalues.size() == 1);
    REQUIRE(tiny.minor_eigenvalues.empty());
}

TEST_CASE("Cauchy interlacing holds for every sample", "[jue]") {
    const JueParams params{25, 1.6, 4.8};
    for (std::uint64_t stream = 0; stream < 12; ++stream) {
        const SpectrumSample s = sample_spectrum(params, 123, stream, true);
        REQUIRE(s.minor_eigenvalues.size() == 24);
        for (std::size_t i = 0; i < s.minor_eigenvalues.size(); ++i) {
            REQUIRE(s.eigenvalues[i] >= s.minor_eigenvalues[i] - 1e-9);
            REQUIRE(s.minor_eigenvalues[i] >= s.eigenvalues[i + 1] - 1e-9);
        }
    }

    // N=2: a >= m >= b.
    const SpectrumSample pairs = sample_spectrum(JueParams{2, 1.0, 1.0}, 9, 0, true);
    REQUIRE(pairs.eigenvalues[0] >= pairs.minor_eigenvalues[0] - 1e-12);
    REQUIRE(pairs.minor_eigenvalues[0] >= pairs.eigenvalues[1] - 1e-12);
}

TEST_CASE("mc_correlators is deterministic and matches pinned means", "[jue]") {
    const MomentEstimate scalar =
        mc_correlators(JueParams{1, 1.0, 1.0}, Partition({1}), 2000, 42);
    REQUIRE(std::abs(scalar.value - 0.5) <= 3.0 * scalar.error);
    REQUIRE(scalar.error > 0.004);
    REQUIRE(scalar.error < 0.009);

    const MomentEstimate again =
        mc_correlators(JueParams{1, 1.0, 1.0}, Partition({1}), 2000, 42);
    REQUIRE(again.value == scalar.value);
    REQUIRE(again.error == scalar.error);

    // <(tr H)^2> at N=2 against the quadrature oracle.
    const MomentEstimate exact = exact_moments_small_n(2, 0.0, 0.0, Partition({1, 1}));
    const MomentEstimate mc =
        mc_correlators(JueParams{2, 1.0, 1.0}, Partition({1, 1}), 3000, 7);
    REQUIRE(std::abs(mc.value - exact.value) <= 3.0 * mc.error);

    REQUIRE_THROWS_AS(mc_correlators(JueParams{1, 1.0, 1.0}, Partition({1}), 1, 3),
                      std::invalid_argument);
}

TEST_CASE("mc_correlators sees the exact trace mean at N=100", "[jue]") {
    // E[tr H] = N M_alpha/(M_alpha+M_beta) = 50 exactly.
    const MomentEstimate est = mc_correlators(JueParams{100, 1.0, 1.0}, Partition({1}), 80, 11);
    REQUIRE(std::abs(est.value - 50.0) <= 3.0 * est.error);
    REQUIRE(est.error < 0.5);
}

TEST_CASE("edge samples stay below the hard bound and sort descending", "[jue]") {
    const JueParams params{50, 2.0, 2.0};
    const double lambda_plus = jue_edges(2.0, 2.0).second;
    const double hard = std::pow(50.0, 2.0 / 3.0) * (1.0 / lambda_plus - 1.0);
    const auto samples = edge_samples_jue(params, 60, 3, 8);
    REQUIRE(samples.size() == 60);
    for (const auto& y : samples) {
        REQUIRE(y.size() == 3);
        REQUIRE(y[0] <= hard + 1e-9);
        REQUIRE(y[0] >= y[1]);
        REQUIRE(y[1] >= y[2]);
    }
    REQUIRE_THROWS_AS(edge_samples_jue(params, 5, 0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(edge_samples_jue(params, 5, 51, 1), std::invalid_argument);
}

TEST_CASE("edge median is negative at the pinned ensemble", "[jue]") {
    // Top eigenvalues concentrate below lambda_+, so the median rescaled gap
    // is negative at N=200 with 500 draws.
    const auto samples = edge_samples_jue(JueParams{200, 2.0, 2.0}, 500, 1, 17);
    std::vector<double> tops;
    tops.reserve(samples.size());
    for (const auto& y : samples) tops.push_back(y[0]);
    std::nth_element(tops.begin(), tops.begin() + tops.size() / 2, tops.end());
    REQUIRE(tops[tops.size() / 2] < 0.0);
}
