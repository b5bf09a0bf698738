// Acceptance gate: each numbered criterion prints exactly one PASS/FAIL line
// and the process exits with the number of failures. Seeds, budgets, and
// tolerances are pinned here so runs are comparable across machines. The two
// conjecture-grade comparisons (criteria 5 note and 13) never gate; their
// values are printed for the record.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewjue/characters.hpp"
#include "skewjue/density.hpp"
#include "skewjue/equilibrium.hpp"
#include "skewjue/howe.hpp"
#include "skewjue/hurwitz.hpp"
#include "skewjue/jue.hpp"
#include "skewjue/partition.hpp"
#include "skewjue/profile.hpp"
#include "skewjue/rsk.hpp"
#include "skewjue/stats.hpp"
#include "skewjue/tau.hpp"

namespace {

using namespace skewjue;

constexpr long long kBudget = 10'000'000;

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Expansion of J_p^m into words of transpositions (i, p), evaluated through
// the rectangular restriction; the independent route for cotransition moments.
ExactScalar word_moment_sum(int n, int k, int p, int m) {
    if (m > 0 && p == 1) return 0;
    ExactScalar total = 0;
    std::vector<int> word(static_cast<std::size_t>(m), 0);
    while (true) {
        Permutation w(p);
        for (int j = 0; j < m; ++j) w = w * Permutation::transposition(p, word[j], p - 1);
        total += normalized_restriction(n, k, w.cycle_type());
        int j = 0;
        for (; j < m; ++j) {
            if (++word[j] < p - 1) break;
            word[j] = 0;
        }
        if (j == m) break;
    }
    return total;
}

void compositions_of(int w, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (w == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = 1; part <= w; ++part) {
        cur.push_back(part);
        compositions_of(w - part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions_up_to(int w_max) {
    std::vector<std::vector<int>> out = {{}};
    std::vector<int> cur;
    for (int w = 1; w <= w_max; ++w) compositions_of(w, cur, out);
    return out;
}

std::string counts(const char* what, long long ok, long long total) {
    return std::string(what) + " " + std::to_string(ok) + "/" + std::to_string(total);
}

// 1. Exact measure identities over every box with n,k <= 4.
Outcome criterion_measure() {
    long long norm_ok = 0, norm_total = 0, prod_ok = 0, prod_total = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k)
            for (long long p = 0; p <= static_cast<long long>(n) * k; ++p) {
                const HoweParams hp{n, k, p};
                const MeasureTable table = mu_h(hp, kBudget);
                ExactScalar total = 0, raw_total = 0;
                for (const auto& [la, prob] : table.entries) {
                    total += prob;
                    raw_total += mu_h_product_form(hp, la);
                }
                ++norm_total;
                norm_ok += total == 1;
                for (const auto& [la, prob] : table.entries) {
                    ++prod_total;
                    prod_ok += mu_h_product_form(hp, la) == prob * raw_total;
                }
            }
    return {norm_ok == norm_total && prod_ok == prod_total,
            counts("normalization", norm_ok, norm_total) + ", " +
                counts("product form", prod_ok, prod_total)};
}

// 2. Plancherel transition rows and the growth recursion through |la| = 8.
Outcome criterion_plancherel() {
    long long row_ok = 0, row_total = 0, rec_ok = 0, rec_total = 0;
    std::map<Partition, ExactScalar> prev;
    for (int p = 1; p <= 8; ++p) {
        std::map<Partition, ExactScalar> grown;
        if (p == 1)
            grown[Partition{1}] = 1;
        else
            for (const auto& [nu, mass] : prev)
                for (const auto& [la, prob] : transition_probabilities(nu)) grown[la] += mass * prob;
        prev.clear();
        for (const Partition& la : partitions_of(p)) {
            ++rec_total;
            rec_ok += grown[la] == plancherel(la);
            prev[la] = plancherel(la);
            ExactScalar row = 0;
            for (const auto& [child, prob] : transition_probabilities(la)) row += prob;
            ++row_total;
            row_ok += row == 1;
        }
    }
    return {row_ok == row_total && rec_ok == rec_total,
            counts("rows", row_ok, row_total) + ", " + counts("recursion", rec_ok, rec_total)};
}

// 3. Dual-RSK sampler against the exact measure, chi-square at 10^-3.
Outcome criterion_sampler() {
    const std::vector<HoweParams> triples = {{2, 2, 2}, {2, 3, 3}, {3, 3, 4}};
    const long long draws_per = 100000;
    bool pass = true;
    std::string detail;
    std::uint64_t seed = 30;
    for (const HoweParams& hp : triples) {
        const MeasureTable table = mu_h(hp, kBudget);
        std::map<Partition, long long> hits;
        long long matched = 0;
        for (const Partition& la : sample_howe(hp, draws_per, seed++)) ++hits[la];
        std::vector<long long> obs;
        std::vector<double> probs;
        for (const auto& [la, prob] : table.entries) {
            obs.push_back(hits[la]);
            matched += hits[la];
            probs.push_back(to_double(prob));
        }
        const Chi2Result r = chi2_gof(obs, probs);
        pass = pass && matched == draws_per && r.p_value >= 1e-3;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s(%d,%d,%lld) p=%.3f", detail.empty() ? "" : ", ", hp.n,
                      hp.k, hp.p, r.p_value);
        detail += buf;
    }
    return {pass, detail};
}

// 4. Character routes agree exactly; first cotransition moment closed form.
Outcome criterion_characters() {
    long long st_ok = 0, st_total = 0, pair_ok = 0, pair_total = 0;
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            for (int p = 1; p <= std::min(5, n * k); ++p)
                for (const Partition& la : partitions_of(p)) {
                    ++st_total;
                    st_ok += stanley_rectangular(n, k, la) == normalized_restriction(n, k, la);
                }
            for (int p = 1; p <= std::min(4, n * k); ++p)
                for (const Partition& la : partitions_of(p)) {
                    ++pair_total;
                    pair_ok += stanley_pairs(n, k, class_representative(p, la), kBudget) ==
                               normalized_restriction(n, k, la);
                }
        }
    long long cot_ok = 0, cot_total = 0;
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int p = 1; p <= std::min(4, n * k); ++p)
                for (int m = 1; m <= 3; ++m) {
                    ++cot_total;
                    cot_ok += cotransition_moment(HoweParams{n, k, p}, m, kBudget) ==
                              word_moment_sum(n, k, p, m);
                }
    long long m1_ok = 0, m1_total = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            if (n * k == 1) continue;
            for (long long p = 1; p <= static_cast<long long>(n) * k; ++p) {
                const ExactScalar expect((p - 1) * (k - n), static_cast<long long>(n) * k - 1);
                ++m1_total;
                m1_ok += cotransition_moment(HoweParams{n, k, p}, 1, kBudget) == expect;
            }
        }
    return {st_ok == st_total && pair_ok == pair_total && cot_ok == cot_total && m1_ok == m1_total,
            counts("stanley", st_ok, st_total) + ", " + counts("pairs", pair_ok, pair_total) +
                ", " + counts("cotransition", cot_ok, cot_total) + ", " +
                counts("M1", m1_ok, m1_total)};
}

// 5. Sign character of YJM monomials: brute-force word sum vs the closed form
// (-1)^{|kappa|} (p-1)^{kappa_1} ... (p-s)^{kappa_s}. The cotransition-route
// values answer a different question; printed, never compared.
Outcome criterion_sign_route() {
    long long ok = 0, total = 0;
    for (int p = 2; p <= 6; ++p)
        for (const std::vector<int>& kappa : compositions_up_to(4)) {
            if (static_cast<int>(kappa.size()) > p) continue;
            ExactScalar closed = 1;
            long long weight = 0;
            for (std::size_t i = 0; i < kappa.size(); ++i) {
                weight += kappa[i];
                for (int t = 0; t < kappa[i]; ++t) closed *= p - static_cast<int>(i) - 1;
            }
            if (weight % 2) closed = -closed;
            ++total;
            ok += tau_word_sign_sum(p, kappa, kBudget) == closed;
        }
    const ExactScalar cot1 = cotransition_moment(HoweParams{2, 2, 2}, 1, kBudget);
    const ExactScalar cot2 = cotransition_moment(HoweParams{3, 3, 3}, 2, kBudget);
    return {ok == total,
            counts("sign route", ok, total) +
                "; report-only cotransition vs sign: " + to_fraction_string(cot1) + " vs " +
                to_fraction_string(diagonal_yjm_character(2, {1})) + " at (2,2,2,m=1), " +
                to_fraction_string(cot2) + " vs " +
                to_fraction_string(diagonal_yjm_character(3, {2})) + " at (3,3,3,m=2)"};
}

// 6. Hurwitz character sums and the triple-monotone/multiparametric relation.
Outcome criterion_hurwitz() {
    long long cs_ok = 0, cs_total = 0;
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}})
        for (int p = 2; p <= 4; ++p)
            for (const std::vector<int>& kappa : compositions_up_to(4)) {
                if (static_cast<int>(kappa.size()) > p) continue;
                ExactScalar direct = 0;
                for (const Permutation& w : tau_words(p, kappa, kBudget))
                    direct += stanley_pairs(n, k, w, kBudget);
                ++cs_total;
                cs_ok += hurwitz_character_sum(n, k, p, kappa, kBudget) == direct;
            }
    long long tm_ok = 0, tm_total = 0;
    const std::vector<std::pair<ExactScalar, ExactScalar>> ratios = {
        {ExactScalar(2), ExactScalar(3)},
        {ExactScalar(1), ExactScalar(1)},
        {ExactScalar(1, 2), ExactScalar(7, 3)}};
    for (const auto& [ca, cb] : ratios)
        for (int w = 1; w <= 4; ++w)
            for (const Partition& kappa : partitions_of(w))
                for (int g = 0; g <= 1; ++g) {
                    ++tm_total;
                    tm_ok += triple_monotone_relation_check(kappa, g, ca, cb, kBudget).equal;
                }
    return {cs_ok == cs_total && tm_ok == tm_total,
            counts("character sums", cs_ok, cs_total) + ", " +
                counts("triple monotone", tm_ok, tm_total)};
}

// 7. Tau function: Schur route == Hurwitz route through degree 3; <tr H>
// against the Beta moment at N=1 and Monte Carlo at N=100.
Outcome criterion_tau() {
    long long route_ok = 0, route_total = 0;
    const std::vector<std::pair<ExactScalar, ExactScalar>> ratios = {
        {ExactScalar(2), ExactScalar(3)},
        {ExactScalar(1), ExactScalar(1)},
        {ExactScalar(1, 2), ExactScalar(7, 3)}};
    for (const auto& [ca, cb] : ratios) {
        const GammaParams gp{ca, cb};
        const SeriesTruncation schur = tau_schur_truncation(gp, 3);
        const SeriesTruncation hurwitz = tau_hurwitz_truncation(gp, 3, 3, kBudget);
        ++route_total;
        route_ok += schur.coefficients.size() == hurwitz.coefficients.size();
        for (const auto& [key, value] : schur.coefficients) {
            ++route_total;
            route_ok += hurwitz.coeff(key.first, key.second) == value;
        }
    }
    const GammaParams gp{ExactScalar(2), ExactScalar(3)};
    const double quad = exact_moments_small_n(1, 1.0, 2.0, Partition{1}).value;
    const double gen = generating_function_coefficient(1, gp, Partition{1});
    const bool n1_ok = std::abs(quad - 0.4) <= 1e-12 && std::abs(gen - 0.4) <= 1e-12;
    const JueParams params{100, 2.0, 3.0};
    const MomentEstimate mc = mc_correlators(params, Partition{1}, 200, 17);
    const double dev = std::abs(mc.value - 40.0) / mc.error;
    char buf[160];
    std::snprintf(buf, sizeof buf, ", N=1 moment |err|<=1e-12: %s, N=100 MC dev %.2f SE",
                  n1_ok ? "yes" : "NO", dev);
    return {route_ok == route_total && n1_ok && dev <= 3.0,
            counts("route coefficients", route_ok, route_total) + buf};
}

// 8. One spectrum at N=1000, c_alpha=0.95, c_beta=1.235: the deterministic
// kernel forces exactly N - M_alpha = 50 zeros; ECDF within KS 0.05 of sigma.
Outcome criterion_jue_limit() {
    const JueParams params{1000, 0.95, 1.235};
    Rng rng(2026, 0);
    const std::vector<double> eig = jue_eigenvalues(params, rng);
    long long zeros = 0;
    for (double x : eig) zeros += std::abs(x) <= 1e-9;
    DensityCdf cdf(jue_limit_density(params.c_alpha, params.c_beta));
    const KsResult ks = ks_one_sample(eig, [&](double x) { return cdf(x); });
    char buf[96];
    std::snprintf(buf, sizeof buf, "zeros %lld (want 50), KS %.4f (<= 0.05)", zeros, ks.statistic);
    return {zeros == 50 && ks.statistic <= 0.05, buf};
}

// 9. Limit shape: median sup-distance of ten rescaled diagram profiles at
// n=k=200, p=nk/2 from Omega at c=1, alpha=1 stays below 0.05.
Outcome criterion_limit_shape() {
    const HoweParams hp{200, 200, 20000};
    const HoweAsymptoticParams ap{1.0, 1.0};
    const LimitShape shape = limit_shape(ap);
    const auto [t_lo, t_hi] = howe_band(ap);
    const double lo = std::min(t_lo, -1.0) - 0.2, hi = std::max(t_hi, ap.c) + 0.2;
    std::vector<double> sups;
    for (const Partition& la : sample_howe(hp, 10, 5)) {
        const EmpiricalProfile f = empirical_profile(la, hp.n);
        double sup = 0.0;
        auto probe = [&](double x) { sup = std::max(sup, std::abs(f(x) - shape(x))); };
        for (int i = 0; i < 1500; ++i) probe(lo + (hi - lo) * i / 1499.0);
        for (double x : f.breakpoints())
            if (x >= lo && x <= hi) probe(x);
        sups.push_back(sup);
    }
    const double med = median(sups);
    char buf[64];
    std::snprintf(buf, sizeof buf, "median sup distance %.4f (<= 0.05)", med);
    return {med <= 0.05, buf};
}

// 10. Markov-Krein correspondence and the pushforward to [0, 1].
Outcome criterion_markov_krein() {
    const std::vector<HoweAsymptoticParams> sets = {
        {1.0, 1.0}, {2.0, 1.0}, {3.0, 1.0 / 5.4}, {0.7, 2.0}, {1.5, 0.8}};
    double worst_mk = 0.0, worst_push = 0.0;
    for (const HoweAsymptoticParams& hp : sets) {
        worst_mk = std::max(worst_mk, markov_krein_check(hp, markov_krein_grid(hp)));
        const auto [ca, cb] = howe_to_jue_params(hp);
        const DensityModel direct = jue_limit_density(ca, cb);
        const DensityModel pushed = pushforward_to_unit(howe_transition_measure(hp), hp.c);
        double worst = std::max(std::abs(direct.a - pushed.a), std::abs(direct.b - pushed.b));
        if (direct.atoms.size() != pushed.atoms.size())
            worst = 1.0;
        else
            for (std::size_t i = 0; i < direct.atoms.size(); ++i)
                worst =
                    std::max({worst, std::abs(direct.atoms[i].location - pushed.atoms[i].location),
                              std::abs(direct.atoms[i].mass - pushed.atoms[i].mass)});
        for (int i = 0; i < 100; ++i) {
            const double x = direct.a + (direct.b - direct.a) * (0.02 + 0.96 * i / 99.0);
            worst = std::max(worst, std::abs(direct.density(x) - pushed.density(x)));
        }
        worst_push = std::max(worst_push, worst);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "residual %.2e (<= 1e-6), pushforward %.2e (<= 1e-8)", worst_mk,
                  worst_push);
    return {worst_mk <= 1e-6 && worst_push <= 1e-8, buf};
}

// 11. Equilibrium solver recovers all three reference laws.
Outcome criterion_equilibrium() {
    const double pi = std::acos(-1.0);
    double worst_edge = 0.0, worst_density = 0.0;
    {
        const EquilibriumResult eq = equilibrium_solver(gue_potential());
        worst_edge = std::max({worst_edge, std::abs(eq.a + 2.0), std::abs(eq.b - 2.0)});
        for (int i = 0; i <= 40; ++i) {
            const double x = -1.9 + 3.8 * i / 40.0;
            worst_density =
                std::max(worst_density, std::abs(eq.density(x) - std::sqrt(4.0 - x * x) / (2.0 * pi)));
        }
    }
    {
        const EquilibriumResult eq = equilibrium_solver(jue_potential(1.6, 4.8));
        const auto [lo, hi] = jue_edges(1.6, 4.8);
        const DensityModel model = jue_limit_density(1.6, 4.8);
        worst_edge = std::max({worst_edge, std::abs(eq.a - lo), std::abs(eq.b - hi)});
        for (int i = 0; i <= 40; ++i) {
            const double x = lo + (hi - lo) * (0.02 + 0.96 * i / 40.0);
            worst_density = std::max(worst_density, std::abs(eq.density(x) - model.density(x)));
        }
    }
    {
        const HoweAsymptoticParams hp{2.0, 1.0};
        const EquilibriumResult eq = equilibrium_solver(howe_potential(hp));
        const auto [lo, hi] = howe_band(hp);
        const DensityModel model = howe_limit_density(hp);
        worst_edge = std::max({worst_edge, std::abs(eq.a - lo), std::abs(eq.b - hi)});
        for (int i = 0; i <= 40; ++i) {
            const double x = lo + (hi - lo) * (0.02 + 0.96 * i / 40.0);
            worst_density = std::max(worst_density, std::abs(eq.density(x) - model.density(x)));
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "edges off by %.2e (<= 1e-6), density by %.2e (<= 1e-4)",
                  worst_edge, worst_density);
    return {worst_edge <= 1e-6 && worst_density <= 1e-4, buf};
}

// 12. Cauchy interlacing on every sample; the profile-to-Omega median
// sup-distance over five seeds falls as N grows and ends below 0.1.
Outcome criterion_interlacing() {
    const HoweAsymptoticParams ap = jue_to_howe_params(1.6, 4.8);
    const LimitShape shape = limit_shape(ap);
    const auto [t_lo, t_hi] = howe_band(ap);
    const double lo = std::min(t_lo, -1.0) - 0.2, hi = std::max(t_hi, ap.c) + 0.2;
    double worst_violation = 0.0;
    std::vector<double> medians;
    for (int n : {50, 500, 1500}) {
        const JueParams params{n, 1.6, 4.8};
        std::vector<double> sups;
        for (int r = 0; r < 5; ++r) {
            const SpectrumSample s = sample_spectrum(params, 6, static_cast<std::uint64_t>(r), true);
            for (std::size_t j = 0; j < s.minor_eigenvalues.size(); ++j) {
                worst_violation = std::max(worst_violation,
                                           s.minor_eigenvalues[j] - s.eigenvalues[j]);
                worst_violation = std::max(worst_violation,
                                           s.eigenvalues[j + 1] - s.minor_eigenvalues[j]);
            }
            sups.push_back(sup_distance(interlacing_profile(s, ap.c), shape, lo, hi, 1500));
        }
        medians.push_back(median(sups));
    }
    const bool decreasing = medians[0] > medians[1] && medians[1] > medians[2];
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "interlacing violation %.2e (<= 1e-9), medians %.4f > %.4f > %.4f, last <= 0.1",
                  worst_violation, medians[0], medians[1], medians[2]);
    return {worst_violation <= 1e-9 && decreasing && medians[2] <= 0.1, buf};
}

// 13. Matched soft-edge samples and their two-sample KS statistic; the
// comparison is conjecture-grade, so emission is the only gate.
Outcome criterion_edge_compare() {
    const int n = 100, k = 300;
    const long long count = 500;
    const HoweAsymptoticParams ap = jue_to_howe_params(1.6, 4.8);
    // alpha_h = p/(nk - p), so the matched box count is nk alpha_h/(1 + alpha_h).
    const long long p =
        std::llround(static_cast<double>(n) * k * ap.alpha_h / (1.0 + ap.alpha_h));
    const double t_plus = howe_band(ap).second;
    const double scale = std::pow(static_cast<double>(n), 2.0 / 3.0);
    std::vector<double> x1;
    for (const Partition& la : sample_howe(HoweParams{n, k, p}, count, 77))
        x1.push_back(scale * (la.part(1) / (t_plus * n) - 1.0));
    std::vector<double> y1;
    for (const std::vector<double>& ys : edge_samples_jue(JueParams{n, 1.6, 4.8}, count, 1, 78))
        y1.push_back(ys[0]);
    const KsResult ks = ks_two_sample(x1, y1);
    const bool emitted = x1.size() == static_cast<std::size_t>(count) &&
                         y1.size() == static_cast<std::size_t>(count) && ks.statistic >= 0.0 &&
                         ks.statistic <= 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "report-only: KS %.4f over %lld samples each at p=%lld (never gated)",
                  ks.statistic, count, p);
    return {emitted, buf};
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"exact skew Howe measure identities", criterion_measure},
        {"plancherel transition identities", criterion_plancherel},
        {"dual-RSK sampler chi-square", criterion_sampler},
        {"character cross-routes", criterion_characters},
        {"sign-route YJM closed form", criterion_sign_route},
        {"hurwitz identities", criterion_hurwitz},
        {"tau function consistency", criterion_tau},
        {"JUE limit law at N=1000", criterion_jue_limit},
        {"diagram limit shape at n=k=200", criterion_limit_shape},
        {"markov-krein correspondence", criterion_markov_krein},
        {"equilibrium solver reference laws", criterion_equilibrium},
        {"interlacing and profile convergence", criterion_interlacing},
        {"matched soft-edge comparison", criterion_edge_compare},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        failures += !out.pass;
        std::printf("CRITERION %02zu %s  %s: %s  [%.1fs]\n", i + 1, out.pass ? "PASS" : "FAIL",
                    criteria[i].first, out.detail.c_str(), dt);
        std::fflush(stdout);
    }
    std::printf("ACCEPTANCE %d/13 criteria passed\n", 13 - failures);
    return failures;
}
