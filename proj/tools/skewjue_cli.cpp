// skewjue: sampling, verification suites, and figure data for the skew Howe /
// JUE laboratory. Every output is a deterministic function of the command
// line, and every file starts with a provenance header (version, command,
// seed, realized parameters). Exit codes: 0 success, 1 failed checks or
// runtime errors, 2 infeasible or invalid parameter combinations.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "skewjue/characters.hpp"
#include "skewjue/density.hpp"
#include "skewjue/equilibrium.hpp"
#include "skewjue/howe.hpp"
#include "skewjue/hurwitz.hpp"
#include "skewjue/io.hpp"
#include "skewjue/jue.hpp"
#include "skewjue/partition.hpp"
#include "skewjue/permutation.hpp"
#include "skewjue/profile.hpp"
#include "skewjue/rational.hpp"
#include "skewjue/report.hpp"
#include "skewjue/rng.hpp"
#include "skewjue/rsk.hpp"
#include "skewjue/stats.hpp"
#include "skewjue/tau.hpp"

using namespace skewjue;

namespace {

struct CommonOpts {
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    long long budget_tuples = 10'000'000;
    long long budget_partitions = 10'000'000;
    long long samples = 1;
    long long dim = 2;
    double c_alpha = 1.0;
    double c_beta = 1.0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", o.out, "output path or prefix");
    cmd->add_option("--format", o.format, "table format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--budget-tuples", o.budget_tuples, "cap on enumerated tuples")
        ->capture_default_str();
    cmd->add_option("--budget-partitions", o.budget_partitions, "cap on enumerated partitions")
        ->capture_default_str();
    cmd->add_option("--samples", o.samples, "number of random replicas")->capture_default_str();
    cmd->add_option("--dim", o.dim, "matrix size N or diagram rows n")->capture_default_str();
    cmd->add_option("--c-alpha", o.c_alpha, "ratio M_alpha / N")->capture_default_str();
    cmd->add_option("--c-beta", o.c_beta, "ratio M_beta / N")->capture_default_str();
}

std::string joined_command(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

MetaInfo make_meta(const std::string& cmdline, const CommonOpts& o) {
    MetaInfo meta;
    meta.command = cmdline;
    meta.seed = o.seed;
    return meta;
}

std::string grid_csv(const MetaInfo& meta, const std::string& header,
                     const std::vector<std::string>& rows) {
    std::string body;
    for (const std::string& line : csv_meta_lines(meta)) body += line + '\n';
    body += header + '\n';
    for (const std::string& row : rows) body += row + '\n';
    return body;
}

// ---------------------------------------------------------------- sampling

int run_sample_howe(const CommonOpts& o, long long k_opt, long long p_opt,
                    const std::string& table_path, const std::string& cmdline) {
    const int n = static_cast<int>(o.dim);
    const int k = static_cast<int>(k_opt > 0 ? k_opt : o.dim);
    const long long cells = static_cast<long long>(n) * k;
    const long long p = p_opt >= 0 ? p_opt : cells / 2;
    const HoweParams params{n, k, p};
    params.validate();

    MetaInfo meta = make_meta(cmdline, o);
    meta.add("n", static_cast<long long>(n));
    meta.add("k", static_cast<long long>(k));
    meta.add("p", p);
    meta.add("samples", o.samples);

    const std::vector<Partition> draws = sample_howe(params, o.samples, o.seed);
    const std::string path = o.out.empty() ? "howe_samples." + o.format : o.out;
    if (o.format == "json") {
        Json j;
        meta_to_json(j, meta);
        Json rows = Json::array();
        for (std::size_t r = 0; r < draws.size(); ++r)
            rows.push_back(Json{{"sample_id", r}, {"partition", partition_to_json(draws[r])}});
        j["samples"] = std::move(rows);
        write_json(path, j);
    } else {
        std::vector<std::string> rows;
        std::string header = "sample_id";
        for (int i = 1; i <= n; ++i) header += ",lambda_" + std::to_string(i);
        for (std::size_t r = 0; r < draws.size(); ++r) {
            std::string row = std::to_string(r);
            for (int i = 1; i <= n; ++i) row += ',' + std::to_string(draws[r].part(i));
            rows.push_back(std::move(row));
        }
        write_text(path, grid_csv(meta, header, rows));
    }
    if (!table_path.empty()) {
        const MeasureTable table = mu_h(params, o.budget_partitions);
        Json j;
        meta_to_json(j, meta);
        j["n"] = n;
        j["k"] = k;
        j["p"] = p;
        Json entries = Json::array();
        for (const auto& [la, prob] : table.entries)
            entries.push_back(
                Json{{"partition", partition_to_json(la)}, {"prob", to_fraction_string(prob)}});
        j["entries"] = std::move(entries);
        write_json(table_path, j);
    }
    std::printf("wrote %lld diagram samples to %s\n", o.samples, path.c_str());
    return 0;
}

int run_sample_jue(const CommonOpts& o, bool with_minor, const std::string& cmdline) {
    const JueParams params{o.dim, o.c_alpha, o.c_beta};
    params.validate();

    MetaInfo meta = make_meta(cmdline, o);
    meta.add("N", o.dim);
    meta.add("m_alpha", params.m_alpha());
    meta.add("m_beta", params.m_beta());
    meta.add("alpha", params.alpha());
    meta.add("beta", params.beta());
    meta.add("samples", o.samples);
    meta.add("with_minor", static_cast<long long>(with_minor));

    const std::string path = o.out.empty() ? "jue_spectrum." + o.format : o.out;
    if (o.format == "json") {
        Json j;
        meta_to_json(j, meta);
        Json rows = Json::array();
        for (long long r = 0; r < o.samples; ++r) {
            const SpectrumSample s =
                sample_spectrum(params, o.seed, static_cast<std::uint64_t>(r), with_minor);
            Json row;
            row["sample_id"] = r;
            row["eigenvalues"] = s.eigenvalues;
            if (with_minor) row["minor_eigenvalues"] = s.minor_eigenvalues;
            rows.push_back(std::move(row));
        }
        j["samples"] = std::move(rows);
        write_json(path, j);
    } else {
        std::vector<std::string> rows;
        for (long long r = 0; r < o.samples; ++r) {
            const SpectrumSample s =
                sample_spectrum(params, o.seed, static_cast<std::uint64_t>(r), with_minor);
            for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
                rows.push_back(std::to_string(r) + ',' + std::to_string(i) + ',' +
                               format_double(s.eigenvalues[i]) + ",0");
            for (std::size_t i = 0; i < s.minor_eigenvalues.size(); ++i)
                rows.push_back(std::to_string(r) + ',' + std::to_string(i) + ',' +
                               format_double(s.minor_eigenvalues[i]) + ",1");
        }
        write_text(path, grid_csv(meta, "sample_id,eig_index,value,is_minor", rows));
    }
    std::printf("wrote %lld spectrum samples to %s\n", o.samples, path.c_str());
    return 0;
}

// ------------------------------------------------------------ verify suites

// Expansion of J_p^m into words of transpositions (i, p), evaluated through
// the rectangular restriction. Exponential in m; callers keep p, m small.
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

std::vector<ReportEntry> suite_measure(int max_dim, long long budget) {
    std::vector<ReportEntry> out;
    long long norm_ok = 0, norm_total = 0, prod_ok = 0, prod_total = 0;
    for (int n = 1; n <= max_dim; ++n)
        for (int k = 1; k <= max_dim; ++k)
            for (long long p = 0; p <= static_cast<long long>(n) * k; ++p) {
                const HoweParams hp{n, k, p};
                const MeasureTable table = mu_h(hp, budget);
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
    const std::string label = "n,k <= " + std::to_string(max_dim);
    out.push_back(count_entry("measure normalization", label, norm_ok, norm_total));
    out.push_back(count_entry("product form vs dimension form", label, prod_ok, prod_total));

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
    out.push_back(count_entry("plancherel transition rows sum to 1", "|la| <= 8", row_ok, row_total));
    out.push_back(count_entry("plancherel growth recursion", "|la| <= 8", rec_ok, rec_total));
    return out;
}

std::vector<ReportEntry> suite_characters(long long budget) {
    std::vector<ReportEntry> out;

    long long st_ok = 0, st_total = 0, pair_ok = 0, pair_total = 0;
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int p = 1; p <= std::min(4, n * k); ++p)
                for (const Partition& la : partitions_of(p)) {
                    const ExactScalar expect = normalized_restriction(n, k, la);
                    ++st_total;
                    st_ok += stanley_rectangular(n, k, la) == expect;
                    ++pair_total;
                    pair_ok += stanley_pairs(n, k, class_representative(p, la), budget) == expect;
                }
    out.push_back(
        count_entry("stanley content formula vs restriction", "n,k <= 3, p <= 4", st_ok, st_total));
    out.push_back(
        count_entry("stanley pair expansion vs restriction", "n,k <= 3, p <= 4", pair_ok, pair_total));

    long long cot_ok = 0, cot_total = 0;
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int p = 1; p <= std::min(4, n * k); ++p)
                for (int m = 1; m <= 3; ++m) {
                    ++cot_total;
                    cot_ok += cotransition_moment(HoweParams{n, k, p}, m, budget) ==
                              word_moment_sum(n, k, p, m);
                }
    out.push_back(count_entry("cotransition moments vs YJM word sums", "n,k <= 3, p <= 4, m <= 3",
                              cot_ok, cot_total));

    long long m1_ok = 0, m1_total = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            if (n * k == 1) continue;
            for (long long p = 1; p <= static_cast<long long>(n) * k; ++p) {
                const ExactScalar expect((p - 1) * (k - n), static_cast<long long>(n) * k - 1);
                ++m1_total;
                m1_ok += cotransition_moment(HoweParams{n, k, p}, 1, budget) == expect;
            }
        }
    out.push_back(count_entry("first cotransition moment closed form", "n,k <= 4", m1_ok, m1_total));

    std::vector<std::vector<int>> comps;
    {
        std::vector<int> cur;
        for (int w = 1; w <= 4; ++w) compositions_of(w, cur, comps);
    }
    long long sign_ok = 0, sign_total = 0;
    for (int p = 2; p <= 6; ++p)
        for (const std::vector<int>& kappa : comps) {
            if (static_cast<int>(kappa.size()) > p) continue;
            ++sign_total;
            sign_ok += tau_word_sign_sum(p, kappa, budget) == diagonal_yjm_character(p, kappa);
        }
    out.push_back(count_entry("sign character of YJM monomials vs tau words", "p <= 6, |kappa| <= 4",
                              sign_ok, sign_total));

    // The two YJM moment families answer different questions; record the
    // values side by side without asserting equality.
    {
        const ExactScalar cot = cotransition_moment(HoweParams{2, 2, 2}, 1, budget);
        const ExactScalar sign = diagonal_yjm_character(2, {1});
        out.push_back(report_only_entry("yjm cotransition vs sign-route value", "n=2,k=2,p=2,m=1",
                                        to_fraction_string(cot), to_fraction_string(sign),
                                        std::abs(to_double(cot - sign))));
    }
    {
        const ExactScalar cot = cotransition_moment(HoweParams{3, 3, 3}, 2, budget);
        const ExactScalar sign = diagonal_yjm_character(3, {2});
        out.push_back(report_only_entry("yjm cotransition vs sign-route value", "n=3,k=3,p=3,m=2",
                                        to_fraction_string(cot), to_fraction_string(sign),
                                        std::abs(to_double(cot - sign))));
    }
    return out;
}

std::vector<ReportEntry> suite_hurwitz(long long budget) {
    std::vector<ReportEntry> out;

    long long cs_ok = 0, cs_total = 0;
    const std::vector<std::vector<int>> kappas = {{}, {1}, {2}, {1, 1}, {2, 1}, {3}};
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}})
        for (int p = 2; p <= 4; ++p)
            for (const std::vector<int>& kappa : kappas) {
                ExactScalar direct = 0;
                for (const Permutation& w : tau_words(p, kappa, budget))
                    direct += stanley_pairs(n, k, w, budget);
                ++cs_total;
                cs_ok += hurwitz_character_sum(n, k, p, kappa, budget) == direct;
            }
    out.push_back(
        count_entry("hurwitz character sum vs stanley pairs", "n,k <= 3, p <= 4", cs_ok, cs_total));

    long long tm_ok = 0, tm_total = 0;
    const std::vector<std::pair<ExactScalar, ExactScalar>> ratios = {
        {ExactScalar(2), ExactScalar(3)},
        {ExactScalar(1), ExactScalar(1)},
        {ExactScalar(1, 2), ExactScalar(7, 3)}};
    for (const auto& [ca, cb] : ratios)
        for (int w = 1; w <= 3; ++w)
            for (const Partition& kappa : partitions_of(w))
                for (int g = 0; g <= 1; ++g) {
                    ++tm_total;
                    tm_ok += triple_monotone_relation_check(kappa, g, ca, cb, budget).equal;
                }
    out.push_back(
        count_entry("triple monotone vs multiparametric", "|kappa| <= 3, g <= 1", tm_ok, tm_total));
    return out;
}

std::vector<ReportEntry> suite_markov_krein() {
    std::vector<ReportEntry> out;
    const std::vector<HoweAsymptoticParams> sets = {
        {1.0, 1.0}, {2.0, 1.0}, {3.0, 1.0 / 5.4}, {0.7, 2.0}, {1.5, 0.8}};
    for (const HoweAsymptoticParams& hp : sets) {
        const std::string label =
            "c=" + format_double(hp.c) + ", alpha_h=" + format_double(hp.alpha_h);
        const double resid = markov_krein_check(hp, markov_krein_grid(hp));
        out.push_back(bound_entry("markov-krein correspondence residual", label, resid, 1e-6));
    }
    for (const HoweAsymptoticParams& hp : sets) {
        const std::string label =
            "c=" + format_double(hp.c) + ", alpha_h=" + format_double(hp.alpha_h);
        const auto [ca, cb] = howe_to_jue_params(hp);
        const DensityModel direct = jue_limit_density(ca, cb);
        const DensityModel pushed = pushforward_to_unit(howe_transition_measure(hp), hp.c);
        double worst = std::max(std::abs(direct.a - pushed.a), std::abs(direct.b - pushed.b));
        if (direct.atoms.size() != pushed.atoms.size())
            worst = 1.0;
        else
            for (std::size_t i = 0; i < direct.atoms.size(); ++i)
                worst = std::max({worst, std::abs(direct.atoms[i].location - pushed.atoms[i].location),
                                  std::abs(direct.atoms[i].mass - pushed.atoms[i].mass)});
        for (int i = 0; i < 100; ++i) {
            const double x = direct.a + (direct.b - direct.a) * (0.02 + 0.96 * i / 99.0);
            worst = std::max(worst, std::abs(direct.density(x) - pushed.density(x)));
        }
        out.push_back(bound_entry("transition measure pushforward vs sigma", label, worst, 1e-8));
    }
    return out;
}

std::vector<ReportEntry> suite_tau(std::uint64_t seed, long long samples, long long budget) {
    std::vector<ReportEntry> out;
    const std::vector<std::pair<ExactScalar, ExactScalar>> ratios = {
        {ExactScalar(2), ExactScalar(3)},
        {ExactScalar(1), ExactScalar(1)},
        {ExactScalar(1, 2), ExactScalar(7, 3)}};
    for (const auto& [ca, cb] : ratios) {
        const GammaParams gp{ca, cb};
        const SeriesTruncation schur = tau_schur_truncation(gp, 3);
        const SeriesTruncation hurwitz = tau_hurwitz_truncation(gp, 3, 3, budget);
        long long agreed = schur.coefficients.size() == hurwitz.coefficients.size();
        for (const auto& [key, value] : schur.coefficients)
            agreed += hurwitz.coeff(key.first, key.second) == value;
        const long long total = 1 + static_cast<long long>(schur.coefficients.size());
        const std::string label =
            "c_alpha=" + to_fraction_string(ca) + ", c_beta=" + to_fraction_string(cb);
        out.push_back(count_entry("tau schur route vs hurwitz route (d <= 3)", label, agreed, total));
    }
    {
        // N=1 JUE is a Beta(alpha+1, beta+1) draw: <H> = c_alpha / (c_alpha + c_beta).
        const GammaParams gp{ExactScalar(2), ExactScalar(3)};
        const double quad = exact_moments_small_n(1, 1.0, 2.0, Partition{1}).value;
        const double gen = generating_function_coefficient(1, gp, Partition{1});
        out.push_back(
            numeric_entry("first moment at N=1 vs beta moment", "alpha=1, beta=2", gen, quad, 1e-12));
    }
    {
        const JueParams params{100, 2.0, 3.0};
        const MomentEstimate mc = mc_correlators(params, Partition{1}, samples, seed);
        const double expect = 100.0 * 200.0 / 500.0;  // exchangeability: N M_alpha / (M_alpha + M_beta)
        out.push_back(bound_entry("MC trace mean deviation in standard errors", "N=100, kappa=(1)",
                                  std::abs(mc.value - expect) / mc.error, 3.0));
        const GammaParams gp{ExactScalar(2), ExactScalar(3)};
        const MomentEstimate mc2 = mc_correlators(params, Partition{2}, samples, seed + 1);
        const double pred = 2.0 * generating_function_coefficient(100, gp, Partition{2});
        out.push_back(bound_entry("MC second moment deviation in standard errors",
                                  "N=100, kappa=(2)", std::abs(mc2.value - pred) / mc2.error, 3.0));
    }
    return out;
}

std::vector<ReportEntry> suite_equilibrium() {
    std::vector<ReportEntry> out;
    {
        const EquilibriumResult eq = equilibrium_solver(gue_potential());
        out.push_back(numeric_entry("gue equilibrium left edge", "V=y^2/2", eq.a, -2.0, 1e-6));
        out.push_back(numeric_entry("gue equilibrium right edge", "V=y^2/2", eq.b, 2.0, 1e-6));
        const double pi = std::acos(-1.0);
        double worst = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const double x = -1.9 + 3.8 * i / 40.0;
            worst = std::max(worst, std::abs(eq.density(x) - std::sqrt(4.0 - x * x) / (2.0 * pi)));
        }
        out.push_back(bound_entry("gue equilibrium density vs semicircle", "V=y^2/2", worst, 1e-4));
    }
    {
        const double ca = 1.6, cb = 4.8;
        const EquilibriumResult eq = equilibrium_solver(jue_potential(ca, cb));
        const auto [lo, hi] = jue_edges(ca, cb);
        const DensityModel model = jue_limit_density(ca, cb);
        out.push_back(numeric_entry("jue equilibrium left edge", "c_alpha=1.6, c_beta=4.8", eq.a, lo, 1e-6));
        out.push_back(numeric_entry("jue equilibrium right edge", "c_alpha=1.6, c_beta=4.8", eq.b, hi, 1e-6));
        double worst = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const double x = lo + (hi - lo) * (0.02 + 0.96 * i / 40.0);
            worst = std::max(worst, std::abs(eq.density(x) - model.density(x)));
        }
        out.push_back(
            bound_entry("jue equilibrium density vs limit law", "c_alpha=1.6, c_beta=4.8", worst, 1e-4));
    }
    {
        const HoweAsymptoticParams hp{2.0, 1.0};
        const EquilibriumResult eq = equilibrium_solver(howe_potential(hp));
        const auto [lo, hi] = howe_band(hp);
        const DensityModel model = howe_limit_density(hp);
        out.push_back(numeric_entry("howe equilibrium left edge", "c=2, alpha_h=1", eq.a, lo, 1e-6));
        out.push_back(numeric_entry("howe equilibrium right edge", "c=2, alpha_h=1", eq.b, hi, 1e-6));
        double worst = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const double x = lo + (hi - lo) * (0.02 + 0.96 * i / 40.0);
            worst = std::max(worst, std::abs(eq.density(x) - model.density(x)));
        }
        out.push_back(bound_entry("howe equilibrium density vs limit law", "c=2, alpha_h=1", worst, 1e-4));
    }
    return out;
}

// Side artifacts exercising the tabular formats, tied to one fixed parameter
// point so the files are stable across runs.
void write_verification_dumps(const std::string& prefix, const CommonOpts& o,
                              const std::string& cmdline) {
    MetaInfo meta = make_meta(cmdline, o);
    meta.add("c_alpha", std::string("2"));
    meta.add("c_beta", std::string("3"));

    std::vector<std::string> rows;
    auto push_record = [&rows](const HurwitzRecord& rec) {
        rows.push_back(rec.kind + ',' + partition_cell(rec.kappa) + ',' + partition_cell(rec.mu) +
                       ',' + partition_cell(rec.nu) + ',' + std::to_string(rec.g_or_d) + ',' +
                       to_fraction_string(rec.value));
    };
    for (const HurwitzRecord& rec : branched_cover_table(3, {2, 1}, o.budget_tuples))
        push_record(rec);
    for (const Partition& kappa : partitions_of(2))
        for (const Partition& mu : partitions_of(2))
            for (const Partition& nu : partitions_of(2))
                for (int g = 0; g <= 1; ++g)
                    push_record(monotone_hurwitz(kappa, mu, nu, g, o.budget_tuples));
    for (const Partition& kappa : partitions_of(3))
        for (int d = 0; d <= 2; ++d)
            push_record(multiparametric_hurwitz(3, kappa, d, ExactScalar(2), ExactScalar(3),
                                                o.budget_tuples));
    write_text(prefix + "_hurwitz.csv", grid_csv(meta, "kind,kappa,mu,nu,g_or_d,value", rows));

    const GammaParams gp{ExactScalar(2), ExactScalar(3)};
    Json series_json;
    meta_to_json(series_json, meta);
    Json records = Json::array();
    const SeriesTruncation series = tau_schur_truncation(gp, 3);
    for (const auto& [key, value] : series.coefficients)
        records.push_back(Json{{"kappa", partition_to_json(key.first)},
                               {"d", key.second},
                               {"coeff", to_fraction_string(value)}});
    series_json["series"] = std::move(records);
    write_json(prefix + "_tau_series.json", series_json);

    std::vector<std::string> genus_rows;
    for (const Partition& kappa : {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
        const GenusExpansion ge = genus_expansion_eval(gp, kappa, 2, o.budget_tuples);
        for (int g = 0; g < static_cast<int>(ge.coefficients.size()); ++g)
            genus_rows.push_back(partition_cell(kappa) + ',' + std::to_string(g) + ',' +
                                 std::to_string(ge.exponent(g)) + ',' +
                                 to_fraction_string(ge.coefficients[static_cast<std::size_t>(g)]));
    }
    write_text(prefix + "_genus.csv",
               grid_csv(meta, "kappa,g,coefficient_of_N_power,value", genus_rows));
}

int run_verify(const std::string& suite, const CommonOpts& o, const std::string& dump_prefix,
               const std::string& cmdline) {
    Report report;
    const bool all = suite == "all";
    if (all || suite == "measure")
        report.add(suite_measure(static_cast<int>(std::min<long long>(o.dim, 4)), o.budget_partitions));
    if (all || suite == "characters") report.add(suite_characters(o.budget_tuples));
    if (all || suite == "hurwitz") report.add(suite_hurwitz(o.budget_tuples));
    if (all || suite == "markov-krein") report.add(suite_markov_krein());
    if (all || suite == "tau") report.add(suite_tau(o.seed, o.samples, o.budget_tuples));
    if (all || suite == "equilibrium") report.add(suite_equilibrium());

    MetaInfo meta = make_meta(cmdline, o);
    meta.add("suite", suite);
    const Json j = report.to_json(meta);
    if (o.out.empty())
        std::printf("%s\n", j.dump(2).c_str());
    else
        write_json(o.out, j);

    long long report_only = 0;
    for (const ReportEntry& e : report.entries) report_only += e.status == CheckStatus::ReportOnly;
    std::fprintf(o.out.empty() ? stderr : stdout, "suite %s: %lld pass, %lld fail, %lld report-only\n",
                 suite.c_str(), report.pass_count(), report.fail_count(), report_only);

    if (!dump_prefix.empty()) write_verification_dumps(dump_prefix, o, cmdline);
    return report.all_passed() ? 0 : 1;
}

// ----------------------------------------------------------------- figures

// Spectral histogram of one or more draws against the limiting law sigma,
// with the hard-edge atom tracked separately from the continuous band.
int run_figure1(const CommonOpts& o, const std::string& cmdline) {
    const JueParams params{o.dim, o.c_alpha, o.c_beta};
    params.validate();
    const std::string prefix = o.out.empty() ? "figure1" : o.out;

    MetaInfo meta = make_meta(cmdline, o);
    meta.add("N", o.dim);
    meta.add("c_alpha", params.realized_c_alpha());
    meta.add("c_beta", params.realized_c_beta());
    meta.add("samples", o.samples);

    std::vector<double> eigs;
    for (long long r = 0; r < o.samples; ++r) {
        Rng rng(o.seed, static_cast<std::uint64_t>(r));
        const std::vector<double> lam = jue_eigenvalues(params, rng);
        eigs.insert(eigs.end(), lam.begin(), lam.end());
    }
    long long zeros = 0;
    for (double x : eigs) zeros += std::abs(x) <= 1e-9;

    const DensityModel sigma = jue_limit_density(params.realized_c_alpha(), params.realized_c_beta());
    const int bins = 80;
    std::vector<long long> counts(bins, 0);
    for (double x : eigs) {
        if (std::abs(x) <= 1e-9) continue;  // atom mass reported separately
        int b = static_cast<int>(x * bins);
        b = std::clamp(b, 0, bins - 1);
        ++counts[static_cast<std::size_t>(b)];
    }
    std::vector<std::string> rows;
    const double width = 1.0 / bins;
    for (int b = 0; b < bins; ++b) {
        const double density = static_cast<double>(counts[static_cast<std::size_t>(b)]) /
                               (static_cast<double>(eigs.size()) * width);
        rows.push_back(format_double(b * width) + ',' + format_double((b + 1) * width) + ',' +
                       std::to_string(counts[static_cast<std::size_t>(b)]) + ',' +
                       format_double(density));
    }
    write_text(prefix + "_hist.csv", grid_csv(meta, "bin_lo,bin_hi,count,density", rows));

    rows.clear();
    for (int i = 0; i <= 400; ++i) {
        const double x = sigma.a + (sigma.b - sigma.a) * i / 400.0;
        rows.push_back(format_double(x) + ',' + format_double(sigma.density(x)));
    }
    write_text(prefix + "_sigma.csv", grid_csv(meta, "x,value", rows));

    const DensityCdf cdf(sigma);
    const KsResult ks = ks_one_sample(
        eigs, [&](double x) { return cdf(x); }, [&](double x) { return cdf.left(x); });
    Json j;
    meta_to_json(j, meta);
    j["support"] = Json::array({sigma.a, sigma.b});
    Json atoms = Json::array();
    for (const Atom& at : sigma.atoms)
        atoms.push_back(Json{{"location", at.location}, {"mass", at.mass}});
    j["atoms"] = std::move(atoms);
    j["zero_count"] = zeros;
    j["eigenvalue_count"] = eigs.size();
    j["ks_statistic"] = ks.statistic;
    j["ks_pvalue"] = ks.p_value;
    write_json(prefix + ".json", j);
    std::printf("figure 1: %lld zero eigenvalues of %zu, KS %.4f, wrote %s_{hist,sigma}.csv and %s.json\n",
                zeros, eigs.size(), ks.statistic, prefix.c_str(), prefix.c_str());
    return 0;
}

// Rescaled diagram profiles f against the limit shape Omega for a trio of
// matrix sizes; sup distances land in the JSON sidecar.
int run_figure2(const CommonOpts& o, const std::vector<long long>& dims, const std::string& cmdline) {
    const HoweAsymptoticParams hp = jue_to_howe_params(o.c_alpha, o.c_beta);
    hp.validate();
    const LimitShape omega = limit_shape(hp);
    const auto [t_lo, t_hi] = howe_band(hp);
    const double lo = std::min(t_lo, -1.0) - 0.2;
    const double hi = std::max(t_hi, hp.c) + 0.2;
    const std::string prefix = o.out.empty() ? "figure2" : o.out;

    MetaInfo meta = make_meta(cmdline, o);
    meta.add("c_alpha", o.c_alpha);
    meta.add("c_beta", o.c_beta);
    meta.add("c", hp.c);
    meta.add("alpha_h", hp.alpha_h);

    std::vector<std::string> rows;
    for (int i = 0; i <= 600; ++i) {
        const double t = lo + (hi - lo) * i / 600.0;
        rows.push_back(format_double(t) + ',' + format_double(omega(t)));
    }
    write_text(prefix + "_omega.csv", grid_csv(meta, "t,omega", rows));

    Json sups = Json::array();
    for (long long n : dims) {
        const JueParams params{n, o.c_alpha, o.c_beta};
        params.validate();
        const SpectrumSample sample = sample_spectrum(params, o.seed, 0, true);
        const PiecewiseLinearProfile prof = interlacing_profile(sample, hp.c);

        std::vector<double> ts;
        for (int i = 0; i <= 600; ++i) ts.push_back(lo + (hi - lo) * i / 600.0);
        for (double t : prof.breakpoints())
            if (t >= lo && t <= hi) ts.push_back(t);
        std::sort(ts.begin(), ts.end());
        rows.clear();
        for (double t : ts) rows.push_back(format_double(t) + ',' + format_double(prof(t)));
        write_text(prefix + "_profile_N" + std::to_string(n) + ".csv", grid_csv(meta, "t,f", rows));

        const double sup = sup_distance(prof, [&](double t) { return omega(t); }, lo, hi, 1500);
        sups.push_back(Json{{"N", n}, {"sup_distance", sup}});
        std::printf("figure 2: N=%lld sup|f - Omega| = %.4f\n", n, sup);
    }
    Json j;
    meta_to_json(j, meta);
    j["band"] = Json::array({t_lo, t_hi});
    j["window"] = Json::array({lo, hi});
    j["sup_distances"] = std::move(sups);
    write_json(prefix + ".json", j);
    return 0;
}

// -------------------------------------------------------- edge comparison

// Matched soft-edge fluctuation samples: rescaled largest diagram row vs
// rescaled largest JUE eigenvalue at the dictionary parameters. Report-only.
int run_edge_compare(const CommonOpts& o, const std::string& cmdline) {
    const JueParams jp{o.dim, o.c_alpha, o.c_beta};
    jp.validate();
    const HoweAsymptoticParams hp = jue_to_howe_params(o.c_alpha, o.c_beta);
    const int n = static_cast<int>(o.dim);
    const int k = static_cast<int>(std::llround(hp.c * n));
    // alpha_h = p/(nk - p), so the matched box count is nk alpha_h/(1 + alpha_h)
    const long long p =
        std::llround(static_cast<double>(n) * k * hp.alpha_h / (1.0 + hp.alpha_h));
    const HoweParams hparams{n, k, p};
    hparams.validate();
    const double t_plus = howe_band(hp).second;
    const std::string prefix = o.out.empty() ? "edge" : o.out;

    MetaInfo meta = make_meta(cmdline, o);
    meta.add("N", o.dim);
    meta.add("k", static_cast<long long>(k));
    meta.add("p", p);
    meta.add("t_plus", t_plus);
    meta.add("samples", o.samples);

    std::vector<double> y1;
    for (const std::vector<double>& row : edge_samples_jue(jp, o.samples, 1, o.seed))
        y1.push_back(row[0]);

    // Distinct seed stream for the diagram sampler so the two ensembles are
    // decorrelated while staying reproducible.
    const std::uint64_t howe_seed = o.seed ^ 0x9e3779b97f4a7c15ULL;
    const double scale = std::pow(static_cast<double>(n), 2.0 / 3.0);
    std::vector<double> x1;
    for (const Partition& la : sample_howe(hparams, o.samples, howe_seed))
        x1.push_back(scale * (static_cast<double>(la.part(1)) / (t_plus * n) - 1.0));

    std::vector<std::string> rows;
    for (std::size_t r = 0; r < x1.size(); ++r)
        rows.push_back(std::to_string(r) + ',' + format_double(x1[r]));
    write_text(prefix + "_howe.csv", grid_csv(meta, "sample_id,x1", rows));
    rows.clear();
    for (std::size_t r = 0; r < y1.size(); ++r)
        rows.push_back(std::to_string(r) + ',' + format_double(y1[r]));
    write_text(prefix + "_jue.csv", grid_csv(meta, "sample_id,y1", rows));

    const KsResult ks = ks_two_sample(x1, y1);
    Report report;
    report.add(report_only_entry(
        "edge fluctuation two-sample KS", "n=N=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                              ", p=" + std::to_string(p),
        "median x1 = " + format_double(median(x1)), "median y1 = " + format_double(median(y1)),
        ks.statistic));
    Json j = report.to_json(meta);
    j["ks_statistic"] = ks.statistic;
    j["ks_pvalue"] = ks.p_value;
    write_json(prefix + ".json", j);
    std::printf("edge compare: KS statistic %.4f (p = %.4f), wrote %s_{howe,jue}.csv and %s.json\n",
                ks.statistic, ks.p_value, prefix.c_str(), prefix.c_str());
    return 0;
}

// -------------------------------------------------- limit shape and density

int run_limitshape(const CommonOpts& o, double c_arg, double alpha_arg, bool from_ratios,
                   const std::string& cmdline) {
    const HoweAsymptoticParams hp =
        from_ratios ? jue_to_howe_params(o.c_alpha, o.c_beta) : HoweAsymptoticParams{c_arg, alpha_arg};
    hp.validate();
    const LimitShape omega = limit_shape(hp);
    const auto [t_lo, t_hi] = howe_band(hp);
    const DensityModel model = howe_limit_density(hp);
    const std::string prefix = o.out.empty() ? "limitshape" : o.out;

    MetaInfo meta = make_meta(cmdline, o);
    meta.add("c", hp.c);
    meta.add("alpha_h", hp.alpha_h);

    const double lo = std::min(t_lo, -1.0) - 0.2;
    const double hi = std::max(t_hi, hp.c) + 0.2;
    std::vector<std::string> rows;
    for (int i = 0; i <= 600; ++i) {
        const double t = lo + (hi - lo) * i / 600.0;
        rows.push_back(format_double(t) + ',' + format_double(omega(t)));
    }
    write_text(prefix + "_omega.csv", grid_csv(meta, "t,omega", rows));

    rows.clear();
    for (int i = 0; i <= 400; ++i) {
        const double x = model.a + (model.b - model.a) * i / 400.0;
        rows.push_back(format_double(x) + ',' + format_double(model.density(x)));
    }
    write_text(prefix + "_density.csv", grid_csv(meta, "x,value", rows));

    Json j;
    meta_to_json(j, meta);
    j["band"] = Json::array({t_lo, t_hi});
    j["support"] = Json::array({model.a, model.b});
    Json atoms = Json::array();
    for (const Atom& at : model.atoms)
        atoms.push_back(Json{{"location", at.location}, {"mass", at.mass}});
    j["atoms"] = std::move(atoms);
    write_json(prefix + ".json", j);
    std::printf("limit shape: band [%.6f, %.6f], wrote %s_{omega,density}.csv and %s.json\n", t_lo,
                t_hi, prefix.c_str(), prefix.c_str());
    return 0;
}

int run_equilibrium_cmd(const CommonOpts& o, const std::string& preset, double c_arg,
                        double alpha_arg, const std::string& cmdline) {
    PotentialModel pot = preset == "gue"   ? gue_potential()
                         : preset == "jue" ? jue_potential(o.c_alpha, o.c_beta)
                                           : howe_potential(HoweAsymptoticParams{c_arg, alpha_arg});
    const EquilibriumResult eq = equilibrium_solver(pot);
    const std::string prefix = o.out.empty() ? "equilibrium_" + preset : o.out;

    MetaInfo meta = make_meta(cmdline, o);
    meta.add("preset", preset);
    meta.add("potential", pot.name);

    std::vector<std::string> rows;
    for (int i = 0; i <= 400; ++i) {
        const double x = eq.a + (eq.b - eq.a) * i / 400.0;
        rows.push_back(format_double(x) + ',' + format_double(eq.density(x)));
    }
    write_text(prefix + ".csv", grid_csv(meta, "x,density", rows));

    Json j;
    meta_to_json(j, meta);
    j["preset"] = preset;
    j["potential"] = pot.name;
    j["a"] = eq.a;
    j["b"] = eq.b;
    j["residual"] = eq.residual;
    j["mass"] = eq.mass;
    j["iterations"] = eq.iterations;
    write_json(prefix + ".json", j);
    std::printf("equilibrium %s: support [%.9f, %.9f], residual %.2e, wrote %s.{csv,json}\n",
                preset.c_str(), eq.a, eq.b, eq.residual, prefix.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random skew Howe diagrams, JUE spectra, and their shared asymptotics"};
    app.require_subcommand(1);
    const std::string cmdline = joined_command(argc, argv);
    int rc = 0;

    auto* sample = app.add_subcommand("sample", "draw random diagrams or spectra");
    sample->require_subcommand(1);

    CommonOpts howe_opts;
    howe_opts.dim = 2;
    howe_opts.samples = 10;
    long long howe_k = 0, howe_p = -1;
    std::string howe_table;
    auto* sample_howe_cmd = sample->add_subcommand("howe", "skew Howe diagrams via dual RSK");
    add_common(sample_howe_cmd, howe_opts);
    sample_howe_cmd->add_option("--k", howe_k, "number of columns (default: --dim)");
    sample_howe_cmd->add_option("--p", howe_p, "number of boxes (default: nk/2)");
    sample_howe_cmd->add_option("--table", howe_table, "also write the exact measure table (JSON)");
    sample_howe_cmd->callback(
        [&] { rc = run_sample_howe(howe_opts, howe_k, howe_p, howe_table, cmdline); });

    CommonOpts jue_opts;
    jue_opts.dim = 50;
    jue_opts.c_alpha = 1.6;
    jue_opts.c_beta = 4.8;
    bool jue_minor = false;
    auto* sample_jue_cmd = sample->add_subcommand("jue", "JUE spectra");
    add_common(sample_jue_cmd, jue_opts);
    sample_jue_cmd->add_flag("--with-minor", jue_minor, "also list the trailing minor spectrum");
    sample_jue_cmd->callback([&] { rc = run_sample_jue(jue_opts, jue_minor, cmdline); });

    CommonOpts verify_opts;
    verify_opts.dim = 4;
    verify_opts.samples = 64;
    std::string suite = "all";
    std::string dump_prefix;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite, report JSON");
    verify_cmd->add_option("suite", suite, "which suite to run")
        ->check(CLI::IsMember(
            {"measure", "characters", "hurwitz", "markov-krein", "tau", "equilibrium", "all"}));
    add_common(verify_cmd, verify_opts);
    verify_cmd->add_option("--dump", dump_prefix, "prefix for side tables (hurwitz, series, genus)");
    verify_cmd->callback([&] { rc = run_verify(suite, verify_opts, dump_prefix, cmdline); });

    auto* figures = app.add_subcommand("figures", "emit figure data");
    figures->require_subcommand(1);

    CommonOpts fig1_opts;
    fig1_opts.dim = 1000;
    fig1_opts.c_alpha = 0.95;
    fig1_opts.c_beta = 1.235;
    auto* fig1_cmd = figures->add_subcommand("1", "spectral histogram vs sigma with hard-edge atom");
    add_common(fig1_cmd, fig1_opts);
    fig1_cmd->callback([&] { rc = run_figure1(fig1_opts, cmdline); });

    CommonOpts fig2_opts;
    fig2_opts.c_alpha = 1.6;
    fig2_opts.c_beta = 4.8;
    std::vector<long long> fig2_dims = {50, 500, 1500};
    auto* fig2_cmd = figures->add_subcommand("2", "diagram profiles vs the limit shape Omega");
    add_common(fig2_cmd, fig2_opts);
    fig2_cmd->add_option("--dims", fig2_dims, "matrix sizes for the profile trio")
        ->delimiter(',')
        ->capture_default_str();
    fig2_cmd->callback([&] { rc = run_figure2(fig2_opts, fig2_dims, cmdline); });

    CommonOpts edge_opts;
    edge_opts.dim = 100;
    edge_opts.samples = 500;
    edge_opts.c_alpha = 1.6;
    edge_opts.c_beta = 4.8;
    auto* edge_cmd =
        app.add_subcommand("edge-compare", "matched soft-edge fluctuations, diagrams vs spectra");
    add_common(edge_cmd, edge_opts);
    edge_cmd->callback([&] { rc = run_edge_compare(edge_opts, cmdline); });

    CommonOpts shape_opts;
    double shape_c = 2.0, shape_alpha = 1.0;
    auto* shape_cmd = app.add_subcommand("limitshape", "limit shape Omega and its densities");
    add_common(shape_cmd, shape_opts);
    shape_cmd->add_option("--c", shape_c, "aspect ratio k/n")->capture_default_str();
    shape_cmd->add_option("--alpha-h", shape_alpha, "filling fraction p/(nk)")->capture_default_str();
    shape_cmd->callback([&] {
        const bool from_ratios = shape_cmd->count("--c-alpha") || shape_cmd->count("--c-beta");
        rc = run_limitshape(shape_opts, shape_c, shape_alpha, from_ratios, cmdline);
    });

    CommonOpts eq_opts;
    eq_opts.c_alpha = 1.6;
    eq_opts.c_beta = 4.8;
    std::string eq_preset = "jue";
    double eq_c = 2.0, eq_alpha = 1.0;
    auto* eq_cmd = app.add_subcommand("equilibrium", "solve the equilibrium measure for a preset");
    add_common(eq_cmd, eq_opts);
    eq_cmd->add_option("--preset", eq_preset, "potential preset")
        ->check(CLI::IsMember({"gue", "jue", "howe"}))
        ->capture_default_str();
    eq_cmd->add_option("--c", eq_c, "aspect ratio k/n (howe preset)")->capture_default_str();
    eq_cmd->add_option("--alpha-h", eq_alpha, "filling fraction p/(nk) (howe preset)")
        ->capture_default_str();
    eq_cmd->callback([&] { rc = run_equilibrium_cmd(eq_opts, eq_preset, eq_c, eq_alpha, cmdline); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return rc;
}
