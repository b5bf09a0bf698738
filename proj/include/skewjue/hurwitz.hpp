#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewjue/characters.hpp"
#include "skewjue/group_algebra.hpp"
#include "skewjue/partition.hpp"
#include "skewjue/permutation.hpp"
#include "skewjue/rational.hpp"

namespace skewjue {

struct HurwitzRecord {
    std::string kind;        // "branched" | "monotone" | "multiparametric"
    std::vector<int> kappa;  // composition (branched) or partition (others)
    Partition mu;
    Partition nu;
    long long g_or_d = 0;
    ExactScalar value = 0;
};

// Canonical representative of the class kappa: consecutive cycles.
inline Permutation class_representative(int p, const Partition& kappa) {
    if (kappa.weight() != p) throw std::invalid_argument("class_representative: size mismatch");
    std::vector<int> img(p);
    int start = 0;
    for (int part : kappa.parts()) {
        for (int j = 0; j < part; ++j) img[start + j] = start + (j + 1) % part;
        start += part;
    }
    return Permutation(std::move(img));
}

// Count of tuples (w_nu in [nu], w_mu in [mu], tau-word of block structure
// kappa) with w_nu w_mu w(tau) = Id. Nonzero only when the Euler relation
// 2 - 2g = l(mu) + l(nu) - |kappa| holds; g may be negative (disconnected
// covers).
inline HurwitzRecord branched_cover_count(int p, const std::vector<int>& kappa,
                                          const Partition& mu, const Partition& nu, int g,
                                          long long budget = 10'000'000) {
    if (mu.weight() != p || nu.weight() != p)
        throw std::invalid_argument("branched_cover_count: ramification profile size mismatch");
    HurwitzRecord rec{"branched", kappa, mu, nu, g, 0};
    long long total_transpositions = 0;
    for (int x : kappa) total_transpositions += x;
    if (2 - 2 * g != mu.length() + nu.length() - total_transpositions) return rec;

    std::vector<Permutation> words = tau_words(p, kappa, budget);
    BigInt class_mu = conjugacy_class_size(mu);
    if (class_mu * static_cast<long long>(words.size()) > budget)
        throw std::length_error("branched_cover_count: enumeration budget exceeded");

    BigInt count = 0;
    for_each_permutation(p, [&](const Permutation& w_mu) {
        if (!(w_mu.cycle_type() == mu)) return;
        for (const Permutation& w : words)
            if ((w_mu * w).cycle_type() == nu) ++count;
    });
    rec.value = ExactScalar(count);
    return rec;
}

// All nonzero branched-cover counts for the given block structure, one record
// per (mu, nu) with the genus determined by the Euler relation.
inline std::vector<HurwitzRecord> branched_cover_table(int p, const std::vector<int>& kappa,
                                                       long long budget = 10'000'000) {
    std::vector<Permutation> words = tau_words(p, kappa, budget);
    if (factorial(p) * static_cast<long long>(words.size()) > budget)
        throw std::length_error("branched_cover_table: enumeration budget exceeded");
    long long total_transpositions = 0;
    for (int x : kappa) total_transpositions += x;

    std::map<std::pair<Partition, Partition>, BigInt> counts;
    for_each_permutation(p, [&](const Permutation& w_mu) {
        Partition mu = w_mu.cycle_type();
        for (const Permutation& w : words) counts[{mu, (w_mu * w).cycle_type()}] += 1;
    });

    std::vector<HurwitzRecord> out;
    for (const auto& [key, count] : counts) {
        const auto& [mu, nu] = key;
        long long chi = mu.length() + nu.length() - total_transpositions;
        // parity of chi is even on the support (sign balance)
        HurwitzRecord rec;
        rec.kind = "branched";
        rec.kappa = kappa;
        rec.mu = mu;
        rec.nu = nu;
        rec.g_or_d = (2 - chi) / 2;
        rec.value = ExactScalar(count);
        out.push_back(std::move(rec));
    }
    return out;
}

// Monotone count: tuples (w_mu in [mu], w_nu in [nu], tau_1..tau_r) with
// tau_t = (a_t, b_t), a_t < b_t, b_1 <= ... <= b_r, and
// w_mu w_nu tau_1 ... tau_r in [kappa], where r = 2g - 2 - |kappa| + l(kappa)
// + l(mu) + l(nu).
inline HurwitzRecord monotone_hurwitz(const Partition& kappa, const Partition& mu,
                                      const Partition& nu, int g, long long budget = 10'000'000) {
    int p = static_cast<int>(kappa.weight());
    if (mu.weight() != p || nu.weight() != p)
        throw std::invalid_argument("monotone_hurwitz: size mismatch");
    HurwitzRecord rec{"monotone", kappa.parts(), mu, nu, g, 0};
    long long r = 2LL * g - 2 - kappa.weight() + kappa.length() + mu.length() + nu.length();
    if (r < 0) return rec;

    // number of monotone sequences of length r: sum over weakly increasing
    // b-sequences of prod(b_t) choices of a_t
    std::vector<BigInt> ways(static_cast<std::size_t>(p), 1);  // index = max allowed b
    for (long long t = 0; t < r; ++t) {
        std::vector<BigInt> next(static_cast<std::size_t>(p), 0);
        for (int b = 1; b < p; ++b) next[static_cast<std::size_t>(b)] = next[static_cast<std::size_t>(b) - 1] + BigInt(b) * ways[static_cast<std::size_t>(b)];
        ways = std::move(next);
    }
    BigInt seqs = p > 0 ? ways[static_cast<std::size_t>(p) - 1] : BigInt(r == 0 ? 1 : 0);
    if (conjugacy_class_size(mu) * conjugacy_class_size(nu) * seqs > budget)
        throw std::length_error("monotone_hurwitz: enumeration budget exceeded");

    BigInt count = 0;
    auto extend = [&](auto&& self, const Permutation& acc, long long t, int minb) -> void {
        if (t == r) {
            if (acc.cycle_type() == kappa) ++count;
            return;
        }
        for (int b = minb; b < p; ++b)
            for (int a = 0; a < b; ++a) self(self, acc * Permutation::transposition(p, a, b), t + 1, b);
    };
    for_each_permutation(p, [&](const Permutation& w_mu) {
        if (!(w_mu.cycle_type() == mu)) return;
        for_each_permutation(p, [&](const Permutation& w_nu) {
            if (!(w_nu.cycle_type() == nu)) return;
            extend(extend, w_mu * w_nu, 0, 1);
        });
    });
    rec.value = ExactScalar(count);
    return rec;
}

// Taylor coefficient g_m of gamma(z) = (1+z)(1+z/c_a) / (1+z/(c_a+c_b)).
inline ExactScalar gamma_series_coeff(const ExactScalar& c_alpha, const ExactScalar& c_beta,
                                      int m) {
    if (c_alpha <= 0 || c_beta <= 0)
        throw std::invalid_argument("gamma_series_coeff: parameters must be positive");
    ExactScalar s = c_alpha + c_beta;
    ExactScalar num[3] = {ExactScalar(1), 1 + 1 / c_alpha, 1 / c_alpha};
    ExactScalar total = 0;
    for (int j = 0; j <= 2 && j <= m; ++j) total += num[j] * pow_rat(-1 / s, m - j);
    return total;
}

// H^d_gamma(kappa) = (1/z_kappa) [eps^d C_kappa] prod_{a=1}^{p} gamma(eps J_a).
inline HurwitzRecord multiparametric_hurwitz(int p, const Partition& kappa, int d,
                                             const ExactScalar& c_alpha, const ExactScalar& c_beta,
                                             long long budget = 10'000'000) {
    if (kappa.weight() != p) throw std::invalid_argument("multiparametric_hurwitz: |kappa| != p");
    if (d < 0) throw std::invalid_argument("multiparametric_hurwitz: negative degree");
    // last factor dominates: (p-1)! accumulated support times p! factor support
    if (factorial(p > 0 ? p - 1 : 0) * factorial(p) * (d + 1) * (d + 1) > budget)
        throw std::length_error("multiparametric_hurwitz: group algebra budget exceeded");
    GroupAlgebraElement prod = jm_series_product(
        p, d, [&](int m) { return gamma_series_coeff(c_alpha, c_beta, m); });
    HurwitzRecord rec{"multiparametric", kappa.parts(), Partition(), Partition(), d, 0};
    rec.value = prod.coeff(class_representative(p, kappa)).coeff(d) / ExactScalar(z_kappa(kappa));
    return rec;
}

struct RelationCheck {
    ExactScalar lhs = 0;
    ExactScalar rhs = 0;
    bool equal = false;
};

// H^{2g-2+|kappa|+l(kappa)}_gamma(kappa) against the genus-g monotone sum
// (1/|kappa|!) sum_{mu,nu} c_a^{l(nu)-|kappa|}
// (-c_a-c_b)^{|kappa|+2-2g-l(mu)-l(nu)-l(kappa)} h_g(kappa,mu,nu).
inline RelationCheck triple_monotone_relation_check(const Partition& kappa, int g,
                                                    const ExactScalar& c_alpha,
                                                    const ExactScalar& c_beta,
                                                    long long budget = 10'000'000) {
    int p = static_cast<int>(kappa.weight());
    int d = 2 * g - 2 + static_cast<int>(kappa.weight() + kappa.length());
    RelationCheck out;
    out.lhs = multiparametric_hurwitz(p, kappa, d, c_alpha, c_beta, budget).value;
    ExactScalar s = c_alpha + c_beta;
    ExactScalar rhs = 0;
    for (const Partition& mu : partitions_of(p)) {
        for (const Partition& nu : partitions_of(p)) {
            ExactScalar h = monotone_hurwitz(kappa, mu, nu, g, budget).value;
            if (h == 0) continue;
            long long e = kappa.weight() + 2 - 2LL * g - mu.length() - nu.length() - kappa.length();
            rhs += pow_rat(c_alpha, nu.length() - kappa.weight()) * pow_rat(-s, e) * h;
        }
    }
    out.rhs = rhs / ExactScalar(factorial(p));
    out.equal = out.lhs == out.rhs;
    return out;
}

// Genus-graded character sum:
// (-1)^p ((nk-p)!/(nk)!) sum_g n^{2-2g+|kappa|} sum_{mu,nu} (-k/n)^{l(nu)}
// H_g(kappa,mu,nu). Equals the tau-word sum of stanley_pairs by regrouping.
inline ExactScalar hurwitz_character_sum(int n, int k, int p, const std::vector<int>& kappa,
                                         long long budget = 10'000'000) {
    long long cells = static_cast<long long>(n) * k;
    if (p > cells) throw std::invalid_argument("hurwitz_character_sum: p exceeds nk");
    ExactScalar sum = 0;
    for (const HurwitzRecord& rec : branched_cover_table(p, kappa, budget)) {
        long long exponent = 2 - 2 * rec.g_or_d;
        for (int x : kappa) exponent += x;
        sum += pow_rat(ExactScalar(n), exponent) *
               pow_rat(ExactScalar(-k) / n, rec.nu.length()) * rec.value;
    }
    sum *= factorial(cells - p);
    sum /= ExactScalar(factorial(cells));
    if (p % 2) sum = -sum;
    return sum;
}

}  // namespace skewjue
