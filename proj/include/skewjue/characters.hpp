#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "skewjue/partition.hpp"
#include "skewjue/permutation.hpp"
#include "skewjue/rational.hpp"

namespace skewjue {

namespace detail {

// Beta-set of nu with m slots: distinct descending values nu_i + m - i.
inline std::vector<int> beta_set(const std::vector<int>& nu, int m) {
    std::vector<int> b(m);
    for (int i = 0; i < m; ++i) b[i] = (i < static_cast<int>(nu.size()) ? nu[i] : 0) + m - 1 - i;
    return b;
}

inline std::vector<int> beta_to_partition(std::vector<int> b) {
    std::sort(b.rbegin(), b.rend());
    int m = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) {
        int part = b[i] - (m - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

inline BigInt dim_int(const std::vector<int>& nu_parts) {
    Partition nu((std::vector<int>(nu_parts)));
    return factorial(nu.weight()) / hook_product(nu);
}

// Recursion on the largest cycle: remove every rim hook of that length.
// A rim hook of length r is a bead move b -> b - r in the beta-set; its sign
// is (-1)^{#beads strictly between}.
inline BigInt mn_rec(const std::vector<int>& nu, const std::vector<int>& la,
                     std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt>& memo) {
    if (nu.empty()) return 1;
    if (la[0] == 1) return dim_int(nu);  // only fixed points left
    auto key = std::make_pair(nu, la);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = la[0];
    std::vector<int> rest(la.begin() + 1, la.end());
    int m = static_cast<int>(nu.size());
    std::vector<int> b = beta_set(nu, m);
    BigInt total = 0;
    for (int i = 0; i < m; ++i) {
        int target = b[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < m; ++j) {
            if (b[j] == target) occupied = true;
            if (b[j] > target && b[j] < b[i]) ++between;
        }
        if (occupied) continue;
        std::vector<int> moved = b;
        moved[i] = target;
        BigInt term = mn_rec(beta_to_partition(std::move(moved)), rest, memo);
        total += (between % 2 ? -term : term);
    }
    memo[key] = total;
    return total;
}

}  // namespace detail

// Unnormalized symmetric group character X_nu(la) (Murnaghan-Nakayama).
inline ExactScalar mn_character(const Partition& nu, const Partition& la) {
    if (nu.weight() != la.weight()) throw std::invalid_argument("mn_character: size mismatch");
    if (nu.empty()) return 1;
    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo;
    return ExactScalar(detail::mn_rec(nu.parts(), la.parts(), memo));
}

// X_nu(J_p^m) = sum over removable corners of dim(child) * content^m.
inline ExactScalar yjm_moment_character(const Partition& nu, int m) {
    if (nu.empty()) throw std::domain_error("yjm_moment_character: empty diagram");
    ExactScalar total = 0;
    for (const Corner& c : removable_corners(nu))
        total += dim_sym(c.child) * pow_rat(ExactScalar(c.content), m);
    return total;
}

// Plain ratio X_{k^n}(la, 1^{nk-p}) / X_{k^n}(1^{nk}).
inline ExactScalar normalized_restriction(int n, int k, const Partition& la) {
    long long cells = static_cast<long long>(n) * k;
    long long p = la.weight();
    if (p > cells) throw std::invalid_argument("normalized_restriction: p exceeds nk");
    std::vector<int> shape(n, k);
    std::vector<int> padded = la.parts();
    padded.resize(padded.size() + (cells - p), 1);
    Partition rect(std::move(shape));
    return mn_character(rect, Partition(std::move(padded))) / dim_sym(rect);
}

// The factorial prefactor that converts the plain ratio into the padded
// normalization used alongside it: (nk)! / (nk-p)!.
inline ExactScalar padding_factor(int n, int k, long long p) {
    long long cells = static_cast<long long>(n) * k;
    if (p > cells) throw std::invalid_argument("padding_factor: p exceeds nk");
    return ExactScalar(factorial(cells), factorial(cells - p));
}

// Content-sum route to the same ratio: the rectangular character as a sum
// over p-box diagrams weighted by both GL dimensions.
inline ExactScalar stanley_rectangular(int n, int k, const Partition& la) {
    long long cells = static_cast<long long>(n) * k;
    long long p = la.weight();
    if (p > cells) throw std::invalid_argument("stanley_rectangular: p exceeds nk");
    ExactScalar sum = 0;
    for (const Partition& nu : partitions_of(static_cast<int>(p))) {
        ExactScalar dn = dim_gl(n, nu);
        if (dn == 0) continue;
        ExactScalar dk = dim_gl(k, conjugate(nu));
        if (dk == 0) continue;
        sum += dn * dk * mn_character(nu, la) / dim_sym(nu);
    }
    return sum * factorial(cells - p) * factorial(p) / ExactScalar(factorial(cells));
}

// Pair-sum route: (-1)^p (nk-p)!/(nk)! sum over w_nu w_mu w = Id of
// n^{l(mu)} (-k)^{l(nu)}. Equals normalized_restriction of w's cycle type.
inline ExactScalar stanley_pairs(int n, int k, const Permutation& w,
                                 long long budget = 10'000'000) {
    int p = w.degree();
    long long cells = static_cast<long long>(n) * k;
    if (p > cells) throw std::invalid_argument("stanley_pairs: p exceeds nk");
    if (factorial(p) > budget) throw std::length_error("stanley_pairs: enumeration budget exceeded");
    BigInt sum = 0;
    for_each_permutation(p, [&](const Permutation& w_mu) {
        Permutation w_nu = (w_mu * w).inverse();
        int lm = w_mu.cycle_type().length();
        int ln = w_nu.cycle_type().length();
        BigInt term = pow_int(n, lm) * pow_int(k, ln);
        sum += (ln % 2 ? -term : term);
    });
    if (p % 2) sum = -sum;
    return ExactScalar(sum) * factorial(cells - p) / ExactScalar(factorial(cells));
}

inline ExactScalar sign_character(const Partition& la) {
    return (la.weight() - la.length()) % 2 ? -1 : 1;
}

// Closed form (-1)^{|kappa|} (p-1)^{kappa_1} ... (p-s)^{kappa_s} for the sign
// character of the YJM monomial J_p^{kappa_1} J_{p-1}^{kappa_2} ...
// kappa is a composition: order matters.
inline ExactScalar diagonal_yjm_character(int p, const std::vector<int>& kappa) {
    int s = static_cast<int>(kappa.size());
    if (s > p) throw std::invalid_argument("diagonal_yjm_character: composition longer than p");
    long long total = 0;
    BigInt prod = 1;
    for (int i = 1; i <= s; ++i) {
        if (kappa[i - 1] < 0) throw std::invalid_argument("diagonal_yjm_character: negative part");
        total += kappa[i - 1];
        prod *= pow_int(p - i, kappa[i - 1]);
    }
    return ExactScalar(total % 2 ? -prod : prod);
}

// The same value by brute force: sum of sign(w(tau)) over all tau-words
// (tau_{i1}, p+1-i) ... with tau_{ij} in {1..p-i}, block i repeated kappa_i
// times.
inline ExactScalar tau_word_sign_sum(int p, const std::vector<int>& kappa,
                                     long long budget = 10'000'000) {
    int s = static_cast<int>(kappa.size());
    if (s > p) throw std::invalid_argument("tau_word_sign_sum: composition longer than p");
    BigInt words = 1;
    for (int i = 1; i <= s; ++i) words *= pow_int(p - i, kappa[i - 1]);
    if (words > budget) throw std::length_error("tau_word_sign_sum: enumeration budget exceeded");

    long long sum = 0;
    // flatten blocks: position t uses transpositions (x, anchor_t)
    std::vector<int> anchors;
    for (int i = 1; i <= s; ++i)
        for (int j = 0; j < kappa[i - 1]; ++j) anchors.push_back(p - i);  // 0-based anchor
    auto rec = [&](auto&& self, std::size_t t, const Permutation& acc) -> void {
        if (t == anchors.size()) {
            sum += acc.sign();
            return;
        }
        for (int x = 0; x < anchors[t]; ++x)
            self(self, t + 1, acc * Permutation::transposition(p, x, anchors[t]));
    };
    rec(rec, 0, Permutation(p));
    return ExactScalar(sum);
}

// All w(tau) for the given block structure, with multiplicity (one entry per
// word).
inline std::vector<Permutation> tau_words(int p, const std::vector<int>& kappa,
                                          long long budget = 10'000'000) {
    int s = static_cast<int>(kappa.size());
    if (s > p) throw std::invalid_argument("tau_words: composition longer than p");
    BigInt words = 1;
    for (int i = 1; i <= s; ++i) words *= pow_int(p - i, kappa[i - 1]);
    if (words > budget) throw std::length_error("tau_words: enumeration budget exceeded");
    std::vector<int> anchors;
    for (int i = 1; i <= s; ++i)
        for (int j = 0; j < kappa[i - 1]; ++j) anchors.push_back(p - i);
    std::vector<Permutation> out;
    auto rec = [&](auto&& self, std::size_t t, const Permutation& acc) -> void {
        if (t == anchors.size()) {
            out.push_back(acc);
            return;
        }
        for (int x = 0; x < anchors[t]; ++x)
            self(self, t + 1, acc * Permutation::transposition(p, x, anchors[t]));
    };
    rec(rec, 0, Permutation(p));
    return out;
}

}  // namespace skewjue
