#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "skewjue/partition.hpp"
#include "skewjue/rational.hpp"

namespace skewjue {

struct HoweParams {
    int n = 1;
    int k = 1;
    long long p = 0;

    long long cells() const { return static_cast<long long>(n) * k; }

    void validate() const {
        if (n <= 0 || k <= 0) throw std::invalid_argument("HoweParams: n, k must be positive");
        if (p < 0 || p > cells()) throw std::invalid_argument("HoweParams: p outside [0, nk]");
    }
};

struct MeasureTable {
    HoweParams params;
    std::map<Partition, ExactScalar> entries;
};

// mu(la) = dim V_{GL_n}(la) dim V_{GL_k}(la') / C(nk, p) over p-box diagrams
// in the n x k box. Sums to 1 exactly. Refuses to enumerate more than
// max_entries diagrams instead of silently degrading.
inline MeasureTable mu_h(const HoweParams& params, long long max_entries = 10'000'000) {
    params.validate();
    MeasureTable table{params, {}};
    ExactScalar denom(binomial(params.cells(), params.p));
    long long count = 0;
    for_each_partition_in_box(params.n, params.k, params.p, [&](const Partition& la) {
        if (++count > max_entries) throw std::length_error("mu_h: partition budget exceeded");
        table.entries[la] = ExactScalar(dim_gl(params.n, la)) * dim_gl(params.k, conjugate(la)) / denom;
    });
    return table;
}

// Unnormalized weight prod_{i<j} (la_i - la_j + j - i)^2 prod_i C(n+k-1, la_i + n - i),
// rows padded with zeros to length n. Proportional to mu_h with a constant
// independent of la.
inline ExactScalar mu_h_product_form(const HoweParams& params, const Partition& la) {
    params.validate();
    if (!fits_in_box(la, params.n, params.k) || la.weight() != params.p)
        throw std::invalid_argument("mu_h_product_form: diagram outside the box");
    BigInt weight = 1;
    for (int i = 1; i <= params.n; ++i) {
        for (int j = i + 1; j <= params.n; ++j) {
            BigInt d = la.part(i) - la.part(j) + j - i;
            weight *= d * d;
        }
        weight *= binomial(params.n + params.k - 1, la.part(i) + params.n - i);
    }
    return ExactScalar(weight);
}

// M_m = sum_nu mu(nu) sum_i delta_i(nu) (nu_i - i)^m.
inline ExactScalar cotransition_moment(const HoweParams& params, int m,
                                       long long max_entries = 10'000'000) {
    if (params.p == 0) throw std::domain_error("no corners");
    ExactScalar total = 0;
    for (const auto& [nu, prob] : mu_h(params, max_entries).entries) {
        ExactScalar inner = 0;
        for (const auto& [corner, delta] : cotransition_probabilities(nu))
            inner += delta * pow_rat(ExactScalar(corner.content), m);
        total += prob * inner;
    }
    return total;
}

// Rescaled particle picture of a diagram at scale 1/n: particle i occupies
// [(la_i - i)/n, (la_i - i + 1)/n) for i = 1..n, and the profile integrates
// slope +1 off particles, -1 on them, from f(-1) = 1.
struct EmpiricalProfile {
    int scale = 1;                   // n
    std::vector<double> positions;   // (la_i - i)/n, strictly decreasing, in [-1, inf)

    double operator()(double x) const {
        if (x <= -1.0) return -x;  // fully packed below -1
        double covered = 0.0;
        double h = 1.0 / scale;
        for (double s : positions) {
            if (s >= x) continue;
            covered += std::min(x, s + h) - s;
        }
        return 1.0 + (x + 1.0) - 2.0 * covered;
    }

    // Slope changes: both endpoints of every particle interval.
    std::vector<double> breakpoints() const {
        std::vector<double> out;
        for (double s : positions) {
            out.push_back(s);
            out.push_back(s + 1.0 / scale);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

inline EmpiricalProfile empirical_profile(const Partition& la, int n) {
    if (n < la.length()) throw std::invalid_argument("empirical_profile: scale below diagram length");
    EmpiricalProfile prof;
    prof.scale = n;
    prof.positions.reserve(n);
    for (int i = 1; i <= n; ++i)
        prof.positions.push_back(static_cast<double>(la.part(i) - i) / n);
    return prof;
}

}  // namespace skewjue
