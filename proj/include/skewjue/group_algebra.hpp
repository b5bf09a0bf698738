#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "skewjue/partition.hpp"
#include "skewjue/permutation.hpp"
#include "skewjue/rational.hpp"

namespace skewjue {

// Polynomial in eps truncated beyond degree dmax.
class EpsPoly {
  public:
    explicit EpsPoly(int dmax) : c_(static_cast<std::size_t>(dmax) + 1, ExactScalar(0)) {
        if (dmax < 0) throw std::invalid_argument("EpsPoly: negative truncation degree");
    }

    int dmax() const { return static_cast<int>(c_.size()) - 1; }
    const ExactScalar& coeff(int d) const { return c_.at(static_cast<std::size_t>(d)); }
    void set_coeff(int d, ExactScalar v) { c_.at(static_cast<std::size_t>(d)) = std::move(v); }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    EpsPoly& operator+=(const EpsPoly& o) {
        check(o);
        for (std::size_t d = 0; d < c_.size(); ++d) c_[d] += o.c_[d];
        return *this;
    }

    // Accumulate a * b into this (truncated product).
    void add_product(const EpsPoly& a, const EpsPoly& b) {
        check(a);
        check(b);
        int n = dmax();
        for (int i = 0; i <= n; ++i) {
            if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.c_[static_cast<std::size_t>(j)] == 0) continue;
                c_[static_cast<std::size_t>(i + j)] +=
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
            }
        }
    }

    EpsPoly operator*(const EpsPoly& o) const {
        EpsPoly out(dmax());
        out.add_product(*this, o);
        return out;
    }

    bool operator==(const EpsPoly& o) const = default;

  private:
    void check(const EpsPoly& o) const {
        if (o.c_.size() != c_.size()) throw std::invalid_argument("EpsPoly: degree mismatch");
    }
    std::vector<ExactScalar> c_;
};

// Element of C[S_p][[eps]] / eps^{dmax+1}, dense over permutation ranks.
class GroupAlgebraElement {
  public:
    GroupAlgebraElement(int p, int dmax)
        : p_(p), dmax_(dmax), coef_(check_order(p), EpsPoly(dmax)) {}

    static GroupAlgebraElement identity(int p, int dmax) {
        GroupAlgebraElement e(p, dmax);
        e.coef_[perm_rank(Permutation(p))].set_coeff(0, 1);
        return e;
    }

    int degree() const { return p_; }
    int dmax() const { return dmax_; }

    const EpsPoly& coeff(const Permutation& w) const { return coef_[perm_rank(w)]; }
    EpsPoly& coeff(const Permutation& w) { return coef_[perm_rank(w)]; }

    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const {
        if (o.p_ != p_ || o.dmax_ != dmax_)
            throw std::invalid_argument("GroupAlgebraElement: shape mismatch");
        GroupAlgebraElement out(p_, dmax_);
        std::size_t idx_u = 0;
        for_each_permutation(p_, [&](const Permutation& u) {
            const EpsPoly& cu = coef_[idx_u++];
            if (cu.is_zero()) return;
            std::size_t idx_v = 0;
            for_each_permutation(p_, [&](const Permutation& v) {
                const EpsPoly& cv = o.coef_[idx_v++];
                if (cv.is_zero()) return;
                out.coef_[perm_rank(u * v)].add_product(cu, cv);
            });
        });
        return out;
    }

    bool operator==(const GroupAlgebraElement& o) const = default;

  private:
    static std::size_t check_order(int p) {
        if (p < 0 || p > 12) throw std::invalid_argument("GroupAlgebraElement: degree out of range");
        BigInt f = factorial(p);
        return static_cast<std::size_t>(f.convert_to<long long>());
    }
    int p_;
    int dmax_;
    std::vector<EpsPoly> coef_;
};

// Jucys-Murphy element J_a = sum_{i<a} (i a), 1-based a in 1..p. J_1 = 0.
inline GroupAlgebraElement jm_element(int p, int a, int dmax) {
    if (a < 1 || a > p) throw std::invalid_argument("jm_element: index out of range");
    GroupAlgebraElement e(p, dmax);
    for (int i = 0; i + 1 < a; ++i)
        e.coeff(Permutation::transposition(p, i, a - 1)).set_coeff(0, 1);
    return e;
}

// sum_m g(m) eps^m J_a^m, truncated at dmax. Powers of J_a are computed as
// plain group-algebra elements; the series coefficients are supplied by g.
inline GroupAlgebraElement jm_series(int p, int a, int dmax,
                                     const std::function<ExactScalar(int)>& g) {
    GroupAlgebraElement out(p, dmax);
    GroupAlgebraElement power = GroupAlgebraElement::identity(p, 0);
    GroupAlgebraElement j = jm_element(p, a, 0);
    for (int m = 0; m <= dmax; ++m) {
        ExactScalar gm = g(m);
        if (gm != 0) {
            for_each_permutation(p, [&](const Permutation& w) {
                const ExactScalar& c = power.coeff(w).coeff(0);
                if (c != 0) out.coeff(w).set_coeff(m, gm * c);
            });
        }
        if (m < dmax) power = power * j;
    }
    return out;
}

// prod_{a=1}^{p} (series in eps J_a); factors commute but are multiplied in
// order anyway.
inline GroupAlgebraElement jm_series_product(int p, int dmax,
                                             const std::function<ExactScalar(int)>& g) {
    GroupAlgebraElement acc = GroupAlgebraElement::identity(p, dmax);
    for (int a = 2; a <= p; ++a) acc = acc * jm_series(p, a, dmax, g);
    return acc;
}

// prod_a (1 + eps J_a) = sum_la eps^{p - l(la)} C_la, compared through degree
// d_max.
inline bool jm_class_expansion_check(int p, int d_max) {
    GroupAlgebraElement prod =
        jm_series_product(p, d_max, [](int m) { return ExactScalar(m <= 1 ? 1 : 0); });
    bool ok = true;
    for_each_permutation(p, [&](const Permutation& w) {
        int codim = p - w.cycle_type().length();
        EpsPoly expected(d_max);
        if (codim <= d_max) expected.set_coeff(codim, 1);
        if (!(prod.coeff(w) == expected)) ok = false;
    });
    return ok;
}

}  // namespace skewjue
