#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "skewjue/partition.hpp"
#include "skewjue/rational.hpp"

namespace skewjue {

// Permutation of {0, ..., p-1} in one-line notation. Composition acts right
// to left: (u * v)(x) = u(v(x)).
class Permutation {
public:
    explicit Permutation(int p) : img_(p) { std::iota(img_.begin(), img_.end(), 0); }

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[v] = 1;
        }
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation compose(const Permutation& v) const {
        if (degree() != v.degree()) throw std::invalid_argument("Permutation: degree mismatch");
        std::vector<int> out(img_.size());
        for (int i = 0; i < degree(); ++i) out[i] = img_[v.img_[i]];
        Permutation r(degree());
        r.img_ = std::move(out);
        return r;
    }

    Permutation inverse() const {
        std::vector<int> out(img_.size());
        for (int i = 0; i < degree(); ++i) out[img_[i]] = i;
        Permutation r(degree());
        r.img_ = std::move(out);
        return r;
    }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Partition cycle_type() const {
        std::vector<char> seen(img_.size(), 0);
        std::vector<int> lens;
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        return Partition(std::move(lens));
    }

    int sign() const {
        Partition t = cycle_type();
        return (t.weight() - t.length()) % 2 == 0 ? 1 : -1;
    }

    static Permutation transposition(int p, int a, int b) {
        if (a == b || a < 0 || b < 0 || a >= p || b >= p)
            throw std::invalid_argument("transposition: bad indices");
        Permutation r(p);
        std::swap(r.img_[a], r.img_[b]);
        return r;
    }

    bool operator==(const Permutation& o) const = default;

private:
    std::vector<int> img_;
};

inline Permutation operator*(const Permutation& u, const Permutation& v) { return u.compose(v); }

// Rank in the lexicographic enumeration of S_p (Lehmer code).
inline long long perm_rank(const Permutation& w) {
    int p = w.degree();
    long long rank = 0;
    for (int i = 0; i < p; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < p; ++j)
            if (w(j) < w(i)) ++smaller;
        rank = rank * (p - i) + smaller;
    }
    return rank;
}

inline Permutation perm_unrank(int p, long long rank) {
    std::vector<long long> digits(p);
    for (int i = p - 1; i >= 0; --i) {
        digits[i] = rank % (p - i);
        rank /= (p - i);
    }
    std::vector<int> pool(p);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> img(p);
    for (int i = 0; i < p; ++i) {
        img[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return Permutation(std::move(img));
}

// Lexicographic order matches perm_rank.
inline void for_each_permutation(int p, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> img(p);
    std::iota(img.begin(), img.end(), 0);
    do {
        fn(Permutation(std::vector<int>(img)));
    } while (std::next_permutation(img.begin(), img.end()));
}

// z_kappa = prod_i i^{m_i} m_i!, the centralizer order of the class kappa.
inline BigInt z_kappa(const Partition& kappa) {
    BigInt z = 1;
    int run = 0, prev = 0;
    for (int x : kappa.parts()) {
        if (x == prev) {
            ++run;
        } else {
            prev = x;
            run = 1;
        }
        z *= x;
        z *= run;  // accumulates m_i! one factor at a time along the run
    }
    return z;
}

inline BigInt conjugacy_class_size(const Partition& kappa) {
    return factorial(kappa.weight()) / z_kappa(kappa);
}

}  // namespace skewjue
