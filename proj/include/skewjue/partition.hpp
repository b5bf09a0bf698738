#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewjue/rational.hpp"

namespace skewjue {

// Young diagram with weakly decreasing positive parts. The empty partition is
// valid everywhere. Boxes use matrix coordinates (row i, column j, 1-based);
// the content of box (i,j) is j - i.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    long long weight() const {
        long long s = 0;
        for (int x : parts_) s += x;
        return s;
    }

    // 1-based row length; 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& la) {
    std::vector<int> cols;
    if (!la.empty()) {
        cols.resize(la.parts()[0]);
        for (int x : la.parts())
            for (int j = 0; j < x; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

// Hook length of box (i,j), 1-based: arm + leg + 1.
inline int hook_length(const Partition& la, const Partition& conj, int i, int j) {
    return la.part(i) - j + conj.part(j) - i + 1;
}

inline BigInt hook_product(const Partition& la) {
    Partition conj = conjugate(la);
    BigInt h = 1;
    for (int i = 1; i <= la.length(); ++i)
        for (int j = 1; j <= la.part(i); ++j) h *= hook_length(la, conj, i, j);
    return h;
}

// Number of standard Young tableaux of shape la (hook length formula).
inline ExactScalar dim_sym(const Partition& la) {
    return ExactScalar(factorial(la.weight()), hook_product(la));
}

// dim V_{GL_n}(la) by the hook content formula; 0 when the diagram has more
// than n rows.
inline ExactScalar dim_gl(int n, const Partition& la) {
    if (n <= 0) throw std::invalid_argument("dim_gl: n must be positive");
    if (la.length() > n) return 0;
    Partition conj = conjugate(la);
    BigInt num = 1, den = 1;
    for (int i = 1; i <= la.length(); ++i)
        for (int j = 1; j <= la.part(i); ++j) {
            num *= (n + j - i);
            den *= hook_length(la, conj, i, j);
        }
    return ExactScalar(num, den);
}

// Removable corner: row index, content nu_i - i, and the diagram with that
// box removed.
struct Corner {
    int row;      // 1-based
    int content;  // nu_row - row
    Partition child;
};

inline std::vector<Corner> removable_corners(const Partition& nu) {
    if (nu.empty()) throw std::domain_error("no corners");
    std::vector<Corner> out;
    for (int i = 1; i <= nu.length(); ++i) {
        if (nu.part(i) > nu.part(i + 1)) {
            std::vector<int> child = nu.parts();
            if (--child[i - 1] == 0) child.pop_back();
            out.push_back(Corner{i, nu.part(i) - i, Partition(std::move(child))});
        }
    }
    return out;  // rows increasing, contents strictly decreasing
}

// Addable corner: row where a box may be appended; child is the grown diagram,
// content is that of the new box.
inline std::vector<Corner> addable_corners(const Partition& nu) {
    std::vector<Corner> out;
    for (int i = 1; i <= nu.length() + 1; ++i) {
        if (i == 1 || nu.part(i - 1) > nu.part(i)) {
            std::vector<int> child = nu.parts();
            if (i == nu.length() + 1)
                child.push_back(1);
            else
                ++child[i - 1];
            out.push_back(Corner{i, nu.part(i) + 1 - i, Partition(std::move(child))});
        }
    }
    return out;
}

// Growth probabilities P(nu -> la) = dim la / (|la| dim nu) over all la
// obtained from nu by adding one box. Rows sum to 1 exactly.
inline std::map<Partition, ExactScalar> transition_probabilities(const Partition& nu) {
    std::map<Partition, ExactScalar> out;
    ExactScalar dnu = dim_sym(nu);
    for (const Corner& c : addable_corners(nu))
        out[c.child] = dim_sym(c.child) / (ExactScalar(c.child.weight()) * dnu);
    return out;
}

// Decay probabilities delta_i(nu) = dim(nu - box_i) / dim nu over removable
// corners. Sum to 1 exactly (branching rule).
inline std::vector<std::pair<Corner, ExactScalar>> cotransition_probabilities(const Partition& nu) {
    std::vector<std::pair<Corner, ExactScalar>> out;
    ExactScalar dnu = dim_sym(nu);
    for (Corner& c : removable_corners(nu)) {
        ExactScalar pr = dim_sym(c.child) / dnu;
        out.emplace_back(std::move(c), std::move(pr));
    }
    return out;
}

inline ExactScalar plancherel(const Partition& la) {
    ExactScalar d = dim_sym(la);
    return d * d / ExactScalar(factorial(la.weight()));
}

// Maya particle positions la_i - i + 1/2, emitted as 2x the position so the
// exact layer never touches floats. Descending; truncated at cutoff (also 2x,
// required to lie at or below -2*length).
inline std::vector<int> maya_twice(const Partition& la, int cutoff_twice) {
    if (cutoff_twice > -2 * la.length())
        throw std::invalid_argument("maya_twice: cutoff must lie below -length");
    std::vector<int> out;
    for (int i = 1;; ++i) {
        int pos = 2 * (la.part(i) - i) + 1;
        if (pos < cutoff_twice) break;
        out.push_back(pos);
    }
    return out;
}

inline std::vector<double> maya_positions(const Partition& la, double cutoff) {
    std::vector<double> out;
    for (int twice : maya_twice(la, static_cast<int>(std::floor(2 * cutoff))))
        if (twice / 2.0 >= cutoff) out.push_back(twice / 2.0);
    return out;
}

namespace detail {
inline void partitions_rec(int max_part, int remaining, int max_len, std::vector<int>& acc,
                           const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(acc));
        return;
    }
    if (max_len == 0) return;
    for (int first = std::min(max_part, remaining); first >= 1; --first) {
        acc.push_back(first);
        partitions_rec(first, remaining - first, max_len - 1, acc, fn);
        acc.pop_back();
    }
}
}  // namespace detail

// All partitions of p with at most n rows and parts at most k, in reverse
// lexicographic order ((p) first when it fits).
inline void for_each_partition_in_box(int n, int k, long long p,
                                      const std::function<void(const Partition&)>& fn) {
    if (p < 0 || p > static_cast<long long>(n) * k)
        throw std::invalid_argument("for_each_partition_in_box: p outside [0, nk]");
    std::vector<int> acc;
    detail::partitions_rec(k, static_cast<int>(p), n, acc, fn);
}

inline std::vector<Partition> partitions_in_box(int n, int k, long long p) {
    std::vector<Partition> out;
    for_each_partition_in_box(n, k, p, [&](const Partition& la) { out.push_back(la); });
    return out;
}

// All partitions of p, reverse lexicographic.
inline std::vector<Partition> partitions_of(int p) {
    return partitions_in_box(p == 0 ? 1 : p, p == 0 ? 1 : p, p);
}

inline bool fits_in_box(const Partition& la, int n, int k) {
    return la.length() <= n && (la.empty() || la.parts()[0] <= k);
}

}  // namespace skewjue
