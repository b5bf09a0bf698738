#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "skewjue/howe.hpp"
#include "skewjue/partition.hpp"
#include "skewjue/rng.hpp"

namespace skewjue {

struct BinaryMatrix {
    int n = 0;
    int k = 0;
    std::vector<std::uint8_t> bits;  // row-major, size n*k

    long long popcount() const {
        long long c = 0;
        for (auto b : bits) c += b;
        return c;
    }

    void validate() const {
        if (static_cast<long long>(bits.size()) != static_cast<long long>(n) * k)
            throw std::invalid_argument("BinaryMatrix: size mismatch");
    }
};

// Shape of the insertion tableau of the dual RSK correspondence: cells are
// read in row-major order and their column indices inserted with strict
// bumping (the bumped entry is the leftmost one >= the incoming value), so
// tableau rows are strictly increasing. The shape has at most n rows and
// first row at most k: it lies in the n x k box directly.
inline Partition dual_rsk_shape(const BinaryMatrix& m) {
    m.validate();
    std::vector<std::vector<int>> tableau;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.k; ++j) {
            if (!m.bits[static_cast<std::size_t>(i) * m.k + j]) continue;
            int carry = j;
            for (std::size_t r = 0;; ++r) {
                if (r == tableau.size()) {
                    tableau.emplace_back(1, carry);
                    break;
                }
                auto& row = tableau[r];
                auto it = std::lower_bound(row.begin(), row.end(), carry);
                if (it == row.end()) {
                    row.push_back(carry);
                    break;
                }
                std::swap(*it, carry);
            }
        }
    std::vector<int> shape(tableau.size());
    for (std::size_t r = 0; r < tableau.size(); ++r) shape[r] = static_cast<int>(tableau[r].size());
    return Partition(std::move(shape));
}

inline BinaryMatrix uniform_binary_matrix(const HoweParams& params, Rng& rng) {
    params.validate();
    BinaryMatrix m{params.n, params.k, std::vector<std::uint8_t>(params.cells(), 0)};
    for (long long cell : rng.sample_subset(params.cells(), params.p)) m.bits[cell] = 1;
    return m;
}

// i.i.d. shapes distributed per mu_h: a uniform p-subset of the n x k grid
// is a uniform binary matrix, and dual RSK pushes it to the measure. Replica
// r draws from stream (seed, r), so output is deterministic and independent
// of scheduling.
inline std::vector<Partition> sample_howe(const HoweParams& params, long long count,
                                          std::uint64_t seed) {
    params.validate();
    if (count < 0) throw std::invalid_argument("sample_howe: negative count");
    std::vector<Partition> out;
    out.reserve(count);
    for (long long r = 0; r < count; ++r) {
        Rng rng(seed, static_cast<std::uint64_t>(r));
        out.push_back(dual_rsk_shape(uniform_binary_matrix(params, rng)));
    }
    return out;
}

}  // namespace skewjue
