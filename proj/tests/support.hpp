#pragma once

// Test-only helpers. The checks here restate the definitions directly and do
// not call into the library's validator.

#include <cstdint>
#include <utility>
#include <vector>

#include "cubefire/hypercube.hpp"

namespace cubefire::testing {

inline bool differ_in_one_bit(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t x = a ^ b;
    return x != 0 && (x & (x - 1)) == 0;
}

/// Pairwise restatement of the left cyclic partition definition.
inline bool brute_is_left_cyclic(int n, const std::vector<std::vector<Vertex>>& sets) {
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<int> hits(count, 0);
    for (const auto& s : sets) {
        if (s.empty()) return false;
        for (Vertex v : s) {
            if (v >= count || hits[v]++) return false;
        }
    }
    for (int h : hits) {
        if (h != 1) return false;
    }
    const std::size_t k = sets.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& cur = sets[i];
        const auto& prev = sets[(i + k - 1) % k];
        for (Vertex a : cur) {
            for (Vertex b : cur) {
                if (differ_in_one_bit(a, b)) return false;
            }
            bool found = false;
            for (Vertex b : prev) found = found || differ_in_one_bit(a, b);
            if (!found) return false;
        }
    }
    return true;
}

/// Every (n, order) pair for which a constructor exists, n in [lo, hi].
inline std::vector<std::pair<int, std::uint64_t>> admissible_pairs(int lo, int hi) {
    std::vector<std::pair<int, std::uint64_t>> out;
    for (int n = lo; n <= hi; ++n) {
        for (std::uint64_t p = 2; p <= (std::uint64_t{1} << n); p += 2) out.emplace_back(n, p);
        if (n >= 4) {
            for (std::uint64_t p = 5; p <= (std::uint64_t{1} << (n - 1)) - 1; p += 2) out.emplace_back(n, p);
        }
    }
    return out;
}

}  // namespace cubefire::testing
