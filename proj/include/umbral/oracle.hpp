#pragma once

// Brute-force combinatorics used as ground truth: Stirling numbers, finite
// differences of powers, and counts of colored labeled forests.

#include "umbral/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace umbral::oracle {

/// Set partitions of an n-set into k blocks.
inline Integer stirling2(unsigned n, unsigned k) {
    if (k > n) throw std::out_of_range("stirling2 needs 0 <= k <= n");
    std::vector<Integer> row(n + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i; j >= 1; --j) row[j] = Integer(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

/// Signed Stirling numbers of the first kind: x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
inline Integer stirling1(unsigned n, unsigned k) {
    if (k > n) throw std::out_of_range("stirling1 needs 0 <= k <= n");
    std::vector<Integer> row(n + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i; j >= 1; --j) row[j] = row[j - 1] - Integer(i - 1) * row[j];
        row[0] = 0;
    }
    return row[k];
}

/// (Delta^m t^{m+n}) at t = 0, as the alternating sum over j of C(m,j) j^{m+n}.
inline Integer forward_difference_power(unsigned m, unsigned n) {
    Integer total = 0;
    for (unsigned j = 0; j <= m; ++j) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), j, m + n);
        Integer term = binomial(m, j) * power;
        if ((m - j) % 2) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

/// n labeled vertices; each tree gets one of x colors and each vertex of
/// outdegree j one of outdegree_colors[j] colors.
struct ForestSpec {
    unsigned n = 0;
    unsigned x = 0;
    std::vector<unsigned> outdegree_colors;
};

inline constexpr unsigned kMaxForestVertices = 8;

namespace detail {

inline void check_spec(const ForestSpec& spec) {
    if (spec.n > kMaxForestVertices)
        throw std::out_of_range("forest enumeration is capped at " + std::to_string(kMaxForestVertices) + " vertices");
    if (spec.n > 0 && spec.outdegree_colors.size() < spec.n)
        throw std::invalid_argument("forest spec needs color counts for outdegrees 0.." + std::to_string(spec.n - 1));
}

// Sums weights over parent functions (vertex -> parent or root). Forests with
// the same root count and outdegree profile share a weight, so they are
// tallied by signature first.
inline Integer count_forests(const ForestSpec& spec, bool increasing) {
    check_spec(spec);
    const unsigned n = spec.n;
    if (n == 0) return 1;
    std::vector<unsigned> parent(n + 1, 0);
    std::vector<unsigned> outdeg(n + 1, 0);
    std::unordered_map<std::uint64_t, std::uint64_t> tally;

    // Parents are assigned in vertex order, so only the chain through
    // vertices below v is known; later assignments are checked at the leaf.
    auto creates_cycle = [&](unsigned v, unsigned u) {
        for (unsigned w = u, steps = 0; w != 0 && w < v && steps <= n; ++steps) {
            w = parent[w];
            if (w == v) return true;
        }
        return false;
    };
    auto acyclic = [&]() {
        for (unsigned v = 1; v <= n; ++v) {
            unsigned w = parent[v];
            for (unsigned steps = 0; w != 0; ++steps) {
                if (steps > n || w == v) return false;
                w = parent[w];
            }
        }
        return true;
    };

    auto recurse = [&](auto&& self, unsigned v, unsigned roots) -> void {
        if (v > n) {
            if (!increasing && !acyclic()) return;
            std::uint64_t key = roots;
            for (unsigned u = 1; u <= n; ++u) key = key * 16 + outdeg[u];
            ++tally[key];
            return;
        }
        parent[v] = 0;
        self(self, v + 1, roots + 1);
        unsigned limit = increasing ? v - 1 : n;
        for (unsigned u = 1; u <= limit; ++u) {
            if (u == v) continue;
            if (!increasing && u < v && creates_cycle(v, u)) continue;
            parent[v] = u;
            ++outdeg[u];
            self(self, v + 1, roots);
            --outdeg[u];
        }
        parent[v] = 0;
    };
    recurse(recurse, 1, 0);

    Integer total = 0;
    for (auto [signature, count] : tally) {
        std::uint64_t key = signature;
        Integer weight = 1;
        for (unsigned u = 1; u <= n; ++u) {
            weight *= spec.outdegree_colors[key % 16];
            key /= 16;
        }
        Integer xs;
        mpz_ui_pow_ui(xs.get_mpz_t(), spec.x, static_cast<unsigned long>(key));
        total += weight * xs * Integer(static_cast<unsigned long>(count));
    }
    return total;
}

}  // namespace detail

/// Rooted labeled forests weighted by x^{#trees} * prod_v m_{outdeg(v)}.
inline Integer count_colored_forests(const ForestSpec& spec) { return detail::count_forests(spec, false); }

/// As count_colored_forests, restricted to parent labels smaller than child labels.
inline Integer count_increasing_colored_forests(const ForestSpec& spec) { return detail::count_forests(spec, true); }

}  // namespace umbral::oracle
