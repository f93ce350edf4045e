#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../graph.hpp"
#include "../partition.hpp"
#include "exhaustive.hpp"

namespace intpart {

enum class MinCutMode { Exact, SwapDescent };

struct MinCutResult {
    Partition partition;
    int cut = 0;
    std::uint64_t evaluated = 0;  // subsets (exact) or swaps applied (descent)
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 50'000'000ULL;

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

namespace detail {

/// Next mask with the same popcount (Gosper's hack); caller stops once bits leave low_bits(n).
constexpr Mask next_same_popcount(Mask x) noexcept {
    const Mask c = x & (~x + 1);
    const Mask r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

/// Calls fn(mask) for every k-subset of {0..n-1} in increasing numeric order.
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
    if (k == 0) {
        fn(Mask{0});
        return;
    }
    if (k > n) return;
    const Mask limit = low_bits(n);
    Mask x = low_bits(k);
    for (;;) {
        fn(x);
        if (x == (limit & ~low_bits(n - k))) break;  // highest k-subset
        x = next_same_popcount(x);
    }
}

}  // namespace detail

/// Exact minimizer of |E(A,B)| over |A| = k (lowest mask among ties), by enumeration of all k-subsets.
inline MinCutResult min_cut_exact(const Graph& g, int k, std::uint64_t subset_budget = kDefaultSubsetBudget) {
    const int n = g.order();
    if (k <= 0 || k >= n) throw ParameterError("min_cut_fixed_size: need 0 < k < n");
    if (binomial(n, k) > subset_budget) {
        throw BudgetError("min_cut_fixed_size: C(" + std::to_string(n) + "," + std::to_string(k) +
                          ") exceeds the subset budget");
    }
    MinCutResult best;
    best.cut = -1;
    detail::for_each_k_subset(n, k, [&](Mask a) {
        ++best.evaluated;
        const int c = cut_size(g, a);
        if (best.cut < 0 || c < best.cut) {
            best.cut = c;
            best.partition = Partition(a, n);
        }
    });
    return best;
}

/// Every minimizer of |E(A,B)| over |A| = k.
inline std::vector<Partition> min_cut_minimizers(const Graph& g, int k,
                                                 std::uint64_t subset_budget = kDefaultSubsetBudget) {
    const auto best = min_cut_exact(g, k, subset_budget);
    std::vector<Partition> out;
    detail::for_each_k_subset(g.order(), k, [&](Mask a) {
        if (cut_size(g, a) == best.cut) out.emplace_back(a, g.order());
    });
    return out;
}

/// Local minimum under single x-in-A / y-in-B swaps. The start is the first k vertices in
/// breadth-first order (seed 0) or a seeded random k-subset. Improving swaps are taken
/// first-found, scanning x then y in increasing index.
inline MinCutResult min_cut_descent(const Graph& g, int k, std::uint64_t seed = 0) {
    const int n = g.order();
    if (k <= 0 || k >= n) throw ParameterError("min_cut_fixed_size: need 0 < k < n");
    std::vector<int> order;
    if (seed == 0) {
        order = detail::bfs_order(g);
    } else {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    Mask a = 0;
    for (int i = 0; i < k; ++i) a |= bit(order[i]);

    MinCutResult out;
    const Mask all = g.vertices();
    bool improved = true;
    while (improved) {
        improved = false;
        const Mask b = all & ~a;
        for (Mask xs = a; xs && !improved; xs &= xs - 1) {
            const int x = lowest(xs);
            const int gain_x = g.degree_in(x, a) - g.degree_in(x, b);
            for (Mask ys = b; ys; ys &= ys - 1) {
                const int y = lowest(ys);
                const int delta = gain_x + g.degree_in(y, b) - g.degree_in(y, a) + (g.adjacent(x, y) ? 2 : 0);
                if (delta < 0) {
                    a = (a & ~bit(x)) | bit(y);
                    ++out.evaluated;
                    improved = true;
                    break;
                }
            }
        }
    }
    out.partition = Partition(a, n);
    out.cut = cut_size(g, a);
    return out;
}

inline MinCutResult min_cut_fixed_size(const Graph& g, int k, MinCutMode mode,
                                       std::uint64_t subset_budget = kDefaultSubsetBudget) {
    return mode == MinCutMode::Exact ? min_cut_exact(g, k, subset_budget) : min_cut_descent(g, k);
}

}  // namespace intpart
