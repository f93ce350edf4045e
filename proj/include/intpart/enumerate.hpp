#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace intpart {

enum class EnumerationMode {
    /// Every labeled d-regular graph exactly once.
    Labeled,
    /// Fresh (still isolated) vertices are consumed in index order, so every isomorphism class
    /// appears at least once but far fewer labeled copies are produced.
    FreshPrefix,
};

struct EnumerationLimits {
    int max_order = 14;
};

namespace detail {

template <class Fn>
class RegularEnumerator {
public:
    RegularEnumerator(int n, int d, EnumerationMode mode, Fn& fn) : n_(n), d_(d), mode_(mode), fn_(fn), g_(n) {}

    std::uint64_t run() {
        if ((n_ * d_) % 2 != 0) return 0;
        visit_vertex(0);
        return count_;
    }

private:
    void visit_vertex(int i) {
        if (stopped_) return;
        if (i == n_) {
            ++count_;
            if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const Graph&>, bool>) {
                if (!fn_(g_)) stopped_ = true;
            } else {
                fn_(g_);
            }
            return;
        }
        const int need = d_ - g_.degree(i);
        Mask candidates = 0;
        for (int j = i + 1; j < n_; ++j) {
            if (g_.degree(j) < d_) candidates |= bit(j);
        }
        if (popcount(candidates) < need) return;
        choose(i, candidates, need, 0);
    }

    void choose(int i, Mask candidates, int need, Mask chosen) {
        if (stopped_) return;
        if (need == 0) {
            apply(i, chosen, true);
            if (feasible_after(i)) visit_vertex(i + 1);
            apply(i, chosen, false);
            return;
        }
        if (popcount(candidates) < need) return;
        const int j = lowest(candidates);
        const Mask rest = candidates & (candidates - 1);
        const bool fresh = g_.degree(j) == 0;
        choose(i, rest, need - 1, chosen | bit(j));
        // Skipping a fresh vertex would let a later (interchangeable) fresh vertex stand in for it.
        if (mode_ == EnumerationMode::FreshPrefix && fresh) return;
        choose(i, rest, need, chosen);
    }

    void apply(int i, Mask chosen, bool add) {
        for_each_bit(chosen, [&](int j) {
            if (add) {
                g_.add_edge(i, j);
            } else {
                g_.remove_edge(i, j);
            }
        });
    }

    // Every later vertex must still be able to reach degree d using later vertices.
    bool feasible_after(int i) const {
        int deficit_sum = 0;
        Mask open = 0;
        for (int j = i + 1; j < n_; ++j) {
            if (g_.degree(j) < d_) open |= bit(j);
        }
        for (int j = i + 1; j < n_; ++j) {
            const int deficit = d_ - g_.degree(j);
            deficit_sum += deficit;
            if (deficit > popcount(open & ~g_.neighbors(j) & ~bit(j))) return false;
        }
        return deficit_sum % 2 == 0;
    }

    int n_;
    int d_;
    EnumerationMode mode_;
    Fn& fn_;
    Graph g_;
    std::uint64_t count_ = 0;
    bool stopped_ = false;
};

}  // namespace detail

/// Streams d-regular simple graphs on n vertices to fn(const Graph&) by backtracking over each
/// vertex's forward neighbor set. fn may return bool; false stops the enumeration.
/// Returns the number of graphs produced. Nothing is produced when n*d is odd.
template <class Fn>
std::uint64_t enumerate_regular(int n, int d, Fn&& fn, EnumerationMode mode = EnumerationMode::Labeled,
                                EnumerationLimits limits = {}) {
    if (n < 1 || n > limits.max_order || n > kMaxVertices) {
        throw GuardError("enumerate_regular: order " + std::to_string(n) + " outside 1.." +
                         std::to_string(limits.max_order));
    }
    if (d < 0 || d >= n) throw ParameterError("enumerate_regular: degree must satisfy 0 <= d < n");
    detail::RegularEnumerator<std::remove_reference_t<Fn>> e(n, d, mode, fn);
    return e.run();
}

template <class Fn>
std::uint64_t enumerate_regular(int n, int d, Fn&& fn, EnumerationLimits limits) {
    return enumerate_regular(n, d, std::forward<Fn>(fn), EnumerationMode::Labeled, limits);
}

/// Collects the stream into a vector; only sensible for small (n, d).
inline std::vector<Graph> collect_regular(int n, int d, EnumerationMode mode = EnumerationMode::Labeled) {
    std::vector<Graph> out;
    enumerate_regular(n, d, [&](const Graph& g) { out.push_back(g); }, mode);
    return out;
}

}  // namespace intpart
