#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "../partition.hpp"

namespace intpart {

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };

inline std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::ExhaustedNone: return "ExhaustedNone";
        case SearchStatus::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t moves = 0;
    std::int64_t elapsed_us = 0;
};

/// Result of a partition search. ExhaustedNone is a nonexistence certificate only when
/// `certified` is set; heuristic procedures report it for "gave up from this start".
struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::optional<Partition> partition;
    SearchStats stats;
    bool certified = false;

    bool found() const noexcept { return status == SearchStatus::Found; }
};

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000'000ULL;

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    std::int64_t elapsed_us() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

}  // namespace intpart
