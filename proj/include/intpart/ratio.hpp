#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "error.hpp"

namespace intpart {

/// Exact rational threshold q = num/den with 0 < q < 1, kept in lowest terms.
class Ratio {
public:
    constexpr Ratio() : num_(1), den_(2) {}

    Ratio(long num, long den) {
        if (den <= 0 || num <= 0 || num >= den) {
            throw ParameterError("ratio " + std::to_string(num) + "/" + std::to_string(den) +
                                 " is not strictly between 0 and 1");
        }
        const long g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    static Ratio half() { return Ratio(1, 2); }

    /// Parses "a/b". Decimal input is rejected.
    static Ratio parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            throw ParseError(ParseError::Kind::BadSyntax, "ratio must be written as a/b, got '" + std::string(text) + "'");
        }
        const auto to_long = [&](std::string_view s) {
            if (s.empty()) throw ParseError(ParseError::Kind::BadSyntax, "ratio: empty numerator or denominator");
            long v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') {
                    throw ParseError(ParseError::Kind::BadSyntax, "ratio: non-digit in '" + std::string(text) + "'");
                }
                v = v * 10 + (c - '0');
                if (v > (1L << 40)) throw ParseError(ParseError::Kind::BadSyntax, "ratio: value too large");
            }
            return v;
        };
        return Ratio(to_long(text.substr(0, slash)), to_long(text.substr(slash + 1)));
    }

    constexpr long num() const noexcept { return num_; }
    constexpr long den() const noexcept { return den_; }

    /// 1 - q.
    Ratio complement() const { return Ratio(den_ - num_, den_); }

    /// Whether q * value is an integer.
    constexpr bool integral_at(long value) const noexcept { return (num_ * value) % den_ == 0; }

    /// Whether count >= q * value, in integers.
    constexpr bool at_least(long count, long value) const noexcept { return count * den_ >= num_ * value; }

    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend constexpr bool operator==(const Ratio& a, const Ratio& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend constexpr bool operator<(const Ratio& a, const Ratio& b) noexcept {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend constexpr bool operator<=(const Ratio& a, const Ratio& b) noexcept { return !(b < a); }

private:
    long num_;
    long den_;
};

}  // namespace intpart
