#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tough {

/// Raised when a 64-bit Ratio computation would overflow.
class RatioOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Exact non-negative rational p/q with a distinguished infinite value.
///
/// Finite values are kept in lowest terms, so equality is structural.
/// Ordering cross-multiplies in 128-bit arithmetic and never rounds.
class Ratio {
public:
    /// Zero.
    constexpr Ratio() = default;

    static Ratio finite(std::int64_t p, std::int64_t q);
    static constexpr Ratio infinite() noexcept
    {
        Ratio r;
        r.infinite_ = true;
        r.p_ = 1;
        r.q_ = 0;
        return r;
    }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_zero() const noexcept { return !infinite_ && p_ == 0; }
    std::int64_t num() const noexcept { return p_; }
    std::int64_t den() const noexcept { return q_; }

    /// ceil(2p/q), exact. Throws on the infinite value.
    std::int64_t ceil_of_double() const;
    Ratio times(std::int64_t k) const;
    /// k / this (e.g. delta / t). Throws on zero.
    Ratio divided_into(std::int64_t k) const;

    /// "p/q" in lowest terms (integers keep "/1"), or "inf".
    std::string to_string() const;
    /// Parses "p/q" (any terms; reduced on construction), a bare integer, or "inf".
    static Ratio parse(const std::string& text);

    friend bool operator==(const Ratio&, const Ratio&) noexcept = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept
    {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        auto lhs = static_cast<__int128>(a.p_) * b.q_;
        auto rhs = static_cast<__int128>(b.p_) * a.q_;
        return lhs <=> rhs;
    }

private:
    bool infinite_ = false;
    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
};

}  // namespace tough
