#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ckspectra {

/// Cardinal in N ∪ {ω}. Bundles only carry nonzero values; zero shows up as the
/// result of sums over empty edge families.
///
/// Sums and products involving ω are ω, except that 0 · ω = 0 (cardinal
/// arithmetic). ω compares greater than every natural.
class Multiplicity {
public:
    constexpr Multiplicity() noexcept = default;
    constexpr explicit Multiplicity(std::uint64_t n) noexcept : value_(n) {}

    static constexpr Multiplicity omega() noexcept {
        Multiplicity m;
        m.infinite_ = true;
        return m;
    }

    constexpr bool is_omega() const noexcept { return infinite_; }
    constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }
    constexpr bool is_finite() const noexcept { return !infinite_; }

    /// Finite value; meaningless for ω.
    constexpr std::uint64_t value() const noexcept { return value_; }

    constexpr Multiplicity& operator+=(Multiplicity rhs) {
        if (infinite_ || rhs.infinite_) {
            *this = omega();
        } else {
            if (value_ > std::numeric_limits<std::uint64_t>::max() - rhs.value_)
                throw std::overflow_error("finite multiplicity overflow");
            value_ += rhs.value_;
        }
        return *this;
    }

    friend constexpr Multiplicity operator+(Multiplicity a, Multiplicity b) { return a += b; }

    friend constexpr Multiplicity operator*(Multiplicity a, Multiplicity b) {
        if (a.is_zero() || b.is_zero())
            return Multiplicity{0};
        if (a.infinite_ || b.infinite_)
            return omega();
        if (a.value_ > std::numeric_limits<std::uint64_t>::max() / b.value_)
            throw std::overflow_error("finite multiplicity overflow");
        return Multiplicity{a.value_ * b.value_};
    }

    friend constexpr bool operator==(Multiplicity a, Multiplicity b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(Multiplicity a, Multiplicity b) noexcept {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    /// "inf" for ω, decimal otherwise (the graph-text spelling).
    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, Multiplicity m) { return os << m.to_string(); }

} // namespace ckspectra
