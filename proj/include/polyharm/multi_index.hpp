#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm {

inline constexpr int kMaxDimension = 8;

/// Exponent vector alpha in N_0^d. Fixed inline storage; d <= kMaxDimension.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int dimension);
    MultiIndex(std::initializer_list<int> exponents);
    explicit MultiIndex(std::span<const int> exponents);

    [[nodiscard]] int dimension() const { return dim_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

    void set(int i, int value);

    /// alpha! = alpha_1! ... alpha_d!
    [[nodiscard]] Integer factorial() const;

    [[nodiscard]] std::vector<int> to_vector() const;

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

    /// Graded lexicographic order: total degree first, then x_1 > x_2 > ...
    /// (larger leading exponent sorts first).
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.dim_ == b.dim_ && a.exps_ == b.exps_;
    }

private:
    std::array<std::uint16_t, kMaxDimension> exps_{};
    std::uint8_t dim_ = 0;
    int degree_ = 0;
};

/// All exponent vectors of total degree `degree` in `dimension` variables,
/// in graded lexicographic order.
std::vector<MultiIndex> monomials_of_degree(int dimension, int degree);

/// C(degree + d - 1, d - 1).
std::size_t homogeneous_dimension(int dimension, int degree);

}  // namespace polyharm
