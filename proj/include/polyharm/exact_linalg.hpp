#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm {

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

    [[nodiscard]] RationalMatrix transpose() const;
    [[nodiscard]] bool is_symmetric() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Solves A X = B exactly by fraction-free (Bareiss) elimination after
/// clearing row denominators. Returns nullopt iff A is singular.
std::optional<RationalMatrix> bareiss_solve(const RationalMatrix& A, const RationalMatrix& B);

/// Exact determinant via Bareiss elimination.
Rational determinant(const RationalMatrix& A);

/// Exact rank via fraction-free row reduction.
std::size_t rank(const RationalMatrix& A);

/// A = L D L^T for symmetric A with L unit lower triangular. Returns nullopt
/// when a zero pivot appears (A singular or indefinite without pivoting).
struct LdltFactor {
    RationalMatrix L;
    std::vector<Rational> D;
};
std::optional<LdltFactor> ldlt(const RationalMatrix& A);

/// Solves L X = B for unit lower-triangular L.
RationalMatrix forward_substitute_unit(const RationalMatrix& L, const RationalMatrix& B);

}  // namespace polyharm
