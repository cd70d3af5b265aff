#pragma once

#include <stdexcept>
#include <string>

namespace polyharm {

class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(int lhs, int rhs)
        : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// q -> Delta^k(P_{2k} q) is not injective on the graded piece of this degree.
class SingularFischerOperator : public std::runtime_error {
public:
    explicit SingularFischerOperator(int degree)
        : std::runtime_error("Fischer operator is singular at input degree " + std::to_string(degree)),
          degree_(degree) {}
    [[nodiscard]] int degree() const { return degree_; }

private:
    int degree_;
};

/// A checked inequality failed; carries the offending degree.
class BoundViolated : public std::runtime_error {
public:
    BoundViolated(int degree, const std::string& what)
        : std::runtime_error("bound violated at degree " + std::to_string(degree) + ": " + what), degree_(degree) {}
    [[nodiscard]] int degree() const { return degree_; }

private:
    int degree_;
};

class IllConditionedGram : public std::runtime_error {
public:
    explicit IllConditionedGram(const std::string& what) : std::runtime_error("ill-conditioned Gram matrix: " + what) {}
};

/// Every part in the tail window is zero: the series is a polynomial, whose order is 0 by convention.
class AllZeroTail : public std::runtime_error {
public:
    AllZeroTail() : std::runtime_error("all tail parts are zero; order 0 by convention, type undefined") {}
};

}  // namespace polyharm
