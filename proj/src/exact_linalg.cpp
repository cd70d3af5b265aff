#include "polyharm/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace polyharm {

namespace {

using IntegerMatrix = std::vector<std::vector<Integer>>;

Integer lcm_of_denominators(const RationalMatrix& A, std::size_t row, const RationalMatrix* B) {
    Integer l = 1;
    for (std::size_t j = 0; j < A.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(row, j).get_den_mpz_t());
    if (B != nullptr) {
        for (std::size_t j = 0; j < B->cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*B)(row, j).get_den_mpz_t());
        }
    }
    return l;
}

// Row-scaled integer copy of [A | B].
IntegerMatrix to_integer_augmented(const RationalMatrix& A, const RationalMatrix* B) {
    const std::size_t extra = B == nullptr ? 0 : B->cols();
    IntegerMatrix M(A.rows(), std::vector<Integer>(A.cols() + extra));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Integer l = lcm_of_denominators(A, i, B);
        for (std::size_t j = 0; j < A.cols(); ++j) {
            M[i][j] = A(i, j).get_num() * (l / A(i, j).get_den());
        }
        for (std::size_t j = 0; j < extra; ++j) {
            M[i][A.cols() + j] = (*B)(i, j).get_num() * (l / (*B)(i, j).get_den());
        }
    }
    return M;
}

// Fraction-free forward elimination on the first `pivot_cols` columns.
// Returns the pivot columns found (row r holds the pivot of pivot_columns[r]).
// `sign` tracks row swaps.
std::vector<std::size_t> bareiss_eliminate(IntegerMatrix& M, std::size_t pivot_cols, int& sign) {
    const std::size_t n = M.size();
    const std::size_t width = n == 0 ? 0 : M[0].size();
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t row = 0;
    sign = 1;
    for (std::size_t col = 0; col < pivot_cols && row < n; ++col) {
        std::size_t p = row;
        while (p < n && M[p][col] == 0) ++p;
        if (p == n) continue;
        if (p != row) {
            std::swap(M[p], M[row]);
            sign = -sign;
        }
        const Integer& piv = M[row][col];
        for (std::size_t i = row + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < width; ++j) {
                Integer v = M[i][j] * piv - M[i][col] * M[row][j];
                mpz_divexact(M[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][col] = 0;
        }
        prev = M[row][col];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    RationalMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) return false;
        }
    }
    return true;
}

std::optional<RationalMatrix> bareiss_solve(const RationalMatrix& A, const RationalMatrix& B) {
    const std::size_t n = A.rows();
    if (A.cols() != n || B.rows() != n) throw std::invalid_argument("bareiss_solve: shape mismatch");
    if (n == 0) return RationalMatrix(0, B.cols());
    IntegerMatrix M = to_integer_augmented(A, &B);
    int sign = 1;
    auto pivots = bareiss_eliminate(M, n, sign);
    if (pivots.size() < n) return std::nullopt;

    RationalMatrix X(n, B.cols());
    for (std::size_t c = 0; c < B.cols(); ++c) {
        for (std::size_t i = n; i-- > 0;) {
            Rational s = Rational(M[i][n + c]);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (M[i][j] != 0) s -= Rational(M[i][j]) * X(j, c);
            }
            X(i, c) = s / Rational(M[i][i]);
        }
    }
    return X;
}

Rational determinant(const RationalMatrix& A) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) scale *= lcm_of_denominators(A, i, nullptr);
    IntegerMatrix M = to_integer_augmented(A, nullptr);
    int sign = 1;
    auto pivots = bareiss_eliminate(M, n, sign);
    if (pivots.size() < n) return 0;
    Rational det(M[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

std::size_t rank(const RationalMatrix& A) {
    IntegerMatrix M = to_integer_augmented(A, nullptr);
    int sign = 1;
    return bareiss_eliminate(M, A.cols(), sign).size();
}

std::optional<LdltFactor> ldlt(const RationalMatrix& A) {
    const std::size_t n = A.rows();
    if (!A.is_symmetric()) throw std::invalid_argument("ldlt requires a symmetric matrix");
    LdltFactor f{RationalMatrix::identity(n), std::vector<Rational>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        Rational d = A(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= f.L(j, k) * f.L(j, k) * f.D[k];
        if (sgn(d) == 0) return std::nullopt;
        f.D[j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = A(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= f.L(i, k) * f.L(j, k) * f.D[k];
            f.L(i, j) = s / d;
        }
    }
    return f;
}

RationalMatrix forward_substitute_unit(const RationalMatrix& L, const RationalMatrix& B) {
    const std::size_t n = L.rows();
    if (L.cols() != n || B.rows() != n) throw std::invalid_argument("forward_substitute_unit: shape mismatch");
    RationalMatrix X = B;
    for (std::size_t c = 0; c < B.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            Rational s = X(i, c);
            for (std::size_t k = 0; k < i; ++k) {
                if (sgn(L(i, k)) != 0) s -= L(i, k) * X(k, c);
            }
            X(i, c) = s;
        }
    }
    return X;
}

}  // namespace polyharm
