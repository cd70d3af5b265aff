#include "polyharm/multi_index.hpp"

#include <stdexcept>
#include <string>

namespace polyharm {

namespace {

void check_dimension(int d) {
    if (d < 1 || d > kMaxDimension) {
        throw std::invalid_argument("dimension must lie in [1, " + std::to_string(kMaxDimension) + "], got " +
                                    std::to_string(d));
    }
}

void enumerate(int dim, int pos, int remaining, MultiIndex& current, std::vector<MultiIndex>& out) {
    if (pos == dim - 1) {
        current.set(pos, remaining);
        out.push_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current.set(pos, e);
        enumerate(dim, pos + 1, remaining - e, current, out);
    }
    current.set(pos, 0);
}

}  // namespace

MultiIndex::MultiIndex(int dimension) {
    check_dimension(dimension);
    dim_ = static_cast<std::uint8_t>(dimension);
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(std::span<const int>(exponents.begin(), exponents.size())) {}

MultiIndex::MultiIndex(std::span<const int> exponents) {
    check_dimension(static_cast<int>(exponents.size()));
    dim_ = static_cast<std::uint8_t>(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) set(static_cast<int>(i), exponents[i]);
}

void MultiIndex::set(int i, int value) {
    if (i < 0 || i >= dim_) throw std::out_of_range("multi-index position out of range");
    if (value < 0 || value > 0xFFFF) throw std::invalid_argument("exponent out of range");
    auto idx = static_cast<std::size_t>(i);
    degree_ += value - exps_[idx];
    exps_[idx] = static_cast<std::uint16_t>(value);
}

Integer MultiIndex::factorial() const {
    Integer r = 1;
    for (int i = 0; i < dim_; ++i) r *= polyharm::factorial(exps_[static_cast<std::size_t>(i)]);
    return r;
}

std::vector<int> MultiIndex::to_vector() const {
    std::vector<int> v(dim_);
    for (int i = 0; i < dim_; ++i) v[static_cast<std::size_t>(i)] = exps_[static_cast<std::size_t>(i)];
    return v;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("multi-index dimension mismatch");
    MultiIndex r = a;
    for (int i = 0; i < a.dim_; ++i) r.set(i, a[i] + b[i]);
    return r;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (std::size_t i = 0; i < a.dim_; ++i) {
        if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
    }
    return std::strong_ordering::equal;
}

std::vector<MultiIndex> monomials_of_degree(int dimension, int degree) {
    check_dimension(dimension);
    std::vector<MultiIndex> out;
    if (degree < 0) return out;
    out.reserve(homogeneous_dimension(dimension, degree));
    MultiIndex current(dimension);
    enumerate(dimension, 0, degree, current, out);
    return out;
}

std::size_t homogeneous_dimension(int dimension, int degree) {
    if (degree < 0) return 0;
    // C(degree + d - 1, d - 1) computed incrementally; exact at desk scale.
    std::size_t r = 1;
    for (int i = 1; i < dimension; ++i) {
        r = r * static_cast<std::size_t>(degree + i) / static_cast<std::size_t>(i);
    }
    return r;
}

}  // namespace polyharm
