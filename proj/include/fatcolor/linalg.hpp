#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatcolor/rational.hpp"

namespace fatcolor {

/// Dense row-major matrix of exact entries.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = DenseMatrix<BigInt>;
using RationalMatrix = DenseMatrix<BigRational>;

/// Rank by fraction-free (Bareiss) elimination; the input is consumed.
std::size_t bareiss_rank(IntegerMatrix m);

/// Determinant by fraction-free elimination with row pivoting.
BigInt bareiss_determinant(IntegerMatrix m);

/// Scales each row by the lcm of its denominators.
IntegerMatrix clear_denominators(const RationalMatrix& m);

/// cols - rank, exact.
std::size_t kernel_dimension(const RationalMatrix& m);
std::size_t kernel_dimension(const IntegerMatrix& m);

/// Polynomial with integer coefficients, ascending degree. The zero
/// polynomial has no coefficients.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> coefficients);

    /// Interpolates the unique polynomial of degree < points.size() through
    /// (x_i, y_i). Throws std::domain_error if the result is not integral.
    static IntegerPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& leading() const { return coeffs_.back(); }

    IntegerPolynomial derivative() const;
    BigInt content() const;
    /// Divided by its content, leading coefficient made positive.
    IntegerPolynomial primitive_part() const;

    BigRational evaluate(const BigRational& t) const;

    /// Multiplicity of `root` as a root (0 if it is not one).
    int root_multiplicity(const BigRational& root) const;

    /// Largest multiplicity of any complex root, via repeated gcd with the
    /// derivative: each step strips one copy of every repeated factor.
    int max_root_multiplicity() const;

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Pseudo-remainder of a by b (b nonzero).
IntegerPolynomial pseudo_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Primitive gcd over Z[t] with positive leading coefficient.
IntegerPolynomial gcd(IntegerPolynomial a, IntegerPolynomial b);

} // namespace fatcolor
