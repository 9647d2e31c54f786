#include "fatcolor/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fatcolor {

namespace {

BigInt lcm_abs(const BigInt& a, const BigInt& b)
{
    return a / detail::gcd_abs(a, b) * b;
}

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(a, c), m(b, c));
}

} // namespace

std::size_t bareiss_rank(IntegerMatrix m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            swap_rows(m, pivot, rank);
        const BigInt p = m(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const BigInt lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (p * m(i, j) - lead * m(rank, j)) / prev;
            m(i, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

BigInt bareiss_determinant(IntegerMatrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != k) {
            swap_rows(m, pivot, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign < 0 ? BigInt(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

IntegerMatrix clear_denominators(const RationalMatrix& m)
{
    IntegerMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt scale = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            scale = lcm_abs(scale, m(r, c).den());
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = m(r, c).num() * (scale / m(r, c).den());
    }
    return out;
}

std::size_t kernel_dimension(const IntegerMatrix& m)
{
    return m.cols() - bareiss_rank(m);
}

std::size_t kernel_dimension(const RationalMatrix& m)
{
    return kernel_dimension(clear_denominators(m));
}

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

void IntegerPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntegerPolynomial IntegerPolynomial::interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys)
{
    const std::size_t n = xs.size();
    if (ys.size() != n)
        throw std::invalid_argument("interpolation needs matching point lists");

    // Newton divided differences.
    std::vector<BigRational> diff(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            diff[i] = (diff[i] - diff[i - 1]) / BigRational(xs[i] - xs[i - level]);

    // Expand sum diff[i] * prod_{j<i} (t - x_j) by Horner from the top.
    std::vector<BigRational> poly;
    for (std::size_t i = n; i-- > 0;) {
        // poly = poly * (t - x_i) + diff[i]
        std::vector<BigRational> next(poly.size() + 1);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];
            next[d] -= poly[d] * BigRational(xs[i]);
        }
        next[0] += diff[i];
        poly = std::move(next);
    }

    std::vector<BigInt> coeffs;
    coeffs.reserve(poly.size());
    for (const auto& c : poly) {
        if (!c.is_integer())
            throw std::domain_error("interpolated polynomial is not integral");
        coeffs.push_back(c.num());
    }
    return IntegerPolynomial(std::move(coeffs));
}

IntegerPolynomial IntegerPolynomial::derivative() const
{
    std::vector<BigInt> out;
    for (std::size_t d = 1; d < coeffs_.size(); ++d)
        out.push_back(coeffs_[d] * static_cast<long long>(d));
    return IntegerPolynomial(std::move(out));
}

BigInt IntegerPolynomial::content() const
{
    BigInt g = 0;
    for (const auto& c : coeffs_)
        g = detail::gcd_abs(g, c);
    return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const
{
    if (is_zero())
        return *this;
    BigInt g = content();
    if (leading() < 0)
        g = -g;
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c / g);
    return IntegerPolynomial(std::move(out));
}

BigRational IntegerPolynomial::evaluate(const BigRational& t) const
{
    BigRational acc;
    for (std::size_t d = coeffs_.size(); d-- > 0;)
        acc = acc * t + BigRational(coeffs_[d]);
    return acc;
}

int IntegerPolynomial::root_multiplicity(const BigRational& root) const
{
    if (is_zero())
        throw std::domain_error("root multiplicity of the zero polynomial");
    const BigInt& p = root.num();
    const BigInt& q = root.den();
    std::vector<BigInt> f = coeffs_;
    int mult = 0;
    while (f.size() > 1) {
        // f = (q t - p) g, solved from the top coefficient down.
        const std::size_t n = f.size() - 1;
        std::vector<BigInt> g(n);
        BigInt carry = 0; // g_i for the coefficient above
        bool exact = true;
        for (std::size_t i = n; i >= 1; --i) {
            BigInt numerator = f[i] + p * carry;
            if (numerator % q != 0) {
                exact = false;
                break;
            }
            g[i - 1] = numerator / q;
            carry = g[i - 1];
        }
        if (!exact || f[0] != -p * g[0])
            break;
        f = std::move(g);
        ++mult;
    }
    return mult;
}

int IntegerPolynomial::max_root_multiplicity() const
{
    if (is_zero())
        throw std::domain_error("root multiplicity of the zero polynomial");
    IntegerPolynomial f = primitive_part();
    int count = 0;
    while (f.degree() > 0) {
        f = gcd(f, f.derivative());
        ++count;
    }
    return count;
}

std::string IntegerPolynomial::str() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (d)
            out += ' ';
        out += coeffs_[d].str();
    }
    return out;
}

IntegerPolynomial pseudo_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree())
        return a;
    const auto& bc = b.coefficients();
    const BigInt& lb = b.leading();
    const int db = b.degree();
    int steps = a.degree() - db + 1;

    std::vector<BigInt> r = a.coefficients();
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
        const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
        const BigInt lr = r.back();
        for (auto& c : r)
            c *= lb;
        for (std::size_t i = 0; i < bc.size(); ++i)
            r[shift + i] -= lr * bc[i];
        --steps;
        while (!r.empty() && r.back() == 0)
            r.pop_back();
    }
    BigInt scale = 1;
    for (int i = 0; i < steps; ++i)
        scale *= lb;
    for (auto& c : r)
        c *= scale;
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial gcd(IntegerPolynomial a, IntegerPolynomial b)
{
    if (a.is_zero())
        return b.primitive_part();
    if (b.is_zero())
        return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntegerPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    if (a.degree() == 0)
        return IntegerPolynomial({BigInt(1)});
    return a.primitive_part();
}

} // namespace fatcolor
