#include "fatcolor/spectral.hpp"

#include <algorithm>

#include "fatcolor/errors.hpp"

namespace fatcolor {

namespace {

void require_no_isolated(const Graph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw IsolatedVertex(v);
}

} // namespace

GraphMatrices build_matrices(const Graph& g)
{
    require_no_isolated(g);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    GraphMatrices m{RationalMatrix(n, n), RationalMatrix(n, n), RationalMatrix(n, n), RationalMatrix(n, n)};
    for (std::size_t v = 0; v < n; ++v) {
        const int d = g.degree(static_cast<Vertex>(v));
        m.degree(v, v) = BigRational(d);
        m.kirchhoff(v, v) = BigRational(d);
        m.normalized(v, v) = BigRational(1);
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
            const auto wi = static_cast<std::size_t>(w);
            m.adjacency(v, wi) = BigRational(1);
            m.kirchhoff(v, wi) = BigRational(-1);
            m.normalized(v, wi) = BigRational(BigInt(-1), BigInt(d));
        }
    }
    return m;
}

std::size_t nl_multiplicity(const Graph& g, const BigRational& lambda)
{
    require_no_isolated(g);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const BigInt shift = lambda.num() - lambda.den(); // q (lambda - 1)
    IntegerMatrix m(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        m(v, v) = shift * g.degree(static_cast<Vertex>(v));
        for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
            m(v, static_cast<std::size_t>(w)) = lambda.den();
    }
    return kernel_dimension(m);
}

IntegerPolynomial pencil_polynomial(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<BigInt> xs;
    std::vector<BigInt> ys;
    for (std::size_t t = 0; t <= n; ++t) {
        IntegerMatrix m(n, n);
        for (std::size_t v = 0; v < n; ++v) {
            m(v, v) = -BigInt(static_cast<long long>(t) * g.degree(static_cast<Vertex>(v)));
            for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
                m(v, static_cast<std::size_t>(w)) = 1;
        }
        xs.emplace_back(static_cast<long long>(t));
        ys.push_back(bareiss_determinant(std::move(m)));
    }
    return IntegerPolynomial::interpolate(xs, ys);
}

int max_nl_multiplicity(const Graph& g)
{
    require_no_isolated(g);
    return pencil_polynomial(g).max_root_multiplicity();
}

bool check_fat_spectral(const Graph& g, int k, const Rational& alpha)
{
    const BigRational lambda = to_big(Rational(k) * alpha);
    const auto required = static_cast<std::size_t>(std::max(1, k - 1));
    return nl_multiplicity(g, lambda) >= required;
}

VertexFunction class_difference_function(const Coloring& c, int i, int j)
{
    if (i == j || i < 0 || j < 0 || i >= c.k() || j >= c.k())
        throw InvalidParams("f_ij needs two distinct classes in range");
    VertexFunction f(static_cast<std::size_t>(c.vertex_count()));
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
        if (c[v] == i)
            f[static_cast<std::size_t>(v)] = BigRational(1);
        else if (c[v] == j)
            f[static_cast<std::size_t>(v)] = BigRational(-1);
    }
    return f;
}

VertexFunction apply_normalized_laplacian(const Graph& g, const VertexFunction& f)
{
    require_no_isolated(g);
    VertexFunction out(f.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        BigRational sum;
        for (Vertex w : g.neighbors(v))
            sum += f[static_cast<std::size_t>(w)];
        out[static_cast<std::size_t>(v)] = f[static_cast<std::size_t>(v)] - sum / BigRational(g.degree(v));
    }
    return out;
}

bool eigenfunction_check(const Graph& g, const FatColoring& fc, int i, int j)
{
    const VertexFunction f = class_difference_function(fc.coloring, i, j);
    const VertexFunction lf = apply_normalized_laplacian(g, f);
    const BigRational lambda = to_big(Rational(fc.k()) * fc.alpha);
    for (std::size_t v = 0; v < f.size(); ++v)
        if (lf[v] != lambda * f[v])
            return false;
    return true;
}

std::size_t eigenvalue_multiplicity(const RationalMatrix& m, const BigRational& value)
{
    RationalMatrix shifted(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            shifted(r, c) = (r == c ? value : BigRational()) - m(r, c);
    return kernel_dimension(shifted);
}

RegularShadow regular_shadow(const Graph& g, int k, const Rational& alpha)
{
    const auto report = structure_report(g);
    if (!report.regular_degree)
        throw NotRegular();
    const BigRational d(*report.regular_degree);
    const BigRational lambda = to_big(Rational(k) * alpha);

    const auto n = static_cast<std::size_t>(g.vertex_count());
    RationalMatrix adjacency(n, n);
    RationalMatrix kirchhoff(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        kirchhoff(v, v) = d;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
            adjacency(v, static_cast<std::size_t>(w)) = BigRational(1);
            kirchhoff(v, static_cast<std::size_t>(w)) = BigRational(-1);
        }
    }

    RegularShadow shadow;
    shadow.kirchhoff_eigenvalue = d * lambda;
    shadow.adjacency_eigenvalue = d * (BigRational(1) - lambda);
    shadow.kirchhoff_multiplicity = eigenvalue_multiplicity(kirchhoff, shadow.kirchhoff_eigenvalue);
    shadow.adjacency_multiplicity = eigenvalue_multiplicity(adjacency, shadow.adjacency_eigenvalue);
    shadow.required = static_cast<std::size_t>(std::max(1, k - 1));
    return shadow;
}

} // namespace fatcolor
