#pragma once

#include <cstddef>
#include <vector>

#include "fatcolor/coloring.hpp"
#include "fatcolor/graph.hpp"
#include "fatcolor/linalg.hpp"

namespace fatcolor {

/// Function on the vertices, f: V -> Q.
using VertexFunction = std::vector<BigRational>;

struct GraphMatrices {
    RationalMatrix adjacency;  // A
    RationalMatrix degree;     // D
    RationalMatrix kirchhoff;  // K = D - A
    RationalMatrix normalized; // L = I - D^{-1} A
};

/// Throws IsolatedVertex when some vertex has degree 0 (L is undefined).
GraphMatrices build_matrices(const Graph& g);

/// Geometric multiplicity of `lambda` as an eigenvalue of L.
///
/// lambda I - L = D^{-1}((lambda - 1) D + A) and D is invertible, so the
/// kernel is that of the integer matrix q(lambda - 1) D + q A where
/// q is the denominator of lambda. Throws IsolatedVertex.
std::size_t nl_multiplicity(const Graph& g, const BigRational& lambda);

/// p(t) = det(A - tD). Eigenvalues of L are 1 - t over the roots t.
/// Evaluated at t = 0..n by Bareiss determinants and interpolated.
IntegerPolynomial pencil_polynomial(const Graph& g);

/// Maximum eigenvalue multiplicity of L, taken as the largest root
/// multiplicity of the pencil polynomial. L is similar to a symmetric
/// matrix, so algebraic and geometric multiplicities agree.
/// Throws IsolatedVertex.
int max_nl_multiplicity(const Graph& g);

/// True iff k * alpha is an eigenvalue of L with multiplicity at least
/// max(1, k - 1). Throws IsolatedVertex.
bool check_fat_spectral(const Graph& g, int k, const Rational& alpha);

/// f_ij: +1 on class i, -1 on class j, 0 elsewhere.
VertexFunction class_difference_function(const Coloring& c, int i, int j);

/// (L f)(v) for every v, exact.
VertexFunction apply_normalized_laplacian(const Graph& g, const VertexFunction& f);

/// Checks L f_ij = (k alpha) f_ij at every vertex. Throws IsolatedVertex,
/// InvalidParams if i == j or a class is out of range.
bool eigenfunction_check(const Graph& g, const FatColoring& fc, int i, int j);

struct RegularShadow {
    BigRational kirchhoff_eigenvalue; // d k alpha
    BigRational adjacency_eigenvalue; // d (1 - k alpha)
    std::size_t kirchhoff_multiplicity = 0;
    std::size_t adjacency_multiplicity = 0;
    std::size_t required = 0; // max(1, k - 1)

    bool holds() const { return kirchhoff_multiplicity >= required && adjacency_multiplicity >= required; }
};

/// Translates lambda = k alpha to K and A on a d-regular graph and
/// measures both multiplicities exactly. Throws NotRegular.
RegularShadow regular_shadow(const Graph& g, int k, const Rational& alpha);

/// Kernel dimension of value * I - M.
std::size_t eigenvalue_multiplicity(const RationalMatrix& m, const BigRational& value);

} // namespace fatcolor
