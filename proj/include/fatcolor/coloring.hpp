#pragma once

#include <compare>
#include <string_view>
#include <variant>
#include <vector>

#include "fatcolor/graph.hpp"
#include "fatcolor/rational.hpp"

namespace fatcolor {

/// Surjective vertex coloring: every class 0..k-1 is nonempty.
class Coloring {
public:
    Coloring() = default;

    /// Throws InvalidParams if a label is outside 0..k-1 or a class is empty.
    Coloring(std::vector<int> assignment, int k);

    /// k is taken as max label + 1.
    static Coloring from_assignment(std::vector<int> assignment);

    /// Inverse of classes(); `n` is the vertex count.
    static Coloring from_classes(int n, const std::vector<std::vector<Vertex>>& classes);

    static Coloring monochromatic(int n) { return Coloring(std::vector<int>(static_cast<std::size_t>(n), 0), 1); }

    int k() const { return k_; }
    int vertex_count() const { return static_cast<int>(assignment_.size()); }
    int operator[](Vertex v) const { return assignment_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& assignment() const { return assignment_; }

    /// Vertices of each class, ascending.
    std::vector<std::vector<Vertex>> classes() const;
    VertexSet class_set(int i) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
    friend auto operator<=>(const Coloring& a, const Coloring& b) { return a.assignment_ <=> b.assignment_; }

private:
    std::vector<int> assignment_;
    int k_ = 0;
};

struct FatColoring {
    Coloring coloring;
    Rational alpha;
    Rational beta;

    int k() const { return coloring.k(); }

    friend bool operator==(const FatColoring&, const FatColoring&) = default;
};

/// Output order used everywhere: k, then alpha, then assignment.
bool canonical_less(const FatColoring& a, const FatColoring& b);

enum class RejectionReason { AlphaInconsistent, CountMismatch, NonIntegerRequirement };

std::string_view to_string(RejectionReason reason);

/// A concrete violated equation e(v, V_i) = expected.
struct Rejection {
    Vertex vertex = 0;
    int cls = 0;
    Rational expected;
    int actual = 0;
    RejectionReason reason = RejectionReason::CountMismatch;
};

using VerifyResult = std::variant<FatColoring, Rejection>;

inline bool accepted(const VerifyResult& r) { return std::holds_alternative<FatColoring>(r); }

/// Checks the coloring against the FAT equations in exact arithmetic.
///
/// k = 1 and colorings of edgeless graphs are accepted with alpha = 0.
/// Otherwise alpha is pinned from the lowest vertex with positive degree and
/// its lowest foreign class, then every (vertex, class) equation is checked
/// in vertex order; the first violation is returned.
VerifyResult verify_fat(const Graph& g, const Coloring& c);

/// Merges the classes of `fc` according to `grouping`, a partition of
/// 0..k-1 into groups of equal size; group j becomes class j.
///
/// With l groups the result has alpha' = (k/l) alpha and
/// beta' = beta + (k/l - 1) alpha (l = 1 gives the trivial coloring). The
/// result is re-verified and must reproduce those parameters.
/// Throws NotAPartition or UnequalGroups.
FatColoring merge(const Graph& g, const FatColoring& fc, const std::vector<std::vector<int>>& grouping);

/// True iff every class of `coarse` is a union of classes of `fine`.
bool is_coarser(const Coloring& coarse, const Coloring& fine);

/// Renumbers classes by ascending minimum vertex.
Coloring canonicalize(const Coloring& c);

FatColoring canonicalize(const FatColoring& fc);

inline bool is_proper(const FatColoring& fc) { return fc.beta.is_zero(); }

} // namespace fatcolor
