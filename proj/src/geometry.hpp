#ifndef CORTKIT_GEOMETRY_HPP
#define CORTKIT_GEOMETRY_HPP

#include <optional>
#include <span>
#include <vector>

namespace cortkit {

/// Half-open hyper-rectangle (lower, upper] inside the unit cube.
/// Every side has strictly positive length. Membership treats the global
/// lower boundary 0 as included, so partitions of the cube have no
/// orphan points on the zero faces.
struct Box {
    std::vector<double> lower;
    std::vector<double> upper;

    Box() = default;
    Box(std::vector<double> lo, std::vector<double> hi);

    static Box unit_cube(int dim);

    int dim() const { return static_cast<int>(lower.size()); }
    double volume() const;
    double side(int i) const { return upper[i] - lower[i]; }

    bool contains(std::span<const double> u) const;

    /// lambda(box)^-1 * lambda([0,u] ∩ box): the box's share of the lower
    /// orthant at u, in [0,1].
    double lambda_ratio(std::span<const double> u) const;

    /// Same ratio for the single marginal interval of dimension i.
    double lambda_ratio_1d(int i, double u) const;

    std::vector<double> midpoint() const;

    /// Rectangle spanned by a subset of dimensions, in that order.
    Box project(std::span<const int> dims) const;

    bool operator==(const Box&) const = default;
};

/// Componentwise intersection; empty when any side collapses.
std::optional<Box> intersect(const Box& x, const Box& y);

/// G(a,b,c,d) = ∫_a^b lambda([0,u] ∩ [c,d]) du with every sub-range
/// clamped to be non-crossing, so disjoint intervals contribute 0 instead
/// of going negative. Requires 0 <= a < b <= 1 and 0 <= c < d <= 1.
double g_integral(double a, double b, double c, double d);

/// The 2^|dims| children of a simple split of `box` at breakpoint `x` on
/// `dims`. Child k takes the upper half in dims[j] iff bit j of k is set;
/// dimensions outside `dims` keep their full extent. x must be strictly
/// interior to the box in every split dimension.
std::vector<Box> simple_split(const Box& box, std::span<const double> x,
                              std::span<const int> dims);

/// A finite collection of disjoint boxes tiling the unit cube.
struct Partition {
    std::vector<Box> boxes;
    int dim = 0;

    Partition() = default;
    Partition(std::vector<Box> bs, int d) : boxes(std::move(bs)), dim(d) {}

    std::size_t size() const { return boxes.size(); }

    /// Index of the leaf containing u (linear scan). Throws if no leaf
    /// contains the point, which only happens for malformed partitions.
    std::size_t leaf_index(std::span<const double> u) const;

    /// Tiling check: volumes sum to 1 within tol and boxes are pairwise
    /// disjoint. O(|L|^2); intended for construction-time validation and
    /// tests, not hot paths.
    bool is_suitable(double tol = 1e-12) const;
};

} // namespace cortkit

#endif
