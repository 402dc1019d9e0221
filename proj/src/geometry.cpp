#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cortkit {

Box::Box(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size()) throw std::invalid_argument("Box: dimension mismatch");
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!(lower[i] < upper[i]))
            throw std::invalid_argument("Box: lower must be strictly below upper");
        if (lower[i] < 0.0 || upper[i] > 1.0)
            throw std::invalid_argument("Box: coordinates must lie in [0,1]");
    }
}

Box Box::unit_cube(int dim) {
    return Box(std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0));
}

double Box::volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i];
    return v;
}

bool Box::contains(std::span<const double> u) const {
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (u[i] > upper[i]) return false;
        if (u[i] <= lower[i] && lower[i] > 0.0) return false;
        if (u[i] < lower[i]) return false; // lower == 0: closed below
    }
    return true;
}

double Box::lambda_ratio(std::span<const double> u) const {
    double r = 1.0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        double w = upper[i] - lower[i];
        double c = std::clamp(u[i] - lower[i], 0.0, w);
        r *= c / w;
        if (r == 0.0) return 0.0;
    }
    return r;
}

double Box::lambda_ratio_1d(int i, double u) const {
    double w = upper[i] - lower[i];
    return std::clamp(u - lower[i], 0.0, w) / w;
}

std::vector<double> Box::midpoint() const {
    std::vector<double> m(lower.size());
    for (std::size_t i = 0; i < lower.size(); ++i) m[i] = 0.5 * (lower[i] + upper[i]);
    return m;
}

Box Box::project(std::span<const int> dims) const {
    std::vector<double> lo, hi;
    lo.reserve(dims.size());
    hi.reserve(dims.size());
    for (int d : dims) {
        lo.push_back(lower[d]);
        hi.push_back(upper[d]);
    }
    return Box(std::move(lo), std::move(hi));
}

std::optional<Box> intersect(const Box& x, const Box& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("intersect: dimension mismatch");
    std::vector<double> lo(x.lower.size()), hi(x.lower.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] = std::max(x.lower[i], y.lower[i]);
        hi[i] = std::min(x.upper[i], y.upper[i]);
        if (!(lo[i] < hi[i])) return std::nullopt;
    }
    return Box(std::move(lo), std::move(hi));
}

double g_integral(double a, double b, double c, double d) {
    if (!(0.0 <= a && a < b && b <= 1.0) || !(0.0 <= c && c < d && d <= 1.0))
        throw std::invalid_argument("g_integral: need 0 <= a < b <= 1 and 0 <= c < d <= 1");
    double r = 0.0;
    // ramp part: integrand u - c on (a,b) ∩ (c,d)
    double lo = std::max(a, c), hi = std::min(b, d);
    if (lo < hi) r += 0.5 * (hi * hi - lo * lo) - c * (hi - lo);
    // saturated part: integrand d - c on (a,b) ∩ (d,1)
    double lo2 = std::max(a, d);
    if (lo2 < b) r += (d - c) * (b - lo2);
    return r;
}

std::vector<Box> simple_split(const Box& box, std::span<const double> x,
                              std::span<const int> dims) {
    if (dims.empty()) throw std::invalid_argument("simple_split: empty dimension set");
    for (int j : dims) {
        if (!(box.lower[j] < x[j] && x[j] < box.upper[j]))
            throw std::invalid_argument(
                "simple_split: breakpoint must be strictly interior in every split dimension");
    }
    const std::size_t n = std::size_t{1} << dims.size();
    std::vector<Box> children;
    children.reserve(n);
    for (std::size_t mask = 0; mask < n; ++mask) {
        std::vector<double> lo = box.lower, hi = box.upper;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            int j = dims[k];
            if (mask & (std::size_t{1} << k))
                lo[j] = x[j];
            else
                hi[j] = x[j];
        }
        children.emplace_back(std::move(lo), std::move(hi));
    }
    return children;
}

std::size_t Partition::leaf_index(std::span<const double> u) const {
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (boxes[i].contains(u)) return i;
    throw std::runtime_error("Partition: point not covered by any leaf");
}

bool Partition::is_suitable(double tol) const {
    double total = 0.0;
    for (const auto& b : boxes) {
        if (b.dim() != dim) return false;
        total += b.volume();
    }
    if (std::abs(total - 1.0) > tol) return false;
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (intersect(boxes[i], boxes[j])) return false;
    return true;
}

} // namespace cortkit
