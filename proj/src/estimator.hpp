#ifndef CORTKIT_ESTIMATOR_HPP
#define CORTKIT_ESTIMATOR_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cortkit {

/// Common surface of every copula estimator: pointwise density and d.f.,
/// seeded sampling, the exact L2 geometry needed by the bagging machinery,
/// and pairwise dependence measures.
///
/// Sampling contract: row i of sample(count, seed) is drawn from the
/// substream (seed, i), independent of count and of any other row. Mixture
/// models that delegate row i to a component must hand it the same
/// substream.
class CopulaModel {
public:
    virtual ~CopulaModel() = default;

    virtual std::string kind() const = 0;
    virtual int dim() const = 0;

    virtual double density(std::span<const double> u) const = 0;
    virtual double cdf(std::span<const double> u) const = 0;

    virtual void sample_row(std::uint64_t seed, std::uint64_t row, double* out) const = 0;

    /// Integral of the squared density (the paper's squared-norm convention).
    virtual double l2_norm_sq() const = 0;

    /// ∫ c_this * c_other; defined between models of the same family (and
    /// for anything piecewise-constant against anything piecewise-constant).
    virtual double inner_product(const CopulaModel& other) const = 0;

    /// (kendall tau, spearman rho) of the (i,j) bivariate margin.
    virtual std::pair<double, double> pairwise_measures(int i, int j) const = 0;

    virtual nlohmann::json to_json() const = 0;

    /// Row-major count x dim matrix; see sample_row for the stream contract.
    std::vector<double> sample(int count, std::uint64_t seed) const {
        std::vector<double> out(static_cast<std::size_t>(count) * dim());
        for (int i = 0; i < count; ++i)
            sample_row(seed, static_cast<std::uint64_t>(i), out.data() + static_cast<std::size_t>(i) * dim());
        return out;
    }
};

using ModelPtr = std::shared_ptr<const CopulaModel>;

} // namespace cortkit

#endif
