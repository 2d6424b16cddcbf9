#ifndef STREAMSAMP_JOINT_HPP
#define STREAMSAMP_JOINT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "streamsamp/core.hpp"

namespace streamsamp {

/// Per-boundary dependence coefficients of the design. c[r] (0-based
/// boundary after window r+1) is
///   pi_v1 * pi_v2 / ((1 - pi_v1)(1 - pi_v2))
/// for the cross-border unit split at that boundary, and 0 when the
/// boundary is hit exactly. Dependence between windows l and l' decays
/// as the product of the coefficients of the boundaries between them.
struct CrossBorderChain {
    std::vector<double> c;

    static CrossBorderChain from_layout(const WindowLayout& layout);

    /// Product of c over boundaries separating windows l and l''
    /// (1-based, l <= l'); equals 1 when l == l'.
    double product(long l, long l_prime) const;
};

/// Symmetric matrix of second-order inclusion probabilities; diagonal
/// holds the first-order probabilities.
struct JointMatrix {
    std::vector<std::string> ids;
    std::vector<double> values; // row-major, n x n

    std::size_t size() const { return ids.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i * size() + j]; }
};

/// Closed-form joint inclusion probability of two distinct units under
/// the size-one-window design.
double joint_probability(const WindowLayout& layout, const Frame& frame,
                         std::size_t j, std::size_t j_prime);

JointMatrix joint_matrix(const Frame& frame);

} // namespace streamsamp

#endif // STREAMSAMP_JOINT_HPP
