#ifndef STREAMSAMP_NUMERIC_HPP
#define STREAMSAMP_NUMERIC_HPP

#include <cmath>
#include <stdexcept>

namespace streamsamp {

/// Absolute tolerance for deciding whether a cumulative sum sits on a
/// window boundary. Cross-border classification must stay stable over
/// streams of millions of units, so boundary tests are snapped.
inline constexpr double kBoundaryEps = 1e-9;

/// Absolute tolerance for snapping inclusion probabilities to the
/// endpoints 0 and 1.
inline constexpr double kProbEps = 1e-12;

/// Branches with path probability below this are pruned during exact
/// enumeration; the pruned mass is tracked, never silently dropped.
inline constexpr double kPruneEps = 1e-15;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when accumulated floating-point state becomes inconsistent
/// (e.g. a selection counter outside the window bounds). Loud by design.
struct NumericDriftError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Neumaier-compensated accumulator. Keeps cumulative sums of inclusion
/// probabilities accurate over very long streams.
class KahanSum {
public:
    KahanSum() = default;
    explicit KahanSum(double initial) : sum_(initial) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline bool near_integer(double f) {
    return std::abs(f - std::round(f)) <= kBoundaryEps;
}

/// floor with boundary snapping: values within kBoundaryEps of an
/// integer are treated as that integer.
inline double snapped_floor(double f) {
    return near_integer(f) ? std::round(f) : std::floor(f);
}

/// F - floor(F), snapped to exactly 0 when F sits on an integer
/// within kBoundaryEps.
inline double fractional_part(double f) {
    if (near_integer(f)) return 0.0;
    return f - std::floor(f);
}

/// Snap a probability to {0,1} when within kProbEps of an endpoint;
/// reject values outside [0,1] beyond that tolerance.
inline double snap_probability(double pi) {
    if (std::abs(pi) <= kProbEps) return 0.0;
    if (std::abs(pi - 1.0) <= kProbEps) return 1.0;
    if (pi < 0.0 || pi > 1.0) {
        throw InputError("inclusion probability outside [0,1]");
    }
    return pi;
}

} // namespace streamsamp

#endif // STREAMSAMP_NUMERIC_HPP
