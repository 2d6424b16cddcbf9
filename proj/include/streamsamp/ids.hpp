#ifndef STREAMSAMP_IDS_HPP
#define STREAMSAMP_IDS_HPP

#include <cstdint>
#include <vector>

#include "streamsamp/core.hpp"

namespace streamsamp {

enum class EmitMode { decisions_only, selected_only };

/// Full breakdown of one acceptance-threshold evaluation. The threshold
/// is a deterministic function of (F, n, pi); the uniform draw happens
/// elsewhere.
struct ThresholdBreakdown {
    double threshold = 0.0;
    int alpha = 0;  ///< cross-border indicator, must be 0 or 1
    int beta = 0;   ///< window deficit, must be 0, 1 or 2
    double m = 0.0; ///< fractional window position before the unit
    long window = 1;
    bool cross_border = false;
};

/// Single-condition acceptance threshold for a unit with probability pi
/// observed at cumulative mass f_prev with n selections made so far.
/// Throws NumericDriftError when the derived integers fall outside their
/// provable ranges, which converts silent float corruption into a loud
/// failure.
ThresholdBreakdown single_condition_threshold(double f_prev, long n, double pi);

/// The same threshold by explicit case analysis (non-cross/cross unit,
/// window already served or not). Kept as an independent implementation
/// so the two routes can be cross-validated; bit-identical results are
/// expected for matching inputs.
double four_case_threshold(double f_prev, long n, double pi_j,
                           bool cross_border, long window);

/// One-pass sampler: decides each unit immediately upon observation,
/// keeping only (F, n, rng) as state.
class IdsSampler {
public:
    explicit IdsSampler(std::uint64_t seed, EmitMode mode = EmitMode::decisions_only)
        : state_(seed), mode_(mode) {}
    explicit IdsSampler(Rng rng, EmitMode mode = EmitMode::decisions_only)
        : state_(rng), mode_(mode) {}

    /// Decide on one unit. Exactly one uniform is consumed per call,
    /// even when the threshold is 0 or 1, so the decision sequence is a
    /// pure function of (seed, prefix of units).
    Decision observe(const UnitRecord& unit);

    const StreamState& state() const { return state_; }
    EmitMode emit_mode() const { return mode_; }

private:
    StreamState state_;
    EmitMode mode_;
};

/// Drive a sampler over a whole frame. Decisions are produced in order,
/// each depending only on the prefix observed so far. selected_only mode
/// keeps just the accepted units.
std::vector<Decision> run_stream(const Frame& frame, std::uint64_t seed,
                                 EmitMode mode = EmitMode::decisions_only);

} // namespace streamsamp

#endif // STREAMSAMP_IDS_HPP
