#ifndef STREAMSAMP_DEVILLE_HPP
#define STREAMSAMP_DEVILLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "streamsamp/core.hpp"

namespace streamsamp {

enum class DensityKind { first_window, selected_branch, not_selected_branch };

/// Piecewise-constant draw density for one window: low_value on
/// [0, break_point), high_value on [break_point, 1). Integrates to 1.
struct WindowDensity {
    DensityKind kind = DensityKind::first_window;
    double break_point = 0.0;
    double low_value = 1.0;
    double high_value = 1.0;

    double integral() const {
        return break_point * low_value + (1.0 - break_point) * high_value;
    }

    double cdf(double x) const;

    /// Exact inverse-CDF transform of p in [0,1); two linear pieces,
    /// no rejection.
    double inverse_cdf(double p) const;
};

/// Density for the window following the cross-border unit with
/// cumulative sums (f_prev_cross, f_cross), branching on whether that
/// unit was selected in the previous window. A degenerate break point
/// (boundary hit exactly) collapses both branches to the uniform
/// density.
WindowDensity build_window_density(double f_prev_cross, double f_cross,
                                   bool prev_selected);

struct DevilleOptions {
    /// Accept non-integer totals by completing the last window with
    /// phantom mass; a draw landing in the phantom selects no real unit.
    bool allow_phantom = false;
};

/// Systematic batch selection: one draw per window, each window's
/// density conditioned on the fate of the previous cross-border unit.
/// Requires the full frame up front; the streaming sampler is the
/// one-pass counterpart with the same design. Returns selected unit ids
/// in frame order.
std::vector<std::string> deville_sample(const Frame& frame, std::uint64_t seed,
                                        DevilleOptions options = {});

/// Index-level variant used by the oracle and the Monte Carlo harness.
std::vector<std::size_t> deville_sample_indices(const Frame& frame,
                                                const WindowLayout& layout, Rng rng,
                                                DevilleOptions options = {});

} // namespace streamsamp

#endif // STREAMSAMP_DEVILLE_HPP
