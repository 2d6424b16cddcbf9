#include "streamsamp/deville.hpp"

#include <algorithm>
#include <cmath>

namespace streamsamp {

double WindowDensity::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return integral();
    if (x < break_point) return low_value * x;
    return low_value * break_point + high_value * (x - break_point);
}

double WindowDensity::inverse_cdf(double p) const {
    const double low_mass = low_value * break_point;
    double x;
    if (p < low_mass) {
        x = p / low_value;
    } else {
        if (!(high_value > 0.0)) {
            throw NumericDriftError("inverse CDF beyond the support of a window density");
        }
        x = break_point + (p - low_mass) / high_value;
    }
    // keep the draw inside [0,1)
    return std::clamp(x, 0.0, 1.0 - 0x1.0p-53);
}

WindowDensity build_window_density(double f_prev_cross, double f_cross,
                                   bool prev_selected) {
    const double m_prev = fractional_part(f_prev_cross);
    const double a = m_prev == 0.0 ? 0.0 : 1.0 - m_prev; // mass before the boundary
    const double b = fractional_part(f_cross);           // mass carried past it

    WindowDensity d;
    d.kind = prev_selected ? DensityKind::selected_branch : DensityKind::not_selected_branch;
    if (b == 0.0) {
        // no unit straddles the boundary: both branches are uniform
        d.break_point = 0.0;
        d.low_value = 1.0;
        d.high_value = 1.0;
        return d;
    }
    d.break_point = b;
    if (prev_selected) {
        // the carried part may not be selected again
        d.low_value = 0.0;
        d.high_value = 1.0 / (1.0 - b);
    } else {
        d.low_value = 1.0 / (1.0 - a);
        d.high_value = 1.0 - (a * b) / ((1.0 - a) * (1.0 - b));
    }
    return d;
}

namespace {

WindowDensity density_for_window(const WindowLayout& layout, const Frame& frame,
                                 std::size_t ell, bool prev_selected) {
    if (ell == 1) return WindowDensity{};
    const Window& prev = layout.windows[ell - 2];
    if (!prev.cross_index) return WindowDensity{}; // exact boundary: uniform
    const std::size_t v = *prev.cross_index;
    const double f_prev = v == 0 ? 0.0 : layout.cumulative[v - 1];
    (void)frame;
    return build_window_density(f_prev, layout.cumulative[v], prev_selected);
}

} // namespace

std::vector<std::size_t> deville_sample_indices(const Frame& frame,
                                                const WindowLayout& layout, Rng rng,
                                                DevilleOptions options) {
    if (layout.phantom_mass > 0.0 && !options.allow_phantom) {
        throw InputError("frame total " + std::to_string(frame.total()) +
                         " is not an integer; enable phantom completion or adjust the frame");
    }

    const std::size_t window_count = layout.window_count();
    const auto& cum = layout.cumulative;
    std::vector<std::size_t> picked;
    picked.reserve(window_count);

    bool prev_cross_selected = false;
    for (std::size_t ell = 1; ell <= window_count; ++ell) {
        const WindowDensity density =
            density_for_window(layout, frame, ell, prev_cross_selected);
        const double x = density.inverse_cdf(rng.next_unit_co());
        const double g = x + static_cast<double>(ell - 1);

        // unit j with F_{j-1} <= g < F_j; past the last cumulative sum the
        // draw fell into the phantom and selects nothing
        const auto it = std::upper_bound(cum.begin(), cum.end(), g);
        std::size_t index;
        if (it == cum.end()) {
            if (layout.phantom_mass > 0.0 && ell == window_count) {
                prev_cross_selected = false;
                continue;
            }
            index = frame.size() - 1; // integer total: rounding pushed g past F_N
        } else {
            index = static_cast<std::size_t>(it - cum.begin());
        }
        picked.push_back(index);
        prev_cross_selected = layout.windows[ell - 1].cross_index &&
                              *layout.windows[ell - 1].cross_index == index;
    }

    return picked;
}

std::vector<std::string> deville_sample(const Frame& frame, std::uint64_t seed,
                                        DevilleOptions options) {
    const WindowLayout layout = build_window_layout(frame);
    const auto indices = deville_sample_indices(frame, layout, Rng(seed), options);
    std::vector<std::string> ids;
    ids.reserve(indices.size());
    for (std::size_t i : indices) ids.push_back(frame.unit(i).id);
    return ids;
}

} // namespace streamsamp
