#include "streamsamp/core.hpp"

#include <cmath>
#include <unordered_set>

namespace streamsamp {

Frame Frame::from_units(std::vector<UnitRecord> units) {
    Frame frame;
    frame.units_ = std::move(units);
    frame.index_.reserve(frame.units_.size());

    KahanSum total;
    for (std::size_t i = 0; i < frame.units_.size(); ++i) {
        auto& u = frame.units_[i];
        if (u.id.empty()) {
            throw InputError("unit at position " + std::to_string(i + 1) + " has an empty id");
        }
        try {
            u.pi = snap_probability(u.pi);
        } catch (const InputError&) {
            throw InputError("unit '" + u.id + "': inclusion probability " +
                             std::to_string(u.pi) + " outside [0,1]");
        }
        if (!frame.index_.emplace(u.id, i).second) {
            throw InputError("duplicate unit id '" + u.id + "'");
        }
        total.add(u.pi);
    }
    frame.total_ = total.value();
    return frame;
}

std::size_t Frame::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown unit id '" + id + "'");
    return it->second;
}

StepClassification classify_step(double f_prev, double pi) {
    StepClassification step;
    step.m = fractional_part(f_prev);
    step.window = static_cast<long>(snapped_floor(f_prev)) + 1;
    // m == 0 means the unit starts on a boundary; with pi <= 1 it can
    // never straddle the next one.
    step.cross_border = step.m > 0.0 && step.m + pi > 1.0 + kBoundaryEps;
    return step;
}

WindowLayout build_window_layout(const Frame& frame) {
    if (frame.size() == 0) throw InputError("cannot build a window layout for an empty frame");

    WindowLayout layout;
    const std::size_t n = frame.size();
    layout.cumulative.reserve(n);
    layout.unit_window.reserve(n);
    layout.unit_cross.reserve(n);

    KahanSum acc;
    Window current;
    current.begin = 0;
    bool window_open = false;

    auto close_window = [&](std::size_t next_begin) {
        current.end = next_begin;
        layout.windows.push_back(current);
        current = Window{};
        current.begin = next_begin;
        window_open = false;
    };

    for (std::size_t j = 0; j < n; ++j) {
        const double pi = frame.unit(j).pi;
        const double f_prev = acc.value();
        const StepClassification step = classify_step(f_prev, pi);
        acc.add(pi);
        const double f_cur = acc.value();
        layout.cumulative.push_back(f_cur);
        layout.unit_window.push_back(step.window);
        layout.unit_cross.push_back(step.cross_border);
        window_open = window_open || pi > 0.0;

        if (step.cross_border) {
            current.cross_index = j;
            current.pi_v1 = 1.0 - step.m;
            current.pi_v2 = pi - current.pi_v1;
            close_window(j + 1);
            window_open = true; // the carried part opens the next window
        } else if (fractional_part(f_cur) == 0.0 && window_open) {
            // lands exactly on the boundary: closes the window, no split
            close_window(j + 1);
        }
    }

    const double total = acc.value();
    if (window_open) {
        // non-integer total: a phantom completes the final window
        layout.phantom_mass = 1.0 - fractional_part(total);
        close_window(n);
    } else if (!layout.windows.empty()) {
        // trailing zero-probability units join the last window
        layout.windows.back().end = n;
    }

    // cap home windows of trailing zero-mass units to an existing window
    const long count = static_cast<long>(layout.windows.size());
    for (auto& w : layout.unit_window) {
        if (w > count && count > 0) w = count;
    }
    return layout;
}

std::vector<double> proportional_probabilities(const std::vector<double>& size_var,
                                               long target_n) {
    const std::size_t n = size_var.size();
    if (target_n < 0 || static_cast<std::size_t>(target_n) > n) {
        throw InputError("target sample size " + std::to_string(target_n) +
                         " exceeds population size " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(size_var[i] > 0.0) || !std::isfinite(size_var[i])) {
            throw InputError("size variable must be positive and finite (position " +
                             std::to_string(i + 1) + ")");
        }
    }

    std::vector<double> pi(n, 0.0);
    std::vector<bool> capped(n, false);
    long remaining = target_n;

    for (;;) {
        KahanSum open_mass;
        std::size_t open_count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!capped[i]) {
                open_mass.add(size_var[i]);
                ++open_count;
            }
        }
        if (open_count == 0) break;
        if (remaining == 0) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!capped[i]) pi[i] = 0.0;
            }
            break;
        }

        const double scale = static_cast<double>(remaining) / open_mass.value();
        bool newly_capped = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (capped[i]) continue;
            const double p = scale * size_var[i];
            if (p >= 1.0 - kProbEps) {
                pi[i] = 1.0;
                capped[i] = true;
                --remaining;
                newly_capped = true;
            } else {
                pi[i] = p;
            }
        }
        if (!newly_capped) break;
    }
    return pi;
}

} // namespace streamsamp
