#include "streamsamp/ids.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace streamsamp {

namespace {

[[noreturn]] void drift(const std::string& what, double f_prev, long n, double pi) {
    throw NumericDriftError(what + " (F=" + std::to_string(f_prev) +
                            ", n=" + std::to_string(n) + ", pi=" + std::to_string(pi) + ")");
}

// Clamp a threshold into [0,1]. Overshoot beyond what boundary snapping
// can explain indicates corrupted state.
double clamp_threshold(double t, double den, double f_prev, long n, double pi) {
    if (t > 1.0) {
        if ((t - 1.0) * den > 1e-8) drift("acceptance threshold above 1", f_prev, n, pi);
        return 1.0;
    }
    if (t < 0.0) {
        if (-t * den > 1e-8) drift("acceptance threshold below 0", f_prev, n, pi);
        return 0.0;
    }
    return t;
}

} // namespace

ThresholdBreakdown single_condition_threshold(double f_prev, long n, double pi) {
    ThresholdBreakdown out;
    const StepClassification step = classify_step(f_prev, pi);
    out.m = step.m;
    out.window = step.window;
    out.cross_border = step.cross_border;

    // alpha = ceil(F) - floor(F1) - 1 and beta = ceil(F) - n, with the
    // ceiling taken relative to the snapped floor of F1 so that both
    // snaps stay consistent near a boundary.
    out.alpha = step.cross_border ? 1 : 0;
    const long ceil_f = (step.window - 1) + 1 + out.alpha;
    const long beta_l = ceil_f - n;
    if (beta_l < 0 || beta_l > 2) {
        drift("window deficit beta=" + std::to_string(beta_l) + " outside {0,1,2}",
              f_prev, n, pi);
    }
    out.beta = static_cast<int>(beta_l);

    const double alpha = static_cast<double>(out.alpha);
    const double beta = static_cast<double>(out.beta);
    const double num = pi - alpha * (2.0 - beta) * (1.0 - out.m);
    const double den = (1.0 - alpha) * (1.0 - out.m) +
                       alpha * ((2.0 - beta) * out.m + pi * (beta - 1.0));
    if (!(den > kProbEps)) {
        drift("degenerate threshold denominator " + std::to_string(den), f_prev, n, pi);
    }
    const double t = std::min(beta, 1.0) * (num / den);
    out.threshold = clamp_threshold(t, den, f_prev, n, pi);
    // A non-cross unit whose mass reaches the boundary (within snapping
    // tolerance) closes the window; if the window is still unserved the
    // selection is certain, so make it exact.
    if (!step.cross_border && out.beta >= 1 && step.m + pi >= 1.0 - kBoundaryEps) {
        out.threshold = 1.0;
    }
    return out;
}

double four_case_threshold(double f_prev, long n, double pi_j,
                           bool cross_border, long window) {
    if (f_prev < 0.0) throw InputError("cumulative mass must be nonnegative");
    const double pi = snap_probability(pi_j);
    const StepClassification step = classify_step(f_prev, pi);
    if (window != step.window) {
        throw InputError("window index " + std::to_string(window) +
                         " inconsistent with cumulative mass (expected " +
                         std::to_string(step.window) + ")");
    }
    if (cross_border != step.cross_border) {
        throw InputError("cross-border flag inconsistent with cumulative mass");
    }
    if (n > window) {
        throw InputError("selection count " + std::to_string(n) +
                         " ahead of window " + std::to_string(window));
    }
    const double m = step.m;

    if (!cross_border) {
        if (n < window) {
            // I.1: window still owes a selection
            if (m + pi >= 1.0 - kBoundaryEps) return 1.0; // closes the window
            const double t = pi / (1.0 - m);
            return clamp_threshold(t, 1.0 - m, f_prev, n, pi);
        }
        return 0.0; // I.2: window already served
    }
    if (n < window) return 1.0; // II.1: the split closes an unserved window
    if (m == 0.0) {
        // II.2 with m = 0 would require pi > 1; unreachable for valid input.
        throw InputError("cross-border unit with zero fractional position");
    }
    const double t = (pi - (1.0 - m)) / m; // II.2: competes for the next window
    return clamp_threshold(t, m, f_prev, n, pi);
}

Decision IdsSampler::observe(const UnitRecord& unit) {
    Decision d;
    d.unit_id = unit.id;
    d.u = state_.rng.next_unit();

    const double pi = snap_probability(unit.pi);
    const double f_prev = state_.F();

    if (pi == 0.0) {
        // pass-through: never selected, no mass added
        const StepClassification step = classify_step(f_prev, pi);
        d.threshold = 0.0;
        d.selected = false;
        d.window = step.window;
        d.cross_border = false;
        ++state_.units_seen;
        return d;
    }

    const ThresholdBreakdown t = single_condition_threshold(f_prev, state_.n, pi);
    d.threshold = t.threshold;
    d.window = t.window;
    d.cross_border = t.cross_border;
    d.selected = d.u <= d.threshold;

    state_.mass.add(pi);
    if (d.selected) ++state_.n;
    ++state_.units_seen;

    // every completed window holds exactly one selection, so n must sit
    // between the snapped floor and ceiling of F
    const double f_cur = state_.F();
    const double lo = snapped_floor(f_cur);
    const double hi = fractional_part(f_cur) == 0.0 ? lo : lo + 1.0;
    if (state_.n < static_cast<long>(lo) || state_.n > static_cast<long>(hi)) {
        drift("selection count " + std::to_string(state_.n) +
                  " outside window bounds [" + std::to_string(lo) + "," +
                  std::to_string(hi) + "]",
              f_prev, state_.n, pi);
    }
    return d;
}

std::vector<Decision> run_stream(const Frame& frame, std::uint64_t seed, EmitMode mode) {
    IdsSampler sampler(seed, mode);
    std::vector<Decision> decisions;
    decisions.reserve(mode == EmitMode::decisions_only ? frame.size() : 16);
    for (std::size_t j = 0; j < frame.size(); ++j) {
        const auto context = [&](const char* what) {
            return "unit '" + frame.unit(j).id + "' at position " +
                   std::to_string(j + 1) + ": " + what;
        };
        try {
            Decision d = sampler.observe(frame.unit(j));
            if (mode == EmitMode::decisions_only || d.selected) {
                decisions.push_back(std::move(d));
            }
        } catch (const NumericDriftError& e) {
            throw NumericDriftError(context(e.what()));
        } catch (const InputError& e) {
            throw InputError(context(e.what()));
        }
    }
    return decisions;
}

} // namespace streamsamp
