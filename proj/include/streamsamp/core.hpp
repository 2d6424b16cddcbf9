#ifndef STREAMSAMP_CORE_HPP
#define STREAMSAMP_CORE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "streamsamp/numeric.hpp"
#include "streamsamp/rng.hpp"

namespace streamsamp {

/// One population/stream unit: opaque identifier, first-order inclusion
/// probability, optional study variable.
struct UnitRecord {
    std::string id;
    double pi = 0.0;
    std::optional<double> y;
};

/// An ordered, immutable population frame. Order is part of the design:
/// two frames with the same units in different order define different
/// sampling designs.
class Frame {
public:
    /// Validates ids (nonempty, unique), snaps probabilities to [0,1]
    /// endpoints within kProbEps and rejects values outside the range.
    static Frame from_units(std::vector<UnitRecord> units);

    const std::vector<UnitRecord>& units() const { return units_; }
    const UnitRecord& unit(std::size_t i) const { return units_[i]; }
    std::size_t size() const { return units_.size(); }

    /// Compensated sum of all inclusion probabilities.
    double total() const { return total_; }

    /// Index of a unit by id; throws InputError for unknown ids.
    std::size_t index_of(const std::string& id) const;

private:
    Frame() = default;

    std::vector<UnitRecord> units_;
    std::unordered_map<std::string, std::size_t> index_;
    double total_ = 0.0;
};

/// The sampler's constant-size cursor: cumulative probability mass seen,
/// number of selections, and the generator state. This is all the memory
/// the streaming sampler ever needs.
struct StreamState {
    KahanSum mass;
    long n = 0;
    long units_seen = 0;
    Rng rng;

    explicit StreamState(std::uint64_t seed) : rng(seed) {}
    explicit StreamState(Rng generator) : rng(generator) {}

    double F() const { return mass.value(); }
};

/// Immediate verdict for one observed unit.
struct Decision {
    std::string unit_id;
    bool selected = false;
    double threshold = 0.0; ///< conditional acceptance probability applied
    double u = 0.0;         ///< the uniform draw (selected == (u <= threshold))
    long window = 1;        ///< 1-based window index of the unit's leading mass
    bool cross_border = false;
};

/// Per-step geometry of a unit against the window grid, derived purely
/// from the cumulative mass before the unit and its probability.
struct StepClassification {
    double m = 0.0;    ///< fractional window position before the unit
    long window = 1;   ///< 1-based index of the window the unit starts in
    bool cross_border = false;
};

/// Shared classification rule: a unit is cross-border iff its mass
/// strictly straddles a window boundary (by more than kBoundaryEps).
/// A unit landing exactly on a boundary closes its window instead.
StepClassification classify_step(double f_prev, double pi);

/// One size-one window of a frame decomposition. Unit indices are
/// 0-based positions in the frame; [begin, end) covers the units whose
/// mass starts inside this window.
struct Window {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::optional<std::size_t> cross_index; ///< unit split across the far boundary
    double pi_v1 = 0.0; ///< split mass inside this window
    double pi_v2 = 0.0; ///< split mass carried into the next window
};

/// Batch decomposition of a frame into windows of total mass one.
struct WindowLayout {
    std::vector<Window> windows;
    std::vector<double> cumulative;   ///< F_j after each unit, compensated
    std::vector<long> unit_window;    ///< 1-based home window per unit
    std::vector<bool> unit_cross;     ///< cross-border flag per unit
    double phantom_mass = 0.0;        ///< closes the final window when total is non-integer

    std::size_t window_count() const { return windows.size(); }
    bool is_cross(std::size_t unit) const { return unit_cross[unit]; }
    long window_of(std::size_t unit) const { return unit_window[unit]; }

    /// Split mass carried into window ell (1-based) from the previous
    /// window's cross-border unit; 0 for the first window.
    double carried_in(std::size_t ell) const {
        if (ell <= 1) return 0.0;
        return windows[ell - 2].pi_v2;
    }
};

/// Decompose a frame into size-one windows with cross-border splits and
/// (for non-integer totals) a phantom completion of the last window.
WindowLayout build_window_layout(const Frame& frame);

/// Scale a positive size variable to inclusion probabilities that sum to
/// target_n, capping at 1 and redistributing over uncapped units until a
/// fixed point. CLI plumbing for pi-proportional-to-size preparation.
std::vector<double> proportional_probabilities(const std::vector<double>& size_var,
                                               long target_n);

} // namespace streamsamp

#endif // STREAMSAMP_CORE_HPP
