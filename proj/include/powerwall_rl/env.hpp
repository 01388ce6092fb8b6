#pragma once

#include <array>
#include <span>

#include "powerwall_rl/timeseries.hpp"

namespace powerwall_rl {

/// Discrete battery actions. Index order is the evaluation tie-break order.
enum class Action : int { Charge = 0, Discharge = 1, Idle = 2 };
inline constexpr int kNumActions = 3;

/// Battery physics constants and observation normalization.
struct EnvConfig {
    double capacity_kwh = 13.5;   // Tesla Powerwall 2.0
    double rate_kw = 5.0;         // charge/discharge limit over one hour
    double soc_min_frac = 0.15;
    double soc_max_frac = 0.85;
    double penalty_value = 15.0;  // magnitude charged on illegal actions
    int soc_bins = 11;            // observed SOC levels 0..10

    // Normalization maxima for encode_observation.
    double obs_load_max_kwh = 80.0;
    double obs_pv_max_kwh = 20.0;

    double soc_min_kwh() const { return soc_min_frac * capacity_kwh; }
    double soc_max_kwh() const { return soc_max_frac * capacity_kwh; }
};

/// MDP observation: hour of day, battery charge, current exogenous demand
/// and generation. soc_kwh is the continuous internal level; soc_bin the
/// discretized value exposed to agents.
struct EnvState {
    int hour = 0;           // [0, 23]
    double soc_kwh = 0.0;
    int soc_bin = 0;        // round(soc_kwh / capacity * 10)
    double load_kwh = 0.0;
    double pv_kwh = 0.0;
};

struct StepResult {
    EnvState next_state;
    double reward = 0.0;           // -import*price - penalty if applied
    double grid_import_kwh = 0.0;  // >= 0
    bool penalty_applied = false;
    bool done = false;             // set by FarmEnv at window end
};

/// Discretize stored energy to the 0..10 scale, ties rounding half up.
/// Throws EnvError::OutOfRange outside [0, capacity].
int soc_to_bin(double soc_kwh, double capacity_kwh);

/// State at the first hour of a window with the given initial charge.
/// initial_soc_frac must lie within [soc_min_frac, soc_max_frac].
EnvState reset_state(std::span<const HourlyRecord> window, double initial_soc_frac,
                     const EnvConfig& config);

/// One hour of battery dynamics. Pure function of its arguments: charging is
/// capped by headroom to the upper band, discharging by the lower band and
/// by residual demand, and actions attempted past a band boundary execute as
/// Idle plus the penalty. next_state carries the advanced hour and SOC; its
/// load/pv fields are zero until the caller fills in the next record.
StepResult step(const EnvState& state, Action action, const HourlyRecord& record,
                const EnvConfig& config);

/// Network input features: hour/23, soc_bin/10, load and pv over their
/// configured maxima.
std::array<double, 4> encode_observation(const EnvState& state, const EnvConfig& config);

/// Throws EnvError::InvalidState if the state breaks an invariant.
void validate_state(const EnvState& state, const EnvConfig& config);

/// Steps a window of hourly records as one episode.
class FarmEnv {
public:
    FarmEnv(std::span<const HourlyRecord> window, const EnvConfig& config);

    /// Start a new episode. Throws on empty window or out-of-band SOC.
    EnvState reset(double initial_soc_frac);

    /// Apply an action at the current hour; done is set when the window is
    /// exhausted.
    StepResult step(Action action);

    const EnvState& state() const { return state_; }
    const HourlyRecord& current_record() const { return window_[cursor_]; }
    const EnvConfig& config() const { return config_; }
    bool done() const { return done_; }
    std::size_t steps_taken() const { return cursor_; }
    std::size_t window_size() const { return window_.size(); }

private:
    std::span<const HourlyRecord> window_;
    EnvConfig config_;
    std::size_t cursor_ = 0;
    EnvState state_{};
    bool done_ = true;
};

}  // namespace powerwall_rl
