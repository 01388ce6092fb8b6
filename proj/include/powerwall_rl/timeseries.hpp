#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace powerwall_rl {

inline constexpr int kHoursPerYear = 8760;
inline constexpr int kHoursPerDay = 24;
inline constexpr int kTrainHours = 720;       // Jan 1-30
inline constexpr int kTestStartHour = 744;    // Feb 1 00:00, Jan 31 excluded
inline constexpr int kTestHours = 8016;       // Feb-Dec

/// First hour of each calendar month (non-leap year), plus a final sentinel.
inline constexpr std::array<int, 13> kMonthStartHour = {
    0, 744, 1416, 2160, 2880, 3624, 4344, 5088, 5832, 6552, 7296, 8016, 8760};

/// One hour of exogenous data driving the environment.
struct HourlyRecord {
    int index = 0;          // hour of year, [0, 8759]
    double load_kwh = 0.0;  // farm demand this hour
    double pv_kwh = 0.0;    // PV production this hour
    double price = 0.0;     // tariff, currency/kWh

    bool operator==(const HourlyRecord&) const = default;
};

/// Hour-of-day boundaries of the three time-of-use bands. Night wraps
/// around midnight: [night_start, 24) and [0, day_start) take the cheapest
/// tier, [day_start, peak_start) the middle one, [peak_start, night_start)
/// the most expensive. night_start == 24 disables the late-night band.
struct TouBands {
    int day_start = 7;
    int peak_start = 17;
    int night_start = 22;
};

/// Tier index (0 = night, 1 = day, 2 = peak) for an hour of day.
int tier_for_hour(int hour_of_day, const TouBands& bands);

/// A full year of hourly records with tariff metadata.
struct YearSeries {
    std::vector<HourlyRecord> records;  // exactly 8760, indices consecutive
    double pv_capacity_kw = 0.0;
    std::array<double, 3> tariff_tiers{};  // strictly ascending

    /// Index of the tier closest to a record's price.
    int price_tier(double price) const;

    bool operator==(const YearSeries&) const = default;
};

/// Train/test views into a parent YearSeries (paper protocol: train on
/// Jan 1-30, test on Feb-Dec, Jan 31 used by neither).
struct DatasetSplit {
    std::span<const HourlyRecord> train;  // hours [0, 720)
    std::span<const HourlyRecord> test;   // hours [744, 8760)
};

/// Synthetic-generator parameters. Shape defaults are calibrated so that the
/// training month already contains PV-surplus hours and summer daylight
/// overlaps the evening tariff band; aggregate statistics follow the dataset
/// description (annual load, PV nameplate, three-tier tariff).
struct SynthConfig {
    std::uint64_t seed = 42;
    double annual_load_kwh = 261000.0;
    double pv_capacity_kw = 20.0;
    std::array<double, 3> tariff_tiers{0.05, 0.12, 0.22};
    TouBands bands{};

    // Load shape: base floor plus morning/evening milking humps, mild
    // seasonal swing, multiplicative noise. Relative units, rescaled so the
    // annual sum matches annual_load_kwh exactly.
    double load_floor = 0.30;
    double morning_peak_hour = 5.5;
    double morning_width = 1.5;
    double morning_amp = 1.9;
    double evening_peak_hour = 16.5;
    double evening_width = 1.7;
    double evening_amp = 2.1;
    double winter_load_swing = 0.08;
    double load_noise = 0.10;

    // PV shape: zero at night, bell-shaped daylight profile, seasonal
    // amplitude and day length, day-level cloud factor plus hourly jitter.
    double pv_winter_amp = 0.45;
    double pv_summer_amp = 0.95;
    double pv_winter_half_day = 3.5;
    double pv_summer_half_day = 9.0;
    double solar_noon = 12.5;
    double pv_shape_power = 1.3;
    double cloud_floor = 0.35;
    double pv_jitter = 0.08;
};

/// Deterministically generate a synthetic year. The annual load sum lands on
/// annual_load_kwh up to rounding; pv_kwh never reaches pv_capacity_kw.
YearSeries generate_synthetic(const SynthConfig& config = {});

/// Parse `hour,load_kwh,pv_kwh,price` CSV with exactly 8760 data rows.
/// Tariff tiers are inferred as the sorted distinct prices (must be 3);
/// pv_capacity_kw is inferred as the maximum pv_kwh.
YearSeries load_csv(const std::filesystem::path& path);

/// Write a series in the load_csv format. Values round-trip exactly.
void save_csv(const YearSeries& series, const std::filesystem::path& path);

/// Slice the paper's train/test windows out of a full year.
DatasetSplit split(const YearSeries& series);

/// Throws DataError if any YearSeries invariant is violated.
void validate(const YearSeries& series);

}  // namespace powerwall_rl
