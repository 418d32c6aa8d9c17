// indicator.hpp
// Two-parameter monthly crash classifier. A month is Crash when both the
// largest correlation eigenvalue and the PE ratio clear their thresholds,
// Crisis when only the eigenvalue does, Normal otherwise. Auxiliary
// correlation-statistic flags are informational and never affect labels.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plunge/ingest.hpp"
#include "plunge/window_metrics.hpp"

namespace plunge {

enum class Label { normal, crisis, crash };

std::string to_string(Label label);  // "Normal" / "Crisis" / "Crash"

struct IndicatorConfig {
    double pe_min = 20.0;        // lower edge of the elevated PE band
    double lecm_min = 11.0;      // largest-eigenvalue threshold
    double mean_corr_min = 0.80; // auxiliary: elevated mean correlation
    double min_corr_min = 0.65;  // auxiliary: elevated minimum correlation
    double stdev_max = 0.12;     // auxiliary: depressed correlation dispersion
    int persistence_months = 1;  // minimum run length reported as an interval

    void validate() const;  // throws InputError
};

struct AuxFlags {
    bool high_mean = false;
    bool low_stdev = false;
    bool high_min_corr = false;

    bool operator==(const AuxFlags&) const = default;
};

struct MonthLabel {
    MonthKey month;
    Label label = Label::normal;
    double lecm = 0.0;
    std::optional<double> pe;  // empty when the month has no PE observation
    AuxFlags flags;
    WindowMetrics metrics;
};

// Maximal run of equal non-Normal labels, inclusive month bounds.
struct Interval {
    MonthKey start;
    MonthKey end;
    Label label = Label::normal;
};

struct Report {
    std::vector<MonthLabel> per_month;  // chronological
    std::vector<Interval> intervals;    // disjoint, chronological
    IndicatorConfig config;
};

struct ParameterPoint {
    MonthKey month;
    double lecm = 0.0;
    double pe = 0.0;
    Label label = Label::normal;
};

enum class ReportFormat { json, csv };

Label classify_month(double lecm, std::optional<double> pe, const IndicatorConfig& config);

Report label_series(const std::vector<WindowMetrics>& metrics,
                    const std::optional<PESeries>& pe, const IndicatorConfig& config);

// One point per month with a PE observation; feeds scatter plots.
std::vector<ParameterPoint> parameter_space(const Report& report);

std::string emit_report(const Report& report, ReportFormat format);

}  // namespace plunge
