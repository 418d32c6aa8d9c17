#include "plunge/indicator.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "plunge/errors.hpp"
#include "plunge/numfmt.hpp"

namespace plunge {

namespace {

std::vector<std::string> flag_names(const AuxFlags& flags) {
    std::vector<std::string> names;
    if (flags.high_mean) names.push_back("high_mean");
    if (flags.low_stdev) names.push_back("low_stdev");
    if (flags.high_min_corr) names.push_back("high_min_corr");
    return names;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

// Normalized connectedness at the primary (first configured) threshold.
std::optional<double> primary_connectedness(const WindowMetrics& m) {
    if (m.connectedness.empty()) return std::nullopt;
    return m.connectedness.front().normalized;
}

}  // namespace

std::string to_string(Label label) {
    switch (label) {
        case Label::normal: return "Normal";
        case Label::crisis: return "Crisis";
        case Label::crash: return "Crash";
    }
    return "Normal";
}

void IndicatorConfig::validate() const {
    if (!(pe_min > 0.0)) throw InputError("indicator config: pe_min must be positive");
    if (!(lecm_min >= 1.0)) throw InputError("indicator config: lecm_min must be at least 1");
    if (persistence_months < 1) {
        throw InputError("indicator config: persistence_months must be at least 1");
    }
}

Label classify_month(double lecm, std::optional<double> pe, const IndicatorConfig& config) {
    if (lecm < config.lecm_min) return Label::normal;
    if (pe && *pe >= config.pe_min) return Label::crash;
    return Label::crisis;
}

Report label_series(const std::vector<WindowMetrics>& metrics,
                    const std::optional<PESeries>& pe, const IndicatorConfig& config) {
    config.validate();
    if (metrics.empty()) throw InputError("label series: no monthly metrics");
    for (std::size_t i = 1; i < metrics.size(); ++i) {
        if (!(metrics[i - 1].month < metrics[i].month)) {
            throw InputError("label series: metrics not in chronological order");
        }
    }
    const std::size_t n = metrics.front().corr.size();
    if (config.lecm_min > static_cast<double>(n)) {
        throw InputError("indicator config: lecm_min exceeds the number of entities (" +
                         std::to_string(n) + ")");
    }

    Report report;
    report.config = config;
    for (const WindowMetrics& m : metrics) {
        MonthLabel entry;
        entry.month = m.month;
        entry.lecm = m.spectrum.lecm;
        if (pe) entry.pe = pe->at(m.month);
        entry.label = classify_month(entry.lecm, entry.pe, config);
        entry.flags.high_mean = m.corr_summary.mean >= config.mean_corr_min;
        entry.flags.low_stdev = m.corr_summary.stdev <= config.stdev_max;
        entry.flags.high_min_corr = m.corr_summary.min >= config.min_corr_min;
        entry.metrics = m;
        report.per_month.push_back(std::move(entry));
    }

    // Maximal runs of equal label; Normal runs are never reported.
    std::size_t start = 0;
    const auto& months = report.per_month;
    for (std::size_t i = 1; i <= months.size(); ++i) {
        if (i == months.size() || months[i].label != months[start].label) {
            const std::size_t run = i - start;
            if (months[start].label != Label::normal &&
                run >= static_cast<std::size_t>(config.persistence_months)) {
                report.intervals.push_back(
                    {months[start].month, months[i - 1].month, months[start].label});
            }
            start = i;
        }
    }
    return report;
}

std::vector<ParameterPoint> parameter_space(const Report& report) {
    std::vector<ParameterPoint> points;
    for (const MonthLabel& m : report.per_month) {
        if (m.pe) points.push_back({m.month, m.lecm, *m.pe, m.label});
    }
    return points;
}

std::string emit_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json doc;
        doc["config"] = {
            {"pe_min", report.config.pe_min},
            {"lecm_min", report.config.lecm_min},
            {"mean_corr_min", report.config.mean_corr_min},
            {"min_corr_min", report.config.min_corr_min},
            {"stdev_max", report.config.stdev_max},
            {"persistence_months", report.config.persistence_months},
        };
        auto months = nlohmann::ordered_json::array();
        for (const MonthLabel& m : report.per_month) {
            nlohmann::ordered_json entry;
            entry["month"] = to_string(m.month);
            entry["label"] = to_string(m.label);
            entry["lecm"] = m.lecm;
            entry["pe"] = m.pe ? nlohmann::ordered_json(*m.pe) : nullptr;
            const auto conn = primary_connectedness(m.metrics);
            entry["connectedness"] = conn ? nlohmann::ordered_json(*conn) : nullptr;
            entry["corr_mean"] = m.metrics.corr_summary.mean;
            entry["corr_stdev"] = m.metrics.corr_summary.stdev;
            entry["corr_min"] = m.metrics.corr_summary.min;
            entry["eigenvalues"] = m.metrics.spectrum.eigenvalues;
            entry["flags"] = flag_names(m.flags);
            months.push_back(std::move(entry));
        }
        doc["months"] = std::move(months);
        auto intervals = nlohmann::ordered_json::array();
        for (const Interval& iv : report.intervals) {
            intervals.push_back({{"start", to_string(iv.start)},
                                 {"end", to_string(iv.end)},
                                 {"label", to_string(iv.label)}});
        }
        doc["intervals"] = std::move(intervals);
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "month,label,lecm,pe,connectedness,corr_mean,corr_stdev,corr_min,eigenvalues,flags\n";
    for (const MonthLabel& m : report.per_month) {
        out << to_string(m.month) << ',' << to_string(m.label) << ',' << format_number(m.lecm)
            << ',';
        if (m.pe) out << format_number(*m.pe);
        out << ',';
        if (const auto conn = primary_connectedness(m.metrics)) out << format_number(*conn);
        out << ',' << format_number(m.metrics.corr_summary.mean) << ','
            << format_number(m.metrics.corr_summary.stdev) << ','
            << format_number(m.metrics.corr_summary.min) << ',';
        std::vector<std::string> eigen_text;
        for (const double v : m.metrics.spectrum.eigenvalues) {
            eigen_text.push_back(format_number(v));
        }
        out << join(eigen_text, ';') << ',' << join(flag_names(m.flags), ';') << '\n';
    }
    return out.str();
}

}  // namespace plunge
