#include "plunge/synth.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "plunge/errors.hpp"

namespace plunge {

std::string to_string(Regime regime) {
    return regime == Regime::crisis ? "crisis" : "normal";
}

void SynthConfig::validate() const {
    if (n_entities < 1) throw InputError("synth config: n_entities must be at least 1");
    if (months.empty()) throw InputError("synth config: no months configured");
    if (days_per_month < 2) throw InputError("synth config: days_per_month must be at least 2");
    if (beta_normal < 0.0 || beta_crisis < 0.0) {
        throw InputError("synth config: factor loadings must be nonnegative");
    }
    if (sigma_factor < 0.0 || sigma_idio < 0.0) {
        throw InputError("synth config: volatilities must be nonnegative");
    }
    if (!(pe_normal > 0.0) || !(pe_crisis > 0.0)) {
        throw InputError("synth config: PE levels must be positive");
    }
    if (start_month.month < 1 || start_month.month > 12) {
        throw InputError("synth config: invalid start month");
    }
}

double GaussianSource::next_uniform() {
    // 53-bit mantissa, shifted into (0, 1] so the log below never sees 0.
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianSource::next() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SynthReturns generate_returns(const SynthConfig& config) {
    config.validate();

    const std::size_t n = config.n_entities;
    const std::size_t days = static_cast<std::size_t>(config.days_per_month);
    SynthReturns out;
    out.month_regimes = config.months;
    out.days_per_month = config.days_per_month;
    out.returns = Matrix(config.months.size() * days, n);

    GaussianSource source(config.seed);
    std::size_t row = 0;
    for (const Regime regime : config.months) {
        const double beta = regime == Regime::crisis ? config.beta_crisis : config.beta_normal;
        for (std::size_t d = 0; d < days; ++d, ++row) {
            const double factor = config.sigma_factor * source.next();
            for (std::size_t i = 0; i < n; ++i) {
                out.returns(row, i) = beta * factor + config.sigma_idio * source.next();
            }
        }
    }
    return out;
}

SynthOutput generate(const SynthConfig& config) {
    config.validate();
    if (config.days_per_month > 28) {
        throw InputError("synth config: days_per_month above 28 cannot be laid out on "
                         "calendar months; use generate_returns for longer windows");
    }

    const SynthReturns raw = generate_returns(config);
    const std::size_t n = config.n_entities;
    const std::size_t total_days = raw.returns.rows();

    SynthOutput out;
    for (std::size_t i = 0; i < n; ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "S%02zu", i + 1);
        out.prices.entities.emplace_back(name);
    }

    // Lead-in day carries the initial price; its return is the first row.
    const MonthKey lead = prev_month(config.start_month);
    out.prices.dates.push_back({lead.year, lead.month, days_in_month(lead.year, lead.month)});
    MonthKey month = config.start_month;
    for (std::size_t m = 0; m < config.months.size(); ++m) {
        for (int d = 1; d <= config.days_per_month; ++d) {
            out.prices.dates.push_back({month.year, month.month, d});
        }
        out.regimes.emplace_back(month, config.months[m]);
        out.pe.months.push_back(month);
        out.pe.values.push_back(config.months[m] == Regime::crisis ? config.pe_crisis
                                                                   : config.pe_normal);
        month = next_month(month);
    }

    out.prices.values = Matrix(total_days + 1, n);
    for (std::size_t i = 0; i < n; ++i) {
        double log_price = std::log(config.initial_price);
        out.prices.values(0, i) = config.initial_price;
        for (std::size_t t = 0; t < total_days; ++t) {
            log_price += raw.returns(t, i);
            out.prices.values(t + 1, i) = std::exp(log_price);
        }
    }
    return out;
}

double expected_pairwise_correlation(double beta, double sigma_factor, double sigma_idio) {
    const double common = beta * beta * sigma_factor * sigma_factor;
    const double total = common + sigma_idio * sigma_idio;
    if (total == 0.0) throw InputError("expected correlation: zero total variance");
    return common / total;
}

double loading_for_correlation(double rho, double sigma_factor, double sigma_idio) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw InputError("loading: target correlation must lie in [0,1)");
    }
    if (!(sigma_factor > 0.0)) throw InputError("loading: sigma_factor must be positive");
    return sigma_idio / sigma_factor * std::sqrt(rho / (1.0 - rho));
}

}  // namespace plunge
