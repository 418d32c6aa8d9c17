// synth.hpp
// Synthetic multi-entity daily panels from a one-factor regime-switching
// model: R_i(t) = beta(regime) * f(t) + eps_i(t), with f and eps_i
// independent zero-mean Gaussians. Provides a controlled ground truth for
// the whole pipeline.
//
// Reproducibility contract: draws come from std::mt19937_64 (the raw
// engine is fully specified by the standard), mapped to uniforms in (0,1]
// as (x >> 11) + 1 times 2^-53, then through the Box-Muller transform.
// Each Gaussian consumes exactly two uniforms; per day the factor draw
// precedes the per-entity idiosyncratic draws. No platform distribution
// objects are involved, so fixtures reproduce across implementations.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "plunge/ingest.hpp"
#include "plunge/matrix.hpp"

namespace plunge {

enum class Regime { normal, crisis };

std::string to_string(Regime regime);  // "normal" / "crisis"

// Population correlation of the one-factor model:
// beta^2 sf^2 / (beta^2 sf^2 + si^2). Errors when the total variance is zero.
double expected_pairwise_correlation(double beta, double sigma_factor, double sigma_idio);

// Inverse helper: the loading that yields a given expected correlation.
double loading_for_correlation(double rho, double sigma_factor, double sigma_idio);

struct SynthConfig {
    std::size_t n_entities = 13;
    std::vector<Regime> months;        // regime per generated month
    int days_per_month = 21;           // >= 2; generate() also needs <= 28
    // Default loadings give expected pairwise correlations of 0.3 (normal)
    // and 0.85 (crisis) at the default volatilities below.
    double beta_normal = loading_for_correlation(0.30, 0.02, 0.01);
    double beta_crisis = loading_for_correlation(0.85, 0.02, 0.01);
    double sigma_factor = 0.02;        // daily factor volatility
    double sigma_idio = 0.01;          // daily idiosyncratic volatility
    double pe_normal = 15.0;           // PE emitted in normal months
    double pe_crisis = 26.0;           // PE emitted in crisis months
    std::uint64_t seed = 0;
    MonthKey start_month{2006, 1};     // calendar anchor for generate()
    double initial_price = 100.0;

    void validate() const;  // throws InputError
};

// Raw generated returns: months.size() * days_per_month rows, one column
// per entity. Used directly by statistical checks that need windows longer
// than a calendar month.
struct SynthReturns {
    Matrix returns;
    std::vector<Regime> month_regimes;
    int days_per_month = 0;
};

struct SynthOutput {
    PricePanel prices;  // one lead-in day before start_month, then the months
    PESeries pe;
    std::vector<std::pair<MonthKey, Regime>> regimes;  // ground truth per month
};

SynthReturns generate_returns(const SynthConfig& config);

// Prices are reconstructed as P(0) * exp(cumulative returns), so they stay
// positive. Month m occupies days 1..days_per_month of its calendar month,
// hence the <= 28 limit on days_per_month here.
SynthOutput generate(const SynthConfig& config);

// Deterministic Gaussian stream per the contract above.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double next_uniform();  // in (0, 1]
    double next();          // standard normal

private:
    std::mt19937_64 engine_;
};

}  // namespace plunge
