#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinnet/recoupling.hpp"

namespace spinnet {

enum class AsymFormula { Asym63, Asym45 };
std::string formula_name(AsymFormula f);

/// One sampling cell: `count` label sets with large entries on [J, J+j_m]
/// and small entries on [0, j_m], all triads admissible and the exact value
/// nonzero.
struct SampleConfig {
    int J = 20;                  // integer abscissa; large spins start at J
    Spin j_m{4};                 // small-spin ceiling
    int count = 200;
    std::uint64_t seed = 1;
    AsymFormula formula = AsymFormula::Asym63;
    int threads = 1;
    long budget_factor = 1000;   // rejection budget = budget_factor * count
};

struct NineJSample {
    NineJLabels labels;
    double exact = 0;
    double approx = 0;
};

struct BenchRecord {
    AsymFormula formula = AsymFormula::Asym63;
    int J = 0;
    int twice_jm = 0;
    int n_samples = 0;
    std::uint64_t seed = 0;
    double rms_dev = 0, rms_mag = 0, frac_err = 0, zero_frac = 0;
};

/// Deterministic rejection sampling; the accepted attempt order is fixed by
/// the seed, so results are independent of the thread count.
std::vector<NineJSample> collect_samples(const SampleConfig& cfg);

/// Label sets only (exact/approx dropped).
std::vector<NineJLabels> sample_nine_j(const SampleConfig& cfg);

/// rms deviation, rms magnitude, fractional error and zero fraction over all
/// samples; zero-approximation cases are included in the averages.
BenchRecord error_stats(const std::vector<NineJSample>& samples, const SampleConfig& cfg);

/// Least-squares slope of log(value) against log(J).
double scaling_fit(const std::vector<std::pair<double, double>>& points);

struct CampaignConfig {
    std::vector<int> J_values;
    std::vector<int> jm_twices;
    std::vector<AsymFormula> formulas;
    int count = 200;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct CampaignResult {
    std::vector<BenchRecord> records;
    std::string csv;
};

/// Run the J x j_m x formula grid and render the CSV table
/// (formula,J,twice_jm,n_samples,seed,rms_dev,rms_mag,frac_err,zero_frac).
CampaignResult run_campaign(const CampaignConfig& cfg);

/// Gnuplot script matching the campaign CSV, for the scaling plots.
std::string campaign_gnuplot(const std::string& csv_path);

}  // namespace spinnet
