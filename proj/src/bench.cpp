#include "spinnet/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "spinnet/asymptotics.hpp"
#include "spinnet/error.hpp"
#include "spinnet/rng.hpp"

namespace spinnet {

std::string formula_name(AsymFormula f) {
    return f == AsymFormula::Asym63 ? "asym63" : "asym45";
}

namespace {

// positions of large entries in each canonical pattern
bool is_large_position(AsymFormula f, int r, int c) {
    if (f == AsymFormula::Asym63) return r != c;            // diagonal small
    const bool corner = (r == 0 || r == 2) && (c == 0 || c == 2);
    return corner;                                          // corners large
}

NineJLabels labels_for_attempt(const SampleConfig& cfg, long attempt) {
    const std::uint64_t stream =
        mix_seed(cfg.seed, mix_seed(static_cast<std::uint64_t>(cfg.J) * 2654435761u +
                                        static_cast<std::uint64_t>(cfg.j_m.twice),
                                    static_cast<std::uint64_t>(attempt) * 2 +
                                        (cfg.formula == AsymFormula::Asym63 ? 0 : 1)));
    SplitMix64 rng(stream);
    NineJLabels L;
    const int tJ = 2 * cfg.J;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (is_large_position(cfg.formula, r, c))
                L.j[r][c] = Spin(rng.uniform_int(tJ, tJ + cfg.j_m.twice));
            else
                L.j[r][c] = Spin(rng.uniform_int(0, cfg.j_m.twice));
        }
    return L;
}

double approx_value(AsymFormula f, const NineJLabels& L) {
    return f == AsymFormula::Asym63 ? approx_9j_63(L) : approx_9j_45(L);
}

}  // namespace

std::vector<NineJSample> collect_samples(const SampleConfig& cfg) {
    if (cfg.count < 1) throw ArgumentError("sample count must be positive");
    const long budget = cfg.budget_factor * static_cast<long>(cfg.count);
    const int threads = std::max(1, cfg.threads);
    const long block = std::max<long>(64, 16L * threads);

    std::vector<NineJSample> accepted;
    accepted.reserve(cfg.count);

    for (long base = 0; base < budget && static_cast<long>(accepted.size()) < cfg.count;
         base += block) {
        const long hi = std::min(budget, base + block);
        std::vector<char> ok(hi - base, 0);
        std::vector<NineJSample> results(hi - base);

        auto worker = [&](int w) {
            for (long a = base + w; a < hi; a += threads) {
                const NineJLabels L = labels_for_attempt(cfg, a);
                if (!L.all_triads_admissible()) continue;
                const RadicalRational exact = nine_j(L);
                if (exact.is_zero()) continue;
                NineJSample s;
                s.labels = L;
                s.exact = exact.to_double();
                s.approx = approx_value(cfg.formula, L);
                results[a - base] = s;
                ok[a - base] = 1;
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
            for (auto& t : pool) t.join();
        }
        // accept in attempt order so thread count never changes the output
        for (long a = base; a < hi && static_cast<long>(accepted.size()) < cfg.count; ++a)
            if (ok[a - base]) accepted.push_back(results[a - base]);
    }
    if (static_cast<long>(accepted.size()) < cfg.count)
        throw SamplingError("rejection budget exhausted before " +
                            std::to_string(cfg.count) + " samples were accepted");
    return accepted;
}

std::vector<NineJLabels> sample_nine_j(const SampleConfig& cfg) {
    std::vector<NineJLabels> out;
    for (const auto& s : collect_samples(cfg)) out.push_back(s.labels);
    return out;
}

BenchRecord error_stats(const std::vector<NineJSample>& samples, const SampleConfig& cfg) {
    if (samples.empty()) throw ArgumentError("no samples");
    BenchRecord rec;
    rec.formula = cfg.formula;
    rec.J = cfg.J;
    rec.twice_jm = cfg.j_m.twice;
    rec.n_samples = static_cast<int>(samples.size());
    rec.seed = cfg.seed;
    double dev2 = 0, mag2 = 0;
    int zeros = 0;
    for (const auto& s : samples) {
        const double d = s.approx - s.exact;
        dev2 += d * d;
        mag2 += s.exact * s.exact;
        if (s.approx == 0.0) ++zeros;
    }
    rec.rms_dev = std::sqrt(dev2 / rec.n_samples);
    rec.rms_mag = std::sqrt(mag2 / rec.n_samples);
    rec.frac_err = rec.rms_dev / rec.rms_mag;
    rec.zero_frac = static_cast<double>(zeros) / rec.n_samples;
    return rec;
}

double scaling_fit(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw ArgumentError("scaling fit needs at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [J, value] : points) {
        if (!(value > 0) || !(J > 0))
            throw ArgumentError("scaling fit requires positive values");
        const double x = std::log(J), y = std::log(value);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(points.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg) {
    CampaignResult out;
    std::ostringstream csv;
    csv << "# spinnet bench campaign\n";
    csv << "# rng=SplitMix64(seed," << cfg.seed << "); attempts keyed by "
           "(seed,J,twice_jm,formula,attempt)\n";
    csv << "# rms averages include zero-approximation samples; samples are "
           "admissible label sets with nonzero exact value\n";
    csv << "formula,J,twice_jm,n_samples,seed,rms_dev,rms_mag,frac_err,zero_frac\n";
    for (AsymFormula f : cfg.formulas) {
        for (int tjm : cfg.jm_twices) {
            for (int J : cfg.J_values) {
                SampleConfig cell;
                cell.J = J;
                cell.j_m = Spin(tjm);
                cell.count = cfg.count;
                cell.seed = cfg.seed;
                cell.formula = f;
                cell.threads = cfg.threads;
                const auto samples = collect_samples(cell);
                const BenchRecord rec = error_stats(samples, cell);
                out.records.push_back(rec);
                csv << formula_name(f) << ',' << J << ',' << tjm << ','
                    << rec.n_samples << ',' << rec.seed << ','
                    << format_double(rec.rms_dev) << ',' << format_double(rec.rms_mag)
                    << ',' << format_double(rec.frac_err) << ','
                    << format_double(rec.zero_frac) << '\n';
            }
        }
    }
    out.csv = csv.str();
    return out;
}

std::string campaign_gnuplot(const std::string& csv_path) {
    std::ostringstream s;
    s << "set datafile separator ','\n";
    s << "set logscale xy\n";
    s << "set xlabel 'J'\n";
    s << "set ylabel 'fractional error'\n";
    s << "plot '" << csv_path
      << "' using 2:(strcol(1) eq 'asym63' ? $8 : 1/0) with points title 'asym63', \\\n";
    s << "     '" << csv_path
      << "' using 2:(strcol(1) eq 'asym45' ? $8 : 1/0) with points title 'asym45'\n";
    return s.str();
}

}  // namespace spinnet
