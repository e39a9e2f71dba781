#include "specmeasure/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "specmeasure/empirical.hpp"
#include "specmeasure/errors.hpp"
#include "specmeasure/evaluation.hpp"
#include "specmeasure/mele.hpp"
#include "specmeasure/models.hpp"
#include "specmeasure/pickands.hpp"
#include "specmeasure/pseudo_obs.hpp"
#include "specmeasure/text_format.hpp"

namespace specmeasure::cli {

namespace {

struct RunConfig {
    std::string input;
    std::string output;
    std::string summary;
    std::string gnuplot;
    std::string p_text = "1";
    std::optional<long long> k;
    std::string model;
    std::optional<double> r;
    double psi1 = 1.0;
    double psi2 = 1.0;
    long long n = 1000;
    long long reps = 200;
    std::string k_grid;
    std::string interval;
    std::optional<std::uint64_t> seed;
    std::string estimator = "both";
    unsigned threads = 0;
};

using text::format_double;

// Either the --output file or the fallback stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw IoError("cannot open '" + path + "' for writing");
        stream_ = file_.get();
    }
    std::ostream& get() { return *stream_; }
    void finish() {
        stream_->flush();
        if (!*stream_) throw IoError("write failed");
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

std::vector<Eigen::Index> parse_k_grid(const std::string& spec) {
    const auto parts = text::split_fields(spec, ':');
    if (parts.size() != 3) throw ParameterError("--k-grid expects a:b:step");
    long long v[3];
    for (int i = 0; i < 3; ++i) {
        const auto d = text::parse_double(parts[static_cast<std::size_t>(i)]);
        if (!d || *d != std::floor(*d)) throw ParameterError("--k-grid entries must be integers");
        v[i] = static_cast<long long>(*d);
    }
    if (v[0] < 1 || v[1] < v[0] || v[2] < 1) throw ParameterError("--k-grid needs 1 <= a <= b and step >= 1");
    std::vector<Eigen::Index> grid;
    for (long long k = v[0]; k <= v[1]; k += v[2]) grid.push_back(static_cast<Eigen::Index>(k));
    return grid;
}

std::pair<double, double> parse_interval(const std::string& spec) {
    const auto parts = text::split_fields(spec, ',');
    const auto a = parts.size() == 2 ? text::parse_double(parts[0]) : std::nullopt;
    const auto b = parts.size() == 2 ? text::parse_double(parts[1]) : std::nullopt;
    if (!a || !b) throw ParameterError("--interval expects two fractions a,b of pi/2");
    if (!(*a >= 0.0 && *a < *b && *b <= 1.0)) throw ParameterError("--interval needs 0 <= a < b <= 1");
    return {*a * kHalfPi, *b * kHalfPi};
}

void check_estimator(const std::string& e) {
    if (e != "empirical" && e != "mele" && e != "both")
        throw ParameterError("--estimator must be empirical, mele or both");
}

PseudoObservations load_pseudo_observations(const RunConfig& cfg, std::ostream& err) {
    if (cfg.input.empty()) throw ParameterError("--input is required");
    const PseudoObservations pobs = pseudo_observations(read_sample(cfg.input));
    if (pobs.ties) err << "warning: input contains tied values; tied observations share the maximal rank\n";
    return pobs;
}

Eigen::Index checked_k(const RunConfig& cfg, Eigen::Index n) {
    if (!cfg.k) throw ParameterError("--k is required");
    if (*cfg.k < 1 || *cfg.k > n)
        throw ParameterError("--k = " + std::to_string(*cfg.k) + " outside [1, " + std::to_string(n) + "]");
    return static_cast<Eigen::Index>(*cfg.k);
}

void write_gnuplot(const RunConfig& cfg, const std::string& body) {
    if (cfg.gnuplot.empty()) return;
    std::ofstream script(cfg.gnuplot);
    if (!script) throw IoError("cannot open '" + cfg.gnuplot + "' for writing");
    script << "set datafile separator ','\nset key autotitle columnhead\n" << body;
    if (!script) throw IoError("write failed for '" + cfg.gnuplot + "'");
}

int run_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const NormOrder p = NormOrder::parse(cfg.p_text);
    check_estimator(cfg.estimator);
    if (!cfg.gnuplot.empty() && cfg.output.empty()) throw ParameterError("--gnuplot needs --output");
    const PseudoObservations pobs = load_pseudo_observations(cfg, err);
    const Eigen::Index k = checked_k(cfg, pobs.size());

    const AngularSample ang = select_extremes(pobs, k, p);
    const DiscreteSpectralMeasure empirical = empirical_spectral_measure(ang);
    std::optional<DiscreteSpectralMeasure> mele;
    MultiplierSolution sol;
    if (cfg.estimator != "empirical") mele = mele_spectral_measure(ang, sol);

    Sink sink(cfg.output, out);
    auto& os = sink.get();
    os << "theta,weight_empirical,weight_mele,score_f\n";
    for (Eigen::Index j = 0; j < empirical.size(); ++j) {
        const double theta = empirical.locations()[j];
        os << format_double(theta) << ','
           << (cfg.estimator == "mele" ? "nan" : format_double(empirical.weights()[j])) << ','
           << (mele ? format_double(mele->weights()[j]) : "nan") << ',' << format_double(score_f(theta, p)) << '\n';
    }
    sink.finish();

    std::ostringstream summary;
    const MomentSums em = moment_sums(empirical);
    summary << "key,value\n"
            << "n," << pobs.size() << "\nN_n," << ang.count() << "\nk," << k << "\np," << p.to_string() << '\n'
            << "empirical_total_mass," << format_double(empirical.total_mass()) << '\n'
            << "empirical_sine_moment_residual," << format_double(em.sine - 1.0) << '\n'
            << "empirical_cosine_moment_residual," << format_double(em.cosine - 1.0) << '\n';
    if (mele) {
        const MomentSums mm = moment_sums(*mele);
        const double score_sum = mele->integrate([&](double t) { return score_f(t, p); }) / mele->total_mass();
        summary << "mu," << format_double(sol.mu) << '\n'
                << "mele_total_mass," << format_double(mele->total_mass()) << '\n'
                << "mele_score_residual," << format_double(score_sum) << '\n'
                << "mele_sine_moment_residual," << format_double(mm.sine - 1.0) << '\n'
                << "mele_cosine_moment_residual," << format_double(mm.cosine - 1.0) << '\n';
    }
    if (cfg.summary.empty()) {
        err << summary.str();
    } else {
        std::ofstream f(cfg.summary);
        if (!(f << summary.str())) throw IoError("cannot write '" + cfg.summary + "'");
    }

    write_gnuplot(cfg, "set xlabel 'theta'\nset ylabel 'spectral measure'\nset xrange [0:pi/2]\n"
                       "plot '" + cfg.output + "' using 1:2 smooth cumulative with steps, '' using 1:3 smooth cumulative with steps\n");
    return kOk;
}

int run_pickands(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!NormOrder::parse(cfg.p_text).is_one()) throw ParameterError("pickands works with --p 1 only");
    check_estimator(cfg.estimator);
    if (!cfg.gnuplot.empty() && cfg.output.empty()) throw ParameterError("--gnuplot needs --output");
    const PseudoObservations pobs = load_pseudo_observations(cfg, err);
    const Eigen::Index k = checked_k(cfg, pobs.size());
    const NormOrder p(1.0);
    const AngularSample ang = select_extremes(pobs, k, p);
    const DiscreteSpectralMeasure phi =
        cfg.estimator == "empirical" ? empirical_spectral_measure(ang) : mele_spectral_measure(ang);
    const PickandsFunction a = pickands_function(spectral_to_H(phi));

    Sink sink(cfg.output, out);
    auto& os = sink.get();
    os << "v,A\n";
    for (Eigen::Index j = 0; j < a.knots().size(); ++j)
        os << format_double(a.knots()[j]) << ',' << format_double(a.values()[j]) << '\n';
    sink.finish();
    write_gnuplot(cfg, "max(a, b) = a > b ? a : b\nset xlabel 'v'\nset ylabel 'A(v)'\nset xrange [0:1]\nset yrange [0.5:1]\n"
                       "plot '" + cfg.output + "' using 1:2 with lines, max(x, 1 - x) with lines dt 2 notitle\n");
    return kOk;
}

SpectralModel config_model(const RunConfig& cfg, const NormOrder& p) {
    if (cfg.model.empty()) throw ParameterError("--model is required");
    return make_model(cfg.model, p, cfg.r, cfg.psi1, cfg.psi2);
}

int run_simulate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.seed) throw ParameterError("--seed is required");
    if (cfg.n < 1) throw ParameterError("--n must be positive");
    const SpectralModel model = config_model(cfg, NormOrder(1.0));
    if (!model.has_sampler()) throw ParameterError("model " + model.descriptor() + " has no sampler");
    RandomStream rng = make_stream(*cfg.seed);
    const BivariateSample sample = model.sample(static_cast<Eigen::Index>(cfg.n), rng);
    Sink sink(cfg.output, out);
    write_sample(sink.get(), sample);
    sink.finish();
    return kOk;
}

int run_benchmark(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (!cfg.seed) throw ParameterError("--seed is required");
    if (cfg.n < 1) throw ParameterError("--n must be positive");
    if (cfg.reps < 1) throw ParameterError("--reps must be positive");
    check_estimator(cfg.estimator);
    if (!cfg.gnuplot.empty() && cfg.output.empty()) throw ParameterError("--gnuplot needs --output");
    const NormOrder p = NormOrder::parse(cfg.p_text);
    const SpectralModel model = config_model(cfg, p);
    if (!model.has_sampler()) throw ParameterError("model " + model.descriptor() + " has no sampler");

    MiseConfig mc;
    mc.n = static_cast<Eigen::Index>(cfg.n);
    mc.replications = static_cast<Eigen::Index>(cfg.reps);
    mc.k_grid = cfg.k_grid.empty() ? default_k_grid() : parse_k_grid(cfg.k_grid);
    for (const auto k : mc.k_grid)
        if (k > mc.n) throw ParameterError("--k-grid exceeds n");
    std::tie(mc.a, mc.b) = cfg.interval.empty() ? default_interval(model) : parse_interval(cfg.interval);
    mc.seed = *cfg.seed;
    mc.threads = cfg.threads;

    MiseTable table = mise_sweep(model, mc);
    if (cfg.estimator != "both") {
        const Estimator keep = cfg.estimator == "mele" ? Estimator::Mele : Estimator::Empirical;
        std::erase_if(table.cells, [&](const MiseCell& c) { return c.estimator != keep; });
    }
    Sink sink(cfg.output, out);
    write_mise_table(sink.get(), table);
    sink.finish();
    write_gnuplot(cfg, "set xlabel 'k'\nset ylabel 'MISE'\nset title '" + table.model + "'\n"
                       "plot '" + cfg.output + "' using 1:(strcol(2) eq 'empirical' ? $3 : 1/0) with linespoints title 'empirical', "
                       "'' using 1:(strcol(2) eq 'mele' ? $3 : 1/0) with linespoints title 'mele'\n");
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Nonparametric estimation of the spectral measure of bivariate extremes", "specmeasure"};
    app.require_subcommand(1, 1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "Output file (default: standard output)");
        sub->add_option("--gnuplot", cfg.gnuplot, "Write a gnuplot script plotting the --output file");
    };
    auto add_estimation = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "Two-column comma-separated data file")->required();
        sub->add_option("--k", cfg.k, "Number of upper order statistics")->required();
        sub->add_option("--estimator", cfg.estimator, "empirical, mele or both");
    };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--model", cfg.model, "logistic, cauchy-quadrant, cauchy-fullplane or mixture")->required();
        sub->add_option("--r", cfg.r, "Model parameter r");
        sub->add_option("--psi1", cfg.psi1, "Asymmetric logistic psi1");
        sub->add_option("--psi2", cfg.psi2, "Asymmetric logistic psi2");
        sub->add_option("--n", cfg.n, "Sample size");
        sub->add_option("--seed", cfg.seed, "Random seed")->required();
    };

    auto* estimate = app.add_subcommand("estimate", "Empirical and MELE spectral measure of a data file");
    add_common(estimate);
    add_estimation(estimate);
    estimate->add_option("--p", cfg.p_text, "Norm order: real >= 1 or inf");
    estimate->add_option("--summary", cfg.summary, "Write the summary block here instead of standard error");

    auto* simulate = app.add_subcommand("simulate", "Draw a sample from a model");
    simulate->add_option("--output", cfg.output, "Output file (default: standard output)");
    add_model(simulate);

    auto* benchmark = app.add_subcommand("benchmark", "Monte Carlo MISE of both estimators over a k-grid");
    add_common(benchmark);
    add_model(benchmark);
    benchmark->add_option("--p", cfg.p_text, "Norm order: real >= 1 or inf");
    benchmark->add_option("--reps", cfg.reps, "Replications");
    benchmark->add_option("--k-grid", cfg.k_grid, "a:b:step (default 10:200:10)");
    benchmark->add_option("--interval", cfg.interval, "a,b as fractions of pi/2");
    benchmark->add_option("--estimator", cfg.estimator, "empirical, mele or both");
    benchmark->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");

    auto* pickands = app.add_subcommand("pickands", "Pickands dependence function from the L1 MELE");
    add_common(pickands);
    add_estimation(pickands);
    pickands->add_option("--p", cfg.p_text, "Must be 1");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (estimate->parsed()) return run_estimate(cfg, out, err);
        if (simulate->parsed()) return run_simulate(cfg, out, err);
        if (benchmark->parsed()) return run_benchmark(cfg, out, err);
        return run_pickands(cfg, out, err);
    } catch (const ConstraintInfeasible& e) {
        err << "error: MELE infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace specmeasure::cli
