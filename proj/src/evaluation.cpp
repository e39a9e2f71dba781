#include "specmeasure/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "specmeasure/empirical.hpp"
#include "specmeasure/errors.hpp"
#include "specmeasure/mele.hpp"
#include "specmeasure/pseudo_obs.hpp"
#include "specmeasure/quadrature.hpp"
#include "specmeasure/random.hpp"
#include "specmeasure/text_format.hpp"

namespace specmeasure {

namespace {

constexpr double kMaxPieceWidth = kHalfPi / 128.0;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

std::string to_string(Estimator e) { return e == Estimator::Empirical ? "empirical" : "mele"; }

double integrated_squared_error(const DiscreteSpectralMeasure& estimate, const SpectralModel& truth, double a, double b) {
    if (!(a >= 0.0 && a < b && b <= kHalfPi)) throw ParameterError("ISE interval must satisfy 0 <= a < b <= pi/2");
    if (!(estimate.norm() == truth.norm())) throw ParameterError("estimate and truth use different norm orders");

    static const quad::GaussRule rule = quad::gauss_legendre(10);

    std::vector<double> breaks{a};
    for (const double t : estimate.locations())
        if (t > a && t < b) breaks.push_back(t);
    if (kQuarterPi > a && kQuarterPi < b) breaks.push_back(kQuarterPi);
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());

    double total = 0.0;
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        const double lo = breaks[j];
        const double hi = breaks[j + 1];
        if (!(hi > lo)) continue;
        const double level = estimate.cdf(lo);  // constant on [lo, hi)
        const auto gap2 = [&](double t) {
            const double d = level - truth.cdf(t);
            return d * d;
        };
        const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / kMaxPieceWidth)));
        const double width = (hi - lo) / pieces;
        for (int s = 0; s < pieces; ++s) {
            const double pl = lo + s * width;
            const double ph = s + 1 == pieces ? hi : pl + width;
            total += quad::integrate(rule, gap2, pl, ph);
        }
    }
    return total;
}

std::vector<Eigen::Index> default_k_grid() {
    std::vector<Eigen::Index> grid;
    for (Eigen::Index k = 10; k <= 200; k += 10) grid.push_back(k);
    return grid;
}

std::pair<double, double> default_interval(const SpectralModel& model) {
    if (model.name() == "mixture") return {0.05 * kHalfPi, 0.95 * kHalfPi};
    return {0.0, kHalfPi};
}

const MiseCell& MiseTable::cell(Eigen::Index k, Estimator e) const {
    for (const auto& c : cells)
        if (c.k == k && c.estimator == e) return c;
    throw ParameterError("no MISE cell for k = " + std::to_string(k));
}

MiseTable mise_sweep(const SpectralModel& model, const MiseConfig& config) {
    if (!model.has_sampler()) throw UnsupportedOperation("model " + model.descriptor() + " has no sampler");
    if (config.replications < 1) throw ParameterError("need at least one replication");
    if (config.n < 1) throw ParameterError("sample size must be positive");
    const std::vector<Eigen::Index> grid = config.k_grid.empty() ? default_k_grid() : config.k_grid;
    for (const auto k : grid)
        if (k < 1 || k > config.n) throw ParameterError("k = " + std::to_string(k) + " outside [1, n]");
    if (!(config.a >= 0.0 && config.a < config.b && config.b <= kHalfPi))
        throw ParameterError("ISE interval must satisfy 0 <= a < b <= pi/2");

    const auto reps = config.replications;
    const auto nk = static_cast<Eigen::Index>(grid.size());
    // ise(r, 2 * j + e): replication r, grid index j, estimator e.
    Eigen::MatrixXd ise(reps, 2 * nk);

    const auto run_replication = [&](Eigen::Index r) {
        RandomStream rng = make_stream(config.seed, static_cast<std::uint64_t>(r));
        const PseudoObservations pobs = pseudo_observations(model.sample(config.n, rng));
        for (Eigen::Index j = 0; j < nk; ++j) {
            const AngularSample ang = select_extremes(pobs, grid[static_cast<std::size_t>(j)], model.norm());
            ise(r, 2 * j) = integrated_squared_error(empirical_spectral_measure(ang), model, config.a, config.b);
            try {
                ise(r, 2 * j + 1) = integrated_squared_error(mele_spectral_measure(ang), model, config.a, config.b);
            } catch (const ConstraintInfeasible&) {
                ise(r, 2 * j + 1) = kNaN;
            }
        }
    };

    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<Eigen::Index>(threads, reps));
    if (threads <= 1) {
        for (Eigen::Index r = 0; r < reps; ++r) run_replication(r);
    } else {
        std::atomic<Eigen::Index> next{0};
        std::exception_ptr failure;
        std::mutex failure_lock;
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (Eigen::Index r = next++; r < reps; r = next++) {
                    try {
                        run_replication(r);
                    } catch (...) {
                        std::lock_guard<std::mutex> guard(failure_lock);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    MiseTable table;
    table.model = model.descriptor();
    table.n = config.n;
    table.replications = reps;
    table.p = model.norm().to_string();
    table.k_grid = grid;
    table.a = config.a;
    table.b = config.b;
    table.seed = config.seed;
    for (Eigen::Index j = 0; j < nk; ++j) {
        for (int e = 0; e < 2; ++e) {
            MiseCell cell;
            cell.k = grid[static_cast<std::size_t>(j)];
            cell.estimator = e == 0 ? Estimator::Empirical : Estimator::Mele;
            double sum = 0.0;
            Eigen::Index count = 0;
            for (Eigen::Index r = 0; r < reps; ++r) {
                const double v = ise(r, 2 * j + e);
                if (std::isnan(v)) continue;
                sum += v;
                ++count;
            }
            cell.infeasible_count = reps - count;
            if (count == 0) {
                cell.mise = kNaN;
                cell.standard_error = kNaN;
            } else {
                cell.mise = sum / static_cast<double>(count);
                double ss = 0.0;
                for (Eigen::Index r = 0; r < reps; ++r) {
                    const double v = ise(r, 2 * j + e);
                    if (!std::isnan(v)) ss += (v - cell.mise) * (v - cell.mise);
                }
                cell.standard_error = count > 1 ? std::sqrt(ss / static_cast<double>(count - 1) / static_cast<double>(count)) : 0.0;
            }
            table.cells.push_back(cell);
        }
    }
    return table;
}

void write_mise_table(std::ostream& out, const MiseTable& table) {
    out << "k,estimator,mise,stderr,infeasible_count\n";
    for (const auto& c : table.cells)
        out << c.k << ',' << to_string(c.estimator) << ',' << text::format_double(c.mise) << ','
            << text::format_double(c.standard_error) << ',' << c.infeasible_count << '\n';
}

std::vector<MiseCell> read_mise_table(std::istream& in) {
    std::vector<MiseCell> cells;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = text::trim(line);
        if (body.empty()) continue;
        if (lineno == 1) {
            if (body != "k,estimator,mise,stderr,infeasible_count") throw ParseError(1, "unexpected MISE table header");
            continue;
        }
        const auto f = text::split_fields(body);
        if (f.size() != 5) throw ParseError(lineno, "expected 5 fields");
        MiseCell c;
        const auto k = text::parse_double(f[0]);
        const auto mise = text::parse_double(f[2]);
        const auto se = text::parse_double(f[3]);
        const auto inf = text::parse_double(f[4]);
        if (!k || !mise || !se || !inf) throw ParseError(lineno, "non-numeric field");
        const auto name = text::trim(f[1]);
        if (name == "empirical")
            c.estimator = Estimator::Empirical;
        else if (name == "mele")
            c.estimator = Estimator::Mele;
        else
            throw ParseError(lineno, "unknown estimator '" + std::string(name) + "'");
        c.k = static_cast<Eigen::Index>(*k);
        c.mise = *mise;
        c.standard_error = *se;
        c.infeasible_count = static_cast<Eigen::Index>(*inf);
        cells.push_back(c);
    }
    return cells;
}

}  // namespace specmeasure
