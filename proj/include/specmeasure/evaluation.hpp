#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "specmeasure/atomic_measure.hpp"
#include "specmeasure/models.hpp"

namespace specmeasure {

enum class Estimator { Empirical, Mele };

std::string to_string(Estimator e);

/// int_a^b (estimate cdf - truth cdf)^2 dtheta. The estimate is constant
/// between its atoms, so the integral is split at the atoms and every piece
/// gets a fixed Gauss-Legendre rule. Requires 0 <= a < b <= pi/2 and matching
/// norm orders (ParameterError otherwise).
double integrated_squared_error(const DiscreteSpectralMeasure& estimate, const SpectralModel& truth, double a, double b);

struct MiseConfig {
    Eigen::Index n = 1000;
    Eigen::Index replications = 200;
    std::vector<Eigen::Index> k_grid;  // empty means default_k_grid()
    double a = 0.0;
    double b = kHalfPi;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// k = 10, 20, ..., 200.
std::vector<Eigen::Index> default_k_grid();

/// (0.05 pi/2, 0.95 pi/2) for the mixture model, (0, pi/2) otherwise.
std::pair<double, double> default_interval(const SpectralModel& model);

struct MiseCell {
    Eigen::Index k = 0;
    Estimator estimator = Estimator::Empirical;
    double mise = 0.0;
    double standard_error = 0.0;
    Eigen::Index infeasible_count = 0;  // replications excluded from this cell
};

struct MiseTable {
    std::string model;
    Eigen::Index n = 0;
    Eigen::Index replications = 0;
    std::string p;
    std::vector<Eigen::Index> k_grid;
    double a = 0.0;
    double b = 0.0;
    std::uint64_t seed = 0;
    std::vector<MiseCell> cells;  // ordered by k, then empirical before mele

    const MiseCell& cell(Eigen::Index k, Estimator e) const;
};

/// Monte Carlo MISE of both estimators over the k-grid. Replication r uses
/// the stream make_stream(seed, r), and aggregation runs in replication order,
/// so the table does not depend on the thread count. Replications where the
/// MELE is infeasible are left out of that cell and counted.
MiseTable mise_sweep(const SpectralModel& model, const MiseConfig& config);

/// Header `k,estimator,mise,stderr,infeasible_count`, 17 significant digits.
void write_mise_table(std::ostream& out, const MiseTable& table);

/// Reads the cells back (metadata is not part of the text format).
std::vector<MiseCell> read_mise_table(std::istream& in);

}  // namespace specmeasure
