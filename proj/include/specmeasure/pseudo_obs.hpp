#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <string>

namespace specmeasure {

/// Raw bivariate data, one row per observation.
using BivariateSample = Eigen::Matrix<double, Eigen::Dynamic, 2>;

/// Per-column ranks R_ij = #{l : X_lj <= X_ij}.
using RankMatrix = Eigen::Matrix<Eigen::Index, Eigen::Dynamic, 2>;

/// Rank-based pseudo-observations u_ij = (n + 1 - R_ij) / n.
struct PseudoObservations {
    RankMatrix ranks;
    BivariateSample u;
    bool ties = false;  // some raw column contained duplicate values

    Eigen::Index size() const { return u.rows(); }

    /// Reversed rank n + 1 - R_ij, i.e. n * u_ij as an exact integer.
    Eigen::Index reversed_rank(Eigen::Index i, Eigen::Index j) const {
        return size() + 1 - ranks(i, j);
    }
};

/// Computes ranks columnwise in O(n log n). Equal values share the maximal
/// rank of their group, matching the counting definition of R_ij.
/// Throws InputError for an empty sample or a non-finite entry.
PseudoObservations pseudo_observations(const BivariateSample& sample);

/// Parses comma-separated two-column text. An optional first line whose
/// first field is non-numeric is skipped as a header; blank lines are ignored.
BivariateSample read_sample(std::istream& in);
BivariateSample read_sample(const std::string& path);

/// Writes `x1,x2` header and rows with 17 significant digits.
void write_sample(std::ostream& out, const BivariateSample& sample);

}  // namespace specmeasure
