#pragma once

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specmeasure/atomic_measure.hpp"
#include "specmeasure/lp_geometry.hpp"
#include "specmeasure/pseudo_obs.hpp"
#include "specmeasure/random.hpp"

namespace specmeasure {

/// Ground-truth spectral measure Phi_p of a parametric dependence model:
/// atoms at 0 and pi/2 plus an absolutely continuous interior part, and
/// optionally an exact sampler of the underlying bivariate law.
class SpectralModel {
public:
    using Density = std::function<double(double)>;
    using InteriorCdf = std::function<double(double)>;
    using Sampler = std::function<BivariateSample(Eigen::Index, RandomStream&)>;

    struct Definition {
        std::string name;
        std::vector<std::pair<std::string, double>> parameters;
        NormOrder p = NormOrder::infinity();
        double atom0 = 0.0;
        double atom_half_pi = 0.0;
        Density density;           // interior density; empty for purely atomic models
        // Optional: u -> density(pi/2 - u), accurate for tiny u. Angles just
        // below pi/2 are too coarse in double precision to resolve a
        // singularity there, so the upper half is integrated in u.
        Density complement_density;
        InteriorCdf interior_cdf;  // optional closed form of the interior mass on (0, theta]
        Sampler sampler;           // optional
    };

    explicit SpectralModel(Definition def);

    const std::string& name() const noexcept { return def_->name; }
    /// e.g. "logistic(r=2,psi1=1,psi2=1,p=inf)"
    std::string descriptor() const;
    const std::vector<std::pair<std::string, double>>& parameters() const noexcept { return def_->parameters; }
    const NormOrder& norm() const noexcept { return def_->p; }

    double atom0() const noexcept { return def_->atom0; }
    double atom_half_pi() const noexcept { return def_->atom_half_pi; }

    /// Phi_p([0, theta]) for theta in [0, pi/2]; right-continuous.
    double cdf(double theta) const;

    /// Interior density; DomainError outside (0, pi/2).
    double density(double theta) const;

    double interior_mass() const;
    double total_mass() const { return atom0() + interior_mass() + atom_half_pi(); }

    /// int sin/||.||_p dPhi and int cos/||.||_p dPhi, atoms included, by
    /// tanh-sinh quadrature of the interior part. Both equal 1 for a genuine
    /// spectral measure.
    MomentSums moment_sums() const;

    bool has_sampler() const noexcept { return static_cast<bool>(def_->sampler); }

    /// n i.i.d. rows; UnsupportedOperation when the model has no sampler.
    BivariateSample sample(Eigen::Index n, RandomStream& rng) const;

private:
    struct Table;

    double interior_cdf(double theta) const;

    std::shared_ptr<const Definition> def_;
    std::shared_ptr<const Table> table_;
};

/// Asymmetric logistic stable tail dependence function
///   l(x1, x2) = (1 - psi1) x1 + (1 - psi2) x2 + ((psi1 x1)^r + (psi2 x2)^r)^(1/r).
double logistic_stdf(double x1, double x2, double r, double psi1 = 1.0, double psi2 = 1.0);

/// Interior spectral density of the asymmetric logistic model, r > 1.
double asym_logistic_spectral_density(double theta, double r, double psi1, double psi2, const NormOrder& p);

/// Asymmetric logistic model (r >= 1, psi in [0,1]^2). With r = 1 or
/// psi1 psi2 = 0 the measure is the tail-independence measure with unit atoms
/// at both endpoints. Sampling is available only for psi1 = psi2 = 1.
SpectralModel asym_logistic_model(double r, double psi1, double psi2, const NormOrder& p);

/// Symmetric logistic model, psi1 = psi2 = 1.
inline SpectralModel logistic_model(double r, const NormOrder& p) { return asym_logistic_model(r, 1.0, 1.0, p); }

/// n draws from the extreme-value law exp(-(x1^-r + x2^-r)^(1/r)) with
/// unit-Frechet margins.
BivariateSample sample_logistic(Eigen::Index n, double r, RandomStream& rng);

/// Spherical bivariate Cauchy folded into the positive quadrant.
SpectralModel cauchy_quadrant_model(const NormOrder& p);
BivariateSample sample_cauchy_quadrant(Eigen::Index n, RandomStream& rng);

/// Spherical bivariate Cauchy on the whole plane.
SpectralModel cauchy_fullplane_model(const NormOrder& p);
BivariateSample sample_cauchy_fullplane(Eigen::Index n, RandomStream& rng);

/// Mixture F(x, y) = (1 - 1/x)(1 - 1/y)(1 + r / (x + y)), x, y >= 1, r in [0, 1].
SpectralModel mixture_model(double r, const NormOrder& p);
BivariateSample sample_mixture(Eigen::Index n, double r, RandomStream& rng);

/// Survival function P(Y > y | X = x) of the second mixture component,
/// (x^2 y + y + 2x) / (y (x + y)^2) for y >= 1.
double mixture_component_conditional_survival(double y, double x);

/// Builds a model by CLI name: logistic, cauchy-quadrant, cauchy-fullplane,
/// mixture. `r` defaults to 2 (logistic) or 0.5 (mixture).
SpectralModel make_model(const std::string& name, const NormOrder& p, std::optional<double> r = std::nullopt,
                         double psi1 = 1.0, double psi2 = 1.0);

}  // namespace specmeasure
