#include "specmeasure/models.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "specmeasure/errors.hpp"
#include "specmeasure/quadrature.hpp"
#include "specmeasure/text_format.hpp"

namespace specmeasure {

namespace {

constexpr Eigen::Index kCells = 4096;     // even; pi/4 is a node
constexpr Eigen::Index kEdgeCells = 64;   // integrated directly near 0 and pi/2
constexpr double kEdgeTolerance = 1e-13;

double grid_node(Eigen::Index j) {
    constexpr Eigen::Index half = kCells / 2;
    if (j <= half) return kQuarterPi * static_cast<double>(j) / static_cast<double>(half);
    return kQuarterPi + kQuarterPi * static_cast<double>(j - half) / static_cast<double>(half);
}

}  // namespace

// Cumulative interior mass on a fine grid, with the density at every node.
// Between nodes the cumulative mass is a cubic Hermite interpolant; the cells
// next to the endpoints, where the density may be singular, are integrated
// directly.
struct SpectralModel::Table {
    Eigen::VectorXd nodes;
    Eigen::VectorXd cumulative;
    Eigen::VectorXd density;
    Density f;
    Density fc;  // u -> f(pi/2 - u)

    Table(Density fn, Density complement) : f(std::move(fn)), fc(std::move(complement)) {
        if (!fc) fc = [g = f](double u) { return g(kHalfPi - u); };
        nodes.resize(kCells + 1);
        for (Eigen::Index j = 0; j <= kCells; ++j) nodes[j] = grid_node(j);
        nodes[kCells] = kHalfPi;
        density = Eigen::VectorXd::Zero(kCells + 1);
        for (Eigen::Index j = 1; j < kCells; ++j) density[j] = f(nodes[j]);

        static const quad::GaussRule rule = quad::gauss_legendre(8);
        cumulative.resize(kCells + 1);
        cumulative[0] = 0.0;
        for (Eigen::Index j = 0; j < kCells; ++j) {
            const double a = nodes[j];
            const double b = nodes[j + 1];
            double piece;
            if (j >= kCells - kEdgeCells)
                piece = quad::tanh_sinh(fc, kHalfPi - b, kHalfPi - a, kEdgeTolerance);
            else if (j < kEdgeCells)
                piece = quad::tanh_sinh(f, a, b, kEdgeTolerance);
            else
                piece = quad::integrate(rule, f, a, b);
            cumulative[j + 1] = cumulative[j] + piece;
        }
    }

    static bool is_edge(Eigen::Index cell) { return cell < kEdgeCells || cell >= kCells - kEdgeCells; }

    Eigen::Index locate(double theta) const {
        constexpr Eigen::Index half = kCells / 2;
        Eigen::Index j = theta < kQuarterPi
                             ? static_cast<Eigen::Index>(theta / kQuarterPi * half)
                             : half + static_cast<Eigen::Index>((theta - kQuarterPi) / kQuarterPi * half);
        j = std::clamp<Eigen::Index>(j, 0, kCells - 1);
        while (j > 0 && nodes[j] > theta) --j;
        while (j + 1 < kCells && nodes[j + 1] <= theta) ++j;
        return j;
    }

    double mass_up_to(double theta) const {
        if (theta <= 0.0) return 0.0;
        if (theta >= kHalfPi) return cumulative[kCells];
        const Eigen::Index j = locate(theta);
        const double a = nodes[j];
        if (theta == a) return cumulative[j];
        if (j >= kCells - kEdgeCells) return cumulative[j] + quad::tanh_sinh(fc, kHalfPi - theta, kHalfPi - a, kEdgeTolerance);
        if (j < kEdgeCells) return cumulative[j] + quad::tanh_sinh(f, a, theta, kEdgeTolerance);
        const double h = nodes[j + 1] - a;
        const double t = (theta - a) / h;
        const double t2 = t * t;
        const double t3 = t2 * t;
        return cumulative[j] * (2 * t3 - 3 * t2 + 1) + h * density[j] * (t3 - 2 * t2 + t) +
               cumulative[j + 1] * (-2 * t3 + 3 * t2) + h * density[j + 1] * (t3 - t2);
    }
};

SpectralModel::SpectralModel(Definition def) : def_(std::make_shared<const Definition>(std::move(def))) {
    if (def_->density && !def_->interior_cdf) table_ = std::make_shared<const Table>(def_->density, def_->complement_density);
}

std::string SpectralModel::descriptor() const {
    std::string out = def_->name + "(";
    for (const auto& [key, value] : def_->parameters) out += key + "=" + text::format_double(value) + ",";
    out += "p=" + def_->p.to_string() + ")";
    return out;
}

double SpectralModel::interior_cdf(double theta) const {
    if (def_->interior_cdf) {
        if (theta <= 0.0) return 0.0;
        return def_->interior_cdf(std::min(theta, kHalfPi));
    }
    if (table_) return table_->mass_up_to(theta);
    return 0.0;
}

double SpectralModel::cdf(double theta) const {
    if (theta < 0.0) return 0.0;
    if (theta >= kHalfPi) return total_mass();
    return atom0() + interior_cdf(theta);
}

double SpectralModel::density(double theta) const {
    if (!(theta > 0.0 && theta < kHalfPi)) throw DomainError("spectral density is defined on (0, pi/2) only");
    return def_->density ? def_->density(theta) : 0.0;
}

double SpectralModel::interior_mass() const { return interior_cdf(kHalfPi); }

MomentSums SpectralModel::moment_sums() const {
    MomentSums out;
    // Atoms: at 0 only the cosine term is 1, at pi/2 only the sine term.
    out.cosine = atom0();
    out.sine = atom_half_pi();
    if (!def_->density) return out;
    const auto& p = def_->p;
    const auto& f = def_->density;
    const auto fc = def_->complement_density ? def_->complement_density : [&f](double u) { return f(kHalfPi - u); };
    // Lower half in theta, upper half in u = pi/2 - theta (sin and cos swap).
    const auto sine_lo = [&](double t) { return f(t) * std::sin(t) / lp_norm(std::sin(t), std::cos(t), p); };
    const auto cosine_lo = [&](double t) { return f(t) * std::cos(t) / lp_norm(std::sin(t), std::cos(t), p); };
    const auto sine_hi = [&](double u) { return fc(u) * std::cos(u) / lp_norm(std::cos(u), std::sin(u), p); };
    const auto cosine_hi = [&](double u) { return fc(u) * std::sin(u) / lp_norm(std::cos(u), std::sin(u), p); };
    out.sine += quad::tanh_sinh(sine_lo, 0.0, kQuarterPi, 1e-14) + quad::tanh_sinh(sine_hi, 0.0, kQuarterPi, 1e-14);
    out.cosine += quad::tanh_sinh(cosine_lo, 0.0, kQuarterPi, 1e-14) + quad::tanh_sinh(cosine_hi, 0.0, kQuarterPi, 1e-14);
    return out;
}

BivariateSample SpectralModel::sample(Eigen::Index n, RandomStream& rng) const {
    if (!def_->sampler) throw UnsupportedOperation("model " + descriptor() + " has no sampler");
    if (n < 1) throw ParameterError("sample size must be positive");
    return def_->sampler(n, rng);
}

// ---------------------------------------------------------------------------
// Logistic family

double logistic_stdf(double x1, double x2, double r, double psi1, double psi2) {
    if (!(r >= 1.0) || !std::isfinite(r)) throw ParameterError("logistic r must be finite and >= 1");
    if (!(psi1 >= 0.0 && psi1 <= 1.0 && psi2 >= 0.0 && psi2 <= 1.0))
        throw ParameterError("logistic psi parameters must lie in [0, 1]");
    if (!(x1 >= 0.0 && x2 >= 0.0)) throw ParameterError("stable tail dependence arguments must be nonnegative");
    return (1.0 - psi1) * x1 + (1.0 - psi2) * x2 + lp_norm(psi1 * x1, psi2 * x2, NormOrder(r));
}

namespace {

double logistic_density_sc(double s, double c, double r, double psi1, double psi2, const NormOrder& p) {
    const double lead = (r - 1.0) * std::pow(psi1 * psi2, r);
    if (lead == 0.0) return 0.0;
    return lead * lp_norm(s, c, p) * std::pow(s * c, r - 2.0) *
           std::pow(std::pow(psi1 * c, r) + std::pow(psi2 * s, r), 1.0 / r - 2.0);
}

}  // namespace

double asym_logistic_spectral_density(double theta, double r, double psi1, double psi2, const NormOrder& p) {
    if (!(r > 1.0) || !std::isfinite(r)) throw ParameterError("logistic density needs finite r > 1");
    if (!(psi1 >= 0.0 && psi1 <= 1.0 && psi2 >= 0.0 && psi2 <= 1.0))
        throw ParameterError("logistic psi parameters must lie in [0, 1]");
    if (!(theta > 0.0 && theta < kHalfPi)) throw DomainError("logistic density is defined on (0, pi/2) only");
    return logistic_density_sc(std::sin(theta), std::cos(theta), r, psi1, psi2, p);
}

BivariateSample sample_logistic(Eigen::Index n, double r, RandomStream& rng) {
    if (!(r >= 1.0) || !std::isfinite(r)) throw ParameterError("logistic r must be finite and >= 1");
    BivariateSample out(n, 2);
    const double alpha = 1.0 / r;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double s = positive_stable(alpha, rng);
        const double e1 = standard_exponential(rng);
        const double e2 = standard_exponential(rng);
        out(i, 0) = std::pow(s / e1, alpha);
        out(i, 1) = std::pow(s / e2, alpha);
    }
    return out;
}

SpectralModel asym_logistic_model(double r, double psi1, double psi2, const NormOrder& p) {
    if (!(r >= 1.0) || !std::isfinite(r)) throw ParameterError("logistic r must be finite and >= 1");
    if (!(psi1 >= 0.0 && psi1 <= 1.0 && psi2 >= 0.0 && psi2 <= 1.0))
        throw ParameterError("logistic psi parameters must lie in [0, 1]");

    SpectralModel::Definition def;
    const bool symmetric = psi1 == 1.0 && psi2 == 1.0;
    def.name = symmetric ? "logistic" : "asymmetric-logistic";
    def.parameters = {{"r", r}, {"psi1", psi1}, {"psi2", psi2}};
    def.p = p;
    if (r == 1.0 || psi1 * psi2 == 0.0) {
        // l(x1, x2) = x1 + x2: all mass on the axes.
        def.atom0 = 1.0;
        def.atom_half_pi = 1.0;
    } else {
        def.atom0 = 1.0 - psi2;
        def.atom_half_pi = 1.0 - psi1;
        def.density = [r, psi1, psi2, p](double t) { return asym_logistic_spectral_density(t, r, psi1, psi2, p); };
        def.complement_density = [r, psi1, psi2, p](double u) {
            return logistic_density_sc(std::cos(u), std::sin(u), r, psi1, psi2, p);
        };
    }
    if (symmetric) def.sampler = [r](Eigen::Index n, RandomStream& rng) { return sample_logistic(n, r, rng); };
    return SpectralModel(std::move(def));
}

// ---------------------------------------------------------------------------
// Cauchy

namespace {

// int_0^theta ||(sin, cos)||_p, closed form where one exists.
SpectralModel::InteriorCdf cauchy_closed_form(const NormOrder& p, double scale) {
    if (p.is_one()) return [scale](double t) { return scale * (1.0 - std::cos(t) + std::sin(t)); };
    if (p.is_infinite())
        return [scale](double t) {
            return scale * (t <= kQuarterPi ? std::sin(t) : std::sqrt(2.0) - std::cos(t));
        };
    if (p.value() == 2.0) return [scale](double t) { return scale * t; };
    return {};
}

}  // namespace

BivariateSample sample_cauchy_quadrant(Eigen::Index n, RandomStream& rng) {
    BivariateSample out(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double z0 = std::abs(standard_normal(rng));
        out(i, 0) = std::abs(standard_normal(rng)) / z0;
        out(i, 1) = std::abs(standard_normal(rng)) / z0;
    }
    return out;
}

BivariateSample sample_cauchy_fullplane(Eigen::Index n, RandomStream& rng) {
    BivariateSample out(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double z0 = std::abs(standard_normal(rng));
        out(i, 0) = standard_normal(rng) / z0;
        out(i, 1) = standard_normal(rng) / z0;
    }
    return out;
}

SpectralModel cauchy_quadrant_model(const NormOrder& p) {
    SpectralModel::Definition def;
    def.name = "cauchy-quadrant";
    def.p = p;
    def.density = [p](double t) { return lp_norm(std::sin(t), std::cos(t), p); };
    def.interior_cdf = cauchy_closed_form(p, 1.0);
    def.sampler = [](Eigen::Index n, RandomStream& rng) { return sample_cauchy_quadrant(n, rng); };
    return SpectralModel(std::move(def));
}

SpectralModel cauchy_fullplane_model(const NormOrder& p) {
    SpectralModel::Definition def;
    def.name = "cauchy-fullplane";
    def.p = p;
    def.atom0 = 0.5;
    def.atom_half_pi = 0.5;
    def.density = [p](double t) { return 0.5 * lp_norm(std::sin(t), std::cos(t), p); };
    def.interior_cdf = cauchy_closed_form(p, 0.5);
    def.sampler = [](Eigen::Index n, RandomStream& rng) { return sample_cauchy_fullplane(n, rng); };
    return SpectralModel(std::move(def));
}

// ---------------------------------------------------------------------------
// Mixture

double mixture_component_conditional_survival(double y, double x) {
    if (y <= 1.0) return 1.0;
    const double sum = x + y;
    return (x * x * y + y + 2.0 * x) / (y * sum * sum);
}

BivariateSample sample_mixture(Eigen::Index n, double r, RandomStream& rng) {
    if (!(r >= 0.0 && r <= 1.0)) throw ParameterError("mixture r must lie in [0, 1]");
    BivariateSample out(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (open_uniform(rng) < 1.0 - r) {
            out(i, 0) = 1.0 / open_uniform(rng);
            out(i, 1) = 1.0 / open_uniform(rng);
            continue;
        }
        const double x = 1.0 / open_uniform(rng);
        const double target = open_uniform(rng);
        // Invert the conditional survival function, decreasing from 1 at y = 1.
        double lo = 1.0;
        double hi = 2.0;
        while (mixture_component_conditional_survival(hi, x) > target) {
            lo = hi;
            hi *= 2.0;
        }
        while (hi - lo > 1e-12 * hi) {
            const double mid = 0.5 * (lo + hi);
            if (mixture_component_conditional_survival(mid, x) > target)
                lo = mid;
            else
                hi = mid;
        }
        out(i, 0) = x;
        out(i, 1) = 0.5 * (lo + hi);
    }
    return out;
}

SpectralModel mixture_model(double r, const NormOrder& p) {
    if (!(r >= 0.0 && r <= 1.0)) throw ParameterError("mixture r must lie in [0, 1]");
    SpectralModel::Definition def;
    def.name = "mixture";
    def.parameters = {{"r", r}};
    def.p = p;
    def.atom0 = 1.0 - r;
    def.atom_half_pi = 1.0 - r;
    if (r > 0.0) {
        def.density = [r, p](double t) {
            const double s = std::sin(t);
            const double c = std::cos(t);
            const double sum = s + c;
            return 2.0 * r * lp_norm(s, c, p) / (sum * sum * sum);
        };
        // d/dt sin/(sin + cos) = 1/(sin + cos)^2
        if (p.is_one()) def.interior_cdf = [r](double t) { return 2.0 * r * std::sin(t) / (std::sin(t) + std::cos(t)); };
    }
    def.sampler = [r](Eigen::Index n, RandomStream& rng) { return sample_mixture(n, r, rng); };
    return SpectralModel(std::move(def));
}

SpectralModel make_model(const std::string& name, const NormOrder& p, std::optional<double> r, double psi1, double psi2) {
    if (name == "logistic") return asym_logistic_model(r.value_or(2.0), psi1, psi2, p);
    if (name == "cauchy-quadrant") return cauchy_quadrant_model(p);
    if (name == "cauchy-fullplane") return cauchy_fullplane_model(p);
    if (name == "mixture") return mixture_model(r.value_or(0.5), p);
    throw ParameterError("unknown model '" + name + "' (expected logistic, cauchy-quadrant, cauchy-fullplane or mixture)");
}

}  // namespace specmeasure
