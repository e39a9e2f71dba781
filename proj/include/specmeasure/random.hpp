#pragma once

#include <cstdint>
#include <random>

namespace specmeasure {

using RandomStream = std::mt19937_64;

/// Independent stream for (seed, index); used for per-replication substreams
/// so results do not depend on execution order.
RandomStream make_stream(std::uint64_t seed, std::uint64_t index = 0);

/// Uniform on the open interval (0, 1) with 53-bit resolution.
double open_uniform(RandomStream& rng);

double standard_exponential(RandomStream& rng);

double standard_normal(RandomStream& rng);

/// Positive stable variate with Laplace transform exp(-t^alpha), alpha in
/// (0, 1], via the Chambers-Mallows-Stuck representation (Kanter's form):
///   S = sin(alpha U) / sin(U)^(1/alpha) * (sin((1-alpha) U) / E)^((1-alpha)/alpha)
/// with U uniform on (0, pi) and E standard exponential. alpha = 1 gives S = 1.
double positive_stable(double alpha, RandomStream& rng);

}  // namespace specmeasure
