#include "specmeasure/random.hpp"

#include <cmath>

#include "specmeasure/errors.hpp"

namespace specmeasure {

RandomStream make_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return RandomStream(seq);
}

double open_uniform(RandomStream& rng) {
    const std::uint64_t bits = rng() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double standard_exponential(RandomStream& rng) { return -std::log(open_uniform(rng)); }

double standard_normal(RandomStream& rng) { return std::normal_distribution<double>{}(rng); }

double positive_stable(double alpha, RandomStream& rng) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("stable index must lie in (0, 1]");
    if (alpha == 1.0) return 1.0;
    const double u = 3.14159265358979323846 * open_uniform(rng);
    const double e = standard_exponential(rng);
    const double head = std::sin(alpha * u) / std::pow(std::sin(u), 1.0 / alpha);
    const double tail = std::pow(std::sin((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
    return head * tail;
}

}  // namespace specmeasure
