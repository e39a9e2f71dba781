#include "specmeasure/lp_geometry.hpp"

#include <cstdio>
#include <cstdlib>

namespace specmeasure {

NormOrder NormOrder::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size())
        throw ParameterError("invalid norm order '" + text + "'");
    return NormOrder(v);
}

std::string NormOrder::to_string() const {
    if (infinite_) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", p_);
    return buf;
}

}  // namespace specmeasure
