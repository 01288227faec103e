#pragma once

#include <string>
#include <vector>

namespace eegnlp::signal {

struct BandSpec {
    std::string name;
    double lo_hz = 0.0;
    double hi_hz = 0.0;
};

// broadband 0.5-50, theta 4-8, alpha 8.5-13, beta 13.5-30, gamma 30.5-49.5
const std::vector<BandSpec>& canonical_bands();
const BandSpec& band_by_name(const std::string& name);

inline double band_center(const BandSpec& b) { return 0.5 * (b.lo_hz + b.hi_hz); }

}  // namespace eegnlp::signal
