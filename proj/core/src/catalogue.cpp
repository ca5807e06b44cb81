#include "volterra/catalogue.hpp"

#include "volterra/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace volterra {

double hat(double x, double center, double half_width, double height) {
  const double t = 1.0 - std::abs(x - center) / half_width;
  return t > 0.0 ? height * t : 0.0;
}

namespace {

struct Spike {
  double center;
  double height;
};

// Fixed stream so "spiked" denotes one concrete function everywhere.
const std::vector<Spike>& spikes() {
  static const std::vector<Spike> table = [] {
    StreamRng rng(0x5eed5eedULL);
    std::vector<Spike> s(12);
    for (auto& sp : s) {
      sp.center = 0.05 + 0.4 * rng.uniform();
      sp.height = 0.2 + 0.8 * rng.uniform();
    }
    std::sort(s.begin(), s.end(),
              [](const Spike& a, const Spike& b) { return a.center < b.center; });
    return s;
  }();
  return table;
}

}  // namespace

CatalogueEntry catalogue(const std::string& name) {
  if (name == "triangle") {
    return {[](double x) { return hat(x, 0.2, 0.2, 1.0); }, 5.0};
  }
  if (name == "triangle-diff") {
    return {[](double x) {
              return hat(x, 0.2, 0.2, 1.0) - hat(x, 0.7, 0.2, 1.0);
            },
            5.0};
  }
  if (name == "spiked") {
    // Slopes add where spikes overlap, so bound by the steepest run of
    // spikes whose supports touch.
    const auto& table = spikes();
    double steep = 0.0, run = 0.0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (i > 0 && table[i].center - table[i - 1].center >= 0.02) run = 0.0;
      run += table[i].height / 0.01;
      steep = std::max(steep, run);
    }
    return {[](double x) {
              double v = 0.0;
              for (const Spike& sp : spikes()) v += hat(x, sp.center, 0.01, sp.height);
              return v;
            },
            steep};
  }
  throw std::invalid_argument("unknown catalogue signal: '" + name + "'");
}

}  // namespace volterra
