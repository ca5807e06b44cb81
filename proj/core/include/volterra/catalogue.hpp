#pragma once

#include <functional>
#include <string>

namespace volterra {

/// A named test function on [0,1] together with its Lipschitz constant.
struct CatalogueEntry {
  std::function<double(double)> f;
  double lipschitz;
};

/// Piecewise-linear hat: height `height` at `center`, falling to 0 over
/// `half_width` on each side, 0 outside.
double hat(double x, double center, double half_width, double height);

/// Named test signals:
///   "triangle"       hat of height 1 at 0.2 with half-width 0.2
///   "triangle-diff"  that hat minus its mirror-image at 0.7
///   "spiked"         sum of 12 hats of half-width 0.01 at fixed
///                    pseudo-random centers with heights in [0.2, 1]
/// Throws std::invalid_argument for unknown names.
CatalogueEntry catalogue(const std::string& name);

}  // namespace volterra
