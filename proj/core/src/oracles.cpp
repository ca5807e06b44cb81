#include "volterra/oracles.hpp"

#include "volterra/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace volterra {

TransportResult transport_emd(const Density& P, const Density& Q) {
  if (P.size() != Q.size()) throw LengthMismatchError(P.size(), Q.size());
  const std::size_t n = P.size();
  const double nd = static_cast<double>(n);

  TransportResult out{0.0, {}};
  std::size_t i = 0, j = 0;
  double supply = P[0] / nd;
  double demand = Q[0] / nd;
  while (i < n && j < n) {
    const double move = std::min(supply, demand);
    if (move > 0.0) {
      const double dist =
          std::abs(static_cast<double>(i > j ? i - j : j - i)) / nd;
      out.cost += move * dist;
      out.plan.push_back({i, j, move});
    }
    supply -= move;
    demand -= move;
    // Advance whichever atom is exhausted; both masses were validated to
    // total 1, so leftovers at the end are tolerance dust.
    if (supply <= 0.0) {
      if (++i < n) supply = P[i] / nd;
    }
    if (demand <= 0.0) {
      if (++j < n) demand = Q[j] / nd;
    }
  }
  return out;
}

double cdf_max(const Density& P, const Density& Q) {
  if (P.size() != Q.size()) throw LengthMismatchError(P.size(), Q.size());
  const std::size_t n = P.size();
  const double nd = static_cast<double>(n);
  // Same operation order as the running-mean difference: accumulate, scale
  // each prefix by 1/n, subtract.
  double sp = 0.0, sq = 0.0, best = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sp += P[k];
    sq += Q[k];
    best = std::max(best, std::abs(sp / nd - sq / nd));
  }
  return best;
}

std::vector<double> refine_norm(const std::function<double(double)>& f,
                                Exponent p,
                                const std::vector<std::size_t>& levels) {
  for (std::size_t k = 1; k < levels.size(); ++k)
    if (levels[k] <= levels[k - 1])
      throw std::invalid_argument("refinement levels must be strictly increasing");
  std::vector<double> out;
  out.reserve(levels.size());
  for (std::size_t n : levels)
    out.push_back(volterra_norm(Signal::sample(f, n), p));
  return out;
}

}  // namespace volterra
