#include "brocard/sampling.hpp"

namespace brocard {

std::vector<double> uniform_grid(std::size_t n, double phase, double period, double t0) {
  std::vector<double> ts(n);
  const double h = period / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) ts[k] = t0 + (static_cast<double>(k) + phase) * h;
  return ts;
}

}  // namespace brocard
