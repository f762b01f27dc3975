#include "dyadkde/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace dyadkde {

double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         std::size_t panels) {
  if (panels < 2) panels = 2;
  if (panels % 2 != 0) ++panels;
  const double step = (b - a) / static_cast<double>(panels);
  double odd = 0.0;
  double even = 0.0;
  for (std::size_t k = 1; k < panels; ++k) {
    const double x = a + step * static_cast<double>(k);
    (k % 2 == 1 ? odd : even) += f(x);
  }
  return step / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

double relative_difference(double a, double b) noexcept {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  if (scale == 0.0) return 0.0;
  return std::fabs(a - b) / scale;
}

}  // namespace dyadkde
