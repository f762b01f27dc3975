#include "dyadkde/kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dyadkde/error.hpp"

namespace dyadkde {
namespace {

double epanechnikov_eval(double u) noexcept {
  const double a = std::fabs(u);
  return a <= 1.0 ? 0.75 * (1.0 - u * u) : 0.0;
}

constexpr double kInvSqrt2Pi = 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;

double gaussian_eval(double u) noexcept { return kInvSqrt2Pi * std::exp(-0.5 * u * u); }

}  // namespace

KernelSpec epanechnikov() noexcept {
  return KernelSpec{"epanechnikov", &epanechnikov_eval, 0.2, 0.6, 0.75, 1.0};
}

KernelSpec gaussian() noexcept {
  return KernelSpec{"gaussian", &gaussian_eval, 1.0, 0.5 * std::numbers::inv_sqrtpi,
                    kInvSqrt2Pi, std::nullopt};
}

KernelSpec kernel_by_name(std::string_view name) {
  if (name == "epanechnikov") return epanechnikov();
  if (name == "gaussian") return gaussian();
  throw Error(ErrorCode::UnknownKernel,
              "unknown kernel `" + std::string(name) + "` (expected epanechnikov or gaussian)");
}

double scaled_eval(const KernelSpec& kernel, double w, double s, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::NonPositiveBandwidth, "bandwidth must be positive");
  return kernel((w - s) / h) / h;
}

}  // namespace dyadkde
