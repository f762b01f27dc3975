#pragma once

#include <cstddef>
#include <functional>

namespace dyadkde {

//! Composite Simpson rule with `panels` panels (rounded up to even) on [a, b].
double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         std::size_t panels = 10000);

//! |a - b| / max(|a|, |b|), or 0 when both are zero.
double relative_difference(double a, double b) noexcept;

}  // namespace dyadkde
