#include "dyadkde/rng.hpp"

#include "dyadkde/normal.hpp"

namespace dyadkde {

double Xoshiro256::normal() noexcept { return normal_quantile(uniform()); }

}  // namespace dyadkde
