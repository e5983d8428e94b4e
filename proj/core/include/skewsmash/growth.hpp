#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewsmash {

// Verdict on the growth of a graded dimension sequence h(0..D).
//
// certified_zero: some h(d) = 0. For the quotients produced by the degree
// ladder this is exact, not an estimate: the quotient algebra is generated
// in degrees <= 1, so one vanishing slice forces all later slices to vanish
// and the quotient is finite dimensional.
//
// polynomial: the m-th finite difference vanishes on the trailing window
// while the (m-1)-th does not, suggesting eventual polynomial growth of
// degree m - 1, i.e. Gelfand-Kirillov dimension m. Always an estimate.
struct GrowthEstimate {
  enum class Kind { certified_zero, polynomial, inconclusive };
  Kind kind = Kind::inconclusive;
  long gk_dimension = -1; // 0 for certified_zero, m for polynomial, -1 otherwise

  std::string describe() const;
};

// window: how many trailing values of each difference sequence must vanish.
// Throws config_error when the window does not fit the data.
GrowthEstimate gk_growth_estimate(const std::vector<long long>& h, std::size_t window);

} // namespace skewsmash
