#pragma once

#include <string>
#include <vector>

#include "skewsmash/cyclotomic.hpp"
#include "skewsmash/element.hpp"

namespace skewsmash {

// Checks the structural identities of the eigenbasis y_j = sum_i xi^{ij} x_i
// of the (-1)-skew ring under the full-cycle action, over a cyclotomic field
// containing a primitive n-th root of unity xi:
//   - anticommutators: y_i y_j + y_j y_i = 2 Y_{(i+j) mod n} for all pairs,
//     where Y_j = sum_i xi^{ij} x_i^2;
//   - for n = 2^d, the images of y_s^{2(d+1)} and (y_s y_{s-1})^n vanish in
//     the quotient by the ideal of the integral, checked as ideal membership
//     of the corresponding elements paired with the identity group layer.
struct IdentitySuiteResult {
  unsigned n = 0;
  unsigned cyclotomic_order = 0;
  unsigned pair_count = 0;
  bool anticommutators_hold = false;
  bool membership_applicable = false;
  unsigned y_power_exponent = 0;
  bool y_powers_in_ideal = false;
  unsigned pair_power_exponent = 0;
  bool pair_powers_in_ideal = false;
  std::vector<std::string> notes;
};

IdentitySuiteResult run_identity_suite(const CyclotomicField& field, unsigned n);

// The eigenbasis vectors themselves, for direct use in tests.
std::vector<AlgebraElement<CyclotomicField>> skew_eigen_basis(const CyclotomicField& field,
                                                              unsigned n);
std::vector<AlgebraElement<CyclotomicField>> skew_central_squares(const CyclotomicField& field,
                                                                  unsigned n);

} // namespace skewsmash
