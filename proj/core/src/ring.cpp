#include "skewsmash/ring.hpp"

namespace skewsmash {

unsigned long long binomial(unsigned long long a, unsigned long long b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 result = 1;
  for (unsigned long long i = 1; i <= b; ++i) {
    result = result * (a - b + i) / i;
    if (result > static_cast<unsigned __int128>(~0ULL)) {
      throw math_error("binomial overflows 64 bits");
    }
  }
  return static_cast<unsigned long long>(result);
}

unsigned long long monomial_count(unsigned degree, unsigned vars) {
  if (vars == 0) return degree == 0 ? 1 : 0;
  return binomial(static_cast<unsigned long long>(degree) + vars - 1, vars - 1);
}

std::vector<long long> ring_hilbert_dimensions(unsigned n, unsigned max_degree) {
  std::vector<long long> dims;
  dims.reserve(max_degree + 1);
  for (unsigned d = 0; d <= max_degree; ++d) {
    dims.push_back(static_cast<long long>(monomial_count(d, n)));
  }
  return dims;
}

} // namespace skewsmash
