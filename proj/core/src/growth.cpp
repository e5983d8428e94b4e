#include "skewsmash/growth.hpp"

#include <algorithm>

#include "skewsmash/errors.hpp"

namespace skewsmash {

std::string GrowthEstimate::describe() const {
  switch (kind) {
    case Kind::certified_zero:
      return "certified_zero";
    case Kind::polynomial:
      return "polynomial(" + std::to_string(gk_dimension) + ")";
    case Kind::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

GrowthEstimate gk_growth_estimate(const std::vector<long long>& h, std::size_t window) {
  if (window == 0) throw config_error("growth window must be positive");
  if (h.size() < window + 1) {
    throw config_error("growth window " + std::to_string(window) +
                       " larger than data of length " + std::to_string(h.size()));
  }
  for (long long v : h) {
    if (v < 0) throw config_error("negative dimension in growth data");
    if (v == 0) return {GrowthEstimate::Kind::certified_zero, 0};
  }
  auto tail_zero = [](const std::vector<long long>& seq, std::size_t count) {
    if (count == 0 || seq.size() < count) return false;
    return std::all_of(seq.end() - static_cast<long>(count), seq.end(),
                       [](long long v) { return v == 0; });
  };
  std::vector<long long> diff = h;
  // A settled tail of `window` values supports difference orders up to
  // window - 1: the m-th differences taken inside that tail number
  // window - m, and all of them must vanish.
  for (std::size_t m = 1; m < window; ++m) {
    std::vector<long long> next(diff.size() - 1);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) next[i] = diff[i + 1] - diff[i];
    if (tail_zero(next, window - m)) {
      return {GrowthEstimate::Kind::polynomial, static_cast<long>(m)};
    }
    diff = std::move(next);
  }
  return {GrowthEstimate::Kind::inconclusive, -1};
}

} // namespace skewsmash
