#include "skewsmash/identity_suite.hpp"

#include "skewsmash/blocks.hpp"
#include "skewsmash/errors.hpp"

namespace skewsmash {

namespace {

using Field = CyclotomicField;
using Ring = SkewPolyRing<Field>;
using Element = AlgebraElement<Field>;

std::vector<Element> eigen_combinations(const Field& field, unsigned n, unsigned power) {
  if (n == 0) throw config_error("eigenbasis needs at least one generator");
  if (field.order() % n != 0) {
    throw config_error("cyclotomic order " + std::to_string(field.order()) +
                       " has no primitive root of unity of order " + std::to_string(n));
  }
  long step = static_cast<long>(field.order() / n);
  std::vector<Element> out(n);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 1; i <= n; ++i) {
      Monomial m(n, 0);
      m[i - 1] = power;
      out[j].add_term(field, std::move(m),
                      field.root_power(step * static_cast<long>(i) * static_cast<long>(j)));
    }
  }
  return out;
}

Element element_power(const Ring& ring, const Element& base, unsigned e) {
  Element acc = Element::monomial(ring.field(), Monomial(ring.var_count(), 0),
                                  ring.field().one());
  for (unsigned k = 0; k < e; ++k) acc = element_multiply(ring, acc, base);
  return acc;
}

} // namespace

std::vector<Element> skew_eigen_basis(const Field& field, unsigned n) {
  return eigen_combinations(field, n, 1);
}

std::vector<Element> skew_central_squares(const Field& field, unsigned n) {
  return eigen_combinations(field, n, 2);
}

IdentitySuiteResult run_identity_suite(const Field& field, unsigned n) {
  IdentitySuiteResult out;
  out.n = n;
  out.cyclotomic_order = field.order();

  Ring ring = Ring::minus_one(field, n);
  auto y = skew_eigen_basis(field, n);
  auto squares = skew_central_squares(field, n);

  out.pair_count = n * n;
  out.anticommutators_hold = true;
  for (unsigned i = 0; i < n && out.anticommutators_hold; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      Element lhs = element_multiply(ring, y[i], y[j]);
      lhs.add(field, element_multiply(ring, y[j], y[i]));
      Element rhs = squares[(i + j) % n];
      rhs.scale(field, field.from_int(2));
      if (!lhs.equal(field, rhs)) {
        out.anticommutators_hold = false;
        out.notes.push_back("anticommutator fails for pair (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
        break;
      }
    }
  }

  unsigned d = 0;
  unsigned pow2 = 1;
  while (pow2 < n) {
    pow2 *= 2;
    ++d;
  }
  out.membership_applicable = (pow2 == n) && n >= 2;
  if (!out.membership_applicable) {
    out.notes.push_back("power membership applies only when n is a power of two >= 2");
    return out;
  }

  out.y_power_exponent = 2 * (d + 1);
  out.pair_power_exponent = n;

  auto group = FiniteGroup<Field>::cyclic_permutation(ring);
  GroupSmashAlgebra<Field> alg(ring, group);
  BlockLadderOptions opts;
  opts.max_degree = 2 * n;
  opts.keep_blocks = true;
  CyclicBlockLadder<Field> ladder(ring, group,
                                  field.root_power(static_cast<long>(field.order() / n)),
                                  opts);

  out.y_powers_in_ideal = true;
  out.pair_powers_in_ideal = true;
  for (unsigned s = 0; s < n; ++s) {
    Element ypow = element_power(ring, y[s], out.y_power_exponent);
    if (!ladder.contains(embed_ring_element(alg, ypow))) {
      out.y_powers_in_ideal = false;
      out.notes.push_back("y_" + std::to_string(s) + "^" +
                          std::to_string(out.y_power_exponent) + " is not in the ideal");
    }
    Element pair = element_multiply(ring, y[s], y[(s + n - 1) % n]);
    Element pairpow = element_power(ring, pair, out.pair_power_exponent);
    if (!ladder.contains(embed_ring_element(alg, pairpow))) {
      out.pair_powers_in_ideal = false;
      out.notes.push_back("(y_" + std::to_string(s) + " y_" + std::to_string((s + n - 1) % n) +
                          ")^" + std::to_string(out.pair_power_exponent) +
                          " is not in the ideal");
    }
  }
  return out;
}

} // namespace skewsmash
