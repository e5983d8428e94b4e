#include "skewsmash/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <type_traits>

#include "skewsmash/blocks.hpp"
#include "skewsmash/identity_suite.hpp"
#include "skewsmash/trace.hpp"
#include "skewsmash/version.hpp"

namespace skewsmash {

namespace {

using nlohmann::ordered_json;

constexpr unsigned estimator_window = 4;

RationalField::Elem eval_literal(const RationalField& field, const ScalarLiteral& lit) {
  if (lit.is_root_power) throw config_error("zeta literals need a cyclotomic field");
  return field.from_rational(lit.value);
}

CyclotomicField::Elem eval_literal(const CyclotomicField& field, const ScalarLiteral& lit) {
  if (lit.is_root_power) return field.root_power(lit.root_exponent);
  return field.from_rational(lit.value);
}

PrimeFieldElement eval_literal(const PrimeField& field, const ScalarLiteral& lit) {
  if (lit.is_root_power) throw config_error("zeta literals need a cyclotomic field");
  return field.from_rational(lit.value);
}

// Reduction map for modular certificate runs: rationals reduce directly and
// root-of-unity literals go through a fixed element of the same
// multiplicative order, which exists because certificate primes are sampled
// with root_order dividing p - 1.
class ModularEval {
public:
  ModularEval(const PrimeField& field, unsigned root_order) : field_(&field), order_(root_order) {
    if (order_ > 1) root_ = field.root_of_unity(order_);
  }

  PrimeFieldElement operator()(const ScalarLiteral& lit) const {
    if (!lit.is_root_power) return field_->from_rational(lit.value);
    if (order_ == 0) throw config_error("zeta literals need a cyclotomic field");
    long e = lit.root_exponent % static_cast<long>(order_);
    if (e < 0) e += static_cast<long>(order_);
    return field_->pow_u(root_, static_cast<std::uint64_t>(e));
  }

private:
  const PrimeField* field_;
  unsigned order_;
  PrimeFieldElement root_{};
};

template <class F>
auto exact_eval(const F& field) {
  return [&field](const ScalarLiteral& lit) { return eval_literal(field, lit); };
}

template <class F, class Eval>
SkewPolyRing<F> make_ring(const F& field, const ExperimentConfig& cfg, const Eval& ev) {
  switch (cfg.q_choice) {
    case QChoice::minus_one:
      return SkewPolyRing<F>::minus_one(field, cfg.n);
    case QChoice::commutative:
      return SkewPolyRing<F>::commutative(field, cfg.n);
    case QChoice::matrix:
      break;
  }
  std::vector<std::vector<typename F::Elem>> q;
  q.reserve(cfg.q_matrix.size());
  for (const auto& row : cfg.q_matrix) {
    std::vector<typename F::Elem> r;
    r.reserve(row.size());
    for (const auto& lit : row) r.push_back(ev(lit));
    q.push_back(std::move(r));
  }
  return SkewPolyRing<F>::with_parameters(field, std::move(q));
}

template <class F, class Eval>
FiniteGroup<F> make_group(const SkewPolyRing<F>& ring, const ExperimentConfig& cfg,
                          const Eval& ev) {
  if (cfg.group_kind == GroupKind::cyclic_permutation) {
    return FiniteGroup<F>::cyclic_permutation(ring);
  }
  std::vector<MonomialAutomorphism<F>> gens;
  gens.reserve(cfg.generators.size());
  for (const auto& spec : cfg.generators) {
    MonomialAutomorphism<F> g;
    g.perm = spec.perm;
    g.scalars.reserve(spec.scalars.size());
    for (const auto& lit : spec.scalars) g.scalars.push_back(ev(lit));
    gens.push_back(std::move(g));
  }
  return FiniteGroup<F>(ring, gens);
}

std::optional<RationalField::Elem> block_root(const RationalField& field, std::size_t m) {
  if (m == 1) return field.one();
  if (m == 2) return field.from_int(-1);
  return std::nullopt;
}

std::optional<CyclotomicField::Elem> block_root(const CyclotomicField& field, std::size_t m) {
  if (m == 0) return std::nullopt;
  if (field.order() % m == 0) {
    return field.root_power(static_cast<long>(field.order() / m));
  }
  if (m == 1) return field.one();
  if (m == 2) return field.from_int(-1);
  return std::nullopt;
}

std::optional<PrimeFieldElement> block_root(const PrimeField& field, std::size_t m) {
  if (m == 0) return std::nullopt;
  if ((field.modulus() - 1) % m == 0) return field.root_of_unity(m);
  return std::nullopt;
}

struct RawRun {
  std::vector<DegreeRecord> table;
  bool certified = false;
  unsigned zero_degree = 0;
  std::string engine;
};

// One ladder execution over a concrete field. When expected_group_size is
// set (modular certificate runs), a group whose closure does not reproduce
// the exact group's size means the scalar reduction collapsed two distinct
// elements, and the prime is unusable.
template <class F, class Eval>
RawRun ladder_run(const F& field, const ExperimentConfig& cfg, const Eval& ev,
                  std::optional<std::size_t> expected_group_size) {
  auto ring = make_ring(field, cfg, ev);
  RawRun out;
  if (cfg.smash_kind == SmashKind::dual) {
    DualGroupSmashAlgebra<F> alg(ring, CyclicGrading{cfg.n, cfg.grading});
    LadderOptions opts;
    opts.max_degree = cfg.max_degree;
    opts.keep_slices = false;
    IdealLadder<F, DualGroupSmashAlgebra<F>> ladder(alg, opts);
    out.table = ladder.table();
    out.certified = ladder.certified_finite();
    if (out.certified) out.zero_degree = ladder.zero_degree();
    out.engine = "full_smash";
    return out;
  }
  auto group = make_group(ring, cfg, ev);
  if (expected_group_size && group.size() != *expected_group_size) {
    throw math_error("scalar reduction collapses the group from " +
                     std::to_string(*expected_group_size) + " to " +
                     std::to_string(group.size()) + " elements");
  }
  auto omega = block_root(field, group.size());
  if (group.size() > 1 && omega && group.cyclic_generator()) {
    BlockLadderOptions opts;
    opts.max_degree = cfg.max_degree;
    opts.keep_blocks = false;
    CyclicBlockLadder<F> ladder(ring, group, *omega, opts);
    out.table = ladder.table();
    out.certified = ladder.certified_finite();
    if (out.certified) out.zero_degree = ladder.zero_degree();
    out.engine = "character_blocks";
    return out;
  }
  GroupSmashAlgebra<F> alg(ring, group);
  LadderOptions opts;
  opts.max_degree = cfg.max_degree;
  opts.keep_slices = false;
  IdealLadder<F, GroupSmashAlgebra<F>> ladder(alg, opts);
  out.table = ladder.table();
  out.certified = ladder.certified_finite();
  if (out.certified) out.zero_degree = ladder.zero_degree();
  out.engine = "full_smash";
  return out;
}

std::vector<Rational> unit_constraints(const ExperimentConfig& cfg) {
  std::vector<Rational> out;
  for (const auto& row : cfg.q_matrix) {
    for (const auto& lit : row) {
      if (!lit.is_root_power) out.push_back(lit.value);
    }
  }
  for (const auto& gen : cfg.generators) {
    for (const auto& lit : gen.scalars) {
      if (!lit.is_root_power) out.push_back(lit.value);
    }
  }
  return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return a | b;
  return a / std::gcd(a, b) * b;
}

// ---------- rendering helpers ----------

template <class F>
std::string poly_to_string(const F& field, const PolyCoeffs<F>& p) {
  bool any = false;
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (field.is_zero(p[k])) continue;
    std::string token = field.to_string(p[k]);
    std::string term;
    if (k == 0) {
      term = token;
    } else {
      std::string var = (k == 1) ? "t" : "t^" + std::to_string(k);
      if (token == "1") {
        term = var;
      } else if (token == "-1") {
        term = "-" + var;
      } else if (token.find(' ') != std::string::npos ||
                 token.find('+') != std::string::npos) {
        term = "(" + token + ")*" + var;
      } else {
        term = token + "*" + var;
      }
    }
    if (!any) {
      out = term;
      any = true;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return any ? out : "0";
}

template <class F>
std::string rational_function_to_string(const F& field, const RationalFunction<F>& rf) {
  std::string den = poly_to_string(field, rf.den);
  if (den == "1") return poly_to_string(field, rf.num);
  return "(" + poly_to_string(field, rf.num) + ") / (" + den + ")";
}

template <class F>
ordered_json series_to_json(const F& field, const TruncatedSeries<F>& s, unsigned upto) {
  ordered_json arr = ordered_json::array();
  for (unsigned d = 0; d < s.coeffs.size() && d <= upto; ++d) {
    arr.push_back(field.to_string(s.coeffs[d]));
  }
  return arr;
}

ordered_json table_to_json(const std::vector<DegreeRecord>& table) {
  ordered_json arr = ordered_json::array();
  for (const auto& rec : table) {
    ordered_json row;
    row["degree"] = rec.degree;
    row["dim_B"] = rec.dim_total;
    row["dim_I"] = rec.dim_ideal;
    row["h"] = rec.h;
    arr.push_back(std::move(row));
  }
  return arr;
}

ordered_json summary_to_json(const PertinencySummary& s, FieldPolicy policy) {
  ordered_json res;
  res["status"] = "ok";
  res["n"] = s.ring_vars;
  res["degree_reached"] = s.table.back().degree;
  res["engine"] = s.engine;
  res["arithmetic"] = s.arithmetic;
  res["field_policy"] = field_policy_name(policy);
  res["estimator_window"] = s.estimator_window;
  res["table"] = table_to_json(s.table);
  ordered_json h = ordered_json::array();
  for (const auto& rec : s.table) h.push_back(rec.h);
  res["hilbert_quotient"] = std::move(h);
  res["classification"] = s.classification;
  if (s.certified) res["zero_degree"] = s.zero_degree;
  if (s.gk_quotient) {
    res["gkdim_quotient"] = *s.gk_quotient;
  } else {
    res["gkdim_quotient"] = nullptr;
  }
  if (s.pertinency) {
    res["pertinency"] = *s.pertinency;
  } else {
    res["pertinency"] = nullptr;
  }
  res["pertinency_exact"] = s.pertinency_exact;
  if (!s.certificate_primes.empty()) {
    ordered_json primes = ordered_json::array();
    for (auto p : s.certificate_primes) primes.push_back(p);
    res["certificate_primes"] = std::move(primes);
  }
  ordered_json floors = ordered_json::array();
  for (const auto& [kind, value] : s.lower_bounds) {
    ordered_json f;
    f["kind"] = kind;
    f["value"] = value;
    floors.push_back(std::move(f));
  }
  res["floors"] = std::move(floors);
  if (!s.notes.empty()) {
    ordered_json notes = ordered_json::array();
    for (const auto& n : s.notes) notes.push_back(n);
    res["notes"] = std::move(notes);
  }
  return res;
}

// ---------- per-task implementations ----------

// Trace series for every group element at one shared degree, reused by the
// molien, trace, reflection, and hdet tasks.
template <class F>
struct SeriesCache {
  unsigned degree = 0;
  std::vector<TruncatedSeries<F>> series;
  std::vector<RationalFunction<F>> rationals;
};

template <class F>
const SeriesCache<F>& ensure_series(const F& field, const SkewPolyRing<F>& ring,
                                    const FiniteGroup<F>& group, unsigned max_degree,
                                    std::optional<SeriesCache<F>>& cache) {
  if (cache) return *cache;
  SeriesCache<F> built;
  unsigned cap = ring.var_count() + 2;
  built.degree = std::max(max_degree, 2 * cap + 3);
  built.series.reserve(group.size());
  built.rationals.reserve(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    built.series.push_back(trace_series(ring, group.element(i), built.degree));
    built.rationals.push_back(pade_reconstruct(field, built.series.back(), cap, cap));
  }
  cache = std::move(built);
  return *cache;
}

template <class F>
RationalFunction<F> rational_sum(const F& field, const std::vector<RationalFunction<F>>& parts,
                                 const typename F::Elem& scale) {
  RationalFunction<F> acc;
  acc.num = {field.zero()};
  acc.den = {field.one()};
  for (const auto& rf : parts) {
    RationalFunction<F> next;
    next.num = poly_add(field, poly_mul(field, acc.num, rf.den),
                        poly_mul(field, rf.num, acc.den));
    next.den = poly_mul(field, acc.den, rf.den);
    canonicalize(field, next);
    acc = std::move(next);
  }
  for (auto& c : acc.num) c = field.mul(c, scale);
  canonicalize(field, acc);
  return acc;
}

template <class F>
ordered_json molien_task(const F& field, const SkewPolyRing<F>& ring,
                         const FiniteGroup<F>& group, unsigned max_degree,
                         std::optional<SeriesCache<F>>& cache) {
  const auto& sc = ensure_series(field, ring, group, max_degree, cache);
  typename F::Elem order = field.from_int(static_cast<long>(group.size()));
  if (field.is_zero(order)) {
    throw math_error("group order vanishes in the field; Molien series undefined");
  }
  typename F::Elem inv_order = field.inv(order);
  TruncatedSeries<F> avg;
  avg.coeffs.assign(max_degree + 1, field.zero());
  for (const auto& s : sc.series) {
    for (unsigned d = 0; d <= max_degree; ++d) field.add_assign(avg.coeffs[d], s.coeffs[d]);
  }
  for (auto& c : avg.coeffs) c = field.mul(c, inv_order);

  ordered_json res;
  res["status"] = "ok";
  res["series"] = series_to_json(field, avg, max_degree);
  auto rf = rational_sum(field, sc.rationals, inv_order);
  res["rational_function"] = rational_function_to_string(field, rf);
  return res;
}

template <class F>
ordered_json trace_task(const F& field, const SkewPolyRing<F>& ring,
                        const FiniteGroup<F>& group, unsigned max_degree,
                        std::optional<SeriesCache<F>>& cache) {
  const auto& sc = ensure_series(field, ring, group, max_degree, cache);
  ordered_json res;
  res["status"] = "ok";
  ordered_json elements = ordered_json::array();
  for (std::size_t i = 0; i < group.size(); ++i) {
    ordered_json entry;
    entry["element"] = "g" + std::to_string(i);
    entry["order"] = group.element_order(i);
    ordered_json perm = ordered_json::array();
    for (unsigned v : group.element(i).perm) perm.push_back(v + 1);
    entry["perm"] = std::move(perm);
    entry["series"] = series_to_json(field, sc.series[i], max_degree);
    entry["rational_function"] = rational_function_to_string(field, sc.rationals[i]);
    elements.push_back(std::move(entry));
  }
  res["elements"] = std::move(elements);
  return res;
}

template <class F>
ordered_json reflection_task(const F& field, const SkewPolyRing<F>& ring,
                             const FiniteGroup<F>& group, unsigned max_degree,
                             std::optional<SeriesCache<F>>& cache) {
  if (group.size() < 2) {
    throw config_error("reflection number needs a nontrivial group");
  }
  const auto& sc = ensure_series(field, ring, group, max_degree, cache);
  long n = static_cast<long>(ring.var_count());
  ordered_json res;
  res["status"] = "ok";
  ordered_json per = ordered_json::array();
  ordered_json quasi = ordered_json::array();
  ordered_json biquasi = ordered_json::array();
  long best = 0;
  bool first = true;
  for (std::size_t i = 0; i < group.size(); ++i) {
    long pole = pole_order_at_one(field, sc.rationals[i]);
    long r = n - pole;
    ordered_json entry;
    entry["element"] = "g" + std::to_string(i);
    entry["pole_order"] = pole;
    entry["reflection_number"] = r;
    per.push_back(std::move(entry));
    if (i == 0) continue;
    if (r == 1) quasi.push_back("g" + std::to_string(i));
    if (r == 2) biquasi.push_back("g" + std::to_string(i));
    if (first || r < best) {
      best = r;
      first = false;
    }
  }
  res["per_element"] = std::move(per);
  res["group_reflection_number"] = best;
  res["quasi_reflections"] = std::move(quasi);
  res["quasi_bireflections"] = std::move(biquasi);
  return res;
}

template <class F>
ordered_json hdet_task(const F& field, const SkewPolyRing<F>& ring, const FiniteGroup<F>& group,
                       unsigned max_degree, std::optional<SeriesCache<F>>& cache) {
  const auto& sc = ensure_series(field, ring, group, max_degree, cache);
  long n = static_cast<long>(ring.var_count());
  typename F::Elem sign = (n % 2 == 0) ? field.one() : field.from_int(-1);
  ordered_json res;
  res["status"] = "ok";
  ordered_json per = ordered_json::array();
  bool all_trivial = true;
  for (std::size_t i = 0; i < group.size(); ++i) {
    auto lt = leading_term_at_infinity(field, sc.rationals[i]);
    if (lt.exponent != -n) {
      throw math_error("trace of g" + std::to_string(i) + " does not vanish to order " +
                       std::to_string(n) + " at infinity; homological determinant undefined");
    }
    typename F::Elem h = field.div(sign, lt.coeff);
    if (!field.equal(h, field.one())) all_trivial = false;
    ordered_json entry;
    entry["element"] = "g" + std::to_string(i);
    entry["hdet"] = field.to_string(h);
    per.push_back(std::move(entry));
  }
  res["per_element"] = std::move(per);
  res["all_trivial"] = all_trivial;
  return res;
}

template <class F>
ordered_json pertinency_task(const F& field, const ExperimentConfig& cfg,
                             const RunOptions& opts) {
  auto ev = exact_eval(field);
  std::optional<std::size_t> group_size;
  bool group_cyclic = false;
  if (cfg.smash_kind == SmashKind::group) {
    auto ring = make_ring(field, cfg, ev);
    auto group = make_group(ring, cfg, ev);
    group_size = group.size();
    group_cyclic = group.cyclic_generator().has_value();
  }

  FieldPolicy policy = cfg.field_policy;
  std::vector<std::string> pre_notes;
  if (policy != FieldPolicy::exact && std::is_same_v<F, PrimeField>) {
    pre_notes.push_back("coefficient field is already modular; running the exact policy");
    policy = FieldPolicy::exact;
  }

  std::uint64_t residue_modulus = 1;
  if (cfg.field_kind == ConfigFieldKind::cyclotomic) {
    residue_modulus = lcm_u64(residue_modulus, cfg.cyclotomic_order);
  }
  if (group_size && group_cyclic) {
    residue_modulus = lcm_u64(residue_modulus, *group_size);
  }
  unsigned root_order =
      cfg.field_kind == ConfigFieldKind::cyclotomic ? cfg.cyclotomic_order : 0;
  auto units = unit_constraints(cfg);

  auto modular_run = [&](std::uint64_t p) -> RawRun {
    PrimeField pf(p);
    ModularEval mev(pf, root_order);
    return ladder_run(pf, cfg, mev, group_size);
  };

  PertinencySummary summary;
  if (policy == FieldPolicy::exact) {
    RawRun raw = ladder_run(field, cfg, ev, std::nullopt);
    summary = summarize_pertinency(cfg.n, std::move(raw.table), raw.certified, raw.zero_degree,
                                   estimator_window);
    summary.engine = raw.engine;
    summary.arithmetic = field.name();
  } else if (policy == FieldPolicy::modular_then_exact) {
    auto pool = sample_certificate_primes(4, opts.seed, residue_modulus,
                                          residue_modulus > 1 ? 1 : 0, units);
    std::optional<RawRun> scout;
    std::uint64_t scout_prime = 0;
    for (std::uint64_t p : pool) {
      try {
        scout = modular_run(p);
        scout_prime = p;
        break;
      } catch (const math_error& e) {
        pre_notes.push_back("certificate prime " + std::to_string(p) + " skipped: " + e.what());
      } catch (const config_error& e) {
        pre_notes.push_back("certificate prime " + std::to_string(p) + " skipped: " + e.what());
      }
    }
    RawRun raw = ladder_run(field, cfg, ev, std::nullopt);
    summary = summarize_pertinency(cfg.n, std::move(raw.table), raw.certified, raw.zero_degree,
                                   estimator_window);
    summary.engine = raw.engine;
    summary.arithmetic = field.name();
    if (scout) {
      summary.certificate_primes = {scout_prime};
      if (scout->certified) {
        summary.notes.push_back("modular scout over gf(" + std::to_string(scout_prime) +
                                ") vanished at degree " + std::to_string(scout->zero_degree) +
                                "; the exact ladder confirmed it");
      } else {
        summary.notes.push_back("modular scout over gf(" + std::to_string(scout_prime) +
                                ") found no vanishing degree up to " +
                                std::to_string(cfg.max_degree));
      }
      if (scout->certified != summary.certified ||
          (scout->certified && scout->zero_degree != summary.zero_degree)) {
        summary.notes.push_back("scout and exact runs disagree on the vanishing degree; the "
                                "exact table is authoritative");
      }
    } else {
      summary.notes.push_back("no usable certificate prime; exact run only");
    }
  } else {
    auto pool = sample_certificate_primes(6, opts.seed, residue_modulus,
                                          residue_modulus > 1 ? 1 : 0, units);
    std::vector<RawRun> runs;
    std::vector<unsigned long long> used;
    for (std::uint64_t p : pool) {
      if (runs.size() == 3) break;
      try {
        runs.push_back(modular_run(p));
        used.push_back(p);
      } catch (const math_error& e) {
        pre_notes.push_back("certificate prime " + std::to_string(p) + " skipped: " + e.what());
      } catch (const config_error& e) {
        pre_notes.push_back("certificate prime " + std::to_string(p) + " skipped: " + e.what());
      }
    }
    if (runs.empty()) throw math_error("no usable certificate prime for the modular policy");
    std::vector<DegreeRecord> combined = runs.front().table;
    bool agree = true;
    for (std::size_t k = 1; k < runs.size(); ++k) {
      const auto& t = runs[k].table;
      for (std::size_t d = 0; d < combined.size(); ++d) {
        if (t[d].dim_ideal != combined[d].dim_ideal) agree = false;
        if (t[d].dim_ideal > combined[d].dim_ideal) {
          combined[d].dim_ideal = t[d].dim_ideal;
          combined[d].h = combined[d].dim_total - combined[d].dim_ideal;
        }
      }
    }
    bool certified = false;
    unsigned zero_degree = 0;
    for (const auto& rec : combined) {
      if (rec.h == 0) {
        certified = true;
        zero_degree = rec.degree;
        break;
      }
    }
    summary = summarize_pertinency(cfg.n, std::move(combined), certified, zero_degree,
                                   estimator_window);
    summary.engine = runs.front().engine;
    summary.arithmetic = "modular";
    summary.certificate_primes = used;
    summary.notes.push_back(
        agree ? "all certificate primes agree on every degree"
              : "certificate primes disagree; the table keeps the largest ideal dimensions");
    summary.notes.push_back("modular h values bound the exact quotient dimensions from above; "
                            "a zero entry certifies the exact value");
    if (runs.size() < 3) {
      summary.notes.push_back("only " + std::to_string(runs.size()) +
                              " certificate primes were usable");
    }
  }

  summary.notes.insert(summary.notes.begin(), pre_notes.begin(), pre_notes.end());

  std::size_t layers = cfg.smash_kind == SmashKind::group ? group_size.value_or(1) : cfg.n;
  if (cfg.smash_kind == SmashKind::dual && layers > 1 &&
      CyclicGrading{cfg.n, cfg.grading}.degrees_generate()) {
    summary.lower_bounds.push_back({"domain", 1});
  }
  if (cfg.smash_kind == SmashKind::group && cfg.group_kind == GroupKind::cyclic_permutation &&
      cfg.q_choice == QChoice::minus_one && cfg.n >= 2) {
    long floor = cyclic_skew_totient_floor(cfg.n);
    summary.lower_bounds.push_back({"totient", floor});
    if (cfg.n % 4 == 0) {
      summary.notes.push_back("floor phi(" + std::to_string(cfg.n) +
                              ")/2 = " + std::to_string(floor));
    } else {
      summary.notes.push_back("floor phi(" + std::to_string(cfg.n) +
                              ") = " + std::to_string(floor));
    }
  }

  return summary_to_json(summary, cfg.field_policy);
}

template <class F>
ordered_json membership_task(const F& field, const ExperimentConfig& cfg,
                             const RunOptions& opts) {
  auto ev = exact_eval(field);
  auto ring = make_ring(field, cfg, ev);
  CyclicGrading grading{cfg.n, cfg.grading};
  if (!grading.degrees_generate()) {
    throw config_error("grading labels do not generate the cyclic group, so no suffix cover "
                       "exists");
  }
  DualGroupSmashAlgebra<F> alg(ring, grading);
  LadderOptions lopts;
  lopts.max_degree = cfg.max_degree;
  lopts.keep_slices = true;
  IdealLadder<F, DualGroupSmashAlgebra<F>> ladder(alg, lopts);

  unsigned m = grading.modulus;
  unsigned min_len = std::max(1u, m);
  unsigned max_len = std::min(2 * m + 2, cfg.max_degree);
  if (max_len < min_len) {
    throw config_error("max_degree " + std::to_string(cfg.max_degree) +
                       " is too small to fit covering sequences of length " +
                       std::to_string(min_len));
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<unsigned> len_dist(min_len, max_len);
  std::uniform_int_distribution<unsigned> gen_dist(0, cfg.n - 1);

  ordered_json res;
  res["status"] = "ok";
  res["samples"] = opts.membership_samples;
  res["seed"] = opts.seed;
  ordered_json failures = ordered_json::array();
  unsigned max_product_degree = 0;

  for (std::size_t sample = 0; sample < opts.membership_samples; ++sample) {
    std::vector<unsigned> letters;
    bool covered = false;
    for (unsigned attempt = 0; attempt < 500 && !covered; ++attempt) {
      unsigned len = len_dist(rng);
      letters.assign(len, 0);
      for (auto& l : letters) l = gen_dist(rng);
      std::set<unsigned> suffix_degrees;
      unsigned acc = 0;
      for (std::size_t w = letters.size(); w-- > 0;) {
        acc = (acc + grading.degrees[letters[w]]) % m;
        suffix_degrees.insert(acc);
      }
      covered = suffix_degrees.size() == m;
    }
    if (!covered) {
      throw math_error("could not sample a suffix-covering sequence; the grading labels are "
                       "too degenerate");
    }
    SmashElement<F> prod;
    {
      Monomial one(cfg.n, 0);
      AlgebraElement<F> unit = AlgebraElement<F>::monomial(field, one, field.one());
      prod = embed_ring_element(alg, unit);
    }
    for (unsigned letter : letters) {
      Monomial m1(cfg.n, 0);
      m1[letter] = 1;
      AlgebraElement<F> gen = AlgebraElement<F>::monomial(field, m1, field.one());
      prod = alg.multiply(prod, embed_ring_element(alg, gen));
    }
    max_product_degree = std::max<unsigned>(max_product_degree,
                                            static_cast<unsigned>(letters.size()));
    if (!ladder.contains(prod)) {
      ordered_json fail;
      ordered_json word = ordered_json::array();
      for (unsigned letter : letters) word.push_back(letter + 1);
      fail["word"] = std::move(word);
      failures.push_back(std::move(fail));
    }
  }
  res["max_product_degree"] = max_product_degree;
  res["all_contained"] = failures.empty();
  if (!failures.empty()) res["failures"] = std::move(failures);
  return res;
}

template <class F>
ordered_json lemma53_task(const F& field, const ExperimentConfig& cfg) {
  if constexpr (std::is_same_v<F, CyclotomicField>) {
    IdentitySuiteResult r = run_identity_suite(field, cfg.n);
    ordered_json res;
    res["status"] = "ok";
    res["n"] = r.n;
    res["cyclotomic_order"] = r.cyclotomic_order;
    res["anticommutator_pairs"] = r.pair_count;
    res["anticommutators_hold"] = r.anticommutators_hold;
    res["membership_applicable"] = r.membership_applicable;
    if (r.membership_applicable) {
      res["y_power_exponent"] = r.y_power_exponent;
      res["y_powers_in_ideal"] = r.y_powers_in_ideal;
      res["pair_power_exponent"] = r.pair_power_exponent;
      res["pair_powers_in_ideal"] = r.pair_powers_in_ideal;
    }
    if (!r.notes.empty()) {
      ordered_json notes = ordered_json::array();
      for (const auto& n : r.notes) notes.push_back(n);
      res["notes"] = std::move(notes);
    }
    return res;
  } else {
    (void)field;
    (void)cfg;
    throw config_error("task verify_lemma53 needs a cyclotomic coefficient field");
  }
}

// ---------- dispatch ----------

template <class F>
void run_tasks(const F& field, const ExperimentConfig& cfg, const RunOptions& opts,
               Report& report) {
  auto ev = exact_eval(field);
  std::optional<SkewPolyRing<F>> ring;
  std::optional<FiniteGroup<F>> group;
  bool needs_group_context =
      std::any_of(cfg.tasks.begin(), cfg.tasks.end(), [](TaskKind t) {
        return t == TaskKind::molien || t == TaskKind::trace || t == TaskKind::reflection ||
               t == TaskKind::hdet;
      });
  if (needs_group_context) {
    ring = make_ring(field, cfg, ev);
    group = make_group(*ring, cfg, ev);
  }
  std::optional<SeriesCache<F>> cache;

  for (TaskKind t : cfg.tasks) {
    auto start = std::chrono::steady_clock::now();
    ordered_json payload;
    try {
      switch (t) {
        case TaskKind::molien:
          payload = molien_task(field, *ring, *group, cfg.max_degree, cache);
          break;
        case TaskKind::trace:
          payload = trace_task(field, *ring, *group, cfg.max_degree, cache);
          break;
        case TaskKind::reflection:
          payload = reflection_task(field, *ring, *group, cfg.max_degree, cache);
          break;
        case TaskKind::hdet:
          payload = hdet_task(field, *ring, *group, cfg.max_degree, cache);
          break;
        case TaskKind::pertinency:
          payload = pertinency_task(field, cfg, opts);
          break;
        case TaskKind::membership:
          payload = membership_task(field, cfg, opts);
          break;
        case TaskKind::verify_lemma53:
          payload = lemma53_task(field, cfg);
          break;
      }
    } catch (const math_error& e) {
      payload = ordered_json::object();
      payload["status"] = "error";
      payload["error"] = e.what();
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report.results[task_name(t)] = std::move(payload);
    report.timings_ms[task_name(t)] = elapsed;
  }
}

template <class F>
void validate_with_field(const F& field, const ExperimentConfig& cfg) {
  auto ev = exact_eval(field);
  auto ring = make_ring(field, cfg, ev);
  bool wants = false;
  auto has_task = [&cfg](TaskKind t) {
    return std::find(cfg.tasks.begin(), cfg.tasks.end(), t) != cfg.tasks.end();
  };
  if (cfg.smash_kind == SmashKind::group) {
    auto group = make_group(ring, cfg, ev);
    wants = has_task(TaskKind::reflection);
    if (wants && group.size() < 2) {
      throw config_error("reflection number needs a nontrivial group");
    }
  } else {
    CyclicGrading grading{cfg.n, cfg.grading};
    DualGroupSmashAlgebra<F> alg(ring, grading);
    (void)alg;
    if (has_task(TaskKind::membership) && !grading.degrees_generate()) {
      throw config_error("grading labels do not generate the cyclic group, so no suffix cover "
                         "exists");
    }
  }
}

} // namespace

void validate_semantics(const ExperimentConfig& cfg) {
  switch (cfg.field_kind) {
    case ConfigFieldKind::rational:
      validate_with_field(RationalField{}, cfg);
      break;
    case ConfigFieldKind::cyclotomic:
      validate_with_field(CyclotomicField(cfg.cyclotomic_order), cfg);
      break;
    case ConfigFieldKind::prime:
      validate_with_field(PrimeField(cfg.prime), cfg);
      break;
  }
}

Report run_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
  validate_semantics(cfg);
  Report report;
  report.config = config_to_json(cfg);
  report.results = ordered_json::object();
  report.timings_ms = ordered_json::object();
  report.version = tool_version;
  switch (cfg.field_kind) {
    case ConfigFieldKind::rational:
      run_tasks(RationalField{}, cfg, opts, report);
      break;
    case ConfigFieldKind::cyclotomic: {
      CyclotomicField field(cfg.cyclotomic_order);
      run_tasks(field, cfg, opts, report);
      break;
    }
    case ConfigFieldKind::prime: {
      PrimeField field(cfg.prime);
      run_tasks(field, cfg, opts, report);
      break;
    }
  }
  return report;
}

} // namespace skewsmash
