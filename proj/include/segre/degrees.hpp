#pragma once

// Projective degrees g_a(X,Y) as point counts, dimensions and classes of
// schemes by slicing, and the assembled classes G(X,Y) and Lambda(X,Y).

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "segre/chow.hpp"
#include "segre/errors.hpp"
#include "segre/poly.hpp"
#include "segre/random.hpp"
#include "segre/zerodim.hpp"

namespace segre {

/// Randomness and retry policy shared by every randomized computation.
struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t prime = kDefaultPrime;
  /// Extra attempts after the first two (which must agree to accept).
  int retries = 5;

  /// Independent prime used on the third attempt.
  std::uint64_t alternate_prime() const { return prime == kSecondPrime ? kDefaultPrime : kSecondPrime; }
  int max_attempts() const { return 2 + std::max(retries, 0); }
};

/// How the common multidegree alpha is chosen when X and Y are combined.
enum class AlphaPolicy {
  /// Componentwise max of X's and Y's generator multidegrees.
  Joint,
  /// X's own generator multidegrees only.
  Own,
};

namespace detail {

/// Copy p into a (possibly larger) ambient, zero-padding exponents.
inline PolyFp to_fp(const Poly& p, const Ambient& target, const PrimeField& f) {
  PolyFp out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents padded(target.num_vars(), 0);
    std::copy(e.begin(), e.end(), padded.begin());
    out.add_term(std::move(padded), f.map(c));
  }
  return out;
}

/// The ambient with one extra P^0 factor whose single variable is T.
inline Ambient with_t(const Ambient& a) {
  std::vector<int> dims = a.factor_dims();
  dims.push_back(0);
  return Ambient(std::move(dims));
}

inline std::string describe(const MultiIndex& a) {
  std::string s = "(";
  for (std::size_t j = 0; j < a.size(); ++j) s += (j ? "," : "") + std::to_string(a[j]);
  return s + ")";
}

/// Linear forms L^a (a_j general forms in block j) and the dehomogenizing
/// forms l_j - 1, appended in a fixed order.
inline void append_slices(std::vector<PolyFp>& gens, const Ambient& base, const Ambient& target,
                          const MultiIndex& a, const PrimeField& f, Rng& rng) {
  for (std::size_t j = 0; j < base.num_factors(); ++j) {
    for (int k = 0; k < a[j]; ++k) gens.push_back(general_linear_form(f, target, j, rng));
  }
  for (std::size_t j = 0; j < base.num_factors(); ++j) {
    gens.push_back(general_linear_form(f, target, j, rng) - PolyFp::constant(target, f.one()));
  }
}

inline void check_index(const Ambient& a, const MultiIndex& idx) {
  if (idx.size() != a.num_factors()) throw PreconditionError("multi-index length differs from factor count");
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] < 0 || idx[j] > a.factor_dim(j)) throw PreconditionError("multi-index out of range " + describe(idx));
  }
}

}  // namespace detail

/// Runs `attempt(prime, seed)` until some finite value has been seen twice.
/// Attempts 0 and 1 use the configured prime, attempt 2 the alternate prime.
template <class Attempt>
std::uint64_t agreed_count(const RunConfig& cfg, std::string_view purpose, const MultiIndex& index,
                           Attempt&& attempt) {
  std::vector<std::uint64_t> seen;
  std::ostringstream log;
  for (int k = 0; k < cfg.max_attempts(); ++k) {
    const std::uint64_t prime = k == 2 ? cfg.alternate_prime() : cfg.prime;
    const std::uint64_t seed = derive_seed(cfg.seed, purpose, index, k, prime);
    const CountResult r = attempt(prime, seed);
    if (!r.is_finite()) {
      log << " infinite";
      continue;
    }
    log << " " << r.count();
    if (std::find(seen.begin(), seen.end(), r.count()) != seen.end()) return r.count();
    seen.push_back(r.count());
  }
  throw GenericityError(std::string(purpose) + " " + detail::describe(index) +
                        ": no two randomizations agreed after " + std::to_string(cfg.max_attempts()) +
                        " attempts; counts:" + log.str());
}

/// dim_k of I + I_{L^a} + A for one random choice of slices.
inline CountResult slice_count(const Ideal& ideal, const MultiIndex& a, std::uint64_t prime, std::uint64_t seed) {
  const PrimeField f(prime);
  Rng rng(seed);
  const Ambient& amb = ideal.ambient;
  std::vector<PolyFp> gens;
  for (const auto& g : ideal.generators) {
    if (!g.is_zero()) gens.push_back(detail::to_fp(g, amb, f));
  }
  detail::append_slices(gens, amb, amb, a, f, rng);
  return quotient_dimension(AffineIdeal{amb, prime, std::move(gens)});
}

/// Degree of the dimension-|a| part along a: the number of points (with
/// multiplicity) of the scheme on a general P^{n-a} in the affine chart.
inline std::uint64_t slice_degree(const Ideal& ideal, const MultiIndex& a, const RunConfig& cfg) {
  detail::check_index(ideal.ambient, a);
  return agreed_count(cfg, "slice", a, [&](std::uint64_t p, std::uint64_t s) { return slice_count(ideal, a, p, s); });
}

namespace detail {

/// A single nonconstant generator on factors of positive dimension: the
/// scheme is the divisor of its multidegree.
inline std::optional<Multidegree> principal_divisor(const Ideal& ideal) {
  const auto gens = ideal.nonzero_generators();
  if (gens.size() != 1) return std::nullopt;
  for (int n : ideal.ambient.factor_dims()) {
    if (n < 1) return std::nullopt;
  }
  auto d = multidegree_of(gens.front());
  if (!std::holds_alternative<Multidegree>(d)) return std::nullopt;
  if (std::get<Multidegree>(d).total() == 0) return std::nullopt;
  return std::get<Multidegree>(d);
}

}  // namespace detail

/// Probes levels k = dim(ambient), ..., 0 and returns the first one at which
/// some slice count is positive; -1 for the empty scheme.
inline int probe_dimension(const Ideal& ideal, const RunConfig& cfg) {
  const Ambient& amb = ideal.ambient;
  if (ideal.is_zero_ideal()) return amb.dimension();
  if (detail::principal_divisor(ideal)) return amb.dimension() - 1;
  for (int k = amb.dimension(); k >= 0; --k) {
    for (const auto& a : multi_indices(amb, k)) {
      CountResult r = CountResult::infinite();
      // One re-randomization on a positive-dimensional slice.
      for (int attempt = 0; attempt < 2 && !r.is_finite(); ++attempt) {
        r = slice_count(ideal, a, cfg.prime, derive_seed(cfg.seed, "dim", a, attempt, cfg.prime));
      }
      if (!r.is_finite()) {
        throw GenericityError("dimension probe at " + detail::describe(a) + " stayed positive-dimensional");
      }
      if (r.count() > 0) return k;
    }
  }
  return -1;
}

inline int dimension_of(const SchemeSpec& s, const RunConfig& cfg) {
  if (s.dimension) return *s.dimension;
  return probe_dimension(s.ideal, cfg);
}

/// [S] = sum_{|a| = dim S} y_a h^{n-a}.
inline ChowClass class_of(const SchemeSpec& s, const RunConfig& cfg) {
  const Ambient& amb = s.ambient();
  if (s.ideal.is_zero_ideal()) return ChowClass::one(amb);
  if (auto d = detail::principal_divisor(s.ideal)) return ChowClass::divisor(amb, *d);
  const int dim = dimension_of(s, cfg);
  ChowClass c(amb);
  if (dim < 0) return c;
  for (const auto& a : multi_indices(amb, dim)) {
    c.add_term(ChowClass::complement(amb, a), BigInt(slice_degree(s.ideal, a, cfg)));
  }
  return c;
}

/// One randomized count of I_Y + I_{L^a} + A + <P_1..P_{N-|a|}, 1 - T P_0>.
inline CountResult projective_degree_count(const std::vector<Poly>& x_gens, const Ideal& y, const MultiIndex& a,
                                           int dim_y, std::uint64_t prime, std::uint64_t seed) {
  const PrimeField f(prime);
  Rng rng(seed);
  const Ambient& amb = y.ambient;
  const Ambient amb_t = detail::with_t(amb);
  std::vector<PolyFp> gens;
  for (const auto& g : y.generators) {
    if (!g.is_zero()) gens.push_back(detail::to_fp(g, amb_t, f));
  }
  detail::append_slices(gens, amb, amb_t, a, f, rng);
  std::vector<PolyFp> xs;
  for (const auto& g : x_gens) xs.push_back(detail::to_fp(g, amb_t, f));
  const int count = dim_y - total(a);
  for (int k = 0; k < count; ++k) gens.push_back(general_combination(f, xs, rng));
  const PolyFp p0 = general_combination(f, xs, rng);
  const PolyFp t = PolyFp::variable(amb_t, amb_t.num_vars() - 1, f.one());
  gens.push_back(PolyFp::constant(amb_t, f.one()) - t * p0);
  return quotient_dimension(AffineIdeal{amb_t, prime, std::move(gens)});
}

/// g_a(X, Y) for an alpha-homogeneous X; Y of dimension dim_y.
inline std::uint64_t projective_degree(const Ideal& x, const SchemeSpec& y, const MultiIndex& a, int dim_y,
                                       const RunConfig& cfg) {
  detail::check_index(y.ambient(), a);
  if (!(x.ambient == y.ambient())) throw DomainMismatch("X and Y live in different ambients");
  if (total(a) > dim_y) throw PreconditionError("projective degree index exceeds dim Y");
  const auto gens = x.nonzero_generators();
  if (gens.empty()) return 0;  // 1 - T*0 = 1
  std::optional<Multidegree> alpha;
  for (const auto& g : gens) {
    const Multidegree d = require_multidegree(g);
    if (alpha && !(d == *alpha)) throw PreconditionError("X must be alpha-homogeneous (run alpha_homogenize first)");
    alpha = d;
  }
  return agreed_count(cfg, "projdeg", a, [&](std::uint64_t p, std::uint64_t s) {
    return projective_degree_count(gens, y.ideal, a, dim_y, p, s);
  });
}

struct DegreeTable {
  Ambient ambient;
  int dim_y = 0;
  int bound = 0;
  std::map<MultiIndex, std::uint64_t> entries;
};

/// G(X,Y) = sum g_a h^{n-a} over the computed entries.
inline ChowClass shadow(const DegreeTable& t) {
  ChowClass g(t.ambient);
  for (const auto& [a, v] : t.entries) g.add_term(ChowClass::complement(t.ambient, a), BigInt(v));
  return g;
}

inline DegreeTable degree_table(const Ideal& x, const SchemeSpec& y, int bound, int dim_y, const RunConfig& cfg) {
  if (bound > dim_y) throw PreconditionError("table bound exceeds dim Y");
  DegreeTable t{y.ambient(), dim_y, bound, {}};
  for (int k = 0; k <= bound; ++k) {
    for (const auto& a : multi_indices(y.ambient(), k)) t.entries[a] = projective_degree(x, y, a, dim_y, cfg);
  }
  return t;
}

/// alpha chosen by policy: X's own generator degrees, or jointly with Y's.
inline Multidegree choose_alpha(const Ideal& x, const Ideal& y, AlphaPolicy policy) {
  Multidegree alpha = x.max_multidegree();
  if (policy == AlphaPolicy::Joint) alpha = componentwise_max(alpha, y.max_multidegree());
  return alpha;
}

/// Everything the Segre/multiplicity machinery needs about a pair (X, Y).
struct LambdaData {
  Multidegree alpha;
  Ideal x_alpha;  // X rewritten with all generators of multidegree alpha
  int dim_x = -1;
  int dim_y = -1;
  ChowClass class_y;
  DegreeTable table;
  ChowClass lambda;
};

/// Lambda(X,Y) = sum_{k<=N} alpha^k [Y] - G(X,Y), with the entries of
/// dimension above dim X set to zero. dim X is probed on I_X + I_Y unless given.
inline LambdaData lambda_data(const Ideal& x, const SchemeSpec& y, const RunConfig& cfg,
                              AlphaPolicy policy = AlphaPolicy::Joint, std::optional<int> dim_x = std::nullopt,
                              std::optional<int> table_bound = std::nullopt) {
  if (!(x.ambient == y.ambient())) throw DomainMismatch("X and Y live in different ambients");
  const Ambient& amb = y.ambient();
  LambdaData d;
  d.dim_y = dimension_of(y, cfg);
  d.dim_x = dim_x ? *dim_x : probe_dimension(ideal_sum(x, y.ideal), cfg);
  d.class_y = class_of(y, cfg);
  d.alpha = choose_alpha(x, y.ideal, policy);
  d.lambda = ChowClass(amb);
  if (d.dim_y < 0) {
    d.table = DegreeTable{amb, d.dim_y, -1, {}};
    return d;
  }
  d.x_alpha = x.is_zero_ideal() ? x : alpha_homogenize(x, d.alpha);
  const int bound = std::clamp(table_bound.value_or(d.dim_x), -1, d.dim_y);
  d.table = bound >= 0 ? degree_table(d.x_alpha, y, bound, d.dim_y, cfg) : DegreeTable{amb, d.dim_y, bound, {}};

  const ChowClass alpha_class = ChowClass::divisor(amb, d.alpha);
  ChowClass total_class(amb);
  ChowClass power = d.class_y;
  for (int k = 0; k <= d.dim_y; ++k) {
    total_class += power;
    power *= alpha_class;
  }
  for (int k = 0; k <= std::min(d.dim_x, d.dim_y); ++k) {
    for (const auto& a : multi_indices(amb, k)) {
      auto it = d.table.entries.find(a);
      const BigInt g = it == d.table.entries.end() ? BigInt(0) : BigInt(it->second);
      d.lambda.add_term(ChowClass::complement(amb, a), total_class.coefficient_at(a) - g);
    }
  }
  return d;
}

inline ChowClass lambda_class(const Ideal& x, const SchemeSpec& y, const RunConfig& cfg,
                              AlphaPolicy policy = AlphaPolicy::Joint) {
  return lambda_data(x, y, cfg, policy).lambda;
}

}  // namespace segre
