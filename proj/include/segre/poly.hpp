#pragma once

// Exact multigraded polynomials over Q and F_p on a product of projective
// spaces, multidegree bookkeeping, general forms and alpha-homogenization.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "segre/errors.hpp"
#include "segre/random.hpp"

namespace segre {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Exponents = std::vector<int>;
using MultiIndex = std::vector<int>;

// ---------------------------------------------------------------------------
// Ambient

/// P^{n_1} x ... x P^{n_m}. Block j owns variables
/// [block_begin(j), block_begin(j) + n_j + 1).
class Ambient {
 public:
  Ambient() = default;
  explicit Ambient(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
    if (dims_.empty()) throw PreconditionError("ambient needs at least one factor");
    for (int n : dims_) {
      if (n < 0) throw PreconditionError("factor dimensions must be nonnegative");
    }
  }

  const std::vector<int>& factor_dims() const { return dims_; }
  std::size_t num_factors() const { return dims_.size(); }
  int factor_dim(std::size_t j) const { return dims_.at(j); }

  int dimension() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

  std::size_t num_vars() const {
    std::size_t total = 0;
    for (int n : dims_) total += static_cast<std::size_t>(n) + 1;
    return total;
  }

  std::size_t block_begin(std::size_t j) const {
    std::size_t begin = 0;
    for (std::size_t k = 0; k < j; ++k) begin += static_cast<std::size_t>(dims_[k]) + 1;
    return begin;
  }
  std::size_t block_size(std::size_t j) const { return static_cast<std::size_t>(dims_.at(j)) + 1; }

  std::size_t block_of(std::size_t var) const {
    std::size_t begin = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      begin += block_size(j);
      if (var < begin) return j;
    }
    throw PreconditionError("variable index out of range");
  }

  /// Two copies of every factor: (n_1..n_m, n_1..n_m).
  Ambient doubled() const {
    std::vector<int> d = dims_;
    d.insert(d.end(), dims_.begin(), dims_.end());
    return Ambient(std::move(d));
  }

  bool operator==(const Ambient&) const = default;

 private:
  std::vector<int> dims_;
};

/// All a with 0 <= a_j <= n_j and |a| = total, in lexicographic order.
inline std::vector<MultiIndex> multi_indices(const Ambient& ambient, int total) {
  std::vector<MultiIndex> out;
  const std::size_t m = ambient.num_factors();
  MultiIndex a(m, 0);
  auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
    if (j + 1 == m) {
      if (remaining <= ambient.factor_dim(j)) {
        a[j] = remaining;
        out.push_back(a);
      }
      return;
    }
    for (int v = 0; v <= std::min(remaining, ambient.factor_dim(j)); ++v) {
      a[j] = v;
      self(self, j + 1, remaining - v);
    }
  };
  if (total >= 0) rec(rec, 0, total);
  return out;
}

inline int total(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

// ---------------------------------------------------------------------------
// Multidegree

struct Multidegree {
  std::vector<int> entries;

  int total() const { return std::accumulate(entries.begin(), entries.end(), 0); }
  bool operator==(const Multidegree&) const = default;

  friend Multidegree operator+(const Multidegree& a, const Multidegree& b) {
    if (a.entries.size() != b.entries.size()) throw DomainMismatch("multidegree length mismatch");
    Multidegree r = a;
    for (std::size_t j = 0; j < r.entries.size(); ++j) r.entries[j] += b.entries[j];
    return r;
  }
};

inline Multidegree componentwise_max(const Multidegree& a, const Multidegree& b) {
  if (a.entries.size() != b.entries.size()) throw DomainMismatch("multidegree length mismatch");
  Multidegree r = a;
  for (std::size_t j = 0; j < r.entries.size(); ++j) r.entries[j] = std::max(r.entries[j], b.entries[j]);
  return r;
}

inline std::string to_string(const Multidegree& d) {
  std::string s = "(";
  for (std::size_t j = 0; j < d.entries.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(d.entries[j]);
  }
  return s + ")";
}

/// Returned by multidegree_of when the terms disagree.
struct NotHomogeneous {
  Multidegree first;
  Multidegree second;
};

// ---------------------------------------------------------------------------
// Coefficients

inline bool is_zero(const Rational& c) { return c == 0; }

/// Element of F_p for a runtime prime p < 2^32 (products fit in 64 bits).
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t prime) : value_(value % prime), prime_(prime) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t prime() const { return prime_; }
  bool is_zero() const { return value_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    std::uint64_t s = a.value_ + b.value_;
    return Fp(s >= a.prime_ ? s - a.prime_ : s, a.prime_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check(a, b);
    return Fp(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.prime_ - b.value_, a.prime_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    return Fp(a.value_ * b.value_ % a.prime_, a.prime_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(value_ == 0 ? 0 : prime_ - value_, prime_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const {
    if (value_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(prime_ - 2);
  }
  Fp pow(std::uint64_t e) const {
    std::uint64_t base = value_, acc = 1 % prime_;
    while (e) {
      if (e & 1) acc = acc * base % prime_;
      base = base * base % prime_;
      e >>= 1;
    }
    return Fp(acc, prime_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    return a.value_ == b.value_ && a.prime_ == b.prime_;
  }

 private:
  static void check(const Fp& a, const Fp& b) {
    if (a.prime_ != b.prime_) throw DomainMismatch("F_p elements over different primes");
  }

  std::uint64_t value_ = 0;
  std::uint64_t prime_ = 1;
};

inline bool is_zero(const Fp& c) { return c.is_zero(); }

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

struct RationalField {
  using value_type = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_integer(std::int64_t v) const { return Rational(v); }
  Rational sample(Rng& rng) const { return Rational(sample_nonzero(rng, kDefaultPrime)); }
};

struct PrimeField {
  using value_type = Fp;

  explicit PrimeField(std::uint64_t p) : prime(p) {
    if (p < 3 || p >= (1ULL << 32) || !is_prime(p)) {
      throw PreconditionError("prime must be an odd prime below 2^32, got " + std::to_string(p));
    }
  }

  Fp zero() const { return Fp(0, prime); }
  Fp one() const { return Fp(1, prime); }
  Fp from_integer(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(prime);
    if (r < 0) r += static_cast<std::int64_t>(prime);
    return Fp(static_cast<std::uint64_t>(r), prime);
  }
  Fp from_bigint(const BigInt& v) const {
    BigInt r = v % prime;
    if (r < 0) r += prime;
    return Fp(r.convert_to<std::uint64_t>(), prime);
  }
  /// Reduction Q -> F_p; fails when p divides the denominator.
  Fp map(const Rational& q) const {
    Fp den = from_bigint(boost::multiprecision::denominator(q));
    if (den.is_zero()) {
      throw ComputationError("prime " + std::to_string(prime) + " divides a coefficient denominator");
    }
    return from_bigint(boost::multiprecision::numerator(q)) / den;
  }
  Fp sample(Rng& rng) const { return Fp(sample_nonzero(rng, prime), prime); }

  std::uint64_t prime;
};

// ---------------------------------------------------------------------------
// MultiPoly

/// Sparse polynomial in the Cox ring of an Ambient; dense exponent vectors of
/// length num_vars(). Zero coefficients are never stored.
template <class K>
class MultiPoly {
 public:
  using Coefficient = K;
  using TermMap = std::map<Exponents, K>;

  MultiPoly() = default;
  explicit MultiPoly(Ambient ambient) : ambient_(std::move(ambient)) {}

  static MultiPoly monomial(const Ambient& ambient, Exponents exps, const K& coeff) {
    MultiPoly p(ambient);
    p.add_term(std::move(exps), coeff);
    return p;
  }
  static MultiPoly constant(const Ambient& ambient, const K& coeff) {
    return monomial(ambient, Exponents(ambient.num_vars(), 0), coeff);
  }
  static MultiPoly variable(const Ambient& ambient, std::size_t index, const K& one) {
    Exponents e(ambient.num_vars(), 0);
    e.at(index) = 1;
    return monomial(ambient, std::move(e), one);
  }

  const Ambient& ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  void add_term(Exponents exps, const K& coeff) {
    if (exps.size() != ambient_.num_vars()) throw DomainMismatch("exponent vector length mismatch");
    for (int v : exps) {
      if (v < 0) throw PreconditionError("negative exponent");
    }
    if (segre::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (segre::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Multiply by the monomial x^shift.
  MultiPoly shifted(const Exponents& shift) const {
    MultiPoly r(ambient_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift.at(i);
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  template <class Fn>
  auto map_coefficients(Fn&& fn) const -> MultiPoly<decltype(fn(std::declval<const K&>()))> {
    MultiPoly<decltype(fn(std::declval<const K&>()))> r(ambient_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r(ambient_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same(a, b);
    MultiPoly r(a.ambient_);
    Exponents e(a.ambient_.num_vars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend MultiPoly operator*(const K& s, const MultiPoly& p) {
    MultiPoly r(p.ambient_);
    if (segre::is_zero(s)) return r;
    for (const auto& [e, c] : p.terms_) r.add_term(e, s * c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(unsigned e, const K& one) const {
    MultiPoly acc = constant(ambient_, one);
    MultiPoly base = *this;
    while (e) {
      if (e & 1U) acc = acc * base;
      e >>= 1U;
      if (e) base = base * base;
    }
    return acc;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

 private:
  static void check_same(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.ambient_ == b.ambient_)) throw DomainMismatch("polynomials live in different ambients");
  }

  Ambient ambient_;
  TermMap terms_;
};

using Poly = MultiPoly<Rational>;
using PolyFp = MultiPoly<Fp>;

inline Multidegree multidegree_of_monomial(const Ambient& ambient, const Exponents& e) {
  Multidegree d{std::vector<int>(ambient.num_factors(), 0)};
  std::size_t var = 0;
  for (std::size_t j = 0; j < ambient.num_factors(); ++j) {
    for (std::size_t k = 0; k < ambient.block_size(j); ++k, ++var) d.entries[j] += e[var];
  }
  return d;
}

template <class K>
std::variant<Multidegree, NotHomogeneous> multidegree_of(const MultiPoly<K>& p) {
  if (p.is_zero()) throw PreconditionError("multidegree of the zero polynomial");
  std::optional<Multidegree> first;
  for (const auto& [e, c] : p.terms()) {
    Multidegree d = multidegree_of_monomial(p.ambient(), e);
    if (!first) {
      first = d;
    } else if (!(d == *first)) {
      return NotHomogeneous{*first, d};
    }
  }
  return *first;
}

/// multidegree_of that turns NotHomogeneous into a PreconditionError.
template <class K>
Multidegree require_multidegree(const MultiPoly<K>& p) {
  auto d = multidegree_of(p);
  if (auto* bad = std::get_if<NotHomogeneous>(&d)) {
    throw PreconditionError("generator is not multihomogeneous: terms of multidegree " +
                            to_string(bad->first) + " and " + to_string(bad->second));
  }
  return std::get<Multidegree>(d);
}

// ---------------------------------------------------------------------------
// Ideals and schemes

template <class K>
struct GradedIdeal {
  Ambient ambient;
  std::vector<MultiPoly<K>> generators;
  std::optional<Multidegree> alpha;

  GradedIdeal() = default;
  GradedIdeal(Ambient a, std::vector<MultiPoly<K>> gens, std::optional<Multidegree> al = {})
      : ambient(std::move(a)), generators(std::move(gens)), alpha(std::move(al)) {
    for (const auto& g : generators) {
      if (!(g.ambient() == ambient)) throw DomainMismatch("generator ambient differs from ideal ambient");
    }
    if (alpha) {
      for (const auto& g : generators) {
        if (!g.is_zero() && !(require_multidegree(g) == *alpha)) {
          throw PreconditionError("generator does not have the declared multidegree " + to_string(*alpha));
        }
      }
    }
  }

  std::vector<MultiPoly<K>> nonzero_generators() const {
    std::vector<MultiPoly<K>> out;
    for (const auto& g : generators) {
      if (!g.is_zero()) out.push_back(g);
    }
    return out;
  }

  bool is_zero_ideal() const {
    return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.is_zero(); });
  }

  /// Componentwise max over the nonzero generators (zero vector for <0>).
  Multidegree max_multidegree() const {
    Multidegree d{std::vector<int>(ambient.num_factors(), 0)};
    for (const auto& g : generators) {
      if (!g.is_zero()) d = componentwise_max(d, require_multidegree(g));
    }
    return d;
  }
};

using Ideal = GradedIdeal<Rational>;

/// Sum of two ideals in the same ambient (alpha dropped).
template <class K>
GradedIdeal<K> ideal_sum(const GradedIdeal<K>& a, const GradedIdeal<K>& b) {
  if (!(a.ambient == b.ambient)) throw DomainMismatch("ideal sum across ambients");
  std::vector<MultiPoly<K>> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return GradedIdeal<K>(a.ambient, std::move(gens));
}

/// A subscheme plus what the user asserts about it.
struct SchemeSpec {
  Ideal ideal;
  bool asserted_irreducible = false;
  bool asserted_variety = false;
  bool asserted_reduced = false;
  /// Length of the local ring of the given ideal at its generic point.
  int geometric_multiplicity = 1;
  /// Known dimension; skips probing when set.
  std::optional<int> dimension;

  SchemeSpec() = default;
  explicit SchemeSpec(Ideal i, bool irreducible = false, bool variety = false, int mult = 1)
      : ideal(std::move(i)), asserted_irreducible(irreducible || variety), asserted_variety(variety),
        geometric_multiplicity(mult) {
    validate();
  }

  static SchemeSpec variety(Ideal i) { return SchemeSpec(std::move(i), true, true, 1); }
  static SchemeSpec irreducible(Ideal i, int mult = 1) { return SchemeSpec(std::move(i), true, false, mult); }

  const Ambient& ambient() const { return ideal.ambient; }
  bool reduced() const { return asserted_variety || asserted_reduced; }

  void validate() const {
    if (geometric_multiplicity < 1) throw PreconditionError("geometric multiplicity must be positive");
    if (asserted_variety && geometric_multiplicity != 1) {
      throw PreconditionError("a variety has geometric multiplicity 1");
    }
    if (asserted_variety && !asserted_irreducible) {
      throw PreconditionError("a variety is irreducible");
    }
    if (asserted_reduced && geometric_multiplicity != 1) {
      throw PreconditionError("a reduced scheme has geometric multiplicity 1");
    }
  }
};

// ---------------------------------------------------------------------------
// alpha-homogenization and general forms

/// Rewrite I so that all generators share D = max(own multidegrees, at_least):
/// J = sum_i <w_i> * B_1(D_1 - d_1^(i)) ... B_m(D_m - d_m^(i)), where B_j(d) is
/// generated by the d-th powers of the block-j variables. I:B^inf = J:B^inf.
template <class K>
GradedIdeal<K> alpha_homogenize(const GradedIdeal<K>& ideal,
                                const std::optional<Multidegree>& at_least = std::nullopt) {
  const Ambient& amb = ideal.ambient;
  const auto gens = ideal.nonzero_generators();
  if (gens.empty()) throw PreconditionError("cannot alpha-homogenize the zero ideal");

  Multidegree target = ideal.max_multidegree();
  if (at_least) target = componentwise_max(target, *at_least);

  std::vector<MultiPoly<K>> out;
  for (const auto& w : gens) {
    const Multidegree d = require_multidegree(w);
    // Odometer over one variable choice per block that needs padding.
    std::vector<std::size_t> padded;
    for (std::size_t j = 0; j < amb.num_factors(); ++j) {
      if (target.entries[j] > d.entries[j]) padded.push_back(j);
    }
    std::vector<std::size_t> choice(padded.size(), 0);
    while (true) {
      Exponents shift(amb.num_vars(), 0);
      for (std::size_t k = 0; k < padded.size(); ++k) {
        const std::size_t j = padded[k];
        shift[amb.block_begin(j) + choice[k]] = target.entries[j] - d.entries[j];
      }
      out.push_back(w.shifted(shift));
      std::size_t k = 0;
      while (k < padded.size() && ++choice[k] == amb.block_size(padded[k])) choice[k++] = 0;
      if (k == padded.size()) break;
    }
  }
  return GradedIdeal<K>(amb, std::move(out), target);
}

/// sum_k theta_k x_k^(j), theta_k drawn from the field's sampling set.
template <class Field>
MultiPoly<typename Field::value_type> general_linear_form(const Field& field, const Ambient& ambient,
                                                          std::size_t block, Rng& rng) {
  MultiPoly<typename Field::value_type> p(ambient);
  const std::size_t begin = ambient.block_begin(block);
  for (std::size_t k = 0; k < ambient.block_size(block); ++k) {
    Exponents e(ambient.num_vars(), 0);
    e[begin + k] = 1;
    p.add_term(std::move(e), field.sample(rng));
  }
  return p;
}

/// sum_i lambda_i f_i for an alpha-homogeneous family.
template <class Field>
MultiPoly<typename Field::value_type> general_combination(
    const Field& field, const std::vector<MultiPoly<typename Field::value_type>>& gens, Rng& rng) {
  if (gens.empty()) throw PreconditionError("general combination of an empty generator list");
  std::optional<Multidegree> alpha;
  MultiPoly<typename Field::value_type> acc(gens.front().ambient());
  for (const auto& f : gens) {
    if (!f.is_zero()) {
      Multidegree d = require_multidegree(f);
      if (alpha && !(d == *alpha)) throw PreconditionError("general combination of mixed multidegrees");
      alpha = d;
    }
    acc += field.sample(rng) * f;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Text rendering (inverse of the problem-file polynomial grammar)

inline std::string format_coefficient(const Rational& c) { return c.str(); }
inline std::string format_coefficient(const Fp& c) { return std::to_string(c.value()); }

template <class K>
std::string format_poly(const MultiPoly<K>& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, K>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::string coeff = format_coefficient(c);
    bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << coeff;
    } else if (coeff == "1") {
      out << mono;
    } else {
      out << coeff << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace segre
