#pragma once

// A*(P^{n_1} x ... x P^{n_m}) = Z[h_1..h_m] / <h_j^{n_j+1}>.

#include <algorithm>
#include <map>
#include <variant>
#include <vector>

#include "segre/errors.hpp"
#include "segre/poly.hpp"

namespace segre {

class ChowClass {
 public:
  using TermMap = std::map<Exponents, BigInt>;

  ChowClass() = default;
  explicit ChowClass(Ambient ambient) : ambient_(std::move(ambient)) {}

  static ChowClass zero(const Ambient& a) { return ChowClass(a); }
  static ChowClass one(const Ambient& a) { return monomial(a, Exponents(a.num_factors(), 0), 1); }
  static ChowClass monomial(const Ambient& a, const Exponents& e, const BigInt& c) {
    ChowClass u(a);
    u.add_term(e, c);
    return u;
  }
  static ChowClass hyperplane(const Ambient& a, std::size_t j) {
    Exponents e(a.num_factors(), 0);
    e.at(j) = 1;
    return monomial(a, e, 1);
  }
  /// The class sum_j d_j h_j of a hypersurface of multidegree d.
  static ChowClass divisor(const Ambient& a, const Multidegree& d) {
    if (d.entries.size() != a.num_factors()) throw DomainMismatch("multidegree length differs from factor count");
    ChowClass u(a);
    for (std::size_t j = 0; j < a.num_factors(); ++j) u += BigInt(d.entries[j]) * hyperplane(a, j);
    return u;
  }
  /// h^{n-a}: the class of a general linear subspace P^{a_1} x ... x P^{a_m}.
  static ChowClass linear_space(const Ambient& a, const MultiIndex& idx) {
    return monomial(a, complement(a, idx), 1);
  }
  static Exponents complement(const Ambient& a, const MultiIndex& idx) {
    Exponents e(a.num_factors());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = a.factor_dim(j) - idx.at(j);
    return e;
  }

  const Ambient& ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  /// Coefficient of h^{n-a}, i.e. the part of dimension-index a.
  BigInt coefficient_at(const MultiIndex& a) const { return coefficient(complement(ambient_, a)); }

  void add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != ambient_.num_factors()) throw DomainMismatch("exponent length differs from factor count");
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0) throw PreconditionError("negative Chow exponent");
      if (e[j] > ambient_.factor_dim(j)) return;  // truncation
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend ChowClass operator+(const ChowClass& u, const ChowClass& v) {
    check(u, v);
    ChowClass r = u;
    for (const auto& [e, c] : v.terms_) r.add_term(e, c);
    return r;
  }
  friend ChowClass operator-(const ChowClass& u, const ChowClass& v) { return u + (-v); }
  ChowClass operator-() const {
    ChowClass r(ambient_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend ChowClass operator*(const ChowClass& u, const ChowClass& v) {
    check(u, v);
    ChowClass r(u.ambient_);
    Exponents s(u.ambient_.num_factors());
    for (const auto& [eu, cu] : u.terms_) {
      for (const auto& [ev, cv] : v.terms_) {
        for (std::size_t j = 0; j < s.size(); ++j) s[j] = eu[j] + ev[j];
        r.add_term(s, cu * cv);
      }
    }
    return r;
  }
  friend ChowClass operator*(const BigInt& k, const ChowClass& u) {
    ChowClass r(u.ambient_);
    for (const auto& [e, c] : u.terms_) r.add_term(e, k * c);
    return r;
  }
  ChowClass& operator+=(const ChowClass& o) { return *this = *this + o; }
  ChowClass& operator-=(const ChowClass& o) { return *this = *this - o; }
  ChowClass& operator*=(const ChowClass& o) { return *this = *this * o; }

  ChowClass pow(unsigned k) const {
    ChowClass acc = one(ambient_);
    for (unsigned i = 0; i < k; ++i) acc *= *this;
    return acc;
  }

  friend bool operator==(const ChowClass& u, const ChowClass& v) {
    return u.ambient_ == v.ambient_ && u.terms_ == v.terms_;
  }

 private:
  static void check(const ChowClass& u, const ChowClass& v) {
    if (!(u.ambient_ == v.ambient_)) throw DomainMismatch("Chow classes live in different ambients");
  }

  Ambient ambient_;
  TermMap terms_;
};

/// Degree of the zero-dimensional part.
inline BigInt integral(const ChowClass& u) {
  return u.coefficient(Exponents(u.ambient().factor_dims().begin(), u.ambient().factor_dims().end()));
}

/// Terms of dimension k, i.e. codimension dim(ambient) - k.
inline ChowClass dim_part(const ChowClass& u, int k) {
  const int dim = u.ambient().dimension();
  if (k < 0 || k > dim) throw PreconditionError("dimension out of range");
  ChowClass r(u.ambient());
  for (const auto& [e, c] : u.terms()) {
    if (total(e) == dim - k) r.add_term(e, c);
  }
  return r;
}

inline ChowClass series_inverse(const ChowClass& u) {
  const Ambient& a = u.ambient();
  const BigInt c0 = u.coefficient(Exponents(a.num_factors(), 0));
  if (c0 != 1 && c0 != -1) throw PreconditionError("series inverse needs constant term +-1");
  // u = c0 (1 + N) with N nilpotent; u^{-1} = c0 * sum (-N)^k.
  const ChowClass nil = c0 * u - ChowClass::one(a);
  ChowClass acc = ChowClass::one(a);
  ChowClass power = ChowClass::one(a);
  for (int k = 1; k <= a.dimension(); ++k) {
    power = -(power * nil);
    acc += power;
  }
  return c0 * acc;
}

/// Total Chern class of a complete intersection of the given multidegrees,
/// pushed to the ambient: prod_j (1+h_j)^{n_j+1} / prod_i (1 + alpha_i).
inline ChowClass chern_ci(const Ambient& a, const std::vector<Multidegree>& degrees) {
  ChowClass c = ChowClass::one(a);
  for (std::size_t j = 0; j < a.num_factors(); ++j) {
    c *= (ChowClass::one(a) + ChowClass::hyperplane(a, j)).pow(static_cast<unsigned>(a.factor_dim(j) + 1));
  }
  for (const auto& d : degrees) c *= series_inverse(ChowClass::one(a) + ChowClass::divisor(a, d));
  return c;
}

/// Pushforward along the diagonal P -> P x P (factors (j,1) first, then (j,2)).
inline ChowClass diag_pushforward(const ChowClass& u) {
  const Ambient& a = u.ambient();
  const std::size_t m = a.num_factors();
  const Ambient doubled = a.doubled();
  ChowClass r(doubled);
  for (const auto& [e, c] : u.terms()) {
    ChowClass prod = ChowClass::one(doubled);
    for (std::size_t j = 0; j < m; ++j) {
      const int n = a.factor_dim(j);
      ChowClass factor(doubled);
      for (int i = 0; i <= n; ++i) {
        const int k = e[j] + n - i;
        if (k < 0 || k > n) continue;
        Exponents f(2 * m, 0);
        f[j] = i;
        f[m + j] = k;
        factor.add_term(f, 1);
      }
      prod *= factor;
    }
    r += c * prod;
  }
  return r;
}

struct NotInImage {};

/// Inverse of diag_pushforward on its image: the coefficient at h^e is read
/// off at h_1^n h_2^e, then the whole class is checked.
inline std::variant<ChowClass, NotInImage> diag_invert(const ChowClass& v, const Ambient& base) {
  if (!(base.doubled() == v.ambient())) throw DomainMismatch("class does not live on the doubled ambient");
  const std::size_t m = base.num_factors();
  ChowClass u(base);
  for (const auto& [f, c] : v.terms()) {
    bool first_full = true;
    for (std::size_t j = 0; j < m; ++j) first_full = first_full && f[j] == base.factor_dim(j);
    if (first_full) u.add_term(Exponents(f.begin() + static_cast<long>(m), f.end()), c);
  }
  if (!(diag_pushforward(u) == v)) return NotInImage{};
  return u;
}

/// Same, with the base ambient recovered by halving the factor list.
inline std::variant<ChowClass, NotInImage> diag_invert(const ChowClass& v) {
  const auto& dims = v.ambient().factor_dims();
  const std::size_t m = dims.size() / 2;
  if (dims.size() % 2 != 0 || !std::equal(dims.begin(), dims.begin() + static_cast<long>(m), dims.begin() + static_cast<long>(m))) {
    throw DomainMismatch("class does not live on a doubled ambient");
  }
  return diag_invert(v, Ambient(std::vector<int>(dims.begin(), dims.begin() + static_cast<long>(m))));
}

}  // namespace segre
