#pragma once

// Multiplicity, containment, singular-locus and emptiness tests. Everything
// reduces to top-dimensional projective degrees; no Jacobians, no radicals.

#include <map>
#include <optional>
#include <string>

#include "segre/chow.hpp"
#include "segre/degrees.hpp"

namespace segre {

enum class Answer { Yes, No };

struct Verdict {
  Answer answer = Answer::No;
  std::map<std::string, BigInt> integers;
  std::map<std::string, ChowClass> classes;

  bool yes() const { return answer == Answer::Yes; }
};

/// The dimension-dim X part of Lambda(X,Z), computed only where it is needed.
struct TopLevel {
  Multidegree alpha;
  int dim_x = -1;
  int dim_z = -1;
  ChowClass class_z;
  ChowClass expected;  // alpha^{dim Z - dim X} [Z]
  std::map<MultiIndex, std::uint64_t> g;
  ChowClass lambda;
};

/// Computes y_a - g_a for |a| = dim_x; with `support`, only where it is nonzero.
inline TopLevel top_level(const Ideal& x, const SchemeSpec& z, int dim_x, AlphaPolicy policy, const RunConfig& cfg,
                          const ChowClass* support = nullptr) {
  if (!(x.ambient == z.ambient())) throw DomainMismatch("X and Z live in different ambients");
  const Ambient& amb = z.ambient();
  TopLevel t;
  t.dim_x = dim_x;
  t.dim_z = dimension_of(z, cfg);
  if (dim_x < 0) throw PreconditionError("X is empty");
  if (dim_x > t.dim_z) throw PreconditionError("dim X exceeds dim Z; X cannot lie in Z");
  t.class_z = class_of(z, cfg);
  t.alpha = choose_alpha(x, z.ideal, policy);
  t.expected = ChowClass::divisor(amb, t.alpha).pow(static_cast<unsigned>(t.dim_z - dim_x)) * t.class_z;
  t.lambda = ChowClass(amb);
  const Ideal xa = x.is_zero_ideal() ? x : alpha_homogenize(x, t.alpha);
  for (const auto& a : multi_indices(amb, dim_x)) {
    if (support && support->coefficient_at(a) == 0) continue;
    const std::uint64_t g = projective_degree(xa, z, a, t.dim_z, cfg);
    t.g[a] = g;
    t.lambda.add_term(ChowClass::complement(amb, a), t.expected.coefficient_at(a) - BigInt(g));
  }
  return t;
}

struct MultiplicityData {
  BigInt e;
  ChowClass class_x;
  TopLevel top;
};

/// e_XZ = (y_a - g_a) / v_a, cross-checked over every a with v_a != 0.
inline MultiplicityData multiplicity_data(const SchemeSpec& x, const SchemeSpec& z, const RunConfig& cfg,
                                          AlphaPolicy policy = AlphaPolicy::Joint) {
  if (!x.asserted_variety) throw PreconditionError("multiplicity needs X asserted to be a variety");
  MultiplicityData m;
  const int dim_x = dimension_of(x, cfg);
  if (dim_x < 0) throw PreconditionError("X is empty");
  m.class_x = class_of(x, cfg);
  m.top = top_level(x.ideal, z, dim_x, policy, cfg, &m.class_x);
  std::optional<BigInt> e;
  std::string trail;
  for (const auto& [a, g] : m.top.g) {
    const BigInt v = m.class_x.coefficient_at(a);
    const BigInt num = m.top.lambda.coefficient_at(a);
    trail += " " + detail::describe(a) + ": (" + m.top.expected.coefficient_at(a).str() + " - " + std::to_string(g) +
             ")/" + v.str();
    if (num % v != 0) throw ComputationError("multiplicity quotient is not an integer;" + trail);
    if (e && *e != num / v) throw ComputationError("multiplicity disagrees across indices;" + trail);
    e = num / v;
  }
  if (!e) throw ComputationError("X has no nonzero class coefficient");
  if (*e < 1) throw ComputationError("multiplicity " + e->str() + " < 1: X does not appear to lie in Z;" + trail);
  m.e = *e;
  return m;
}

inline BigInt multiplicity(const SchemeSpec& x, const SchemeSpec& z, const RunConfig& cfg,
                           AlphaPolicy policy = AlphaPolicy::Joint) {
  return multiplicity_data(x, z, cfg, policy).e;
}

/// Yes iff y_a - g_a > m_Z q_a at some a with q_a != 0.
inline Verdict in_singular_locus(const SchemeSpec& x, const SchemeSpec& z, const RunConfig& cfg) {
  if (!x.asserted_variety) throw PreconditionError("in_singular_locus needs X asserted to be a variety");
  if (!z.asserted_irreducible) throw PreconditionError("in_singular_locus needs Z asserted irreducible");
  const int dim_x = dimension_of(x, cfg);
  if (dim_x < 0) throw PreconditionError("X is empty");
  const ChowClass q = class_of(x, cfg);
  const TopLevel t = top_level(x.ideal, z, dim_x, AlphaPolicy::Joint, cfg, &q);
  Verdict v;
  for (const auto& [a, g] : t.g) {
    if (t.lambda.coefficient_at(a) > z.geometric_multiplicity * q.coefficient_at(a)) v.answer = Answer::Yes;
  }
  v.integers["m_Z"] = z.geometric_multiplicity;
  v.integers["dim_X"] = dim_x;
  v.integers["dim_Z"] = t.dim_z;
  v.classes["class_X"] = q;
  v.classes["class_Z"] = t.class_z;
  v.classes["lambda_top"] = t.lambda;
  if (t.g.size() == 1) v.integers["g"] = BigInt(t.g.begin()->second);
  return v;
}

namespace detail {

/// A general Q-linear combination of I's generators after padding them to a
/// common multidegree; the seed is derived from the master seed and `purpose`.
inline Poly general_member(const Ideal& ideal, const RunConfig& cfg, std::string_view purpose) {
  const Ideal padded = alpha_homogenize(ideal);
  Rng rng(derive_seed(cfg.seed, purpose, {}, 0, 0));
  return general_combination(RationalField{}, padded.generators, rng);
}

struct UnionData {
  Poly theta, omega;
  SchemeSpec theta_spec, z_spec;
};

inline UnionData theta_omega(const SchemeSpec& x, const SchemeSpec& y, const RunConfig& cfg) {
  UnionData u;
  u.theta = general_member(x.ideal, cfg, "theta");
  u.omega = general_member(y.ideal, cfg, "omega");
  const Ambient& amb = x.ambient();
  u.theta_spec = SchemeSpec(Ideal(amb, {u.theta}));
  u.theta_spec.dimension = amb.dimension() - 1;
  u.z_spec = SchemeSpec(Ideal(amb, {u.theta * u.omega}));
  u.z_spec.dimension = amb.dimension() - 1;
  return u;
}

inline void check_pair(const SchemeSpec& x, const SchemeSpec& y) {
  if (!(x.ambient() == y.ambient())) throw DomainMismatch("X and Y live in different ambients");
}

}  // namespace detail

/// X subset Y iff e_XZ > 1 for Z = V(p_Theta * p_Omega).
inline Verdict contains(const SchemeSpec& x, const SchemeSpec& y, const RunConfig& cfg) {
  detail::check_pair(x, y);
  if (!x.asserted_variety) throw PreconditionError("contains needs X asserted to be a variety");
  if (!y.reduced()) throw PreconditionError("contains needs Y asserted reduced (or a variety)");
  Verdict v;
  if (y.ideal.is_zero_ideal()) {
    v.answer = Answer::Yes;  // Y is the whole ambient
    return v;
  }
  const int dim_x = dimension_of(x, cfg);
  const int dim_y = dimension_of(y, cfg);
  if (dim_x < 0) throw PreconditionError("X is empty");
  if (dim_x > dim_y) throw PreconditionError("contains needs dim X <= dim Y");
  if (x.ideal.is_zero_ideal()) {
    return v;  // X is the ambient and Y is a proper subscheme
  }
  const detail::UnionData u = detail::theta_omega(x, y, cfg);
  const MultiplicityData m = multiplicity_data(x, u.z_spec, cfg, AlphaPolicy::Own);
  v.answer = m.e > 1 ? Answer::Yes : Answer::No;
  v.integers["e_XZ"] = m.e;
  v.integers["dim_X"] = dim_x;
  v.integers["dim_Y"] = dim_y;
  v.classes["class_X"] = m.class_x;
  v.classes["lambda_XZ"] = m.top.lambda;
  return v;
}

/// Yes iff some top-dimensional component of X lies in Y (set-theoretically;
/// neither side needs to be reduced): Lambda_a(X,Z) != Lambda_a(X,Theta) for some |a| = dim X.
inline Verdict component_contained(const SchemeSpec& x, const SchemeSpec& y, const RunConfig& cfg) {
  detail::check_pair(x, y);
  if (x.ideal.is_zero_ideal()) throw PreconditionError("component_contained needs X to be a proper subscheme");
  Verdict v;
  if (y.ideal.is_zero_ideal()) {
    v.answer = Answer::Yes;
    return v;
  }
  const int dim_x = dimension_of(x, cfg);
  if (dim_x < 0) throw PreconditionError("X is empty");
  const detail::UnionData u = detail::theta_omega(x, y, cfg);
  const TopLevel xz = top_level(x.ideal, u.z_spec, dim_x, AlphaPolicy::Own, cfg);
  const TopLevel xt = top_level(x.ideal, u.theta_spec, dim_x, AlphaPolicy::Own, cfg);
  v.answer = xz.lambda == xt.lambda ? Answer::No : Answer::Yes;
  v.integers["dim_X"] = dim_x;
  v.classes["lambda_XZ"] = xz.lambda;
  v.classes["lambda_XTheta"] = xt.lambda;
  return v;
}

/// B = empty iff g_i(B, P^n) = d^{n-i} for all i, with B padded to degree d.
inline Verdict is_empty(const Ideal& b, const RunConfig& cfg) {
  const Ambient& amb = b.ambient;
  if (amb.num_factors() != 1) throw PreconditionError("is_empty needs a single projective space");
  const int n = amb.dimension();
  Verdict v;
  if (b.is_zero_ideal()) {
    v.integers["d"] = 0;
    return v;  // V(0) = P^n
  }
  const Ideal padded = alpha_homogenize(b);
  const int d = padded.alpha->entries[0];
  const SchemeSpec pn = SchemeSpec::variety(Ideal(amb, {Poly(amb)}));
  bool all = true;
  BigInt expected = 1;
  for (int i = n; i >= 0; --i) {
    const std::uint64_t g = projective_degree(padded, pn, {i}, n, cfg);
    v.integers["g_" + std::to_string(i)] = BigInt(g);
    if (BigInt(g) != expected) all = false;
    expected *= d;
  }
  v.integers["d"] = d;
  v.answer = all ? Answer::Yes : Answer::No;
  return v;
}

}  // namespace segre
