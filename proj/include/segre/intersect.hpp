#pragma once

// Intersection products X ._Y V inside a smooth complete intersection Y of P^n,
// by reduction to the diagonal of P^n x P^n.

#include <vector>

#include "segre/chow.hpp"
#include "segre/invariants.hpp"
#include "segre/segre_class.hpp"

namespace segre {

/// Y = V(f_1, ..., f_r), asserted smooth of codimension r.
struct CISpec {
  Ambient ambient;
  std::vector<Poly> equations;

  CISpec() = default;
  CISpec(Ambient a, std::vector<Poly> eqs) : ambient(std::move(a)) {
    for (auto& f : eqs) {
      if (!f.is_zero()) equations.push_back(std::move(f));
    }
  }

  std::vector<Multidegree> degrees() const {
    std::vector<Multidegree> d;
    for (const auto& f : equations) d.push_back(require_multidegree(f));
    return d;
  }
  int dimension() const { return ambient.dimension() - static_cast<int>(equations.size()); }
};

/// I in the first-copy variables plus J in the second-copy variables.
inline Ideal embed_product(const Ideal& i, const Ideal& j) {
  if (!(i.ambient == j.ambient)) throw DomainMismatch("embed_product needs both ideals in one ambient");
  const Ambient& a = i.ambient;
  const Ambient d = a.doubled();
  const std::size_t nv = a.num_vars();
  std::vector<Poly> gens;
  // Doubled ambient lists the first copy's blocks, then the second copy's.
  auto lift = [&](const Poly& p, std::size_t offset) {
    Poly q(d);
    for (const auto& [e, c] : p.terms()) {
      Exponents f(d.num_vars(), 0);
      std::copy(e.begin(), e.end(), f.begin() + static_cast<long>(offset));
      q.add_term(std::move(f), c);
    }
    return q;
  };
  for (const auto& g : i.nonzero_generators()) gens.push_back(lift(g, 0));
  for (const auto& g : j.nonzero_generators()) gens.push_back(lift(g, nv));
  if (gens.empty()) gens.push_back(Poly(d));
  return Ideal(d, std::move(gens));
}

/// The 2x2 minors x_i y_j - x_j y_i cutting out the diagonal of P^n x P^n.
inline Ideal diagonal_ideal(const Ambient& a) {
  if (a.num_factors() != 1) throw PreconditionError("diagonal_ideal needs a single projective space");
  const Ambient d = a.doubled();
  const int n = a.dimension();
  std::vector<Poly> gens;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Rational one(1);
      gens.push_back(Poly::variable(d, i, one) * Poly::variable(d, n + 1 + j, one) -
                     Poly::variable(d, j, one) * Poly::variable(d, n + 1 + i, one));
    }
  }
  return Ideal(d, std::move(gens));
}

struct IntersectionData {
  int expected_dim = 0;
  bool disjoint = false;
  ChowClass segre_doubled;  // s(X cap V, X x V) on P^n x P^n
  ChowClass segre_pulled;   // its diagonal preimage on P^n
  ChowClass chern;
  ChowClass product;
};

/// { c(TP^n) / prod (1 + d_i h) * Delta^* s(X cap V, X x V) }_{dim X + dim V - dim Y}.
inline IntersectionData intersection_data(const SchemeSpec& x, const SchemeSpec& v, const CISpec& y,
                                          const RunConfig& cfg) {
  const Ambient& amb = y.ambient;
  if (amb.num_factors() != 1) throw PreconditionError("intersection products are implemented on P^n only");
  if (!(x.ambient() == amb) || !(v.ambient() == amb)) throw DomainMismatch("X, V and Y live in different ambients");
  if (!x.asserted_variety || !v.asserted_variety) throw PreconditionError("X and V must be asserted varieties");

  IntersectionData out;
  out.chern = chern_ci(amb, y.degrees());
  out.segre_doubled = ChowClass(amb.doubled());
  out.segre_pulled = out.product = ChowClass(amb);
  const int dim_x = dimension_of(x, cfg);
  const int dim_v = dimension_of(v, cfg);
  if (dim_x < 0 || dim_v < 0) throw PreconditionError("X and V must be nonempty");
  out.expected_dim = dim_x + dim_v - y.dimension();

  const Ideal meet = ideal_sum(x.ideal, v.ideal);
  if (is_empty(meet, cfg).yes()) {
    out.disjoint = true;
    return out;
  }
  SchemeSpec product = SchemeSpec::variety(embed_product(x.ideal, v.ideal));
  product.dimension = dim_x + dim_v;
  const SegreData s = segre_data(diagonal_ideal(amb), product, cfg, AlphaPolicy::Own, probe_dimension(meet, cfg));
  out.segre_doubled = s.segre;
  auto pulled = diag_invert(s.segre, amb);
  if (std::holds_alternative<NotInImage>(pulled)) {
    throw ComputationError("Segre class on P^n x P^n is not a diagonal pushforward");
  }
  out.segre_pulled = std::get<ChowClass>(pulled);
  if (out.expected_dim >= 0) out.product = dim_part(out.chern * out.segre_pulled, out.expected_dim);
  return out;
}

inline ChowClass intersection_product(const SchemeSpec& x, const SchemeSpec& v, const CISpec& y,
                                      const RunConfig& cfg) {
  return intersection_data(x, v, y, cfg).product;
}

}  // namespace segre
