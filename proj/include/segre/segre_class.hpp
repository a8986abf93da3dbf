#pragma once

// Segre classes s(X,Y), pushed forward to the ambient Chow ring.

#include <optional>

#include "segre/chow.hpp"
#include "segre/degrees.hpp"

namespace segre {

struct SegreData {
  LambdaData lambda;
  ChowClass segre;
};

/// Descending recursion over |a| = dim X, ..., 0:
///   s_a = Lambda_a - int (1+alpha)^{N-|a|} h^a * sum_{|i|>|a|} s_i h^{n-i}.
inline ChowClass segre_from_lambda(const LambdaData& d) {
  const Ambient& amb = d.lambda.ambient();
  ChowClass s(amb);
  if (d.dim_x < 0 || d.dim_y < 0) return s;
  const ChowClass one_plus_alpha = ChowClass::one(amb) + ChowClass::divisor(amb, d.alpha);
  for (int level = std::min(d.dim_x, d.dim_y); level >= 0; --level) {
    const ChowClass c = one_plus_alpha.pow(static_cast<unsigned>(d.dim_y - level)) * s;
    ChowClass layer(amb);
    for (const auto& a : multi_indices(amb, level)) {
      layer.add_term(ChowClass::complement(amb, a), d.lambda.coefficient_at(a) - c.coefficient_at(a));
    }
    s += layer;
  }
  return s;
}

/// s(X,Y) for Y irreducible (possibly non-reduced) and X contained in Y.
inline SegreData segre_data(const Ideal& x, const SchemeSpec& y, const RunConfig& cfg,
                            AlphaPolicy policy = AlphaPolicy::Joint, std::optional<int> dim_x = std::nullopt) {
  if (!y.asserted_irreducible) {
    throw PreconditionError("segre_class needs Y asserted irreducible; sum over components for reducible Y");
  }
  SegreData out{lambda_data(x, y, cfg, policy, dim_x), ChowClass(y.ambient())};
  out.segre = segre_from_lambda(out.lambda);
  return out;
}

inline ChowClass segre_class(const Ideal& x, const SchemeSpec& y, const RunConfig& cfg,
                             AlphaPolicy policy = AlphaPolicy::Joint) {
  return segre_data(x, y, cfg, policy).segre;
}

/// Closed form in P^n: s_i = sum_j C(N-i, j-i) (-d)^{j-i} (d^{N-j} deg Y - g_j).
inline ChowClass segre_closed_form_pn(const Ideal& x, const SchemeSpec& y, const RunConfig& cfg) {
  if (y.ambient().num_factors() != 1) throw PreconditionError("closed form needs a single projective space");
  if (!y.asserted_variety) throw PreconditionError("closed form needs Y asserted to be a variety");
  const LambdaData d = lambda_data(x, y, cfg, AlphaPolicy::Joint);
  const Ambient& amb = y.ambient();
  const int n = amb.dimension();
  ChowClass s(amb);
  if (d.dim_x < 0 || d.dim_y < 0) return s;
  const BigInt deg_y = d.class_y.coefficient({n - d.dim_y});
  const BigInt deg = d.alpha.entries[0];
  auto power = [](BigInt b, int e) {
    BigInt r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
  };
  auto binom = [](int top, int k) {
    BigInt r = 1;
    for (int t = 1; t <= k; ++t) r = r * (top - k + t) / t;
    return r;
  };
  for (int i = 0; i <= d.dim_x; ++i) {
    BigInt si = 0;
    for (int j = i; j <= d.dim_x; ++j) {
      auto it = d.table.entries.find({j});
      const BigInt g = it == d.table.entries.end() ? BigInt(0) : BigInt(it->second);
      si += binom(d.dim_y - i, j - i) * power(-deg, j - i) * (power(deg, d.dim_y - j) * deg_y - g);
    }
    s.add_term({n - i}, si);
  }
  return s;
}

/// {s(X,Z)}_{dim X} = alpha^{dim Z - dim X}[Z] - sum_{|a|=dim X} g_a h^{n-a};
/// valid for pure-dimensional, possibly reducible Z.
inline ChowClass segre_top_part(const Ideal& x, const SchemeSpec& z, const RunConfig& cfg,
                                AlphaPolicy policy = AlphaPolicy::Joint) {
  const LambdaData d = lambda_data(x, z, cfg, policy);
  if (d.dim_x < 0) return ChowClass(z.ambient());
  return dim_part(d.lambda, d.dim_x);
}

}  // namespace segre
