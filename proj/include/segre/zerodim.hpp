#pragma once

// Counting points of zero-dimensional affine systems over F_p: a Buchberger
// engine (degrevlex, last variable least) and dim_k of the quotient ring.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "segre/errors.hpp"
#include "segre/poly.hpp"

namespace segre {

/// Generators over F_p on the variables of `ambient` (grading ignored). By
/// convention the auxiliary variable T is the last variable.
struct AffineIdeal {
  Ambient ambient;
  std::uint64_t prime = kDefaultPrime;
  std::vector<PolyFp> generators;
};

class CountResult {
 public:
  static CountResult finite(std::uint64_t count) { return CountResult(count); }
  static CountResult infinite() { return CountResult(); }

  bool is_finite() const { return count_.has_value(); }
  std::uint64_t count() const {
    if (!count_) throw ComputationError("count of a positive-dimensional system");
    return *count_;
  }

  bool operator==(const CountResult&) const = default;

 private:
  CountResult() = default;
  explicit CountResult(std::uint64_t c) : count_(c) {}
  std::optional<std::uint64_t> count_;
};

namespace detail::gb {

inline constexpr std::size_t kMaxVars = 32;

struct Mono {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  std::uint32_t mask = 0;  // bit i set iff e[i] > 0

  bool operator==(const Mono& o) const { return e == o.e; }
};

/// Degree reverse lexicographic: higher degree first; ties broken by the
/// smaller exponent in the last differing variable being larger.
inline int compare(const Mono& a, const Mono& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

inline Mono make_mono(const Exponents& exps) {
  if (exps.size() > kMaxVars) throw PreconditionError("too many variables for the counting engine");
  Mono m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 255) throw ComputationError("exponent overflow in counting engine");
    m.e[i] = static_cast<std::uint8_t>(exps[i]);
    m.deg += m.e[i];
    if (m.e[i]) m.mask |= 1U << i;
  }
  return m;
}

inline Mono mul(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.e[i]) + b.e[i];
    if (s > 255) throw ComputationError("exponent overflow in counting engine");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = a.deg + b.deg;
  r.mask = a.mask | b.mask;
  return r;
}

inline bool divides(const Mono& a, const Mono& b) {
  if (a.mask & ~b.mask) return false;
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

/// b / a, assuming a divides b.
inline Mono quotient(const Mono& b, const Mono& a) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
    if (r.e[i]) r.mask |= 1U << i;
  }
  r.deg = b.deg - a.deg;
  return r;
}

inline Mono lcm(const Mono& a, const Mono& b) {
  Mono r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  r.mask = a.mask | b.mask;
  return r;
}

inline bool coprime(const Mono& a, const Mono& b) { return (a.mask & b.mask) == 0; }

struct Term {
  Mono m;
  std::uint64_t c;
};

/// Terms sorted strictly descending, no zero coefficients.
struct SparsePoly {
  std::vector<Term> terms;
  std::uint32_t sugar = 0;

  bool empty() const { return terms.empty(); }
  const Mono& lm() const { return terms.front().m; }
};

class Field {
 public:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t e = p_ - 2, base = a, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return acc;
  }

 private:
  std::uint64_t p_;
};

inline void sort_terms(std::vector<Term>& terms, const Field& f) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = f.add(out.back().c, t.c);
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(t);
    }
  }
  terms = std::move(out);
}

inline void make_monic(SparsePoly& g, const Field& f) {
  if (g.empty() || g.terms.front().c == 1) return;
  const std::uint64_t s = f.inv(g.terms.front().c);
  for (Term& t : g.terms) t.c = f.mul(t.c, s);
}

/// a - c * m * b, skipping the first `skip_a` / `skip_b` terms (already cancelled).
inline std::vector<Term> sub_mul(const std::vector<Term>& a, std::size_t skip_a, std::uint64_t c, const Mono& m,
                                 const std::vector<Term>& b, std::size_t skip_b, const Field& f) {
  std::vector<Term> out;
  out.reserve(a.size() - skip_a + b.size() - skip_b);
  std::size_t i = skip_a, j = skip_b;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term bt{mul(m, b[j].m), f.neg(f.mul(c, b[j].c))};
    if (i == a.size()) {
      out.push_back(bt);
      ++j;
      continue;
    }
    const int cmp = compare(a[i].m, bt.m);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(bt);
      ++j;
    } else {
      const std::uint64_t s = f.add(a[i].c, bt.c);
      if (s) out.push_back(Term{a[i].m, s});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Full normal form of g modulo the monic reducers (indices into `polys`).
inline SparsePoly normal_form(SparsePoly g, const std::vector<SparsePoly>& polys, const std::vector<std::size_t>& reducers,
                        const Field& f) {
  std::vector<Term> done;
  std::vector<Term>& cur = g.terms;
  std::size_t head = 0;
  while (head < cur.size()) {
    const Term lt = cur[head];
    const SparsePoly* div = nullptr;
    for (std::size_t r : reducers) {
      if (divides(polys[r].lm(), lt.m)) {
        div = &polys[r];
        break;
      }
    }
    if (!div) {
      done.push_back(lt);
      ++head;
      continue;
    }
    const Mono q = quotient(lt.m, div->lm());
    g.sugar = std::max(g.sugar, div->sugar + q.deg);
    // Leading terms cancel: drop lt and the reducer's leading term.
    cur = sub_mul(cur, head + 1, lt.c, q, div->terms, 1, f);
    head = 0;
  }
  g.terms = std::move(done);
  return g;
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
  std::uint32_t sugar;
};

struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    // priority_queue pops the largest; we want the smallest sugar, then lcm.
    if (a.sugar != b.sugar) return a.sugar > b.sugar;
    const int c = compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    return std::tie(a.i, a.j) > std::tie(b.i, b.j);
  }
};

inline SparsePoly spoly(const SparsePoly& a, const SparsePoly& b, const Mono& l, const Field& f) {
  const Mono qa = quotient(l, a.lm());
  const Mono qb = quotient(l, b.lm());
  std::vector<Term> ta;
  ta.reserve(a.terms.size());
  for (std::size_t k = 1; k < a.terms.size(); ++k) ta.push_back(Term{mul(qa, a.terms[k].m), a.terms[k].c});
  SparsePoly s;
  s.terms = sub_mul(ta, 0, 1, qb, b.terms, 1, f);
  s.sugar = std::max(a.sugar + qa.deg, b.sugar + qb.deg);
  return s;
}

/// Reduced, monic Groebner basis, sorted by descending leading monomial.
inline std::vector<SparsePoly> buchberger(std::vector<SparsePoly> input, const Field& f) {
  std::vector<SparsePoly> polys;
  std::vector<std::size_t> basis;  // active indices (Gebauer-Moeller pruned)
  std::vector<Pair> pending;
  std::priority_queue<Pair, std::vector<Pair>, PairOrder> queue;

  auto constant_one = [&]() {
    SparsePoly one;
    one.terms.push_back(Term{Mono{}, 1});
    return std::vector<SparsePoly>{one};
  };

  auto insert = [&](SparsePoly h) {
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    const Mono hm = polys[hi].lm();

    // Gebauer-Moeller update.
    std::vector<Pair> fresh;
    for (std::size_t g : basis) {
      const Mono l = lcm(polys[g].lm(), hm);
      const std::uint32_t s = std::max(polys[g].sugar + l.deg - polys[g].lm().deg, polys[hi].sugar + l.deg - hm.deg);
      fresh.push_back(Pair{g, hi, l, s});
    }
    std::vector<char> keep(fresh.size(), 1);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (coprime(polys[fresh[a].i].lm(), hm)) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (divides(fresh[b].lcm, fresh[a].lcm) && (!(fresh[b].lcm == fresh[a].lcm) || b < a)) {
          keep[a] = 0;
          break;
        }
      }
    }
    // Chain criterion on old pairs.
    std::vector<Pair> old;
    while (!queue.empty()) {
      Pair p = queue.top();
      queue.pop();
      const bool drop = divides(hm, p.lcm) && !(lcm(polys[p.i].lm(), hm) == p.lcm) &&
                        !(lcm(polys[p.j].lm(), hm) == p.lcm);
      if (!drop) old.push_back(p);
    }
    for (Pair& p : old) queue.push(p);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (keep[a] && !coprime(polys[fresh[a].i].lm(), hm)) queue.push(fresh[a]);
    }
    std::vector<std::size_t> nb;
    for (std::size_t g : basis) {
      if (!divides(hm, polys[g].lm())) nb.push_back(g);
    }
    nb.push_back(hi);
    basis = std::move(nb);
  };

  // Seed with the inputs, each reduced against what is already there.
  std::sort(input.begin(), input.end(), [](const SparsePoly& a, const SparsePoly& b) {
    if (a.empty() || b.empty()) return !a.empty() && b.empty();
    return compare(a.lm(), b.lm()) < 0;
  });
  for (SparsePoly& g : input) {
    SparsePoly h = normal_form(std::move(g), polys, basis, f);
    if (h.empty()) continue;
    if (h.lm().deg == 0) return constant_one();
    make_monic(h, f);
    insert(std::move(h));
  }

  while (!queue.empty()) {
    const Pair p = queue.top();
    queue.pop();
    SparsePoly h = normal_form(spoly(polys[p.i], polys[p.j], p.lcm, f), polys, basis, f);
    if (h.empty()) continue;
    if (h.lm().deg == 0) return constant_one();
    make_monic(h, f);
    insert(std::move(h));
  }

  // Interreduce the minimal basis.
  std::vector<SparsePoly> result;
  for (std::size_t g : basis) result.push_back(polys[g]);
  std::sort(result.begin(), result.end(), [](const SparsePoly& a, const SparsePoly& b) { return compare(a.lm(), b.lm()) > 0; });
  for (std::size_t k = 0; k < result.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t o = 0; o < result.size(); ++o) {
      if (o != k) others.push_back(o);
    }
    SparsePoly lead;
    lead.terms.push_back(result[k].terms.front());
    SparsePoly tail;
    tail.terms.assign(result[k].terms.begin() + 1, result[k].terms.end());
    tail = normal_form(std::move(tail), result, others, f);
    lead.terms.insert(lead.terms.end(), tail.terms.begin(), tail.terms.end());
    lead.sugar = result[k].sugar;
    result[k] = std::move(lead);
  }
  return result;
}

/// Number of monomials outside <leading monomials>; nullopt when infinite.
inline std::optional<std::uint64_t> count_standard_monomials(const std::vector<Mono>& leads, std::size_t num_vars) {
  if (num_vars == 0) return leads.empty() ? 1 : 0;
  std::vector<int> bound(num_vars, -1);
  for (const Mono& m : leads) {
    if (m.deg == 0) return 0;
    if (std::popcount(m.mask) == 1) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(m.mask));
      if (v < num_vars && (bound[v] < 0 || m.e[v] < bound[v])) bound[v] = m.e[v];
    }
  }
  for (int b : bound) {
    if (b < 0) return std::nullopt;
  }
  std::uint64_t count = 0;
  Mono cur;
  auto standard = [&](const Mono& m) {
    for (const Mono& l : leads) {
      if (divides(l, m)) return false;
    }
    return true;
  };
  // Divisibility is monotone, so a divisible prefix prunes its whole subtree.
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == num_vars) {
      ++count;
      return;
    }
    for (int k = 0; k < bound[v]; ++k) {
      cur.e[v] = static_cast<std::uint8_t>(k);
      cur.deg += k > 0 ? 1 : 0;
      if (k > 0) cur.mask |= 1U << v;
      if (!standard(cur)) break;
      self(self, v + 1);
    }
    cur.deg -= cur.e[v];
    cur.e[v] = 0;
    cur.mask &= ~(1U << v);
  };
  rec(rec, 0);
  return count;
}

inline SparsePoly from_multipoly(const PolyFp& p, const Field& f) {
  SparsePoly g;
  for (const auto& [e, c] : p.terms()) {
    if (c.prime() != f.p()) throw DomainMismatch("generator prime differs from the ideal prime");
    g.terms.push_back(Term{make_mono(e), c.value()});
  }
  sort_terms(g.terms, f);
  g.sugar = g.empty() ? 0 : g.lm().deg;
  for (const Term& t : g.terms) g.sugar = std::max(g.sugar, t.m.deg);
  return g;
}

inline PolyFp to_multipoly(const SparsePoly& g, const Ambient& ambient, std::uint64_t prime) {
  PolyFp p(ambient);
  for (const Term& t : g.terms) {
    Exponents e(ambient.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.m.e[i];
    p.add_term(std::move(e), Fp(t.c, prime));
  }
  return p;
}

inline std::vector<SparsePoly> convert(const AffineIdeal& ideal, const Field& f) {
  if (ideal.ambient.num_vars() > kMaxVars) throw PreconditionError("too many variables for the counting engine");
  std::vector<SparsePoly> polys;
  for (const auto& g : ideal.generators) {
    if (!(g.ambient() == ideal.ambient)) throw DomainMismatch("generator ambient differs from ideal ambient");
    SparsePoly p = from_multipoly(g, f);
    if (!p.empty()) polys.push_back(std::move(p));
  }
  return polys;
}

// -- Linear elimination ------------------------------------------------------

/// Result of solving the degree <= 1 generators: each pivot variable equals
/// an affine form in the free variables (renumbered compactly).
struct LinearSolution {
  bool inconsistent = false;
  std::size_t num_free = 0;
  std::vector<int> new_index;  // old var -> new var, or -1 for pivots
  // image[v] = affine form in new variables: coefficients (size num_free) + constant.
  std::vector<std::vector<std::uint64_t>> image;
};

inline LinearSolution solve_linear(const std::vector<SparsePoly>& polys, std::size_t n, const Field& f) {
  // Row layout: [c_0 .. c_{n-1} | const].
  std::vector<std::vector<std::uint64_t>> rows;
  for (const SparsePoly& g : polys) {
    if (g.lm().deg > 1) continue;
    std::vector<std::uint64_t> row(n + 1, 0);
    for (const Term& t : g.terms) {
      if (t.m.deg == 0) {
        row[n] = t.c;
      } else {
        row[static_cast<std::size_t>(std::countr_zero(t.m.mask))] = t.c;
      }
    }
    rows.push_back(std::move(row));
  }
  LinearSolution sol;
  std::vector<int> pivot_row(n, -1);
  std::size_t r = 0;
  // Eliminate from the highest variable down so T (last) goes first only if
  // it actually occurs linearly; the count does not depend on the choice.
  for (std::size_t col = n; col-- > 0 && r < rows.size();) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const std::uint64_t s = f.inv(rows[r][col]);
    for (auto& v : rows[r]) v = f.mul(v, s);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col] == 0) continue;
      const std::uint64_t c = rows[o][col];
      for (std::size_t k = 0; k <= n; ++k) rows[o][k] = f.sub(rows[o][k], f.mul(c, rows[r][k]));
    }
    pivot_row[col] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t o = r; o < rows.size(); ++o) {
    if (rows[o][n] != 0) {
      sol.inconsistent = true;
      return sol;
    }
  }
  sol.new_index.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (pivot_row[v] < 0) sol.new_index[v] = static_cast<int>(sol.num_free++);
  }
  sol.image.assign(n, std::vector<std::uint64_t>(sol.num_free + 1, 0));
  for (std::size_t v = 0; v < n; ++v) {
    if (pivot_row[v] < 0) {
      sol.image[v][static_cast<std::size_t>(sol.new_index[v])] = 1;
      continue;
    }
    const auto& row = rows[static_cast<std::size_t>(pivot_row[v])];
    for (std::size_t w = 0; w < n; ++w) {
      if (w != v && row[w] != 0) sol.image[v][static_cast<std::size_t>(sol.new_index[w])] = f.neg(row[w]);
    }
    sol.image[v][sol.num_free] = f.neg(row[n]);
  }
  return sol;
}

/// Multiply by the affine form `form` (coefficients over new vars + constant).
inline std::vector<Term> mul_affine(const std::vector<Term>& a, const std::vector<std::uint64_t>& form,
                                    const Field& f) {
  std::vector<Term> out;
  const std::size_t k = form.size() - 1;
  for (std::size_t v = 0; v <= k; ++v) {
    if (form[v] == 0) continue;
    Mono shift;
    if (v < k) {
      shift.e[v] = 1;
      shift.deg = 1;
      shift.mask = 1U << v;
    }
    for (const Term& t : a) out.push_back(Term{mul(t.m, shift), f.mul(t.c, form[v])});
  }
  sort_terms(out, f);
  return out;
}

inline std::vector<Term> add_terms(std::vector<Term> a, const std::vector<Term>& b, const Field& f) {
  a.insert(a.end(), b.begin(), b.end());
  sort_terms(a, f);
  return a;
}

/// Horner evaluation of g(x_v := image[v]) over a lexicographically sorted
/// term list, recursing variable by variable.
inline std::vector<Term> substitute_rec(const std::vector<Term>& terms, std::size_t lo, std::size_t hi,
                                        std::size_t v, std::size_t n, const LinearSolution& sol,
                                        const Field& f) {
  if (v == n) {
    std::uint64_t c = 0;
    for (std::size_t t = lo; t < hi; ++t) c = f.add(c, terms[t].c);
    if (c == 0) return {};
    return {Term{Mono{}, c}};
  }
  // Terms are sorted by e[v] descending within [lo, hi).
  std::vector<Term> acc;
  int prev = terms[lo].m.e[v];
  std::size_t t = lo;
  while (t < hi) {
    const int k = terms[t].m.e[v];
    for (int s = prev; s > k; --s) acc = mul_affine(acc, sol.image[v], f);
    std::size_t u = t;
    while (u < hi && terms[u].m.e[v] == k) ++u;
    acc = add_terms(std::move(acc), substitute_rec(terms, t, u, v + 1, n, sol, f), f);
    prev = k;
    t = u;
  }
  for (int s = prev; s > 0; --s) acc = mul_affine(acc, sol.image[v], f);
  return acc;
}

inline SparsePoly substitute(const SparsePoly& g, std::size_t n, const LinearSolution& sol, const Field& f) {
  std::vector<Term> terms = g.terms;
  std::sort(terms.begin(), terms.end(), [n](const Term& a, const Term& b) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a.m.e[i] != b.m.e[i]) return a.m.e[i] > b.m.e[i];
    }
    return false;
  });
  SparsePoly out;
  if (!terms.empty()) out.terms = substitute_rec(terms, 0, terms.size(), 0, n, sol, f);
  out.sugar = out.empty() ? 0 : out.lm().deg;
  return out;
}

}  // namespace detail::gb

/// Reduced Groebner basis (degrevlex, last variable least), monic, sorted by
/// descending leading monomial. <1> yields {1}.
inline std::vector<PolyFp> groebner_basis(const AffineIdeal& ideal) {
  using namespace detail::gb;
  const Field f(ideal.prime);
  std::vector<SparsePoly> gb = buchberger(convert(ideal, f), f);
  std::vector<PolyFp> out;
  for (const SparsePoly& g : gb) out.push_back(to_multipoly(g, ideal.ambient, ideal.prime));
  return out;
}

/// True iff every S-polynomial of `basis` reduces to zero modulo `basis`.
inline bool satisfies_buchberger_criterion(const AffineIdeal& basis) {
  using namespace detail::gb;
  const Field f(basis.prime);
  std::vector<SparsePoly> polys = convert(basis, f);
  for (SparsePoly& g : polys) make_monic(g, f);
  std::vector<std::size_t> all(polys.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      const Mono l = lcm(polys[i].lm(), polys[j].lm());
      if (!normal_form(spoly(polys[i], polys[j], l, f), polys, all, f).empty()) return false;
    }
  }
  return true;
}

/// dim_k R/I for the affine ideal (Finite) or Infinite when positive-dimensional.
inline CountResult quotient_dimension(const AffineIdeal& ideal) {
  using namespace detail::gb;
  const Field f(ideal.prime);
  std::vector<SparsePoly> polys = convert(ideal, f);
  std::size_t n = ideal.ambient.num_vars();

  // Affine-linear generators cut out an affine subspace; restrict to it.
  bool has_linear = false;
  for (const SparsePoly& g : polys) has_linear = has_linear || g.lm().deg <= 1;
  if (has_linear) {
    const LinearSolution sol = solve_linear(polys, n, f);
    if (sol.inconsistent) return CountResult::finite(0);
    std::vector<SparsePoly> reduced;
    for (const SparsePoly& g : polys) {
      if (g.lm().deg <= 1) continue;
      SparsePoly h = substitute(g, n, sol, f);
      if (h.empty()) continue;
      if (h.lm().deg == 0) return CountResult::finite(0);
      reduced.push_back(std::move(h));
    }
    polys = std::move(reduced);
    n = sol.num_free;
  }

  std::vector<SparsePoly> gb = buchberger(std::move(polys), f);
  std::vector<Mono> leads;
  for (const SparsePoly& g : gb) leads.push_back(g.lm());
  const auto count = count_standard_monomials(leads, n);
  return count ? CountResult::finite(*count) : CountResult::infinite();
}

}  // namespace segre
