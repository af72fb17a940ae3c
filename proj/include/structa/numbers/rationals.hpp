#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "structa/core/error.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/law_report.hpp"
#include "structa/numbers/integers.hpp"
#include "structa/order/maps.hpp"
#include "structa/order/poset.hpp"

namespace structa::numbers {

// An arrow a ->x c, written a/c. Equality of the struct is equality of the
// pair; equality as rationals is rat_eq.
struct Rat {
  ExactInt num = 0;
  ExactInt den = 1;

  Rat() = default;
  Rat(ExactInt n, ExactInt d = 1) : num(std::move(n)), den(std::move(d)) {  // NOLINT(implicit)
    if (den == 0) throw Error(Errc::ZeroDenominator, "rational with zero denominator", num.str() + "/0");
  }

  std::string str() const { return num.str() + "/" + den.str(); }
  bool operator==(const Rat&) const = default;
};

// Canonical representative: positive denominator, coprime entries.
struct RatClass {
  Rat rep;
  bool operator==(const RatClass&) const = default;
  bool operator<(const RatClass& o) const {
    return rep.num != o.rep.num ? rep.num < o.rep.num : rep.den < o.rep.den;
  }
};

inline ExactInt int_gcd(const ExactInt& a, const ExactInt& b) { return boost::multiprecision::gcd(a, b); }

inline bool rat_eq(const Rat& p, const Rat& q) { return p.num * q.den == q.num * p.den; }

inline RatClass rat_canon(const Rat& p) {
  ExactInt n = p.num, d = p.den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const ExactInt g = int_gcd(n, d);  // d > 0, so g > 0
  return RatClass{Rat(n / g, d / g)};
}

inline Rat rat_mul(const Rat& p, const Rat& q) { return Rat(p.num * q.num, p.den * q.den); }
inline Rat rat_add(const Rat& p, const Rat& q) { return Rat(p.num * q.den + q.num * p.den, p.den * q.den); }
inline Rat rat_neg(const Rat& p) { return Rat(-p.num, p.den); }
inline Rat rat_inv(const Rat& p) {
  if (p.num == 0) throw Error(Errc::ZeroDenominator, "zero has no multiplicative inverse", p.str());
  return Rat(p.den, p.num);
}

// a/c <= b/d: compare a*d with b*c, the direction flipping when exactly one
// denominator is negative.
inline bool rat_le(const Rat& p, const Rat& q) {
  const ExactInt ad = p.num * q.den, bc = q.num * p.den;
  return p.den * q.den > 0 ? ad <= bc : bc <= ad;
}

inline Rat embed_int(const ExactInt& a) { return Rat(a, 1); }

// The involutions on Z x (Z \ 0): p negates the denominator, r the numerator,
// q = p o r both.
inline Rat inv_p(const Rat& x) { return Rat(x.num, -x.den); }
inline Rat inv_r(const Rat& x) { return Rat(-x.num, x.den); }
inline Rat inv_q(const Rat& x) { return inv_p(inv_r(x)); }

// All a/c with |a| <= bound and 1 <= c <= bound, or 1 <= |c| <= bound when
// negative denominators are wanted.
inline std::vector<Rat> rat_grid(std::int64_t bound, bool negative_dens) {
  std::vector<Rat> out;
  for (std::int64_t c = negative_dens ? -bound : 1; c <= bound; ++c) {
    if (c == 0) continue;
    for (std::int64_t a = -bound; a <= bound; ++a) out.emplace_back(a, c);
  }
  return out;
}

namespace detail {

inline std::string rat_tuple(std::initializer_list<const Rat*> xs) {
  std::string s = "(";
  for (const Rat* x : xs) s += (s.size() > 1 ? "," : "") + x->str();
  return s + ")";
}

// n x n truth table of a binary predicate over `g`.
template <class Pred>
std::vector<char> rat_table(const std::vector<Rat>& g, Pred pred) {
  const std::size_t n = g.size();
  std::vector<char> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = pred(g[i], g[j]) ? 1 : 0;
  return t;
}

}  // namespace detail

// Equality, canonical form and order on the signed grid, then both group
// structures on the positive-denominator grid.
inline LawReport rat_laws(std::int64_t bound) {
  using detail::rat_tuple;
  LawReport r("rat");
  const std::vector<Rat> g = rat_grid(bound, true);
  const std::size_t n = g.size();
  const auto eq = detail::rat_table(g, rat_eq);
  const auto le = detail::rat_table(g, rat_le);
  std::vector<RatClass> canon;
  for (const auto& x : g) canon.push_back(rat_canon(x));

  for (std::size_t i = 0; i < n; ++i) {
    const Rat& x = g[i];
    r.record_lazy("rat.eq_reflexive", "p = p", eq[i * n + i], [&] { return x.str(); });
    r.record_lazy("rat.sign_swap", "-a/c = a/-c", rat_eq(Rat(-x.num, x.den), Rat(x.num, -x.den)),
                  [&] { return x.str(); });
    const RatClass cc = rat_canon(canon[i].rep);
    r.record_lazy("rat.canon_idempotent", "canon(canon p) = canon p", cc == canon[i], [&] { return x.str(); });
    r.record_lazy("rat.canon_form", "canonical denominators are positive and coprime to the numerator",
                  canon[i].rep.den > 0 && int_gcd(canon[i].rep.num, canon[i].rep.den) == 1 && rat_eq(canon[i].rep, x),
                  [&] { return x.str(); });
    r.record_lazy("rat.le_reflexive", "p <= p", le[i * n + i], [&] { return x.str(); });
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& y = g[j];
      const bool e = eq[i * n + j], l = le[i * n + j], lr = le[j * n + i];
      r.record_lazy("rat.eq_symmetric", "p = q implies q = p", !e || eq[j * n + i], [&] { return rat_tuple({&x, &y}); });
      r.record_lazy("rat.canon_respects_eq", "p = q iff canon p = canon q", e == (canon[i] == canon[j]),
                    [&] { return rat_tuple({&x, &y}); });
      r.record_lazy("rat.le_total", "p <= q or q <= p", l || lr, [&] { return rat_tuple({&x, &y}); });
      r.record_lazy("rat.le_antisymmetric", "p <= q and q <= p imply p = q", !(l && lr) || e,
                    [&] { return rat_tuple({&x, &y}); });
      r.record_lazy("rat.le_respects_eq", "p = q implies p <= q", !e || l, [&] { return rat_tuple({&x, &y}); });
      for (std::int64_t k : {-3, -2, -1, 1, 2, 3}) {
        const Rat kk(k, k);
        r.record_lazy("rat.le_scaling", "a/c * x/x <= b/d iff a/c <= b/d", rat_le(rat_mul(x, kk), y) == l,
                      [&] { return rat_tuple({&x, &y, &kk}); });
      }
      if (e || l) {
        for (std::size_t k = 0; k < n; ++k) {
          if (e) {
            r.record_lazy("rat.eq_transitive", "p = q and q = s imply p = s", !eq[j * n + k] || eq[i * n + k],
                          [&] { return rat_tuple({&x, &y, &g[k]}); });
          }
          if (l) {
            r.record_lazy("rat.le_transitive", "p <= q and q <= s imply p <= s", !le[j * n + k] || le[i * n + k],
                          [&] { return rat_tuple({&x, &y, &g[k]}); });
          }
        }
      }
      if (l) {
        for (std::int64_t m = -2; m <= 2; ++m) {
          const Rat s(m, 2);
          const bool ok = m == 0 || (m > 0 ? rat_le(rat_mul(x, s), rat_mul(y, s)) : rat_le(rat_mul(y, s), rat_mul(x, s)));
          r.record_lazy("rat.le_mul_monotone", "p <= q gives ps <= qs for s > 0 and qs <= ps for s < 0", ok,
                        [&] { return rat_tuple({&x, &y, &s}); });
          r.record_lazy("rat.le_add_monotone", "p <= q gives p + s <= q + s", rat_le(rat_add(x, s), rat_add(y, s)),
                        [&] { return rat_tuple({&x, &y, &s}); });
        }
      }
    }
  }

  // the classes of the grid form a natural (total) order
  std::vector<RatClass> classes = canon;
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::vector<Symbol> names;
  for (const auto& c : classes) names.emplace_back(c.rep.str());
  order::Relation rel{FinSet(names)};
  for (const auto& a : classes)
    for (const auto& b : classes)
      if (rat_le(a.rep, b.rep)) rel.set(rel.carrier().index_of(Symbol(a.rep.str())), rel.carrier().index_of(Symbol(b.rep.str())));
  const order::OrderCheck oc = order::check_order(rel);
  std::string bad;
  for (const auto& chk : oc.report.checks()) {
    if (!chk.passed && bad.empty()) bad = chk.id + ":" + *chk.witness;
  }
  r.record("rat.classes_natural", "the order on classes is natural", oc.natural, bad);

  // group laws on the positive-denominator grid
  const std::vector<Rat> h = rat_grid(bound, false);
  const Rat zero(0, 1), one(1, 1);
  for (const Rat& x : h) {
    for (std::int64_t d = 1; d <= 9; ++d) {
      const Rat z(0, d);
      r.record_lazy("rat.add_unit", "p + 0/x = p", rat_eq(rat_add(x, z), x) && rat_eq(rat_add(z, x), x),
                    [&] { return rat_tuple({&x, &z}); });
    }
    r.record_lazy("rat.add_inverse", "p + (-p) = 0", rat_eq(rat_add(x, rat_neg(x)), zero), [&] { return x.str(); });
    r.record_lazy("rat.mul_unit", "p * 1/1 = p", rat_eq(rat_mul(x, one), x) && rat_eq(rat_mul(one, x), x),
                  [&] { return x.str(); });
    r.record_lazy("rat.mul_zero", "0 * p = 0", rat_eq(rat_mul(zero, x), zero), [&] { return x.str(); });
    if (x.num != 0) {
      r.record_lazy("rat.mul_inverse", "a/b * b/a = 1", rat_eq(rat_mul(x, rat_inv(x)), one), [&] { return x.str(); });
    }
    for (const Rat& y : h) {
      const Rat s = rat_add(x, y), p = rat_mul(x, y);
      r.record_lazy("rat.add_commutative", "p + q = q + p", rat_eq(s, rat_add(y, x)), [&] { return rat_tuple({&x, &y}); });
      r.record_lazy("rat.mul_commutative", "p * q = q * p", rat_eq(p, rat_mul(y, x)), [&] { return rat_tuple({&x, &y}); });
      for (const Rat& z : h) {
        r.record_lazy("rat.add_associative", "(p + q) + s = p + (q + s)", rat_eq(rat_add(s, z), rat_add(x, rat_add(y, z))),
                      [&] { return rat_tuple({&x, &y, &z}); });
        r.record_lazy("rat.mul_associative", "(p * q) * s = p * (q * s)", rat_eq(rat_mul(p, z), rat_mul(x, rat_mul(y, z))),
                      [&] { return rat_tuple({&x, &y, &z}); });
        r.record_lazy("rat.distributive", "p * (q + s) = p*q + p*s",
                      rat_eq(rat_mul(x, rat_add(y, z)), rat_add(p, rat_mul(x, z))),
                      [&] { return rat_tuple({&x, &y, &z}); });
        // well defined: equal inputs give equal outputs
        if (rat_eq(y, z)) {
          r.record_lazy("rat.mul_well_defined", "q = s implies p*q = p*s", rat_eq(p, rat_mul(x, z)),
                        [&] { return rat_tuple({&x, &y, &z}); });
          r.record_lazy("rat.add_well_defined", "q = s implies p+q = p+s", rat_eq(s, rat_add(x, z)),
                        [&] { return rat_tuple({&x, &y, &z}); });
        }
      }
    }
  }
  return r;
}

// The embedding x -> x/1 on {-N..N}, with the integer operations taken from
// the constructions in integers.hpp.
inline LawReport embed_laws(std::int64_t n) {
  LawReport r("embed");
  auto pair = [](std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  for (std::int64_t a = -n; a <= n; ++a) {
    for (std::int64_t b = -n; b <= n; ++b) {
      const Rat ia = embed_int(a), ib = embed_int(b);
      r.record_lazy("embed.injective", "i(a) = i(b) implies a = b", !rat_eq(ia, ib) || a == b, [&] { return pair(a, b); });
      r.record_lazy("embed.add", "i(a) + i(b) = i(a + b)", rat_eq(rat_add(ia, ib), embed_int(int_add(ExactInt(a), ExactInt(b)))),
                    [&] { return pair(a, b); });
      r.record_lazy("embed.mul", "i(a) * i(b) = i(a * b)", rat_eq(rat_mul(ia, ib), embed_int(int_mul(ExactInt(a), ExactInt(b)))),
                    [&] { return pair(a, b); });
      r.record_lazy("embed.order", "a <= b iff i(a) <= i(b)", (a <= b) == rat_le(ia, ib), [&] { return pair(a, b); });
    }
  }
  return r;
}

// Row orders N x {c} and column orders {a} x N (both read off rat_le) are dual
// via x/c -> a/x; plus the involutions p, r, q on the signed grid.
inline LawReport dual_order_checks(std::int64_t n) {
  if (n < 1) throw Error(Errc::UsageError, "bound must be at least 1", std::to_string(n));
  LawReport r("dual");
  auto induced = [](const std::vector<Rat>& xs) {
    std::vector<Symbol> names;
    for (const auto& x : xs) names.emplace_back(x.str());
    order::Relation rel{FinSet(names)};
    for (const auto& x : xs)
      for (const auto& y : xs)
        if (rat_le(x, y)) rel.set(rel.carrier().index_of(Symbol(x.str())), rel.carrier().index_of(Symbol(y.str())));
    return order::Poset(std::move(rel));
  };
  std::vector<Symbol> nat;
  for (std::int64_t x = 1; x <= n; ++x) nat.push_back(int_symbol(x));
  const order::Poset line = order::Poset::chain(nat);
  for (std::int64_t a = 1; a <= n; ++a) {
    for (std::int64_t c = 1; c <= n; ++c) {
      std::vector<Rat> row, col;
      for (std::int64_t x = 1; x <= n; ++x) {
        row.emplace_back(x, c);
        col.emplace_back(a, x);
      }
      const order::Poset rp = induced(row), cp = induced(col);
      const std::string tag = "(" + std::to_string(a) + "," + std::to_string(c) + ")";
      const FinMap to_row = FinMap::from_function(line.carrier(), rp.carrier(), [&](const Symbol& s) {
        return Symbol(Rat(std::stoll(s.str()), c).str());
      });
      const FinMap to_col = FinMap::from_function(line.carrier(), cp.carrier(), [&](const Symbol& s) {
        return Symbol(Rat(a, std::stoll(s.str())).str());
      });
      r.record("dual.row_natural", "x -> x/c is an order bijection N -> N x {c}",
               order::map_classify(to_row, line, rp).flags.order_bijective, tag);
      r.record("dual.column_dual", "x -> a/x is an order bijection N -> ({a} x N)^op",
               order::map_classify(to_col, line, cp.opposite()).flags.order_bijective, tag);
      const FinMap d = FinMap::from_function(rp.carrier(), cp.carrier(), [&](const Symbol& s) {
        const std::string t = s.str();
        return Symbol(Rat(a, std::stoll(t.substr(0, t.find('/')))).str());
      });
      const auto cls = order::map_classify(d, rp, cp.opposite());
      r.record("dual.contravariant", "x/c -> a/x is an order bijection N x {c} -> ({a} x N)^op",
               cls.flags.order_bijective, tag);
    }
  }
  const std::vector<Rat> g = rat_grid(n, true);
  for (const Rat& x : g) {
    r.record_lazy("dual.q_involution", "q(q(x)) = x", inv_q(inv_q(x)) == x, [&] { return x.str(); });
    r.record_lazy("dual.q_same_class", "q(x) = x as rationals", rat_eq(inv_q(x), x), [&] { return x.str(); });
    r.record_lazy("dual.p_is_r", "p(x) = r(x) as rationals", rat_eq(inv_p(x), inv_r(x)), [&] { return x.str(); });
    r.record_lazy("dual.p_negates", "x + p(x) = 0", rat_eq(rat_add(x, inv_p(x)), Rat(0, 1)), [&] { return x.str(); });
    for (const Rat& y : g) {
      if (!rat_le(x, y)) continue;
      const std::string w = "(" + x.str() + "," + y.str() + ")";
      r.record_lazy("dual.p_reversing", "x <= y implies p(y) <= p(x)", rat_le(inv_p(y), inv_p(x)), [&] { return w; });
      r.record_lazy("dual.r_reversing", "x <= y implies r(y) <= r(x)", rat_le(inv_r(y), inv_r(x)), [&] { return w; });
      r.record_lazy("dual.q_preserving", "x <= y implies q(x) <= q(y)", rat_le(inv_q(x), inv_q(y)), [&] { return w; });
    }
  }
  return r;
}

}  // namespace structa::numbers
