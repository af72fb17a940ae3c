#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "structa/core/error.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/functions.hpp"
#include "structa/core/law_report.hpp"
#include "structa/order/poset.hpp"

namespace structa::numbers {

using ExactInt = boost::multiprecision::cpp_int;

// Repeated-step constructions are linear in the step count; refuse anything
// that would take unreasonably long.
inline constexpr std::int64_t kMaxSteps = std::int64_t{1} << 24;

// The discrete number system restricted to {-N..N}: the natural order plus the
// successor arrow on the interior [-N, N-1] -> [-N+1, N].
struct IntWindow {
  std::int64_t N = 0;
  order::Poset poset;
  FinMap succ;
  std::vector<std::size_t> slot;  // slot[x + N] = carrier index of x

  bool contains(std::int64_t x) const { return x >= -N && x <= N; }
  std::size_t index(std::int64_t x) const {
    if (!contains(x)) throw Error(Errc::WindowOverflow, "value outside the window", std::to_string(x));
    return slot[static_cast<std::size_t>(x + N)];
  }
  std::int64_t value(std::size_t i) const { return std::stoll(poset.carrier()[i].str()); }
};

inline Symbol int_symbol(std::int64_t x) { return Symbol(std::to_string(x)); }

inline IntWindow build_discrete(std::int64_t n) {
  if (n < 1) throw Error(Errc::UsageError, "window bound must be at least 1", std::to_string(n));
  if (n > 4096) throw Error(Errc::TooLarge, "window bound above 4096", std::to_string(n));
  std::vector<Symbol> line, interior;
  for (std::int64_t x = -n; x <= n; ++x) {
    line.push_back(int_symbol(x));
    if (x < n) interior.push_back(int_symbol(x));
  }
  IntWindow w;
  w.N = n;
  w.poset = order::Poset::chain(line);
  const FinSet& c = w.poset.carrier();
  for (const auto& s : line) w.slot.push_back(c.index_of(s));
  w.succ = FinMap::from_function(FinSet(interior), c,
                                 [](const Symbol& s) { return int_symbol(std::stoll(s.str()) + 1); });
  return w;
}

// Axiom checks for the window: succ is a monotone embedding of the interior
// onto the shifted window, and every interior object is the source of exactly
// one covering arrow (its successor) and every non-minimal one the target of
// exactly one.
inline LawReport discrete_laws(const IntWindow& w) {
  LawReport r("discrete");
  const FinSet& c = w.poset.carrier();
  const FinMap& s = w.succ;
  const auto cls = classify(s);
  r.record("discrete.succ_monic", "succ is monic", cls.monic);
  std::vector<Symbol> shifted;
  for (std::int64_t x = -w.N + 1; x <= w.N; ++x) shifted.push_back(int_symbol(x));
  r.record("discrete.succ_onto_shifted", "succ maps the interior onto (-N, N]", s.image() == FinSet(shifted));
  for (std::size_t i = 0; i < s.dom().size(); ++i) {
    for (std::size_t j = 0; j < s.dom().size(); ++j) {
      const std::size_t a = c.index_of(s.dom()[i]), b = c.index_of(s.dom()[j]);
      if (!w.poset.less(a, b)) continue;
      r.record_lazy("discrete.succ_monotone", "a < b implies succ a < succ b", w.poset.less(s.at(i), s.at(j)),
                    [&] { return "(" + s.dom()[i].str() + "," + s.dom()[j].str() + ")"; });
    }
  }
  // covers: b covers a iff a < b with nothing strictly between
  auto covers = [&](std::size_t a, std::size_t b) {
    if (!w.poset.less(a, b)) return false;
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (w.poset.less(a, m) && w.poset.less(m, b)) return false;
    }
    return true;
  };
  for (std::int64_t x = -w.N; x <= w.N; ++x) {
    std::size_t out = 0, in = 0;
    const std::size_t a = w.index(x);
    for (std::size_t b = 0; b < c.size(); ++b) {
      out += covers(a, b) ? 1 : 0;
      in += covers(b, a) ? 1 : 0;
    }
    if (x < w.N) {
      const std::size_t sx = s.at(s.dom().index_of(int_symbol(x)));
      r.record_lazy("discrete.one_arrow_out", "each interior object is the source of exactly one step",
                    out == 1 && covers(a, sx), [&] { return std::to_string(x); });
    }
    if (x > -w.N) {
      r.record_lazy("discrete.one_arrow_in", "each non-minimal object is the target of exactly one step", in == 1,
                    [&] { return std::to_string(x); });
    }
  }
  return r;
}

// One step along +1 or its inverse inside the window.
inline std::int64_t window_step(const IntWindow& w, std::int64_t x, bool forward) {
  if (forward) {
    if (x >= w.N) throw Error(Errc::WindowOverflow, "successor leaves the window", std::to_string(x));
    return w.value(w.succ.at(w.succ.dom().index_of(int_symbol(x))));
  }
  if (x <= -w.N) throw Error(Errc::WindowOverflow, "predecessor leaves the window", std::to_string(x));
  // +(-1) is the inverse of +1: the unique preimage under succ
  const FinSet pre = w.succ.preimage(FinSet{int_symbol(x)});
  return std::stoll(pre[0].str());
}

// a + b inside the window: the functor +b applied to a, where +b is the b-fold
// composite of succ (b > 0) or of its inverse (b < 0).
inline std::int64_t int_add(const IntWindow& w, std::int64_t a, std::int64_t b) {
  if (!w.contains(a) || !w.contains(b)) {
    throw Error(Errc::WindowOverflow, "summand outside the window", std::to_string(a) + "," + std::to_string(b));
  }
  std::int64_t x = a;
  for (std::int64_t k = 0; k < (b < 0 ? -b : b); ++k) x = window_step(w, x, b > 0);
  return x;
}

// The same construction on the unbounded line: +1 is the successor
// automorphism and +b its b-fold composite.
inline ExactInt int_add(const ExactInt& a, const ExactInt& b) {
  if (abs(b) > kMaxSteps) throw Error(Errc::TooLarge, "sum by composition limited to |b| <= 2^24", b.str());
  const std::int64_t steps = static_cast<std::int64_t>(b);
  ExactInt x = a;
  for (std::int64_t k = 0; k < (steps < 0 ? -steps : steps); ++k) {
    if (steps > 0) ++x; else --x;
  }
  return x;
}

// The functor +x restricted to the part of the window where it stays inside.
inline FinMap window_shift(const IntWindow& w, std::int64_t x) {
  std::vector<Symbol> dom;
  for (std::int64_t a = -w.N; a <= w.N; ++a) {
    if (w.contains(a + x)) dom.push_back(int_symbol(a));
  }
  return FinMap::from_function(FinSet(dom), w.poset.carrier(),
                               [&](const Symbol& s) { return int_symbol(int_add(w, std::stoll(s.str()), x)); });
}

// Group laws of (Z, +) checked on the window, wherever every term involved
// stays inside it, plus the order of the shift functors.
inline LawReport int_group_check(std::int64_t n) {
  const IntWindow w = build_discrete(n);
  LawReport r("int_group");
  r.merge(discrete_laws(w));
  auto in = [&](std::int64_t v) { return w.contains(v); };
  auto pair = [](std::int64_t a, std::int64_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  std::vector<FinMap> shifts;
  for (std::int64_t x = -n; x <= n; ++x) shifts.push_back(window_shift(w, x));
  auto shift = [&](std::int64_t x) -> const FinMap& { return shifts[static_cast<std::size_t>(x + n)]; };
  for (std::int64_t a = -n; a <= n; ++a) {
    r.record_lazy("int.unit", "a + 0 = a and 0 + a = a", int_add(w, a, 0) == a && int_add(w, 0, a) == a,
                  [&] { return std::to_string(a); });
    r.record_lazy("int.inverse", "a + (-a) = 0", int_add(w, a, -a) == 0, [&] { return std::to_string(a); });
    // +a is order preserving on its domain and +a < +(a+1) pointwise
    const FinMap& f = shift(a);
    for (std::size_t i = 0; i < f.dom().size(); ++i) {
      for (std::size_t j = 0; j < f.dom().size(); ++j) {
        const std::size_t pi = w.poset.carrier().index_of(f.dom()[i]), pj = w.poset.carrier().index_of(f.dom()[j]);
        if (!w.poset.leq(pi, pj)) continue;
        r.record_lazy("int.shift_monotone", "+a preserves the order", w.poset.leq(f.at(i), f.at(j)),
                      [&] { return std::to_string(a) + ":" + pair(w.value(pi), w.value(pj)); });
      }
      const std::int64_t x = std::stoll(f.dom()[i].str());
      if (a < n && in(x + a + 1)) {
        r.record_lazy("int.shift_increasing", "x + a < x + (a+1)", w.poset.less(f.at(i), w.index(x + a + 1)),
                      [&] { return pair(x, a); });
      }
    }
    for (std::int64_t b = -n; b <= n; ++b) {
      if (!in(a + b)) continue;
      const std::int64_t s = int_add(w, a, b);
      r.record_lazy("int.add_direct", "composition sum equals the direct sum", s == a + b, [&] { return pair(a, b); });
      r.record_lazy("int.commutative", "a + b = b + a", s == int_add(w, b, a), [&] { return pair(a, b); });
      // +b o +a = +(a+b) wherever both sides are defined
      for (std::int64_t x = -n; x <= n; ++x) {
        if (!in(x + a) || !in(x + a + b)) continue;
        r.record_lazy("int.functor_composition", "+b after +a equals +(a+b)",
                      int_add(w, int_add(w, x, a), b) == int_add(w, x, s),
                      [&] { return "(" + std::to_string(x) + "," + std::to_string(a) + "," + std::to_string(b) + ")"; });
        if (in(x + b)) {
          r.record_lazy("int.associative", "(x + a) + b = x + (a + b)",
                        int_add(w, int_add(w, x, a), b) == int_add(w, x, int_add(w, a, b)), [&] {
                          return "(" + std::to_string(x) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
                        });
        }
      }
      // a <= b gives a natural transformation +a -> +b: every component x+a <= x+b exists
      if (a <= b) {
        for (std::int64_t x = -n; x <= n; ++x) {
          if (!in(x + a) || !in(x + b)) continue;
          r.record_lazy("int.nat_trans", "a <= b gives components x + a <= x + b",
                        w.poset.leq(w.index(int_add(w, x, a)), w.index(int_add(w, x, b))),
                        [&] { return "(" + std::to_string(x) + "," + std::to_string(a) + "," + std::to_string(b) + ")"; });
        }
      }
    }
  }
  return r;
}

// Product by the recursion a*(x+1) = a*x + a for x >= 0 and
// a*(x-1) = a*x - a for x <= 0, starting from a*0 = 0. The steps are iterated
// rather than recursed, so the cost is |b| additions.
inline ExactInt int_mul(const ExactInt& a, const ExactInt& b) {
  if (abs(b) > kMaxSteps) throw Error(Errc::TooLarge, "product by recursion limited to |b| <= 2^24", b.str());
  ExactInt acc = 0;
  if (b >= 0) {
    for (ExactInt x = 0; x < b; ++x) acc = acc + a;
  } else {
    for (ExactInt x = 0; x > b; --x) acc = acc - a;
  }
  return acc;
}

// Randomized cross-checks of the constructed operations against the direct
// ones, plus ring laws on sampled triples. `bound` caps |operand|.
inline LawReport int_arith_laws(std::size_t samples, std::int64_t bound, std::uint64_t seed) {
  LawReport r("int_arith");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(-bound, bound);
  auto tri = [](const ExactInt& a, const ExactInt& b, const ExactInt& c) {
    return "(" + a.str() + "," + b.str() + "," + c.str() + ")";
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const ExactInt a = pick(rng), b = pick(rng), c = pick(rng);
    const ExactInt ab = int_mul(a, b);
    r.record_lazy("int.add_direct", "composition sum equals the direct sum", int_add(a, b) == a + b,
                  [&] { return tri(a, b, 0); });
    r.record_lazy("int.mul_direct", "recursive product equals the direct product", ab == a * b,
                  [&] { return tri(a, b, 0); });
    r.record_lazy("int.mul_commutative", "a*b = b*a", ab == int_mul(b, a), [&] { return tri(a, b, 0); });
    r.record_lazy("int.mul_associative", "(a*b)*c = a*(b*c)", int_mul(ab, c) == int_mul(a, int_mul(b, c)),
                  [&] { return tri(a, b, c); });
    r.record_lazy("int.distributive", "(a+b)*c = a*c + b*c",
                  int_mul(int_add(a, b), c) == int_add(int_mul(a, c), int_mul(b, c)), [&] { return tri(a, b, c); });
    r.record_lazy("int.mul_units", "a*0 = 0, a*1 = a, a*(-1) = -a, 0*a = 0, 1*a = a",
                  int_mul(a, 0) == 0 && int_mul(a, 1) == a && int_mul(a, -1) == -a && int_mul(0, a) == 0 &&
                      int_mul(1, a) == a,
                  [&] { return a.str(); });
  }
  return r;
}

}  // namespace structa::numbers
