#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "structa/core/finmap.hpp"
#include "structa/order/maps.hpp"
#include "structa/order/poset.hpp"

namespace structa::order {

struct CompletenessReport {
  bool directed_complete = false;        // every directed subset has a supremum
  bool complete_partial_order = false;   // directed complete with a minimum
  bool naturally_complete = false;       // every chain, the empty one included, has a supremum
  bool is_complete = false;              // every nonempty chain has a supremum
  bool upper_bound_complete = false;     // nonempty A with an upper bound has a supremum
  bool lower_bound_complete = false;     // nonempty A with a lower bound has an infimum
  bool bounded_complete = false;
  bool complete_lattice = false;         // every subset has supremum and infimum
  LawReport laws;
};

struct CompletenessOptions {
  std::size_t max_size = 16;           // subset enumeration bound
  std::size_t max_fixpoint_size = 6;   // monotone self-map enumeration bound (n^n maps)
};

namespace detail {

inline bool directed_complete_scan(const Poset& p) {
  for (Mask m = 1; m < (Mask{1} << p.size()); ++m) {
    if (is_directed_mask(p, m) && !sup_mask(p, m)) return false;
  }
  return true;
}

// Calls fn(values) for every monotone self-map of p.
template <class Fn>
void for_each_monotone_endo(const Poset& p, Fn&& fn) {
  const std::size_t n = p.size();
  std::vector<std::size_t> v(n, 0);
  std::size_t k = 0;
  // Depth-first assignment with pruning against already assigned points.
  auto consistent = [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (p.leq(j, i) && !p.leq(v[j], v[i])) return false;
      if (p.leq(i, j) && !p.leq(v[i], v[j])) return false;
    }
    return true;
  };
  if (n == 0) {
    fn(v);
    return;
  }
  v[0] = 0;
  k = 0;
  while (true) {
    if (consistent(k)) {
      if (k + 1 == n) {
        fn(v);
      } else {
        v[++k] = 0;
        continue;
      }
    }
    while (true) {
      if (++v[k] < n) break;
      if (k == 0) return;
      --k;
    }
  }
}

}  // namespace detail

inline CompletenessReport completeness_report(const Poset& p, const CompletenessOptions& opt = {}) {
  if (!p.has_masks() || p.size() > opt.max_size) {
    throw Error(Errc::TooLarge, "completeness report enumerates all subsets; carrier has " +
                                    std::to_string(p.size()) + " elements");
  }
  const std::size_t n = p.size();
  const FinSet& c = p.carrier();
  CompletenessReport out;
  out.laws = LawReport("completeness");
  LawReport& r = out.laws;

  out.directed_complete = detail::directed_complete_scan(p);
  const bool has_min = least_in(p, full_mask(n)).has_value();
  out.complete_partial_order = out.directed_complete && has_min;

  out.naturally_complete = true;
  out.is_complete = true;
  out.upper_bound_complete = true;
  out.lower_bound_complete = true;
  out.complete_lattice = true;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    const auto s = sup_mask(p, m);
    const auto i = inf_mask(p, m);
    if (is_chain_mask(p, m)) {
      if (!s) out.naturally_complete = false;
      if (m != 0 && !s) out.is_complete = false;
    }
    if (m != 0) {
      if (upper_mask(p, m) != 0 && !s) out.upper_bound_complete = false;
      if (lower_mask(p, m) != 0 && !i) out.lower_bound_complete = false;
    }
    if (!s || !i) out.complete_lattice = false;
  }
  out.bounded_complete = out.upper_bound_complete;

  r.record("completeness.finite_directed", "a finite partial order is directed complete", out.directed_complete);
  r.record("completeness.bounded_duality", "upper bound complete iff lower bound complete",
           out.upper_bound_complete == out.lower_bound_complete);
  r.record("completeness.natural_is", "naturally complete implies IS-complete",
           !out.naturally_complete || out.is_complete);
  if (out.complete_lattice) {
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      const auto i = inf_mask(p, m);
      const auto s = sup_mask(p, lower_mask(p, m));
      r.record_lazy("completeness.inf_is_sup_of_lower", "complete lattice: inf A = sup of the lower bounds of A",
                    i && s && *i == *s, [&] { return to_string(FinSet::from_mask(c, m)); });
    }
    r.record("completeness.lattice_directed", "complete lattice: L and L^op are directed complete",
             detail::directed_complete_scan(p) && detail::directed_complete_scan(p.opposite()));
  }
  if (n <= opt.max_fixpoint_size) {
    // Naturally complete iff every monotone self-map has a least fixed point.
    bool all_min_fix = true;
    std::string witness;
    detail::for_each_monotone_endo(p, [&](const std::vector<std::size_t>& v) {
      if (!all_min_fix) return;
      Mask fixed = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (v[x] == x) fixed |= Mask{1} << x;
      }
      if (!least_in(p, fixed)) {
        all_min_fix = false;
        witness = to_string(FinMap(c, c, v));
      }
    });
    r.record("completeness.natural_fixpoint", "naturally complete iff min Inv F exists for every monotone F",
             all_min_fix == out.naturally_complete, witness);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Partial self-maps ordered by restriction

struct PartialMapOptions {
  std::size_t max_base = 3;
};

// Elements are named like "{a->b}" ("{}" for the empty map).
inline Poset partial_map_poset(const FinSet& base, const PartialMapOptions& opt = {}) {
  if (base.size() > opt.max_base) {
    throw Error(Errc::TooLarge, "partial map poset grows as (n+1)^n; base exceeds " + std::to_string(opt.max_base));
  }
  const std::size_t n = base.size();
  // Encode a partial map as a vector over base with n meaning "undefined".
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::size_t> cur(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n + 1;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      cur[i] = rest % (n + 1);
      rest /= n + 1;
    }
    maps.push_back(cur);
  }
  auto name = [&](const std::vector<std::size_t>& m) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == n) continue;
      if (!first) s += ",";
      first = false;
      s += base[i].str() + "->" + base[m[i]].str();
    }
    return s + "}";
  };
  std::vector<Symbol> names;
  for (const auto& m : maps) names.emplace_back(name(m));
  FinSet carrier(names);
  Relation rel(carrier);
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      bool restricts = true;
      for (std::size_t i = 0; i < n && restricts; ++i) restricts = f[i] == n || f[i] == g[i];
      if (restricts) rel.set(carrier.index_of(Symbol(name(f))), carrier.index_of(Symbol(name(g))));
    }
  }
  return Poset(std::move(rel));
}

}  // namespace structa::order
