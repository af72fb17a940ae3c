#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "structa/core/functions.hpp"
#include "structa/order/poset.hpp"

namespace structa::order {

struct OrderMapFlags {
  bool preserving = false;
  bool reversing = false;
  bool embedding = false;
  bool order_bijective = false;
  bool operator==(const OrderMapFlags&) const = default;
};

struct OrderMapClass {
  OrderMapFlags flags;
  OrderMapFlags dual;  // the same map read as P^op -> Q^op
  LawReport laws;
};

namespace detail {

inline void require_shape(const FinMap& f, const Poset& p, const Poset& q) {
  if (f.dom() != p.carrier() || f.cod() != q.carrier()) {
    throw Error(Errc::CarrierMismatch, "map carriers differ from the poset carriers");
  }
}

inline OrderMapFlags order_flags(const FinMap& f, const Poset& p, const Poset& q) {
  OrderMapFlags fl{true, true, true, false};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const bool src = p.leq(i, j);
      const bool img = q.leq(f.at(i), f.at(j));
      if (src && !img) fl.preserving = false;
      if (src && !q.leq(f.at(j), f.at(i))) fl.reversing = false;
      if (src != img) fl.embedding = false;
    }
  }
  fl.order_bijective = fl.embedding && classify(f).bijective;
  return fl;
}

}  // namespace detail

inline OrderMapClass map_classify(const FinMap& f, const Poset& p, const Poset& q) {
  detail::require_shape(f, p, q);
  OrderMapClass out;
  out.flags = detail::order_flags(f, p, q);
  out.dual = detail::order_flags(f, p.opposite(), q.opposite());
  out.laws = LawReport("order_map");
  const Classification c = classify(f);
  out.laws.record("order_map.embedding_monic", "order embeddings are monic", !out.flags.embedding || c.monic,
                  to_string(f));
  out.laws.record("order_map.bijective", "order bijections are bijective", !out.flags.order_bijective || c.bijective,
                  to_string(f));
  out.laws.record("order_map.dual_bijective", "f order bijective iff f order bijective on the opposites",
                  out.flags.order_bijective == out.dual.order_bijective, to_string(f));
  out.laws.record("order_map.dual_preserving", "f preserves order iff it preserves the opposite orders",
                  out.flags.preserving == out.dual.preserving, to_string(f));
  return out;
}

inline bool is_monotone(const FinMap& f, const Poset& p, const Poset& q) {
  detail::require_shape(f, p, q);
  return detail::order_flags(f, p, q).preserving;
}

// ---------------------------------------------------------------------------
// Galois connections

struct GaloisResult {
  bool axioms = false;      // both monotone, p <= g f p, f g q <= q
  bool comparable = false;  // f p <= q iff p <= g q
  LawReport report;
};

inline GaloisResult galois_check(const FinMap& f, const FinMap& g, const Poset& p, const Poset& q) {
  detail::require_shape(f, p, q);
  detail::require_shape(g, q, p);
  GaloisResult out;
  LawReport& r = out.report;
  r = LawReport("galois");
  const FinSet& pc = p.carrier();
  const FinSet& qc = q.carrier();
  r.record("galois.f_monotone", "f preserves order", is_monotone(f, p, q), to_string(f));
  r.record("galois.g_monotone", "g preserves order", is_monotone(g, q, p), to_string(g));
  r.declare("galois.unit", "p <= g(f(p))");
  r.declare("galois.counit", "f(g(q)) <= q");
  r.declare("galois.comparable", "f(p) <= q iff p <= g(q)");
  for (std::size_t i = 0; i < p.size(); ++i) {
    r.record_lazy("galois.unit", "", p.leq(i, g.at(f.at(i))), [&] { return "p=" + pc[i].str(); });
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    r.record_lazy("galois.counit", "", q.leq(f.at(g.at(j)), j), [&] { return "q=" + qc[j].str(); });
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      r.record_lazy("galois.comparable", "", q.leq(f.at(i), j) == p.leq(i, g.at(j)),
                    [&] { return "p=" + pc[i].str() + " q=" + qc[j].str(); });
    }
  }
  out.axioms = r.passed("galois.f_monotone") && r.passed("galois.g_monotone") && r.passed("galois.unit") &&
               r.passed("galois.counit");
  out.comparable = r.passed("galois.comparable");
  r.record("galois.equivalence", "axiom form holds iff comparability form holds", out.axioms == out.comparable,
           "f=" + to_string(f) + " g=" + to_string(g));
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise order on monotone maps P -> Q

inline Poset functor_order(const std::vector<FinMap>& maps, const Poset& p, const Poset& q) {
  std::vector<Symbol> names;
  for (const auto& f : maps) {
    if (!is_monotone(f, p, q)) throw Error(Errc::NotMonotone, "map does not preserve order", to_string(f));
    names.emplace_back(to_string(f));
  }
  FinSet carrier(names);
  Relation rel(carrier);
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      bool below = true;
      for (std::size_t i = 0; i < p.size() && below; ++i) below = q.leq(f.at(i), g.at(i));
      if (below) rel.set(carrier.index_of(Symbol(to_string(f))), carrier.index_of(Symbol(to_string(g))));
    }
  }
  return Poset(std::move(rel));
}

// ---------------------------------------------------------------------------
// Chains and maximal elements

struct TotalChain {
  std::vector<Symbol> elements;  // ascending
};

inline bool is_chain(const Poset& p, const FinSet& a) {
  const auto idx = detail::indices(p, a);
  for (std::size_t i : idx) {
    for (std::size_t j : idx) {
      if (!p.comparable(i, j)) return false;
    }
  }
  return true;
}

// Greedy extension: candidates are visited in lexicographic order and kept
// when comparable with everything kept so far. One pass yields a maximal chain
// because a rejected candidate stays incomparable to the growing chain.
inline TotalChain extend_chain(const Poset& p, const FinSet& chain) {
  if (!chain.subset_of(p.carrier())) throw Error(Errc::CarrierMismatch, "chain outside poset", to_string(chain));
  if (!is_chain(p, chain)) throw Error(Errc::InvalidStructure, "input is not a chain", to_string(chain));
  std::vector<std::size_t> kept = detail::indices(p, chain);
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (std::find(kept.begin(), kept.end(), c) != kept.end()) continue;
    if (std::all_of(kept.begin(), kept.end(), [&](std::size_t k) { return p.comparable(c, k); })) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) { return p.less(a, b); });
  TotalChain out;
  for (std::size_t k : kept) out.elements.push_back(p.carrier()[k]);
  return out;
}

inline bool is_maximal_chain(const Poset& p, const FinSet& chain) {
  if (!is_chain(p, chain)) return false;
  for (const auto& x : p.carrier()) {
    if (!chain.contains(x) && is_chain(p, chain.unite(FinSet{x}))) return false;
  }
  return true;
}

// Maximum of the greedy maximal chain from the empty chain. Requires every
// chain to have an upper bound; chains are enumerated when the carrier is
// small enough, otherwise only the empty chain can fail (finite chains have a
// maximum).
inline Symbol zorn_maximal(const Poset& p) {
  if (p.size() == 0) throw Error(Errc::UnboundedChain, "the empty chain has no upper bound", "{}");
  if (p.has_masks() && p.size() <= 16) {
    for (Mask m = 0; m < (Mask{1} << p.size()); ++m) {
      if (is_chain_mask(p, m) && upper_mask(p, m) == 0) {
        throw Error(Errc::UnboundedChain, "chain without upper bound", to_string(FinSet::from_mask(p.carrier(), m)));
      }
    }
  }
  const TotalChain c = extend_chain(p, FinSet{});
  return c.elements.back();
}

inline bool is_maximal_element(const Poset& p, const Symbol& x) {
  const std::size_t xi = p.carrier().index_of(x);
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (p.less(xi, y)) return false;
  }
  return true;
}

}  // namespace structa::order
