#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "structa/category/fincat.hpp"
#include "structa/category/functor.hpp"

namespace structa::category {

// Object-indexed family component[a] : F a -> G a. A bridge in general; a
// natural transformation when every square commutes.
struct NatTrans {
  Functor F;
  Functor G;
  std::vector<std::size_t> component;

  bool operator==(const NatTrans&) const = default;
};

inline void require_parallel(const Functor& f, const Functor& g) {
  if (!(f.src == g.src) || !(f.tgt == g.tgt)) throw Error(Errc::Mismatch, "functors are not parallel");
}

inline void require_endpoints(const NatTrans& t) {
  require_parallel(t.F, t.G);
  const FinCat& c = t.F.src;
  const FinCat& d = t.F.tgt;
  if (t.component.size() != c.num_objects()) throw Error(Errc::NotTotal, "one component per object required");
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    const std::size_t k = t.component[a];
    if (k >= d.num_arrows() || d.src(k) != t.F.on_obj[a] || d.tgt(k) != t.G.on_obj[a]) {
      throw Error(Errc::EndpointError, "component does not run from F a to G a", c.object_name(a).str());
    }
  }
}

inline NatTrans make_nat(const Functor& f, const Functor& g, const std::vector<std::pair<Symbol, Symbol>>& comps) {
  NatTrans t{f, g, std::vector<std::size_t>(f.src.num_objects(), kNone)};
  for (const auto& [a, k] : comps) t.component[f.src.object_index(a)] = f.tgt.arrow_index(k);
  for (std::size_t a = 0; a < t.component.size(); ++a) {
    if (t.component[a] == kNone) throw Error(Errc::NotTotal, "object has no component", f.src.object_name(a).str());
  }
  require_endpoints(t);
  return t;
}

inline NatTrans identity_nat(const Functor& f) {
  NatTrans t{f, f, {}};
  for (std::size_t y : f.on_obj) {
    if (f.tgt.identity(y) == kNone) throw Error(Errc::InvalidStructure, "target object without identity");
    t.component.push_back(f.tgt.identity(y));
  }
  return t;
}

// G f ∘ τ a = τ b ∘ F f for every f : a -> b.
inline bool square_commutes(const NatTrans& t, std::size_t f) {
  const FinCat& c = t.F.src;
  const FinCat& d = t.F.tgt;
  const std::size_t lhs = d.comp(t.G.on_arr[f], t.component[c.src(f)]);
  const std::size_t rhs = d.comp(t.component[c.tgt(f)], t.F.on_arr[f]);
  return lhs != kNone && lhs == rhs;
}

struct BridgeResult {
  bool is_bridge = false;
  bool is_natural = false;
  LawReport report;
};

inline bool thin(const FinCat& d) {
  for (std::size_t a = 0; a < d.num_objects(); ++a) {
    for (std::size_t b = 0; b < d.num_objects(); ++b) {
      if (d.hom(a, b).size() > 1) return false;
    }
  }
  return true;
}

inline BridgeResult bridge_check(const NatTrans& t) {
  require_endpoints(t);
  BridgeResult out;
  out.is_bridge = true;
  out.report = LawReport("nat");
  LawReport& r = out.report;
  r.declare("nat.square", "G f ∘ τ a = τ b ∘ F f");
  for (std::size_t f = 0; f < t.F.src.num_arrows(); ++f) {
    r.record_lazy("nat.square", "", square_commutes(t, f), [&] { return t.F.src.arrow_name(f).str(); });
  }
  out.is_natural = r.passed("nat.square");
  if (thin(t.F.tgt)) {
    r.record("nat.thin_target", "a bridge into a category without parallel arrows is natural", out.is_natural);
  }
  return out;
}

inline bool is_natural(const NatTrans& t) {
  for (std::size_t f = 0; f < t.F.src.num_arrows(); ++f) {
    if (!square_commutes(t, f)) return false;
  }
  return true;
}

// Category on the components of τ: an arrow τf : τa -> τb for every f : a -> b,
// τg ∘ τf := τ(g∘f). Requires τ injective on objects, so that identities and
// composites are unambiguous. Returns the category and T : C -> it.
inline std::pair<FinCat, Functor> bridge_category(const NatTrans& t) {
  require_endpoints(t);
  const FinCat& c = t.F.src;
  const FinCat& d = t.F.tgt;
  std::vector<Symbol> onames;
  for (std::size_t k : t.component) onames.push_back(d.arrow_name(k));
  FinSet objs = FinSet::from_any(onames);
  if (objs.size() != onames.size()) throw Error(Errc::InvalidStructure, "bridge repeats a component across objects");
  std::vector<ArrowDecl> arrows;
  std::vector<std::pair<Symbol, Symbol>> ids;
  std::vector<std::array<Symbol, 3>> comp;
  auto aname = [&](std::size_t f) { return Symbol("t[" + c.arrow_name(f).str() + "]"); };
  for (std::size_t f = 0; f < c.num_arrows(); ++f) arrows.push_back({aname(f), onames[c.src(f)], onames[c.tgt(f)]});
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    if (c.identity(x) != kNone) ids.emplace_back(onames[x], aname(c.identity(x)));
  }
  for (std::size_t g = 0; g < c.num_arrows(); ++g) {
    for (std::size_t f = 0; f < c.num_arrows(); ++f) {
      if (c.composable(g, f) && c.comp(g, f) != kNone) comp.push_back({aname(g), aname(f), aname(c.comp(g, f))});
    }
  }
  FinCat cat(objs, arrows, ids, comp);
  Functor tf{c, cat, {}, {}};
  for (std::size_t x = 0; x < c.num_objects(); ++x) tf.on_obj.push_back(cat.object_index(onames[x]));
  for (std::size_t f = 0; f < c.num_arrows(); ++f) tf.on_arr.push_back(cat.arrow_index(aname(f)));
  return {std::move(cat), std::move(tf)};
}

// (σ·τ) x = σ x ∘ τ x for τ : F -> H, σ : H -> J.
inline NatTrans vcompose(const NatTrans& sigma, const NatTrans& tau) {
  if (!(tau.G == sigma.F)) throw Error(Errc::Mismatch, "vertical composition needs τ : F -> H and σ : H -> J");
  NatTrans out{tau.F, sigma.G, {}};
  const FinCat& d = tau.F.tgt;
  for (std::size_t x = 0; x < tau.component.size(); ++x) {
    const std::size_t k = d.comp(sigma.component[x], tau.component[x]);
    if (k == kNone) throw Error(Errc::Mismatch, "components do not compose", tau.F.src.object_name(x).str());
    out.component.push_back(k);
  }
  return out;
}

// τ : f -> g (C -> D), α : h -> i (D -> E). Primary formula
// (α∘τ) x = α(g x) ∘ h(τ x); the alternative is i(τ x) ∘ α(f x).
inline NatTrans hcompose(const NatTrans& alpha, const NatTrans& tau, bool alternative = false) {
  if (!(tau.F.tgt == alpha.F.src)) throw Error(Errc::Mismatch, "horizontal composition shape mismatch");
  const FinCat& e = alpha.F.tgt;
  NatTrans out{compose_functors(alpha.F, tau.F), compose_functors(alpha.G, tau.G), {}};
  for (std::size_t x = 0; x < tau.component.size(); ++x) {
    const std::size_t k =
        alternative ? e.comp(alpha.G.on_arr[tau.component[x]], alpha.component[tau.F.on_obj[x]])
                    : e.comp(alpha.component[tau.G.on_obj[x]], alpha.F.on_arr[tau.component[x]]);
    if (k == kNone) throw Error(Errc::Mismatch, "horizontal components do not compose");
    out.component.push_back(k);
  }
  return out;
}

// Grid τ : F -> G, σ : G -> H over C -> D and α : K -> L, β : L -> M over
// D -> E.
inline LawReport interchange_check(const NatTrans& alpha, const NatTrans& beta, const NatTrans& sigma,
                                   const NatTrans& tau) {
  LawReport r("interchange");
  const NatTrans lhs = hcompose(vcompose(beta, alpha), vcompose(sigma, tau));
  const NatTrans rhs = vcompose(hcompose(beta, sigma), hcompose(alpha, tau));
  r.record("interchange.law", "(β·α)∘(σ·τ) = (β∘σ)·(α∘τ)", lhs == rhs);
  for (const auto* pair : {&alpha, &beta}) {
    for (const auto* inner : {&tau, &sigma}) {
      r.record("interchange.hformulas", "α(g x) ∘ h(τ x) = i(τ x) ∘ α(f x)",
               hcompose(*pair, *inner) == hcompose(*pair, *inner, true));
    }
  }
  r.record("interchange.natural", "α∘τ is natural", is_natural(hcompose(alpha, tau)));
  return r;
}

// All natural transformations F -> G. Components are chosen object by object
// in index order; a square is checked as soon as both its components are set.
template <class Fn>
void for_each_nat(const Functor& f, const Functor& g, Fn&& fn) {
  require_parallel(f, g);
  const FinCat& c = f.src;
  const FinCat& d = f.tgt;
  const std::size_t no = c.num_objects();
  std::vector<std::vector<std::size_t>> due(no);
  for (std::size_t a = 0; a < c.num_arrows(); ++a) due[std::max(c.src(a), c.tgt(a))].push_back(a);
  NatTrans t{f, g, std::vector<std::size_t>(no, kNone)};
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (stop) return;
    if (x == no) {
      if (!fn(t)) stop = true;
      return;
    }
    for (std::size_t k : d.hom(f.on_obj[x], g.on_obj[x])) {
      t.component[x] = k;
      bool ok = true;
      for (std::size_t a : due[x]) {
        if (!square_commutes(t, a)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, x + 1);
      if (stop) return;
    }
    t.component[x] = kNone;
  };
  rec(rec, 0);
}

inline std::vector<NatTrans> all_nat(const Functor& f, const Functor& g) {
  std::vector<NatTrans> out;
  for_each_nat(f, g, [&](const NatTrans& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Functor categories

struct FunctorCategory {
  FinCat cat;                    // objects "F<i>", arrows "N<k>"
  std::vector<Functor> functors; // index = object index
  std::vector<NatTrans> nats;    // index = arrow index

  std::size_t functor_index(const Functor& f) const {
    for (std::size_t i = 0; i < functors.size(); ++i) {
      if (functors[i] == f) return i;
    }
    throw Error(Errc::Mismatch, "functor not in this functor category");
  }
  std::size_t nat_index(const NatTrans& t) const {
    for (std::size_t i = 0; i < nats.size(); ++i) {
      if (nats[i] == t) return i;
    }
    throw Error(Errc::Mismatch, "transformation not in this functor category");
  }
};

namespace detail {

inline std::string padded(char prefix, std::size_t i, std::size_t total) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(total == 0 ? 0 : total - 1).size();
  return std::string(1, prefix) + std::string(width - digits.size(), '0') + digits;
}

}  // namespace detail

inline FunctorCategory functor_category(const FinCat& c, const FinCat& d, std::size_t max_arrows = 20'000) {
  FunctorCategory out;
  out.functors = all_functors(c, d);
  const std::size_t nf = out.functors.size();
  std::vector<std::array<std::size_t, 2>> ends;
  for (std::size_t i = 0; i < nf; ++i) {
    for (std::size_t j = 0; j < nf; ++j) {
      for_each_nat(out.functors[i], out.functors[j], [&](const NatTrans& t) {
        if (out.nats.size() >= max_arrows) throw Error(Errc::TooLarge, "functor category exceeds arrow bound");
        out.nats.push_back(t);
        ends.push_back({i, j});
        return true;
      });
    }
  }
  const std::size_t na = out.nats.size();
  std::vector<Symbol> onames, anames;
  for (std::size_t i = 0; i < nf; ++i) onames.emplace_back(detail::padded('F', i, nf));
  for (std::size_t k = 0; k < na; ++k) anames.emplace_back(detail::padded('N', k, na));
  std::vector<std::size_t> src(na), tgt(na), ids(nf, kNone), comp(na * na, kNone);
  for (std::size_t k = 0; k < na; ++k) {
    src[k] = ends[k][0];
    tgt[k] = ends[k][1];
  }
  for (std::size_t i = 0; i < nf; ++i) {
    try {
      ids[i] = out.nat_index(identity_nat(out.functors[i]));
    } catch (const Error&) {
      ids[i] = kNone;
    }
  }
  for (std::size_t s = 0; s < na; ++s) {
    for (std::size_t t = 0; t < na; ++t) {
      if (src[s] != tgt[t]) continue;
      comp[s * na + t] = out.nat_index(vcompose(out.nats[s], out.nats[t]));
    }
  }
  out.cat = FinCat(FinSet(onames), FinSet(anames), std::move(src), std::move(tgt), std::move(ids), std::move(comp));
  return out;
}

// Cat(C,D) × Cat(D,E) -> Cat(C,E): (F, G) ↦ G∘F, (τ, α) ↦ α∘τ.
struct CompositionFunctor {
  FunctorCategory cd, de, ce;
  Functor functor;
};

inline CompositionFunctor composition_functor(const FinCat& c, const FinCat& d, const FinCat& e) {
  CompositionFunctor out{functor_category(c, d), functor_category(d, e), functor_category(c, e), {}};
  const FinCat prod = product_cat(out.cd.cat, out.de.cat);
  const ProductInfo& p = *prod.product();
  Functor& f = out.functor;
  f.src = prod;
  f.tgt = out.ce.cat;
  for (const auto& [i, j] : p.obj_pairs) {
    f.on_obj.push_back(out.ce.functor_index(compose_functors(out.de.functors[j], out.cd.functors[i])));
  }
  for (const auto& [s, t] : p.arr_pairs) f.on_arr.push_back(out.ce.nat_index(hcompose(out.de.nats[t], out.cd.nats[s])));
  return out;
}

// ---------------------------------------------------------------------------
// Arrow category of f : A -> C, g : B -> C. Objects (a, b, h) with
// h : f a -> g b; arrows (i, j) : (a, b, h) -> (a', b', h') with
// h'∘f(i) = g(j)∘h.

struct ArrowCategory {
  FinCat cat;
  std::vector<std::array<std::size_t, 3>> objects;  // (a, b, h) per object index
  std::vector<std::array<std::size_t, 4>> arrows;   // (i, j, src object, tgt object) per arrow index
};

inline ArrowCategory arrow_category(const Functor& f, const Functor& g) {
  if (!(f.tgt == g.tgt)) throw Error(Errc::Mismatch, "arrow category needs a common range");
  const FinCat& a = f.src;
  const FinCat& b = g.src;
  const FinCat& c = f.tgt;
  std::vector<std::array<std::size_t, 3>> objs;
  for (std::size_t x = 0; x < a.num_objects(); ++x) {
    for (std::size_t y = 0; y < b.num_objects(); ++y) {
      for (std::size_t h : c.hom(f.on_obj[x], g.on_obj[y])) objs.push_back({x, y, h});
    }
  }
  auto oname = [&](const std::array<std::size_t, 3>& o) {
    return "(" + a.object_name(o[0]).str() + "," + b.object_name(o[1]).str() + "," + c.arrow_name(o[2]).str() + ")";
  };
  std::vector<std::array<std::size_t, 4>> arrs;  // (i, j, so, to) with so/to indices into objs
  for (std::size_t so = 0; so < objs.size(); ++so) {
    for (std::size_t to = 0; to < objs.size(); ++to) {
      for (std::size_t i : a.hom(objs[so][0], objs[to][0])) {
        for (std::size_t j : b.hom(objs[so][1], objs[to][1])) {
          const std::size_t lhs = c.comp(objs[to][2], f.on_arr[i]);
          const std::size_t rhs = c.comp(g.on_arr[j], objs[so][2]);
          if (lhs != kNone && lhs == rhs) arrs.push_back({i, j, so, to});
        }
      }
    }
  }
  auto aname = [&](const std::array<std::size_t, 4>& r) {
    return "(" + a.arrow_name(r[0]).str() + "," + b.arrow_name(r[1]).str() + "):" + oname(objs[r[2]]) + "->" +
           oname(objs[r[3]]);
  };
  std::vector<Symbol> onames, anames;
  for (const auto& o : objs) onames.emplace_back(oname(o));
  for (const auto& r : arrs) anames.emplace_back(aname(r));
  FinSet os(onames), as(anames);
  const std::size_t no = os.size(), na = as.size();
  ArrowCategory out;
  out.objects.resize(no);
  out.arrows.resize(na);
  std::vector<std::size_t> opos(objs.size()), apos(arrs.size());
  for (std::size_t k = 0; k < objs.size(); ++k) {
    opos[k] = os.index_of(onames[k]);
    out.objects[opos[k]] = objs[k];
  }
  std::vector<std::size_t> src(na), tgt(na), ids(no, kNone), comp(na * na, kNone);
  for (std::size_t k = 0; k < arrs.size(); ++k) {
    apos[k] = as.index_of(anames[k]);
    out.arrows[apos[k]] = {arrs[k][0], arrs[k][1], opos[arrs[k][2]], opos[arrs[k][3]]};
    src[apos[k]] = opos[arrs[k][2]];
    tgt[apos[k]] = opos[arrs[k][3]];
  }
  for (std::size_t k = 0; k < arrs.size(); ++k) {
    const auto& [i, j, so, to] = arrs[k];
    if (so == to && i == a.identity(objs[so][0]) && j == b.identity(objs[so][1])) ids[opos[so]] = apos[k];
  }
  for (std::size_t s = 0; s < arrs.size(); ++s) {
    for (std::size_t t = 0; t < arrs.size(); ++t) {
      if (arrs[s][2] != arrs[t][3]) continue;
      const std::size_t i = a.comp(arrs[s][0], arrs[t][0]);
      const std::size_t j = b.comp(arrs[s][1], arrs[t][1]);
      for (std::size_t k = 0; k < arrs.size(); ++k) {
        if (arrs[k][0] == i && arrs[k][1] == j && arrs[k][2] == arrs[t][2] && arrs[k][3] == arrs[s][3]) {
          comp[apos[s] * na + apos[t]] = apos[k];
          break;
        }
      }
    }
  }
  out.cat = FinCat(std::move(os), std::move(as), std::move(src), std::move(tgt), std::move(ids), std::move(comp));
  return out;
}

}  // namespace structa::category
