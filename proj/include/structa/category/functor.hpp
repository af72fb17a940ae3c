#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "structa/category/fincat.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/functions.hpp"

namespace structa::category {

// ---------------------------------------------------------------------------
// Targets. Laws are written once against this small interface and used both
// for functors into a FinCat and for Set-valued functors.

struct CatTarget {
  using Obj = std::size_t;
  using Arr = std::size_t;
  const FinCat* d;

  Obj src(Arr f) const { return d->src(f); }
  Obj tgt(Arr f) const { return d->tgt(f); }
  std::optional<Arr> id(Obj x) const {
    const std::size_t i = d->identity(x);
    return i == kNone ? std::nullopt : std::optional<Arr>(i);
  }
  std::optional<Arr> compose(Arr g, Arr f) const {
    if (!d->composable(g, f)) return std::nullopt;
    const std::size_t h = d->comp(g, f);
    return h == kNone ? std::nullopt : std::optional<Arr>(h);
  }
  std::string obj_name(Obj x) const { return d->object_name(x).str(); }
  std::string arr_name(Arr f) const { return d->arrow_name(f).str(); }
};

struct SetTarget {
  using Obj = FinSet;
  using Arr = FinMap;

  Obj src(const Arr& f) const { return f.dom(); }
  Obj tgt(const Arr& f) const { return f.cod(); }
  std::optional<Arr> id(const Obj& x) const { return FinMap::identity(x); }
  std::optional<Arr> compose(const Arr& g, const Arr& f) const {
    if (g.dom() != f.cod()) return std::nullopt;
    return structa::compose(g, f);
  }
  std::string obj_name(const Obj& x) const { return to_string(x); }
  std::string arr_name(const Arr& f) const { return to_string(f); }
};

enum class Variance { covariant, contravariant };

// Records prefix.objects / prefix.unit / prefix.composition for the
// assignment (ob, ar) on C. Covariant: F f : F a -> F b and F(g∘f) = Fg∘Ff.
// Contravariant: F f : F b -> F a and F(g∘f) = Ff∘Fg.
template <class T>
void functor_laws(LawReport& r, std::string_view prefix, const FinCat& c, const T& d,
                  const std::vector<typename T::Obj>& ob, const std::vector<typename T::Arr>& ar, Variance v) {
  const std::string p(prefix);
  const bool co = v == Variance::covariant;
  r.declare(p + ".objects", co ? "F f : F a -> F b for f : a -> b" : "F f : F b -> F a for f : a -> b");
  r.declare(p + ".unit", "F 1_a = 1_{F a}");
  r.declare(p + ".composition", co ? "F(g∘f) = F g ∘ F f" : "F(g∘f) = F f ∘ F g");
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    const auto& s = ob[c.src(f)];
    const auto& t = ob[c.tgt(f)];
    const bool ok = co ? (d.src(ar[f]) == s && d.tgt(ar[f]) == t) : (d.src(ar[f]) == t && d.tgt(ar[f]) == s);
    r.record_lazy(p + ".objects", "", ok, [&] { return c.arrow_name(f).str(); });
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const std::size_t i = c.identity(x);
    if (i == kNone) continue;
    const auto did = d.id(ob[x]);
    r.record_lazy(p + ".unit", "", did && *did == ar[i], [&] { return c.object_name(x).str(); });
  }
  for (std::size_t g = 0; g < c.num_arrows(); ++g) {
    for (std::size_t f = 0; f < c.num_arrows(); ++f) {
      const std::size_t gf = c.comp(g, f);
      if (gf == kNone || !c.composable(g, f)) continue;
      const auto img = co ? d.compose(ar[g], ar[f]) : d.compose(ar[f], ar[g]);
      r.record_lazy(p + ".composition", "", img && *img == ar[gf], [&] { return detail::w2(c, g, f); });
    }
  }
}

// ---------------------------------------------------------------------------
// Functors between finite categories

struct Functor {
  FinCat src;
  FinCat tgt;
  std::vector<std::size_t> on_obj;
  std::vector<std::size_t> on_arr;

  bool operator==(const Functor&) const = default;
};

inline Functor make_functor(const FinCat& c, const FinCat& d, const std::vector<std::pair<Symbol, Symbol>>& objects,
                            const std::vector<std::pair<Symbol, Symbol>>& arrows) {
  Functor out{c, d, std::vector<std::size_t>(c.num_objects(), kNone), std::vector<std::size_t>(c.num_arrows(), kNone)};
  for (const auto& [x, y] : objects) out.on_obj[c.object_index(x)] = d.object_index(y);
  for (const auto& [f, g] : arrows) out.on_arr[c.arrow_index(f)] = d.arrow_index(g);
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    if (out.on_obj[x] == kNone) throw Error(Errc::NotTotal, "object has no image", c.object_name(x).str());
  }
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    if (out.on_arr[f] == kNone) throw Error(Errc::NotTotal, "arrow has no image", c.arrow_name(f).str());
  }
  return out;
}

inline Functor identity_functor(const FinCat& c) {
  Functor out{c, c, std::vector<std::size_t>(c.num_objects()), std::vector<std::size_t>(c.num_arrows())};
  for (std::size_t i = 0; i < c.num_objects(); ++i) out.on_obj[i] = i;
  for (std::size_t i = 0; i < c.num_arrows(); ++i) out.on_arr[i] = i;
  return out;
}

// Functor sending every object to x and every arrow to 1_x.
inline Functor constant_functor(const FinCat& c, const FinCat& d, std::size_t x) {
  if (d.identity(x) == kNone) throw Error(Errc::InvalidStructure, "target object has no identity", d.object_name(x).str());
  return Functor{c, d, std::vector<std::size_t>(c.num_objects(), x), std::vector<std::size_t>(c.num_arrows(), d.identity(x))};
}

// G∘F.
inline Functor compose_functors(const Functor& g, const Functor& f) {
  if (!(f.tgt == g.src)) throw Error(Errc::Mismatch, "functors are not composable");
  Functor out{f.src, g.tgt, {}, {}};
  for (std::size_t x : f.on_obj) out.on_obj.push_back(g.on_obj[x]);
  for (std::size_t a : f.on_arr) out.on_arr.push_back(g.on_arr[a]);
  return out;
}

inline LawReport check_functor(const Functor& f) {
  LawReport r("functor");
  functor_laws(r, "functor", f.src, CatTarget{&f.tgt}, f.on_obj, f.on_arr, Variance::covariant);
  if (r.all_passed()) {
    r.declare("functor.preserves_iso", "F sends isomorphisms to isomorphisms");
    for (std::size_t a = 0; a < f.src.num_arrows(); ++a) {
      if (arrow_classify(f.src, a).iso) {
        r.record_lazy("functor.preserves_iso", "", arrow_classify(f.tgt, f.on_arr[a]).iso,
                      [&] { return f.src.arrow_name(a).str(); });
      }
    }
  }
  return r;
}

inline bool is_functor(const Functor& f) {
  LawReport r;
  functor_laws(r, "functor", f.src, CatTarget{&f.tgt}, f.on_obj, f.on_arr, Variance::covariant);
  return r.all_passed();
}

inline LawReport check_contravariant(const Functor& f) {
  LawReport r("contravariant");
  functor_laws(r, "contravariant", f.src, CatTarget{&f.tgt}, f.on_obj, f.on_arr, Variance::contravariant);
  return r;
}

struct FunctorClass {
  bool full = false;      // every restricted hom map is onto
  bool faithful = false;  // every restricted hom map is monic
  bool embedding = false; // faithful with monic object function
};

inline FunctorClass classify_functor(const Functor& f) {
  FunctorClass out{true, true, false};
  const FinCat& c = f.src;
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    for (std::size_t b = 0; b < c.num_objects(); ++b) {
      const auto hs = c.hom(a, b);
      const auto ht = f.tgt.hom(f.on_obj[a], f.on_obj[b]);
      std::vector<char> hit(f.tgt.num_arrows(), 0);
      for (std::size_t g : hs) {
        if (hit[f.on_arr[g]]) out.faithful = false;
        hit[f.on_arr[g]] = 1;
      }
      for (std::size_t g : ht) {
        if (!hit[g]) out.full = false;
      }
    }
  }
  bool obj_monic = true;
  std::vector<char> seen(f.tgt.num_objects(), 0);
  for (std::size_t y : f.on_obj) {
    if (seen[y]) obj_monic = false;
    seen[y] = 1;
  }
  out.embedding = out.faithful && obj_monic;
  return out;
}

inline Functor opposite_functor(const Functor& f) {
  return Functor{opposite_cat(f.src), opposite_cat(f.tgt), f.on_obj, f.on_arr};
}

// op on a finite universe: involutive on categories, sends functors to
// functors, preserves identities and composites.
inline LawReport op_universe_check(const std::vector<FinCat>& cats, const std::vector<Functor>& functors) {
  LawReport r("op");
  r.declare("op.involution", "op(op C) = C");
  r.declare("op.category", "op C is a category");
  r.declare("op.functor", "op F is a functor");
  r.declare("op.identity", "op(1_C) = 1_{op C}");
  r.declare("op.composition", "op(G∘F) = op G ∘ op F");
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const std::string w = "cat#" + std::to_string(i);
    const FinCat o = opposite_cat(cats[i]);
    r.record("op.involution", "", opposite_cat(o) == cats[i], w);
    r.record("op.category", "", is_category(o) == is_category(cats[i]), w);
    r.record("op.identity", "", opposite_functor(identity_functor(cats[i])) == identity_functor(o), w);
  }
  for (std::size_t i = 0; i < functors.size(); ++i) {
    r.record("op.functor", "", is_functor(opposite_functor(functors[i])) == is_functor(functors[i]),
             "functor#" + std::to_string(i));
    for (std::size_t j = 0; j < functors.size(); ++j) {
      if (!(functors[i].tgt == functors[j].src)) continue;
      const Functor lhs = opposite_functor(compose_functors(functors[j], functors[i]));
      const Functor rhs = compose_functors(opposite_functor(functors[j]), opposite_functor(functors[i]));
      r.record("op.composition", "", lhs == rhs, "functor#" + std::to_string(j) + "∘functor#" + std::to_string(i));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Variance

namespace detail {

inline std::optional<std::string> first_failure(const LawReport& r) {
  for (const auto& c : r.checks()) {
    if (!c.passed) return c.id + " at " + *c.witness;
  }
  return std::nullopt;
}

}  // namespace detail

// Contravariant data C -> D read as a covariant functor C -> op D.
inline Functor to_covariant(const Functor& contra) {
  const LawReport r = check_contravariant(contra);
  if (!r.all_passed()) {
    const LawReport co = check_functor(contra);
    throw Error(Errc::VarianceError,
                co.all_passed() ? "data is covariant, not contravariant" : "data is neither covariant nor contravariant",
                *detail::first_failure(r));
  }
  return Functor{contra.src, opposite_cat(contra.tgt), contra.on_obj, contra.on_arr};
}

// Covariant functor C -> E read as contravariant data C -> op E.
inline Functor to_contravariant(const Functor& co) {
  const LawReport r = check_functor(co);
  if (!r.all_passed()) {
    const LawReport contra = check_contravariant(co);
    throw Error(Errc::VarianceError,
                contra.all_passed() ? "data is contravariant, not covariant" : "data is neither covariant nor contravariant",
                *detail::first_failure(r));
  }
  return Functor{co.src, opposite_cat(co.tgt), co.on_obj, co.on_arr};
}

// ---------------------------------------------------------------------------
// Products

inline const ProductInfo& product_info(const FinCat& c) {
  if (!c.product()) throw Error(Errc::NotProduct, "category was not built as a product");
  return *c.product();
}

inline Functor projection(const FinCat& prod, int side) {
  const ProductInfo& p = product_info(prod);
  Functor out{prod, side == 0 ? p.left : p.right, {}, {}};
  for (const auto& pr : p.obj_pairs) out.on_obj.push_back(pr[side]);
  for (const auto& pr : p.arr_pairs) out.on_arr.push_back(pr[side]);
  return out;
}

// x -> (f x, g x).
inline Functor pair_functor(const Functor& f, const Functor& g) {
  if (!(f.src == g.src)) throw Error(Errc::Mismatch, "paired functors need a common domain");
  const FinCat prod = product_cat(f.tgt, g.tgt);
  const ProductInfo& p = *prod.product();
  Functor out{f.src, prod, {}, {}};
  for (std::size_t x = 0; x < f.src.num_objects(); ++x) out.on_obj.push_back(p.object(f.on_obj[x], g.on_obj[x]));
  for (std::size_t a = 0; a < f.src.num_arrows(); ++a) out.on_arr.push_back(p.arrow(f.on_arr[a], g.on_arr[a]));
  return out;
}

inline std::pair<Functor, Functor> unpair_functor(const Functor& h) {
  return {compose_functors(projection(h.tgt, 0), h), compose_functors(projection(h.tgt, 1), h)};
}

// (a, b) -> (f a, g b) : C1 × C2 -> D × D.
inline Functor common_range_product(const Functor& f, const Functor& g) {
  if (!(f.tgt == g.tgt)) throw Error(Errc::Mismatch, "functors need a common range");
  const FinCat dom = product_cat(f.src, g.src);
  const FinCat cod = product_cat(f.tgt, g.tgt);
  const ProductInfo& pd = *dom.product();
  const ProductInfo& pc = *cod.product();
  Functor out{dom, cod, {}, {}};
  for (const auto& [a, b] : pd.obj_pairs) out.on_obj.push_back(pc.object(f.on_obj[a], g.on_obj[b]));
  for (const auto& [a, b] : pd.arr_pairs) out.on_arr.push_back(pc.arrow(f.on_arr[a], g.on_arr[b]));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

struct EnumOptions {
  std::size_t limit = 100'000;  // maximal number of results before TooLarge
  bool injective = false;       // restrict to functors injective on objects and arrows
};

// Calls fn(functor) for every functor C -> D, in lexicographic order of the
// arrow assignment; fn returns false to stop early.
template <class Fn>
void for_each_functor(const FinCat& c, const FinCat& d, const EnumOptions& opt, Fn&& fn) {
  const std::size_t na = c.num_arrows();
  const std::size_t no = c.num_objects();
  std::vector<std::size_t> obj(no, kNone), arr(na, kNone);
  std::vector<char> used_arr(d.num_arrows(), 0), used_obj(d.num_objects(), 0);

  // Composable triples (g, f, g∘f), grouped by their largest index so each is
  // checked as soon as all three images are known.
  std::vector<std::vector<std::array<std::size_t, 3>>> due(na);
  for (std::size_t g = 0; g < na; ++g) {
    for (std::size_t f = 0; f < na; ++f) {
      const std::size_t gf = c.comp(g, f);
      if (gf != kNone && c.composable(g, f)) due[std::max({g, f, gf})].push_back({g, f, gf});
    }
  }
  std::vector<std::size_t> loose;
  {
    std::vector<char> touched(no, 0);
    for (std::size_t f = 0; f < na; ++f) touched[c.src(f)] = touched[c.tgt(f)] = 1;
    for (std::size_t x = 0; x < no; ++x) {
      if (!touched[x]) loose.push_back(x);
    }
  }
  auto bind = [&](std::size_t x, std::size_t y, bool& fresh) {
    fresh = false;
    if (obj[x] != kNone) return obj[x] == y;
    if (opt.injective && used_obj[y]) return false;
    obj[x] = y;
    used_obj[y] = 1;
    fresh = true;
    return true;
  };
  auto unbind = [&](std::size_t x) {
    used_obj[obj[x]] = 0;
    obj[x] = kNone;
  };
  auto consistent = [&](std::size_t k) {
    for (const auto& [g, f, gf] : due[k]) {
      const std::size_t img = d.comp(arr[g], arr[f]);
      if (img == kNone || img != arr[gf]) return false;
    }
    for (std::size_t x = 0; x < no; ++x) {
      if (c.identity(x) == k && arr[k] != d.identity(obj[x])) return false;
    }
    return true;
  };
  std::size_t produced = 0;
  bool stop = false;
  auto emit_loose = [&](auto&& self, std::size_t li) -> void {
    if (stop) return;
    if (li == loose.size()) {
      if (++produced > opt.limit) throw Error(Errc::TooLarge, "functor enumeration exceeds limit");
      if (!fn(Functor{c, d, obj, arr})) stop = true;
      return;
    }
    for (std::size_t y = 0; y < d.num_objects() && !stop; ++y) {
      bool fresh = false;
      if (!bind(loose[li], y, fresh)) continue;
      self(self, li + 1);
      if (fresh) unbind(loose[li]);
    }
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == na) {
      emit_loose(emit_loose, 0);
      return;
    }
    for (std::size_t g = 0; g < d.num_arrows() && !stop; ++g) {
      if (opt.injective && used_arr[g]) continue;
      bool fs = false, ft = false;
      if (!bind(c.src(k), d.src(g), fs)) continue;
      if (!bind(c.tgt(k), d.tgt(g), ft)) {
        if (fs) unbind(c.src(k));
        continue;
      }
      arr[k] = g;
      used_arr[g] = 1;
      if (consistent(k)) self(self, k + 1);
      used_arr[g] = 0;
      arr[k] = kNone;
      if (ft) unbind(c.tgt(k));
      if (fs) unbind(c.src(k));
    }
  };
  rec(rec, 0);
}

inline std::vector<Functor> all_functors(const FinCat& c, const FinCat& d, const EnumOptions& opt = {}) {
  std::vector<Functor> out;
  for_each_functor(c, d, opt, [&](Functor f) {
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

// An isomorphism C -> D (bijective on objects and arrows), if one exists.
inline std::optional<Functor> find_isomorphism(const FinCat& c, const FinCat& d, std::size_t max_arrows = 24) {
  if (c.num_objects() != d.num_objects() || c.num_arrows() != d.num_arrows()) return std::nullopt;
  if (c.num_arrows() > max_arrows) throw Error(Errc::TooLarge, "isomorphism search exceeds arrow bound");
  EnumOptions opt;
  opt.injective = true;
  opt.limit = static_cast<std::size_t>(-1);
  std::optional<Functor> found;
  for_each_functor(c, d, opt, [&](Functor f) {
    found = std::move(f);
    return false;
  });
  return found;
}

inline bool isomorphic(const FinCat& c, const FinCat& d) { return find_isomorphism(c, d).has_value(); }

}  // namespace structa::category
