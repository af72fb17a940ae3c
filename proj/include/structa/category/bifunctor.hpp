#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "structa/category/fincat.hpp"
#include "structa/category/functor.hpp"
#include "structa/category/natural.hpp"

namespace structa::category {

// A bifunctor on A × B, contravariant in A and covariant in B: for f : a -> c
// and g : b -> d, B(f, g) : B(c, b) -> B(a, d). Data is indexed by the objects
// and arrows of `dom = product_cat(A, B)`.
template <class T>
struct BifunctorOf {
  FinCat dom;
  T target;
  std::vector<typename T::Obj> on_obj;
  std::vector<typename T::Arr> on_arr;
};

// Set-valued functor (covariant or contravariant) with actual carriers.
struct SetRepr {
  FinCat src;
  std::vector<FinSet> sets;  // per object
  std::vector<FinMap> maps;  // per arrow
  Variance variance = Variance::covariant;

  bool operator==(const SetRepr& o) const {
    return src == o.src && sets == o.sets && maps == o.maps && variance == o.variance;
  }
};

inline LawReport check_set_functor(const SetRepr& f) {
  LawReport r("set_functor");
  functor_laws(r, "set_functor", f.src, SetTarget{}, f.sets, f.maps, f.variance);
  return r;
}

using SetBifunctor = BifunctorOf<SetTarget>;

struct Bifunctor {
  FinCat dom;
  FinCat tgt;
  std::vector<std::size_t> on_obj;
  std::vector<std::size_t> on_arr;

  bool operator==(const Bifunctor&) const = default;
};

namespace detail {

template <class T>
void bifunctor_laws(LawReport& r, const FinCat& dom, const T& d, const std::vector<typename T::Obj>& ob,
                    const std::vector<typename T::Arr>& ar) {
  const ProductInfo& p = product_info(dom);
  const FinCat& a = p.left;
  const FinCat& b = p.right;
  r.declare("bifunctor.objects", "B(f, g) : B(c, b) -> B(a, d) for f : a -> c, g : b -> d");
  r.declare("bifunctor.unit", "B(1_a, 1_b) = 1_{B(a, b)}");
  r.declare("bifunctor.composition", "B(h∘f, i∘g) = B(f, i) ∘ B(h, g)");
  for (std::size_t k = 0; k < dom.num_arrows(); ++k) {
    const auto [f, g] = p.arr_pairs[k];
    const bool ok = d.src(ar[k]) == ob[p.object(a.tgt(f), b.src(g))] && d.tgt(ar[k]) == ob[p.object(a.src(f), b.tgt(g))];
    r.record_lazy("bifunctor.objects", "", ok, [&] { return dom.arrow_name(k).str(); });
  }
  for (std::size_t x = 0; x < dom.num_objects(); ++x) {
    const std::size_t i = dom.identity(x);
    if (i == kNone) continue;
    const auto did = d.id(ob[x]);
    r.record_lazy("bifunctor.unit", "", did && *did == ar[i], [&] { return dom.object_name(x).str(); });
  }
  // Left-right operation form: for f : a -> c, h : c -> x, g : b -> d, i : d -> y.
  for (std::size_t f = 0; f < a.num_arrows(); ++f) {
    for (std::size_t h = 0; h < a.num_arrows(); ++h) {
      const std::size_t hf = a.comp(h, f);
      if (!a.composable(h, f) || hf == kNone) continue;
      for (std::size_t g = 0; g < b.num_arrows(); ++g) {
        for (std::size_t i = 0; i < b.num_arrows(); ++i) {
          const std::size_t ig = b.comp(i, g);
          if (!b.composable(i, g) || ig == kNone) continue;
          const auto rhs = d.compose(ar[p.arrow(f, i)], ar[p.arrow(h, g)]);
          r.record_lazy("bifunctor.composition", "", rhs && *rhs == ar[p.arrow(hf, ig)], [&] {
            return "(" + a.arrow_name(h).str() + "∘" + a.arrow_name(f).str() + "," + b.arrow_name(i).str() + "∘" +
                   b.arrow_name(g).str() + ")";
          });
        }
      }
    }
  }
}

}  // namespace detail

inline LawReport bifunctor_check(const Bifunctor& bf) {
  LawReport r("bifunctor");
  detail::bifunctor_laws(r, bf.dom, CatTarget{&bf.tgt}, bf.on_obj, bf.on_arr);
  return r;
}

inline LawReport bifunctor_check(const SetBifunctor& bf) {
  LawReport r("bifunctor");
  detail::bifunctor_laws(r, bf.dom, bf.target, bf.on_obj, bf.on_arr);
  return r;
}

// ---------------------------------------------------------------------------
// Bifunctor on A × B  <->  functor on op A × B. Names of objects and arrows
// are shared, so both directions are relabellings of the same tables.

inline FinCat flip_first(const FinCat& dom) {
  const ProductInfo& p = product_info(dom);
  return product_cat(opposite_cat(p.left), p.right);
}

inline Functor bifunctor_to_functor(const Bifunctor& bf) { return Functor{flip_first(bf.dom), bf.tgt, bf.on_obj, bf.on_arr}; }

inline Bifunctor functor_to_bifunctor(const Functor& f) { return Bifunctor{flip_first(f.src), f.tgt, f.on_obj, f.on_arr}; }

inline SetRepr bifunctor_to_functor(const SetBifunctor& bf) {
  return SetRepr{flip_first(bf.dom), bf.on_obj, bf.on_arr, Variance::covariant};
}

inline SetBifunctor functor_to_bifunctor(const SetRepr& f) {
  if (f.variance != Variance::covariant) throw Error(Errc::VarianceError, "bridge expects a covariant functor");
  return SetBifunctor{flip_first(f.src), SetTarget{}, f.sets, f.maps};
}

// Bifunctor into D1 × D2 split into its two components, and back.
inline std::pair<Bifunctor, Bifunctor> bifunctor_decompose(const Bifunctor& bf) {
  auto [p, q] = unpair_functor(bifunctor_to_functor(bf));
  return {functor_to_bifunctor(p), functor_to_bifunctor(q)};
}

inline Bifunctor bifunctor_pair(const Bifunctor& p, const Bifunctor& q) {
  return functor_to_bifunctor(pair_functor(bifunctor_to_functor(p), bifunctor_to_functor(q)));
}

// ---------------------------------------------------------------------------
// Slices. L_a = B(a, -) is covariant on B, R_x = B(-, x) contravariant on A.

template <class T>
struct SliceOf {
  std::vector<typename T::Obj> on_obj;
  std::vector<typename T::Arr> on_arr;
};

inline Functor left_slice(const Bifunctor& bf, std::size_t a) {
  const ProductInfo& p = product_info(bf.dom);
  Functor out{p.right, bf.tgt, {}, {}};
  for (std::size_t x = 0; x < p.right.num_objects(); ++x) out.on_obj.push_back(bf.on_obj[p.object(a, x)]);
  for (std::size_t g = 0; g < p.right.num_arrows(); ++g) out.on_arr.push_back(bf.on_arr[p.arrow(p.left.identity(a), g)]);
  return out;
}

inline Functor right_slice(const Bifunctor& bf, std::size_t x) {
  const ProductInfo& p = product_info(bf.dom);
  Functor out{p.left, bf.tgt, {}, {}};
  for (std::size_t a = 0; a < p.left.num_objects(); ++a) out.on_obj.push_back(bf.on_obj[p.object(a, x)]);
  for (std::size_t f = 0; f < p.left.num_arrows(); ++f) out.on_arr.push_back(bf.on_arr[p.arrow(f, p.right.identity(x))]);
  return out;
}

inline SetRepr left_slice(const SetBifunctor& bf, std::size_t a) {
  const ProductInfo& p = product_info(bf.dom);
  SetRepr out{p.right, {}, {}, Variance::covariant};
  for (std::size_t x = 0; x < p.right.num_objects(); ++x) out.sets.push_back(bf.on_obj[p.object(a, x)]);
  for (std::size_t g = 0; g < p.right.num_arrows(); ++g) out.maps.push_back(bf.on_arr[p.arrow(p.left.identity(a), g)]);
  return out;
}

inline SetRepr right_slice(const SetBifunctor& bf, std::size_t x) {
  const ProductInfo& p = product_info(bf.dom);
  SetRepr out{p.left, {}, {}, Variance::contravariant};
  for (std::size_t a = 0; a < p.left.num_objects(); ++a) out.sets.push_back(bf.on_obj[p.object(a, x)]);
  for (std::size_t f = 0; f < p.left.num_arrows(); ++f) out.maps.push_back(bf.on_arr[p.arrow(f, p.right.identity(x))]);
  return out;
}

// τ_x = B(f, 1_x) : L_c x -> L_a x for f : a -> c.
inline NatTrans slice_nat(const Bifunctor& bf, std::size_t f) {
  const ProductInfo& p = product_info(bf.dom);
  NatTrans t{left_slice(bf, p.left.tgt(f)), left_slice(bf, p.left.src(f)), {}};
  for (std::size_t x = 0; x < p.right.num_objects(); ++x) t.component.push_back(bf.on_arr[p.arrow(f, p.right.identity(x))]);
  require_endpoints(t);
  return t;
}

// ---------------------------------------------------------------------------
// Assembling a bifunctor from its slice families:
//   left[a]  : covariant on B (the would-be B(a, -)),
//   right[x] : contravariant on A (the would-be B(-, x)).
// They must agree on objects and identities and satisfy, for f : a -> c and
// g : b -> d,  L_a g ∘ R_b f = R_d f ∘ L_c g. Then B(f, g) := L_a g ∘ R_b f.

template <class T>
BifunctorOf<T> assemble_generic(const FinCat& a, const FinCat& b, const T& d, const std::vector<SliceOf<T>>& left,
                                const std::vector<SliceOf<T>>& right) {
  if (left.size() != a.num_objects() || right.size() != b.num_objects()) {
    throw Error(Errc::IncompatibleFamilies, "one slice per object required");
  }
  const FinCat dom = product_cat(a, b);
  const ProductInfo& p = *dom.product();
  BifunctorOf<T> out{dom, d, {}, {}};
  for (std::size_t k = 0; k < dom.num_objects(); ++k) {
    const auto [x, y] = p.obj_pairs[k];
    if (!(left[x].on_obj[y] == right[y].on_obj[x])) {
      throw Error(Errc::IncompatibleFamilies, "slices disagree on an object", dom.object_name(k).str());
    }
    out.on_obj.push_back(left[x].on_obj[y]);
  }
  for (std::size_t k = 0; k < dom.num_arrows(); ++k) {
    const auto [f, g] = p.arr_pairs[k];
    const std::size_t sa = a.src(f), tc = a.tgt(f), sb = b.src(g), td = b.tgt(g);
    const auto lhs = d.compose(left[sa].on_arr[g], right[sb].on_arr[f]);
    const auto rhs = d.compose(right[td].on_arr[f], left[tc].on_arr[g]);
    if (!lhs || !rhs || !(*lhs == *rhs)) {
      throw Error(Errc::IncompatibleFamilies, "slice square does not commute", dom.arrow_name(k).str());
    }
    out.on_arr.push_back(*lhs);
  }
  return out;
}

inline Bifunctor assemble_functor(const FinCat& a, const FinCat& b, const std::vector<Functor>& left,
                                  const std::vector<Functor>& right) {
  if (left.empty() && right.empty() && (a.num_objects() || b.num_objects())) {
    throw Error(Errc::IncompatibleFamilies, "empty slice families");
  }
  const FinCat& d = !left.empty() ? left.front().tgt : right.front().tgt;
  std::vector<SliceOf<CatTarget>> l, r;
  for (const auto& f : left) l.push_back({f.on_obj, f.on_arr});
  for (const auto& f : right) r.push_back({f.on_obj, f.on_arr});
  auto g = assemble_generic(a, b, CatTarget{&d}, l, r);
  return Bifunctor{g.dom, d, g.on_obj, g.on_arr};
}

inline SetBifunctor assemble_functor(const FinCat& a, const FinCat& b, const std::vector<SetRepr>& left,
                                     const std::vector<SetRepr>& right) {
  std::vector<SliceOf<SetTarget>> l, r;
  for (const auto& f : left) l.push_back({f.sets, f.maps});
  for (const auto& f : right) r.push_back({f.sets, f.maps});
  return assemble_generic(a, b, SetTarget{}, l, r);
}

}  // namespace structa::category
