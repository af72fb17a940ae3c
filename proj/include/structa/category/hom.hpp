#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "structa/category/bifunctor.hpp"
#include "structa/category/fincat.hpp"
#include "structa/category/functor.hpp"
#include "structa/core/functions.hpp"

namespace structa::category {

// Arrow names a -> b.
inline FinSet hom_set(const FinCat& c, std::size_t a, std::size_t b) {
  std::vector<Symbol> out;
  for (std::size_t f : c.hom(a, b)) out.push_back(c.arrow_name(f));
  return FinSet(std::move(out));
}

inline FinSet hom_set(const FinCat& c, const Symbol& a, const Symbol& b) {
  return hom_set(c, c.object_index(a), c.object_index(b));
}

namespace detail {

// h ↦ post ∘ h ∘ pre over the given hom sets (pre/post may be kNone for identity).
inline FinMap hom_action(const FinCat& c, const FinSet& from, const FinSet& to, std::size_t pre, std::size_t post) {
  std::vector<std::size_t> values;
  values.reserve(from.size());
  for (const auto& h : from) {
    std::size_t k = c.arrow_index(h);
    if (pre != kNone) k = c.comp(k, pre);
    if (k != kNone && post != kNone) k = c.comp(post, k);
    if (k == kNone) throw Error(Errc::InvalidStructure, "composite undefined in hom action", h.str());
    values.push_back(to.index_of(c.arrow_name(k)));
  }
  return FinMap(from, to, std::move(values));
}

}  // namespace detail

// L_x a = Hom(x, a), L_x f = f ∘ -.
inline SetRepr hom_covariant(const FinCat& c, std::size_t x) {
  SetRepr out{c, {}, {}, Variance::covariant};
  for (std::size_t a = 0; a < c.num_objects(); ++a) out.sets.push_back(hom_set(c, x, a));
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    out.maps.push_back(detail::hom_action(c, out.sets[c.src(f)], out.sets[c.tgt(f)], kNone, f));
  }
  return out;
}

// R_x a = Hom(a, x), R_x f = - ∘ f (contravariant).
inline SetRepr hom_contravariant(const FinCat& c, std::size_t x) {
  SetRepr out{c, {}, {}, Variance::contravariant};
  for (std::size_t a = 0; a < c.num_objects(); ++a) out.sets.push_back(hom_set(c, a, x));
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    out.maps.push_back(detail::hom_action(c, out.sets[c.tgt(f)], out.sets[c.src(f)], f, kNone));
  }
  return out;
}

inline std::pair<SetRepr, SetRepr> hom_functors(const FinCat& c, std::size_t x) {
  return {hom_covariant(c, x), hom_contravariant(c, x)};
}

// Hom(a, b) on C × C, contravariant in the first argument:
// Hom(f, g)(h) = g ∘ h ∘ f.
inline SetBifunctor hom_bifunctor(const FinCat& c) {
  const FinCat dom = product_cat(c, c);
  const ProductInfo& p = *dom.product();
  SetBifunctor out{dom, SetTarget{}, {}, {}};
  for (const auto& [a, b] : p.obj_pairs) out.on_obj.push_back(hom_set(c, a, b));
  for (const auto& [f, g] : p.arr_pairs) {
    out.on_arr.push_back(
        detail::hom_action(c, out.on_obj[p.object(c.tgt(f), c.src(g))], out.on_obj[p.object(c.src(f), c.tgt(g))], f, g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Natural transformations between Set-valued functors

struct SetNat {
  SetRepr F;
  SetRepr G;
  std::vector<FinMap> component;

  bool operator==(const SetNat& o) const { return F == o.F && G == o.G && component == o.component; }
};

inline bool set_square_commutes(const SetNat& t, std::size_t f) {
  const FinCat& c = t.F.src;
  if (t.F.variance == Variance::covariant) {
    return compose(t.G.maps[f], t.component[c.src(f)]) == compose(t.component[c.tgt(f)], t.F.maps[f]);
  }
  return compose(t.G.maps[f], t.component[c.tgt(f)]) == compose(t.component[c.src(f)], t.F.maps[f]);
}

inline LawReport check_set_nat(const SetNat& t) {
  LawReport r("set_nat");
  r.declare("set_nat.endpoints", "τ a : F a -> G a");
  r.declare("set_nat.square", "G f ∘ τ a = τ b ∘ F f");
  bool ends = true;
  for (std::size_t a = 0; a < t.F.src.num_objects(); ++a) {
    const bool ok = t.component[a].dom() == t.F.sets[a] && t.component[a].cod() == t.G.sets[a];
    ends = ends && ok;
    r.record("set_nat.endpoints", "", ok, t.F.src.object_name(a).str());
  }
  if (ends) {
    for (std::size_t f = 0; f < t.F.src.num_arrows(); ++f) {
      r.record_lazy("set_nat.square", "", set_square_commutes(t, f), [&] { return t.F.src.arrow_name(f).str(); });
    }
  }
  return r;
}

inline SetNat set_identity_nat(const SetRepr& f) {
  SetNat t{f, f, {}};
  for (const auto& s : f.sets) t.component.push_back(FinMap::identity(s));
  return t;
}

inline SetNat set_vcompose(const SetNat& sigma, const SetNat& tau) {
  if (!(tau.G == sigma.F)) throw Error(Errc::Mismatch, "vertical composition needs τ : F -> H and σ : H -> J");
  SetNat out{tau.F, sigma.G, {}};
  for (std::size_t x = 0; x < tau.component.size(); ++x) out.component.push_back(compose(sigma.component[x], tau.component[x]));
  return out;
}

// τ_x = B(f, 1_x) : B(c, x) -> B(a, x) for f : a -> c.
inline SetNat slice_nat(const SetBifunctor& bf, std::size_t f) {
  const ProductInfo& p = product_info(bf.dom);
  SetNat t{left_slice(bf, p.left.tgt(f)), left_slice(bf, p.left.src(f)), {}};
  for (std::size_t x = 0; x < p.right.num_objects(); ++x) t.component.push_back(bf.on_arr[p.arrow(f, p.right.identity(x))]);
  return t;
}

// All natural transformations F -> G between covariant Set-valued functors,
// object by object, pruning on squares whose components are both chosen.
inline std::vector<SetNat> all_set_nat(const SetRepr& f, const SetRepr& g, std::size_t limit = 1'000'000) {
  if (!(f.src == g.src) || f.variance != g.variance) throw Error(Errc::Mismatch, "functors are not parallel");
  const FinCat& c = f.src;
  const std::size_t no = c.num_objects();
  std::vector<std::vector<std::size_t>> due(no);
  for (std::size_t a = 0; a < c.num_arrows(); ++a) due[std::max(c.src(a), c.tgt(a))].push_back(a);
  std::vector<std::vector<FinMap>> choices(no);
  for (std::size_t x = 0; x < no; ++x) choices[x] = FinMap::all(f.sets[x], g.sets[x], limit);
  std::vector<SetNat> out;
  SetNat t{f, g, std::vector<FinMap>(no)};
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == no) {
      if (out.size() >= limit) throw Error(Errc::TooLarge, "natural transformation enumeration exceeds limit");
      out.push_back(t);
      return;
    }
    for (const auto& m : choices[x]) {
      t.component[x] = m;
      bool ok = true;
      for (std::size_t a : due[x]) {
        if (!set_square_commutes(t, a)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Yoneda

struct YonedaResult {
  std::vector<SetNat> nat_set;  // Nat(L_a, F), enumeration order
  FinMap phi;                   // "N<k>" ↦ τ_a(1_a) ∈ F a
  LawReport report;
};

// τ_c(h) = F h (x) for h : a -> c.
inline SetNat yoneda_inverse(const FinCat& c, std::size_t a, const SetRepr& f, const Symbol& x) {
  const SetRepr la = hom_covariant(c, a);
  SetNat t{la, f, {}};
  for (std::size_t obj = 0; obj < c.num_objects(); ++obj) {
    std::vector<std::size_t> values;
    for (const auto& h : la.sets[obj]) {
      const FinMap& fh = f.maps[c.arrow_index(h)];
      values.push_back(f.sets[obj].index_of(fh(x)));
    }
    t.component.push_back(FinMap(la.sets[obj], f.sets[obj], std::move(values)));
  }
  return t;
}

inline YonedaResult yoneda(const FinCat& c, std::size_t a, const SetRepr& f) {
  if (f.variance != Variance::covariant) throw Error(Errc::VarianceError, "Yoneda expects a covariant functor");
  if (!check_set_functor(f).all_passed()) throw Error(Errc::LawFailure, "input is not a functor");
  if (c.identity(a) == kNone) throw Error(Errc::InvalidStructure, "object without identity");
  YonedaResult out;
  const SetRepr la = hom_covariant(c, a);
  out.nat_set = all_set_nat(la, f);
  const std::size_t n = out.nat_set.size();
  std::vector<Symbol> names;
  std::vector<std::size_t> values;
  const Symbol id_a = c.arrow_name(c.identity(a));
  for (std::size_t k = 0; k < n; ++k) {
    names.emplace_back(detail::padded('N', k, n));
    values.push_back(f.sets[a].index_of(out.nat_set[k].component[a](id_a)));
  }
  out.phi = FinMap(FinSet(names), f.sets[a], std::move(values));
  LawReport& r = out.report;
  r = LawReport("yoneda");
  r.record("yoneda.count", "|Nat(L_a, F)| = |F a|", n == f.sets[a].size(),
           std::to_string(n) + " vs " + std::to_string(f.sets[a].size()));
  r.record("yoneda.phi_bijective", "φ(τ) = τ_a(1_a) is bijective", classify(out.phi).bijective);
  r.declare("yoneda.inverse_left", "φ⁻¹(φ(τ)) = τ");
  r.declare("yoneda.inverse_right", "φ(φ⁻¹(x)) = x");
  for (std::size_t k = 0; k < n; ++k) {
    r.record_lazy("yoneda.inverse_left", "", yoneda_inverse(c, a, f, out.phi(names[k])) == out.nat_set[k],
                  [&] { return names[k].str(); });
  }
  for (const auto& x : f.sets[a]) {
    const SetNat t = yoneda_inverse(c, a, f, x);
    r.record_lazy("yoneda.inverse_right", "", check_set_nat(t).all_passed() && t.component[a](id_a) == x,
                  [&] { return x.str(); });
  }
  // Naturality in a: for h : a -> b, φ(τ · h†) = F h (φ τ), where
  // (h†)_d(g) = g ∘ h : Hom(b, d) -> Hom(a, d).
  r.declare("yoneda.phi_natural", "φ(τ·h†) = F h (φ τ)");
  for (std::size_t h = 0; h < c.num_arrows(); ++h) {
    if (c.src(h) != a) continue;
    const std::size_t b = c.tgt(h);
    if (c.identity(b) == kNone) continue;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& tau = out.nat_set[k];
      // (τ·h†)_b(1_b) = τ_b(1_b ∘ h)
      const std::size_t g = c.comp(c.identity(b), h);
      const Symbol lhs = tau.component[b](c.arrow_name(g));
      const Symbol rhs = f.maps[h](out.phi(names[k]));
      r.record_lazy("yoneda.phi_natural", "", lhs == rhs,
                    [&] { return "(" + names[k].str() + "," + c.arrow_name(h).str() + ")"; });
    }
  }
  return out;
}

// f† : L_a -> L_b for f : b -> a, (f†)_c(g) = g ∘ f.
inline SetNat dagger(const FinCat& c, std::size_t f) {
  const SetRepr la = hom_covariant(c, c.tgt(f));
  const SetRepr lb = hom_covariant(c, c.src(f));
  SetNat t{la, lb, {}};
  for (std::size_t x = 0; x < c.num_objects(); ++x) t.component.push_back(detail::hom_action(c, la.sets[x], lb.sets[x], f, kNone));
  return t;
}

// f ↦ f† is a bijection Hom(b, a) -> Nat(L_a, L_b) for every pair.
inline LawReport yoneda_embedding(const FinCat& c) {
  LawReport r("yoneda_embedding");
  r.declare("yoneda_embedding.natural", "f† is natural");
  r.declare("yoneda_embedding.faithful", "f ↦ f† is monic on Hom(b, a)");
  r.declare("yoneda_embedding.full", "f ↦ f† is onto Nat(L_a, L_b)");
  std::vector<SetRepr> l;
  for (std::size_t x = 0; x < c.num_objects(); ++x) l.push_back(hom_covariant(c, x));
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    for (std::size_t b = 0; b < c.num_objects(); ++b) {
      const std::string w = "(" + c.object_name(b).str() + "," + c.object_name(a).str() + ")";
      const auto nats = all_set_nat(l[a], l[b]);
      std::vector<SetNat> images;
      for (std::size_t f : c.hom(b, a)) {
        SetNat d = dagger(c, f);
        r.record_lazy("yoneda_embedding.natural", "", check_set_nat(d).all_passed(), [&] { return c.arrow_name(f).str(); });
        images.push_back(std::move(d));
      }
      bool monic = true;
      for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) monic = monic && !(images[i] == images[j]);
      }
      r.record("yoneda_embedding.faithful", "", monic, w);
      bool onto = true;
      for (const auto& t : nats) onto = onto && std::find(images.begin(), images.end(), t) != images.end();
      r.record("yoneda_embedding.full", "", onto, w);
    }
  }
  return r;
}

// Given representations (x, β : L_x -> F) and (y, γ : L_y -> F), the unique
// isomorphism f : x -> y with γ = β · f†.
inline std::size_t compare_representations(const FinCat& c, const SetRepr& f, std::size_t x, const SetNat& beta,
                                           std::size_t y, const SetNat& gamma) {
  auto require_rep = [&](std::size_t obj, const SetNat& t, const char* which) {
    if (!(t.F == hom_covariant(c, obj)) || !(t.G == f) || !check_set_nat(t).all_passed()) {
      throw Error(Errc::InvalidStructure, std::string(which) + " is not a natural transformation L -> F");
    }
    for (const auto& m : t.component) {
      if (!classify(m).bijective) throw Error(Errc::InvalidStructure, std::string(which) + " is not a natural isomorphism");
    }
  };
  require_rep(x, beta, "β");
  require_rep(y, gamma, "γ");
  std::vector<std::size_t> found;
  for (std::size_t k : c.hom(x, y)) {
    if (!arrow_classify(c, k).iso) continue;
    const SetNat d = dagger(c, k);  // L_y -> L_x
    if (set_vcompose(beta, d) == gamma) found.push_back(k);
  }
  if (found.empty()) throw Error(Errc::NotIsomorphicRepresentations, "no isomorphism relates the representations");
  if (found.size() > 1) {
    throw Error(Errc::LawFailure, "representation isomorphism is not unique", c.arrow_name(found[1]).str());
  }
  return found.front();
}

}  // namespace structa::category
