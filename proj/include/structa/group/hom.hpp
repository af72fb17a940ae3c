#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/functions.hpp"
#include "structa/core/law_report.hpp"
#include "structa/group/fingroup.hpp"

namespace structa::group {

struct GroupHom {
  FinGroup src;
  FinGroup tgt;
  FinMap map;

  std::size_t operator()(std::size_t x) const { return map.at(x); }
  bool operator==(const GroupHom&) const = default;
};

inline LawReport hom_laws(const FinGroup& g, const FinGroup& h, const FinMap& f) {
  if (f.dom() != g.carrier() || f.cod() != h.carrier()) {
    throw Error(Errc::CarrierMismatch, "map is not between the group carriers");
  }
  LawReport r("hom");
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) {
      r.record_lazy("hom.multiplicative", "h(xy) = h(x)h(y)", f.at(g.mul(x, y)) == h.mul(f.at(x), f.at(y)),
                    [&] { return detail::tuple_name(g.carrier(), {x, y}); });
    }
  r.record("hom.unit", "h(e) = e", f.at(g.unit()) == h.unit(), g.unit_name().str());
  for (std::size_t x = 0; x < g.size(); ++x) {
    r.record_lazy("hom.inverse", "h(x^-1) = h(x)^-1", f.at(g.inv(x)) == h.inv(f.at(x)),
                  [&] { return g.name(x).str(); });
  }
  return r;
}

inline GroupHom hom_check(const FinGroup& g, const FinGroup& h, const FinMap& f) {
  const LawReport r = hom_laws(g, h, f);
  if (const LawCheck* c = r.find("hom.multiplicative"); !c->passed) {
    throw Error(Errc::NotHomomorphism, "h(xy) != h(x)h(y)", *c->witness);
  }
  if (!r.all_passed()) throw Error(Errc::LawFailure, "multiplicative map fails a derived identity");
  return GroupHom{g, h, f};
}

// Fiber of the unit; asserted normal.
inline Subgroup kernel(const GroupHom& h) {
  const Subgroup k(h.src, fiber(h.map, h.tgt.unit_name()));
  subgroup_check(h.src, k.members);
  if (!is_normal(h.src, k)) throw Error(Errc::LawFailure, "kernel is not normal");
  return k;
}

inline Subgroup image(const GroupHom& h, const Subgroup& s) {
  std::vector<Symbol> v;
  for (std::size_t x : s.elems) v.push_back(h.tgt.name(h(x)));
  return Subgroup(h.tgt, FinSet::from_any(std::move(v)));
}

inline Subgroup image(const GroupHom& h) { return image(h, whole(h.src)); }

inline Subgroup preimage(const GroupHom& h, const Subgroup& s) { return Subgroup(h.src, h.map.preimage(s.members)); }

// The subgroup as a group in its own right (restricted table).
inline FinGroup as_group(const FinGroup& g, const Subgroup& s) {
  std::vector<std::size_t> cells;
  for (std::size_t a : s.elems)
    for (std::size_t b : s.elems) {
      const auto idx = s.members.find(g.name(g.mul(a, b)));
      if (!idx) throw Error(Errc::NotSubgroup, "not closed", detail::tuple_name(g.carrier(), {a, b}));
      cells.push_back(*idx);
    }
  return check_group(OpTable(s.members, std::move(cells)));
}

inline bool is_subgroup(const FinGroup& g, const FinSet& s) { return !s.empty() && subgroup_criteria(g, s).group; }

// Transfer of subgroups along h: images of subgroups of H are subgroups,
// images of normal subgroups are normal when h is onto (flagged and skipped
// otherwise), and preimages of every (normal) subgroup of the target are
// (normal) subgroups.
inline LawReport transfer_check(const GroupHom& h, const Subgroup& s) {
  LawReport r("transfer");
  const Subgroup k = kernel(h);
  r.record("transfer.kernel_normal", "the kernel is a normal subgroup", is_normal(h.src, k));
  const bool sub = is_subgroup(h.src, s.members);
  const Subgroup im = image(h, s);
  if (sub) {
    r.record("transfer.image_subgroup", "the image of a subgroup is a subgroup", is_subgroup(h.tgt, im.members),
             to_string(s.members));
    if (is_normal(h.src, s)) {
      if (classify(h.map).onto) {
        r.record("transfer.image_normal", "an epimorphism maps normal subgroups to normal subgroups",
                 is_normal(h.tgt, im), to_string(s.members));
      } else {
        r.declare("transfer.image_normal", "an epimorphism maps normal subgroups to normal subgroups");
        r.warn("transfer.image_normal", "skipped: not an epimorphism");
      }
    }
  } else {
    r.warn("transfer.image_subgroup", "skipped: argument is not a subgroup");
  }
  for (const auto& t : all_subgroups(h.tgt)) {
    const Subgroup pre = preimage(h, t);
    const bool pre_sub = is_subgroup(h.src, pre.members);
    r.record("transfer.preimage_subgroup", "preimages of subgroups are subgroups", pre_sub, to_string(t.members));
    if (is_normal(h.tgt, t)) {
      r.record("transfer.preimage_normal", "preimages of normal subgroups are normal",
               pre_sub && is_normal(h.src, pre), to_string(t.members));
    }
  }
  return r;
}

// φ: G/ker h → Im h, (ker h)x ↦ h(x); checked well defined, bijective and
// multiplicative.
inline GroupHom first_iso(const GroupHom& h) {
  const Subgroup k = kernel(h);
  const FinGroup q = quotient(h.src, k);
  const Subgroup im = image(h);
  const FinGroup img = as_group(h.tgt, im);
  std::vector<std::size_t> values(q.size(), img.size());
  for (std::size_t x = 0; x < h.src.size(); ++x) {
    const std::size_t c = q.index(Symbol(to_string(coset(h.src, k, x, Side::right))));
    const std::size_t v = img.index(h.tgt.name(h(x)));
    if (values[c] != img.size() && values[c] != v) {
      throw Error(Errc::LawFailure, "class image depends on the representative", h.src.name(x).str());
    }
    values[c] = v;
  }
  const FinMap phi(q.carrier(), img.carrier(), std::move(values));
  if (!classify(phi).bijective) throw Error(Errc::LawFailure, "induced map is not bijective");
  return hom_check(q, img, phi);
}

// ---------------------------------------------------------------------------
// Searches

// Every homomorphism G → H (unit fixed, remaining images brute forced).
inline std::vector<GroupHom> all_homs(const FinGroup& g, const FinGroup& h, double limit = 2e6) {
  double count = 1;
  for (std::size_t i = 1; i < g.size(); ++i) count *= static_cast<double>(h.size());
  if (count > limit) throw Error(Errc::TooLarge, "too many candidate maps");
  std::vector<GroupHom> out;
  std::vector<std::size_t> v(g.size(), 0);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != g.unit()) free.push_back(i);
  }
  v[g.unit()] = h.unit();
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < g.size() && ok; ++x)
      for (std::size_t y = 0; y < g.size() && ok; ++y) ok = v[g.mul(x, y)] == h.mul(v[x], v[y]);
    if (ok) out.push_back(GroupHom{g, h, FinMap(g.carrier(), h.carrier(), v)});
    std::size_t i = 0;
    while (i < free.size() && ++v[free[i]] == h.size()) v[free[i++]] = 0;
    if (i == free.size()) return out;
  }
}

namespace detail {

// Backtracking over injective assignments; a product is checked as soon as
// both factors and the product are assigned.
template <class Fn>
void for_each_iso(const FinGroup& g, const FinGroup& h, Fn&& fn) {
  const std::size_t n = g.size();
  if (n != h.size()) return;
  std::vector<std::size_t> v(n, n);
  std::vector<char> used(n, 0);
  bool stop = false;
  auto consistent = [&](std::size_t upto) {
    for (std::size_t x = 0; x <= upto; ++x)
      for (std::size_t y = 0; y <= upto; ++y) {
        const std::size_t p = g.mul(x, y);
        if (p <= upto && v[p] != h.mul(v[x], v[y])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (stop) return;
    if (x == n) {
      stop = !fn(v);
      return;
    }
    for (std::size_t y = 0; y < n && !stop; ++y) {
      if (used[y]) continue;
      v[x] = y;
      used[y] = 1;
      if (consistent(x)) self(self, x + 1);
      used[y] = 0;
    }
    v[x] = n;
  };
  rec(rec, 0);
}

}  // namespace detail

inline std::optional<GroupHom> find_group_iso(const FinGroup& g, const FinGroup& h) {
  std::optional<GroupHom> out;
  detail::for_each_iso(g, h, [&](const std::vector<std::size_t>& v) {
    out = GroupHom{g, h, FinMap(g.carrier(), h.carrier(), v)};
    return false;
  });
  return out;
}

inline bool isomorphic(const FinGroup& g, const FinGroup& h) { return find_group_iso(g, h).has_value(); }

inline std::vector<FinMap> automorphisms(const FinGroup& g) {
  if (g.size() > 8) throw Error(Errc::TooLarge, "automorphism enumeration is limited to order <= 8");
  std::vector<FinMap> out;
  detail::for_each_iso(g, g, [&](const std::vector<std::size_t>& v) {
    out.emplace_back(g.carrier(), g.carrier(), v);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Groups of bijections

// "[f(x0),f(x1),...]" for a map on a finite set.
inline Symbol map_word(const FinMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    if (i) s += ",";
    s += f.cod()[f.at(i)].str();
  }
  return Symbol(s + "]");
}

// Bijections of X closed under composition, generated by `gens`;
// the product is a*b = a∘b.
inline FinGroup perm_group(const FinSet& x, const std::vector<FinMap>& gens) {
  std::vector<FinMap> elems{FinMap::identity(x)};
  for (const auto& f : gens) {
    if (f.dom() != x || f.cod() != x || !classify(f).bijective) {
      throw Error(Errc::NotBijective, "generator is not a bijection of the carrier", map_word(f).str());
    }
    if (std::find(elems.begin(), elems.end(), f) == elems.end()) elems.push_back(f);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (const FinMap& p : {compose(elems[i], elems[j]), compose(elems[j], elems[i])}) {
        if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p);
      }
    }
  }
  std::vector<Symbol> names;
  for (const auto& f : elems) names.push_back(map_word(f));
  const FinSet c(names);
  std::vector<FinMap> by_index(c.size());
  for (std::size_t i = 0; i < elems.size(); ++i) by_index[c.index_of(names[i])] = elems[i];
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) cells.push_back(c.index_of(map_word(compose(by_index[i], by_index[j]))));
  return check_group(OpTable(c, std::move(cells)));
}

// Map back from a perm_group element name to the bijection it denotes.
inline FinMap perm_of(const FinSet& x, const Symbol& word) {
  const std::string& s = word.str();
  std::vector<Symbol> parts;
  std::string cur;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == ',') {
      parts.emplace_back(cur);
      cur.clear();
    } else {
      cur += s[i];
    }
  }
  if (!x.empty()) parts.emplace_back(cur);
  std::vector<std::pair<Symbol, Symbol>> assign;
  for (std::size_t i = 0; i < x.size(); ++i) assign.emplace_back(x[i], parts.at(i));
  return FinMap(x, x, assign);
}

inline FinMap conjugation(const FinGroup& g, std::size_t x) {
  std::vector<std::size_t> v;
  for (std::size_t a = 0; a < g.size(); ++a) v.push_back(g.mul(g.mul(x, a), g.inv(x)));
  return FinMap(g.carrier(), g.carrier(), std::move(v));
}

struct InnerAutomorphisms {
  FinGroup inn;       // the 𝔞_x under composition
  GroupHom conj;      // x ↦ 𝔞_x
  LawReport laws;
};

inline InnerAutomorphisms inner_automorphisms(const FinGroup& g) {
  LawReport r("inner");
  std::vector<FinMap> maps;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const FinMap a = conjugation(g, x);
    r.record("inner.bijective", "each 𝔞_x is bijective", classify(a).bijective, g.name(x).str());
    r.record("inner.automorphism", "each 𝔞_x is a homomorphism", hom_laws(g, g, a).all_passed(), g.name(x).str());
    maps.push_back(a);
  }
  const FinGroup inn = perm_group(g.carrier(), maps);
  std::vector<std::size_t> v;
  for (const auto& a : maps) v.push_back(inn.index(map_word(a)));
  const GroupHom conj = hom_check(g, inn, FinMap(g.carrier(), inn.carrier(), v));
  r.record("inner.epimorphism", "x ↦ 𝔞_x is onto the inner automorphisms", classify(conj.map).onto);
  r.record("inner.kernel_center", "the kernel of x ↦ 𝔞_x is the center",
           kernel(conj).members == center(g).members);
  if (g.size() <= 8) {
    const auto aut = automorphisms(g);
    for (const auto& s : aut) {
      const FinMap s_inv = inverse(s);
      for (const auto& a : maps) {
        const FinMap c = compose(compose(s, a), s_inv);
        r.record("inner.normal_in_aut", "σ∘𝔞∘σ^-1 is inner for every automorphism σ",
                 inn.carrier().contains(map_word(c)), map_word(s).str());
      }
    }
  } else {
    r.declare("inner.normal_in_aut", "σ∘𝔞∘σ^-1 is inner for every automorphism σ");
    r.warn("inner.normal_in_aut", "skipped: automorphism enumeration limited to order <= 8");
  }
  return InnerAutomorphisms{inn, conj, r};
}

// Left translations a ↦ (x ↦ a*x) as an isomorphism onto a group of bijections.
inline GroupHom cayley(const FinGroup& g) {
  std::vector<FinMap> maps;
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::vector<std::size_t> v;
    for (std::size_t x = 0; x < g.size(); ++x) v.push_back(g.mul(a, x));
    maps.emplace_back(g.carrier(), g.carrier(), std::move(v));
  }
  const FinGroup perms = perm_group(g.carrier(), maps);
  std::vector<std::size_t> v;
  for (const auto& m : maps) v.push_back(perms.index(map_word(m)));
  const GroupHom h = hom_check(g, perms, FinMap(g.carrier(), perms.carrier(), v));
  if (!classify(h.map).bijective) throw Error(Errc::LawFailure, "left translation is not faithful");
  return h;
}

}  // namespace structa::group
