#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/family.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/functions.hpp"
#include "structa/core/law_report.hpp"

namespace structa::settools {

// Families over carriers of at most six points fit in one 64-bit word: bit m
// is set iff the subset with mask m is a member.
using FamBits = std::uint64_t;
inline constexpr std::size_t kMaxBitsCarrier = 6;

namespace detail {

inline void require_small(const FinSet& c, std::size_t limit = kMaxBitsCarrier) {
  if (c.size() > limit) {
    throw Error(Errc::TooLarge, "carrier above " + std::to_string(limit) + " points", to_string(c));
  }
}

inline FamBits fam_bits(const Family& x) {
  require_small(x.carrier());
  FamBits b = 0;
  for (Mask m : x.masks()) b |= FamBits{1} << m;
  return b;
}

inline Family from_bits(const FinSet& carrier, FamBits b) {
  std::vector<Mask> masks;
  for (Mask m = 0; m < (Mask{1} << carrier.size()); ++m) {
    if (b & (FamBits{1} << m)) masks.push_back(m);
  }
  return Family::from_masks(carrier, masks);
}

inline bool has(FamBits b, Mask m) { return (b >> m) & 1U; }

// f as a table of codomain indices, and its action on subset masks.
struct MaskMap {
  std::vector<std::size_t> v;
  std::size_t n = 0, k = 0;
  explicit MaskMap(const FinMap& f) : v(f.values()), n(f.dom().size()), k(f.cod().size()) {
    require_small(f.dom());
    require_small(f.cod());
  }
  Mask image(Mask a) const {
    Mask out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a & (Mask{1} << i)) out |= Mask{1} << v[i];
    }
    return out;
  }
  Mask preimage(Mask b) const {
    Mask out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (b & (Mask{1} << v[i])) out |= Mask{1} << i;
    }
    return out;
  }
  Mask dom_all() const { return full_mask(n); }
  Mask cod_all() const { return full_mask(k); }
  Mask im() const { return image(dom_all()); }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Power functor

// Pf : P(dom) -> P(cod), A -> f[A]; subsets are named as in Poset::powerset.
inline FinMap power_map(const FinMap& f) {
  std::vector<Symbol> dn, cn;
  for (const auto& s : f.dom().subsets()) dn.emplace_back(to_string(s));
  for (const auto& s : f.cod().subsets()) cn.emplace_back(to_string(s));
  std::vector<std::pair<Symbol, Symbol>> pairs;
  for (const auto& s : f.dom().subsets()) pairs.emplace_back(to_string(s), to_string(f.image(s)));
  return FinMap(FinSet(dn), FinSet(cn), pairs);
}

// PA as a family over `carrier`.
inline Family power_family(const FinSet& carrier, const FinSet& a) { return Family(carrier, a.subsets()); }

// A member of P(A u B) outside PA u PB, if any (there is one iff A and B are
// incomparable).
inline std::optional<FinSet> power_union_gap(const FinSet& a, const FinSet& b) {
  for (const auto& s : a.unite(b).subsets()) {
    if (!s.subset_of(a) && !s.subset_of(b)) return s;
  }
  return std::nullopt;
}

// Functor laws for P on f (composition against every g in `after` whose
// domain is cod f), monotonicity on inclusions, and the object identities of
// P on subsets of dom f.
inline LawReport power_functor_check(const FinMap& f, const std::vector<FinMap>& after = {}) {
  detail::require_small(f.dom());
  detail::require_small(f.cod());
  LawReport r("power");
  const FinMap pf = power_map(f);
  const auto dsubs = f.dom().subsets();
  for (const auto& a : dsubs) {
    r.record_lazy("power.image", "Pf(A) = f[A]", pf(Symbol(to_string(a))) == Symbol(to_string(f.image(a))),
                  [&] { return to_string(a); });
  }
  const FinMap pid = power_map(FinMap::identity(f.dom()));
  r.record("power.identity", "P(id) = id", pid == FinMap::identity(pid.dom()), to_string(f.dom()));
  for (const auto& g : after) {
    if (g.dom() != f.cod()) throw Error(Errc::CarrierMismatch, "composition partner has the wrong domain");
    const FinMap lhs = power_map(compose(g, f));
    const FinMap rhs = compose(power_map(g), pf);
    r.record_lazy("power.composition", "P(g o f) = Pg o Pf", lhs == rhs, [&] { return "g=" + to_string(g); });
  }
  const detail::MaskMap mf(f);
  const std::size_t n = f.dom().size();
  // pw[a] = PA as a family bit set
  std::vector<FamBits> pw(std::size_t{1} << n, 0);
  for (Mask a = 0; a < (Mask{1} << n); ++a)
    for (Mask t = 0; t < (Mask{1} << n); ++t)
      if ((t & a) == t) pw[a] |= FamBits{1} << t;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    for (Mask b = 0; b < (Mask{1} << n); ++b) {
      auto wit = [&] {
        return "(" + to_string(FinSet::from_mask(f.dom(), a)) + "," + to_string(FinSet::from_mask(f.dom(), b)) + ")";
      };
      if ((a & b) == a) {
        r.record_lazy("power.monotone", "A <= B implies f[A] <= f[B]", (mf.image(a) & mf.image(b)) == mf.image(a), wit);
        r.record_lazy("power.inclusion_functor", "A <= B implies PA <= PB", (pw[a] & ~pw[b]) == 0, wit);
      }
      r.record_lazy("power.meet", "P(A n B) = PA n PB", pw[a & b] == (pw[a] & pw[b]), wit);
      r.record_lazy("power.join", "PA u PB <= P(A u B)", ((pw[a] | pw[b]) & ~pw[a | b]) == 0, wit);
    }
    const FinSet as = FinSet::from_mask(f.dom(), a);
    r.record_lazy("power.union_of_power", "U PA = A", power_family(f.dom(), as).union_all() == as,
                  [&] { return to_string(as); });
  }
  return r;
}

// ---------------------------------------------------------------------------
// Images of families

inline Family image_family(const FinMap& f, const Family& x) {
  if (x.carrier() != f.dom()) throw Error(Errc::CarrierMismatch, "family is not over the domain");
  std::vector<FinSet> out;
  for (const auto& a : x) out.push_back(f.image(a));
  return Family(f.cod(), std::move(out));
}

inline Family preimage_family(const FinMap& f, const Family& y) {
  if (y.carrier() != f.cod()) throw Error(Errc::CarrierMismatch, "family is not over the codomain");
  std::vector<FinSet> out;
  for (const auto& b : y) out.push_back(f.preimage(b));
  return Family(f.dom(), std::move(out));
}

// Direct image: every B <= cod with f^-1 B in X.
inline Family direct_image(const FinMap& f, const Family& x) {
  if (x.carrier() != f.dom()) throw Error(Errc::CarrierMismatch, "family is not over the domain");
  const detail::MaskMap m(f);
  const FamBits xb = detail::fam_bits(x);
  FamBits out = 0;
  for (Mask b = 0; b <= m.cod_all(); ++b) {
    if (detail::has(xb, m.preimage(b))) out |= FamBits{1} << b;
  }
  return detail::from_bits(f.cod(), out);
}

// Direct inverse image: every A <= dom with f[A] in Y.
inline Family direct_inverse_image(const FinMap& f, const Family& y) {
  if (y.carrier() != f.cod()) throw Error(Errc::CarrierMismatch, "family is not over the codomain");
  const detail::MaskMap m(f);
  const FamBits yb = detail::fam_bits(y);
  FamBits out = 0;
  for (Mask a = 0; a <= m.dom_all(); ++a) {
    if (detail::has(yb, m.image(a))) out |= FamBits{1} << a;
  }
  return detail::from_bits(f.dom(), out);
}

// f->A: subsets of the codomain whose preimage is A.
inline Family forward_fiber(const FinMap& f, const FinSet& a) {
  const detail::MaskMap m(f);
  const Mask am = a.mask_in(f.dom());
  FamBits out = 0;
  for (Mask b = 0; b <= m.cod_all(); ++b) {
    if (m.preimage(b) == am) out |= FamBits{1} << b;
  }
  return detail::from_bits(f.cod(), out);
}

// f<-B: subsets of the domain whose image is B (the fiber of Pf over B).
inline Family backward_fiber(const FinMap& f, const FinSet& b) {
  const detail::MaskMap m(f);
  const Mask bm = b.mask_in(f.cod());
  FamBits out = 0;
  for (Mask a = 0; a <= m.dom_all(); ++a) {
    if (m.image(a) == bm) out |= FamBits{1} << a;
  }
  return detail::from_bits(f.dom(), out);
}

struct FamilyImages {
  Family image;           // f[[X]]
  Family preimage;        // f^-1[[Y]]
  Family direct;          // f[X]
  Family direct_inverse;  // f^-1[Y]
};

inline FamilyImages family_images(const FinMap& f, const Family& x, const Family& y) {
  return {image_family(f, x), preimage_family(f, y), direct_image(f, x), direct_inverse_image(f, y)};
}

// Lemmas on the fibers of Pf and the two equivalences relating direct images
// to f<- and f->, evaluated on one f and one family over each side.
inline LawReport family_image_laws(const FinMap& f, const Family& x, const Family& y) {
  if (x.carrier() != f.dom() || y.carrier() != f.cod()) {
    throw Error(Errc::CarrierMismatch, "families must live over the domain and codomain");
  }
  LawReport r("family_image");
  const detail::MaskMap m(f);
  const Classification cls = classify(f);
  const FamBits xb = detail::fam_bits(x), yb = detail::fam_bits(y);
  const Mask im = m.im(), outside = m.cod_all() & ~im;
  auto cset = [&](Mask b) { return to_string(FinSet::from_mask(f.cod(), b)); };
  auto dset = [&](Mask a) { return to_string(FinSet::from_mask(f.dom(), a)); };
  // tables of f<-B (as union) and f->A (as intersection)
  std::vector<Mask> back_union(m.cod_all() + 1, 0);
  std::vector<char> back_nonempty(m.cod_all() + 1, 0);
  for (Mask a = 0; a <= m.dom_all(); ++a) {
    back_union[m.image(a)] |= a;
    back_nonempty[m.image(a)] = 1;
  }
  bool x_nonempty = true, y_nonempty = true;
  for (Mask a = 0; a <= m.dom_all(); ++a) x_nonempty = x_nonempty && !(detail::has(xb, a) && a == 0);
  for (Mask b = 0; b <= m.cod_all(); ++b) y_nonempty = y_nonempty && !(detail::has(yb, b) && b == 0);
  r.declare("family.theorem_direct", "X of nonempty sets, B <= Im f: B in f[X] iff U f<-B in X");
  r.declare("family.theorem_inverse", "f monic, Y of nonempty sets: A in f^-1[Y] iff n f->A in Y");

  for (Mask b = 0; b <= m.cod_all(); ++b) {
    const bool in_direct = detail::has(xb, m.preimage(b));
    if (back_nonempty[b]) {
      r.record_lazy("family.lemma_fiber_max", "B in Im Pf: f^-1 B = U Pf^-1{B}, and it lies in the fiber",
                    back_union[b] == m.preimage(b) && m.image(back_union[b]) == b, [&] { return cset(b); });
    }
    if (cls.onto) {
      r.record_lazy("family.lemma_onto", "f onto: B in f[X] iff U Pf^-1{B} in X",
                    in_direct == detail::has(xb, back_union[b]), [&] { return cset(b); });
    }
    if (x_nonempty && (b & ~im) == 0) {
      r.record_lazy("family.theorem_direct", "", in_direct == detail::has(xb, back_union[b]), [&] { return cset(b); });
    }
  }
  for (Mask a = 0; a <= m.dom_all(); ++a) {
    const bool in_dinv = detail::has(yb, m.image(a));
    // f->A against f(A u 0) = { Y : f[A] <= Y <= f[A] u (Range - Im) }
    bool sub = true, eq = true;
    Mask meet = m.cod_all();
    for (Mask b = 0; b <= m.cod_all(); ++b) {
      const bool fwd = m.preimage(b) == a;
      const bool between = (b & m.image(a)) == m.image(a) && (b & ~(m.image(a) | outside)) == 0;
      if (fwd && !between) sub = false;
      if (fwd != between) eq = false;
      if (fwd) meet &= b;
    }
    r.record_lazy("family.lemma_forward", "f->A <= f(A u 0)", sub, [&] { return dset(a); });
    if (cls.monic) {
      r.record_lazy("family.lemma_forward_monic", "f monic: f->A = f(A u 0)", eq, [&] { return dset(a); });
      bool some = false;
      // B is restricted to Im f: with B = {a,b}, f: a -> a, A = {a} = f^-1 B but fA = {a} is not B
      for (Mask b = 0; b <= m.cod_all(); ++b)
        some = some || (detail::has(yb, b) && (b & ~im) == 0 && m.preimage(b) == a);
      r.record_lazy("family.lemma_monic", "f monic: A in f^-1[Y] iff A = U f^-1{{B}} for some B in Y, B <= Im f",
                    in_dinv == some, [&] { return dset(a); });
      if (y_nonempty) {
        r.record_lazy("family.theorem_inverse", "", in_dinv == detail::has(yb, meet), [&] { return dset(a); });
      }
    }
  }
  if (cls.onto) {
    for (Mask b = 0; b <= m.cod_all(); ++b) {
      r.record_lazy("family.lemma_onto_fiber", "f onto: f<-B = Pf^-1{B} is nonempty", back_nonempty[b] != 0,
                    [&] { return cset(b); });
    }
  }
  if (cls.bijective) {
    r.record("family.bijective_images", "f bijective: f[X] = f[[X]]", direct_image(f, x) == image_family(f, x),
             to_string(x));
  }
  return r;
}

}  // namespace structa::settools
