#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/functions.hpp"
#include "structa/core/law_report.hpp"
#include "structa/core/op_table.hpp"
#include "structa/group/fingroup.hpp"
#include "structa/group/hom.hpp"

namespace structa::group {

// act[i] is the bijection of the carrier assigned to group element i.
struct GroupAction {
  FinGroup group;
  FinSet carrier;
  std::vector<FinMap> act;

  std::size_t apply(std::size_t a, std::size_t x) const { return act[a].at(x); }
  bool operator==(const GroupAction&) const = default;
};

inline GroupAction make_action(const FinGroup& g, const FinSet& x, std::vector<FinMap> act) {
  if (act.size() != g.size()) throw Error(Errc::NotAction, "one map per group element required");
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (act[a].dom() != x || act[a].cod() != x) throw Error(Errc::CarrierMismatch, "action map not on the carrier", g.name(a).str());
    if (!classify(act[a]).bijective) throw Error(Errc::NotAction, "action image is not a bijection", g.name(a).str());
  }
  return GroupAction{g, x, std::move(act)};
}

inline GroupAction trivial_action(const FinGroup& g, const FinSet& x) {
  return make_action(g, x, std::vector<FinMap>(g.size(), FinMap::identity(x)));
}

inline GroupAction regular_action(const FinGroup& g) {
  std::vector<FinMap> act;
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::vector<std::size_t> v;
    for (std::size_t x = 0; x < g.size(); ++x) v.push_back(g.mul(a, x));
    act.emplace_back(g.carrier(), g.carrier(), std::move(v));
  }
  return make_action(g, g.carrier(), std::move(act));
}

// Elements acting as the identity (the nucleus of non-effectivity).
inline Subgroup nucleus(const GroupAction& a) {
  std::vector<char> in(a.group.size(), 0);
  const FinMap id = FinMap::identity(a.carrier);
  for (std::size_t g = 0; g < a.group.size(); ++g) in[g] = a.act[g] == id;
  return Subgroup::from_flags(a.group, in);
}

inline bool transitive(const GroupAction& a) {
  for (std::size_t x = 0; x < a.carrier.size(); ++x) {
    std::vector<char> reach(a.carrier.size(), 0);
    for (std::size_t g = 0; g < a.group.size(); ++g) reach[a.apply(g, x)] = 1;
    for (char c : reach) {
      if (!c) return false;
    }
  }
  return true;
}

inline LawReport action_check(const GroupAction& a) {
  LawReport r("action");
  const FinGroup& g = a.group;
  for (std::size_t x = 0; x < g.size(); ++x) {
    r.record("action.bijective", "every element acts by a bijection", classify(a.act[x]).bijective, g.name(x).str());
    for (std::size_t y = 0; y < g.size(); ++y) {
      r.record_lazy("action.homomorphism", "(ab)* = a* ∘ b*", a.act[g.mul(x, y)] == compose(a.act[x], a.act[y]),
                    [&] { return detail::tuple_name(g.carrier(), {x, y}); });
    }
  }
  r.record("action.unit", "e acts as the identity", a.act[g.unit()] == FinMap::identity(a.carrier));
  const Subgroup n = nucleus(a);
  r.record("action.nucleus_normal", "the nucleus is a normal subgroup",
           is_subgroup(g, n.members) && is_normal(g, n), to_string(n.members));
  r.warn("action.nucleus", to_string(n.members));
  r.warn("action.transitive", transitive(a) ? "yes" : "no");
  return r;
}

// ---------------------------------------------------------------------------
// Coset action

// G acting on the left cosets xH by a*(xH) = (ax)H. Cosets are named by
// their member set.
inline GroupAction coset_action(const FinGroup& g, const Subgroup& h) {
  subgroup_check(g, h.members);
  const Partition p = cosets(g, h, Side::left);
  std::vector<Symbol> names;
  for (const auto& b : p.blocks) names.emplace_back(to_string(b));
  const FinSet x(names);
  std::vector<std::size_t> rep(x.size());
  for (const auto& b : p.blocks) rep[x.index_of(Symbol(to_string(b)))] = g.index(b[0]);
  std::vector<FinMap> act;
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::vector<std::size_t> v;
    for (std::size_t c = 0; c < x.size(); ++c) {
      v.push_back(x.index_of(Symbol(to_string(coset(g, h, g.mul(a, rep[c]), Side::left)))));
    }
    act.emplace_back(x, x, std::move(v));
  }
  return make_action(g, x, std::move(act));
}

// xHx^-1 intersected over all x.
inline Subgroup core(const FinGroup& g, const Subgroup& h) {
  FinSet out = g.carrier();
  for (std::size_t x = 0; x < g.size(); ++x) out = out.intersect(conjugate(g, h, x));
  return Subgroup(g, out);
}

// The coset action is a transitive action; x fixes the coset H iff x ∈ H;
// its nucleus is ⋂ xHx^-1 and contains every normal subgroup of G inside H.
inline LawReport coset_action_laws(const FinGroup& g, const Subgroup& h) {
  const GroupAction a = coset_action(g, h);
  LawReport r("coset_action");
  r.merge(action_check(a));
  r.record("coset_action.transitive", "G acts transitively on G/xH", transitive(a));
  const std::size_t home = a.carrier.index_of(Symbol(to_string(h.members)));
  for (std::size_t x = 0; x < g.size(); ++x) {
    r.record("coset_action.fixed_coset", "x fixes H iff x ∈ H", (a.apply(x, home) == home) == h.contains(x),
             g.name(x).str());
  }
  const Subgroup n = nucleus(a);
  r.record("coset_action.nucleus_core", "the nucleus equals the intersection of the conjugates of H",
           n.members == core(g, h).members, to_string(n.members));
  for (const auto& s : all_subgroups(g)) {
    if (!s.members.subset_of(h.members) || !is_normal(g, s)) continue;
    r.record("coset_action.normal_in_nucleus", "normal subgroups inside H lie in the nucleus",
             s.members.subset_of(n.members) && n.members.subset_of(h.members), to_string(s.members));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Stabilizers and similarity

// G_{a↦b}: elements sending a to b.
inline FinSet transporter(const GroupAction& a, std::size_t from, std::size_t to) {
  std::vector<Symbol> v;
  for (std::size_t x = 0; x < a.group.size(); ++x) {
    if (a.apply(x, from) == to) v.push_back(a.group.name(x));
  }
  return FinSet(std::move(v));
}

inline Subgroup stabilizer(const GroupAction& a, std::size_t x) {
  return Subgroup(a.group, transporter(a, x, x));
}

// (X,G) and (Y,H) are similar along a bijection f and an isomorphism h when
// f(a*x) = h(a)*f(x).
inline LawReport similar_pairs(const GroupAction& a, const GroupAction& b, const FinMap& f, const FinMap& h) {
  LawReport r("similar");
  r.record("similar.bijection", "f is a bijection of the carriers",
           f.dom() == a.carrier && f.cod() == b.carrier && classify(f).bijective);
  bool iso = false;
  try {
    iso = classify(hom_check(a.group, b.group, h).map).bijective;
  } catch (const Error&) {
    iso = false;
  }
  r.record("similar.isomorphism", "h is a group isomorphism", iso);
  if (!r.all_passed()) return r;
  for (std::size_t g = 0; g < a.group.size(); ++g)
    for (std::size_t x = 0; x < a.carrier.size(); ++x) {
      r.record_lazy("similar.commutes", "f(a*x) = h(a)*f(x)", f.at(a.apply(g, x)) == b.apply(h.at(g), f.at(x)),
                    [&] { return "(" + a.group.name(g).str() + "," + a.carrier[x].str() + ")"; });
    }
  return r;
}

// Inv(a) is a subgroup and Nul = ⋂ Inv(x). For transitive actions (required
// when `similarity` is set): b ↦ G_{a↦b} is a bijection onto the left cosets
// of Inv(a), (X,G) is similar to (G/xInv(a),G) along it, and
// Inv(b) = x Inv(a) x^-1 for x ∈ G_{a↦b}.
inline LawReport stabilizer_suite(const GroupAction& a, const Symbol& point, bool similarity = true) {
  const std::size_t p = a.carrier.index_of(point);
  const FinGroup& g = a.group;
  LawReport r("stabilizer");
  const Subgroup inv_p = stabilizer(a, p);
  r.record("stabilizer.subgroup", "Inv(a) is a subgroup", is_subgroup(g, inv_p.members), point.str());
  FinSet meet = g.carrier();
  for (std::size_t x = 0; x < a.carrier.size(); ++x) meet = meet.intersect(stabilizer(a, x).members);
  r.record("stabilizer.nucleus", "Nul equals the intersection of all stabilizers", meet == nucleus(a).members);
  if (!similarity) return r;
  if (!transitive(a)) throw Error(Errc::NotTransitive, "similarity needs a transitive action", point.str());

  const GroupAction cos = coset_action(g, inv_p);
  std::vector<std::size_t> phi;
  for (std::size_t b = 0; b < a.carrier.size(); ++b) {
    const FinSet t = transporter(a, p, b);
    const auto idx = cos.carrier.find(Symbol(to_string(t)));
    r.record("stabilizer.phi_coset", "G_{a↦b} is a left coset of Inv(a)", idx.has_value(), a.carrier[b].str());
    phi.push_back(idx.value_or(0));
  }
  if (!r.all_passed()) return r;
  const FinMap f(a.carrier, cos.carrier, phi);
  r.record("stabilizer.phi_bijective", "b ↦ G_{a↦b} is a bijection onto G/xInv(a)", classify(f).bijective);
  r.merge(similar_pairs(a, cos, f, FinMap::identity(g.carrier())), "stabilizer");
  for (std::size_t b = 0; b < a.carrier.size(); ++b) {
    const Subgroup inv_b = stabilizer(a, b);
    for (const auto& x : transporter(a, p, b)) {
      r.record("stabilizer.conjugate", "Inv(b) = x Inv(a) x^-1 for x ∈ G_{a↦b}",
               conjugate(g, inv_p, g.index(x)) == inv_b.members, a.carrier[b].str() + "," + x.str());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Linear spaces over finite fields

struct Field {
  OpTable add;
  OpTable mul;
  std::size_t zero = 0;
  std::size_t one = 0;

  const FinSet& carrier() const noexcept { return add.carrier(); }
  std::size_t size() const noexcept { return add.size(); }
};

// Field axioms: (K,+) abelian group, nonzero part an abelian group under ·,
// 0·x = 0, distributivity, 0 != 1.
inline Field field_check(const OpTable& add, const OpTable& mul) {
  if (add.carrier() != mul.carrier()) throw Error(Errc::NotAField, "tables on different carriers");
  const FinGroup additive = [&] {
    try {
      return check_group(add);
    } catch (const Error& e) {
      throw Error(Errc::NotAField, "addition is not a group", e.witness());
    }
  }();
  if (!additive.abelian()) throw Error(Errc::NotAField, "addition is not commutative");
  const std::size_t zero = additive.unit();
  const std::size_t n = add.size();
  if (n < 2) throw Error(Errc::NotAField, "a field has 0 != 1");
  for (std::size_t x = 0; x < n; ++x) {
    if (mul.at(zero, x) != zero || mul.at(x, zero) != zero) {
      throw Error(Errc::NotAField, "0*x is not 0", add.carrier()[x].str());
    }
  }
  const FinSet nonzero = add.carrier().minus(FinSet{add.carrier()[zero]});
  std::vector<std::size_t> cells;
  for (const auto& a : nonzero)
    for (const auto& b : nonzero) {
      const auto idx = nonzero.find(mul(a, b));
      if (!idx) throw Error(Errc::NotAField, "product of nonzero elements is zero", a.str() + "*" + b.str());
      cells.push_back(*idx);
    }
  const FinGroup units = [&] {
    try {
      return check_group(OpTable(nonzero, std::move(cells)));
    } catch (const Error& e) {
      throw Error(Errc::NotAField, "nonzero elements are not a group", e.witness());
    }
  }();
  if (!units.abelian()) throw Error(Errc::NotAField, "multiplication is not commutative");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (mul.at(a, add.at(b, c)) != add.at(mul.at(a, b), mul.at(a, c))) {
          throw Error(Errc::NotAField, "a(b+c) != ab+ac", detail::tuple_name(add.carrier(), {a, b, c}));
        }
      }
  return Field{add, mul, zero, add.carrier().index_of(units.unit_name())};
}

// Z_p on {0..p-1}.
inline Field prime_field(std::size_t p) {
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw Error(Errc::NotAField, "modulus is not prime", std::to_string(p));
  }
  if (p < 2) throw Error(Errc::NotAField, "modulus is not prime", std::to_string(p));
  const FinSet c = FinSet::range(p);
  auto val = [](const Symbol& s) { return std::stoul(s.str()); };
  return field_check(
      OpTable::from_function(c, [&](const Symbol& a, const Symbol& b) { return Symbol(std::to_string((val(a) + val(b)) % p)); }),
      OpTable::from_function(c, [&](const Symbol& a, const Symbol& b) { return Symbol(std::to_string((val(a) * val(b)) % p)); }));
}

// The nonzero elements under multiplication.
inline FinGroup multiplicative_group(const Field& k) {
  const FinSet nonzero = k.carrier().minus(FinSet{k.carrier()[k.zero]});
  std::vector<std::size_t> cells;
  for (const auto& a : nonzero)
    for (const auto& b : nonzero) cells.push_back(nonzero.index_of(k.mul(a, b)));
  return check_group(OpTable(nonzero, std::move(cells)));
}

// Scalar action act[a] : V -> V for every a in K. Evaluates the
// homomorphism formulation (a ↦ a* is a homomorphism K^x -> Aut(V) with
// (a+b)*u = (a*u)(b*u)) and the four-axiom formulation, and records whether
// they agree.
inline LawReport linear_space_check(const Field& k, const FinGroup& v, const std::vector<FinMap>& act) {
  if (!v.abelian()) throw Error(Errc::InvalidStructure, "the vector group must be abelian");
  if (act.size() != k.size()) throw Error(Errc::CarrierMismatch, "one scalar map per field element required");
  for (const auto& m : act) {
    if (m.dom() != v.carrier() || m.cod() != v.carrier()) throw Error(Errc::CarrierMismatch, "scalar map not on V");
  }
  const std::size_t n = k.size();
  const FinSet& kc = k.carrier();
  LawReport hom("hom_form");
  for (std::size_t a = 0; a < n; ++a) {
    if (a == k.zero) continue;
    hom.record("hom_form.automorphism", "a* is an automorphism of V for a != 0",
               classify(act[a]).bijective && hom_laws(v, v, act[a]).all_passed(), kc[a].str());
    for (std::size_t b = 0; b < n; ++b) {
      if (b == k.zero) continue;
      hom.record("hom_form.homomorphism", "(ab)* = a* ∘ b*", act[k.mul.at(a, b)] == compose(act[a], act[b]),
                 detail::tuple_name(kc, {a, b}));
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t u = 0; u < v.size(); ++u) {
        hom.record_lazy("hom_form.scalar_sum", "(a+b)*u = (a*u)(b*u)",
                        act[k.add.at(a, b)].at(u) == v.mul(act[a].at(u), act[b].at(u)),
                        [&] { return detail::tuple_name(kc, {a, b}) + "," + v.name(u).str(); });
      }

  LawReport ax("axioms");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t u = 0; u < v.size(); ++u) {
      for (std::size_t w = 0; w < v.size(); ++w) {
        ax.record_lazy("axioms.vector_sum", "a*(uv) = (a*u)(a*v)",
                       act[a].at(v.mul(u, w)) == v.mul(act[a].at(u), act[a].at(w)),
                       [&] { return kc[a].str() + "," + detail::tuple_name(v.carrier(), {u, w}); });
      }
      for (std::size_t b = 0; b < n; ++b) {
        ax.record_lazy("axioms.scalar_sum", "(a+b)*u = (a*u)(b*u)",
                       act[k.add.at(a, b)].at(u) == v.mul(act[a].at(u), act[b].at(u)),
                       [&] { return detail::tuple_name(kc, {a, b}) + "," + v.name(u).str(); });
        ax.record_lazy("axioms.scalar_product", "(ab)*u = a*(b*u)",
                       act[k.mul.at(a, b)].at(u) == act[a].at(act[b].at(u)),
                       [&] { return detail::tuple_name(kc, {a, b}) + "," + v.name(u).str(); });
      }
    }
  }
  for (std::size_t u = 0; u < v.size(); ++u) {
    ax.record("axioms.unit", "1*u = u", act[k.one].at(u) == u, v.name(u).str());
  }

  LawReport r("linear_space");
  r.merge(hom);
  r.merge(ax);
  r.record("linear_space.agree", "both formulations give the same verdict", hom.all_passed() == ax.all_passed());
  return r;
}

// Scalar multiplication of Z_p on (Z_p)^d given as a direct power of cyclic groups.
inline std::vector<FinMap> scalar_action(const Field& k, const FinGroup& v) {
  std::vector<FinMap> act;
  for (std::size_t a = 0; a < k.size(); ++a) {
    std::vector<std::size_t> vals;
    for (std::size_t u = 0; u < v.size(); ++u) {
      // a*u as the a-fold sum u + ... + u (a read as an integer)
      const long long times = std::stoll(k.carrier()[a].str());
      vals.push_back(power(v, u, times));
    }
    act.emplace_back(v.carrier(), v.carrier(), std::move(vals));
  }
  return act;
}

}  // namespace structa::group
