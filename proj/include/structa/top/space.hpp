#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/family.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/law_report.hpp"
#include "structa/settools/images.hpp"
#include "structa/top/closure.hpp"

namespace structa::top {

namespace detail {

using settools::detail::has;

inline FamBits complements(FamBits f, std::size_t n) {
  const Mask all = full_mask(n);
  FamBits out = 0;
  for (Mask a = 0; a <= all; ++a)
    if (has(f, a)) out |= FamBits{1} << (all & ~a);
  return out;
}

inline bool topology_bits(FamBits o, std::size_t n) {
  const Mask all = full_mask(n);
  if (!has(o, 0) || !has(o, all)) return false;
  for (Mask a = 0; a <= all; ++a) {
    if (!has(o, a)) continue;
    for (Mask b = a + 1; b <= all; ++b)
      if (has(o, b) && (!has(o, a | b) || !has(o, a & b))) return false;
  }
  return true;
}

// Closure of a family under pairwise union (unions of nonempty subfamilies).
inline FamBits union_closure(FamBits f, std::size_t n) {
  const Mask all = full_mask(n);
  while (true) {
    FamBits next = f;
    for (Mask a = 0; a <= all; ++a)
      for (Mask b = a + 1; b <= all; ++b)
        if (has(f, a) && has(f, b)) next |= FamBits{1} << (a | b);
    if (next == f) return f;
    f = next;
  }
}

inline FamBits meet_closure(FamBits f, std::size_t n) {
  const Mask all = full_mask(n);
  while (true) {
    FamBits next = f;
    for (Mask a = 0; a <= all; ++a)
      for (Mask b = a + 1; b <= all; ++b)
        if (has(f, a) && has(f, b)) next |= FamBits{1} << (a & b);
    if (next == f) return f;
    f = next;
  }
}

}  // namespace detail

struct Topology {
  FinSet carrier;
  Family open_sets;
  bool operator==(const Topology&) const = default;
};

inline bool is_topology(const Family& o) { return detail::topology_bits(settools::detail::fam_bits(o), o.carrier().size()); }

// Validates the open family; InvalidStructure names the first offending set or pair.
inline Topology make_topology(const FinSet& carrier, const Family& opens) {
  settools::detail::require_small(carrier);
  if (opens.carrier() != carrier) throw Error(Errc::CarrierMismatch, "open family is over another carrier");
  const FamBits o = settools::detail::fam_bits(opens);
  const Mask all = full_mask(carrier.size());
  if (!detail::has(o, 0)) throw Error(Errc::InvalidStructure, "the empty set must be open", "{}");
  if (!detail::has(o, all)) throw Error(Errc::InvalidStructure, "the carrier must be open", to_string(carrier));
  for (Mask a = 0; a <= all; ++a)
    for (Mask b = a + 1; b <= all; ++b)
      if (detail::has(o, a) && detail::has(o, b) && (!detail::has(o, a | b) || !detail::has(o, a & b))) {
        throw Error(Errc::InvalidStructure, "open sets not closed under union and intersection",
                    top::detail::pair_witness(carrier, a, b));
      }
  return {carrier, opens};
}

inline Topology discrete_topology(const FinSet& carrier) { return {carrier, Family(carrier, carrier.subsets())}; }
inline Topology indiscrete_topology(const FinSet& carrier) { return {carrier, Family(carrier, {FinSet{}, carrier})}; }

// Every topology on the carrier (|carrier| <= 4): each family between {} and X
// is tested directly.
inline std::vector<Topology> all_topologies(const FinSet& carrier) {
  settools::detail::require_small(carrier, 4);
  const std::size_t n = carrier.size();
  const Mask all = full_mask(n);
  std::vector<Mask> middle;
  for (Mask a = 1; a < all; ++a) middle.push_back(a);
  std::vector<Topology> out;
  const FamBits ends = n == 0 ? FamBits{1} : (FamBits{1} | FamBits{1} << all);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    FamBits o = ends;
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((pick >> i) & 1U) o |= FamBits{1} << middle[i];
    if (detail::topology_bits(o, n)) out.push_back({carrier, settools::detail::from_bits(carrier, o)});
  }
  return out;
}

// Closed sets: complements of the open ones.
inline Family open_duality(const Topology& t) {
  return settools::detail::from_bits(
      t.carrier, detail::complements(settools::detail::fam_bits(t.open_sets), t.carrier.size()));
}

// N with x in V <= N for some open V.
inline Family neighborhoods(const Topology& t, const Symbol& x) {
  const Mask all = full_mask(t.carrier.size());
  const Mask p = FinSet{x}.mask_in(t.carrier);
  const FamBits o = settools::detail::fam_bits(t.open_sets);
  FamBits out = 0;
  for (Mask v = 0; v <= all; ++v) {
    if (!detail::has(o, v) || (v & p) == 0) continue;
    for (Mask s = 0; s <= all; ++s)
      if ((s & v) == v) out |= FamBits{1} << s;
  }
  return settools::detail::from_bits(t.carrier, out);
}

// Bx is a point base of x: its members are neighborhoods of x and every
// neighborhood contains one of them.
inline bool point_base_check(const Topology& t, const Symbol& x, const Family& bx) {
  const Family nx = neighborhoods(t, x);
  for (const auto& b : bx)
    if (!nx.contains(b)) return false;
  for (const auto& n : nx) {
    bool found = false;
    for (const auto& b : bx) found = found || b.subset_of(n);
    if (!found) return false;
  }
  return true;
}

inline LawReport topology_laws(const Topology& t) {
  LawReport r("top");
  const std::size_t n = t.carrier.size();
  const Mask all = full_mask(n);
  const FamBits o = settools::detail::fam_bits(t.open_sets);
  const FamBits c = settools::detail::fam_bits(open_duality(t));
  auto s = [&](Mask a) { return to_string(FinSet::from_mask(t.carrier, a)); };
  r.record("top.empty_and_carrier_open", "{} and X are open", detail::has(o, 0) && detail::has(o, all), to_string(t.open_sets));
  std::vector<FamBits> nbhd(n);
  for (std::size_t i = 0; i < n; ++i) nbhd[i] = settools::detail::fam_bits(neighborhoods(t, t.carrier[i]));
  for (Mask a = 0; a <= all; ++a) {
    r.record_lazy("top.open_iff_complement_closed", "V open iff V^c closed", detail::has(o, a) == detail::has(c, all & ~a),
                  [&] { return s(a); });
    bool nb_of_points = true;
    for (std::size_t i = 0; i < n; ++i)
      if ((a >> i) & 1U) nb_of_points = nb_of_points && detail::has(nbhd[i], a);
    r.record_lazy("top.open_iff_neighborhood_of_points", "V open iff V is a neighborhood of each of its points",
                  detail::has(o, a) == nb_of_points, [&] { return s(a); });
    for (Mask b = a + 1; b <= all; ++b) {
      if (!detail::has(o, a) || !detail::has(o, b)) continue;
      auto w = [&] { return top::detail::pair_witness(t.carrier, a, b); };
      r.record_lazy("top.union_open", "unions of open sets are open", detail::has(o, a | b), w);
      r.record_lazy("top.intersection_open", "finite intersections of open sets are open", detail::has(o, a & b), w);
    }
  }
  return r;
}

// x in Cl A iff every member of B containing x meets A.
inline ClosureOp closure_from_base(const FinSet& carrier, const Family& b) {
  settools::detail::require_small(carrier);
  const std::size_t n = carrier.size();
  const Mask all = full_mask(n);
  const FamBits bb = settools::detail::fam_bits(b);
  std::vector<Mask> t(std::size_t{1} << n, 0);
  for (Mask a = 0; a <= all; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      bool adherent = true;
      for (Mask u = 0; u <= all && adherent; ++u)
        if (detail::has(bb, u) && ((u >> i) & 1U) && (u & a) == 0) adherent = false;
      if (adherent) t[a] |= Mask{1} << i;
    }
  }
  return ClosureOp(carrier, std::move(t));
}

struct BaseOps {
  Topology topology;   // smallest topology containing B
  bool is_base = false;
  LawReport criterion;
  ClosureOp closure;   // closure from the base
};

// B must cover the carrier (NotCovering names the first uncovered point).
// The topology is the smallest one containing B; B is a base of it exactly
// when every open set is a union of members of B, and the criterion theorem
// is checked against that definition. When B is a base, the closure computed
// from B is compared table-for-table with the closure from the closed sets.
inline BaseOps base_ops(const FinSet& carrier, const Family& b) {
  settools::detail::require_small(carrier);
  if (b.carrier() != carrier) throw Error(Errc::CarrierMismatch, "base is over another carrier");
  const std::size_t n = carrier.size();
  const Mask all = full_mask(n);
  const Mask covered = b.union_all().mask_in(carrier);
  for (std::size_t i = 0; i < n; ++i) {
    if (!((covered >> i) & 1U)) throw Error(Errc::NotCovering, "base does not cover the carrier", carrier[i].str());
  }
  const FamBits bb = settools::detail::fam_bits(b);
  const FamBits o = detail::union_closure(detail::meet_closure(bb, n), n) | FamBits{1} | (FamBits{1} << all);
  BaseOps out;
  out.topology = {carrier, settools::detail::from_bits(carrier, o)};
  out.criterion = LawReport("base");
  LawReport& r = out.criterion;
  auto s = [&](Mask a) { return to_string(FinSet::from_mask(carrier, a)); };
  // definition: every open V is the union of the members inside it
  bool definition = true, criterion = true;
  for (Mask v = 0; v <= all; ++v) {
    if (!detail::has(o, v)) continue;
    Mask inside = 0;
    for (Mask u = 0; u <= all; ++u)
      if (detail::has(bb, u) && (u & ~v) == 0) inside |= u;
    definition = definition && inside == v;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((v >> i) & 1U)) continue;
      bool found = false;
      for (Mask u = 0; u <= all && !found; ++u) found = detail::has(bb, u) && ((u >> i) & 1U) && (u & ~v) == 0;
      criterion = criterion && found;
    }
  }
  out.is_base = definition;
  r.record("base.criterion", "B is a base iff every open V and x in V admit U in B with x in U <= V",
           definition == criterion, to_string(b));
  r.record("base.members_open", "members of B are open", (bb & ~o) == 0, to_string(b));
  r.record("base.topology", "the generated family is a topology", detail::topology_bits(o, n), to_string(out.topology.open_sets));
  out.closure = closure_from_base(carrier, b);
  if (!out.is_base) {
    r.warn("base.not_a_base", "B is not a base of the topology it generates; closures are not compared");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    FamBits bx = 0;
    for (Mask u = 0; u <= all; ++u)
      if (detail::has(bb, u) && ((u >> i) & 1U)) bx |= FamBits{1} << u;
    r.record_lazy("base.point_base", "members of B containing x form a point base of x",
                  point_base_check(out.topology, carrier[i], settools::detail::from_bits(carrier, bx)),
                  [&] { return carrier[i].str(); });
  }
  const ClosureOp from_closed = ClosureOp(carrier, top::detail::meet_table(n, detail::complements(o, n)));
  for (Mask a = 0; a <= all; ++a) {
    r.record_lazy("base.closure_equivalence", "closure from B equals closure from the closed sets",
                  out.closure[a] == from_closed[a], [&] { return s(a); });
  }
  return out;
}

}  // namespace structa::top
