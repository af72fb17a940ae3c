#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/family.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/law_report.hpp"

namespace structa::settools {

enum class NestKind { increasing, decreasing };

// Identities for a finite nest A1 <= A2 <= ... (increasing) or A1 >= A2 >= ...
// (decreasing), truncated at n = nest.size(). Throws InvalidStructure if the
// sequence is not a nest of the stated kind.
inline LawReport nest_laws(const FinSet& carrier, const std::vector<FinSet>& nest, NestKind kind) {
  LawReport r("nest");
  for (std::size_t i = 0; i + 1 < nest.size(); ++i) {
    const bool ok = kind == NestKind::increasing ? nest[i].subset_of(nest[i + 1]) : nest[i + 1].subset_of(nest[i]);
    if (!ok) throw Error(Errc::InvalidStructure, "sequence is not a nest", std::to_string(i + 1));
  }
  for (const auto& a : nest) {
    if (!a.subset_of(carrier)) throw Error(Errc::CarrierMismatch, "nest member outside the carrier", to_string(a));
  }
  if (nest.empty()) return r;
  auto seq = [&] {
    std::string s;
    for (const auto& a : nest) s += (s.empty() ? "" : ",") + to_string(a);
    return "[" + s + "]";
  };
  FinSet all_union, pieces, meet = carrier, comp_union;
  for (const auto& a : nest) {
    all_union = all_union.unite(a);
    meet = meet.intersect(a);
    comp_union = comp_union.unite(carrier.minus(a));
  }
  r.record_lazy("nest.intersection_by_complements", "n Ai = (U Ai^c)^c", meet == carrier.minus(comp_union), seq);
  if (kind == NestKind::increasing) {
    // Bi = Ai - A(i-1) are disjoint and have the same union
    bool disjoint = true;
    FinSet prev;
    for (const auto& a : nest) {
      const FinSet b = a.minus(prev);
      if (!b.intersect(pieces).empty()) disjoint = false;
      pieces = pieces.unite(b);
      prev = a;
    }
    r.record_lazy("nest.increasing_union", "U Ai = U (Ai - A(i-1))", pieces == all_union, seq);
    r.record_lazy("nest.increasing_disjoint", "the pieces Ai - A(i-1) are pairwise disjoint", disjoint, seq);
    r.record_lazy("nest.increasing_meet", "n Ai = A1", meet == nest.front(), seq);
  } else {
    // A1 = U (Ai - A(i+1)) u An
    bool disjoint = true;
    for (std::size_t i = 0; i < nest.size(); ++i) {
      const FinSet b = i + 1 < nest.size() ? nest[i].minus(nest[i + 1]) : nest[i];
      if (!b.intersect(pieces).empty()) disjoint = false;
      pieces = pieces.unite(b);
    }
    r.record_lazy("nest.decreasing_decomposition", "A1 = U (Ai - A(i+1)) u An", pieces == nest.front(), seq);
    r.record_lazy("nest.decreasing_disjoint", "the pieces are pairwise disjoint", disjoint, seq);
    r.record_lazy("nest.decreasing_meet", "n Ai = An", meet == nest.back(), seq);
  }
  return r;
}

// Difference, distribution, De Morgan and decomposition identities for three
// subsets of X's carrier and the family X, plus both nest identities on the
// chains built from A, B, C.
inline LawReport set_law_suite(const FinSet& a, const FinSet& b, const FinSet& c, const Family& x) {
  const FinSet& u = x.carrier();
  for (const FinSet* s : {&a, &b, &c}) {
    if (!s->subset_of(u)) throw Error(Errc::CarrierMismatch, "argument outside the carrier", to_string(*s));
  }
  LawReport r("set");
  auto comp = [&](const FinSet& s) { return u.minus(s); };
  const std::string w = "A=" + to_string(a) + " B=" + to_string(b) + " C=" + to_string(c) + " X=" + to_string(x);
  auto law = [&](const char* id, const char* stmt, bool ok) { r.record(id, stmt, ok, w); };

  law("set.difference_of_difference", "(A - B) - C = A - (B u C)", a.minus(b).minus(c) == a.minus(b.unite(c)));
  law("set.difference_as_meet", "A - B = A n B^c", a.minus(b) == a.intersect(comp(b)));
  law("set.meet_as_difference", "A n B = A - (A - B)", a.intersect(b) == a.minus(a.minus(b)));
  law("set.distribute_meet", "A n (B u C) = (A n B) u (A n C)",
      a.intersect(b.unite(c)) == a.intersect(b).unite(a.intersect(c)));
  law("set.distribute_join", "A u (B n C) = (A u B) n (A u C)",
      a.unite(b.intersect(c)) == a.unite(b).intersect(a.unite(c)));
  law("set.distribute_difference", "(A u B) - C = (A - C) u (B - C)",
      a.unite(b).minus(c) == a.minus(c).unite(b.minus(c)));
  law("set.difference_of_meet", "A - (B n C) = (A - B) u (A - C)",
      a.minus(b.intersect(c)) == a.minus(b).unite(a.minus(c)));
  law("set.decompose", "A = (A n B) u (A - B), disjointly",
      a == a.intersect(b).unite(a.minus(b)) && a.intersect(b).intersect(a.minus(b)).empty());
  law("set.decompose_join", "A u B = (A - B) u (A n B) u (B - A)",
      a.unite(b) == a.minus(b).unite(a.intersect(b)).unite(b.minus(a)));
  law("set.complement_involution", "(A^c)^c = A", comp(comp(a)) == a);

  // families
  FinSet meet_with_a, join_of_comps, comp_meets = u, join_meet = u;
  for (const auto& m : x) {
    meet_with_a = meet_with_a.unite(a.intersect(m));
    join_meet = join_meet.intersect(a.unite(m));
    join_of_comps = join_of_comps.unite(comp(m));
    comp_meets = comp_meets.intersect(comp(m));
  }
  const FinSet ux = x.union_all(), nx = x.intersection_all();
  law("set.distribute_family_meet", "A n U X = U (A n Xi)", a.intersect(ux) == meet_with_a);
  law("set.distribute_family_join", "A u n X = n (A u Xi)", a.unite(nx) == join_meet);
  law("set.demorgan_union", "(U X)^c = n X^c", comp(ux) == comp_meets);
  law("set.demorgan_intersection", "(n X)^c = U X^c", comp(nx) == join_of_comps);
  // a family of two families: {X, {A,B,C}}
  const Family y(u, {a, b, c});
  std::vector<FinSet> common, both;
  for (const auto& m : x) {
    both.push_back(m);
    if (y.contains(m)) common.push_back(m);
  }
  for (const auto& m : y) both.push_back(m);
  const Family meet_fam(u, common), join_fam(u, both);
  law("set.families_union", "U n XX <= U U XX", meet_fam.union_all().subset_of(join_fam.union_all()));
  law("set.families_intersection", "n U XX <= n n XX", join_fam.intersection_all().subset_of(meet_fam.intersection_all()));

  // nests from A, B, C
  const std::vector<FinSet> inc = {a.intersect(b).intersect(c), a.intersect(b), a, a.unite(b), a.unite(b).unite(c)};
  r.merge(nest_laws(u, inc, NestKind::increasing));
  const std::vector<FinSet> dec(inc.rbegin(), inc.rend());
  r.merge(nest_laws(u, dec, NestKind::decreasing));
  return r;
}

}  // namespace structa::settools
