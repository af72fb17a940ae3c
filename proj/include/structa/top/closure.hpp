#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/family.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/law_report.hpp"
#include "structa/settools/images.hpp"

namespace structa::top {

using settools::FamBits;

// A subset operator given by its full table, indexed by subset mask.
class ClosureOp {
 public:
  ClosureOp() = default;
  ClosureOp(FinSet carrier, std::vector<Mask> table) : carrier_(std::move(carrier)), table_(std::move(table)) {
    settools::detail::require_small(carrier_);
    const Mask all = full_mask(carrier_.size());
    if (table_.size() != std::size_t{1} << carrier_.size()) {
      throw Error(Errc::InvalidStructure, "closure table must have one row per subset", std::to_string(table_.size()));
    }
    for (Mask a = 0; a <= all; ++a) {
      if ((table_[a] & ~all) != 0) throw Error(Errc::InvalidStructure, "closure value outside the carrier", sub(a));
    }
  }

  // From (A, Cl A) pairs; every subset must appear exactly once.
  static ClosureOp from_pairs(const FinSet& carrier, const std::vector<std::pair<FinSet, FinSet>>& rows) {
    settools::detail::require_small(carrier);
    const std::size_t size = std::size_t{1} << carrier.size();
    std::vector<Mask> table(size, 0);
    std::vector<char> seen(size, 0);
    for (const auto& [a, c] : rows) {
      const Mask m = a.mask_in(carrier);
      if (seen[m]) throw Error(Errc::InvalidStructure, "closure row given twice", to_string(a));
      seen[m] = 1;
      table[m] = c.mask_in(carrier);
    }
    for (Mask m = 0; m < size; ++m) {
      if (!seen[m]) throw Error(Errc::InvalidStructure, "closure table is not total", to_string(FinSet::from_mask(carrier, m)));
    }
    return ClosureOp(carrier, std::move(table));
  }

  static ClosureOp identity(const FinSet& carrier) {
    std::vector<Mask> t(std::size_t{1} << carrier.size());
    for (Mask a = 0; a < t.size(); ++a) t[a] = a;
    return ClosureOp(carrier, std::move(t));
  }

  const FinSet& carrier() const noexcept { return carrier_; }
  const std::vector<Mask>& table() const noexcept { return table_; }
  Mask operator[](Mask a) const { return table_.at(a); }
  FinSet operator()(const FinSet& a) const { return FinSet::from_mask(carrier_, table_.at(a.mask_in(carrier_))); }
  std::string sub(Mask a) const { return to_string(FinSet::from_mask(carrier_, a)); }

  // Sets with Cl D = D.
  Family closed_sets() const {
    FamBits out = 0;
    for (Mask a = 0; a < table_.size(); ++a)
      if (table_[a] == a) out |= FamBits{1} << a;
    return settools::detail::from_bits(carrier_, out);
  }

  bool operator==(const ClosureOp&) const = default;

 private:
  FinSet carrier_;
  std::vector<Mask> table_;
};

// The strict axioms (empty, union, point, idempotent), the derived
// extensivity and monotonicity, and closure of the fixed sets under finite
// union and arbitrary intersection (pairwise plus the empty meet X).
inline LawReport closure_check(const ClosureOp& cl) {
  LawReport r("closure");
  const Mask all = full_mask(cl.carrier().size());
  auto pair = [&](Mask a, Mask b) { return "(" + cl.sub(a) + "," + cl.sub(b) + ")"; };
  r.record("closure.empty", "Cl {} = {}", cl[0] == 0, cl.sub(cl[0]));
  for (std::size_t i = 0; i < cl.carrier().size(); ++i) {
    const Mask p = Mask{1} << i;
    r.record_lazy("closure.point", "Cl{x} = {x}", cl[p] == p, [&] { return cl.sub(p); });
  }
  for (Mask a = 0; a <= all; ++a) {
    r.record_lazy("closure.idempotent", "Cl Cl A = Cl A", cl[cl[a]] == cl[a], [&] { return cl.sub(a); });
    r.record_lazy("closure.extensive", "A <= Cl A", (a & ~cl[a]) == 0, [&] { return cl.sub(a); });
    for (Mask b = 0; b <= all; ++b) {
      r.record_lazy("closure.union", "Cl(A u B) = Cl A u Cl B", cl[a | b] == (cl[a] | cl[b]), [&] { return pair(a, b); });
      if ((a & ~b) == 0) {
        r.record_lazy("closure.monotone", "A <= B implies Cl A <= Cl B", (cl[a] & ~cl[b]) == 0, [&] { return pair(a, b); });
      }
      if (cl[a] == a && cl[b] == b) {
        r.record_lazy("closure.closed_union", "finite unions of closed sets are closed", cl[a | b] == (a | b),
                      [&] { return pair(a, b); });
        r.record_lazy("closure.closed_intersection", "intersections of closed sets are closed", cl[a & b] == (a & b),
                      [&] { return pair(a, b); });
      }
    }
  }
  r.record("closure.carrier_closed", "the empty intersection X is closed", cl[all] == all, cl.sub(cl[all]));
  return r;
}

inline bool strict_closure(const ClosureOp& cl) {
  const Mask all = full_mask(cl.carrier().size());
  if (cl[0] != 0) return false;
  for (std::size_t i = 0; i < cl.carrier().size(); ++i)
    if (cl[Mask{1} << i] != Mask{1} << i) return false;
  for (Mask a = 0; a <= all; ++a) {
    if (cl[cl[a]] != cl[a]) return false;
    for (Mask b = a + 1; b <= all; ++b)
      if (cl[a | b] != (cl[a] | cl[b])) return false;
  }
  return true;
}

// Every table satisfying the strict axioms, by backtracking over rows in mask
// order; a branch is cut as soon as an axiom fails among the rows fixed so far.
inline std::vector<ClosureOp> strict_closure_models(const FinSet& carrier) {
  settools::detail::require_small(carrier, 4);
  const std::size_t size = std::size_t{1} << carrier.size();
  const Mask all = full_mask(carrier.size());
  std::vector<Mask> t(size, 0);
  std::vector<ClosureOp> out;
  auto rec = [&](auto&& self, Mask m) -> void {
    if (m == size) {
      ClosureOp cl(carrier, t);
      if (strict_closure(cl)) out.push_back(std::move(cl));
      return;
    }
    for (Mask v = 0; v <= all; ++v) {
      if (m == 0 && v != 0) break;
      if (popcount(m) == 1 && v != m) continue;
      bool ok = true;
      for (Mask a = 0; a < m && ok; ++a)
        for (Mask b = a; b < m && ok; ++b)
          if ((a | b) == m && (t[a] | t[b]) != v) ok = false;
      if (!ok) continue;
      t[m] = v;
      self(self, m + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace detail {

inline std::string pair_witness(const FinSet& c, Mask a, Mask b) {
  return "(" + to_string(FinSet::from_mask(c, a)) + "," + to_string(FinSet::from_mask(c, b)) + ")";
}

// Throws NotClosedFamily unless {} and X are members and the family is
// closed under pairwise meet and join.
inline void require_closed_family(const FinSet& carrier, FamBits c) {
  const Mask all = full_mask(carrier.size());
  using settools::detail::has;
  if (!has(c, 0)) throw Error(Errc::NotClosedFamily, "closed family must contain the empty set", "{}");
  if (!has(c, all)) throw Error(Errc::NotClosedFamily, "closed family must contain the carrier", to_string(carrier));
  for (Mask a = 0; a <= all; ++a) {
    if (!has(c, a)) continue;
    for (Mask b = a + 1; b <= all; ++b) {
      if (!has(c, b)) continue;
      if (!has(c, a & b)) throw Error(Errc::NotClosedFamily, "not closed under intersection", pair_witness(carrier, a, b));
      if (!has(c, a | b)) throw Error(Errc::NotClosedFamily, "not closed under union", pair_witness(carrier, a, b));
    }
  }
}

inline std::vector<Mask> meet_table(std::size_t n, FamBits c) {
  const Mask all = full_mask(n);
  std::vector<Mask> t(std::size_t{1} << n, all);
  for (Mask a = 0; a <= all; ++a)
    for (Mask d = 0; d <= all; ++d)
      if (settools::detail::has(c, d) && (a & ~d) == 0) t[a] &= d;
  return t;
}

}  // namespace detail

// Cl A = n {D in C : A <= D}.
inline ClosureOp closure_from_closed(const FinSet& carrier, const Family& c) {
  settools::detail::require_small(carrier);
  if (c.carrier() != carrier) throw Error(Errc::CarrierMismatch, "closed family is over another carrier");
  const FamBits bits = settools::detail::fam_bits(c);
  detail::require_closed_family(carrier, bits);
  return ClosureOp(carrier, detail::meet_table(carrier.size(), bits));
}

// Laws of the closed-family construction. Point fixing is not required: it is
// recorded as equivalent to every singleton being closed, and a warning is
// attached when it fails.
inline LawReport closed_family_laws(const FinSet& carrier, const Family& c) {
  const ClosureOp cl = closure_from_closed(carrier, c);
  LawReport r("closed");
  const Mask all = full_mask(carrier.size());
  for (Mask a = 0; a <= all; ++a) {
    r.record_lazy("closed.extensive", "A <= Cl A", (a & ~cl[a]) == 0, [&] { return cl.sub(a); });
    r.record_lazy("closed.idempotent", "Cl Cl A = Cl A", cl[cl[a]] == cl[a], [&] { return cl.sub(a); });
    for (Mask b = 0; b <= all; ++b) {
      if ((a & ~b) == 0) {
        r.record_lazy("closed.monotone", "A <= B implies Cl A <= Cl B", (cl[a] & ~cl[b]) == 0,
                      [&] { return detail::pair_witness(carrier, a, b); });
      }
    }
  }
  r.record("closed.fixed_points", "the closed sets of Cl are exactly C", cl.closed_sets() == c, to_string(c));
  bool points = true, singletons = true;
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    points = points && cl[Mask{1} << i] == Mask{1} << i;
    singletons = singletons && c.contains(FinSet{carrier[i]});
  }
  r.record("closed.point_fixing_iff_singletons", "Cl{x} = {x} for all x iff every singleton is in C",
           points == singletons, to_string(c));
  if (!points) r.warn("closed.point_fixing", "Cl does not fix points; C lacks a singleton");
  return r;
}

}  // namespace structa::top
