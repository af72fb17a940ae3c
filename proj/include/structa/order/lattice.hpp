#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "structa/core/op_table.hpp"
#include "structa/order/poset.hpp"

namespace structa::order {

struct LatticeTables {
  Poset poset;
  OpTable join;
  OpTable meet;
};

inline LatticeTables lattice_from_poset(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> join(n * n), meet(n * n);
  std::vector<std::size_t> pair(2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pair[0] = i;
      pair[1] = j;
      std::vector<std::size_t> up, low;
      for (std::size_t x = 0; x < n; ++x) {
        if (p.leq(i, x) && p.leq(j, x)) up.push_back(x);
        if (p.leq(x, i) && p.leq(x, j)) low.push_back(x);
      }
      auto s = detail::least_of(p, up);
      auto t = detail::greatest_of(p, low);
      if (!s || !t) {
        throw Error(Errc::NotALattice, std::string("pair lacks a ") + (!s ? "supremum" : "infimum"),
                    "(" + p.carrier()[i].str() + "," + p.carrier()[j].str() + ")");
      }
      join[i * n + j] = *s;
      meet[i * n + j] = *t;
    }
  }
  return LatticeTables{p, OpTable(p.carrier(), std::move(join)), OpTable(p.carrier(), std::move(meet))};
}

// Order characterisation, monotonicity, and the algebraic identities of a lattice.
inline LawReport lattice_laws(const LatticeTables& l) {
  LawReport r("lattice");
  const Poset& p = l.poset;
  const FinSet& c = p.carrier();
  const std::size_t n = p.size();
  auto J = [&](std::size_t a, std::size_t b) { return l.join.at(a, b); };
  auto M = [&](std::size_t a, std::size_t b) { return l.meet.at(a, b); };
  auto w2 = [&](std::size_t a, std::size_t b) { return "(" + c[a].str() + "," + c[b].str() + ")"; };
  auto w3 = [&](std::size_t a, std::size_t b, std::size_t d) {
    return "(" + c[a].str() + "," + c[b].str() + "," + c[d].str() + ")";
  };
  for (std::size_t x = 0; x < n; ++x) {
    r.record_lazy("lattice.idempotent", "x v x = x and x ^ x = x", J(x, x) == x && M(x, x) == x,
                  [&] { return c[x].str(); });
    for (std::size_t y = 0; y < n; ++y) {
      r.record_lazy("lattice.order_join", "x <= y iff x v y = y", p.leq(x, y) == (J(x, y) == y), [&] { return w2(x, y); });
      r.record_lazy("lattice.order_meet", "x <= y iff x ^ y = x", p.leq(x, y) == (M(x, y) == x), [&] { return w2(x, y); });
      r.record_lazy("lattice.commutative", "x v y = y v x and x ^ y = y ^ x", J(x, y) == J(y, x) && M(x, y) == M(y, x),
                    [&] { return w2(x, y); });
      r.record_lazy("lattice.absorption", "x v (x ^ y) = x and x ^ (x v y) = x", J(x, M(x, y)) == x && M(x, J(x, y)) == x,
                    [&] { return w2(x, y); });
      for (std::size_t z = 0; z < n; ++z) {
        r.record_lazy("lattice.associative", "(x v y) v z = x v (y v z), dually for ^",
                      J(J(x, y), z) == J(x, J(y, z)) && M(M(x, y), z) == M(x, M(y, z)), [&] { return w3(x, y, z); });
        if (p.leq(x, y)) {
          r.record_lazy("lattice.monotone", "x <= y implies x v z <= y v z and x ^ z <= y ^ z",
                        p.leq(J(x, z), J(y, z)) && p.leq(M(x, z), M(y, z)), [&] { return w3(x, y, z); });
        }
      }
    }
  }
  // sup(A u B) = sup A v sup B over nonempty subsets (small carriers only).
  if (p.has_masks() && n <= 6) {
    for (Mask a = 1; a < (Mask{1} << n); ++a) {
      for (Mask b = 1; b < (Mask{1} << n); ++b) {
        auto sa = sup_mask(p, a);
        auto sb = sup_mask(p, b);
        auto sab = sup_mask(p, a | b);
        const bool ok = sa && sb && sab && *sab == J(*sa, *sb);
        r.record_lazy("lattice.finite_union_sup", "sup(A u B) = sup A v sup B", ok, [&] {
          return to_string(FinSet::from_mask(c, a)) + "," + to_string(FinSet::from_mask(c, b));
        });
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Semilattices

struct SemilatticeCheck {
  bool ok = false;
  LawReport report;
};

inline SemilatticeCheck semilattice_check(const OpTable& t) {
  SemilatticeCheck out;
  out.report = LawReport("semilattice");
  LawReport& r = out.report;
  const FinSet& c = t.carrier();
  const std::size_t n = t.size();
  r.declare("semilattice.idempotent", "x * x = x");
  r.declare("semilattice.commutative", "x * y = y * x");
  r.declare("semilattice.associative", "(x * y) * z = x * (y * z)");
  for (std::size_t x = 0; x < n; ++x) {
    r.record_lazy("semilattice.idempotent", "", t.at(x, x) == x, [&] { return c[x].str(); });
    for (std::size_t y = 0; y < n; ++y) {
      r.record_lazy("semilattice.commutative", "", t.at(x, y) == t.at(y, x),
                    [&] { return "(" + c[x].str() + "," + c[y].str() + ")"; });
      for (std::size_t z = 0; z < n; ++z) {
        r.record_lazy("semilattice.associative", "", t.at(t.at(x, y), z) == t.at(x, t.at(y, z)),
                      [&] { return "(" + c[x].str() + "," + c[y].str() + "," + c[z].str() + ")"; });
      }
    }
  }
  out.ok = r.all_passed();
  return out;
}

enum class Orientation {
  join,  // x <= y iff x * y = y
  meet,  // x <= y iff x * y = x
};

inline Poset order_from_semilattice(const OpTable& t, Orientation orientation) {
  const SemilatticeCheck sc = semilattice_check(t);
  if (!sc.ok) {
    for (const auto& chk : sc.report.checks()) {
      if (!chk.passed) throw Error(Errc::NotSemilattice, "table fails " + chk.id, *chk.witness);
    }
  }
  Relation rel(t.carrier());
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) rel.set(x, y, t.at(x, y) == (orientation == Orientation::join ? y : x));
  }
  return Poset(std::move(rel));
}

inline LatticeTables lattice_from_dual_pair(const OpTable& join, const OpTable& meet) {
  if (join.carrier() != meet.carrier()) throw Error(Errc::CarrierMismatch, "tables over different carriers");
  const Poset p = order_from_semilattice(join, Orientation::join);
  (void)order_from_semilattice(meet, Orientation::meet);
  const FinSet& c = join.carrier();
  for (std::size_t x = 0; x < join.size(); ++x) {
    for (std::size_t y = 0; y < join.size(); ++y) {
      if ((join.at(x, y) == y) != (meet.at(x, y) == x)) {
        throw Error(Errc::NotDualPair, "x v y = y and x ^ y = x disagree", "(" + c[x].str() + "," + c[y].str() + ")");
      }
    }
  }
  LatticeTables l = lattice_from_poset(p);
  if (!(l.join == join) || !(l.meet == meet)) {
    throw Error(Errc::NotDualPair, "tables are not the supremum and infimum of the induced order");
  }
  return l;
}

}  // namespace structa::order
