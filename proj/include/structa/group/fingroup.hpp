#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/functions.hpp"
#include "structa/core/law_report.hpp"
#include "structa/core/op_table.hpp"

namespace structa::group {

class FinGroup;
FinGroup check_group(const OpTable& table);

// Group given by its Cayley table. Elements are handled by carrier index;
// the symbol overloads are thin wrappers.
class FinGroup {
 public:
  FinGroup() = default;

  const FinSet& carrier() const noexcept { return op_.carrier(); }
  std::size_t size() const noexcept { return op_.size(); }
  const OpTable& table() const noexcept { return op_; }

  std::size_t mul(std::size_t a, std::size_t b) const { return op_.at(a, b); }
  std::size_t unit() const noexcept { return unit_; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }

  const Symbol& name(std::size_t i) const { return carrier()[i]; }
  std::size_t index(const Symbol& s) const { return carrier().index_of(s); }
  const Symbol& mul(const Symbol& a, const Symbol& b) const { return name(mul(index(a), index(b))); }
  const Symbol& inv(const Symbol& a) const { return name(inv(index(a))); }
  const Symbol& unit_name() const { return name(unit_); }

  bool abelian() const {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = a + 1; b < size(); ++b) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  std::size_t order_of(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != unit_; x = mul(x, a)) ++k;
    return k;
  }

  bool operator==(const FinGroup&) const = default;

 private:
  friend FinGroup check_group(const OpTable& table);
  FinGroup(OpTable op, std::size_t unit, std::vector<std::size_t> inv)
      : op_(std::move(op)), unit_(unit), inv_(std::move(inv)) {}

  OpTable op_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> inv_;
};

namespace detail {

inline std::string tuple_name(const FinSet& c, std::initializer_list<std::size_t> idx) {
  std::string out = "(";
  bool first = true;
  for (std::size_t i : idx) {
    if (!first) out += ",";
    out += c[i].str();
    first = false;
  }
  return out + ")";
}

inline std::optional<std::size_t> find_unit(const OpTable& t) {
  const std::size_t n = t.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t.at(e, x) == x && t.at(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace detail

// Group axioms plus the identities derived from them, evaluated on the raw
// table so that a failing table still gets a full report.
inline LawReport group_laws(const OpTable& t) {
  LawReport r("group");
  const std::size_t n = t.size();
  const FinSet& c = t.carrier();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        r.record_lazy("group.associative", "(a*b)*c = a*(b*c)", t.at(t.at(a, b), d) == t.at(a, t.at(b, d)),
                      [&] { return detail::tuple_name(c, {a, b, d}); });
      }
  const auto e = detail::find_unit(t);
  r.record("group.unit", "some e has e*x = x = x*e for all x", e.has_value() || n == 0, e ? "" : "none");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (e) {
      for (std::size_t b = 0; b < n; ++b) {
        if (t.at(a, b) == *e && t.at(b, a) == *e) {
          inv[a] = b;
          break;
        }
      }
    }
    r.record_lazy("group.inverse", "every x has y with x*y = e = y*x", inv[a] < n, [&] { return c[a].str(); });
  }
  for (std::size_t a = 0; a < n; ++a) {
    r.record_lazy("group.inverse_involution", "(x^-1)^-1 = x", inv[a] < n && inv[inv[a]] == a,
                  [&] { return c[a].str(); });
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t right = 0, left = 0;
      for (std::size_t x = 0; x < n; ++x) {
        right += t.at(a, x) == b;
        left += t.at(x, a) == b;
      }
      r.record_lazy("group.unique_solution", "a*x = b and y*a = b have exactly one solution each",
                    right == 1 && left == 1, [&] { return detail::tuple_name(c, {a, b}); });
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        r.record_lazy("group.cancellation", "a*x = a*y or x*a = y*a implies x = y",
                      t.at(a, x) != t.at(a, y) && t.at(x, a) != t.at(y, a),
                      [&] { return detail::tuple_name(c, {a, x, y}); });
      }
  return r;
}

inline FinGroup check_group(const OpTable& table) {
  if (table.size() == 0) throw Error(Errc::EmptyCarrier, "a group has at least its unit");
  const LawReport r = group_laws(table);
  for (const auto& chk : r.checks()) {
    if (!chk.passed) throw Error(Errc::LawFailure, "not a group: " + chk.id, *chk.witness);
  }
  const std::size_t e = *detail::find_unit(table);
  std::vector<std::size_t> inv(table.size());
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = 0; b < table.size(); ++b) {
      if (table.at(a, b) == e) inv[a] = b;
    }
  }
  return FinGroup(table, e, std::move(inv));
}

// a↑n with a↑0 = e, a↑(n+1) = a↑n * a and a↑(-n) = (a↑n)^-1.
inline std::size_t power(const FinGroup& g, std::size_t a, long long n) {
  const long long ord = static_cast<long long>(g.order_of(a));
  long long k = n % ord;
  const bool neg = k < 0;
  if (neg) k = -k;
  std::size_t x = g.unit();
  for (long long i = 0; i < k; ++i) x = g.mul(x, a);
  return neg ? g.inv(x) : x;
}

inline Symbol power(const FinGroup& g, const Symbol& a, long long n) { return g.name(power(g, g.index(a), n)); }

// Exponent laws over |m|,|n| <= bound; in abelian groups also (ab)↑n = a↑n b↑n.
inline LawReport power_laws(const FinGroup& g, long long bound) {
  LawReport r("power");
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (long long m = -bound; m <= bound; ++m) {
      r.record_lazy("power.successor", "a↑(m+1) = a↑m * a",
                    power(g, a, m + 1) == g.mul(power(g, a, m), a),
                    [&] { return g.name(a).str() + "^" + std::to_string(m); });
      r.record_lazy("power.negative", "a↑(-m) = (a↑m)^-1", power(g, a, -m) == g.inv(power(g, a, m)),
                    [&] { return g.name(a).str() + "^" + std::to_string(m); });
      for (long long n = -bound; n <= bound; ++n) {
        r.record_lazy("power.sum", "a↑(m+n) = a↑m * a↑n",
                      power(g, a, m + n) == g.mul(power(g, a, m), power(g, a, n)), [&] {
                        return g.name(a).str() + "^(" + std::to_string(m) + "+" + std::to_string(n) + ")";
                      });
      }
    }
  }
  if (g.abelian()) {
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        for (long long n = -bound; n <= bound; ++n) {
          r.record_lazy("power.abelian_product", "(ab)↑n = a↑n * b↑n in abelian groups",
                        power(g, g.mul(a, b), n) == g.mul(power(g, a, n), power(g, b, n)),
                        [&] { return detail::tuple_name(g.carrier(), {a, b}) + "^" + std::to_string(n); });
        }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Subsets and subgroups

// Subset of a group's carrier, kept both as symbols and as index flags.
struct Subgroup {
  FinSet members;
  std::vector<std::size_t> elems;  // ascending carrier indices
  std::vector<char> flag;

  Subgroup() = default;
  Subgroup(const FinGroup& g, const FinSet& m) : members(m), flag(g.size(), 0) {
    if (!m.subset_of(g.carrier())) {
      throw Error(Errc::CarrierMismatch, "subset outside the group", to_string(m.minus(g.carrier())));
    }
    for (const auto& s : m) {
      elems.push_back(g.index(s));
      flag[elems.back()] = 1;
    }
  }
  static Subgroup from_flags(const FinGroup& g, const std::vector<char>& f) {
    std::vector<Symbol> v;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (f[i]) v.push_back(g.name(i));
    }
    return Subgroup(g, FinSet(std::move(v)));
  }

  bool contains(std::size_t i) const { return flag[i] != 0; }
  std::size_t size() const noexcept { return elems.size(); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const { return members < o.members; }
};

struct SubgroupCriteria {
  bool group = false;           // H with the restricted table is a group
  bool quotient_closed = false;  // HH^-1 ⊆ H
  bool square_inverse = false;  // H² ⊆ H and H^-1 ⊆ H
  std::optional<std::string> witness;  // least (a,b) with a*b^-1 outside H
  bool agree() const { return group == quotient_closed && group == square_inverse; }
};

inline SubgroupCriteria subgroup_criteria(const FinGroup& g, const FinSet& h) {
  if (h.empty()) throw Error(Errc::EmptySubset, "subgroup candidates are nonempty");
  const Subgroup s(g, h);
  SubgroupCriteria out;

  bool closed = true;
  for (std::size_t a : s.elems)
    for (std::size_t b : s.elems) closed = closed && s.contains(g.mul(a, b));
  if (closed) {
    std::vector<std::size_t> cells;
    for (std::size_t a : s.elems)
      for (std::size_t b : s.elems) cells.push_back(h.index_of(g.name(g.mul(a, b))));
    out.group = group_laws(OpTable(h, std::move(cells))).all_passed();
  }

  out.quotient_closed = true;
  for (std::size_t a : s.elems) {
    for (std::size_t b : s.elems) {
      if (!s.contains(g.mul(a, g.inv(b)))) {
        if (out.quotient_closed) out.witness = detail::tuple_name(g.carrier(), {a, b});
        out.quotient_closed = false;
      }
    }
  }

  bool inverses = true;
  for (std::size_t a : s.elems) inverses = inverses && s.contains(g.inv(a));
  out.square_inverse = closed && inverses;
  return out;
}

inline Subgroup subgroup_check(const FinGroup& g, const FinSet& h) {
  const SubgroupCriteria c = subgroup_criteria(g, h);
  if (!c.agree()) throw Error(Errc::LawFailure, "subgroup criteria disagree", to_string(h));
  if (!c.group) throw Error(Errc::NotSubgroup, "HH^-1 is not contained in H", *c.witness);
  return Subgroup(g, h);
}

// Smallest subgroup containing `gens`: product closure to a fixpoint.
inline Subgroup generated(const FinGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<std::size_t> members{g.unit()};
  in[g.unit()] = 1;
  for (std::size_t x : gens) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t p : {g.mul(members[i], members[j]), g.mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  return Subgroup::from_flags(g, in);
}

// ⟨a⟩ = {a↑x}; asserted to be an abelian subgroup.
inline Subgroup cyclic_subgroup(const FinGroup& g, std::size_t a) {
  std::vector<Symbol> v;
  for (long long k = 0; k < static_cast<long long>(g.order_of(a)); ++k) v.push_back(g.name(power(g, a, k)));
  const Subgroup h = subgroup_check(g, FinSet(std::move(v)));
  for (std::size_t x : h.elems)
    for (std::size_t y : h.elems) {
      if (g.mul(x, y) != g.mul(y, x)) {
        throw Error(Errc::LawFailure, "cyclic subgroup not abelian", detail::tuple_name(g.carrier(), {x, y}));
      }
    }
  return h;
}

inline Subgroup cyclic_subgroup(const FinGroup& g, const Symbol& a) { return cyclic_subgroup(g, g.index(a)); }

inline Subgroup trivial_subgroup(const FinGroup& g) { return Subgroup(g, FinSet{g.unit_name()}); }
inline Subgroup whole(const FinGroup& g) { return Subgroup(g, g.carrier()); }

// Every subgroup, by joining one element at a time starting from {e}.
inline std::vector<Subgroup> all_subgroups(const FinGroup& g) {
  std::vector<Subgroup> out{trivial_subgroup(g)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (out[i].contains(x)) continue;
      std::vector<std::size_t> gens = out[i].elems;
      gens.push_back(x);
      Subgroup s = generated(g, gens);
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.members < b.members;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Cosets

enum class Side { right, left };  // right: Hx = {h*x}, left: xH = {x*h}

inline FinSet coset(const FinGroup& g, const Subgroup& h, std::size_t x, Side side) {
  std::vector<Symbol> v;
  for (std::size_t e : h.elems) v.push_back(g.name(side == Side::right ? g.mul(e, x) : g.mul(x, e)));
  return FinSet::from_any(std::move(v));
}

// Blocks Hx (or xH). Asserts the blocks partition G, each block is the
// bijective translate of H, and H itself is a block.
inline Partition cosets(const FinGroup& g, const Subgroup& h, Side side = Side::right) {
  std::vector<FinSet> blocks;
  for (std::size_t x = 0; x < g.size(); ++x) {
    FinSet b = coset(g, h, x, side);
    if (b.size() != h.size()) throw Error(Errc::LawFailure, "translation by x is not injective on H", g.name(x).str());
    if (!b.contains(g.name(x))) throw Error(Errc::LawFailure, "x outside its own coset", g.name(x).str());
    if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) blocks.push_back(std::move(b));
  }
  Partition p(g.carrier(), std::move(blocks));
  if (std::find(p.blocks.begin(), p.blocks.end(), h.members) == p.blocks.end()) {
    throw Error(Errc::LawFailure, "H is not one of its cosets", to_string(h.members));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Normality and quotients

struct NormalityCriteria {
  bool cosets_equal = false;   // xN = Nx
  bool conj_equal = false;     // xNx^-1 = N
  bool conj_contained = false;  // xNx^-1 ⊆ N
  std::optional<std::string> witness;  // least x with xNx^-1 ⊄ N
  bool agree() const { return cosets_equal == conj_equal && conj_equal == conj_contained; }
};

inline FinSet conjugate(const FinGroup& g, const Subgroup& n, std::size_t x) {
  std::vector<Symbol> v;
  for (std::size_t m : n.elems) v.push_back(g.name(g.mul(g.mul(x, m), g.inv(x))));
  return FinSet::from_any(std::move(v));
}

inline NormalityCriteria normality_criteria(const FinGroup& g, const Subgroup& n) {
  NormalityCriteria c{true, true, true, std::nullopt};
  for (std::size_t x = 0; x < g.size(); ++x) {
    c.cosets_equal = c.cosets_equal && coset(g, n, x, Side::left) == coset(g, n, x, Side::right);
    const FinSet conj = conjugate(g, n, x);
    c.conj_equal = c.conj_equal && conj == n.members;
    if (!conj.subset_of(n.members)) {
      if (c.conj_contained) c.witness = g.name(x).str();
      c.conj_contained = false;
    }
  }
  return c;
}

inline bool is_normal(const FinGroup& g, const Subgroup& n) {
  const NormalityCriteria c = normality_criteria(g, n);
  if (!c.agree()) throw Error(Errc::LawFailure, "normality criteria disagree", to_string(n.members));
  return c.conj_contained;
}

inline void require_normal(const FinGroup& g, const Subgroup& n) {
  const NormalityCriteria c = normality_criteria(g, n);
  if (!c.agree()) throw Error(Errc::LawFailure, "normality criteria disagree", to_string(n.members));
  if (!c.conj_contained) throw Error(Errc::NotNormal, "xNx^-1 is not contained in N", *c.witness);
}

// Block containing carrier index x.
inline std::size_t block_of(const Partition& p, const Symbol& x) {
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].contains(x)) return b;
  }
  throw Error(Errc::CarrierMismatch, "element not covered by the partition", x.str());
}

// G modulo a partition, classes named by their member set. The class
// product [x][y] = [xy] must not depend on the representatives.
inline FinGroup quotient_by(const FinGroup& g, const Partition& p) {
  if (p.carrier != g.carrier()) throw Error(Errc::CarrierMismatch, "partition of a different carrier");
  std::vector<Symbol> names;
  for (const auto& b : p.blocks) names.emplace_back(to_string(b));
  const FinSet classes(names);
  std::vector<std::size_t> cls(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) cls[x] = classes.index_of(names[block_of(p, g.name(x))]);
  const std::size_t k = classes.size();
  std::vector<std::size_t> cells(k * k, k);
  std::vector<std::pair<std::size_t, std::size_t>> rep(k * k);
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      const std::size_t cell = cls[x] * k + cls[y];
      const std::size_t val = cls[g.mul(x, y)];
      if (cells[cell] == k) {
        cells[cell] = val;
        rep[cell] = {x, y};
      } else if (cells[cell] != val) {
        const auto [x0, y0] = rep[cell];
        throw Error(Errc::IllDefinedQuotient, "class product depends on representatives",
                    detail::tuple_name(g.carrier(), {x0, y0}) + "~" + detail::tuple_name(g.carrier(), {x, y}));
      }
    }
  }
  FinGroup q = check_group(OpTable(classes, std::move(cells)));
  if (g.abelian() && !q.abelian()) throw Error(Errc::LawFailure, "quotient of an abelian group is not abelian");
  return q;
}

inline FinGroup quotient(const FinGroup& g, const Subgroup& n) {
  require_normal(g, n);
  return quotient_by(g, cosets(g, n, Side::right));
}

// x ↦ Nx as a map into the quotient's carrier.
inline FinMap quotient_map(const FinGroup& g, const Subgroup& n, const FinGroup& q) {
  std::vector<std::size_t> values;
  for (std::size_t x = 0; x < g.size(); ++x) values.push_back(q.index(Symbol(to_string(coset(g, n, x, Side::right)))));
  return FinMap(g.carrier(), q.carrier(), std::move(values));
}

// ---------------------------------------------------------------------------
// Commutators, center, commutant

inline std::size_t commutator(const FinGroup& g, std::size_t a, std::size_t b) {
  return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
}

inline Symbol commutator(const FinGroup& g, const Symbol& a, const Symbol& b) {
  return g.name(commutator(g, g.index(a), g.index(b)));
}

// Elements whose commutator map a□ is constant at e; asserted a normal subgroup.
inline Subgroup center(const FinGroup& g) {
  std::vector<char> in(g.size(), 0);
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool central = true;
    for (std::size_t x = 0; x < g.size() && central; ++x) central = commutator(g, a, x) == g.unit();
    in[a] = central;
  }
  const Subgroup z = Subgroup::from_flags(g, in);
  subgroup_check(g, z.members);
  if (!is_normal(g, z)) throw Error(Errc::LawFailure, "center is not normal");
  return z;
}

// Product closure of all commutators; closing under inverses afterwards must
// add nothing.
inline Subgroup commutant(const FinGroup& g) {
  std::vector<char> in(g.size(), 0);
  std::vector<std::size_t> members;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      const std::size_t c = commutator(g, a, b);
      if (!in[c]) {
        in[c] = 1;
        members.push_back(c);
      }
    }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (std::size_t p : {g.mul(members[i], members[j]), g.mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  for (std::size_t m : members) {
    if (!in[g.inv(m)]) throw Error(Errc::LawFailure, "commutant not closed under inverses", g.name(m).str());
  }
  const Subgroup c = Subgroup::from_flags(g, in);
  subgroup_check(g, c.members);
  if (!is_normal(g, c)) throw Error(Errc::LawFailure, "commutant is not normal");
  return c;
}

inline LawReport abelianization_check(const FinGroup& g, const Subgroup& n) {
  require_normal(g, n);
  LawReport r("abelianization");
  const Subgroup c = commutant(g);
  r.record("abelianization.quotient_abelian", "G/[G,G] is abelian", quotient(g, c).abelian());
  const bool abelian = quotient(g, n).abelian();
  const bool contains = c.members.subset_of(n.members);
  r.record("abelianization.minimal", "G/N is abelian iff [G,G] ⊆ N", abelian == contains, to_string(n.members));
  const Subgroup zg = center(g);
  for (const auto& z : all_subgroups(g)) {
    if (!z.members.subset_of(zg.members)) continue;
    r.record("abelianization.central_normal", "subgroups of the center are normal", is_normal(g, z),
             to_string(z.members));
  }
  return r;
}

}  // namespace structa::group
