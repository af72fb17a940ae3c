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
#include "structa/core/law_report.hpp"

namespace structa::order {

// Binary relation on a carrier, stored as a dense boolean matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(FinSet carrier) : carrier_(std::move(carrier)), bits_(carrier_.size() * carrier_.size(), 0) {}

  Relation(FinSet carrier, const std::vector<std::pair<Symbol, Symbol>>& pairs) : Relation(std::move(carrier)) {
    for (const auto& [a, b] : pairs) set(carrier_.index_of(a), carrier_.index_of(b));
  }

  const FinSet& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }

  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * size() + j] != 0; }
  bool holds(const Symbol& a, const Symbol& b) const { return (*this)(carrier_.index_of(a), carrier_.index_of(b)); }
  void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * size() + j] = v ? 1 : 0; }

  std::vector<std::pair<Symbol, Symbol>> pairs() const {
    std::vector<std::pair<Symbol, Symbol>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if ((*this)(i, j)) out.emplace_back(carrier_[i], carrier_[j]);
      }
    }
    return out;
  }

  bool operator==(const Relation&) const = default;

 private:
  FinSet carrier_;
  std::vector<char> bits_;
};

struct OrderCheck {
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool total = false;
  bool preorder = false;
  bool partial = false;
  bool natural = false;
  LawReport report;  // one law per axiom, lexicographically least witness
};

inline OrderCheck check_order(const Relation& rel) {
  OrderCheck out;
  out.report = LawReport("order");
  LawReport& r = out.report;
  const FinSet& c = rel.carrier();
  const std::size_t n = rel.size();
  r.declare("order.reflexive", "x <= x");
  r.declare("order.antisymmetric", "x <= y and y <= x imply x = y");
  r.declare("order.transitive", "x <= y and y <= z imply x <= z");
  r.declare("order.total", "x <= y or y <= x");
  for (std::size_t i = 0; i < n; ++i) {
    r.record_lazy("order.reflexive", "", rel(i, i), [&] { return c[i].str(); });
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        r.record_lazy("order.antisymmetric", "", !(rel(i, j) && rel(j, i)),
                      [&] { return "(" + c[i].str() + "," + c[j].str() + ")"; });
      }
      if (i < j) {
        r.record_lazy("order.total", "", rel(i, j) || rel(j, i), [&] { return "(" + c[i].str() + "," + c[j].str() + ")"; });
      }
      if (!rel(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (rel(j, k)) {
          r.record_lazy("order.transitive", "", rel(i, k),
                        [&] { return "(" + c[i].str() + "," + c[j].str() + "," + c[k].str() + ")"; });
        }
      }
    }
  }
  out.reflexive = r.passed("order.reflexive");
  out.antisymmetric = r.passed("order.antisymmetric");
  out.transitive = r.passed("order.transitive");
  out.total = r.passed("order.total");
  out.preorder = out.reflexive && out.transitive;
  out.partial = out.preorder && out.antisymmetric;
  out.natural = out.partial && out.total;
  return out;
}

// Partial order. Construction validates the three axioms.
class Poset {
 public:
  Poset() = default;
  explicit Poset(Relation leq) : leq_(std::move(leq)) {
    const OrderCheck oc = check_order(leq_);
    if (!oc.partial) {
      for (const auto& chk : oc.report.checks()) {
        if (!chk.passed && chk.id != "order.total") {
          throw Error(Errc::InvalidStructure, "relation is not a partial order (" + chk.id + ")", *chk.witness);
        }
      }
    }
    build_masks();
  }

  Poset(FinSet carrier, const std::vector<std::pair<Symbol, Symbol>>& pairs)
      : Poset(Relation(std::move(carrier), pairs)) {}

  // Reflexive-transitive closure of the given pairs (e.g. a Hasse diagram).
  static Poset generated(FinSet carrier, const std::vector<std::pair<Symbol, Symbol>>& pairs) {
    Relation rel(std::move(carrier), pairs);
    const std::size_t n = rel.size();
    for (std::size_t i = 0; i < n; ++i) rel.set(i, i);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!rel(i, k)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (rel(k, j)) rel.set(i, j);
        }
      }
    }
    return Poset(std::move(rel));
  }

  // Chain on the carrier in the listed order.
  static Poset chain(const std::vector<Symbol>& order) {
    FinSet carrier(order);
    Relation rel(carrier);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i; j < order.size(); ++j) rel.set(carrier.index_of(order[i]), carrier.index_of(order[j]));
    }
    return Poset(std::move(rel));
  }

  static Poset discrete(const FinSet& carrier) {
    Relation rel(carrier);
    for (std::size_t i = 0; i < carrier.size(); ++i) rel.set(i, i);
    return Poset(std::move(rel));
  }

  // Subsets of `base` ordered by inclusion; elements are named "{a,b}".
  static Poset powerset(const FinSet& base) {
    const auto subsets = base.subsets();
    std::vector<Symbol> names;
    for (const auto& s : subsets) names.emplace_back(to_string(s));
    FinSet carrier(names);
    Relation rel(carrier);
    for (const auto& a : subsets) {
      for (const auto& b : subsets) {
        if (a.subset_of(b)) rel.set(carrier.index_of(Symbol(to_string(a))), carrier.index_of(Symbol(to_string(b))));
      }
    }
    return Poset(std::move(rel));
  }

  const FinSet& carrier() const noexcept { return leq_.carrier(); }
  const Relation& relation() const noexcept { return leq_; }
  std::size_t size() const noexcept { return leq_.size(); }

  bool leq(std::size_t i, std::size_t j) const { return leq_(i, j); }
  bool leq(const Symbol& a, const Symbol& b) const { return leq_.holds(a, b); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq_(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq_(i, j) || leq_(j, i); }

  // Masks of elements above / below i; only for carriers of at most 64 elements.
  bool has_masks() const noexcept { return !up_.empty() || size() == 0; }
  Mask up(std::size_t i) const { return up_.at(i); }
  Mask down(std::size_t i) const { return down_.at(i); }

  Poset opposite() const {
    Relation rel(carrier());
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) rel.set(i, j, leq_(j, i));
    }
    return Poset(std::move(rel));
  }

  // Covering pairs (x < y with nothing strictly between), for rendering.
  std::vector<std::pair<Symbol, Symbol>> hasse() const {
    std::vector<std::pair<Symbol, Symbol>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (!less(i, j)) continue;
        bool covered = true;
        for (std::size_t k = 0; k < size() && covered; ++k) covered = !(less(i, k) && less(k, j));
        if (covered) out.emplace_back(carrier()[i], carrier()[j]);
      }
    }
    return out;
  }

  bool operator==(const Poset& other) const { return leq_ == other.leq_; }

 private:
  void build_masks() {
    if (size() > 64) return;
    up_.assign(size(), 0);
    down_.assign(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (leq_(i, j)) {
          up_[i] |= Mask{1} << j;
          down_[j] |= Mask{1} << i;
        }
      }
    }
  }

  Relation leq_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

// ---------------------------------------------------------------------------
// Bounds

struct Bounds {
  FinSet upper;
  FinSet lower;
  std::optional<Symbol> sup;
  std::optional<Symbol> inf;
  std::optional<Symbol> max;
  std::optional<Symbol> min;
};

namespace detail {

// Least element of `set` under p, if any.
inline std::optional<std::size_t> least_of(const Poset& p, const std::vector<std::size_t>& set) {
  for (std::size_t c : set) {
    if (std::all_of(set.begin(), set.end(), [&](std::size_t o) { return p.leq(c, o); })) return c;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> greatest_of(const Poset& p, const std::vector<std::size_t>& set) {
  for (std::size_t c : set) {
    if (std::all_of(set.begin(), set.end(), [&](std::size_t o) { return p.leq(o, c); })) return c;
  }
  return std::nullopt;
}

inline std::vector<std::size_t> indices(const Poset& p, const FinSet& a) {
  std::vector<std::size_t> out;
  for (const auto& s : a) out.push_back(p.carrier().index_of(s));
  return out;
}

inline FinSet to_set(const Poset& p, const std::vector<std::size_t>& idx) {
  std::vector<Symbol> out;
  for (std::size_t i : idx) out.push_back(p.carrier()[i]);
  return FinSet(std::move(out));
}

}  // namespace detail

// Bounds of A. The empty set is bounded by everything, so sup of the empty set
// is the minimum when one exists and is absent otherwise.
inline Bounds bounds(const Poset& p, const FinSet& a) {
  if (!a.subset_of(p.carrier())) throw Error(Errc::CarrierMismatch, "subset outside poset carrier", to_string(a));
  const auto ai = detail::indices(p, a);
  std::vector<std::size_t> up, low;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (std::all_of(ai.begin(), ai.end(), [&](std::size_t y) { return p.leq(y, x); })) up.push_back(x);
    if (std::all_of(ai.begin(), ai.end(), [&](std::size_t y) { return p.leq(x, y); })) low.push_back(x);
  }
  Bounds b;
  b.upper = detail::to_set(p, up);
  b.lower = detail::to_set(p, low);
  auto sym = [&](std::optional<std::size_t> i) -> std::optional<Symbol> {
    if (!i) return std::nullopt;
    return p.carrier()[*i];
  };
  b.sup = sym(detail::least_of(p, up));
  b.inf = sym(detail::greatest_of(p, low));
  b.max = sym(detail::greatest_of(p, ai));
  b.min = sym(detail::least_of(p, ai));
  return b;
}

// Mask variants used by the exhaustive scans (carrier of at most 64 elements).
inline Mask upper_mask(const Poset& p, Mask a) {
  Mask u = full_mask(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (a & (Mask{1} << i)) u &= p.up(i);
  }
  return u;
}

inline Mask lower_mask(const Poset& p, Mask a) {
  Mask d = full_mask(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (a & (Mask{1} << i)) d &= p.down(i);
  }
  return d;
}

inline std::optional<std::size_t> least_in(const Poset& p, Mask s) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((s & (Mask{1} << i)) && (s & ~p.up(i)) == 0) return i;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> greatest_in(const Poset& p, Mask s) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((s & (Mask{1} << i)) && (s & ~p.down(i)) == 0) return i;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> sup_mask(const Poset& p, Mask a) { return least_in(p, upper_mask(p, a)); }
inline std::optional<std::size_t> inf_mask(const Poset& p, Mask a) { return greatest_in(p, lower_mask(p, a)); }

inline bool is_chain_mask(const Poset& p, Mask a) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(a & (Mask{1} << i))) continue;
    if ((a & ~(p.up(i) | p.down(i))) != 0) return false;
  }
  return true;
}

// Every pair of members has an upper bound inside the set.
inline bool is_directed_mask(const Poset& p, Mask a) {
  if (a == 0) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(a & (Mask{1} << i))) continue;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if ((a & (Mask{1} << j)) && (p.up(i) & p.up(j) & a) == 0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Directed sets

struct DirectedCheck {
  bool pairwise = false;
  bool finite_subsets = false;
};

// Evaluates both criteria: every pair has an upper bound in A, and every
// finite subset of A (including the empty one) has an upper bound in A.
inline DirectedCheck directed_criteria(const Poset& p, const FinSet& a) {
  if (a.empty()) throw Error(Errc::EmptySubset, "directedness of an empty subset");
  if (a.size() > 20) throw Error(Errc::TooLarge, "directed check enumerates subsets of at most 20 elements");
  const auto ai = detail::indices(p, a);
  auto has_bound_in_a = [&](const std::vector<std::size_t>& s) {
    return std::any_of(ai.begin(), ai.end(), [&](std::size_t z) {
      return std::all_of(s.begin(), s.end(), [&](std::size_t x) { return p.leq(x, z); });
    });
  };
  DirectedCheck out{true, true};
  for (std::size_t i = 0; i < ai.size() && out.pairwise; ++i) {
    for (std::size_t j = i + 1; j < ai.size() && out.pairwise; ++j) out.pairwise = has_bound_in_a({ai[i], ai[j]});
  }
  for (Mask m = 0; m < (Mask{1} << ai.size()) && out.finite_subsets; ++m) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < ai.size(); ++i) {
      if (m & (Mask{1} << i)) s.push_back(ai[i]);
    }
    out.finite_subsets = has_bound_in_a(s);
  }
  return out;
}

inline bool is_directed(const Poset& p, const FinSet& a) {
  const DirectedCheck d = directed_criteria(p, a);
  if (d.pairwise != d.finite_subsets) {
    throw Error(Errc::LawFailure, "pairwise and finite-subset directedness disagree", to_string(a));
  }
  return d.pairwise;
}

// ---------------------------------------------------------------------------
// Enumeration of labeled posets (test and suite oracle).

// Every partial order on `carrier`, by assigning each unordered pair one of
// {incomparable, <, >} and keeping the transitive assignments.
inline std::vector<Poset> all_posets(const FinSet& carrier) {
  const std::size_t n = carrier.size();
  if (n > 5) throw Error(Errc::TooLarge, "labeled poset enumeration limited to 5 elements");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Poset> out;
  std::vector<int> choice(pairs.size(), 0);
  Relation rel(carrier);
  for (std::size_t i = 0; i < n; ++i) rel.set(i, i);
  while (true) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      rel.set(pairs[k].first, pairs[k].second, choice[k] == 1);
      rel.set(pairs[k].second, pairs[k].first, choice[k] == 2);
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = 0; j < n && transitive; ++j) {
        if (!rel(i, j)) continue;
        for (std::size_t k = 0; k < n && transitive; ++k) transitive = !rel(j, k) || rel(i, k);
      }
    }
    if (transitive) out.emplace_back(rel);
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == 3) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

}  // namespace structa::order
