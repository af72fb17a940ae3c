#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/family.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/law_report.hpp"
#include "structa/order/poset.hpp"
#include "structa/settools/images.hpp"

namespace structa::settools {

namespace detail {

inline FamBits all_bits(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  return subsets == 64 ? ~FamBits{0} : (FamBits{1} << subsets) - 1;
}

// upward closure <B>
inline FamBits up_bits(FamBits b, std::size_t n) {
  FamBits out = 0;
  const Mask all = full_mask(n);
  for (Mask a = 0; a <= all; ++a) {
    if (!has(b, a)) continue;
    for (Mask s = 0; s <= all; ++s) {
      if ((s & a) == a) out |= FamBits{1} << s;
    }
  }
  return out;
}

// condition a): nonempty, no empty member, every pairwise meet contains a member
inline bool base_bits(FamBits b, std::size_t n) {
  if (b == 0 || has(b, 0)) return false;
  const Mask all = full_mask(n);
  for (Mask f = 0; f <= all; ++f) {
    if (!has(b, f)) continue;
    for (Mask g = f; g <= all; ++g) {
      if (!has(b, g)) continue;
      bool found = false;
      for (Mask h = 0; h <= all && !found; ++h) found = has(b, h) && (h & f & g) == h;
      if (!found) return false;
    }
  }
  return true;
}

// conditions A) and B)
inline bool filter_bits(FamBits b, std::size_t n) {
  if (b == 0 || has(b, 0)) return false;
  const Mask all = full_mask(n);
  for (Mask f = 0; f <= all; ++f) {
    if (!has(b, f)) continue;
    for (Mask s = 0; s <= all; ++s) {
      if ((s & f) == f && !has(b, s)) return false;
      if (has(b, s) && !has(b, s & f)) return false;
    }
  }
  return true;
}

inline bool ultra_bits(FamBits b, std::size_t n) {
  const Mask all = full_mask(n);
  for (Mask a = 0; a <= all; ++a) {
    if (!has(b, a) && !has(b, all & ~a)) return false;
  }
  return true;
}

// B <= C (C finer): every member of B contains a member of C
inline bool finer_bits(FamBits b, FamBits c, std::size_t n) {
  const Mask all = full_mask(n);
  for (Mask x = 0; x <= all; ++x) {
    if (!has(b, x)) continue;
    bool found = false;
    for (Mask y = 0; y <= all && !found; ++y) found = has(c, y) && (y & x) == y;
    if (!found) return false;
  }
  return true;
}

// Every upward-closed family, by deciding subsets from the top down: a subset
// may only be included once all its one-point extensions are.
inline std::vector<FamBits> upsets(std::size_t n) {
  const Mask all = full_mask(n);
  std::vector<Mask> order;
  for (Mask m = 0; m <= all; ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return popcount(a) > popcount(b); });
  std::vector<FamBits> out;
  auto rec = [&](auto&& self, std::size_t i, FamBits cur) -> void {
    if (i == order.size()) {
      out.push_back(cur);
      return;
    }
    const Mask m = order[i];
    self(self, i + 1, cur);
    for (std::size_t j = 0; j < n; ++j) {
      const Mask up = m | (Mask{1} << j);
      if (up != m && !has(cur, up)) return;
    }
    self(self, i + 1, cur | (FamBits{1} << m));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline bool is_filter_base(const Family& b) { return detail::base_bits(detail::fam_bits(b), b.carrier().size()); }
inline bool is_filter(const Family& f) { return detail::filter_bits(detail::fam_bits(f), f.carrier().size()); }
inline bool is_ultrafilter(const Family& f) {
  const std::size_t n = f.carrier().size();
  const FamBits b = detail::fam_bits(f);
  return detail::filter_bits(b, n) && detail::ultra_bits(b, n);
}

// B <= C: C is finer than B.
inline bool refines(const Family& b, const Family& c) {
  if (b.carrier() != c.carrier()) throw Error(Errc::CarrierMismatch, "bases over different carriers");
  return detail::finer_bits(detail::fam_bits(b), detail::fam_bits(c), b.carrier().size());
}

// <B>: every superset of a member.
inline Family generated_filter(const Family& b) {
  for (const auto& m : b) {
    if (m.empty()) throw Error(Errc::EmptyMemberInBase, "a filter base has no empty member", "{}");
  }
  return detail::from_bits(b.carrier(), detail::up_bits(detail::fam_bits(b), b.carrier().size()));
}

inline Family principal_filter(const FinSet& carrier, const FinSet& f) {
  if (f.empty()) throw Error(Errc::EmptyMemberInBase, "principal filter of the empty set", "{}");
  return generated_filter(Family(carrier, {f}));
}

inline Family point_filter(const FinSet& carrier, const Symbol& x) { return principal_filter(carrier, FinSet{x}); }

// Every filter on the carrier (|carrier| <= 5), ordered by bit pattern.
inline std::vector<Family> all_filters(const FinSet& carrier) {
  detail::require_small(carrier, 5);
  std::vector<Family> out;
  for (FamBits u : detail::upsets(carrier.size())) {
    if (detail::filter_bits(u, carrier.size())) out.push_back(detail::from_bits(carrier, u));
  }
  return out;
}

// On a finite carrier every set is finite, so the cofinite family contains the
// empty set and is never a filter.
inline Family cofinite_filter(const FinSet& carrier) {
  throw Error(Errc::Degenerate, "cofinite family of a finite carrier contains the empty set", to_string(carrier));
}

// Tail complements {i^c}, i^c = {x : not x <= i}, of a poset used as an index
// set; Degenerate when some complement is empty (always the case when the
// index set has a top).
inline Family frechet_base(const order::Poset& idx) {
  std::vector<FinSet> members;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::vector<Symbol> c;
    for (std::size_t x = 0; x < idx.size(); ++x) {
      if (!idx.leq(x, i)) c.push_back(idx.carrier()[x]);
    }
    if (c.empty()) throw Error(Errc::Degenerate, "tail complement is empty", idx.carrier()[i].str());
    members.emplace_back(c);
  }
  return Family(idx.carrier(), members);
}

// Elementary filter of a net I -> X: the direct image of <Frechet base>.
inline Family elementary_filter(const FinMap& net, const order::Poset& idx) {
  if (net.dom() != idx.carrier()) throw Error(Errc::CarrierMismatch, "net domain differs from the index set");
  return direct_image(net, generated_filter(frechet_base(idx)));
}

struct FilterOps {
  bool base = false;
  bool filter = false;
  std::optional<Family> generated;   // <B>, present when B is a base
  std::vector<Family> principal;     // <F> for F in <B>
  LawReport laws;
};

// Flags and the generated filter for a family, with the laws relating them.
// Minimality is checked against every filter when the carrier has <= 4 points.
inline FilterOps filter_ops(const Family& input) {
  for (const auto& m : input) {
    if (m.empty()) throw Error(Errc::EmptyMemberInBase, "family has the empty set as a member", "{}");
  }
  const FinSet& c = input.carrier();
  const std::size_t n = c.size();
  detail::require_small(c);
  FilterOps out;
  out.laws = LawReport("filter");
  LawReport& r = out.laws;
  const FamBits b = detail::fam_bits(input);
  out.base = detail::base_bits(b, n);
  out.filter = detail::filter_bits(b, n);
  const std::string w = to_string(input);
  r.record("filter.filter_is_base", "every filter is a base", !out.filter || out.base, w);
  if (!out.base) return out;
  const FamBits g = detail::up_bits(b, n);
  out.generated = detail::from_bits(c, g);
  r.record("filter.generated_is_filter", "<B> is a filter", detail::filter_bits(g, n), w);
  r.record("filter.extensive", "B <= <B>", (b & ~g) == 0, w);
  r.record("filter.fixed_iff_filter", "<B> = B iff B is a filter", (g == b) == out.filter, w);
  r.record("filter.idempotent", "<<B>> = <B>", detail::up_bits(g, n) == g, w);
  if (n <= 4) {
    for (const auto& f : all_filters(c)) {
      const FamBits fb = detail::fam_bits(f);
      if ((b & ~fb) == 0) {
        r.record_lazy("filter.minimal", "B <= F filter implies <B> <= F", (g & ~fb) == 0,
                      [&] { return w + " F=" + to_string(f); });
      }
    }
  }
  // F = U <F_i> and the downward-directed reading of the filter
  FamBits joined = 0;
  for (const auto& m : *out.generated) {
    out.principal.push_back(principal_filter(c, m));
    joined |= detail::fam_bits(out.principal.back());
  }
  r.record("filter.union_of_principal", "<B> = U_{F in <B>} <F>", joined == g, w);
  bool directed = true;
  const Mask all = full_mask(n);
  for (Mask x = 0; x <= all; ++x)
    for (Mask y = 0; y <= all; ++y)
      if (detail::has(g, x) && detail::has(g, y) && !detail::has(g, x & y)) directed = false;
  r.record("filter.downward_directed", "any two members have a common lower bound in the filter", directed, w);
  return out;
}

// The refinement preorder on all bases over a carrier of <= 3 points, and its
// relation to inclusion of filters and to <.>.
inline LawReport refinement_laws(const FinSet& carrier) {
  detail::require_small(carrier, 3);
  LawReport r("refinement");
  const std::size_t n = carrier.size();
  std::vector<FamBits> bases;
  for (FamBits b = 0; b <= detail::all_bits(n); ++b) {
    if (detail::base_bits(b, n)) bases.push_back(b);
    if (b == detail::all_bits(n)) break;
  }
  auto name = [&](FamBits b) { return to_string(detail::from_bits(carrier, b)); };
  for (FamBits b : bases) {
    r.record_lazy("refinement.reflexive", "B <= B", detail::finer_bits(b, b, n), [&] { return name(b); });
    for (FamBits c : bases) {
      const bool bc = detail::finer_bits(b, c, n), cb = detail::finer_bits(c, b, n);
      const FamBits gb = detail::up_bits(b, n), gc = detail::up_bits(c, n);
      auto w = [&] { return name(b) + " " + name(c); };
      r.record_lazy("refinement.mutual_iff_same_filter", "B <= C and C <= B iff <B> = <C>", (bc && cb) == (gb == gc), w);
      r.record_lazy("generated.monotone", "B <= C (inclusion) implies <B> <= <C>", (b & ~c) != 0 || (gb & ~gc) == 0, w);
      if (detail::filter_bits(b, n) && detail::filter_bits(c, n)) {
        r.record_lazy("refinement.filters_inclusion", "for filters, F <= G iff F is a subfamily of G",
                      bc == ((b & ~c) == 0), w);
        r.record_lazy("refinement.filters_antisymmetric", "for filters, mutual refinement is equality",
                      !(bc && cb) || b == c, w);
      }
      if (!bc) continue;
      for (FamBits d : bases) {
        if (detail::finer_bits(c, d, n)) {
          r.record_lazy("refinement.transitive", "B <= C <= D implies B <= D", detail::finer_bits(b, d, n),
                        [&] { return name(b) + " " + name(c) + " " + name(d); });
        }
      }
    }
    const FamBits g = detail::up_bits(b, n);
    r.record_lazy("generated.extensive", "B <= <B>", (b & ~g) == 0, [&] { return name(b); });
    r.record_lazy("generated.idempotent", "<<B>> = <B>", detail::up_bits(g, n) == g, [&] { return name(b); });
  }
  return r;
}

// Ultrafilter theory on every filter of a carrier with <= 5 points.
inline LawReport ultrafilter_suite(const FinSet& carrier) {
  detail::require_small(carrier, 5);
  LawReport r("ultrafilter");
  const std::size_t n = carrier.size();
  const Mask all = full_mask(n);
  std::vector<FamBits> filters;
  for (const auto& f : all_filters(carrier)) filters.push_back(detail::fam_bits(f));
  auto name = [&](FamBits b) { return to_string(detail::from_bits(carrier, b)); };
  std::size_t ultra_count = 0;
  for (FamBits f : filters) {
    const bool ultra = detail::ultra_bits(f, n);
    bool maximal = true;
    for (FamBits g : filters) {
      if (g != f && detail::finer_bits(f, g, n)) maximal = false;
    }
    bool prime = true;
    for (Mask a = 0; a <= all; ++a)
      for (Mask b = 0; b <= all; ++b)
        if (detail::has(f, a | b) && !detail::has(f, a) && !detail::has(f, b)) prime = false;
    r.record_lazy("ultra.iff_maximal", "ultrafilter iff maximal under refinement", ultra == maximal, [&] { return name(f); });
    r.record_lazy("ultra.iff_union_prime", "ultrafilter iff F u G in it implies F or G in it", ultra == prime,
                  [&] { return name(f); });
    if (ultra) {
      ++ultra_count;
      // principal: the meet of all members is a point and generates f
      Mask meet = all;
      for (Mask a = 0; a <= all; ++a)
        if (detail::has(f, a)) meet &= a;
      r.record_lazy("ultra.principal", "every ultrafilter on a finite set is <x>",
                    popcount(meet) == 1 && detail::up_bits(FamBits{1} << meet, n) == f, [&] { return name(f); });
    }
    for (FamBits g : filters) {
      const FamBits u = f | g;
      if (!detail::filter_bits(u, n)) continue;
      const bool uu = detail::ultra_bits(u, n);
      auto w = [&] { return name(f) + " " + name(g); };
      r.record_lazy("ultra.union_split", "F u G ultra implies F or G ultra",
                    !uu || detail::ultra_bits(f, n) || detail::ultra_bits(g, n), w);
      r.record_lazy("ultra.union_absorbs", "F ultra and F u G a filter imply F u G ultra",
                    !detail::ultra_bits(f, n) || uu, w);
    }
  }
  for (const auto& x : carrier) {
    r.record_lazy("ultra.point_filters", "<x> is an ultrafilter", is_ultrafilter(point_filter(carrier, x)),
                  [&] { return x.str(); });
  }
  r.record("ultra.count", "the number of ultrafilters equals |X|", ultra_count == n,
           std::to_string(ultra_count) + " vs " + std::to_string(n));
  return r;
}

enum class Direction { forward, backward };

// forward: f[[B]] for a base over dom f (always a base).
// backward: f^-1[[B]] for a base over cod f; requires every member to meet
// Im f, otherwise MeetingConditionFailed names the first offending member.
inline Family filter_transport(const FinMap& f, const Family& b, Direction dir) {
  if (dir == Direction::forward) {
    if (!is_filter_base(b)) throw Error(Errc::InvalidStructure, "not a filter base", to_string(b));
    return image_family(f, b);
  }
  if (b.carrier() != f.cod()) throw Error(Errc::CarrierMismatch, "base is not over the codomain");
  if (!is_filter_base(b)) throw Error(Errc::InvalidStructure, "not a filter base", to_string(b));
  const FinSet im = f.image();
  for (const auto& m : b) {
    if (m.intersect(im).empty()) throw Error(Errc::MeetingConditionFailed, "member misses the image", to_string(m));
  }
  return preimage_family(f, b);
}

// <f F>: the filter generated by the forward image.
inline Family generated_image(const FinMap& f, const Family& filter) {
  return generated_filter(filter_transport(f, filter, Direction::forward));
}

// Transport laws for one map, over every base on dom and on cod (both <= 3 points).
inline LawReport transport_laws(const FinMap& f) {
  detail::require_small(f.dom(), 3);
  detail::require_small(f.cod(), 3);
  LawReport r("transport");
  const std::size_t n = f.dom().size(), k = f.cod().size();
  const detail::MaskMap m(f);
  for (FamBits b = 0;; ++b) {
    if (detail::base_bits(b, n)) {
      const Family fb = detail::from_bits(f.dom(), b);
      const Family img = filter_transport(f, fb, Direction::forward);
      r.record_lazy("transport.forward_base", "f[[B]] is a base", is_filter_base(img), [&] { return to_string(fb); });
      if (detail::filter_bits(b, n)) {
        r.record_lazy("transport.forward_filter_base", "f[[F]] is a base and <f F> a filter",
                      is_filter(generated_filter(img)), [&] { return to_string(fb); });
      }
    }
    if (b == detail::all_bits(n)) break;
  }
  for (FamBits b = 0;; ++b) {
    if (detail::base_bits(b, k)) {
      const Family fb = detail::from_bits(f.cod(), b);
      bool meets = true;
      FamBits pre = 0;
      for (Mask x = 0; x <= m.cod_all(); ++x) {
        if (!detail::has(b, x)) continue;
        if ((x & m.im()) == 0) meets = false;
        pre |= FamBits{1} << m.preimage(x);
      }
      bool threw = false;
      try {
        filter_transport(f, fb, Direction::backward);
      } catch (const Error& e) {
        threw = e.code() == Errc::MeetingConditionFailed;
      }
      r.record_lazy("transport.backward_iff_meets", "f^-1[[B]] is a base iff every member meets Im f",
                    detail::base_bits(pre, n) == meets && threw == !meets, [&] { return to_string(fb); });
    }
    if (b == detail::all_bits(k)) break;
  }
  return r;
}

}  // namespace structa::settools
