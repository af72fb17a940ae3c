#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/family.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/law_report.hpp"
#include "structa/core/op_table.hpp"

namespace structa {

// ---------------------------------------------------------------------------
// Composition

enum class ComposeMode {
  strict,   // f.cod must equal g.dom
  general,  // domain shrinks to the points whose image lands in g.dom
};

// g after f.
inline FinMap compose(const FinMap& g, const FinMap& f, ComposeMode mode = ComposeMode::strict) {
  if (mode == ComposeMode::strict) {
    if (f.cod() != g.dom()) {
      throw Error(Errc::CompositionMismatch, "codomain of first map differs from domain of second",
                  to_string(f.cod()) + " vs " + to_string(g.dom()));
    }
    std::vector<std::size_t> values;
    values.reserve(f.dom().size());
    for (std::size_t i = 0; i < f.dom().size(); ++i) values.push_back(g.at(f.at(i)));
    return FinMap(f.dom(), g.cod(), std::move(values));
  }
  const FinSet reach = f.image().intersect(g.dom());
  const FinSet dom = f.preimage(reach);
  std::vector<std::size_t> values;
  values.reserve(dom.size());
  for (const auto& x : dom) values.push_back(g.cod().index_of(g(f(x))));
  return FinMap(dom, g.cod(), std::move(values));
}

// ---------------------------------------------------------------------------
// Classification, fibers

struct Classification {
  bool monic = false;
  bool onto = false;
  bool bijective = false;
  bool operator==(const Classification&) const = default;
};

inline std::vector<std::size_t> fiber_sizes(const FinMap& f) {
  std::vector<std::size_t> counts(f.cod().size(), 0);
  for (std::size_t v : f.values()) ++counts[v];
  return counts;
}

inline Classification classify(const FinMap& f) {
  Classification c{true, true, false};
  for (std::size_t n : fiber_sizes(f)) {
    if (n > 1) c.monic = false;
    if (n == 0) c.onto = false;
  }
  c.bijective = c.monic && c.onto;
  return c;
}

inline FinSet fiber(const FinMap& f, const Symbol& z) {
  if (!f.cod().contains(z)) throw Error(Errc::CarrierMismatch, "fiber point outside codomain", z.str());
  return f.preimage(FinSet{z});
}

struct Partition {
  FinSet carrier;
  std::vector<FinSet> blocks;

  Partition() = default;
  Partition(FinSet carrier_in, std::vector<FinSet> blocks_in)
      : carrier(std::move(carrier_in)), blocks(std::move(blocks_in)) {
    std::sort(blocks.begin(), blocks.end());
    FinSet seen;
    for (const auto& b : blocks) {
      if (b.empty()) throw Error(Errc::InvalidStructure, "empty partition block");
      if (!b.intersect(seen).empty()) throw Error(Errc::InvalidStructure, "overlapping blocks", to_string(b));
      seen = seen.unite(b);
    }
    if (seen != carrier) throw Error(Errc::InvalidStructure, "blocks do not cover the carrier");
  }

  // Block containing x.
  const FinSet& block_of(const Symbol& x) const {
    for (const auto& b : blocks) {
      if (b.contains(x)) return b;
    }
    throw Error(Errc::CarrierMismatch, "point outside partition carrier", x.str());
  }

  bool operator==(const Partition&) const = default;
};

// Blocks are the nonempty fibers.
inline Partition fiber_partition(const FinMap& f) {
  std::vector<FinSet> blocks;
  for (const auto& z : f.image()) blocks.push_back(f.preimage(FinSet{z}));
  return Partition(f.dom(), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Selection and inverses

enum class SelectionRule { least, greatest };

// Choice function on a family of nonempty sets. The domain of the result
// names each member by its rendered form, e.g. "{a,b}".
inline FinMap select(const Family& family, SelectionRule rule = SelectionRule::least) {
  std::vector<std::pair<Symbol, Symbol>> assign;
  std::vector<Symbol> names;
  for (const auto& member : family) {
    if (member.empty()) throw Error(Errc::EmptyMember, "selection from an empty member");
    Symbol name(to_string(member));
    names.push_back(name);
    assign.emplace_back(name, rule == SelectionRule::least ? member[0] : member[member.size() - 1]);
  }
  return FinMap(FinSet(std::move(names)), family.carrier(), assign);
}

// l with l . f = id. Points outside the image go to the least domain element.
inline FinMap left_inverse(const FinMap& f) {
  if (!classify(f).monic) throw Error(Errc::NotMonic, "left inverse requires a monic map");
  if (f.dom().empty() && !f.cod().empty()) {
    throw Error(Errc::EmptyCarrier, "no map from a nonempty codomain into an empty domain");
  }
  std::vector<std::size_t> values(f.cod().size(), 0);
  for (std::size_t i = 0; i < f.dom().size(); ++i) values[f.at(i)] = i;
  return FinMap(f.cod(), f.dom(), std::move(values));
}

// r with f . r = id, picking from each fiber through `select`.
inline FinMap right_inverse(const FinMap& f, SelectionRule rule = SelectionRule::least) {
  if (!classify(f).onto) throw Error(Errc::NotOnto, "right inverse requires an onto map");
  std::vector<FinSet> fibers;
  for (const auto& y : f.cod()) fibers.push_back(fiber(f, y));
  const FinMap sel = select(Family(f.dom(), fibers), rule);
  std::vector<std::size_t> values;
  values.reserve(f.cod().size());
  for (const auto& y : f.cod()) values.push_back(f.dom().index_of(sel(Symbol(to_string(fiber(f, y))))));
  return FinMap(f.cod(), f.dom(), std::move(values));
}

inline FinMap inverse(const FinMap& f) {
  if (!classify(f).bijective) throw Error(Errc::NotBijective, "inverse requires a bijection");
  return left_inverse(f);
}

// ---------------------------------------------------------------------------
// Image calculus

// Evaluates the image/preimage law set for f on the given arguments. A and
// X members may live over dom or cod; laws whose arguments do not fit are
// skipped. Throws CarrierMismatch if an argument fits neither carrier.
inline LawReport image_calculus(const FinMap& f, const FinSet& a, const FinSet& b, const Family& x) {
  if (!a.subset_of(f.dom())) throw Error(Errc::CarrierMismatch, "A is not a subset of the domain", to_string(a));
  if (!b.subset_of(f.cod())) throw Error(Errc::CarrierMismatch, "B is not a subset of the codomain", to_string(b));
  const bool over_dom = x.carrier() == f.dom();
  const bool over_cod = x.carrier() == f.cod();
  if (!over_dom && !over_cod) throw Error(Errc::CarrierMismatch, "family carrier is neither domain nor codomain");

  const Classification cls = classify(f);
  LawReport r("image_calculus");
  auto wit = [&](const std::string& s) { return "f=" + to_string(f) + " " + s; };

  const FinSet fa = f.image(a);
  const FinSet pb = f.preimage(b);
  r.record_lazy("image.adjunction", "f[A] <= B iff A <= f^-1[B]", fa.subset_of(b) == a.subset_of(pb),
                [&] { return wit("A=" + to_string(a) + " B=" + to_string(b)); });

  const FinSet pfa = f.preimage(fa);
  r.record_lazy("image.inflate", "A <= f^-1[f[A]]", a.subset_of(pfa), [&] { return wit("A=" + to_string(a)); });
  r.record_lazy("image.inflate_monic", "f monic implies f^-1[f[A]] = A", !cls.monic || pfa == a,
                [&] { return wit("A=" + to_string(a)); });

  const FinSet fpb = f.image(pb);
  r.record_lazy("image.deflate", "f[f^-1[B]] <= B", fpb.subset_of(b), [&] { return wit("B=" + to_string(b)); });
  r.record_lazy("image.deflate_onto", "f onto implies f[f^-1[B]] = B", !cls.onto || fpb == b,
                [&] { return wit("B=" + to_string(b)); });

  const FinMap fa_map = f.restrict_to(a);
  r.record_lazy("image.restriction", "(f|A)^-1[B] = A & f^-1[B]", fa_map.preimage(b) == a.intersect(pb),
                [&] { return wit("A=" + to_string(a) + " B=" + to_string(b)); });

  if (over_dom) {
    FinSet union_images;
    for (const auto& m : x) union_images = union_images.unite(f.image(m));
    r.record_lazy("image.union", "f[U X] = U f[X]", f.image(x.union_all()) == union_images,
                  [&] { return wit("X=" + to_string(x)); });
    if (!x.empty()) {
      FinSet meet_images = f.cod();
      for (const auto& m : x) meet_images = meet_images.intersect(f.image(m));
      const FinSet image_meet = f.image(x.intersection_all());
      r.record_lazy("image.intersection", "f[n X] <= n f[X]", image_meet.subset_of(meet_images),
                    [&] { return wit("X=" + to_string(x)); });
      r.record_lazy("image.intersection_monic", "f monic implies f[n X] = n f[X]",
                    !cls.monic || image_meet == meet_images, [&] { return wit("X=" + to_string(x)); });
    }
  }
  if (over_cod) {
    FinSet union_pre;
    FinSet meet_pre = f.dom();
    for (const auto& m : x) {
      union_pre = union_pre.unite(f.preimage(m));
      meet_pre = meet_pre.intersect(f.preimage(m));
    }
    r.record_lazy("preimage.union", "f^-1[U Y] = U f^-1[Y]", f.preimage(x.union_all()) == union_pre,
                  [&] { return wit("Y=" + to_string(x)); });
    r.record_lazy("preimage.intersection", "f^-1[n Y] = n f^-1[Y]", f.preimage(x.intersection_all()) == meet_pre,
                  [&] { return wit("Y=" + to_string(x)); });
    for (const auto& m : x) {
      r.record_lazy("preimage.difference", "f^-1[B - C] = f^-1[B] - f^-1[C]",
                    f.preimage(b.minus(m)) == pb.minus(f.preimage(m)),
                    [&] { return wit("B=" + to_string(b) + " C=" + to_string(m)); });
    }
  }
  return r;
}

// For monic f: f[A] = B iff A is the union of the fibers over B, checked for
// every A <= dom and every B <= Im f (for B outside the image no A has
// f[A] = B, so the equivalence is only meaningful inside it). Non-monic maps
// produce a report with no instances.
inline LawReport fiber_union_law(const FinMap& f) {
  LawReport r("fiber_union");
  r.declare("fiber.union_of_fibers", "f monic, B <= Im f: f[A] = B iff A = U{f^-1{z} : z in B}");
  if (!classify(f).monic) return r;
  const auto doms = f.dom().subsets();
  const auto cods = f.image().subsets();
  for (const auto& b : cods) {
    FinSet fibers_union;
    for (const auto& z : b) fibers_union = fibers_union.unite(fiber(f, z));
    for (const auto& a : doms) {
      r.record_lazy("fiber.union_of_fibers", "", (f.image(a) == b) == (a == fibers_union), [&] {
        return "f=" + to_string(f) + " A=" + to_string(a) + " B=" + to_string(b);
      });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Decomposition f = incl . bij . proj

struct Decomposition {
  FinMap projection;  // dom -> blocks
  FinMap bijection;   // blocks -> Im f
  FinMap inclusion;   // Im f -> cod

  FinMap recompose() const { return compose(inclusion, compose(bijection, projection)); }
};

inline Decomposition decompose(const FinMap& f) {
  const Partition part = fiber_partition(f);
  std::vector<Symbol> names;
  for (const auto& b : part.blocks) names.emplace_back(to_string(b));
  const FinSet blocks(names);
  const FinSet image = f.image();

  std::vector<std::pair<Symbol, Symbol>> proj;
  for (const auto& x : f.dom()) proj.emplace_back(x, Symbol(to_string(part.block_of(x))));
  std::vector<std::pair<Symbol, Symbol>> bij;
  for (const auto& b : part.blocks) bij.emplace_back(Symbol(to_string(b)), f(b[0]));

  return Decomposition{FinMap(f.dom(), blocks, proj), FinMap(blocks, image, bij), FinMap::inclusion(image, f.cod())};
}

// ---------------------------------------------------------------------------
// Finite operators

struct FoldResult {
  Symbol result;
  std::vector<Symbol> partials;  // partials[i] = x_1 op ... op x_{i+1}
};

inline FoldResult fold(const OpTable& op, const std::vector<Symbol>& seq) {
  if (seq.empty()) throw Error(Errc::EmptyFold, "fold of an empty sequence");
  FoldResult out;
  std::size_t acc = op.carrier().index_of(seq.front());
  out.partials.push_back(seq.front());
  for (std::size_t i = 1; i < seq.size(); ++i) {
    acc = op.at(acc, op.carrier().index_of(seq[i]));
    out.partials.push_back(op.carrier()[acc]);
  }
  out.result = op.carrier()[acc];
  return out;
}

// ---------------------------------------------------------------------------
// Endofunction dynamics

struct EndoReport {
  FinSet invariant_points;
  bool once_effective = false;
  std::optional<Symbol> stabilizes_at;
  std::optional<std::pair<Symbol, std::size_t>> nilpotent_at;  // (value, least n >= 1 with f^n constant)
  std::vector<FinMap> iterates;                                 // f, f^2, ..., f^max_steps
};

inline EndoReport endo_analyze(const FinMap& f, std::optional<std::size_t> max_steps = std::nullopt) {
  if (f.dom() != f.cod()) throw Error(Errc::CarrierMismatch, "endofunction needs dom = cod");
  const std::size_t n = f.dom().size();
  const std::size_t steps = std::max<std::size_t>(1, max_steps.value_or(n));

  EndoReport rep;
  std::vector<Symbol> fixed;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.at(i) == i) fixed.push_back(f.dom()[i]);
  }
  rep.invariant_points = FinSet(fixed);
  rep.once_effective = f.image().subset_of(rep.invariant_points);

  rep.iterates.push_back(f);
  for (std::size_t k = 1; k < steps; ++k) rep.iterates.push_back(compose(f, rep.iterates.back()));

  for (std::size_t k = 0; k < rep.iterates.size() && n > 0; ++k) {
    const auto& vals = rep.iterates[k].values();
    if (std::all_of(vals.begin(), vals.end(), [&](std::size_t v) { return v == vals.front(); })) {
      rep.nilpotent_at = std::make_pair(f.dom()[vals.front()], k + 1);
      break;
    }
  }

  for (const auto& a : rep.invariant_points) {
    const std::size_t ai = f.dom().index_of(a);
    bool all_reach = true;
    for (std::size_t i = 0; i < n && all_reach; ++i) {
      std::size_t cur = i;
      for (std::size_t k = 0; k < steps && cur != ai; ++k) cur = f.at(cur);
      all_reach = cur == ai;
    }
    if (all_reach) {
      rep.stabilizes_at = a;
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Natural pair: G . sa = sb . F

inline LawReport natural_pair_check(const FinMap& big_f, const FinMap& big_g, const FinMap& sa, const FinMap& sb) {
  if (sa.dom() != big_f.dom() || sa.cod() != big_g.dom()) {
    throw Error(Errc::CarrierMismatch, "sa must map dom F to dom G");
  }
  if (sb.dom() != big_f.cod() || sb.cod() != big_g.cod()) {
    throw Error(Errc::CarrierMismatch, "sb must map cod F to cod G");
  }
  if (!classify(sa).onto) throw Error(Errc::NotOnto, "sa must be onto");
  LawReport r("natural_pair");
  r.declare("natural_pair.square", "G(sa(x)) = sb(F(x))");
  for (const auto& x : big_f.dom()) {
    r.record_lazy("natural_pair.square", "G(sa(x)) = sb(F(x))", big_g(sa(x)) == sb(big_f(x)),
                  [&] { return "x=" + x.str(); });
  }
  return r;
}

}  // namespace structa
