#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/functions.hpp"
#include "structa/core/law_report.hpp"
#include "structa/core/op_table.hpp"
#include "structa/order/poset.hpp"

namespace structa::category {

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct ArrowDecl {
  Symbol name;
  Symbol src;
  Symbol tgt;
};

class FinCat;
struct ProductInfo;

// Finite category with named (possibly parallel) arrows. Objects and arrows
// are stored in canonical symbol order; the composition table holds g∘f at
// [g * |arrows| + f] and kNone where nothing is defined. The constructor only
// checks that every reference resolves; the category laws are the business of
// check_category, so broken tables can be loaded and diagnosed.
class FinCat {
 public:
  FinCat() = default;

  // comp entries are (g, f, g∘f).
  FinCat(FinSet objects, const std::vector<ArrowDecl>& arrows, const std::vector<std::pair<Symbol, Symbol>>& identities,
         const std::vector<std::array<Symbol, 3>>& comp)
      : objects_(std::move(objects)) {
    std::vector<Symbol> names;
    names.reserve(arrows.size());
    for (const auto& a : arrows) names.push_back(a.name);
    arrows_ = FinSet(std::move(names));
    const std::size_t na = arrows_.size();
    src_.assign(na, kNone);
    tgt_.assign(na, kNone);
    for (const auto& a : arrows) {
      const std::size_t i = arrows_.index_of(a.name);
      src_[i] = object_index(a.src);
      tgt_[i] = object_index(a.tgt);
    }
    ids_.assign(objects_.size(), kNone);
    for (const auto& [x, f] : identities) {
      const std::size_t xi = object_index(x);
      const std::size_t fi = arrow_index(f);
      if (ids_[xi] != kNone && ids_[xi] != fi) throw Error(Errc::InvalidStructure, "two identities for one object", x.str());
      ids_[xi] = fi;
    }
    comp_.assign(na * na, kNone);
    for (const auto& [g, f, h] : comp) {
      std::size_t& cell = comp_[arrow_index(g) * na + arrow_index(f)];
      const std::size_t hi = arrow_index(h);
      if (cell != kNone && cell != hi) {
        throw Error(Errc::InvalidStructure, "composite defined twice", "(" + g.str() + "," + f.str() + ")");
      }
      cell = hi;
    }
  }

  // Index form. `arrows` must already be sorted (a FinSet).
  FinCat(FinSet objects, FinSet arrows, std::vector<std::size_t> src, std::vector<std::size_t> tgt,
         std::vector<std::size_t> ids, std::vector<std::size_t> comp)
      : objects_(std::move(objects)),
        arrows_(std::move(arrows)),
        src_(std::move(src)),
        tgt_(std::move(tgt)),
        ids_(std::move(ids)),
        comp_(std::move(comp)) {
    const std::size_t no = objects_.size();
    const std::size_t na = arrows_.size();
    if (src_.size() != na || tgt_.size() != na || ids_.size() != no || comp_.size() != na * na) {
      throw Error(Errc::InvalidStructure, "category table sizes disagree");
    }
    for (std::size_t i = 0; i < na; ++i) {
      if (src_[i] >= no || tgt_[i] >= no) throw Error(Errc::InvalidStructure, "arrow endpoint out of range", arrows_[i].str());
    }
    for (std::size_t x : ids_) {
      if (x != kNone && x >= na) throw Error(Errc::InvalidStructure, "identity out of range");
    }
    for (std::size_t c : comp_) {
      if (c != kNone && c >= na) throw Error(Errc::InvalidStructure, "composite out of range");
    }
  }

  const FinSet& objects() const noexcept { return objects_; }
  const FinSet& arrows() const noexcept { return arrows_; }
  std::size_t num_objects() const noexcept { return objects_.size(); }
  std::size_t num_arrows() const noexcept { return arrows_.size(); }

  std::size_t src(std::size_t f) const { return src_[f]; }
  std::size_t tgt(std::size_t f) const { return tgt_[f]; }
  std::size_t identity(std::size_t x) const { return ids_[x]; }
  // g∘f, or kNone.
  std::size_t comp(std::size_t g, std::size_t f) const { return comp_[g * arrows_.size() + f]; }
  bool composable(std::size_t g, std::size_t f) const { return src_[g] == tgt_[f]; }

  const std::vector<std::size_t>& src_table() const noexcept { return src_; }
  const std::vector<std::size_t>& tgt_table() const noexcept { return tgt_; }
  const std::vector<std::size_t>& id_table() const noexcept { return ids_; }
  const std::vector<std::size_t>& comp_table() const noexcept { return comp_; }

  std::size_t object_index(const Symbol& x) const {
    auto i = objects_.find(x);
    if (!i) throw Error(Errc::CarrierMismatch, "unknown object", x.str());
    return *i;
  }
  std::size_t arrow_index(const Symbol& f) const {
    auto i = arrows_.find(f);
    if (!i) throw Error(Errc::UnknownArrow, "unknown arrow", f.str());
    return *i;
  }

  const Symbol& object_name(std::size_t x) const { return objects_[x]; }
  const Symbol& arrow_name(std::size_t f) const { return arrows_[f]; }

  // Arrows a -> b in index order.
  std::vector<std::size_t> hom(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      if (src_[f] == a && tgt_[f] == b) out.push_back(f);
    }
    return out;
  }

  // Set for categories built by product_cat (and their opposites).
  const std::shared_ptr<const ProductInfo>& product() const noexcept { return product_; }
  void set_product(std::shared_ptr<const ProductInfo> p) { product_ = std::move(p); }

  bool same_tables(const FinCat& o) const {
    return objects_ == o.objects_ && arrows_ == o.arrows_ && src_ == o.src_ && tgt_ == o.tgt_ && ids_ == o.ids_ &&
           comp_ == o.comp_;
  }
  bool operator==(const FinCat& o) const;

 private:
  FinSet objects_;
  FinSet arrows_;
  std::vector<std::size_t> src_, tgt_, ids_, comp_;
  std::shared_ptr<const ProductInfo> product_;
};

// Factor data of a product category: object/arrow i is the pair
// (left index, right index) stored at obj_pairs[i] / arr_pairs[i].
struct ProductInfo {
  FinCat left;
  FinCat right;
  std::vector<std::array<std::size_t, 2>> obj_pairs;
  std::vector<std::array<std::size_t, 2>> arr_pairs;
  std::vector<std::size_t> obj_of;  // [l * |right objects| + r]
  std::vector<std::size_t> arr_of;  // [f * |right arrows| + g]

  std::size_t object(std::size_t l, std::size_t r) const { return obj_of[l * right.num_objects() + r]; }
  std::size_t arrow(std::size_t f, std::size_t g) const { return arr_of[f * right.num_arrows() + g]; }
};

inline bool FinCat::operator==(const FinCat& o) const {
  if (!same_tables(o)) return false;
  if (!product_ || !o.product_) return !product_ && !o.product_;
  return product_->left == o.product_->left && product_->right == o.product_->right;
}

// Equality after relabelling objects and arrows by their canonical position.
inline bool same_shape(const FinCat& a, const FinCat& b) {
  return a.num_objects() == b.num_objects() && a.num_arrows() == b.num_arrows() && a.src_table() == b.src_table() &&
         a.tgt_table() == b.tgt_table() && a.id_table() == b.id_table() && a.comp_table() == b.comp_table();
}

// ---------------------------------------------------------------------------
// Law check

struct CategoryCheckOptions {
  bool require_unit = true;  // false admits associative categories without identities
};

namespace detail {

inline std::string w2(const FinCat& c, std::size_t g, std::size_t f) {
  return "(" + c.arrow_name(g).str() + "," + c.arrow_name(f).str() + ")";
}

}  // namespace detail

// Arrows f, g : x -> b are observationally equal when f∘h = g∘h for every
// h into x and i∘f = i∘g for every i out of b. Returns the classes (index
// lists, ascending) in order of their least member.
inline std::vector<std::vector<std::size_t>> observational_classes(const FinCat& c) {
  const std::size_t na = c.num_arrows();
  std::vector<std::size_t> cls(na);
  std::iota(cls.begin(), cls.end(), std::size_t{0});
  auto same = [&](std::size_t f, std::size_t g) {
    if (c.src(f) != c.src(g) || c.tgt(f) != c.tgt(g)) return false;
    for (std::size_t h = 0; h < na; ++h) {
      if (c.tgt(h) == c.src(f) && c.comp(f, h) != c.comp(g, h)) return false;
      if (c.src(h) == c.tgt(f) && c.comp(h, f) != c.comp(h, g)) return false;
    }
    return true;
  };
  for (std::size_t f = 0; f < na; ++f) {
    if (cls[f] != f) continue;
    for (std::size_t g = f + 1; g < na; ++g) {
      if (cls[g] == g && same(f, g)) cls[g] = f;
    }
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t f = 0; f < na; ++f) {
    if (cls[f] == f) out.push_back({});
  }
  std::vector<std::size_t> slot(na, kNone);
  std::size_t k = 0;
  for (std::size_t f = 0; f < na; ++f) {
    if (cls[f] == f) slot[f] = k++;
    out[slot[cls[f]]].push_back(f);
  }
  return out;
}

inline LawReport check_category(const FinCat& c, const CategoryCheckOptions& opt = {}) {
  LawReport r("category");
  const std::size_t na = c.num_arrows();
  const std::size_t no = c.num_objects();
  r.declare("category.endpoints", "a defined g∘f has src f and tgt g and requires src g = tgt f");
  r.declare("category.total", "g∘f is defined for every composable pair");
  r.declare("category.associative", "(h∘g)∘f = h∘(g∘f)");
  for (std::size_t g = 0; g < na; ++g) {
    for (std::size_t f = 0; f < na; ++f) {
      const std::size_t gf = c.comp(g, f);
      if (gf != kNone) {
        r.record_lazy("category.endpoints", "",
                      c.composable(g, f) && c.src(gf) == c.src(f) && c.tgt(gf) == c.tgt(g),
                      [&] { return detail::w2(c, g, f); });
      } else if (c.composable(g, f)) {
        r.record("category.total", "", false, detail::w2(c, g, f));
      }
      if (c.composable(g, f) && gf != kNone) r.record("category.total", "", true);
    }
  }
  for (std::size_t h = 0; h < na; ++h) {
    for (std::size_t g = 0; g < na; ++g) {
      const std::size_t hg = c.comp(h, g);
      if (!c.composable(h, g)) continue;
      for (std::size_t f = 0; f < na; ++f) {
        if (!c.composable(g, f)) continue;
        const std::size_t gf = c.comp(g, f);
        const std::size_t left = hg == kNone ? kNone : c.comp(hg, f);
        const std::size_t right = gf == kNone ? kNone : c.comp(h, gf);
        r.record_lazy("category.associative", "", left != kNone && left == right, [&] {
          return "(" + c.arrow_name(h).str() + "," + c.arrow_name(g).str() + "," + c.arrow_name(f).str() + ")";
        });
      }
    }
  }
  if (opt.require_unit) {
    r.declare("category.identity", "every object x has an arrow 1_x : x -> x");
    r.declare("category.unit_left", "1_b∘f = f for f : a -> b");
    r.declare("category.unit_right", "f∘1_a = f for f : a -> b");
    for (std::size_t x = 0; x < no; ++x) {
      const std::size_t i = c.identity(x);
      r.record_lazy("category.identity", "", i != kNone && c.src(i) == x && c.tgt(i) == x,
                    [&] { return c.object_name(x).str(); });
    }
    for (std::size_t f = 0; f < na; ++f) {
      const std::size_t ib = c.identity(c.tgt(f));
      const std::size_t ia = c.identity(c.src(f));
      r.record_lazy("category.unit_left", "", ib != kNone && c.comp(ib, f) == f, [&] { return c.arrow_name(f).str(); });
      r.record_lazy("category.unit_right", "", ia != kNone && c.comp(f, ia) == f, [&] { return c.arrow_name(f).str(); });
    }
  }
  for (const auto& cls : observational_classes(c)) {
    if (cls.size() < 2) continue;
    std::string names;
    for (std::size_t f : cls) names += (names.empty() ? "" : ",") + c.arrow_name(f).str();
    r.warn("category.observational", "distinct arrows are observationally equal: {" + names + "}");
  }
  return r;
}

inline bool is_category(const FinCat& c, const CategoryCheckOptions& opt = {}) {
  return check_category(c, opt).all_passed();
}

// ---------------------------------------------------------------------------
// Constructors

inline std::string poset_arrow_name(const Symbol& a, const Symbol& b) { return a.str() + "<=" + b.str(); }

inline FinCat from_poset(const order::Poset& p) {
  const FinSet& c = p.carrier();
  const std::size_t n = p.size();
  std::vector<ArrowDecl> arrows;
  std::vector<std::pair<Symbol, Symbol>> ids;
  std::vector<std::array<Symbol, 3>> comp;
  for (std::size_t i = 0; i < n; ++i) {
    ids.emplace_back(c[i], poset_arrow_name(c[i], c[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.leq(i, j)) continue;
      arrows.push_back({poset_arrow_name(c[i], c[j]), c[i], c[j]});
      for (std::size_t k = 0; k < n; ++k) {
        if (p.leq(j, k)) comp.push_back({poset_arrow_name(c[j], c[k]), poset_arrow_name(c[i], c[j]), poset_arrow_name(c[i], c[k])});
      }
    }
  }
  return FinCat(c, arrows, ids, comp);
}

// One object "*", arrows = elements, g∘f = g*f. The table must be a monoid.
inline FinCat from_group(const OpTable& t) {
  const FinSet& c = t.carrier();
  const std::size_t n = t.size();
  if (n == 0) throw Error(Errc::EmptyCarrier, "a monoid needs a unit");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) {
        if (t.at(t.at(a, b), d) != t.at(a, t.at(b, d))) {
          throw Error(Errc::InvalidStructure, "table is not associative",
                      "(" + c[a].str() + "," + c[b].str() + "," + c[d].str() + ")");
        }
      }
    }
  }
  std::optional<std::size_t> unit;
  for (std::size_t e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t.at(e, a) == a && t.at(a, e) == a;
    if (ok) unit = e;
  }
  if (!unit) throw Error(Errc::InvalidStructure, "table has no two-sided unit");
  std::vector<std::size_t> src(n, 0), tgt(n, 0), comp(t.cells());
  return FinCat(FinSet{"*"}, c, std::move(src), std::move(tgt), {*unit}, std::move(comp));
}

inline FinCat discrete(const FinSet& a) {
  std::vector<ArrowDecl> arrows;
  std::vector<std::pair<Symbol, Symbol>> ids;
  std::vector<std::array<Symbol, 3>> comp;
  for (const auto& x : a) {
    const Symbol id("1_" + x.str());
    arrows.push_back({id, x, x});
    ids.emplace_back(x, id);
    comp.push_back({id, id, id});
  }
  return FinCat(a, arrows, ids, comp);
}

// Same names; sources and targets swap and comp_op(f, g) = comp(g, f).
inline FinCat opposite_cat(const FinCat& c) {
  const std::size_t na = c.num_arrows();
  std::vector<std::size_t> comp(na * na);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < na; ++b) comp[a * na + b] = c.comp(b, a);
  }
  FinCat out(c.objects(), c.arrows(), c.tgt_table(), c.src_table(), c.id_table(), std::move(comp));
  if (c.product()) {
    auto p = std::make_shared<ProductInfo>(*c.product());
    p->left = opposite_cat(p->left);
    p->right = opposite_cat(p->right);
    out.set_product(std::move(p));
  }
  return out;
}

inline std::string pair_name(const Symbol& a, const Symbol& b) { return "(" + a.str() + "," + b.str() + ")"; }

// Objects "(a,b)", arrows "(f,g)", composition componentwise.
inline FinCat product_cat(const FinCat& l, const FinCat& r) {
  const std::size_t lo = l.num_objects(), ro = r.num_objects(), la = l.num_arrows(), ra = r.num_arrows();
  std::vector<Symbol> onames, anames;
  for (std::size_t i = 0; i < lo; ++i) {
    for (std::size_t j = 0; j < ro; ++j) onames.emplace_back(pair_name(l.object_name(i), r.object_name(j)));
  }
  for (std::size_t f = 0; f < la; ++f) {
    for (std::size_t g = 0; g < ra; ++g) anames.emplace_back(pair_name(l.arrow_name(f), r.arrow_name(g)));
  }
  FinSet objs(onames), arrs(anames);
  auto info = std::make_shared<ProductInfo>();
  info->left = l;
  info->right = r;
  info->obj_of.resize(lo * ro);
  info->arr_of.resize(la * ra);
  info->obj_pairs.resize(objs.size());
  info->arr_pairs.resize(arrs.size());
  for (std::size_t i = 0; i < lo; ++i) {
    for (std::size_t j = 0; j < ro; ++j) {
      const std::size_t k = objs.index_of(onames[i * ro + j]);
      info->obj_of[i * ro + j] = k;
      info->obj_pairs[k] = {i, j};
    }
  }
  for (std::size_t f = 0; f < la; ++f) {
    for (std::size_t g = 0; g < ra; ++g) {
      const std::size_t k = arrs.index_of(anames[f * ra + g]);
      info->arr_of[f * ra + g] = k;
      info->arr_pairs[k] = {f, g};
    }
  }
  const std::size_t na = arrs.size();
  std::vector<std::size_t> src(na), tgt(na), ids(objs.size(), kNone), comp(na * na, kNone);
  for (std::size_t k = 0; k < na; ++k) {
    const auto [f, g] = info->arr_pairs[k];
    src[k] = info->object(l.src(f), r.src(g));
    tgt[k] = info->object(l.tgt(f), r.tgt(g));
  }
  for (std::size_t k = 0; k < objs.size(); ++k) {
    const auto [i, j] = info->obj_pairs[k];
    if (l.identity(i) != kNone && r.identity(j) != kNone) ids[k] = info->arrow(l.identity(i), r.identity(j));
  }
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < na; ++b) {
      const auto [h, i] = info->arr_pairs[a];
      const auto [f, g] = info->arr_pairs[b];
      const std::size_t hf = l.comp(h, f), ig = r.comp(i, g);
      if (hf != kNone && ig != kNone) comp[a * na + b] = info->arrow(hf, ig);
    }
  }
  FinCat out(std::move(objs), std::move(arrs), std::move(src), std::move(tgt), std::move(ids), std::move(comp));
  out.set_product(std::move(info));
  return out;
}

// ---------------------------------------------------------------------------
// Classifying arrows

struct ArrowClass {
  bool iso = false;
  bool left_cancellable = false;   // f∘g = f∘h implies g = h
  bool right_cancellable = false;  // g∘f = h∘f implies g = h
  bool left_invertible = false;    // l∘f = 1_a for some l
  bool right_invertible = false;   // f∘r = 1_b for some r
  std::optional<std::size_t> inverse;
  LawReport laws;
};

inline ArrowClass arrow_classify(const FinCat& c, std::size_t f) {
  if (f >= c.num_arrows()) throw Error(Errc::UnknownArrow, "arrow index out of range");
  const std::size_t na = c.num_arrows();
  const std::size_t a = c.src(f), b = c.tgt(f);
  ArrowClass out;
  out.left_cancellable = true;
  out.right_cancellable = true;
  for (std::size_t g = 0; g < na; ++g) {
    for (std::size_t h = g + 1; h < na; ++h) {
      if (c.src(g) != c.src(h) || c.tgt(g) != c.tgt(h)) continue;
      if (c.tgt(g) == a && c.comp(f, g) == c.comp(f, h)) out.left_cancellable = false;
      if (c.src(g) == b && c.comp(g, f) == c.comp(h, f)) out.right_cancellable = false;
    }
  }
  const std::size_t ia = c.identity(a), ib = c.identity(b);
  std::size_t two_sided = 0;
  for (std::size_t g = 0; g < na; ++g) {
    if (c.src(g) != b || c.tgt(g) != a) continue;
    const bool l = ia != kNone && c.comp(g, f) == ia;
    const bool r = ib != kNone && c.comp(f, g) == ib;
    out.left_invertible = out.left_invertible || l;
    out.right_invertible = out.right_invertible || r;
    if (l && r) {
      ++two_sided;
      if (!out.inverse) out.inverse = g;
    }
  }
  out.iso = out.inverse.has_value();
  const std::string w = c.arrow_name(f).str();
  out.laws = LawReport("arrow");
  out.laws.record("arrow.left_inverse_cancellable", "a left invertible arrow is left cancellable",
                  !out.left_invertible || out.left_cancellable, w);
  out.laws.record("arrow.right_inverse_cancellable", "a right invertible arrow is right cancellable",
                  !out.right_invertible || out.right_cancellable, w);
  out.laws.record("arrow.inverse_unique", "an invertible arrow has exactly one inverse", two_sided <= 1, w);
  out.laws.record("arrow.iso_sides", "left and right invertible iff iso",
                  (out.left_invertible && out.right_invertible) == out.iso, w);
  return out;
}

inline ArrowClass arrow_classify(const FinCat& c, const Symbol& f) { return arrow_classify(c, c.arrow_index(f)); }

// Partition of objects into isomorphism classes. The relation is checked to
// be an equivalence and the result recorded in `laws` when given.
inline Partition isomorphism_classes(const FinCat& c, LawReport* laws = nullptr) {
  const std::size_t no = c.num_objects();
  std::vector<char> rel(no * no, 0);
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    if (arrow_classify(c, f).iso) rel[c.src(f) * no + c.tgt(f)] = 1;
  }
  if (laws) {
    for (std::size_t x = 0; x < no; ++x) {
      laws->record("iso_relation.reflexive", "x is isomorphic to x", rel[x * no + x] != 0, c.object_name(x).str());
      for (std::size_t y = 0; y < no; ++y) {
        const std::string wxy = "(" + c.object_name(x).str() + "," + c.object_name(y).str() + ")";
        laws->record("iso_relation.symmetric", "x ≅ y implies y ≅ x", !rel[x * no + y] || rel[y * no + x], wxy);
        for (std::size_t z = 0; z < no; ++z) {
          laws->record_lazy("iso_relation.transitive", "x ≅ y ≅ z implies x ≅ z",
                            !(rel[x * no + y] && rel[y * no + z]) || rel[x * no + z],
                            [&] { return "(" + c.object_name(x).str() + "," + c.object_name(y).str() + "," +
                                         c.object_name(z).str() + ")"; });
        }
      }
    }
  }
  std::vector<FinSet> blocks;
  std::vector<char> seen(no, 0);
  for (std::size_t x = 0; x < no; ++x) {
    if (seen[x]) continue;
    std::vector<Symbol> blk;
    for (std::size_t y = x; y < no; ++y) {
      if (y == x || (rel[x * no + y] && !seen[y])) {
        seen[y] = 1;
        blk.push_back(c.object_name(y));
      }
    }
    blocks.emplace_back(std::move(blk));
  }
  return Partition(c.objects(), std::move(blocks));
}

}  // namespace structa::category
