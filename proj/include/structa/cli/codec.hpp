#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "structa/category/fincat.hpp"
#include "structa/category/functor.hpp"
#include "structa/category/natural.hpp"
#include "structa/cli/document.hpp"
#include "structa/core/family.hpp"
#include "structa/core/finmap.hpp"
#include "structa/core/op_table.hpp"
#include "structa/group/action.hpp"
#include "structa/group/fingroup.hpp"
#include "structa/group/hom.hpp"
#include "structa/order/poset.hpp"
#include "structa/top/closure.hpp"
#include "structa/top/space.hpp"

namespace structa::cli {

namespace detail {

// Error text without the "[witness: ...]" tail, for re-wrapping.
inline std::string bare(const Error& e) {
  std::string m = e.what();
  if (!e.witness().empty()) {
    const std::string tail = " [witness: " + e.witness() + "]";
    if (m.size() >= tail.size() && m.compare(m.size() - tail.size(), tail.size(), tail) == 0) m.resize(m.size() - tail.size());
  }
  return m;
}

// Runs a constructor; library errors become SemanticError at `path`.
template <class Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == Errc::SemanticError || e.code() == Errc::SyntaxError) throw;
    throw Error(Errc::SemanticError, path + ": " + bare(e), e.witness());
  }
}

inline std::vector<Symbol> symbols(const Json& v) {
  std::vector<Symbol> out;
  for (const auto& s : v) out.emplace_back(s.get<std::string>());
  return out;
}

inline FinSet set_of(const Json& v) { return FinSet(symbols(v)); }

inline std::vector<std::pair<Symbol, Symbol>> pairs(const Json& v) {
  std::vector<std::pair<Symbol, Symbol>> out;
  for (const auto& p : v) out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  return out;
}

inline std::vector<std::array<Symbol, 3>> triples(const Json& v) {
  std::vector<std::array<Symbol, 3>> out;
  for (const auto& t : v) {
    out.push_back({Symbol(t[0].get<std::string>()), Symbol(t[1].get<std::string>()), Symbol(t[2].get<std::string>())});
  }
  return out;
}

inline Json sym_array(const FinSet& s) {
  Json out = Json::array();
  for (const auto& x : s) out.push_back(x.str());
  return out;
}

inline void require_kind(const Doc& d, const char* kind) {
  if (d.kind != kind) throw Error(Errc::UsageError, std::string("expected a ") + kind + " document", d.kind);
}

inline category::FinCat category_at(const Json& j, const std::string& path) {
  const FinSet objects = at_path(path + ".objects", [&] { return set_of(j["objects"]); });
  std::vector<category::ArrowDecl> arrows;
  for (const auto& a : j["arrows"]) arrows.push_back({a[0].get<std::string>(), a[1].get<std::string>(), a[2].get<std::string>()});
  return at_path(path, [&] { return category::FinCat(objects, arrows, pairs(j["identities"]), triples(j["compose"])); });
}

inline category::Functor functor_at(const Json& j, const std::string& path) {
  const auto c = category_at(j["source"], path + ".source");
  const auto d = category_at(j["target"], path + ".target");
  return at_path(path, [&] { return category::make_functor(c, d, pairs(j["objects"]), pairs(j["arrows"])); });
}

inline OpTable table_at(const Json& j, const std::string& path) {
  const FinSet carrier = set_of(j["elements"]);
  return at_path(path + ".table", [&] { return OpTable(carrier, triples(j["table"])); });
}

inline group::FinGroup group_at(const Json& j, const std::string& path) {
  const OpTable t = table_at(j, path);
  return at_path(path, [&] { return group::check_group(t); });
}

inline Family family_at(const Json& j, const char* key, const std::string& path) {
  const FinSet carrier = set_of(j["carrier"]);
  std::vector<FinSet> members;
  for (const auto& m : j[key]) members.push_back(set_of(m));
  return at_path(path + "." + key, [&] { return Family(carrier, members); });
}

}  // namespace detail

inline FinSet decode_set(const Doc& d) {
  detail::require_kind(d, "set");
  return detail::set_of(d.json["elements"]);
}

inline FinMap decode_map(const Doc& d) {
  detail::require_kind(d, "map");
  const FinSet dom = detail::set_of(d.json["domain"]);
  const FinSet cod = detail::set_of(d.json["codomain"]);
  return detail::at_path("$.pairs", [&] { return FinMap(dom, cod, detail::pairs(d.json["pairs"])); });
}

// The raw relation; order laws are checked, not assumed.
inline order::Relation decode_relation(const Doc& d) {
  detail::require_kind(d, "poset");
  const FinSet carrier = detail::set_of(d.json["elements"]);
  const auto ps = detail::pairs(d.json["leq"]);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (const auto& s : {ps[i].first, ps[i].second}) {
      if (!carrier.contains(s)) {
        throw Error(Errc::SemanticError, "$.leq[" + std::to_string(i) + "]: element not declared", s.str());
      }
    }
  }
  return order::Relation(carrier, ps);
}

inline OpTable decode_table(const Doc& d) {
  if (d.kind != "semilattice" && d.kind != "group") detail::require_kind(d, "group");
  return detail::table_at(d.json, "$");
}

inline category::FinCat decode_category(const Doc& d) {
  detail::require_kind(d, "category");
  return detail::category_at(d.json, "$");
}

inline category::Functor decode_functor(const Doc& d) {
  detail::require_kind(d, "functor");
  return detail::functor_at(d.json, "$");
}

inline category::NatTrans decode_nattrans(const Doc& d) {
  detail::require_kind(d, "nattrans");
  const auto f = detail::functor_at(d.json["from"], "$.from");
  const auto g = detail::functor_at(d.json["to"], "$.to");
  return detail::at_path("$.components", [&] { return category::make_nat(f, g, detail::pairs(d.json["components"])); });
}

// Groups nested in hom and action documents must be groups.
inline group::FinGroup decode_group(const Doc& d) {
  detail::require_kind(d, "group");
  return detail::group_at(d.json, "$");
}

struct HomDoc {
  group::FinGroup src, tgt;
  FinMap map;
};

inline HomDoc decode_hom(const Doc& d) {
  detail::require_kind(d, "hom");
  auto g = detail::group_at(d.json["source"], "$.source");
  auto h = detail::group_at(d.json["target"], "$.target");
  FinMap f = detail::at_path("$.pairs", [&] { return FinMap(g.carrier(), h.carrier(), detail::pairs(d.json["pairs"])); });
  return {std::move(g), std::move(h), std::move(f)};
}

inline group::GroupAction decode_action(const Doc& d) {
  detail::require_kind(d, "action");
  const auto g = detail::group_at(d.json["group"], "$.group");
  const FinSet x = detail::set_of(d.json["points"]);
  std::vector<std::vector<std::pair<Symbol, Symbol>>> rows(g.size());
  const auto cells = detail::triples(d.json["act"]);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& [a, p, q] = cells[i];
    if (!g.carrier().contains(a)) throw Error(Errc::SemanticError, "$.act[" + std::to_string(i) + "]: not a group element", a.str());
    rows[g.index(a)].emplace_back(p, q);
  }
  std::vector<FinMap> maps;
  for (std::size_t a = 0; a < g.size(); ++a) {
    maps.push_back(detail::at_path("$.act", [&] { return FinMap(x, x, rows[a]); }));
  }
  // action laws are checked, not assumed
  return group::GroupAction{g, x, std::move(maps)};
}

// family, filterbase and base documents share a shape.
inline Family decode_family(const Doc& d) {
  if (d.kind != "filterbase" && d.kind != "base") detail::require_kind(d, "family");
  return detail::family_at(d.json, "members", "$");
}

inline top::ClosureOp decode_closure(const Doc& d) {
  detail::require_kind(d, "closure");
  const FinSet carrier = detail::set_of(d.json["carrier"]);
  std::vector<std::pair<FinSet, FinSet>> rows;
  for (std::size_t i = 0; i < d.json["table"].size(); ++i) {
    const auto& row = d.json["table"][i];
    const FinSet a = detail::set_of(row[0]), c = detail::set_of(row[1]);
    for (const auto& s : {a, c}) {
      if (!s.subset_of(carrier)) {
        throw Error(Errc::SemanticError, "$.table[" + std::to_string(i) + "]: set outside the carrier", to_string(s));
      }
    }
    rows.emplace_back(a, c);
  }
  return detail::at_path("$.table", [&] { return top::ClosureOp::from_pairs(carrier, rows); });
}

// The open family is decoded as is; the topology axioms are checked as laws.
inline top::Topology decode_topology(const Doc& d) {
  detail::require_kind(d, "topology");
  const Family o = detail::family_at(d.json, "open", "$");
  return detail::at_path("$", [&] {
    settools::detail::require_small(o.carrier());
    return top::Topology{o.carrier(), o};
  });
}

inline std::int64_t decode_bound(const Doc& d) {
  detail::require_kind(d, "rational-window");
  const auto b = d.json["bound"].get<unsigned long long>();
  if (b < 1 || b > 64) throw Error(Errc::SemanticError, "$.bound: expected 1 <= bound <= 64", std::to_string(b));
  return static_cast<std::int64_t>(b);
}

// --- encoders --------------------------------------------------------------

inline Doc make_doc(Json j) {
  std::string kind = j["kind"].get<std::string>();
  return Doc{std::move(kind), std::move(j)};
}

inline Json category_json(const category::FinCat& c) {
  Json j = Json::object();
  j["kind"] = "category";
  j["objects"] = detail::sym_array(c.objects());
  Json arrows = Json::array(), ids = Json::array(), comp = Json::array();
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    arrows.push_back({c.arrow_name(f).str(), c.object_name(c.src(f)).str(), c.object_name(c.tgt(f)).str()});
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    if (c.identity(x) != category::kNone) ids.push_back({c.object_name(x).str(), c.arrow_name(c.identity(x)).str()});
  }
  for (std::size_t g = 0; g < c.num_arrows(); ++g) {
    for (std::size_t f = 0; f < c.num_arrows(); ++f) {
      const std::size_t gf = c.comp(g, f);
      if (gf != category::kNone) comp.push_back({c.arrow_name(g).str(), c.arrow_name(f).str(), c.arrow_name(gf).str()});
    }
  }
  j["arrows"] = std::move(arrows);
  j["identities"] = std::move(ids);
  j["compose"] = std::move(comp);
  return j;
}

inline Doc encode_category(const category::FinCat& c) { return make_doc(category_json(c)); }

inline Json table_json(const char* kind, const OpTable& t) {
  Json j = Json::object();
  j["kind"] = kind;
  j["elements"] = detail::sym_array(t.carrier());
  Json cells = Json::array();
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      cells.push_back({t.carrier()[a].str(), t.carrier()[b].str(), t.carrier()[t.at(a, b)].str()});
    }
  }
  j["table"] = std::move(cells);
  return j;
}

inline Doc encode_group(const group::FinGroup& g) { return make_doc(table_json("group", g.table())); }
inline Doc encode_semilattice(const OpTable& t) { return make_doc(table_json("semilattice", t)); }

inline Doc encode_poset(const order::Poset& p) {
  Json j = Json::object();
  j["kind"] = "poset";
  j["elements"] = detail::sym_array(p.carrier());
  Json leq = Json::array();
  for (const auto& [a, b] : p.relation().pairs()) leq.push_back({a.str(), b.str()});
  j["leq"] = std::move(leq);
  return make_doc(std::move(j));
}

inline Doc encode_family(const char* kind, const Family& f, const char* key = "members") {
  Json j = Json::object();
  j["kind"] = kind;
  j["carrier"] = detail::sym_array(f.carrier());
  Json members = Json::array();
  for (const auto& m : f) members.push_back(detail::sym_array(m));
  j[key] = std::move(members);
  return make_doc(std::move(j));
}

inline Doc encode_topology(const top::Topology& t) { return encode_family("topology", t.open_sets, "open"); }

inline Doc encode_closure(const top::ClosureOp& cl) {
  Json j = Json::object();
  j["kind"] = "closure";
  j["carrier"] = detail::sym_array(cl.carrier());
  Json rows = Json::array();
  for (Mask a = 0; a < cl.table().size(); ++a) {
    rows.push_back(Json::array({detail::sym_array(FinSet::from_mask(cl.carrier(), a)), detail::sym_array(FinSet::from_mask(cl.carrier(), cl[a]))}));
  }
  j["table"] = std::move(rows);
  return make_doc(std::move(j));
}

}  // namespace structa::cli
