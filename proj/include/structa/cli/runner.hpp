#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "structa/category/hom.hpp"
#include "structa/cli/codec.hpp"
#include "structa/core/functions.hpp"
#include "structa/numbers/rationals.hpp"
#include "structa/order/lattice.hpp"
#include "structa/settools/filter.hpp"
#include "structa/settools/set_laws.hpp"
#include "structa/settools/sigma.hpp"

namespace structa::cli {

enum Exit { kPass = 0, kLawFailure = 1, kUsage = 2 };

struct CheckOptions {
  std::size_t max_size = 4;  // largest carrier scanned exhaustively
};

namespace detail {

inline void require_size(std::size_t n, const CheckOptions& opt, const char* what) {
  if (n > opt.max_size) {
    throw Error(Errc::TooLarge, std::string(what) + " exceeds --max-size " + std::to_string(opt.max_size),
                std::to_string(n));
  }
}

inline LawReport check_set(const Doc& d, const CheckOptions& opt) {
  const FinSet u = decode_set(d);
  require_size(u.size(), opt, "set");
  const auto subs = u.subsets();
  LawReport r("set");
  for (const auto& a : subs)
    for (const auto& b : subs)
      for (const auto& c : subs) r.merge(settools::set_law_suite(a, b, c, Family(u, {a, b, c})));
  return r;
}

inline LawReport check_map(const Doc& d, const CheckOptions& opt) {
  const FinMap f = decode_map(d);
  require_size(std::max(f.dom().size(), f.cod().size()), opt, "map carrier");
  LawReport r("map");
  for (const auto& a : f.dom().subsets()) {
    for (const auto& b : f.cod().subsets()) {
      r.merge(image_calculus(f, a, b, Family(f.dom(), {a, f.dom().minus(a)})));
      r.merge(image_calculus(f, a, b, Family(f.cod(), {b, f.cod().minus(b)})));
    }
  }
  r.merge(fiber_union_law(f));
  r.record("map.decompose_recompose", "f = inclusion . bijection . projection", decompose(f).recompose() == f, to_string(f));
  return r;
}

inline LawReport check_poset(const Doc& d) {
  const order::Relation rel = decode_relation(d);
  const order::OrderCheck oc = order::check_order(rel);
  // totality is a property of chains, not a law of partial orders
  LawReport r = oc.report.without("order.total");
  if (!oc.partial) return r;
  const order::Poset p(rel);
  try {
    r.merge(order::lattice_laws(order::lattice_from_poset(p)));
  } catch (const Error& e) {
    if (e.code() != Errc::NotALattice) throw;
    r.warn("poset.not_a_lattice", "no lattice laws checked: " + e.witness() + " lacks a bound");
  }
  return r;
}

inline LawReport check_nattrans(const Doc& d) {
  const category::NatTrans t = decode_nattrans(d);
  LawReport r = category::bridge_check(t).report;
  r.merge(category::check_functor(t.F), "from");
  r.merge(category::check_functor(t.G), "to");
  return r;
}

inline LawReport check_filterbase(const Doc& d) {
  const Family b = decode_family(d);
  LawReport r("filterbase");
  try {
    const settools::FilterOps ops = settools::filter_ops(b);
    r.record("filterbase.is_base", "B is nonempty, has no empty member, and is downward directed", ops.base, to_string(b));
    r.merge(ops.laws);
  } catch (const Error& e) {
    if (e.code() != Errc::EmptyMemberInBase) throw;
    r.record("filterbase.is_base", "B is nonempty, has no empty member, and is downward directed", false, e.witness());
  }
  return r;
}

inline LawReport check_base(const Doc& d) {
  const Family b = decode_family(d);
  LawReport r("base");
  try {
    const top::BaseOps ops = top::base_ops(b.carrier(), b);
    r.record("base.covers", "the members of B cover the carrier", true);
    r.merge(ops.criterion);
  } catch (const Error& e) {
    if (e.code() != Errc::NotCovering) throw;
    r.record("base.covers", "the members of B cover the carrier", false, e.witness());
  }
  return r;
}

inline LawReport check_family(const Doc& d) {
  const Family x = decode_family(d);
  if (x.size() > 8) throw Error(Errc::TooLarge, "family check scans member triples; at most 8 members", std::to_string(x.size()));
  LawReport r("family");
  for (const auto& a : x)
    for (const auto& b : x)
      for (const auto& c : x) r.merge(settools::set_law_suite(a, b, c, x));
  if (x.empty()) r.declare("set.difference", "no member triples to check");
  return r;
}

}  // namespace detail

// Routes a document to the law suite of its kind.
inline LawReport run_check(const Doc& d, const CheckOptions& opt = {}) {
  const std::string& k = d.kind;
  if (k == "set") return detail::check_set(d, opt);
  if (k == "map") return detail::check_map(d, opt);
  if (k == "poset") return detail::check_poset(d);
  if (k == "semilattice") return order::semilattice_check(decode_table(d)).report;
  if (k == "category") return category::check_category(decode_category(d));
  if (k == "functor") {
    const category::Functor f = decode_functor(d);
    LawReport r = category::check_functor(f);
    r.merge(category::check_category(f.src), "source");
    r.merge(category::check_category(f.tgt), "target");
    return r;
  }
  if (k == "nattrans") return detail::check_nattrans(d);
  if (k == "group") return group::group_laws(decode_table(d));
  if (k == "hom") {
    const HomDoc h = decode_hom(d);
    return group::hom_laws(h.src, h.tgt, h.map);
  }
  if (k == "action") return group::action_check(decode_action(d));
  if (k == "family") return detail::check_family(d);
  if (k == "filterbase") return detail::check_filterbase(d);
  if (k == "closure") return top::closure_check(decode_closure(d));
  if (k == "topology") return top::topology_laws(decode_topology(d));
  if (k == "base") return detail::check_base(d);
  if (k == "rational-window") {
    const std::int64_t n = decode_bound(d);
    LawReport r = numbers::rat_laws(n);
    r.merge(numbers::embed_laws(n));
    r.merge(numbers::dual_order_checks(n));
    return r;
  }
  throw Error(Errc::UsageError, "no checker for kind", k);
}

struct DeriveOp {
  const char* name;
  const char* input;
  const char* args;
  const char* output;
};

inline const std::vector<DeriveOp>& derive_ops() {
  static const std::vector<DeriveOp> ops = {
      {"canonical", "any", "", "the same document in canonical form"},
      {"opposite", "category", "", "the opposite category"},
      {"yoneda", "category", "", "the image of the Yoneda embedding (hom functors and their transformations)"},
      {"quotient", "group", "<generator>...", "G/N for N generated by the given elements (must be normal)"},
      {"abelianization", "group", "", "G/[G,G]"},
      {"commutant", "group", "", "[G,G] as a group"},
      {"center", "group", "", "Z(G) as a group"},
      {"kernel", "hom", "", "ker f as a group"},
      {"image", "hom", "", "Im f as a group"},
      {"lattice", "poset", "[join|meet]", "the join (or meet) semilattice table"},
      {"order", "semilattice", "[join|meet]", "the induced partial order"},
      {"generated-filter", "filterbase", "", "the filter generated by the base"},
      {"sigma", "family", "", "the generated sigma-algebra"},
      {"topology-from-base", "base", "", "the smallest topology containing the members"},
      {"closure", "topology", "", "the closure operator table"},
      {"closed-sets", "topology", "", "the closed sets as a family"},
  };
  return ops;
}

namespace detail {

inline order::Orientation orientation(const std::vector<std::string>& args) {
  if (args.empty() || args[0] == "join") return order::Orientation::join;
  if (args[0] == "meet") return order::Orientation::meet;
  throw Error(Errc::UsageError, "expected join or meet", args[0]);
}

// Objects L(x); arrows y(f) : L(a) -> L(b) for f : b -> a, composed as
// transformations and matched back to daggers.
inline category::FinCat yoneda_image(const category::FinCat& c) {
  std::vector<category::SetNat> d;
  for (std::size_t f = 0; f < c.num_arrows(); ++f) d.push_back(category::dagger(c, f));
  std::vector<Symbol> objs;
  for (const auto& x : c.objects()) objs.emplace_back("L(" + x.str() + ")");
  std::vector<category::ArrowDecl> arrows;
  std::vector<std::pair<Symbol, Symbol>> ids;
  std::vector<std::array<Symbol, 3>> comp;
  auto y = [&](std::size_t f) { return Symbol("y(" + c.arrow_name(f).str() + ")"); };
  auto l = [&](std::size_t x) { return Symbol("L(" + c.object_name(x).str() + ")"); };
  for (std::size_t f = 0; f < c.num_arrows(); ++f) arrows.push_back({y(f), l(c.tgt(f)), l(c.src(f))});
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    if (c.identity(x) != category::kNone) ids.emplace_back(l(x), y(c.identity(x)));
  }
  for (std::size_t f = 0; f < c.num_arrows(); ++f) {
    for (std::size_t g = 0; g < c.num_arrows(); ++g) {
      if (!(d[f].G == d[g].F)) continue;
      const category::SetNat gf = category::set_vcompose(d[g], d[f]);
      auto it = std::find(d.begin(), d.end(), gf);
      if (it == d.end()) {
        throw Error(Errc::InvalidStructure, "composite transformation is not a dagger", "(" + y(g).str() + "," + y(f).str() + ")");
      }
      comp.push_back({y(g), y(f), y(static_cast<std::size_t>(it - d.begin()))});
    }
  }
  return category::FinCat(FinSet(objs), arrows, ids, comp);
}

inline std::vector<std::size_t> generator_indices(const group::FinGroup& g, const std::vector<std::string>& args) {
  std::vector<std::size_t> out;
  for (const auto& a : args) {
    if (!g.carrier().contains(Symbol(a))) throw Error(Errc::UsageError, "generator is not a group element", a);
    out.push_back(g.index(Symbol(a)));
  }
  return out;
}

}  // namespace detail

inline Doc run_derive(const std::string& op, const Doc& d, const std::vector<std::string>& args = {}) {
  auto it = std::find_if(derive_ops().begin(), derive_ops().end(), [&](const DeriveOp& o) { return op == o.name; });
  if (it == derive_ops().end()) throw Error(Errc::UsageError, "unknown derive operation", op);
  if (std::string(it->input) != "any" && d.kind != it->input) {
    throw Error(Errc::UsageError, op + " needs a " + it->input + " document", d.kind);
  }
  const bool takes_args = *it->args != '\0';
  if (!takes_args && !args.empty()) throw Error(Errc::UsageError, op + " takes no arguments", args[0]);
  if (op == "canonical") return d;
  if (op == "opposite") return encode_category(category::opposite_cat(decode_category(d)));
  if (op == "yoneda") {
    const category::FinCat c = decode_category(d);
    const LawReport r = category::check_category(c);
    if (!r.all_passed()) {
      for (const auto& c : r.checks())
        if (!c.passed) throw Error(Errc::LawFailure, "input is not a category: " + c.id, *c.witness);
    }
    return encode_category(detail::yoneda_image(c));
  }
  if (op == "quotient") {
    const group::FinGroup g = decode_group(d);
    if (args.empty()) throw Error(Errc::UsageError, "quotient needs at least one generator");
    return encode_group(group::quotient(g, group::generated(g, detail::generator_indices(g, args))));
  }
  if (op == "abelianization") {
    const group::FinGroup g = decode_group(d);
    return encode_group(group::quotient(g, group::commutant(g)));
  }
  if (op == "commutant" || op == "center") {
    const group::FinGroup g = decode_group(d);
    return encode_group(group::as_group(g, op == "center" ? group::center(g) : group::commutant(g)));
  }
  if (op == "kernel" || op == "image") {
    const HomDoc h = decode_hom(d);
    const group::GroupHom f = group::hom_check(h.src, h.tgt, h.map);
    return encode_group(op == "kernel" ? group::as_group(f.src, group::kernel(f)) : group::as_group(f.tgt, group::image(f)));
  }
  if (op == "lattice") {
    if (args.size() > 1) throw Error(Errc::UsageError, "lattice takes one argument", args[1]);
    const order::LatticeTables l = order::lattice_from_poset(order::Poset(decode_relation(d)));
    return encode_semilattice(detail::orientation(args) == order::Orientation::join ? l.join : l.meet);
  }
  if (op == "order") {
    if (args.size() > 1) throw Error(Errc::UsageError, "order takes one argument", args[1]);
    return encode_poset(order::order_from_semilattice(decode_table(d), detail::orientation(args)));
  }
  if (op == "generated-filter") return encode_family("filterbase", settools::generated_filter(decode_family(d)));
  if (op == "sigma") {
    const Family b = decode_family(d);
    return encode_family("family", settools::sigma_generate(b.carrier(), b, settools::kMaxBitsCarrier));
  }
  if (op == "topology-from-base") {
    const Family b = decode_family(d);
    return encode_topology(top::base_ops(b.carrier(), b).topology);
  }
  const top::Topology raw = decode_topology(d);
  const top::Topology t = top::make_topology(raw.carrier, raw.open_sets);
  if (op == "closure") return encode_closure(top::closure_from_closed(t.carrier, top::open_duality(t)));
  return encode_family("family", top::open_duality(t));
}

// --- reports -----------------------------------------------------------------

inline int exit_code(const LawReport& r) { return r.all_passed() ? kPass : kLawFailure; }

inline std::string render_text(const LawReport& r, const std::string& title) {
  const auto checks = r.checks();
  std::size_t idw = 0, nw = 1;
  for (const auto& c : checks) {
    idw = std::max(idw, c.id.size());
    nw = std::max(nw, std::to_string(c.instances).size());
  }
  std::string out = title + "\n";
  for (const auto& c : checks) {
    const std::string n = std::to_string(c.instances);
    out += c.passed ? "PASS  " : "FAIL  ";
    out += c.id + std::string(idw - c.id.size() + 2, ' ');
    out += std::string(nw - n.size(), ' ') + n + "  " + c.statement;
    if (c.witness) out += "  [witness: " + *c.witness + "]";
    out += '\n';
  }
  for (const auto& [id, msg] : r.warnings()) out += "NOTE  " + id + "  " + msg + "\n";
  out += "summary: " + std::to_string(checks.size()) + " laws, " + std::to_string(r.failed_count()) + " failed, " +
         std::to_string(r.instance_count()) + " instances\n";
  return out;
}

inline Json report_json(const LawReport& r, const std::string& title) {
  Json j = Json::object();
  j["suite"] = title;
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json e = Json::object();
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["passed"] = c.passed;
    e["instances"] = c.instances;
    if (c.witness) e["witness"] = *c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  Json warnings = Json::array();
  for (const auto& [id, msg] : r.warnings()) warnings.push_back(Json{{"id", id}, {"message", msg}});
  j["warnings"] = std::move(warnings);
  j["summary"] = Json{{"laws", r.checks().size()}, {"failed", r.failed_count()}, {"instances", r.instance_count()}};
  return j;
}

inline std::string render_json(const LawReport& r, const std::string& title) { return report_json(r, title).dump(2) + "\n"; }

// Errors as reported on stderr (text) or stdout (JSON).
inline std::string render_error(const Error& e, bool json) {
  if (!json) return std::string("error: ") + e.what() + "\n";
  Json j = Json::object();
  j["error"] = errc_name(e.code());
  j["message"] = e.what();
  if (!e.witness().empty()) j["witness"] = e.witness();
  return j.dump(2) + "\n";
}

}  // namespace structa::cli
