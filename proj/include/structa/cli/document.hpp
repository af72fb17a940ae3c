#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "structa/core/error.hpp"
#include "structa/core/finset.hpp"

namespace structa::cli {

using Json = nlohmann::ordered_json;

// Shape of one field of a document.
enum class Field {
  symbols,   // ["a", "b"]
  pairs,     // [["a", "b"], ...]
  triples,   // [["a", "b", "c"], ...]
  sets,      // [["a"], [], ...]
  set_pairs, // [[["a"], ["a", "b"]], ...]
  count,     // non-negative integer
  category,  // nested document of that kind
  functor,
  group,
};

struct FieldSpec {
  const char* key;
  Field type;
};

struct KindSpec {
  const char* kind;
  std::vector<FieldSpec> fields;
  const char* summary;
};

inline const std::vector<KindSpec>& schemas() {
  static const std::vector<KindSpec> s = {
      {"set", {{"elements", Field::symbols}}, "a finite set"},
      {"map", {{"domain", Field::symbols}, {"codomain", Field::symbols}, {"pairs", Field::pairs}},
       "a total function, one [x, f(x)] pair per domain element"},
      {"poset", {{"elements", Field::symbols}, {"leq", Field::pairs}}, "a relation given by all pairs [x, y] with x <= y"},
      {"semilattice", {{"elements", Field::symbols}, {"table", Field::triples}}, "a binary operation, [x, y, x*y] per cell"},
      {"category",
       {{"objects", Field::symbols},
        {"arrows", Field::triples},
        {"identities", Field::pairs},
        {"compose", Field::triples}},
       "arrows [name, source, target], identities [object, arrow], composites [g, f, g.f]"},
      {"functor",
       {{"source", Field::category}, {"target", Field::category}, {"objects", Field::pairs}, {"arrows", Field::pairs}},
       "a functor between two categories given by its object and arrow assignments"},
      {"nattrans", {{"from", Field::functor}, {"to", Field::functor}, {"components", Field::pairs}},
       "components [object, arrow] of a transformation between parallel functors"},
      {"group", {{"elements", Field::symbols}, {"table", Field::triples}}, "a Cayley table, [x, y, x*y] per cell"},
      {"hom", {{"source", Field::group}, {"target", Field::group}, {"pairs", Field::pairs}}, "a map between two groups"},
      {"action", {{"group", Field::group}, {"points", Field::symbols}, {"act", Field::triples}},
       "a group acting on points, [g, x, g.x] per cell"},
      {"family", {{"carrier", Field::symbols}, {"members", Field::sets}}, "a family of subsets"},
      {"filterbase", {{"carrier", Field::symbols}, {"members", Field::sets}}, "a filter base (or filter)"},
      {"closure", {{"carrier", Field::symbols}, {"table", Field::set_pairs}}, "a subset operator, [A, Cl A] per subset"},
      {"topology", {{"carrier", Field::symbols}, {"open", Field::sets}}, "a family of open sets"},
      {"base", {{"carrier", Field::symbols}, {"members", Field::sets}}, "a base generating a topology"},
      {"rational-window", {{"bound", Field::count}}, "fractions a/c with |a|, |c| <= bound, 1 <= bound <= 64"},
  };
  return s;
}

inline const KindSpec* find_kind(std::string_view kind) {
  for (const auto& k : schemas())
    if (kind == k.kind) return &k;
  return nullptr;
}

// A validated document; `json` holds the fields in schema order after "kind".
struct Doc {
  std::string kind;
  Json json;

  bool operator==(const Doc&) const = default;
};

namespace detail {

[[noreturn]] inline void semantic(const std::string& path, const std::string& msg, const std::string& witness = {}) {
  throw Error(Errc::SemanticError, path + ": " + msg, witness);
}

inline void check_symbol(const Json& v, const std::string& path) {
  if (!v.is_string()) semantic(path, "expected a string");
  try {
    Symbol s(v.get<std::string>());
  } catch (const Error& e) {
    semantic(path, e.what(), v.get<std::string>());
  }
}

inline void check_symbols(const Json& v, const std::string& path, std::size_t arity = 0) {
  if (!v.is_array()) semantic(path, "expected an array");
  if (arity && v.size() != arity) semantic(path, "expected " + std::to_string(arity) + " entries");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    check_symbol(v[i], path + "[" + std::to_string(i) + "]");
    if (!arity && !seen.insert(v[i].get<std::string>()).second) {
      semantic(path, "duplicate element", v[i].get<std::string>());
    }
  }
}

inline void check_rows(const Json& v, const std::string& path, std::size_t arity) {
  if (!v.is_array()) semantic(path, "expected an array");
  for (std::size_t i = 0; i < v.size(); ++i) check_symbols(v[i], path + "[" + std::to_string(i) + "]", arity);
}

inline void check_sets(const Json& v, const std::string& path) {
  if (!v.is_array()) semantic(path, "expected an array of sets");
  for (std::size_t i = 0; i < v.size(); ++i) check_symbols(v[i], path + "[" + std::to_string(i) + "]");
}

inline Json normalize(const Json& v, const std::string& path, const char* expect_kind = nullptr);

inline Json normalize_field(const Json& v, Field type, const std::string& path) {
  switch (type) {
    case Field::symbols: check_symbols(v, path); break;
    case Field::pairs: check_rows(v, path, 2); break;
    case Field::triples: check_rows(v, path, 3); break;
    case Field::sets: check_sets(v, path); break;
    case Field::set_pairs:
      if (!v.is_array()) semantic(path, "expected an array of [set, set] rows");
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != 2) semantic(p, "expected [set, set]");
        check_symbols(v[i][0], p + "[0]");
        check_symbols(v[i][1], p + "[1]");
      }
      break;
    case Field::count:
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        semantic(path, "expected a non-negative integer");
      }
      return Json(v.get<unsigned long long>());
    case Field::category: return normalize(v, path, "category");
    case Field::functor: return normalize(v, path, "functor");
    case Field::group: return normalize(v, path, "group");
  }
  return v;
}

inline Json normalize(const Json& v, const std::string& path, const char* expect_kind) {
  if (!v.is_object()) semantic(path, "expected a document object");
  if (!v.contains("kind")) semantic(path, "missing key \"kind\"");
  if (!v["kind"].is_string()) semantic(path + ".kind", "expected a string");
  const std::string kind = v["kind"].get<std::string>();
  const KindSpec* spec = find_kind(kind);
  if (!spec) semantic(path + ".kind", "unknown kind", kind);
  if (expect_kind && kind != expect_kind) semantic(path + ".kind", std::string("expected kind ") + expect_kind, kind);
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (it.key() == "kind") continue;
    const bool known = std::any_of(spec->fields.begin(), spec->fields.end(), [&](const FieldSpec& f) { return it.key() == f.key; });
    if (!known) semantic(path, "unknown key for kind " + kind, it.key());
  }
  Json out = Json::object();
  out["kind"] = kind;
  for (const auto& f : spec->fields) {
    if (!v.contains(f.key)) semantic(path, "missing key for kind " + kind, f.key);
    out[f.key] = normalize_field(v[f.key], f.type, path + "." + f.key);
  }
  return out;
}

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

// Parses and validates a document. Syntax errors carry "line:column" as
// witness; schema violations raise SemanticError naming the JSON path.
inline Doc parse_doc(std::string_view text) {
  Json raw;
  // Duplicate keys are rejected: nlohmann keeps the last one silently.
  std::vector<std::set<std::string>> keys;
  std::string duplicate;
  auto cb = [&](int, Json::parse_event_t ev, Json& parsed) {
    if (ev == Json::parse_event_t::object_start) keys.emplace_back();
    if (ev == Json::parse_event_t::object_end && !keys.empty()) keys.pop_back();
    if (ev == Json::parse_event_t::key && !keys.empty() && !keys.back().insert(parsed.get<std::string>()).second &&
        duplicate.empty()) {
      duplicate = parsed.get<std::string>();
    }
    return true;
  };
  try {
    raw = Json::parse(text.begin(), text.end(), cb);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_col(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw Error(Errc::SyntaxError, msg, std::to_string(line) + ":" + std::to_string(col));
  }
  if (!duplicate.empty()) detail::semantic("$", "duplicate key", duplicate);
  Json norm = detail::normalize(raw, "$");
  return Doc{norm["kind"].get<std::string>(), std::move(norm)};
}

namespace detail {

inline bool flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_array() && !e.is_object(); });
}

inline void render_value(std::string& out, const Json& v, std::size_t indent);

inline void render_inline(std::string& out, const Json& v) {
  if (!v.is_array()) {
    out += v.dump(-1, ' ', false);
    return;
  }
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    render_inline(out, v[i]);
  }
  out += ']';
}

inline void render_value(std::string& out, const Json& v, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (v.is_object()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      render_value(out, it.value(), indent + 2);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (flat(v) || v.empty()) {
    render_inline(out, v);
  } else {
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += pad;
      if (v[i].is_object()) {
        render_value(out, v[i], indent + 2);
      } else {
        render_inline(out, v[i]);
      }
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  }
}

}  // namespace detail

// Canonical text: keys in schema order, one row per line, flat arrays inline.
inline std::string render_doc(const Doc& d) {
  std::string out;
  detail::render_value(out, d.json, 0);
  out += '\n';
  return out;
}

// Human-readable schema listing for `structa formats`.
inline std::string formats_text() {
  auto name = [](Field f) -> const char* {
    switch (f) {
      case Field::symbols: return "[symbol, ...]";
      case Field::pairs: return "[[symbol, symbol], ...]";
      case Field::triples: return "[[symbol, symbol, symbol], ...]";
      case Field::sets: return "[[symbol, ...], ...]";
      case Field::set_pairs: return "[[[symbol, ...], [symbol, ...]], ...]";
      case Field::count: return "integer >= 0";
      case Field::category: return "category document";
      case Field::functor: return "functor document";
      case Field::group: return "group document";
    }
    return "";
  };
  std::string out = "Documents are JSON objects with a \"kind\" key and exactly the keys listed.\n"
                    "Symbols are nonempty strings without whitespace.\n\n";
  for (const auto& k : schemas()) {
    out += k.kind;
    out += " -- ";
    out += k.summary;
    out += '\n';
    for (const auto& f : k.fields) {
      out += "  ";
      out += f.key;
      out += ": ";
      out += name(f.type);
      out += '\n';
    }
  }
  return out;
}

}  // namespace structa::cli
