#pragma once

#include <string>
#include <utility>
#include <vector>

#include "structa/category/fincat.hpp"
#include "structa/group/catalog.hpp"
#include "structa/order/poset.hpp"

// Small named structures shared by the suites and the shipped corpus.
namespace structa::cli::samples {

inline FinSet letters(std::size_t n) {
  std::vector<Symbol> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(std::string(1, static_cast<char>('a' + i)));
  return FinSet(v);
}

inline category::FinCat chain(std::size_t n) {
  const FinSet l = letters(n);
  return category::from_poset(order::Poset::chain({l.begin(), l.end()}));
}

inline category::FinCat diamond() {
  return category::from_poset(order::Poset::generated(FinSet{"bot", "l", "r", "top"},
                                                      {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}}));
}

inline category::FinCat cyclic(std::size_t n) { return category::from_group(group::cyclic_group(n).table()); }

// a ==f,g==> b --h--> c with h.f != h.g.
inline category::FinCat parallel3() {
  return category::FinCat(
      FinSet{"a", "b", "c"},
      {{"1a", "a", "a"}, {"1b", "b", "b"}, {"1c", "c", "c"}, {"f", "a", "b"}, {"g", "a", "b"}, {"h", "b", "c"},
       {"hf", "a", "c"}, {"hg", "a", "c"}},
      {{"a", "1a"}, {"b", "1b"}, {"c", "1c"}},
      {{"1a", "1a", "1a"}, {"1b", "1b", "1b"}, {"1c", "1c", "1c"}, {"f", "1a", "f"}, {"g", "1a", "g"}, {"1b", "f", "f"},
       {"1b", "g", "g"}, {"h", "1b", "h"}, {"1c", "h", "h"}, {"h", "f", "hf"}, {"h", "g", "hg"}, {"hf", "1a", "hf"},
       {"hg", "1a", "hg"}, {"1c", "hf", "hf"}, {"1c", "hg", "hg"}});
}

// a --u,v--> b with an idempotent e (e.e = e, e.u = v) and w : b -> c with w.e = w.
inline category::FinCat idempotent3() {
  return category::FinCat(
      FinSet{"a", "b", "c"},
      {{"1a", "a", "a"}, {"1b", "b", "b"}, {"1c", "c", "c"}, {"u", "a", "b"}, {"v", "a", "b"}, {"e", "b", "b"},
       {"w", "b", "c"}, {"wu", "a", "c"}},
      {{"a", "1a"}, {"b", "1b"}, {"c", "1c"}},
      {{"1a", "1a", "1a"}, {"1b", "1b", "1b"}, {"1c", "1c", "1c"}, {"u", "1a", "u"}, {"v", "1a", "v"}, {"1b", "u", "u"},
       {"1b", "v", "v"}, {"e", "1b", "e"}, {"1b", "e", "e"}, {"e", "e", "e"}, {"e", "u", "v"}, {"e", "v", "v"},
       {"w", "1b", "w"}, {"1c", "w", "w"}, {"w", "e", "w"}, {"w", "u", "wu"}, {"w", "v", "wu"}, {"wu", "1a", "wu"},
       {"1c", "wu", "wu"}});
}

// Seed categories for the constructor checks.
inline std::vector<std::pair<std::string, category::FinCat>> seed_categories() {
  std::vector<std::pair<std::string, category::FinCat>> out;
  for (std::size_t n = 1; n <= 4; ++n) out.emplace_back("chain" + std::to_string(n), chain(n));
  out.emplace_back("diamond", diamond());
  out.emplace_back("powerset1", category::from_poset(order::Poset::powerset(letters(1))));
  out.emplace_back("powerset2", category::from_poset(order::Poset::powerset(letters(2))));
  std::size_t k = 0;
  for (const auto& g : group::group_catalog(6)) {
    out.emplace_back("group" + std::to_string(g.size()) + "_" + std::to_string(k++), category::from_group(g.table()));
  }
  for (std::size_t n = 1; n <= 3; ++n) out.emplace_back("discrete" + std::to_string(n), category::discrete(letters(n)));
  out.emplace_back("parallel3", parallel3());
  out.emplace_back("idempotent3", idempotent3());
  return out;
}

// g.f redirected to another arrow with the same endpoints; every other law
// still holds, so only associativity fails.
inline category::FinCat plant(const category::FinCat& c, const Symbol& g, const Symbol& f, const Symbol& to) {
  std::vector<std::size_t> comp = c.comp_table();
  comp[c.arrow_index(g) * c.num_arrows() + c.arrow_index(f)] = c.arrow_index(to);
  return category::FinCat(c.objects(), c.arrows(), c.src_table(), c.tgt_table(), c.id_table(), std::move(comp));
}

inline std::vector<std::pair<std::string, category::FinCat>> negative_categories() {
  return {
      {"bad-idempotent-ev", plant(idempotent3(), "e", "v", "u")},
      {"bad-idempotent-ee", plant(idempotent3(), "e", "e", "1b")},
      {"bad-z3", plant(cyclic(3), "1", "1", "0")},
      {"bad-z4", plant(cyclic(4), "2", "2", "2")},
      {"bad-s3", plant(category::from_group(group::symmetric_group(3).table()), "120", "120", "012")},
  };
}

}  // namespace structa::cli::samples
