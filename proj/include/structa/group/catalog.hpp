#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/op_table.hpp"
#include "structa/group/fingroup.hpp"
#include "structa/group/hom.hpp"

namespace structa::group {

// Z_n on {0..n-1} under addition mod n. Names are decimal, so carrier order
// equals numeric order only for n <= 10.
inline FinGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(Errc::EmptyCarrier, "Z_0 has no elements");
  const FinSet c = FinSet::range(n);
  return check_group(OpTable::from_function(c, [n](const Symbol& a, const Symbol& b) {
    return Symbol(std::to_string((std::stoul(a.str()) + std::stoul(b.str())) % n));
  }));
}

// One-line notation of a permutation of {0..n-1}, n <= 10.
inline std::string perm_word(const std::vector<std::size_t>& p) {
  std::string s;
  for (std::size_t v : p) s += static_cast<char>('0' + v);
  return s;
}

// S_n on one-line words; (s*t)(i) = s(t(i)).
inline FinGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 6) throw Error(Errc::TooLarge, "symmetric groups are built for 1 <= n <= 6");
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Symbol> words;
  do {
    words.emplace_back(perm_word(p));
  } while (std::next_permutation(p.begin(), p.end()));
  const FinSet c(words);
  return check_group(OpTable::from_function(c, [n](const Symbol& s, const Symbol& t) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::size_t>(s.str()[static_cast<std::size_t>(t.str()[i] - '0')] - '0');
    return Symbol(perm_word(out));
  }));
}

// G × H with componentwise product, elements "(g,h)".
inline FinGroup direct_product(const FinGroup& g, const FinGroup& h) {
  std::vector<Symbol> names;
  auto pair_name = [&](std::size_t a, std::size_t b) { return Symbol("(" + g.name(a).str() + "," + h.name(b).str() + ")"); };
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b) names.push_back(pair_name(a, b));
  const FinSet c(names);
  std::vector<std::size_t> cells(c.size() * c.size());
  for (std::size_t a1 = 0; a1 < g.size(); ++a1)
    for (std::size_t b1 = 0; b1 < h.size(); ++b1)
      for (std::size_t a2 = 0; a2 < g.size(); ++a2)
        for (std::size_t b2 = 0; b2 < h.size(); ++b2) {
          cells[c.index_of(pair_name(a1, b1)) * c.size() + c.index_of(pair_name(a2, b2))] =
              c.index_of(pair_name(g.mul(a1, a2), h.mul(b1, b2)));
        }
  return check_group(OpTable(c, std::move(cells)));
}

inline FinGroup klein_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

// Every group table on {g0..g(n-1)} with unit g0, found by filling a reduced
// Latin square cell by cell and keeping the associative ones; one
// representative per isomorphism class.
inline std::vector<FinGroup> enumerate_groups(std::size_t n) {
  if (n == 0 || n > 6) throw Error(Errc::TooLarge, "table enumeration is limited to order <= 6");
  const FinSet c = FinSet::range(n, "g");
  std::vector<std::size_t> t(n * n, n);
  for (std::size_t i = 0; i < n; ++i) t[i] = t[i * n] = i;
  std::vector<std::vector<char>> row_used(n, std::vector<char>(n, 0)), col_used = row_used;
  for (std::size_t i = 0; i < n; ++i) {
    row_used[0][i] = col_used[i][i] = 1;  // row 0 holds every value; column i has value i at row 0
    row_used[i][i] = col_used[0][i] = 1;  // column 0 holds every value; row i has value i at column 0
  }
  std::vector<FinGroup> out;
  auto associative = [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d) {
          if (t[t[a * n + b] * n + d] != t[a * n + t[b * n + d]]) return false;
        }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == n * n) {
      if (!associative()) return;
      FinGroup g = check_group(OpTable(c, t));
      for (const auto& h : out) {
        if (find_group_iso(h, g)) return;
      }
      out.push_back(std::move(g));
      return;
    }
    const std::size_t i = cell / n, j = cell % n;
    if (i == 0 || j == 0) return self(self, cell + 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (row_used[i][v] || col_used[j][v]) continue;
      row_used[i][v] = col_used[j][v] = 1;
      t[cell] = v;
      self(self, cell + 1);
      row_used[i][v] = col_used[j][v] = 0;
    }
    t[cell] = n;
  };
  rec(rec, 0);
  return out;
}

// All groups of order <= max_order up to isomorphism, by increasing order.
inline std::vector<FinGroup> group_catalog(std::size_t max_order = 6) {
  std::vector<FinGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (auto& g : enumerate_groups(n)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace structa::group
