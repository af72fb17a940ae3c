#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "structa/core/error.hpp"

namespace structa {

// A nonempty whitespace-free token. Ordering is plain lexicographic byte
// order, which is the canonical order used for every scan and every
// tie-breaking choice in the library.
class Symbol {
 public:
  Symbol() = default;
  Symbol(std::string id) : id_(std::move(id)) { validate(); }  // NOLINT(implicit)
  Symbol(const char* id) : Symbol(std::string(id)) {}           // NOLINT(implicit)
  Symbol(std::string_view id) : Symbol(std::string(id)) {}      // NOLINT(implicit)

  const std::string& str() const noexcept { return id_; }
  bool empty() const noexcept { return id_.empty(); }

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;

  friend std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << s.id_; }

 private:
  void validate() const {
    if (id_.empty()) throw Error(Errc::InvalidSymbol, "symbol must be nonempty");
    for (unsigned char c : id_) {
      if (c <= ' ' || c == 0x7f) throw Error(Errc::InvalidSymbol, "symbol contains whitespace", id_);
    }
  }

  std::string id_;
};

using Mask = std::uint64_t;

// Finite set of symbols kept in canonical (sorted) order.
class FinSet {
 public:
  using value_type = Symbol;
  using const_iterator = std::vector<Symbol>::const_iterator;

  FinSet() = default;
  FinSet(std::initializer_list<Symbol> elements) : FinSet(std::vector<Symbol>(elements)) {}
  explicit FinSet(std::vector<Symbol> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    auto dup = std::adjacent_find(elements_.begin(), elements_.end());
    if (dup != elements_.end()) throw Error(Errc::DuplicateSymbol, "duplicate element", dup->str());
  }

  // Builds a set from a possibly repeating list, dropping duplicates.
  static FinSet from_any(std::vector<Symbol> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    FinSet out;
    out.elements_ = std::move(elements);
    return out;
  }

  // {prefix0, prefix1, ...} or {0..n-1} when prefix is empty.
  static FinSet range(std::size_t n, std::string_view prefix = {}) {
    std::vector<Symbol> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(std::string(prefix) + std::to_string(i));
    return FinSet(std::move(v));
  }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const_iterator begin() const noexcept { return elements_.begin(); }
  const_iterator end() const noexcept { return elements_.end(); }
  const Symbol& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Symbol>& elements() const noexcept { return elements_; }

  std::optional<std::size_t> find(const Symbol& s) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
    if (it == elements_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  std::size_t index_of(const Symbol& s) const {
    auto idx = find(s);
    if (!idx) throw Error(Errc::CarrierMismatch, "symbol not in carrier", s.str());
    return *idx;
  }

  bool contains(const Symbol& s) const { return find(s).has_value(); }

  bool subset_of(const FinSet& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
  }

  FinSet unite(const FinSet& other) const {
    FinSet out;
    std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                   other.elements_.end(), std::back_inserter(out.elements_));
    return out;
  }

  FinSet intersect(const FinSet& other) const {
    FinSet out;
    std::set_intersection(elements_.begin(), elements_.end(), other.elements_.begin(),
                          other.elements_.end(), std::back_inserter(out.elements_));
    return out;
  }

  FinSet minus(const FinSet& other) const {
    FinSet out;
    std::set_difference(elements_.begin(), elements_.end(), other.elements_.begin(),
                        other.elements_.end(), std::back_inserter(out.elements_));
    return out;
  }

  // Bit i of the mask is set iff element i of `carrier` is in this set.
  Mask mask_in(const FinSet& carrier) const {
    if (carrier.size() > 63) throw Error(Errc::TooLarge, "carrier too large for a subset mask");
    Mask m = 0;
    for (const auto& s : elements_) m |= Mask{1} << carrier.index_of(s);
    return m;
  }

  static FinSet from_mask(const FinSet& carrier, Mask m) {
    FinSet out;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (m & (Mask{1} << i)) out.elements_.push_back(carrier.elements_[i]);
    }
    return out;
  }

  // All subsets, ordered by mask value.
  std::vector<FinSet> subsets() const {
    if (size() > 20) throw Error(Errc::TooLarge, "power set too large");
    std::vector<FinSet> out;
    out.reserve(std::size_t{1} << size());
    for (Mask m = 0; m < (Mask{1} << size()); ++m) out.push_back(from_mask(*this, m));
    return out;
  }

  auto operator<=>(const FinSet&) const = default;
  bool operator==(const FinSet&) const = default;

 private:
  std::vector<Symbol> elements_;
};

inline std::string to_string(const FinSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i].str();
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const FinSet& s) { return os << to_string(s); }

inline constexpr std::size_t popcount(Mask m) noexcept {
  std::size_t n = 0;
  for (; m; m &= m - 1) ++n;
  return n;
}

inline constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

}  // namespace structa
