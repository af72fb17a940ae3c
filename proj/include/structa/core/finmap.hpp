#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/finset.hpp"

namespace structa {

// Total function between finite sets. Equality is extensional on the
// (dom, cod, assignment) triple.
class FinMap {
 public:
  FinMap() = default;

  FinMap(FinSet dom, FinSet cod, const std::vector<std::pair<Symbol, Symbol>>& assign)
      : dom_(std::move(dom)), cod_(std::move(cod)), values_(dom_.size(), kUnset) {
    for (const auto& [x, y] : assign) {
      auto xi = dom_.find(x);
      if (!xi) throw Error(Errc::CarrierMismatch, "assignment source outside domain", x.str());
      auto yi = cod_.find(y);
      if (!yi) throw Error(Errc::CarrierMismatch, "assignment value outside codomain", y.str());
      if (values_[*xi] != kUnset && values_[*xi] != *yi) {
        throw Error(Errc::InvalidStructure, "element assigned twice", x.str());
      }
      values_[*xi] = *yi;
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] == kUnset) throw Error(Errc::NotTotal, "no value assigned", dom_[i].str());
    }
  }

  // values[i] is the codomain index of dom[i].
  FinMap(FinSet dom, FinSet cod, std::vector<std::size_t> values)
      : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
    if (values_.size() != dom_.size()) throw Error(Errc::NotTotal, "value table size mismatch");
    for (std::size_t v : values_) {
      if (v >= cod_.size()) throw Error(Errc::CarrierMismatch, "value index outside codomain");
    }
  }

  static FinMap from_function(FinSet dom, FinSet cod, const std::function<Symbol(const Symbol&)>& fn) {
    std::vector<std::size_t> values;
    values.reserve(dom.size());
    for (const auto& x : dom) values.push_back(cod.index_of(fn(x)));
    return FinMap(std::move(dom), std::move(cod), std::move(values));
  }

  static FinMap identity(const FinSet& s) {
    std::vector<std::size_t> values(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) values[i] = i;
    return FinMap(s, s, std::move(values));
  }

  static FinMap inclusion(const FinSet& sub, const FinSet& super) {
    std::vector<std::size_t> values;
    values.reserve(sub.size());
    for (const auto& x : sub) values.push_back(super.index_of(x));
    return FinMap(sub, super, std::move(values));
  }

  static FinMap constant(const FinSet& dom, const FinSet& cod, const Symbol& value) {
    return FinMap(dom, cod, std::vector<std::size_t>(dom.size(), cod.index_of(value)));
  }

  // Every map dom -> cod, in lexicographic order of value tables.
  static std::vector<FinMap> all(const FinSet& dom, const FinSet& cod, std::size_t limit = 1'000'000) {
    std::vector<FinMap> out;
    if (cod.empty() && !dom.empty()) return out;
    double count = 1;
    for (std::size_t i = 0; i < dom.size(); ++i) count *= static_cast<double>(cod.size());
    if (count > static_cast<double>(limit)) throw Error(Errc::TooLarge, "too many maps to enumerate");
    std::vector<std::size_t> values(dom.size(), 0);
    while (true) {
      out.emplace_back(dom, cod, values);
      std::size_t i = dom.size();
      while (i > 0) {
        --i;
        if (++values[i] < cod.size()) break;
        values[i] = 0;
        if (i == 0) return out;
      }
      if (dom.empty()) return out;
    }
  }

  const FinSet& dom() const noexcept { return dom_; }
  const FinSet& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }

  std::size_t at(std::size_t i) const { return values_.at(i); }
  const Symbol& operator()(const Symbol& x) const { return cod_[values_[dom_.index_of(x)]]; }

  FinSet image(const FinSet& a) const {
    std::vector<Symbol> out;
    for (const auto& x : a) out.push_back((*this)(x));
    return FinSet::from_any(std::move(out));
  }

  FinSet image() const { return image(dom_); }

  FinSet preimage(const FinSet& b) const {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < dom_.size(); ++i) {
      if (b.contains(cod_[values_[i]])) out.push_back(dom_[i]);
    }
    return FinSet(std::move(out));
  }

  FinMap restrict_to(const FinSet& a) const {
    if (!a.subset_of(dom_)) throw Error(Errc::CarrierMismatch, "restriction outside domain");
    std::vector<std::size_t> values;
    for (const auto& x : a) values.push_back(values_[dom_.index_of(x)]);
    return FinMap(a, cod_, std::move(values));
  }

  // Same assignment with a wider or narrower codomain.
  FinMap with_cod(const FinSet& cod) const {
    std::vector<std::size_t> values;
    values.reserve(values_.size());
    for (std::size_t v : values_) values.push_back(cod.index_of(cod_[v]));
    return FinMap(dom_, cod, std::move(values));
  }

  bool operator==(const FinMap& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && values_ == other.values_;
  }
  auto operator<=>(const FinMap& other) const {
    if (auto c = dom_ <=> other.dom_; c != 0) return c;
    if (auto c = cod_ <=> other.cod_; c != 0) return c;
    return values_ <=> other.values_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  FinSet dom_;
  FinSet cod_;
  std::vector<std::size_t> values_;
};

inline std::string to_string(const FinMap& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    if (i) out += ",";
    out += f.dom()[i].str() + "->" + f.cod()[f.at(i)].str();
  }
  return out + "}";
}

}  // namespace structa
