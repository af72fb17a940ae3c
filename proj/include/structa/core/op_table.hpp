#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/finset.hpp"

namespace structa {

// Total binary operation on a finite carrier, stored as an index table.
class OpTable {
 public:
  OpTable() = default;

  OpTable(FinSet carrier, const std::vector<std::array<Symbol, 3>>& triples)
      : carrier_(std::move(carrier)), cells_(carrier_.size() * carrier_.size(), kUnset) {
    const std::size_t n = carrier_.size();
    for (const auto& [a, b, c] : triples) {
      auto ai = carrier_.find(a);
      auto bi = carrier_.find(b);
      auto ci = carrier_.find(c);
      if (!ai || !bi || !ci) {
        throw Error(Errc::CarrierMismatch, "table entry uses an undeclared symbol",
                    a.str() + "*" + b.str() + "=" + c.str());
      }
      std::size_t& cell = cells_[*ai * n + *bi];
      if (cell != kUnset && cell != *ci) {
        throw Error(Errc::InvalidStructure, "table cell defined twice", a.str() + "*" + b.str());
      }
      cell = *ci;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (cells_[i * n + j] == kUnset) {
          throw Error(Errc::NotTotal, "missing table cell", carrier_[i].str() + "*" + carrier_[j].str());
        }
      }
    }
  }

  OpTable(FinSet carrier, std::vector<std::size_t> cells) : carrier_(std::move(carrier)), cells_(std::move(cells)) {
    if (cells_.size() != carrier_.size() * carrier_.size()) throw Error(Errc::NotTotal, "table size mismatch");
    for (std::size_t c : cells_) {
      if (c >= carrier_.size()) throw Error(Errc::CarrierMismatch, "table value outside carrier");
    }
  }

  static OpTable from_function(FinSet carrier, const std::function<Symbol(const Symbol&, const Symbol&)>& op) {
    const std::size_t n = carrier.size();
    std::vector<std::size_t> cells(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = carrier.index_of(op(carrier[i], carrier[j]));
    }
    return OpTable(std::move(carrier), std::move(cells));
  }

  const FinSet& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const std::vector<std::size_t>& cells() const noexcept { return cells_; }

  std::size_t at(std::size_t i, std::size_t j) const { return cells_[i * carrier_.size() + j]; }
  const Symbol& operator()(const Symbol& a, const Symbol& b) const {
    return carrier_[at(carrier_.index_of(a), carrier_.index_of(b))];
  }

  bool operator==(const OpTable&) const = default;

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  FinSet carrier_;
  std::vector<std::size_t> cells_;
};

}  // namespace structa
