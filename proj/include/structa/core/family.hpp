#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/finset.hpp"

namespace structa {

// A set of subsets of a fixed carrier, stored sorted and duplicate-free.
class Family {
 public:
  Family() = default;
  Family(FinSet carrier, std::vector<FinSet> members) : carrier_(std::move(carrier)) {
    for (const auto& m : members) {
      if (!m.subset_of(carrier_)) throw Error(Errc::CarrierMismatch, "member not a subset of carrier", to_string(m));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
  }

  static Family from_masks(const FinSet& carrier, const std::vector<Mask>& masks) {
    std::vector<FinSet> members;
    members.reserve(masks.size());
    for (Mask m : masks) members.push_back(FinSet::from_mask(carrier, m));
    return Family(carrier, std::move(members));
  }

  const FinSet& carrier() const noexcept { return carrier_; }
  const std::vector<FinSet>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(const FinSet& s) const { return std::binary_search(members_.begin(), members_.end(), s); }

  std::vector<Mask> masks() const {
    std::vector<Mask> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.mask_in(carrier_));
    std::sort(out.begin(), out.end());
    return out;
  }

  FinSet union_all() const {
    FinSet out;
    for (const auto& m : members_) out = out.unite(m);
    return out;
  }

  // Intersection over the family; the empty family intersects to the carrier.
  FinSet intersection_all() const {
    FinSet out = carrier_;
    for (const auto& m : members_) out = out.intersect(m);
    return out;
  }

  bool operator==(const Family&) const = default;
  auto operator<=>(const Family&) const = default;

 private:
  FinSet carrier_;
  std::vector<FinSet> members_;
};

inline std::string to_string(const Family& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += to_string(f.members()[i]);
  }
  return out + "}";
}

// Every family of subsets of `carrier`; 2^(2^n) of them, so n <= 4.
inline std::vector<Family> all_families(const FinSet& carrier) {
  if (carrier.size() > 4) throw Error(Errc::TooLarge, "family enumeration limited to 4-element carriers");
  const std::size_t subsets = std::size_t{1} << carrier.size();
  std::vector<Family> out;
  out.reserve(std::size_t{1} << subsets);
  for (Mask fam = 0; fam < (Mask{1} << subsets); ++fam) {
    std::vector<Mask> masks;
    for (std::size_t s = 0; s < subsets; ++s) {
      if (fam & (Mask{1} << s)) masks.push_back(s);
    }
    out.push_back(Family::from_masks(carrier, masks));
  }
  return out;
}

}  // namespace structa
