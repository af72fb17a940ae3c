#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace structa {

struct LawCheck {
  std::string id;
  std::string statement;
  bool passed = true;
  std::size_t instances = 0;
  std::optional<std::string> witness;  // present iff !passed

  bool operator==(const LawCheck&) const = default;
};

// Accumulates evaluated law instances. A law fails as soon as one instance
// fails; among all failing instances the lexicographically least witness is
// kept, so the report does not depend on scan order.
class LawReport {
 public:
  LawReport() = default;
  explicit LawReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const noexcept { return suite_; }

  void record(std::string_view id, std::string_view statement, bool ok,
              std::string_view witness = {}) {
    LawCheck& check = slot(id, statement);
    ++check.instances;
    if (ok) return;
    check.passed = false;
    if (!check.witness || std::string_view(*check.witness) > witness) {
      check.witness = std::string(witness);
    }
  }

  // Lazy-witness form: the witness is only rendered for failing instances.
  template <class WitnessFn>
  void record_lazy(std::string_view id, std::string_view statement, bool ok, WitnessFn&& witness) {
    if (ok) {
      record(id, statement, true);
    } else {
      record(id, statement, false, std::string(witness()));
    }
  }

  // Declares a law with zero instances (e.g. a vacuous scan) so that it still
  // shows up in the report.
  void declare(std::string_view id, std::string_view statement) { slot(id, statement); }

  // Advisory notes that do not affect pass/fail (kept sorted and unique).
  void warn(std::string_view id, std::string_view message) {
    std::pair<std::string, std::string> w{std::string(id), std::string(message)};
    auto it = std::lower_bound(warnings_.begin(), warnings_.end(), w);
    if (it == warnings_.end() || *it != w) warnings_.insert(it, std::move(w));
  }
  const std::vector<std::pair<std::string, std::string>>& warnings() const noexcept { return warnings_; }

  void merge(const LawReport& other, std::string_view prefix = {}) {
    for (const auto& [id, msg] : other.warnings_) {
      warn(prefix.empty() ? id : std::string(prefix) + "." + id, msg);
    }
    for (const auto& check : other.checks_) {
      std::string id = prefix.empty() ? check.id : std::string(prefix) + "." + check.id;
      LawCheck& mine = slot(id, check.statement);
      mine.instances += check.instances;
      if (!check.passed) {
        mine.passed = false;
        if (!mine.witness || *mine.witness > *check.witness) mine.witness = check.witness;
      }
    }
  }

  // Copy without one law (warnings kept).
  LawReport without(std::string_view id) const {
    LawReport out(suite_);
    out.warnings_ = warnings_;
    for (const auto& c : checks_) {
      if (c.id == id) continue;
      out.index_.emplace(c.id, out.checks_.size());
      out.checks_.push_back(c);
    }
    return out;
  }

  // Checks sorted by law id.
  std::vector<LawCheck> checks() const {
    std::vector<LawCheck> sorted = checks_;
    std::sort(sorted.begin(), sorted.end(),
              [](const LawCheck& a, const LawCheck& b) { return a.id < b.id; });
    return sorted;
  }

  const LawCheck* find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &checks_[it->second];
  }

  bool passed(std::string_view id) const {
    const LawCheck* check = find(id);
    return check != nullptr && check->passed;
  }

  bool all_passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const LawCheck& c) { return c.passed; });
  }

  std::size_t failed_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const LawCheck& c) { return !c.passed; }));
  }

  std::size_t instance_count() const {
    std::size_t total = 0;
    for (const auto& c : checks_) total += c.instances;
    return total;
  }

  bool empty() const noexcept { return checks_.empty(); }
  std::size_t size() const noexcept { return checks_.size(); }

 private:
  LawCheck& slot(std::string_view id, std::string_view statement) {
    auto [it, inserted] = index_.try_emplace(std::string(id), checks_.size());
    if (inserted) {
      checks_.push_back(LawCheck{std::string(id), std::string(statement), true, 0, std::nullopt});
    }
    return checks_[it->second];
  }

  std::string suite_;
  std::vector<LawCheck> checks_;
  std::vector<std::pair<std::string, std::string>> warnings_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace structa
