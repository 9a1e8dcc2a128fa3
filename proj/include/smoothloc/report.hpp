#pragma once

#include <string>
#include <vector>

namespace smoothloc {

/// Result of one named verification. `witness` is empty on success and
/// otherwise names the smallest offending instance found.
struct CheckOutcome {
  std::string check;
  bool passed = true;
  std::string witness;
  /// Free-form annotation, e.g. "finite-trivial" or a search summary.
  std::string note;
};

using CheckList = std::vector<CheckOutcome>;

inline bool all_passed(const CheckList& list) {
  for (const auto& c : list)
    if (!c.passed) return false;
  return true;
}

/// Accumulates the first failure of a check across many instances.
class CheckAccumulator {
 public:
  explicit CheckAccumulator(std::string name, std::string note = {}) : outcome_{std::move(name), true, {}, std::move(note)} {}

  template <class WitnessFn>
  bool expect(bool ok, WitnessFn&& witness) {
    if (!ok && outcome_.passed) {
      outcome_.passed = false;
      outcome_.witness = witness();
    }
    return ok;
  }
  bool failed() const { return !outcome_.passed; }
  void set_note(std::string note) { outcome_.note = std::move(note); }
  CheckOutcome result() const { return outcome_; }

 private:
  CheckOutcome outcome_;
};

}  // namespace smoothloc
