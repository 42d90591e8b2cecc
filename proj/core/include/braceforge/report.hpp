#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braceforge {

struct CheckEntry {
  std::string name;
  bool pass = true;
  std::string witness;  // human-readable counterexample, empty when pass
};

// Outcome of a verification pass: one entry per checked law plus sampling
// metadata.  Failures are entries, not exceptions.
struct CheckReport {
  std::vector<CheckEntry> entries;
  std::optional<std::uint64_t> seed;     // set in sampled mode
  std::optional<std::uint64_t> samples;  // set in sampled mode
  std::uint64_t items_checked = 0;
  bool partial = false;  // true when a time budget cut the run short

  void add_pass(std::string name) {
    entries.push_back({std::move(name), true, {}});
  }
  void add_fail(std::string name, std::string witness) {
    entries.push_back({std::move(name), false, std::move(witness)});
  }
  bool ok() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return !partial;
  }
  const CheckEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }

  std::string to_json_string(int indent = -1) const;
};

}  // namespace braceforge
