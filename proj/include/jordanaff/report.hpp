#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jordanaff {

enum class Mode { kRational, kFloat };

inline const char* to_string(Mode m) { return m == Mode::kRational ? "rational" : "float"; }

struct Check {
  std::string name;
  bool pass{true};
  double max_residual{0.0};
  std::size_t samples{0};
  std::uint64_t seed{0};
  std::string detail;
};

struct VerificationReport {
  std::string target;
  Mode mode{Mode::kRational};
  std::vector<Check> checks;
  double elapsed_ms{0.0};
  std::vector<std::string> notes;

  [[nodiscard]] bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void append(const VerificationReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

}  // namespace jordanaff
