#pragma once

#include <optional>
#include <string>
#include <vector>

namespace k3v {

struct CheckItem {
  std::string name;
  bool passed = false;
  std::optional<std::string> witness;  // failing identity or offending value
  std::string detail;

  friend bool operator==(const CheckItem&, const CheckItem&) = default;
};

/// Ordered list of named sub-checks.
struct CheckReport {
  std::vector<CheckItem> items;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {},
           std::optional<std::string> witness = std::nullopt);
  void append(const CheckReport& other);
  const CheckItem* find(const std::string& name) const;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace k3v
