#include "k3v/check.hpp"

#include <algorithm>

namespace k3v {

bool CheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

void CheckReport::add(std::string name, bool ok, std::string detail,
                      std::optional<std::string> witness) {
  items.push_back({std::move(name), ok, std::move(witness), std::move(detail)});
}

void CheckReport::append(const CheckReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

const CheckItem* CheckReport::find(const std::string& name) const {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

}  // namespace k3v
